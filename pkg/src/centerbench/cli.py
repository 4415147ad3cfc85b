"""Command-line front end.

Every subcommand prints one report, as JSON (default) or text.  Exit status
is 0 on success, 1 on usage or input errors, and 2 when a property that the
theory guarantees fails on a concrete instance.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import braid as B
from . import fincat
from .colimits import colimit, inherited_colimit, lift_diagram
from .comonoids import (
    comonoid_category,
    cofree_comonoid,
    decidable_carriers,
    enumerate_comonoids,
    generating_sets,
    is_generating_set,
    lift_generating_set,
    quotients_of,
)
from .constructions import (
    CENTER,
    CENTRALIZER_MORPHISM,
    CENTRALIZER_OBJECT,
    WEAK_CENTER,
    construct,
)
from .errors import CategoryError, CocontinuityRefusal, FormatError, TheoremCheckViolation
from .fincat import (
    Limits,
    current_limits,
    diagram_from_dict,
    load_category,
    save_category,
    set_limits,
    validate_category,
)

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2
DEFAULT_SEED = 0


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


class Result:
    """A report plus the text rendering and exit status for one command."""

    def __init__(self, command: str, report: dict, text: list[str], status: int = EXIT_OK):
        self.command = command
        self.report = {"command": command, **report}
        self.text = text
        self.status = status


# -- helpers ------------------------------------------------------------------


def _load(path):
    return load_category(path)


def _objects_report(z) -> list[dict]:
    return [{"name": n, **z.data[n].to_dict()} for n in z.category.objects]


def _construction_result(command, z, param=None, emit=None) -> Result:
    rep = validate_category(z.category)
    if emit:
        save_category(z.category, emit)
    report = {
        "construction": z.kind,
        "param": param,
        "count": len(z.category.objects),
        "objects": _objects_report(z),
        "morphism_count": len(z.category.morphisms),
        "braided": z.category.is_braided,
        "valid": rep.ok,
        "violations": [v.to_dict() for v in rep.violations],
    }
    text = [f"{z.label}: {report['count']} objects, {report['morphism_count']} morphisms"]
    text += [f"  {n}" for n in z.category.objects]
    text.append("  axioms: ok" if rep.ok else f"  axioms: {len(rep.violations)} violations")
    return Result(command, report, text, EXIT_OK if rep.ok else EXIT_VIOLATION)


def _read_json(path):
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON ({exc})") from None


# -- commands -------------------------------------------------------------------


def cmd_validate(args) -> Result:
    cat = _load(args.file)
    rep = validate_category(cat)
    report = {"objects": len(cat.objects), "morphisms": len(cat.morphisms),
              "monoidal": cat.is_monoidal, "braided": cat.is_braided, "partial": cat.partial,
              **rep.to_dict()}
    text = [f"{len(cat.objects)} objects, {len(cat.morphisms)} morphisms: "
            + ("valid" if rep.ok else f"{len(rep.violations)} violations")]
    text += [f"  {v.axiom} at {', '.join(v.witness)} {v.detail}".rstrip() for v in rep.violations]
    return Result("validate", report, text, EXIT_OK if rep.ok else EXIT_ERROR)


def cmd_center(args) -> Result:
    return _construction_result("center", construct(_load(args.file), CENTER), emit=args.emit)


def cmd_weak_center(args) -> Result:
    return _construction_result("weak-center", construct(_load(args.file), WEAK_CENTER),
                                emit=args.emit)


def cmd_centralizer(args) -> Result:
    cat = _load(args.file)
    if args.object is not None:
        z = construct(cat, CENTRALIZER_OBJECT, args.object)
        return _construction_result("centralizer", z, args.object, args.emit)
    z = construct(cat, CENTRALIZER_MORPHISM, args.morphism)
    return _construction_result("centralizer", z, args.morphism, args.emit)


def cmd_colimit(args) -> Result:
    cat = _load(args.file)
    data = _read_json(args.diagram)
    if args.inside is None:
        dg = diagram_from_dict(data, cat)
        lim = colimit(cat, dg)
        report = {"in": "base", "result": lim.to_dict()}
        if lim:
            text = [f"colimit apex {lim.apex}"] + [f"  {d} -> {f}" for d, f in lim.cocone.legs]
        else:
            text = [f"no colimit: {lim.reason}"]
        return Result("colimit", report, text)
    kind = {"center": CENTER, "weak": WEAK_CENTER, "zx": CENTRALIZER_OBJECT,
            "zh": CENTRALIZER_MORPHISM}[args.inside]
    if kind in (CENTRALIZER_OBJECT, CENTRALIZER_MORPHISM) and args.param is None:
        raise UsageError(f"--in {args.inside} needs --param")
    z = construct(cat, kind, args.param)
    dg = lift_diagram(z, data)
    try:
        res = inherited_colimit(z, dg)
    except CocontinuityRefusal as exc:
        report = {"in": args.inside, "param": args.param, "refused": True,
                  "functor": exc.functor,
                  "witness": None if exc.witness is None else exc.witness.to_dict()}
        return Result("colimit", report, [f"refused: {exc}"])
    if not res:
        report = {"in": args.inside, "param": args.param, "refused": False, "result": res.to_dict()}
        return Result("colimit", report, [f"no base colimit: {res.reason}"])
    report = {"in": args.inside, "param": args.param, "refused": False, "result": res.to_dict()}
    text = [f"colimit in {z.label}: {res.apex}",
            f"  base apex {res.base.apex}"]
    text += [f"  [{'ok' if p else 'FAIL'}] {name}" for name, p in res.checks]
    return Result("colimit", report, text, EXIT_OK if res.ok else EXIT_VIOLATION)


def cmd_comonoids(args) -> Result:
    cat = _load(args.file)
    carriers = decidable_carriers(cat)
    skipped = [x for x in cat.objects if x not in carriers]
    if cat.partial:
        found = enumerate_comonoids(cat, carriers)
        morphism_count = None
    else:
        comon = comonoid_category(cat)
        found = [comon.data[n] for n in comon.category.objects]
        found.sort(key=lambda c: c.key)
        morphism_count = len(comon.category.morphisms)
    report = {"count": len(found), "comonoids": [c.to_dict() for c in found],
              "morphism_count": morphism_count, "skipped_carriers": skipped}
    text = [f"{len(found)} comonoids"] + [f"  {c.name}" for c in found]
    if skipped:
        text.append(f"  undecidable in truncated table: {', '.join(skipped)}")
    return Result("comonoids", report, text)


def cmd_cofree(args) -> Result:
    cat = _load(args.file)
    res = cofree_comonoid(cat, args.over)
    prov = cat.provenance or {}
    report = {"over": args.over, "result": res.to_dict()}
    status = EXIT_OK
    if res:
        text = [f"cofree comonoid over {args.over}: {res.cofree.name}",
                f"  couniversal arrow {res.arrow}"]
        if not res.unique_up_to_iso:
            status = EXIT_VIOLATION
            text.append("  terminal objects are not uniquely isomorphic")
    else:
        text = [f"no cofree comonoid over {args.over}: {res.reason}"]
        if prov.get("source") == "braid category":
            # cofree objects are claimed to exist here; an empty search contradicts that
            status = EXIT_VIOLATION
            report["discrepancy"] = (
                "cofree comonoids over every object are claimed for this category, but the "
                "comma category over this object is empty because the only comonoid lives "
                "on 0 and there are no arrows between distinct objects")
            text.append("  discrepancy: existence is claimed for this category")
    return Result("cofree", report, text, status)


def cmd_generators(args) -> Result:
    cat = _load(args.file)
    if not args.lift:
        sep = is_generating_set(cat, args.check)
        report = {"members": sorted(set(args.check)), **sep.to_dict()}
        text = [f"{{{', '.join(sorted(set(args.check)))}}} "
                + ("generates" if sep.ok else f"does not generate: {sep.witness[0]} vs {sep.witness[1]}")]
        return Result("generators", report, text)
    if args.check:
        members = sorted(set(args.check))
        sep = is_generating_set(cat, members)
        if not sep.ok:
            raise FormatError(f"{members} does not generate the base category")
    else:
        members = list(generating_sets(cat)[0])
    targets = [(CENTER, None), (WEAK_CENTER, None)]
    targets += [(CENTRALIZER_OBJECT, x) for x in cat.objects]
    targets += [(CENTRALIZER_MORPHISM, h) for h in cat.morphisms]
    lifts = []
    for kind, p in targets:
        z = construct(cat, kind, p)
        try:
            lifts.append(lift_generating_set(cat, members, z).to_dict())
        except TheoremCheckViolation as exc:
            lifts.append({"embedding": None, "target": z.label, "members": members,
                          "lifted": None, "generates": False, "witness": None, "error": str(exc)})
    failures = [r for r in lifts if not r["generates"]]
    report = {"members": members, "lifts": lifts, "failures": len(failures)}
    text = [f"lifting {{{', '.join(members)}}} into {len(lifts)} constructions: "
            f"{len(failures)} failures"]
    for r in failures:
        w = r.get("witness")
        text.append(f"  {r['target']}: " + (f"unseparated pair {w[0]} vs {w[1]}" if w else r.get("error", "")))
    return Result("generators", report, text, EXIT_VIOLATION if failures else EXIT_OK)


def cmd_quotients(args) -> Result:
    cat = _load(args.file)
    classes = quotients_of(cat, args.of)
    report = {"of": args.of, "count": len(classes), "classes": [c.to_dict() for c in classes]}
    text = [f"{len(classes)} quotients of {args.of}"]
    text += [f"  {c.representative} ~ {', '.join(c.members)}" for c in classes]
    return Result("quotients", report, text)


def cmd_braid(args) -> Result:
    action = args.action
    if action == "nf":
        w = B.BraidWord.parse(args.word, args.strands)
        nf = B.normal_form(w)
        report = {"word": str(w), "strands": w.strands, "normal_form": nf.to_dict(),
                  "permutation": [p + 1 for p in B.permutation_of(w)]}
        return Result("braid nf", report, [str(nf)])
    if action == "equal":
        a = B.BraidWord.parse(args.left, args.strands)
        b = B.BraidWord.parse(args.right, args.strands)
        eq = B.braids_equal(a, b)
        report = {"left": str(a), "right": str(b), "strands": args.strands, "equal": eq,
                  "left_normal_form": str(B.normal_form(a)),
                  "right_normal_form": str(B.normal_form(b))}
        return Result("braid equal", report, ["true" if eq else "false"])
    if action == "braiding":
        w = B.braiding_word(args.m, args.n)
        agree = B.braiding_orders_agree(args.m, args.n)
        report = {"m": args.m, "n": args.n, "word": str(w), "strands": w.strands,
                  "permutation": [p + 1 for p in B.permutation_of(w)],
                  "normal_form": str(B.normal_form(w)), "expansion_orders_agree": agree}
        return Result("braid braiding", report, [str(w) or "(empty)"],
                      EXIT_OK if agree else EXIT_VIOLATION)
    if action == "theorems":
        checks = B.braid_theorem_checks(args.seed)
        ok = all(c.passed for c in checks)
        report = {"seed": args.seed, "checks": [c.to_dict() for c in checks], "all_passed": ok}
        text = [f"[{'pass' if c.passed else 'FAIL'}] {c.name}" for c in checks]
        return Result("braid theorems", report, text, EXIT_OK if ok else EXIT_VIOLATION)
    if action == "export":
        cat = B.braid_as_finmoncat(args.max_n, args.max_letters)
        if args.output:
            save_category(cat, args.output)
        report = {"objects": len(cat.objects), "morphisms": len(cat.morphisms),
                  "partial": True, "missing_entries": cat.provenance["missing_entries"],
                  "output": args.output}
        if not args.output:
            report["category"] = cat.to_dict()
        text = [f"braid category on 0..{args.max_n} strands: {len(cat.morphisms)} morphisms, "
                f"{cat.provenance['missing_entries']} entries outside the truncation"]
        return Result("braid export", report, text)
    raise UsageError(f"unknown braid action {action!r}")


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--max-objects", type=int, help="guardrail on category size")
    common.add_argument("--max-morphisms", type=int, help="guardrail on category size")

    p = _Parser(prog="centerbench", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", parents=[common], help="check category axioms")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    for name, func in (("center", cmd_center), ("weak-center", cmd_weak_center)):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("file")
        s.add_argument("--emit", metavar="FILE", help="write the constructed category")
        s.set_defaults(func=func)

    s = sub.add_parser("centralizer", parents=[common])
    s.add_argument("file")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--object")
    g.add_argument("--morphism")
    s.add_argument("--emit", metavar="FILE")
    s.set_defaults(func=cmd_centralizer)

    s = sub.add_parser("colimit", parents=[common])
    s.add_argument("file")
    s.add_argument("--diagram", required=True)
    s.add_argument("--in", dest="inside", choices=("center", "zx", "zh", "weak"))
    s.add_argument("--param")
    s.set_defaults(func=cmd_colimit)

    s = sub.add_parser("comonoids", parents=[common])
    s.add_argument("file")
    s.set_defaults(func=cmd_comonoids)

    s = sub.add_parser("cofree", parents=[common])
    s.add_argument("file")
    s.add_argument("--over", required=True)
    s.set_defaults(func=cmd_cofree)

    s = sub.add_parser("generators", parents=[common])
    s.add_argument("file")
    s.add_argument("--check", nargs="*", default=[], metavar="G")
    s.add_argument("--lift", action="store_true")
    s.set_defaults(func=cmd_generators)

    s = sub.add_parser("quotients", parents=[common])
    s.add_argument("file")
    s.add_argument("--of", required=True)
    s.set_defaults(func=cmd_quotients)

    s = sub.add_parser("braid", parents=[common])
    bsub = s.add_subparsers(dest="action", required=True, parser_class=_Parser)
    b = bsub.add_parser("nf", parents=[common])
    b.add_argument("word")
    b.add_argument("--strands", type=int, required=True)
    b = bsub.add_parser("equal", parents=[common])
    b.add_argument("left")
    b.add_argument("right")
    b.add_argument("--strands", type=int, required=True)
    b = bsub.add_parser("braiding", parents=[common])
    b.add_argument("m", type=int)
    b.add_argument("n", type=int)
    bsub.add_parser("theorems", parents=[common])
    b = bsub.add_parser("export", parents=[common])
    b.add_argument("--max-n", type=int, default=6)
    b.add_argument("--max-letters", type=int, default=1)
    b.add_argument("-o", "--output")
    s.set_defaults(func=cmd_braid)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    fmt = "json"
    saved = fincat._limits_override
    previous = current_limits()
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        if args.max_objects is not None or args.max_morphisms is not None:
            set_limits(Limits(
                max_objects=args.max_objects or previous.max_objects,
                max_morphisms=args.max_morphisms or previous.max_morphisms,
                max_shape_objects=previous.max_shape_objects,
            ))
        if args.command == "braid" and args.action in ("nf", "equal") and args.strands < 0:
            raise UsageError("--strands must be non-negative")
        result = args.func(args)
    except TheoremCheckViolation as exc:
        if fmt == "json":
            print(dumps({"error": str(exc), "type": "TheoremCheckViolation"}), file=out)
        print(f"centerbench: theorem check failed: {exc}", file=err)
        return EXIT_VIOLATION
    except (UsageError, CategoryError, OSError) as exc:
        kind = "usage" if isinstance(exc, UsageError) else type(exc).__name__
        if fmt == "json":
            print(dumps({"error": str(exc), "type": kind}), file=out)
        print(f"centerbench: error: {exc}", file=err)
        return EXIT_ERROR
    finally:
        set_limits(saved)
    if fmt == "json":
        print(dumps(result.report), file=out)
    else:
        print("\n".join(result.text), file=out)
    return result.status


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
