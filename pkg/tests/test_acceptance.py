"""Acceptance gate: one test per criterion, each printing a single result line.

Frozen expectations come from the independent oracles defined here (brute
force over raw group multiplication, lcm on divisors, direct enumeration),
never from the code under test.
"""

import itertools
import json
import math
import random
import time

import pytest

from centerbench import catalog
from centerbench.braid import (
    BraidWord, braids_equal, evaluate_ribbon, framed_equal, normal_form, permutation_of,
    random_relation_rewrite, random_word, ribbon_relations,
)
from centerbench.colimits import (
    colimit, discrete_pairs, inherited_colimit, is_cocontinuous, lift_diagram,
)
from centerbench.comonoids import (
    cofree_comonoid, epi_transfer_check, epi_transfer_instances, generating_sets,
    is_generating_set, lift_generating_set,
)
from centerbench.constructions import center, construct
from centerbench.errors import CocontinuityRefusal
from centerbench.fincat import TensorFunctor, discrete_diagram, span_diagram, validate_category

from conftest import cli

# braided test categories: the symmetric lattices, the discrete abelian
# groups and the two-parallel-arrow example
BRAIDED = ["braided-parallel", "d6", "d12", "d30", "m3", "trivial", "z2", "z4"]
# extra catalog entries on which the lifted generating set fails (see test below)
LIFT_COUNTEREXAMPLES = ["bz2", "d6-x-bz2", "z2-endo"]


@pytest.fixture
def report(capsys):
    def emit(n, passed, detail):
        with capsys.disabled():
            print(f"\nCRITERION {n:>2}: {'PASS' if passed else 'FAIL'} | {detail}")
    return emit


def all_constructions(c):
    yield construct(c, "center")
    yield construct(c, "weak")
    for x in c.objects:
        yield construct(c, "zx", x)
    for h in c.morphisms:
        yield construct(c, "zh", h)


# -- 1 ------------------------------------------------------------------------


def _closure(gens, mul, e):
    seen, todo = {e}, [e]
    while todo:
        a = todo.pop()
        for g in gens:
            b = mul(a, g)
            if b not in seen:
                seen.add(b)
                todo.append(b)
    return seen


def _perm_mul(p, q):
    return tuple(p[i] for i in q)


def _central_count(elements, mul):
    return sum(all(mul(g, h) == mul(h, g) for h in elements) for g in elements)


GROUP_ORACLES = {
    "z2": lambda: _central_count(range(2), lambda a, b: (a + b) % 2),
    "z4": lambda: _central_count(range(4), lambda a, b: (a + b) % 4),
    "s3-discrete": lambda: _central_count(list(itertools.permutations(range(3))), _perm_mul),
    # symmetries of a square acting on its vertices
    "d4-discrete": lambda: _central_count(
        sorted(_closure([(1, 2, 3, 0), (0, 3, 2, 1)], _perm_mul, (0, 1, 2, 3))), _perm_mul),
}
FROZEN_CENTERS = {"z2": 2, "z4": 4, "s3-discrete": 1, "d4-discrete": 2}


def test_criterion_01_center_oracle(report):
    lines, ok = [], True
    for name, expected in FROZEN_CENTERS.items():
        assert GROUP_ORACLES[name]() == expected  # oracle agrees with frozen value
        t = time.perf_counter()
        got = len(center(catalog.get(name)).category.objects)
        dt = time.perf_counter() - t
        ok &= got == expected and dt < 5.0
        lines.append(f"{name}={got}/{expected} ({dt:.2f}s)")
    report(1, ok, "|Z(C)| vs |Z(G)|: " + ", ".join(lines) + "; limit 5s each")
    assert ok


# -- 2 ------------------------------------------------------------------------


def test_criterion_02_constructed_categories_valid(report):
    t = time.perf_counter()
    built = violations = braided_centers = 0
    for name in sorted(catalog.CATALOG):
        c = catalog.get(name)
        if not c.is_monoidal:
            continue
        for z in all_constructions(c):
            rep = validate_category(z.category)
            built += 1
            violations += len(rep.violations) + rep.skipped
            if z.kind == "center":
                assert z.category.is_braided
                braided_centers += 1
    dt = time.perf_counter() - t
    ok = violations == 0 and dt < 30.0
    report(2, ok, f"{built} constructions ({braided_centers} braided centers incl. naturality "
                  f"and both hexagons), {violations} violations, {dt:.2f}s; limit 30s")
    assert ok


# -- 3 ------------------------------------------------------------------------


def test_criterion_03_colimit_inheritance_d30(report):
    t = time.perf_counter()
    c = catalog.get("d30")
    arrows = [f for f in c.morphisms if not c.is_identity(f)]
    diagrams = discrete_pairs(c) + [span_diagram(c, f, g) for f in arrows
                                    for g in c.out_of(c.dom(f)) if f < g and not c.is_identity(g)]
    for x in c.objects:
        for side in ("left", "right"):
            assert is_cocontinuous(c, TensorFunctor(c, side, x), diagrams)
    runs = failures = 0
    for z in all_constructions(c):
        for dg in diagrams:
            base = colimit(c, dg)
            assert base.cocone.apex == str(math.lcm(*(int(dg.obj(o)) for o in dg.shape.objects)))
            res = inherited_colimit(z, lift_diagram(z, dg))
            runs += 1
            same = (z.carrier(res.apex) == base.cocone.apex
                    and {d: z.underlying(f) for d, f in res.colimit.cocone.legs}
                    == dict(base.cocone.legs))
            failures += not (res.ok and same)
    dt = time.perf_counter() - t
    ok = failures == 0 and dt < 60.0
    report(3, ok, f"D30: {len(diagrams)} diagrams x 37 constructions = {runs} inherited colimits, "
                  f"{failures} failures, {dt:.2f}s; limit 60s")
    assert ok


# -- 4 ------------------------------------------------------------------------


def test_criterion_04_m3_not_cocontinuous(report):
    c = catalog.get("m3")
    rep = is_cocontinuous(c, TensorFunctor(c, "left", "a"), discrete_pairs(c))
    witness = sorted(rep.witness.obj(d) for d in rep.witness.shape.objects) if rep.witness else None
    refused = []
    for kind, param in [("center", None), ("weak", None), ("zx", "a"), ("zh", "id_a")]:
        z = construct(c, kind, param)
        try:
            inherited_colimit(z, lift_diagram(z, discrete_diagram(c, ["b", "c"])))
        except CocontinuityRefusal:
            refused.append(z.label)
    ok = (not rep.ok) and witness == ["b", "c"] and len(refused) == 4
    report(4, ok, f"is_cocontinuous(P_a)={rep.ok}, witness={witness}, refused in {refused}")
    assert ok


# -- 5 ------------------------------------------------------------------------


def test_criterion_05_epi_transfer(report):
    t = time.perf_counter()
    pool = []
    for name in sorted(catalog.CATALOG):
        c = catalog.get(name)
        if not c.is_monoidal:
            continue
        for z in all_constructions(c):
            pool.extend((z, p, q) for p, q in epi_transfer_instances(z))
    sample = random.Random(0).sample(pool, 200)
    results = [epi_transfer_check(z, p, q) for z, p, q in sample]
    assert all(r.hypothesis_met for r in results)
    failures = sum(not r.ok for r in results)
    dt = time.perf_counter() - t
    ok = failures == 0 and dt < 60.0
    report(5, ok, f"200 of {len(pool)} seeded instances (seed 0), hypotheses met, "
                  f"{failures} failures, {dt:.2f}s; limit 60s")
    assert ok


# -- 6 ------------------------------------------------------------------------


def test_criterion_06_generating_set_lifting(report):
    lifts = failures = 0
    for name in BRAIDED:
        c = catalog.get(name)
        sets = generating_sets(c)
        assert all(is_generating_set(c, g).ok for g in sets)
        for z in all_constructions(c):
            for g in sets:
                lifts += 1
                failures += not lift_generating_set(c, g, z).ok
    ok = failures == 0
    report(6, ok, f"{len(BRAIDED)} braided categories, {lifts} lifts, {failures} failures")
    assert ok


def test_lifting_counterexamples_are_detected(tmp_path):
    # Z_X and Z_h over these admit objects like (X, t) outside the image of
    # the braided embedding; the lifted set then misses a parallel pair
    for name in LIFT_COUNTEREXAMPLES:
        c = catalog.get(name)
        failed_kinds = set()
        for z in all_constructions(c):
            for g in generating_sets(c):
                if not lift_generating_set(c, g, z).ok:
                    failed_kinds.add(z.kind)
        assert failed_kinds == {"centralizer_object", "centralizer_morphism"}
        path = tmp_path / f"{name}.json"
        path.write_text(c.dumps())
        assert cli("generators", path, "--lift")[0] == 2


# -- 7 ------------------------------------------------------------------------


def test_criterion_07_cofree_search(report):
    t = time.perf_counter()
    d30 = catalog.get("d30")
    hits = sum(bool(r) and r.arrow == d30.identity(v) and r.cofree.carrier == v
               for v in d30.objects for r in [cofree_comonoid(d30, v)])
    s3 = catalog.get("s3-discrete")
    over_e = cofree_comonoid(s3, "e")
    misses = sum(not cofree_comonoid(s3, g) for g in s3.objects if g != "e")
    dt = time.perf_counter() - t
    # D30 has 8 divisors, so 8 is every object
    ok = hits == len(d30.objects) == 8 and bool(over_e) and misses == 5 and dt < 10.0
    report(7, ok, f"D30 {hits}/8 cofree with arrow id; S3 over e found={bool(over_e)}, "
                  f"{misses}/5 NotFound; {dt:.2f}s; limit 10s")
    assert ok


# -- 8 ------------------------------------------------------------------------


def test_criterion_08_braid_word_problem(report):
    t = time.perf_counter()
    relations = bad = 0
    for n in range(2, 7):
        for i, j in itertools.product(range(1, n), repeat=2):
            if abs(i - j) >= 2:
                lhs = BraidWord(n, ((i, 1), (j, 1)))
                rhs = BraidWord(n, ((j, 1), (i, 1)))
            elif j == i + 1:
                lhs = BraidWord(n, ((i, 1), (j, 1), (i, 1)))
                rhs = BraidWord(n, ((j, 1), (i, 1), (j, 1)))
            else:
                continue
            relations += 1
            bad += not braids_equal(lhs, rhs)
    rng = random.Random(0)
    rewrites = contradictions = 0
    for _ in range(1000):
        n = rng.randint(2, 6)
        w = random_word(n, rng.randint(0, 12), rng)
        v = random_relation_rewrite(w, rng)
        rewrites += 1
        if normal_form(v) != normal_form(w) or not braids_equal(v, w):
            bad += 1
        if permutation_of(v) != permutation_of(w):
            contradictions += 1
        u = random_word(n, rng.randint(0, 6), rng)
        if braids_equal(u, w) and permutation_of(u) != permutation_of(w):
            contradictions += 1
    dt = time.perf_counter() - t
    ok = bad == 0 and contradictions == 0 and dt < 30.0
    report(8, ok, f"{relations} defining relations (n<=6), {rewrites} seeded rewrites, "
                  f"{bad} failures, {contradictions} permutation contradictions, {dt:.2f}s; limit 30s")
    assert ok


# -- 9 ------------------------------------------------------------------------


def test_criterion_09_braid_theorems(report):
    t = time.perf_counter()
    code, out, _ = cli("braid", "theorems", "--seed", "0")
    dt = time.perf_counter() - t
    checks = out["checks"]
    a, b, c = checks
    ok = (code == 0 and out["all_passed"]
          and a["detail"]["result"] == "NotFound"
          and b["detail"]["carriers"] == [str(k) for k in range(7)]
          and [m["carrier"] for m in b["detail"]["comonoids"]] == ["0"]
          and c["detail"]["hexagon_failures"] == [] and c["detail"]["naturality_failures"] == []
          and dt < 60.0)
    report(9, ok, f"(a) {{1,2}} colimit {a['detail']['result']}; (b) comonoids on 0..6: "
                  f"{len(b['detail']['comonoids'])}; (c) hexagons+naturality m,n,p<=4 "
                  f"{'ok' if c['passed'] else 'failed'}; {dt:.2f}s; limit 60s")
    assert ok


# -- 10 -----------------------------------------------------------------------


def test_criterion_10_ribbon_model(report):
    rng = random.Random(0)
    checked = failures = 0
    for n in range(1, 6):
        letters = [(i, e) for i in range(1, n + 1) for e in (1, -1)]
        for label, lhs, rhs in ribbon_relations(n):
            for _ in range(20):
                u = [rng.choice(letters) for _ in range(rng.randint(0, 5))]
                v = [rng.choice(letters) for _ in range(rng.randint(0, 5))]
                checked += 1
                failures += not framed_equal(evaluate_ribbon(n, u + lhs + v),
                                             evaluate_ribbon(n, u + rhs + v))
    ok = failures == 0 and checked > 0
    report(10, ok, f"{checked} seeded relation instances in contexts, n<=5, {failures} failures")
    assert ok


# -- 11 -----------------------------------------------------------------------


def test_criterion_11_cofree_discrepancy_reported(report, tmp_path):
    export = tmp_path / "braid.json"
    code, _, _ = cli("braid", "export", "--max-n", "6", "--max-letters", "1", "-o", export)
    assert code == 0
    results = {}
    for n in range(0, 7):
        results[n] = cli("cofree", export, "--over", n)
    code0, out0, _ = results[0]
    good = code0 == 0 and out0["result"]["found"]
    for n in range(1, 7):
        code, out, _ = results[n]
        trace = out["result"].get("trace", [])
        good &= (code == 2 and not out["result"]["found"] and "discrepancy" in out
                 and any(e.get("arrows_to_target") == 0 for e in trace))
    report(11, good, f"cofree over 0 found (exit {code0}); over 1..6 NotFound with empty comma "
                     f"category trace, exit codes {[results[n][0] for n in range(1, 7)]}")
    assert good
    assert json.dumps(results[3][1])  # report stays serialisable
