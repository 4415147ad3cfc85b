"""Finite colimits by exhaustive search, and colimits in constructed categories.

:func:`colimit` enumerates every cocone under a diagram and keeps the first
(lexicographically smallest apex, then legs) that is universal.  The
``colimit_in_*`` functions build a colimit in a center or centralizer from
the colimit of the underlying diagram: the structure isomorphism on the apex
is induced as a mediating morphism, then every required equation is checked.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterator

from .constructions import (
    CENTER,
    CENTRALIZER_MORPHISM,
    CENTRALIZER_OBJECT,
    WEAK_CENTER,
    CentralizerMorObject,
    CentralizerObjObject,
    Construction,
    HalfBraiding,
)
from .errors import CocontinuityRefusal, ColimitInconsistency, FormatError
from .fincat import (
    Diagram, FinMonCat, TensorFunctor, check_size, diagram_from_dict, discrete_diagram,
)

TRACE_LIMIT = 50


@dataclass(frozen=True)
class NotFound:
    """A search that came back empty; falsy, carries the reason and a trace."""

    reason: str
    trace: tuple = ()

    def __bool__(self):
        return False

    def to_dict(self) -> dict:
        return {"found": False, "reason": self.reason, "trace": [list(t) if isinstance(t, tuple) else t
                                                                 for t in self.trace]}


@dataclass(frozen=True)
class Cocone:
    apex: str
    legs: tuple[tuple[str, str], ...]  # (shape object, leg) in shape order

    @classmethod
    def of(cls, apex: str, legs: dict) -> "Cocone":
        return cls(apex, tuple(sorted(legs.items())))

    def leg(self, d: str) -> str:
        for k, v in self.legs:
            if k == d:
                return v
        raise KeyError(d)

    def to_dict(self) -> dict:
        return {"apex": self.apex, "legs": dict(self.legs)}


def is_cocone(cat: FinMonCat, diagram: Diagram, cocone: Cocone) -> bool:
    legs = dict(cocone.legs)
    shape = diagram.shape
    if set(legs) != set(shape.objects):
        return False
    for d in shape.objects:
        if not cat.has_morphism(legs[d]) or cat.dom(legs[d]) != diagram.obj(d):
            return False
        if cat.cod(legs[d]) != cocone.apex:
            return False
    for a in shape.morphisms:
        d, d2 = shape.dom(a), shape.cod(a)
        if cat.compose(legs[d2], diagram.mor(a)) != legs[d]:
            return False
    return True


def cocones(cat: FinMonCat, diagram: Diagram, apex: str) -> Iterator[Cocone]:
    """Every cocone with the given apex, legs in lexicographic order."""
    shape = diagram.shape
    order = list(shape.objects)
    pos = {d: i for i, d in enumerate(order)}
    due = {i: [] for i in range(len(order))}
    for a in diagram.non_identity_arrows:
        d, d2 = shape.dom(a), shape.cod(a)
        due[max(pos[d], pos[d2])].append((a, d, d2))
    options = [cat.hom(diagram.obj(d), apex) for d in order]
    legs: dict[str, str] = {}

    def search(i):
        if i == len(order):
            yield Cocone(apex, tuple((d, legs[d]) for d in order))
            return
        for f in options[i]:
            legs[order[i]] = f
            if all(cat.compose(legs[d2], diagram.mor(a)) == legs[d] for a, d, d2 in due[i]):
                yield from search(i + 1)
        legs.pop(order[i], None)

    yield from search(0)


def mediators(cat: FinMonCat, cocone: Cocone, competing: Cocone) -> list[str]:
    """All ``g`` with ``g ∘ φ_D = ψ_D`` for every shape object ``D``."""
    out = []
    for g in cat.hom(cocone.apex, competing.apex):
        if all(cat.compose(g, phi) == competing.leg(d) for d, phi in cocone.legs):
            out.append(g)
    return out


def universality_failure(cat: FinMonCat, diagram: Diagram, cocone: Cocone):
    """``None`` if ``cocone`` is universal, else ``(competing cocone, #mediators)``."""
    for z in cat.objects:
        for psi in cocones(cat, diagram, z):
            n = len(mediators(cat, cocone, psi))
            if n != 1:
                return psi, n
    return None


def is_universal(cat: FinMonCat, diagram: Diagram, cocone: Cocone) -> bool:
    return universality_failure(cat, diagram, cocone) is None


@dataclass
class Colimit:
    """A cocone verified to be universal."""

    cat: FinMonCat
    diagram: Diagram
    cocone: Cocone
    _cache: dict = field(default_factory=dict, repr=False)

    def __bool__(self):
        return True

    @property
    def apex(self) -> str:
        return self.cocone.apex

    def leg(self, d: str) -> str:
        return self.cocone.leg(d)

    def mediating(self, competing: Cocone) -> str:
        """The unique factorization of ``competing`` through this colimit."""
        if competing in self._cache:
            return self._cache[competing]
        if not is_cocone(self.cat, self.diagram, competing):
            raise FormatError("competing legs do not form a cocone on this diagram")
        found = mediators(self.cat, self.cocone, competing)
        if len(found) != 1:
            raise ColimitInconsistency(
                f"cocone at {competing.apex} has {len(found)} mediating morphisms from {self.apex}")
        self._cache[competing] = found[0]
        return found[0]

    def to_dict(self) -> dict:
        return {"found": True, **self.cocone.to_dict()}


def colimit(cat: FinMonCat, diagram: Diagram) -> Colimit | NotFound:
    """Search apexes in order; the first universal cocone wins."""
    check_size(cat, "colimit")
    trace = []
    any_cocone = False
    for apex in cat.objects:
        for cc in cocones(cat, diagram, apex):
            any_cocone = True
            failure = universality_failure(cat, diagram, cc)
            if failure is None:
                return Colimit(cat, diagram, cc)
            if len(trace) < TRACE_LIMIT:
                psi, n = failure
                trace.append((apex, dict(cc.legs), f"cocone at {psi.apex} has {n} mediators"))
    if not any_cocone:
        return NotFound("the diagram has no cocone", ())
    return NotFound("no cocone is universal", tuple(trace))


# -- cocontinuity ------------------------------------------------------------


@dataclass
class CocontinuityReport:
    functor: str
    ok: bool = True
    witness: Diagram | None = None
    skipped: list = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return {
            "functor": self.functor,
            "cocontinuous": self.ok,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "skipped": len(self.skipped),
        }


def image_cocone(tf: TensorFunctor, cocone: Cocone) -> Cocone:
    return Cocone(tf.obj(cocone.apex), tuple((d, tf.mor(f)) for d, f in cocone.legs))


def is_cocontinuous(cat: FinMonCat, tf: TensorFunctor, diagrams) -> CocontinuityReport:
    """Does ``tf`` send the colimit of each diagram to a colimit?

    Diagrams without a colimit are skipped and listed in the report.  The
    first diagram whose image cocone is not universal becomes the witness.
    """
    rep = CocontinuityReport(tf.name)
    F = tf.as_functor()
    for dg in diagrams:
        lim = colimit(cat, dg)
        if not lim:
            rep.skipped.append(dg)
            continue
        if not is_universal(cat, dg.mapped(F), image_cocone(tf, lim.cocone)):
            rep.ok = False
            rep.witness = dg
            return rep
    return rep


def discrete_pairs(cat: FinMonCat) -> list[Diagram]:
    """All discrete diagrams on two distinct objects."""
    return [discrete_diagram(cat, [a, b]) for a, b in itertools.combinations(cat.objects, 2)]


# -- colimits in constructed categories -----------------------------------


def resolve_object(z: Construction, name: str) -> str:
    """A constructed object id, or the unique constructed object over a base id."""
    if z.category.has_object(name):
        return name
    over = z.objects_over(name) if z.base.has_object(name) else []
    if len(over) == 1:
        return over[0]
    if over:
        raise FormatError(f"{name!r} carries {len(over)} constructed objects; name one explicitly")
    raise FormatError(f"{name!r} is not an object of {z.label}")


def lift_diagram(z: Construction, diagram) -> Diagram:
    """Move a diagram (or its dict form) into ``z.category``.

    Ids may already be constructed names or unambiguous base names; base
    arrows are lifted between the resolved objects.
    """
    data = diagram.to_dict() if isinstance(diagram, Diagram) else json.loads(json.dumps(diagram))
    asg = data.get("assignment", {})
    objs = {d: resolve_object(z, x) for d, x in asg.get("objects", {}).items()}
    asg["objects"] = objs
    arrows = {}
    shape_arrows = {a["name"]: a for a in data.get("shape", {}).get("arrows", [])}
    for a, f in asg.get("arrows", {}).items():
        if z.category.has_morphism(f):
            arrows[a] = f
            continue
        entry = shape_arrows.get(a)
        lifted = entry and z.lift(f, objs[entry["dom"]], objs[entry["cod"]])
        if not lifted:
            raise FormatError(f"{f!r} is not a morphism of {z.label} between the assigned objects")
        arrows[a] = lifted
    asg["arrows"] = arrows
    return diagram_from_dict(data, z.category)



@dataclass
class InheritedColimit:
    """A colimit in a constructed category built from the base colimit."""

    construction: Construction
    diagram: Diagram
    base: Colimit
    apex: str | None  # constructed object carrying the induced structure
    induced: dict  # label -> base morphism
    checks: list = field(default_factory=list)  # (label, passed)
    colimit: Colimit | None = None

    @property
    def ok(self) -> bool:
        return all(p for _, p in self.checks)

    def failures(self) -> list[str]:
        return [name for name, p in self.checks if not p]

    def to_dict(self) -> dict:
        return {
            "construction": self.construction.kind,
            "param": self.construction.param,
            "base_colimit": self.base.cocone.to_dict(),
            "apex": self.apex,
            "legs": None if self.colimit is None else dict(self.colimit.cocone.legs),
            "induced": dict(sorted(self.induced.items())),
            "checks": [{"check": n, "passed": p} for n, p in self.checks],
            "ok": self.ok,
        }


def _require(cat: FinMonCat, base_diagram: Diagram, tfs):
    for tf in tfs:
        rep = is_cocontinuous(cat, tf, [base_diagram])
        if not rep.ok:
            raise CocontinuityRefusal(tf.name, rep.witness)


def _induce(cat: FinMonCat, tf: TensorFunctor, base: Colimit, target_apex: str, legs: dict) -> str:
    """Mediator out of the image of ``base`` under ``tf`` (known to be a colimit)."""
    img = Colimit(cat, base.diagram.mapped(tf.as_functor()), image_cocone(tf, base.cocone))
    return img.mediating(Cocone.of(target_apex, legs))


def _base_colimit(z: Construction, diagram: Diagram):
    if diagram.target is not z.category:
        raise FormatError("diagram does not live in the constructed category")
    ud = diagram.mapped(z.forgetful)
    return ud, colimit(z.base, ud)


def _finish(res: InheritedColimit, data) -> InheritedColimit:
    """Locate the apex object, lift the legs and verify universality upstairs."""
    z = res.construction
    res.apex = z.find(data) if data is not None else None
    res.checks.append(("apex is an object of the construction", res.apex is not None))
    if res.apex is None:
        return res
    legs = {}
    for d, phi in res.base.cocone.legs:
        legs[d] = z.lift(phi, res.diagram.obj(d), res.apex)
    res.checks.append(("legs are morphisms of the construction", None not in legs.values()))
    if None in legs.values():
        return res
    cocone = Cocone.of(res.apex, legs)
    cat = z.category
    # every cocone upstairs factors through the lifted legs by the base mediator
    lifted_ok = True
    for e in cat.objects:
        for psi in cocones(cat, res.diagram, e):
            down = Cocone(z.carrier(e),
                          tuple((d, z.underlying(f)) for d, f in psi.legs))
            g = res.base.mediating(down)
            if z.lift(g, res.apex, e) is None:
                lifted_ok = False
    res.checks.append(("base mediators lift to the construction", lifted_ok))
    universal = is_universal(cat, res.diagram, cocone)
    res.checks.append(("lifted cocone is universal", universal))
    if universal:
        res.colimit = Colimit(cat, res.diagram, cocone)
    return res


def colimit_in_centralizer_mor(z: Construction, diagram: Diagram) -> InheritedColimit | NotFound:
    """Colimit in ``Z_h(C)`` via the mediators ``ᾱ``, ``ᾱ'``, ``β̄``, ``β̄'``."""
    if z.kind != CENTRALIZER_MORPHISM:
        raise FormatError("expected a morphism centralizer")
    c, h = z.base, z.param
    A, B = c.dom(h), c.cod(h)
    ud, base = _base_colimit(z, diagram)
    if not base:
        return base
    P = {x: TensorFunctor(c, "left", x) for x in (A, B)}
    Q = {x: TensorFunctor(c, "right", x) for x in (A, B)}
    _require(c, ud, [P[A], Q[A], P[B], Q[B]])
    C = base.apex
    res = InheritedColimit(z, diagram, base, None, {})
    shape = diagram.shape
    bars = {}
    for label, K in (("alpha", A), ("beta", B)):
        iK = c.identity(K)
        comp = (lambda o: o.alpha) if label == "alpha" else (lambda o: o.beta)
        fwd = {}
        back = {}
        for d in shape.objects:
            phi = base.leg(d)
            s = comp(z.data[diagram.obj(d)])
            fwd[d] = c.compose(c.tensor_mor(phi, iK), s)
            back[d] = c.compose(c.tensor_mor(iK, phi), c.inverse(s))
        bar = _induce(c, P[K], base, c.tensor_obj(C, K), fwd)
        bar_inv = _induce(c, Q[K], base, c.tensor_obj(K, C), back)
        res.induced[label] = bar
        res.induced[label + "_inverse"] = bar_inv
        res.checks.append((f"{label} ∘ {label}' = id",
                           c.compose(bar, bar_inv) == c.identity(c.tensor_obj(C, K))))
        res.checks.append((f"{label}' ∘ {label} = id",
                           c.compose(bar_inv, bar) == c.identity(c.tensor_obj(K, C))))
        bars[label] = bar
    iC = c.identity(C)
    square = (c.compose(c.tensor_mor(iC, h), bars["alpha"])
              == c.compose(bars["beta"], c.tensor_mor(h, iC)))
    res.checks.append(("(id_C ⊗ h) ∘ alpha = beta ∘ (h ⊗ id_C)", square))
    return _finish(res, CentralizerMorObject(C, bars["alpha"], bars["beta"]))


def colimit_in_centralizer_obj(z: Construction, diagram: Diagram) -> InheritedColimit | NotFound:
    """Colimit in ``Z_X(C)`` via the mediators ``μ_X`` and ``ν_X``."""
    if z.kind != CENTRALIZER_OBJECT:
        raise FormatError("expected an object centralizer")
    c, X = z.base, z.param
    ud, base = _base_colimit(z, diagram)
    if not base:
        return base
    P, Q = TensorFunctor(c, "left", X), TensorFunctor(c, "right", X)
    _require(c, ud, [P, Q])
    C = base.apex
    iX = c.identity(X)
    res = InheritedColimit(z, diagram, base, None, {})
    fwd, back = {}, {}
    for d in diagram.shape.objects:
        phi = base.leg(d)
        al = z.data[diagram.obj(d)].alpha
        fwd[d] = c.compose(c.tensor_mor(iX, phi), al)
        back[d] = c.compose(c.tensor_mor(phi, iX), c.inverse(al))
    mu = _induce(c, Q, base, c.tensor_obj(X, C), fwd)
    nu = _induce(c, P, base, c.tensor_obj(C, X), back)
    res.induced["mu"] = mu
    res.induced["nu"] = nu
    res.checks.append(("nu ∘ mu = id", c.compose(nu, mu) == c.identity(c.tensor_obj(C, X))))
    res.checks.append(("mu ∘ nu = id", c.compose(mu, nu) == c.identity(c.tensor_obj(X, C))))
    return _finish(res, CentralizerObjObject(C, mu))


def _colimit_in_center_like(z: Construction, diagram: Diagram) -> InheritedColimit | NotFound:
    c = z.base
    ud, base = _base_colimit(z, diagram)
    if not base:
        return base
    needed = []
    for x in c.objects:
        needed.append(TensorFunctor(c, "right", x))
        if z.kind == CENTER:
            needed.append(TensorFunctor(c, "left", x))
    _require(c, ud, needed)
    C = base.apex
    iC = c.identity(C)
    res = InheritedColimit(z, diagram, base, None, {})
    mu = {}
    for x in c.objects:
        ix = c.identity(x)
        fwd = {}
        for d in diagram.shape.objects:
            phi = base.leg(d)
            sigma = z.data[diagram.obj(d)].component(x)
            fwd[d] = c.compose(c.tensor_mor(ix, phi), sigma)
        mu[x] = _induce(c, TensorFunctor(c, "right", x), base, c.tensor_obj(x, C), fwd)
        res.induced[f"mu@{x}"] = mu[x]
        if z.kind == CENTER:
            back = {}
            for d in diagram.shape.objects:
                phi = base.leg(d)
                sigma = z.data[diagram.obj(d)].component(x)
                back[d] = c.compose(c.tensor_mor(phi, ix), c.inverse(sigma))
            nu = _induce(c, TensorFunctor(c, "left", x), base, c.tensor_obj(C, x), back)
            res.induced[f"nu@{x}"] = nu
            res.checks.append((f"mu@{x} is invertible",
                               c.compose(nu, mu[x]) == c.identity(c.tensor_obj(C, x))
                               and c.compose(mu[x], nu) == c.identity(c.tensor_obj(x, C))))
    if z.kind == WEAK_CENTER:
        res.checks.append(("mu@I = id", mu[c.unit] == iC))
    natural = all(
        c.compose(c.tensor_mor(zeta, iC), mu[c.dom(zeta)])
        == c.compose(mu[c.cod(zeta)], c.tensor_mor(iC, zeta))
        for zeta in c.morphisms
    )
    res.checks.append(("mu is natural", natural))
    mult = all(
        mu[c.tensor_obj(x, y)] == c.compose(c.tensor_mor(c.identity(x), mu[y]),
                                            c.tensor_mor(mu[x], c.identity(y)))
        for x, y in itertools.product(c.objects, repeat=2)
    )
    res.checks.append(("mu is multiplicative", mult))
    data = HalfBraiding(C, tuple((x, mu[x]) for x in c.objects), z.kind)
    return _finish(res, data)


def colimit_in_center(z: Construction, diagram: Diagram) -> InheritedColimit | NotFound:
    if z.kind != CENTER:
        raise FormatError("expected a center")
    return _colimit_in_center_like(z, diagram)


def colimit_in_weak_center(z: Construction, diagram: Diagram) -> InheritedColimit | NotFound:
    if z.kind != WEAK_CENTER:
        raise FormatError("expected a weak center")
    return _colimit_in_center_like(z, diagram)


def inherited_colimit(z: Construction, diagram: Diagram) -> InheritedColimit | NotFound:
    return {
        CENTER: colimit_in_center,
        WEAK_CENTER: colimit_in_weak_center,
        CENTRALIZER_OBJECT: colimit_in_centralizer_obj,
        CENTRALIZER_MORPHISM: colimit_in_centralizer_mor,
    }[z.kind](z, diagram)
