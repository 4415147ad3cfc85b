"""Comonoids, cofree comonoids, generating sets and quotients.

A comonoid is a carrier ``C`` with ``Δ: C → C⊗C`` and ``ε: C → I`` such that
``(id⊗Δ)Δ = (Δ⊗id)Δ`` and ``(ε⊗id)Δ = id = (id⊗ε)Δ``.  Cofree comonoids are
found by searching the comma category of the forgetful functor over ``V``
for a terminal object; nothing is inferred from adjoint-functor theorems.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .colimits import NotFound
from .constructions import (
    CENTER,
    CENTRALIZER_MORPHISM,
    CENTRALIZER_OBJECT,
    COMONOIDS,
    WEAK_CENTER,
    Construction,
    assemble,
    braided_embedding,
)
from .errors import FormatError, PartialTableError
from .fincat import FinMonCat, TensorFunctor, check_size

TRACE_LIMIT = 200


@dataclass(frozen=True)
class Comonoid:
    carrier: str
    comult: str
    counit: str

    @property
    def key(self):
        return (self.carrier, self.comult, self.counit)

    @property
    def name(self) -> str:
        return f"({self.carrier};Δ={self.comult},ε={self.counit})"

    def to_dict(self) -> dict:
        return {"carrier": self.carrier, "comult": self.comult, "counit": self.counit}


def is_comonoid(cat: FinMonCat, carrier: str, comult: str, counit: str) -> bool:
    c = cat
    i = c.identity(carrier)
    if c.dom(comult) != carrier or c.cod(comult) != c.tensor_obj(carrier, carrier):
        return False
    if c.dom(counit) != carrier or c.cod(counit) != c.unit:
        return False
    coassoc = (c.compose(c.tensor_mor(i, comult), comult)
               == c.compose(c.tensor_mor(comult, i), comult))
    left = c.compose(c.tensor_mor(counit, i), comult) == i
    right = c.compose(c.tensor_mor(i, counit), comult) == i
    return coassoc and left and right


def decidable_carriers(cat: FinMonCat) -> list[str]:
    """Carriers ``C`` for which ``C⊗C`` is present in the (possibly truncated) table."""
    if not cat.partial:
        return list(cat.objects)
    return [x for x in cat.objects if cat.tensor_defined(x, x)]


def enumerate_comonoids(cat: FinMonCat, carriers=None) -> list[Comonoid]:
    """All comonoids on the given carriers (default: every object), in order.

    On a truncated table a carrier whose axioms touch a missing entry raises
    :class:`PartialTableError`; pass ``decidable_carriers(cat)`` to stay safe.
    """
    if not cat.is_monoidal:
        raise FormatError("comonoids need a monoidal category")
    check_size(cat, "comonoid enumeration")
    carriers = cat.objects if carriers is None else sorted(carriers)
    out = []
    for x in carriers:
        try:
            xx = cat.tensor_obj(x, x)
        except PartialTableError:
            raise PartialTableError(f"comonoids on {x} are undecidable in the truncated table") from None
        for d, e in itertools.product(cat.hom(x, xx), cat.hom(x, cat.unit)):
            try:
                if is_comonoid(cat, x, d, e):
                    out.append(Comonoid(x, d, e))
            except PartialTableError:
                raise PartialTableError(
                    f"comonoids on {x} are undecidable in the truncated table") from None
    return out


def comonoid_category(cat: FinMonCat, carriers=None) -> Construction:
    """``CoMon(C)`` with its forgetful functor.

    Morphisms are base arrows ``f`` with ``Δ'f = (f⊗f)Δ`` and ``ε'f = ε``.
    The result is monoidal only when ``cat`` is braided, with
    ``Δ = (id ⊗ Ψ ⊗ id)(Δ ⊗ Δ')`` and counit ``ε ⊗ ε'``.
    """
    c = cat
    objs = enumerate_comonoids(cat, carriers)

    def is_hom(f, S, T):
        return (c.compose(T.comult, f) == c.compose(c.tensor_mor(f, f), S.comult)
                and c.compose(T.counit, f) == S.counit)

    def tensor(S, T):
        a, b = S.carrier, T.carrier
        middle = c.tensor_mor(c.tensor_mor(c.identity(a), c.braid(a, b)), c.identity(b))
        comult = c.compose(middle, c.tensor_mor(S.comult, T.comult))
        return Comonoid(c.tensor_obj(a, b), comult, c.tensor_mor(S.counit, T.counit))

    if not (cat.is_braided and carriers is None):
        return assemble(COMONOIDS, cat, objs, is_hom, None, None, None, None)
    unit = Comonoid(c.unit, c.identity(c.unit), c.identity(c.unit))
    return assemble(COMONOIDS, cat, objs, is_hom, tensor, unit, None, None)


# -- cofree comonoids --------------------------------------------------------


@dataclass
class CouniversalArrow:
    cofree: Comonoid
    arrow: str
    alternatives: list = field(default_factory=list)  # other terminal (comonoid, arrow) pairs
    unique_up_to_iso: bool = True
    skipped_carriers: list = field(default_factory=list)

    def __bool__(self):
        return True

    def to_dict(self) -> dict:
        return {
            "found": True,
            "cofree": self.cofree.to_dict(),
            "arrow": self.arrow,
            "alternatives": len(self.alternatives),
            "unique_up_to_iso": self.unique_up_to_iso,
            "skipped_carriers": list(self.skipped_carriers),
        }


def _factorizations(comon: Construction, D: str, f: str, E: str, u: str) -> list[str]:
    """Comonoid morphisms ``f': D → E`` with ``u ∘ U(f') = f``."""
    c = comon.base
    return [m for m in comon.category.hom(D, E) if c.compose(u, comon.underlying(m)) == f]


def cofree_comonoid(cat: FinMonCat, V: str, comon: Construction | None = None):
    """Terminal object of the comma category ``(U ↓ V)`` or :class:`NotFound`.

    Every candidate ``(E, u)`` is tested against every competing ``(D, f)``;
    rejected candidates are recorded in the trace together with the first
    competitor that has zero or several factorizations.
    """
    cat._require_obj(V)
    skipped = []
    if comon is None:
        carriers = decidable_carriers(cat)
        skipped = [x for x in cat.objects if x not in carriers]
        comon = comonoid_category(cat, carriers if cat.partial else None)
    c = cat
    objs = list(comon.category.objects)
    comma = [(E, u) for E in objs for u in c.hom(comon.carrier(E), V)]
    if not comma:
        trace = [{"comonoid": E, "arrows_to_target": 0} for E in objs]
        if skipped:
            trace.append({"undecidable_carriers": skipped})
        return NotFound(f"the comma category over {V} is empty: no comonoid carrier has an arrow to {V}",
                        tuple(trace))
    terminal = []
    trace = []
    for E, u in comma:
        failure = None
        for D, f in comma:
            n = len(_factorizations(comon, D, f, E, u))
            if n != 1:
                failure = {"candidate": [E, u], "competitor": [D, f], "factorizations": n}
                break
        if failure is None:
            terminal.append((E, u))
        elif len(trace) < TRACE_LIMIT:
            trace.append(failure)
    if not terminal:
        return NotFound(f"no object of the comma category over {V} is terminal", tuple(trace))
    (E, u), rest = terminal[0], terminal[1:]
    unique = True
    for E2, u2 in rest:
        there = _factorizations(comon, E, u, E2, u2)
        back = _factorizations(comon, E2, u2, E, u)
        k = comon.category
        if not (len(there) == len(back) == 1
                and k.compose(back[0], there[0]) == k.identity(E)
                and k.compose(there[0], back[0]) == k.identity(E2)):
            unique = False
    return CouniversalArrow(comon.data[E], u, rest, unique, skipped)


# -- generating sets ---------------------------------------------------------


@dataclass
class Separation:
    ok: bool
    witness: tuple | None = None  # an unseparated parallel pair

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return {"generates": self.ok, "witness": None if self.witness is None else list(self.witness)}


def is_generating_set(cat: FinMonCat, members) -> Separation:
    """Do arrows out of ``members`` separate every distinct parallel pair?"""
    members = sorted(set(members))
    for g in members:
        cat._require_obj(g)
    check_size(cat, "generating-set check")
    for x, y in itertools.product(cat.objects, repeat=2):
        probes = [a for g in members for a in cat.hom(g, x)]
        for f, g in itertools.combinations(cat.hom(x, y), 2):
            if all(cat.compose(f, a) == cat.compose(g, a) for a in probes):
                return Separation(False, (f, g))
    return Separation(True)


def generating_sets(cat: FinMonCat) -> list[tuple[str, ...]]:
    """Every subset of objects that generates, smallest first."""
    out = []
    objs = cat.objects
    for k in range(len(objs) + 1):
        for sub in itertools.combinations(objs, k):
            if is_generating_set(cat, sub):
                out.append(sub)
    return out


@dataclass
class LiftReport:
    embedding: str
    target: str
    members: list
    lifted: list
    separation: Separation

    @property
    def ok(self) -> bool:
        return self.separation.ok

    def to_dict(self) -> dict:
        return {"embedding": self.embedding, "target": self.target,
                "members": list(self.members), "lifted": list(self.lifted),
                **self.separation.to_dict()}


def lift_generating_set(cat: FinMonCat, members, target: Construction) -> LiftReport:
    """Push ``members`` along the braided embedding and re-check separation in ``target``."""
    members = sorted(set(members))
    F = braided_embedding(cat, target)
    lifted = [F.obj(g) for g in members]
    return LiftReport(F.name, target.label, members, lifted,
                      is_generating_set(target.category, lifted))


# -- quotients ---------------------------------------------------------------


@dataclass
class QuotientClass:
    representative: str
    members: list

    def to_dict(self) -> dict:
        return {"representative": self.representative, "members": list(self.members)}


def equivalence_iso(cat: FinMonCat, p: str, q: str) -> str | None:
    """An iso ``θ: cod p → cod q`` with ``θ ∘ p = q``, if one exists."""
    if cat.dom(p) != cat.dom(q):
        return None
    for theta in cat.isos(cat.cod(p), cat.cod(q)):
        if cat.compose(theta, p) == q:
            return theta
    return None


def quotients_of(cat: FinMonCat, A: str) -> list[QuotientClass]:
    """Epimorphisms out of ``A`` up to isomorphism of their codomains."""
    cat._require_obj(A)
    check_size(cat, "quotient enumeration")
    epis = sorted((cat.cod(f), f) for f in cat.out_of(A) if cat.is_epi(f))
    classes: list[QuotientClass] = []
    for _, f in epis:
        for qc in classes:
            if equivalence_iso(cat, qc.representative, f) is not None:
                qc.members.append(f)
                break
        else:
            classes.append(QuotientClass(f, [f]))
    return classes


@dataclass
class EpiTransfer:
    p: str
    q: str
    theta: str
    hypothesis: list  # (description, holds)
    squares: list  # (description, holds)

    @property
    def hypothesis_met(self) -> bool:
        return all(h for _, h in self.hypothesis)

    @property
    def ok(self) -> bool:
        return all(s for _, s in self.squares)

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "theta": self.theta,
                "hypothesis": [{"check": d, "holds": h} for d, h in self.hypothesis],
                "squares": [{"check": d, "holds": h} for d, h in self.squares],
                "ok": self.ok}


def transfer_functors(z: Construction) -> list[TensorFunctor]:
    """Tensor functors whose epi-preservation the transfer argument uses."""
    c = z.base
    if z.kind == CENTRALIZER_MORPHISM:
        h = z.param
        return [TensorFunctor(c, "left", c.dom(h)), TensorFunctor(c, "left", c.cod(h))]
    if z.kind == CENTRALIZER_OBJECT:
        return [TensorFunctor(c, "right", z.param)]
    if z.kind in (CENTER, WEAK_CENTER):
        return [TensorFunctor(c, "right", x) for x in c.objects]
    raise FormatError(f"no quotient transfer for {z.kind}")


def epi_transfer_check(z: Construction, p: str, q: str) -> EpiTransfer:
    """Is the base isomorphism between ``U(p)`` and ``U(q)`` a morphism upstairs?

    ``p`` and ``q`` are morphisms of the construction out of a common object
    whose underlying arrows are epis identified by an iso ``θ`` of the base.
    The hypothesis entries record whether the relevant tensor functors send
    ``U(p)`` to an epi; the squares record whether ``θ`` and ``θ⁻¹`` satisfy
    the construction's morphism condition.
    """
    k, c = z.category, z.base
    if k.dom(p) != k.dom(q):
        raise FormatError("p and q must share a domain")
    up, uq = z.underlying(p), z.underlying(q)
    if not (c.is_epi(up) and c.is_epi(uq)):
        raise FormatError("the underlying arrows of p and q must be epimorphisms")
    theta = equivalence_iso(c, up, uq)
    if theta is None:
        raise FormatError("p and q are not equivalent as epimorphisms of the base")
    hyp = [(f"{tf.name}(U p) is epi", c.is_epi(tf.mor(up))) for tf in transfer_functors(z)]
    Y, Z = k.cod(p), k.cod(q)
    squares = [
        ("theta is a morphism upstairs", z.lift(theta, Y, Z) is not None),
        ("theta inverse is a morphism upstairs", z.lift(c.inverse(theta), Z, Y) is not None),
    ]
    return EpiTransfer(p, q, theta, hyp, squares)


def epi_transfer_instances(z: Construction) -> list[tuple[str, str]]:
    """All ``(p, q)`` pairs meeting the preconditions of :func:`epi_transfer_check`."""
    k, c = z.category, z.base
    epi = {m: c.is_epi(z.underlying(m)) for m in k.morphisms}
    out = []
    for s in k.objects:
        outs = [m for m in k.out_of(s) if epi[m]]
        for p, q in itertools.product(outs, repeat=2):
            if equivalence_iso(c, z.underlying(p), z.underlying(q)) is not None:
                out.append((p, q))
    return out
