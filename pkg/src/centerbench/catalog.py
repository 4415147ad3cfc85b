"""Small monoidal categories used as fixtures, samples and CLI data files.

Discrete group categories have the group elements as objects and only
identity arrows; the tensor is the group product.  Divisor lattices order the
divisors of ``n`` by divisibility with ``gcd`` as tensor, so colimits are
joins (``lcm``).  The remaining entries are hand-built tables with a
particular feature: a non-distributive lattice, non-epi arrows, a braided
category with a distinct parallel pair, and so on.
"""

from __future__ import annotations

import itertools
from math import gcd

from .fincat import FinMonCat


def _perm_mul(p, q):
    """``p·q``: apply ``q`` first, then ``p``."""
    return tuple(p[i] for i in q)


def discrete_group(elements, mul, unit, *, braided=None, provenance=None) -> FinMonCat:
    """The discrete monoidal category of a finite group.

    ``braided`` defaults to whether the group is abelian; the identity braiding
    is the only candidate because the category has no other arrows.
    """
    elements = list(elements)
    tobj = {(a, b): mul(a, b) for a, b in itertools.product(elements, repeat=2)}
    if braided is None:
        braided = all(tobj[(a, b)] == tobj[(b, a)] for a, b in tobj)
    ident = {x: f"id_{x}" for x in elements}
    tmor = {(ident[a], ident[b]): ident[tobj[(a, b)]] for a, b in tobj}
    braiding = {(a, b): ident[tobj[(a, b)]] for a, b in tobj} if braided else None
    return FinMonCat(elements, [], identities=ident, unit=unit, tensor_objects=tobj,
                     tensor_morphisms=tmor, braiding=braiding, provenance=provenance)


def cyclic_group(n: int) -> FinMonCat:
    names = [str(k) for k in range(n)]
    return discrete_group(names, lambda a, b: str((int(a) + int(b)) % n), "0",
                          provenance={"source": f"discrete Z_{n}"})


S3_NAMES = {
    (0, 1, 2): "e",
    (1, 0, 2): "(12)",
    (2, 1, 0): "(13)",
    (0, 2, 1): "(23)",
    (1, 2, 0): "(123)",
    (2, 0, 1): "(132)",
}


def symmetric_group_3() -> FinMonCat:
    perm = {v: k for k, v in S3_NAMES.items()}
    return discrete_group(list(S3_NAMES.values()),
                          lambda a, b: S3_NAMES[_perm_mul(perm[a], perm[b])], "e",
                          provenance={"source": "discrete S_3"})


def dihedral_group_4() -> FinMonCat:
    """Symmetries of a square: ``r^k s^j`` with ``s r s = r^-1``."""

    def name(k, j):
        base = {0: "e", 1: "r", 2: "r2", 3: "r3"}[k]
        if not j:
            return base
        return "s" if k == 0 else f"{base}s"

    table = {name(k, j): (k, j) for k in range(4) for j in range(2)}

    def mul(a, b):
        k1, j1 = table[a]
        k2, j2 = table[b]
        # r^k1 s^j1 r^k2 s^j2 = r^(k1 ± k2) s^(j1+j2)
        k = (k1 + (-k2 if j1 else k2)) % 4
        return name(k, (j1 + j2) % 2)

    return discrete_group(list(table), mul, "e", provenance={"source": "discrete D_4"})


def group_center_size(cat: FinMonCat) -> int:
    """Brute-force |Z(G)| for a discrete group category (used as an oracle)."""
    return sum(
        all(cat.tensor_obj(g, h) == cat.tensor_obj(h, g) for h in cat.objects)
        for g in cat.objects
    )


def poset_category(elements, leq, meet, top, *, provenance=None) -> FinMonCat:
    """A finite lattice as a thin category with ``⊗ = meet`` and unit ``top``.

    Arrows are named ``"a->b"`` for ``a ≤ b``; identities are ``"id_a"``.
    The braiding is the identity, which makes the category symmetric.
    """
    elements = list(elements)

    def arrow(a, b):
        return f"id_{a}" if a == b else f"{a}->{b}"

    arrows = [(arrow(a, b), a, b) for a in elements for b in elements if a != b and leq(a, b)]
    comp = {}
    for a, b, c in itertools.product(elements, repeat=3):
        if leq(a, b) and leq(b, c):
            comp[(arrow(b, c), arrow(a, b))] = arrow(a, c)
    tobj = {(a, b): meet(a, b) for a, b in itertools.product(elements, repeat=2)}
    pairs = [(a, b) for a in elements for b in elements if leq(a, b)]
    tmor = {}
    for (a, b), (c, d) in itertools.product(pairs, repeat=2):
        tmor[(arrow(a, b), arrow(c, d))] = arrow(meet(a, c), meet(b, d))
    braiding = {(a, b): f"id_{tobj[(a, b)]}" for a, b in tobj}
    return FinMonCat(elements, arrows, comp, unit=top, tensor_objects=tobj,
                     tensor_morphisms=tmor, braiding=braiding, provenance=provenance)


def divisor_lattice(n: int) -> FinMonCat:
    """Divisors of ``n`` under divisibility, ``⊗ = gcd``, unit ``n``."""
    divs = [str(d) for d in range(1, n + 1) if n % d == 0]
    return poset_category(
        divs,
        lambda a, b: int(b) % int(a) == 0,
        lambda a, b: str(gcd(int(a), int(b))),
        str(n),
        provenance={"source": f"divisor lattice D{n}"},
    )


def lcm_join(a: str, b: str) -> str:
    x, y = int(a), int(b)
    return str(x * y // gcd(x, y))


M3_ORDER = {("0", x) for x in "0abc1"} | {(x, "1") for x in "0abc1"} | {(x, x) for x in "abc"}


def diamond_m3() -> FinMonCat:
    """The non-distributive lattice M_3 (bottom 0, atoms a b c, top 1), ``⊗ = meet``."""

    def leq(x, y):
        return (x, y) in M3_ORDER

    def meet(x, y):
        if leq(x, y):
            return x
        if leq(y, x):
            return y
        return "0"

    return poset_category(["0", "a", "b", "c", "1"], leq, meet, "1",
                          provenance={"source": "diamond lattice M_3"})


def delooped_z2() -> FinMonCat:
    """One object ``*`` with endomorphisms ``{id_*, t}``, ``t∘t = id``; ``⊗`` is composition."""
    mul = {("id_*", "id_*"): "id_*", ("id_*", "t"): "t", ("t", "id_*"): "t", ("t", "t"): "id_*"}
    return FinMonCat(["*"], [("t", "*", "*")], mul, unit="*",
                     tensor_objects={("*", "*"): "*"}, tensor_morphisms=mul,
                     braiding={("*", "*"): "id_*"},
                     provenance={"source": "delooping of Z_2"})


def coequalizing_pair() -> FinMonCat:
    """``p: X → Y`` with ``u, v: Y → Z`` distinct but ``u∘p = v∘p = w``; ``p`` is not epi."""
    return FinMonCat(
        ["X", "Y", "Z"],
        [("p", "X", "Y"), ("u", "Y", "Z"), ("v", "Y", "Z"), ("w", "X", "Z")],
        {("u", "p"): "w", ("v", "p"): "w"},
        provenance={"source": "coequalizing pair"},
    )


def parallel_pair() -> FinMonCat:
    """Two distinct arrows ``u, v: Y → Z`` and identities."""
    return FinMonCat(["Y", "Z"], [("u", "Y", "Z"), ("v", "Y", "Z")],
                     provenance={"source": "parallel pair"})


def braided_parallel_pair() -> FinMonCat:
    """A braided category containing a distinct parallel pair ``u, v: Y → Z``.

    Objects ``I`` (unit), ``Y``, ``Z`` with ``Y⊗Y = Y`` and ``Z`` absorbing.
    A tensor of two or more non-unit arrows is ``id_Z`` if any factor lives on
    ``Z``, ``id_Y`` if all factors are ``id_Y``, and ``u`` otherwise.  The
    braiding is the identity.
    """
    objs = ["I", "Y", "Z"]

    def tobj(a, b):
        if a == "I":
            return b
        if b == "I":
            return a
        return "Z" if "Z" in (a, b) else "Y"

    mors = ["id_I", "id_Y", "id_Z", "u", "v"]

    def tmor(f, g):
        if f == "id_I":
            return g
        if g == "id_I":
            return f
        if "id_Z" in (f, g):
            return "id_Z"
        if f == g == "id_Y":
            return "id_Y"
        return "u"

    return FinMonCat(
        objs, [("u", "Y", "Z"), ("v", "Y", "Z")],
        unit="I",
        tensor_objects={(a, b): tobj(a, b) for a in objs for b in objs},
        tensor_morphisms={(f, g): tmor(f, g) for f in mors for g in mors},
        braiding={(a, b): f"id_{tobj(a, b)}" for a in objs for b in objs},
        provenance={"source": "braided parallel pair"},
    )


def z2_endomorphisms() -> FinMonCat:
    """Unit ``I`` plus an object ``Y = Y⊗Y`` with ``End(Y) = {id_Y, t}``.

    Tensor on ``End(Y)`` is composition and ``Hom(I, Y)`` is empty.  The
    category is symmetric with identity braiding and ``{Y}`` generates it, yet
    the object centralizer of ``Y`` contains ``(Y, t)``, which receives no
    arrow from ``(Y, id_Y)``.
    """
    mul = {("id_Y", "id_Y"): "id_Y", ("id_Y", "t"): "t", ("t", "id_Y"): "t", ("t", "t"): "id_Y"}
    tobj = {("I", "I"): "I", ("I", "Y"): "Y", ("Y", "I"): "Y", ("Y", "Y"): "Y"}
    tmor = dict(mul)
    for f in ("id_I", "id_Y", "t"):
        tmor[("id_I", f)] = f
        tmor[(f, "id_I")] = f
    return FinMonCat(["I", "Y"], [("t", "Y", "Y")], mul, unit="I", tensor_objects=tobj,
                     tensor_morphisms=tmor,
                     braiding={k: f"id_{v}" for k, v in tobj.items()},
                     provenance={"source": "Z_2 endomorphisms with a unit"})


def product(c1: FinMonCat, c2: FinMonCat) -> FinMonCat:
    """Componentwise product of two monoidal categories; ids are ``"(x,y)"``."""

    def pair(a, b):
        return f"({a},{b})"

    objs = [pair(a, b) for a in c1.objects for b in c2.objects]
    ident = {pair(a, b): pair(c1.identity(a), c2.identity(b)) for a in c1.objects for b in c2.objects}
    mors = [(pair(f, g), pair(c1.dom(f), c2.dom(g)), pair(c1.cod(f), c2.cod(g)))
            for f in c1.morphisms for g in c2.morphisms]
    comp = {}
    for (g1, f1), h1 in c1.composition.items():
        for (g2, f2), h2 in c2.composition.items():
            comp[(pair(g1, g2), pair(f1, f2))] = pair(h1, h2)
    unit = tobj = tmor = braiding = None
    if c1.is_monoidal and c2.is_monoidal:
        unit = pair(c1.unit, c2.unit)
        tobj = {(pair(a1, a2), pair(b1, b2)): pair(c1.tensor_obj(a1, b1), c2.tensor_obj(a2, b2))
                for a1, b1 in itertools.product(c1.objects, repeat=2)
                for a2, b2 in itertools.product(c2.objects, repeat=2)}
        tmor = {(pair(f1, f2), pair(g1, g2)): pair(c1.tensor_mor(f1, g1), c2.tensor_mor(f2, g2))
                for f1, g1 in itertools.product(c1.morphisms, repeat=2)
                for f2, g2 in itertools.product(c2.morphisms, repeat=2)}
        if c1.is_braided and c2.is_braided:
            braiding = {(pair(a1, a2), pair(b1, b2)): pair(c1.braid(a1, b1), c2.braid(a2, b2))
                        for a1, b1 in itertools.product(c1.objects, repeat=2)
                        for a2, b2 in itertools.product(c2.objects, repeat=2)}
    src = [c.provenance.get("source") if c.provenance else "?" for c in (c1, c2)]
    return FinMonCat(objs, mors, comp, identities=ident, unit=unit, tensor_objects=tobj,
                     tensor_morphisms=tmor, braiding=braiding,
                     provenance={"source": f"product of {src[0]} and {src[1]}"})


def trivial_category() -> FinMonCat:
    """One object, its identity, and the unit structure."""
    return FinMonCat(["I"], [], unit="I", tensor_objects={("I", "I"): "I"},
                     braiding={("I", "I"): "id_I"}, provenance={"source": "trivial"})


CATALOG = {
    "trivial": trivial_category,
    "z2": lambda: cyclic_group(2),
    "z4": lambda: cyclic_group(4),
    "s3-discrete": symmetric_group_3,
    "d4-discrete": dihedral_group_4,
    "d6": lambda: divisor_lattice(6),
    "d12": lambda: divisor_lattice(12),
    "d30": lambda: divisor_lattice(30),
    "m3": diamond_m3,
    "bz2": delooped_z2,
    "coequalizing": coequalizing_pair,
    "parallel": parallel_pair,
    "braided-parallel": braided_parallel_pair,
    "z2-endo": z2_endomorphisms,
    "d6-x-bz2": lambda: product(divisor_lattice(6), delooped_z2()),
}


def get(name: str) -> FinMonCat:
    return CATALOG[name]()
