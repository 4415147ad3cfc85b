"""Centers and centralizers of a finite strict monoidal category.

Four constructions are provided, each returning a :class:`Construction` that
bundles the new category, its forgetful functor and the structure data of
every object:

* ``center``: pairs ``(A, σ)`` where ``σ_Y: A⊗Y → Y⊗A`` is a family of
  isomorphisms, natural in ``Y`` and multiplicative,
  ``σ_{Y⊗Z} = (id_Y ⊗ σ_Z)(σ_Y ⊗ id_Z)``.  Braided by ``Ψ = σ_B``.
* ``weak_center``: the same with arbitrary components and ``σ_I = id``.
* ``centralizer_of_object(X)``: pairs ``(A, α)`` with ``α: A⊗X → X⊗A`` iso.
* ``centralizer_of_morphism(h: A → B)``: triples ``(X, α, β)`` with
  ``α: A⊗X → X⊗A`` and ``β: B⊗X → X⊗B`` isos such that
  ``β(h⊗id_X) = (id_X⊗h)α``.

Note the carrier sits on the left of ``α`` for object centralizers and on the
right for morphism centralizers.  Both directions are kept as defined.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .errors import ConstructionError, FormatError, TheoremCheckViolation, UnknownIdError
from .fincat import FinMonCat, Functor, check_size, validate_tensor_tables_total

CENTER = "center"
WEAK_CENTER = "weak_center"
CENTRALIZER_OBJECT = "centralizer_object"
CENTRALIZER_MORPHISM = "centralizer_morphism"
COMONOIDS = "comonoids"


@dataclass(frozen=True)
class HalfBraiding:
    carrier: str
    components: tuple[tuple[str, str], ...]  # (Y, σ_Y) in object order
    kind: str = CENTER

    def component(self, y: str) -> str:
        for k, v in self.components:
            if k == y:
                return v
        raise KeyError(y)

    @property
    def key(self):
        return (self.carrier, self.components)

    @property
    def name(self) -> str:
        parts = ",".join(f"σ@{y}={f}" for y, f in self.components)
        return f"({self.carrier};{parts})"

    def to_dict(self) -> dict:
        return {"carrier": self.carrier, "kind": self.kind,
                "components": {y: f for y, f in self.components}}


@dataclass(frozen=True)
class CentralizerObjObject:
    carrier: str
    alpha: str

    @property
    def key(self):
        return (self.carrier, self.alpha)

    @property
    def name(self) -> str:
        return f"({self.carrier};α={self.alpha})"

    def to_dict(self) -> dict:
        return {"carrier": self.carrier, "alpha": self.alpha}


@dataclass(frozen=True)
class CentralizerMorObject:
    carrier: str
    alpha: str
    beta: str

    @property
    def key(self):
        return (self.carrier, self.alpha, self.beta)

    @property
    def name(self) -> str:
        return f"({self.carrier};α={self.alpha},β={self.beta})"

    def to_dict(self) -> dict:
        return {"carrier": self.carrier, "alpha": self.alpha, "beta": self.beta}


def lifted_name(f: str, source: str, target: str) -> str:
    return f"{f} @ {source} => {target}"


@dataclass
class Construction:
    """A constructed category together with the data behind its identifiers."""

    kind: str
    base: FinMonCat
    category: FinMonCat
    forgetful: Functor
    data: dict  # object name -> structure data
    param: str | None = None

    def __post_init__(self):
        self._by_key = {d.key: n for n, d in self.data.items()}

    def __repr__(self):
        p = f"({self.param})" if self.param else ""
        return f"<Construction {self.kind}{p}: {len(self.category.objects)} objects>"

    def find(self, obj) -> str | None:
        """Name of the constructed object carrying ``obj``'s data, if any."""
        return self._by_key.get(obj.key)

    def carrier(self, name: str) -> str:
        try:
            return self.data[name].carrier
        except KeyError:
            raise UnknownIdError("object", name) from None

    def underlying(self, f: str) -> str:
        return self.forgetful.mor(f)

    def lift(self, f: str, source: str, target: str) -> str | None:
        """The constructed morphism over base arrow ``f``, or ``None``."""
        name = lifted_name(f, source, target)
        return name if self.category.has_morphism(name) else None

    def objects_over(self, carrier: str) -> list[str]:
        return [n for n in self.category.objects if self.data[n].carrier == carrier]

    @property
    def label(self) -> str:
        short = {CENTER: "Z(C)", WEAK_CENTER: "Z_w(C)", COMONOIDS: "CoMon(C)",
                 CENTRALIZER_OBJECT: f"Z_{self.param}(C)",
                 CENTRALIZER_MORPHISM: f"Z_{self.param}(C)"}
        return short[self.kind]


def assemble(kind, base: FinMonCat, objs: list, is_hom: Callable, tensor: Callable | None,
              unit, braid_component: Callable | None, param) -> Construction:
    """Build the table category from its objects and a morphism predicate.

    With ``tensor=None`` the result is a plain category.
    Composition and tensor are inherited from ``base``; failing to close
    under them raises :class:`ConstructionError`.
    """
    data = {}
    for o in objs:
        if o.name in data:
            raise ConstructionError(f"duplicate constructed object {o.name}")
        data[o.name] = o
    names = sorted(data)
    by_key = {o.key: o.name for o in objs}

    morphisms = []
    lift = {}
    for s, t in itertools.product(names, repeat=2):
        S, T = data[s], data[t]
        for f in base.hom(S.carrier, T.carrier):
            if is_hom(f, S, T):
                m = lifted_name(f, s, t)
                morphisms.append((m, s, t))
                lift[m] = f
    by_ends = {}
    for m, s, t in morphisms:
        by_ends[(lift[m], s, t)] = m
    identities = {}
    for s in names:
        i = by_ends.get((base.identity(data[s].carrier), s, s))
        if i is None:
            raise ConstructionError(f"identity of {s} fails the morphism condition")
        identities[s] = i

    out_of = {s: [] for s in names}
    for m, s, t in morphisms:
        out_of[s].append((m, t))
    comp = {}
    for m, s, t in morphisms:
        for m2, u in out_of[t]:
            gf = base.compose(lift[m2], lift[m])
            r = by_ends.get((gf, s, u))
            if r is None:
                raise ConstructionError(f"composite {m2} ∘ {m} is not a morphism")
            comp[(m2, m)] = r

    if tensor is None:
        cat = FinMonCat(names, morphisms, comp, identities=identities,
                        provenance={"construction": kind, "param": param, "base": base.provenance})
        forget = Functor(cat, base, {s: data[s].carrier for s in names}, lift, f"U[{kind}]")
        return Construction(kind, base, cat, forget, data, param)

    tobj = {}
    for s, t in itertools.product(names, repeat=2):
        key = tensor(data[s], data[t]).key
        if key not in by_key:
            raise ConstructionError(f"tensor of {s} and {t} is not an object")
        tobj[(s, t)] = by_key[key]
    tmor = {}
    for (m, s, t), (m2, s2, t2) in itertools.product(morphisms, repeat=2):
        f = base.tensor_mor(lift[m], lift[m2])
        r = by_ends.get((f, tobj[(s, s2)], tobj[(t, t2)]))
        if r is None:
            raise ConstructionError(f"tensor of {m} and {m2} is not a morphism")
        tmor[(m, m2)] = r
    unit_name = by_key.get(unit.key)
    if unit_name is None:
        raise ConstructionError("unit object is missing from the construction")

    braiding = None
    if braid_component is not None:
        braiding = {}
        for s, t in itertools.product(names, repeat=2):
            f = braid_component(data[s], data[t])
            r = by_ends.get((f, tobj[(s, t)], tobj[(t, s)]))
            if r is None:
                raise ConstructionError(f"braiding at ({s}, {t}) is not a morphism")
            braiding[(s, t)] = r

    cat = FinMonCat(
        names, morphisms, comp, identities=identities, unit=unit_name,
        tensor_objects=tobj, tensor_morphisms=tmor, braiding=braiding,
        provenance={"construction": kind, "param": param, "base": base.provenance},
    )
    forget = Functor(cat, base, {s: data[s].carrier for s in names}, lift, f"U[{kind}]")
    return Construction(kind, base, cat, forget, data, param)


def _prepare(cat: FinMonCat, what: str):
    if not cat.is_monoidal:
        raise FormatError(f"{what} needs a monoidal category")
    validate_tensor_tables_total(cat)
    check_size(cat, what)


# -- centers ----------------------------------------------------------------


def half_braidings(cat: FinMonCat, carrier: str, kind: str = CENTER) -> list[HalfBraiding]:
    """All half-braidings on ``carrier`` by backtracking with early pruning.

    Index objects are assigned in lexicographic order.  A naturality square
    or multiplicativity equation is checked as soon as every component it
    mentions has been chosen.
    """
    c = cat
    A = carrier
    idA = c.identity(A)
    order = list(c.objects)
    pos = {y: i for i, y in enumerate(order)}
    due = {i: [] for i in range(len(order))}
    for f in c.morphisms:
        y, z = c.dom(f), c.cod(f)
        due[max(pos[y], pos[z])].append(("nat", f, y, z))
    for y, z in itertools.product(order, repeat=2):
        yz = c.tensor_obj(y, z)
        due[max(pos[y], pos[z], pos[yz])].append(("mult", y, z, yz))

    candidates = []
    for y in order:
        src, tgt = c.tensor_obj(A, y), c.tensor_obj(y, A)
        if kind == WEAK_CENTER:
            opts = c.hom(src, tgt)
            if y == c.unit:
                opts = tuple(o for o in opts if o == idA)
        else:
            opts = c.isos(src, tgt)
        candidates.append(opts)

    sigma: dict[str, str] = {}
    found = []

    def ok(con):
        if con[0] == "nat":
            _, f, y, z = con
            lhs = c.compose(c.tensor_mor(f, idA), sigma[y])
            rhs = c.compose(sigma[z], c.tensor_mor(idA, f))
            return lhs == rhs
        _, y, z, yz = con
        rhs = c.compose(c.tensor_mor(c.identity(y), sigma[z]),
                        c.tensor_mor(sigma[y], c.identity(z)))
        return sigma[yz] == rhs

    def search(i):
        if i == len(order):
            found.append(HalfBraiding(A, tuple((y, sigma[y]) for y in order), kind))
            return
        y = order[i]
        for s in candidates[i]:
            sigma[y] = s
            if all(ok(con) for con in due[i]):
                search(i + 1)
        sigma.pop(y, None)

    search(0)
    return found


def _center_like(cat: FinMonCat, kind: str) -> Construction:
    _prepare(cat, kind.replace("_", " "))
    objs = []
    for a in cat.objects:
        objs.extend(half_braidings(cat, a, kind))
    c = cat

    def is_hom(f, S, T):
        for x in c.objects:
            lhs = c.compose(T.component(x), c.tensor_mor(f, c.identity(x)))
            rhs = c.compose(c.tensor_mor(c.identity(x), f), S.component(x))
            if lhs != rhs:
                return False
        return True

    def tensor(S, T):
        a, b = S.carrier, T.carrier
        comps = tuple(
            (x, c.compose(c.tensor_mor(S.component(x), c.identity(b)),
                          c.tensor_mor(c.identity(a), T.component(x))))
            for x in c.objects
        )
        return HalfBraiding(c.tensor_obj(a, b), comps, kind)

    unit = HalfBraiding(c.unit, tuple((x, c.identity(x)) for x in c.objects), kind)
    braid = (lambda S, T: S.component(T.carrier)) if kind == CENTER else None
    return assemble(kind, cat, objs, is_hom, tensor, unit, braid, None)


def center(cat: FinMonCat) -> Construction:
    """The braided center ``Z(C)``."""
    return _center_like(cat, CENTER)


def weak_center(cat: FinMonCat) -> Construction:
    """The weak center: non-invertible components allowed, ``σ_I = id`` imposed."""
    return _center_like(cat, WEAK_CENTER)


# -- centralizers -----------------------------------------------------------


def centralizer_of_object(cat: FinMonCat, X: str) -> Construction:
    """``Z_X(C)``: pairs ``(A, α)`` with ``α: A⊗X → X⊗A`` invertible."""
    _prepare(cat, "centralizer")
    c = cat
    c._require_obj(X)
    idX = c.identity(X)
    objs = [CentralizerObjObject(a, al)
            for a in c.objects for al in c.isos(c.tensor_obj(a, X), c.tensor_obj(X, a))]

    def is_hom(f, S, T):
        # β(f ⊗ id_X) = (id_X ⊗ f)α
        return (c.compose(T.alpha, c.tensor_mor(f, idX))
                == c.compose(c.tensor_mor(idX, f), S.alpha))

    def tensor(S, T):
        a, b = S.carrier, T.carrier
        gamma = c.compose(c.tensor_mor(S.alpha, c.identity(b)),
                          c.tensor_mor(c.identity(a), T.alpha))
        return CentralizerObjObject(c.tensor_obj(a, b), gamma)

    unit = CentralizerObjObject(c.unit, idX)
    return assemble(CENTRALIZER_OBJECT, cat, objs, is_hom, tensor, unit, None, X)


def centralizer_of_morphism(cat: FinMonCat, h: str) -> Construction:
    """``Z_h(C)`` for ``h: A → B``: triples ``(X, α, β)`` compatible with ``h``."""
    _prepare(cat, "centralizer")
    c = cat
    A, B = c.dom(h), c.cod(h)
    idA, idB = c.identity(A), c.identity(B)
    objs = []
    for x in c.objects:
        idx = c.identity(x)
        alphas = c.isos(c.tensor_obj(A, x), c.tensor_obj(x, A))
        betas = c.isos(c.tensor_obj(B, x), c.tensor_obj(x, B))
        for al, be in itertools.product(alphas, betas):
            if c.compose(be, c.tensor_mor(h, idx)) == c.compose(c.tensor_mor(idx, h), al):
                objs.append(CentralizerMorObject(x, al, be))

    def is_hom(f, S, T):
        # α'(id_A ⊗ f) = (f ⊗ id_A)α and β'(id_B ⊗ f) = (f ⊗ id_B)β
        return (c.compose(T.alpha, c.tensor_mor(idA, f)) == c.compose(c.tensor_mor(f, idA), S.alpha)
                and c.compose(T.beta, c.tensor_mor(idB, f)) == c.compose(c.tensor_mor(f, idB), S.beta))

    def tensor(S, T):
        x, y = S.carrier, T.carrier
        ix, iy = c.identity(x), c.identity(y)
        alpha = c.compose(c.tensor_mor(ix, T.alpha), c.tensor_mor(S.alpha, iy))
        beta = c.compose(c.tensor_mor(ix, T.beta), c.tensor_mor(S.beta, iy))
        return CentralizerMorObject(c.tensor_obj(x, y), alpha, beta)

    unit = CentralizerMorObject(c.unit, idA, idB)
    return assemble(CENTRALIZER_MORPHISM, cat, objs, is_hom, tensor, unit, None, h)


def construct(cat: FinMonCat, kind: str, param: str | None = None) -> Construction:
    """Dispatch on ``kind`` (also accepts the short CLI names)."""
    kind = {"center": CENTER, "weak": WEAK_CENTER, "weak-center": WEAK_CENTER,
            "zx": CENTRALIZER_OBJECT, "zh": CENTRALIZER_MORPHISM}.get(kind, kind)
    if kind == CENTER:
        return center(cat)
    if kind == WEAK_CENTER:
        return weak_center(cat)
    if param is None:
        raise FormatError(f"{kind} needs a parameter")
    if kind == CENTRALIZER_OBJECT:
        return centralizer_of_object(cat, param)
    if kind == CENTRALIZER_MORPHISM:
        return centralizer_of_morphism(cat, param)
    raise FormatError(f"unknown construction {kind!r}")


# -- functors between constructions ----------------------------------------


def _object_functor(src: Construction, tgt: Construction, obj_map: Callable, name: str) -> Functor:
    """Functor acting by ``obj_map`` on data and as the identity on base arrows."""
    omap = {}
    for s, d in src.data.items():
        t = tgt.find(obj_map(d))
        if t is None:
            raise TheoremCheckViolation(f"{name}: image of {s} is not an object of {tgt.label}")
        omap[s] = t
    mmap = {}
    for m in src.category.morphisms:
        s, t = src.category.dom(m), src.category.cod(m)
        image = tgt.lift(src.underlying(m), omap[s], omap[t])
        if image is None:
            raise TheoremCheckViolation(f"{name}: image of {m} is not a morphism of {tgt.label}")
        mmap[m] = image
    return Functor(src.category, tgt.category, omap, mmap, name)


def evaluation_functor(z: Construction, zx: Construction) -> Functor:
    """``H_X: Z(C) → Z_X(C)``, ``(A, σ) ↦ (A, σ_X)``."""
    if z.kind != CENTER or zx.kind != CENTRALIZER_OBJECT:
        raise FormatError("evaluation functor goes from a center to an object centralizer")
    X = zx.param
    return _object_functor(z, zx, lambda d: CentralizerObjObject(d.carrier, d.component(X)),
                           f"H_{X}")


def centralizer_identity_iso(zid: Construction, za: Construction) -> tuple[Functor, Functor]:
    """``(S_A, T_A)`` between ``Z_{id_A}(C)`` and ``Z_A(C)``, both inverting ``α``."""
    base = zid.base
    if zid.kind != CENTRALIZER_MORPHISM or za.kind != CENTRALIZER_OBJECT:
        raise FormatError("expected the centralizer of id_A and the centralizer of A")
    if base.identity(za.param) != zid.param:
        raise FormatError(f"{zid.param} is not the identity of {za.param}")
    inv = base.inverse
    S = _object_functor(zid, za, lambda d: CentralizerObjObject(d.carrier, inv(d.alpha)),
                        f"S_{za.param}")
    T = _object_functor(za, zid, lambda d: CentralizerMorObject(d.carrier, inv(d.alpha), inv(d.alpha)),
                        f"T_{za.param}")
    return S, T


def braided_embedding(cat: FinMonCat, target: Construction) -> Functor:
    """The embedding of a braided ``C`` into a constructed category.

    Into the center or weak center ``W ↦ (W, Ψ_{W,-})``; into ``Z_X(C)``
    ``W ↦ (W, Ψ_{W,X})``; into ``Z_h(C)`` for ``h: A → B``
    ``W ↦ (W, Ψ_{A,W}, Ψ_{B,W})``.  Membership of every image is looked up in
    the constructed category, so a failure raises
    :class:`TheoremCheckViolation` rather than being assumed away.
    """
    if not cat.is_braided:
        raise FormatError("embedding needs a braided category")
    if target.base is not cat:
        raise FormatError("target was not constructed over this category")
    c = cat
    kind = target.kind
    if kind in (CENTER, WEAK_CENTER):
        def image(w):
            return HalfBraiding(w, tuple((y, c.braid(w, y)) for y in c.objects), kind)
        name = "Phi1" if kind == CENTER else "Phi4"
    elif kind == CENTRALIZER_OBJECT:
        def image(w):
            return CentralizerObjObject(w, c.braid(w, target.param))
        name = "Phi2"
    else:
        a, b = c.dom(target.param), c.cod(target.param)

        def image(w):
            return CentralizerMorObject(w, c.braid(a, w), c.braid(b, w))
        name = "Phi3"

    omap = {}
    for w in c.objects:
        t = target.find(image(w))
        if t is None:
            raise TheoremCheckViolation(f"{name}: image of {w} is not an object of {target.label}")
        omap[w] = t
    mmap = {}
    for f in c.morphisms:
        m = target.lift(f, omap[c.dom(f)], omap[c.cod(f)])
        if m is None:
            raise TheoremCheckViolation(f"{name}: image of {f} is not a morphism of {target.label}")
        mmap[f] = m
    return Functor(c, target.category, omap, mmap, name)
