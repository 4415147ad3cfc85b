"""Finite strict monoidal categories given by explicit tables.

A :class:`FinMonCat` stores objects, morphisms with their domain and codomain,
a composition table, and (optionally) tensor tables on objects and morphisms, a
unit object and a braiding.  Every other module in the package consumes only
this data model.

Morphisms are equal exactly when their identifiers are equal.  Enumerations run
over identifiers in lexicographic order so that reports are reproducible.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .errors import (
    FormatError,
    GuardrailError,
    NotComposableError,
    PartialTableError,
    UnknownIdError,
)

ENV_MAX_OBJECTS = "CENTERBENCH_MAX_OBJECTS"
ENV_MAX_MORPHISMS = "CENTERBENCH_MAX_MORPHISMS"
ENV_MAX_SHAPE_OBJECTS = "CENTERBENCH_MAX_SHAPE_OBJECTS"

CATEGORY_KEYS = frozenset({
    "objects", "morphisms", "identities", "composition", "unit",
    "tensor_objects", "tensor_morphisms", "braiding", "partial", "provenance",
})


@dataclass(frozen=True)
class Limits:
    """Size bounds above which enumerating operations refuse to run."""

    max_objects: int = 64
    max_morphisms: int = 4096
    max_shape_objects: int = 8

    @classmethod
    def from_env(cls) -> "Limits":
        def read(var, default):
            raw = os.environ.get(var)
            if raw is None or raw == "":
                return default
            try:
                return int(raw)
            except ValueError:
                raise GuardrailError(f"{var} must be an integer, got {raw!r}") from None

        base = cls()
        return cls(
            max_objects=read(ENV_MAX_OBJECTS, base.max_objects),
            max_morphisms=read(ENV_MAX_MORPHISMS, base.max_morphisms),
            max_shape_objects=read(ENV_MAX_SHAPE_OBJECTS, base.max_shape_objects),
        )


_limits_override: Limits | None = None


def current_limits() -> Limits:
    return _limits_override if _limits_override is not None else Limits.from_env()


def set_limits(limits: Limits | None) -> None:
    """Install process-wide limits (``None`` restores the environment defaults)."""
    global _limits_override
    _limits_override = limits


def check_size(cat: "FinMonCat", what: str, limits: Limits | None = None) -> None:
    limits = limits or current_limits()
    if len(cat.objects) > limits.max_objects:
        raise GuardrailError(
            f"{what}: category has {len(cat.objects)} objects, limit is {limits.max_objects}")
    if len(cat.morphisms) > limits.max_morphisms:
        raise GuardrailError(
            f"{what}: category has {len(cat.morphisms)} morphisms, limit is {limits.max_morphisms}")


def _pairs(entries, width, label):
    """Accept either a mapping keyed by tuples or a list of flat rows."""
    if entries is None:
        return {}
    if isinstance(entries, Mapping):
        return {tuple(k): v for k, v in entries.items()}
    out = {}
    for row in entries:
        if not isinstance(row, (list, tuple)) or len(row) != width + 1:
            raise FormatError(f"{label} rows must have {width + 1} entries, got {row!r}")
        key = tuple(row[:width])
        if key in out and out[key] != row[width]:
            raise FormatError(f"{label} assigns {key} twice")
        out[key] = row[width]
    return out


class FinMonCat:
    """A finite category, optionally strict monoidal and braided.

    ``partial=True`` marks a truncated table: composition and tensor entries
    may be missing, and any lookup of a missing entry raises
    :class:`PartialTableError` instead of guessing.
    """

    def __init__(
        self,
        objects: Iterable[str],
        morphisms,
        composition=None,
        *,
        identities: Mapping[str, str] | None = None,
        unit: str | None = None,
        tensor_objects=None,
        tensor_morphisms=None,
        braiding=None,
        partial: bool = False,
        provenance: dict | None = None,
    ):
        objects = list(objects)
        for x in objects:
            if not isinstance(x, str) or not x:
                raise FormatError(f"object identifiers must be nonempty strings, got {x!r}")
        if len(set(objects)) != len(objects):
            raise FormatError("duplicate object identifiers")
        self.objects: tuple[str, ...] = tuple(sorted(objects))
        objset = set(self.objects)

        dom: dict[str, str] = {}
        cod: dict[str, str] = {}
        if isinstance(morphisms, Mapping):
            rows = [(name, dc[0], dc[1]) for name, dc in morphisms.items()]
        else:
            rows = []
            for m in morphisms:
                if isinstance(m, Mapping):
                    try:
                        rows.append((m["name"], m["dom"], m["cod"]))
                    except KeyError as exc:
                        raise FormatError(f"morphism entry {m!r} lacks {exc.args[0]!r}") from None
                else:
                    rows.append(tuple(m))
        for name, d, c in rows:
            if not isinstance(name, str) or not name:
                raise FormatError(f"morphism identifiers must be nonempty strings, got {name!r}")
            if name in dom:
                raise FormatError(f"duplicate morphism identifier {name!r}")
            for end in (d, c):
                if end not in objset:
                    raise FormatError(f"morphism {name!r} refers to unknown object {end!r}")
            dom[name], cod[name] = d, c

        idents = dict(identities or {})
        for x in idents:
            if x not in objset:
                raise FormatError(f"identity given for unknown object {x!r}")
        for x in self.objects:
            i = idents.setdefault(x, f"id_{x}")
            if i in dom:
                if dom[i] != x or cod[i] != x:
                    raise FormatError(f"identity {i!r} of {x!r} has wrong domain or codomain")
            else:
                dom[i], cod[i] = x, x
        if len(set(idents.values())) != len(idents):
            raise FormatError("two objects share an identity morphism")

        self._dom = dom
        self._cod = cod
        self.morphisms: tuple[str, ...] = tuple(sorted(dom))
        self.identities: dict[str, str] = {x: idents[x] for x in self.objects}
        self._identity_set = frozenset(self.identities.values())
        self.partial = bool(partial)
        self.provenance = provenance

        comp = _pairs(composition, 2, "composition")
        for (g, f) in list(comp):
            self._require_mor(g)
            self._require_mor(f)
            self._require_mor(comp[(g, f)])
        for f in self.morphisms:
            comp.setdefault((self.identities[cod[f]], f), f)
            comp.setdefault((f, self.identities[dom[f]]), f)
        if not self.partial:
            for f in self.morphisms:
                for g in self.out_of(cod[f]):
                    if (g, f) not in comp:
                        raise FormatError(f"composition table has no entry for ({g}, {f})")
        self.composition: dict[tuple[str, str], str] = comp

        self.unit = unit
        if unit is None:
            if tensor_objects or tensor_morphisms or braiding:
                raise FormatError("tensor tables given without a unit object")
            self.tensor_objects = None
            self.tensor_morphisms = None
            self.braiding = None
            return
        if unit not in objset:
            raise FormatError(f"unit {unit!r} is not an object")

        tobj = _pairs(tensor_objects, 2, "tensor_objects")
        for (a, b), r in tobj.items():
            for x in (a, b, r):
                if x not in objset:
                    raise UnknownIdError("object", x)
        if not self.partial:
            for a, b in itertools.product(self.objects, repeat=2):
                if (a, b) not in tobj:
                    raise FormatError(f"tensor_objects has no entry for ({a}, {b})")
        self.tensor_objects: dict[tuple[str, str], str] | None = tobj

        tmor = _pairs(tensor_morphisms, 2, "tensor_morphisms")
        for (f, g), r in tmor.items():
            for x in (f, g, r):
                self._require_mor(x)
        for a, b in itertools.product(self.objects, repeat=2):
            if (a, b) in tobj:
                tmor.setdefault((self.identities[a], self.identities[b]),
                                self.identities[tobj[(a, b)]])
        if not self.partial:
            for f, g in itertools.product(self.morphisms, repeat=2):
                if (f, g) not in tmor:
                    raise FormatError(f"tensor_morphisms has no entry for ({f}, {g})")
        self.tensor_morphisms: dict[tuple[str, str], str] | None = tmor

        if braiding is None:
            self.braiding = None
        else:
            br = _pairs(braiding, 2, "braiding")
            for (a, b), m in br.items():
                if a not in objset or b not in objset:
                    raise FormatError(f"braiding entry for unknown objects ({a}, {b})")
                self._require_mor(m)
            if not self.partial:
                for a, b in itertools.product(self.objects, repeat=2):
                    if (a, b) not in br:
                        raise FormatError(f"braiding has no entry for ({a}, {b})")
            self.braiding: dict[tuple[str, str], str] | None = br

    # -- basic lookups -------------------------------------------------------

    def __repr__(self):
        tag = "partial " if self.partial else ""
        kind = "monoidal " if self.is_monoidal else ""
        return f"<{tag}{kind}FinMonCat: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"

    def _require_obj(self, x):
        if x not in self._objset:
            raise UnknownIdError("object", x)

    def _require_mor(self, f):
        if f not in self._dom:
            raise UnknownIdError("morphism", f)

    @cached_property
    def _objset(self):
        return frozenset(self.objects)

    @property
    def is_monoidal(self) -> bool:
        return self.unit is not None

    @property
    def is_braided(self) -> bool:
        return self.braiding is not None

    def has_object(self, x) -> bool:
        return x in self._objset

    def has_morphism(self, f) -> bool:
        return f in self._dom

    def dom(self, f: str) -> str:
        self._require_mor(f)
        return self._dom[f]

    def cod(self, f: str) -> str:
        self._require_mor(f)
        return self._cod[f]

    def identity(self, x: str) -> str:
        self._require_obj(x)
        return self.identities[x]

    def is_identity(self, f: str) -> bool:
        return f in self._identity_set

    @cached_property
    def _hom(self) -> dict[tuple[str, str], tuple[str, ...]]:
        hom: dict[tuple[str, str], list[str]] = {}
        for f in self.morphisms:
            hom.setdefault((self._dom[f], self._cod[f]), []).append(f)
        return {k: tuple(v) for k, v in hom.items()}

    @cached_property
    def _out(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {x: [] for x in self.objects}
        for f in self.morphisms:
            out[self._dom[f]].append(f)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def _into(self) -> dict[str, tuple[str, ...]]:
        into: dict[str, list[str]] = {x: [] for x in self.objects}
        for f in self.morphisms:
            into[self._cod[f]].append(f)
        return {k: tuple(v) for k, v in into.items()}

    def hom(self, a: str, b: str) -> tuple[str, ...]:
        self._require_obj(a)
        self._require_obj(b)
        return self._hom.get((a, b), ())

    def out_of(self, a: str) -> tuple[str, ...]:
        return self._out[a]

    def into(self, b: str) -> tuple[str, ...]:
        return self._into[b]

    def compose(self, g: str, f: str) -> str:
        """Return ``g ∘ f`` (first ``f``, then ``g``)."""
        self._require_mor(g)
        self._require_mor(f)
        if self._cod[f] != self._dom[g]:
            raise NotComposableError(
                f"cannot compose {g} after {f}: cod({f})={self._cod[f]} but dom({g})={self._dom[g]}")
        try:
            return self.composition[(g, f)]
        except KeyError:
            raise PartialTableError(f"composite {g} ∘ {f} is not in the truncated table") from None

    def compose_all(self, *fs: str) -> str:
        """``compose_all(h, g, f)`` is ``h ∘ g ∘ f``."""
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.compose(g, out)
        return out

    def _require_monoidal(self):
        if not self.is_monoidal:
            raise FormatError("category has no monoidal structure")

    def tensor_obj(self, a: str, b: str) -> str:
        self._require_monoidal()
        self._require_obj(a)
        self._require_obj(b)
        try:
            return self.tensor_objects[(a, b)]
        except KeyError:
            raise PartialTableError(f"{a} ⊗ {b} is not in the truncated table") from None

    def tensor_mor(self, f: str, g: str) -> str:
        self._require_monoidal()
        self._require_mor(f)
        self._require_mor(g)
        try:
            return self.tensor_morphisms[(f, g)]
        except KeyError:
            raise PartialTableError(f"{f} ⊗ {g} is not in the truncated table") from None

    def tensor_defined(self, a: str, b: str) -> bool:
        return self.is_monoidal and (a, b) in self.tensor_objects

    def braid(self, a: str, b: str) -> str:
        if self.braiding is None:
            raise FormatError("category has no braiding")
        self._require_obj(a)
        self._require_obj(b)
        try:
            return self.braiding[(a, b)]
        except KeyError:
            raise PartialTableError(f"braiding at ({a}, {b}) is not in the truncated table") from None

    # -- isomorphisms and epimorphisms ---------------------------------------

    def inverse(self, f: str) -> str | None:
        """The two-sided inverse of ``f`` if the table has one."""
        self._require_mor(f)
        a, b = self._dom[f], self._cod[f]
        ida, idb = self.identities[a], self.identities[b]
        for g in self._hom.get((b, a), ()):
            gf = self.composition.get((g, f))
            fg = self.composition.get((f, g))
            if gf == ida and fg == idb:
                return g
        return None

    def is_iso(self, f: str) -> bool:
        return self.inverse(f) is not None

    def isos(self, a: str, b: str) -> tuple[str, ...]:
        return tuple(f for f in self.hom(a, b) if self.is_iso(f))

    def is_epi(self, f: str, limits: Limits | None = None) -> bool:
        """Right-cancellability, checked against every parallel pair out of ``cod(f)``."""
        self._require_mor(f)
        check_size(self, "is_epi", limits)
        b = self._cod[f]
        for z in self.objects:
            seen: dict[str, str] = {}
            for u in self._hom.get((b, z), ()):
                uf = self.compose(u, f)
                if uf in seen:
                    return False
                seen[uf] = u
        return True

    def epi_witness(self, f: str) -> tuple[str, str] | None:
        """A pair ``u != v`` with ``u∘f == v∘f``, or ``None`` when ``f`` is epi."""
        b = self.cod(f)
        for z in self.objects:
            seen: dict[str, str] = {}
            for u in self._hom.get((b, z), ()):
                uf = self.compose(u, f)
                if uf in seen:
                    return seen[uf], u
                seen[uf] = u
        return None

    # -- serialisation -------------------------------------------------------

    def to_dict(self) -> dict:
        d: dict = {
            "objects": list(self.objects),
            "morphisms": [{"name": f, "dom": self._dom[f], "cod": self._cod[f]}
                          for f in self.morphisms],
            "identities": dict(self.identities),
            "composition": [[g, f, h] for (g, f), h in sorted(self.composition.items())],
        }
        if self.is_monoidal:
            d["unit"] = self.unit
            d["tensor_objects"] = [[a, b, r] for (a, b), r in sorted(self.tensor_objects.items())]
            d["tensor_morphisms"] = [[f, g, r] for (f, g), r in sorted(self.tensor_morphisms.items())]
            if self.braiding is not None:
                d["braiding"] = [[a, b, m] for (a, b), m in sorted(self.braiding.items())]
        if self.partial:
            d["partial"] = True
        if self.provenance is not None:
            d["provenance"] = self.provenance
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> "FinMonCat":
        if not isinstance(d, Mapping):
            raise FormatError("a category description must be a JSON object")
        unknown = set(d) - CATEGORY_KEYS
        if unknown:
            raise FormatError(f"unknown keys in category description: {sorted(unknown)}")
        for key in ("objects", "morphisms"):
            if key not in d:
                raise FormatError(f"category description lacks {key!r}")
        return cls(
            d["objects"],
            d["morphisms"],
            d.get("composition"),
            identities=d.get("identities"),
            unit=d.get("unit"),
            tensor_objects=d.get("tensor_objects"),
            tensor_morphisms=d.get("tensor_morphisms"),
            braiding=d.get("braiding"),
            partial=d.get("partial", False),
            provenance=d.get("provenance"),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)


def load_category(path) -> FinMonCat:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON ({exc})") from None
    return FinMonCat.from_dict(data)


def save_category(cat: FinMonCat, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(cat.dumps())
        fh.write("\n")


# -- functors ---------------------------------------------------------------


class Functor:
    """A functor between finite categories given by its object and morphism maps."""

    def __init__(self, source: FinMonCat, target: FinMonCat,
                 objects: Mapping[str, str], morphisms: Mapping[str, str], name: str = "F"):
        self.source = source
        self.target = target
        self.object_map = dict(objects)
        self.morphism_map = dict(morphisms)
        self.name = name

    def __repr__(self):
        return f"<Functor {self.name}: {len(self.object_map)} objects>"

    def obj(self, x: str) -> str:
        try:
            return self.object_map[x]
        except KeyError:
            raise UnknownIdError("object", x) from None

    def mor(self, f: str) -> str:
        try:
            return self.morphism_map[f]
        except KeyError:
            raise UnknownIdError("morphism", f) from None

    def is_injective(self) -> bool:
        return (len(set(self.object_map.values())) == len(self.object_map)
                and len(set(self.morphism_map.values())) == len(self.morphism_map))

    def is_faithful(self) -> bool:
        src = self.source
        for a, b in itertools.product(src.objects, repeat=2):
            images = [self.mor(f) for f in src.hom(a, b)]
            if len(set(images)) != len(images):
                return False
        return True


def validate_functor(F: Functor) -> list["Violation"]:
    src, tgt = F.source, F.target
    out: list[Violation] = []
    for x in src.objects:
        if x not in F.object_map:
            out.append(Violation("functor-total", (x,), "object not mapped"))
        elif not tgt.has_object(F.object_map[x]):
            out.append(Violation("functor-target", (x,), f"image {F.object_map[x]!r} not in target"))
    for f in src.morphisms:
        if f not in F.morphism_map:
            out.append(Violation("functor-total", (f,), "morphism not mapped"))
            continue
        Ff = F.morphism_map[f]
        if not tgt.has_morphism(Ff):
            out.append(Violation("functor-target", (f,), f"image {Ff!r} not in target"))
            continue
        if tgt.dom(Ff) != F.object_map.get(src.dom(f)) or tgt.cod(Ff) != F.object_map.get(src.cod(f)):
            out.append(Violation("functor-dom-cod", (f,), "image has wrong domain or codomain"))
    if out:
        return out
    for x in src.objects:
        if F.mor(src.identity(x)) != tgt.identity(F.obj(x)):
            out.append(Violation("functor-identity", (x,), "identity not preserved"))
    for (g, f), h in sorted(src.composition.items()):
        if tgt.compose(F.mor(g), F.mor(f)) != F.mor(h):
            out.append(Violation("functor-composition", (g, f), "composition not preserved"))
    return out


def compose_functors(G: Functor, F: Functor, name: str | None = None) -> Functor:
    """``G ∘ F``."""
    return Functor(
        F.source, G.target,
        {x: G.obj(F.obj(x)) for x in F.source.objects},
        {f: G.mor(F.mor(f)) for f in F.source.morphisms},
        name or f"{G.name}∘{F.name}",
    )


def identity_functor(cat: FinMonCat) -> Functor:
    return Functor(cat, cat, {x: x for x in cat.objects}, {f: f for f in cat.morphisms}, "Id")


@dataclass(frozen=True)
class TensorFunctor:
    """``P_X = X ⊗ -`` (side ``"left"``) or ``Q_X = - ⊗ X`` (side ``"right"``)."""

    cat: FinMonCat
    side: str
    fixed: str

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")
        self.cat._require_monoidal()
        self.cat._require_obj(self.fixed)

    @property
    def name(self) -> str:
        return f"{'P' if self.side == 'left' else 'Q'}_{self.fixed}"

    def obj(self, x: str) -> str:
        if self.side == "left":
            return self.cat.tensor_obj(self.fixed, x)
        return self.cat.tensor_obj(x, self.fixed)

    def mor(self, f: str) -> str:
        i = self.cat.identity(self.fixed)
        if self.side == "left":
            return self.cat.tensor_mor(i, f)
        return self.cat.tensor_mor(f, i)

    def as_functor(self) -> Functor:
        c = self.cat
        return Functor(c, c, {x: self.obj(x) for x in c.objects},
                       {f: self.mor(f) for f in c.morphisms}, self.name)


def apply_tensor_functor(tf: TensorFunctor, x: str) -> str:
    """Apply ``P_X``/``Q_X`` to an object or a morphism identifier."""
    is_obj = tf.cat.has_object(x)
    is_mor = tf.cat.has_morphism(x)
    if is_obj and is_mor:
        raise FormatError(f"{x!r} names both an object and a morphism; use .obj or .mor")
    if is_obj:
        return tf.obj(x)
    if is_mor:
        return tf.mor(x)
    raise UnknownIdError("object or morphism", x)


# -- diagrams ---------------------------------------------------------------


def make_shape(objects, arrows=(), composition=()) -> FinMonCat:
    """A small plain category used as the indexing shape of a diagram."""
    return FinMonCat(objects, arrows, composition)


@dataclass
class Diagram:
    """A functor from a small shape category into a target category."""

    shape: FinMonCat
    functor: Functor

    def __post_init__(self):
        if self.functor.source is not self.shape:
            raise FormatError("diagram functor must have the shape as its source")

    @property
    def target(self) -> FinMonCat:
        return self.functor.target

    def obj(self, d: str) -> str:
        return self.functor.obj(d)

    def mor(self, a: str) -> str:
        return self.functor.mor(a)

    @cached_property
    def non_identity_arrows(self) -> tuple[str, ...]:
        return tuple(a for a in self.shape.morphisms if not self.shape.is_identity(a))

    def mapped(self, functor: Functor) -> "Diagram":
        """Post-compose with a functor out of the current target."""
        return Diagram(self.shape, compose_functors(functor, self.functor))

    def to_dict(self) -> dict:
        s = self.shape
        return {
            "shape": {
                "objects": list(s.objects),
                "arrows": [{"name": a, "dom": s.dom(a), "cod": s.cod(a)}
                           for a in self.non_identity_arrows],
                "composition": [[g, f, h] for (g, f), h in sorted(s.composition.items())
                                if not (s.is_identity(g) or s.is_identity(f))],
            },
            "assignment": {
                "objects": {d: self.obj(d) for d in s.objects},
                "arrows": {a: self.mor(a) for a in self.non_identity_arrows},
            },
        }


DIAGRAM_KEYS = frozenset({"shape", "assignment"})


def diagram_from_dict(d: Mapping, target: FinMonCat, limits: Limits | None = None) -> Diagram:
    if not isinstance(d, Mapping):
        raise FormatError("a diagram description must be a JSON object")
    unknown = set(d) - DIAGRAM_KEYS
    if unknown:
        raise FormatError(f"unknown keys in diagram description: {sorted(unknown)}")
    try:
        sh, asg = d["shape"], d["assignment"]
    except KeyError as exc:
        raise FormatError(f"diagram description lacks {exc.args[0]!r}") from None
    shape = make_shape(sh.get("objects", []), sh.get("arrows", []), sh.get("composition", []))
    limits = limits or current_limits()
    if len(shape.objects) > limits.max_shape_objects:
        raise GuardrailError(
            f"diagram shape has {len(shape.objects)} objects, limit is {limits.max_shape_objects}")
    omap = dict(asg.get("objects", {}))
    amap = dict(asg.get("arrows", {}))
    for x in shape.objects:
        if x not in omap:
            raise FormatError(f"shape object {x!r} is not assigned")
        if not target.has_object(omap[x]):
            raise UnknownIdError("object", omap[x])
    for a in shape.morphisms:
        if shape.is_identity(a):
            amap[a] = target.identity(omap[shape.dom(a)])
        elif a not in amap:
            raise FormatError(f"shape arrow {a!r} is not assigned")
        elif not target.has_morphism(amap[a]):
            raise UnknownIdError("morphism", amap[a])
    F = Functor(shape, target, omap, amap, "diagram")
    bad = validate_functor(F)
    if bad:
        raise FormatError(f"diagram assignment is not a functor: {bad[0].axiom} at {bad[0].witness}")
    return Diagram(shape, F)


def load_diagram(path, target: FinMonCat) -> Diagram:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON ({exc})") from None
    return diagram_from_dict(data, target)


def discrete_diagram(cat: FinMonCat, objects: Iterable[str]) -> Diagram:
    objs = list(objects)
    names = [f"D{i}" for i in range(len(objs))]
    shape = make_shape(names)
    omap = dict(zip(names, objs))
    for x in objs:
        cat._require_obj(x)
    amap = {shape.identity(n): cat.identity(x) for n, x in omap.items()}
    return Diagram(shape, Functor(shape, cat, omap, amap, "diagram"))


def arrow_diagram(cat: FinMonCat, f: str) -> Diagram:
    """The diagram ``D0 --a--> D1`` picking out a single morphism."""
    shape = make_shape(["D0", "D1"], [("a", "D0", "D1")])
    omap = {"D0": cat.dom(f), "D1": cat.cod(f)}
    amap = {"a": f, shape.identity("D0"): cat.identity(omap["D0"]),
            shape.identity("D1"): cat.identity(omap["D1"])}
    return Diagram(shape, Functor(shape, cat, omap, amap, "diagram"))


def span_diagram(cat: FinMonCat, f: str, g: str) -> Diagram:
    """``D1 <--a-- D0 --b--> D2`` for morphisms ``f``, ``g`` with a common domain."""
    if cat.dom(f) != cat.dom(g):
        raise FormatError("span legs must share a domain")
    shape = make_shape(["D0", "D1", "D2"], [("a", "D0", "D1"), ("b", "D0", "D2")])
    omap = {"D0": cat.dom(f), "D1": cat.cod(f), "D2": cat.cod(g)}
    amap = {"a": f, "b": g}
    amap.update({shape.identity(d): cat.identity(omap[d]) for d in shape.objects})
    return Diagram(shape, Functor(shape, cat, omap, amap, "diagram"))


def parallel_diagram(cat: FinMonCat, f: str, g: str) -> Diagram:
    """``D0 ==a,b==> D1``; its colimit is the coequalizer of ``f`` and ``g``."""
    if cat.dom(f) != cat.dom(g) or cat.cod(f) != cat.cod(g):
        raise FormatError("parallel arrows must share domain and codomain")
    shape = make_shape(["D0", "D1"], [("a", "D0", "D1"), ("b", "D0", "D1")])
    omap = {"D0": cat.dom(f), "D1": cat.cod(f)}
    amap = {"a": f, "b": g}
    amap.update({shape.identity(d): cat.identity(omap[d]) for d in shape.objects})
    return Diagram(shape, Functor(shape, cat, omap, amap, "diagram"))


# -- validation -------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    detail: str = ""

    def to_dict(self) -> dict:
        return {"axiom": self.axiom, "witness": list(self.witness), "detail": self.detail}


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)
    skipped: int = 0  # checks not run because a truncated table lacks an entry

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return {"ok": self.ok, "skipped_partial_checks": self.skipped,
                "violations": [v.to_dict() for v in self.violations]}


def _composable_pairs(cat: FinMonCat) -> Iterator[tuple[str, str]]:
    for f in cat.morphisms:
        for g in cat.out_of(cat.cod(f)):
            yield g, f


def validate_category(cat: FinMonCat) -> ValidationReport:
    """Check every category, monoidal and braiding axiom by full enumeration."""
    rep = ValidationReport()
    bad = rep.violations
    comp = cat.composition

    for (g, f), h in sorted(comp.items()):
        if cat.cod(f) != cat.dom(g):
            bad.append(Violation("composition-domain", (g, f, h), "entry for a non-composable pair"))
        elif cat.dom(h) != cat.dom(f) or cat.cod(h) != cat.cod(g):
            bad.append(Violation("composition-typing", (g, f, h),
                                 f"result should be {cat.dom(f)} -> {cat.cod(g)}, "
                                 f"got {cat.dom(h)} -> {cat.cod(h)}"))
    if bad:
        return rep

    for f in cat.morphisms:
        a, b = cat.dom(f), cat.cod(f)
        if comp.get((cat.identity(b), f)) != f or comp.get((f, cat.identity(a))) != f:
            bad.append(Violation("identity-law", (f,)))

    for f in cat.morphisms:
        for g in cat.out_of(cat.cod(f)):
            gf = comp.get((g, f))
            for h in cat.out_of(cat.cod(g)):
                hg = comp.get((h, g))
                if gf is None or hg is None:
                    rep.skipped += 1
                    continue
                left, right = comp.get((h, gf)), comp.get((hg, f))
                if left is None or right is None:
                    rep.skipped += 1
                elif left != right:
                    bad.append(Violation("associativity", (h, g, f), f"{left} != {right}"))

    if not cat.is_monoidal:
        return rep
    _validate_monoidal(cat, rep)
    if cat.braiding is not None and rep.ok:
        _validate_braiding(cat, rep)
    return rep


def _validate_monoidal(cat: FinMonCat, rep: ValidationReport) -> None:
    bad = rep.violations
    T, M, I = cat.tensor_objects, cat.tensor_morphisms, cat.unit
    objs = cat.objects

    for a in objs:
        if T.get((I, a), a) != a or T.get((a, I), a) != a:
            bad.append(Violation("unit-objects", (a,), "I ⊗ A = A = A ⊗ I fails"))
    for a, b, c in itertools.product(objs, repeat=3):
        ab, bc = T.get((a, b)), T.get((b, c))
        if ab is None or bc is None or (ab, c) not in T or (a, bc) not in T:
            rep.skipped += 1
            continue
        if T[(ab, c)] != T[(a, bc)]:
            bad.append(Violation("associativity-objects", (a, b, c)))

    for (f, g), r in sorted(M.items()):
        d = T.get((cat.dom(f), cat.dom(g)))
        c = T.get((cat.cod(f), cat.cod(g)))
        if d is None or c is None or cat.dom(r) != d or cat.cod(r) != c:
            bad.append(Violation("tensor-typing", (f, g, r)))
    if rep.violations:
        return

    for a, b in itertools.product(objs, repeat=2):
        if (a, b) in T and M.get((cat.identity(a), cat.identity(b))) != cat.identity(T[(a, b)]):
            bad.append(Violation("tensor-identity", (a, b), "id_A ⊗ id_B != id_{A⊗B}"))
    idI = cat.identity(I)
    for f in cat.morphisms:
        if M.get((idI, f), f) != f or M.get((f, idI), f) != f:
            bad.append(Violation("unit-morphisms", (f,), "id_I ⊗ f = f = f ⊗ id_I fails"))

    mors = cat.morphisms
    for f, g in itertools.product(mors, repeat=2):
        fg = M.get((f, g))
        if fg is None:
            rep.skipped += len(mors)
            continue
        for h in mors:
            gh = M.get((g, h))
            if gh is None or (fg, h) not in M or (f, gh) not in M:
                rep.skipped += 1
                continue
            if M[(fg, h)] != M[(f, gh)]:
                bad.append(Violation("associativity-morphisms", (f, g, h)))

    pairs = list(_composable_pairs(cat))
    comp = cat.composition
    for (g, f), (g2, f2) in itertools.product(pairs, repeat=2):
        gf, gf2 = comp.get((g, f)), comp.get((g2, f2))
        t1, t2 = M.get((g, g2)), M.get((f, f2))
        if None in (gf, gf2, t1, t2) or (t1, t2) not in comp or (gf, gf2) not in M:
            rep.skipped += 1
            continue
        if comp[(t1, t2)] != M[(gf, gf2)]:
            bad.append(Violation("interchange", (g, f, g2, f2),
                                 "(g⊗g')∘(f⊗f') != (g∘f)⊗(g'∘f')"))


def _validate_braiding(cat: FinMonCat, rep: ValidationReport) -> None:
    bad = rep.violations
    B, T = cat.braiding, cat.tensor_objects
    objs = cat.objects
    for (a, b), psi in sorted(B.items()):
        if (a, b) not in T or (b, a) not in T:
            rep.skipped += 1
            continue
        if cat.dom(psi) != T[(a, b)] or cat.cod(psi) != T[(b, a)]:
            bad.append(Violation("braiding-typing", (a, b, psi)))
        elif not cat.is_iso(psi):
            bad.append(Violation("braiding-iso", (a, b, psi)))
    if bad:
        return
    I = cat.unit
    for a in objs:
        for (x, y) in ((a, I), (I, a)):
            if (x, y) in B and B[(x, y)] != cat.identity(a):
                bad.append(Violation("braiding-unit", (x, y), "Ψ with the unit is not the identity"))

    for f, g in itertools.product(cat.morphisms, repeat=2):
        a, a2, b, b2 = cat.dom(f), cat.cod(f), cat.dom(g), cat.cod(g)
        try:
            lhs = cat.compose(cat.braid(a2, b2), cat.tensor_mor(f, g))
            rhs = cat.compose(cat.tensor_mor(g, f), cat.braid(a, b))
        except Exception:
            rep.skipped += 1
            continue
        if lhs != rhs:
            bad.append(Violation("braiding-naturality", (f, g)))

    for a, b, c in itertools.product(objs, repeat=3):
        try:
            # Ψ_{A,B⊗C} = (id_B ⊗ Ψ_{A,C}) ∘ (Ψ_{A,B} ⊗ id_C)
            lhs = cat.braid(a, cat.tensor_obj(b, c))
            rhs = cat.compose(cat.tensor_mor(cat.identity(b), cat.braid(a, c)),
                              cat.tensor_mor(cat.braid(a, b), cat.identity(c)))
            if lhs != rhs:
                bad.append(Violation("hexagon-1", (a, b, c)))
            # Ψ_{A⊗B,C} = (Ψ_{A,C} ⊗ id_B) ∘ (id_A ⊗ Ψ_{B,C})
            lhs = cat.braid(cat.tensor_obj(a, b), c)
            rhs = cat.compose(cat.tensor_mor(cat.braid(a, c), cat.identity(b)),
                              cat.tensor_mor(cat.identity(a), cat.braid(b, c)))
            if lhs != rhs:
                bad.append(Violation("hexagon-2", (a, b, c)))
        except PartialTableError:
            rep.skipped += 1


def validate_tensor_tables_total(cat: FinMonCat) -> None:
    """Raise unless every tensor and composition entry is present."""
    if cat.partial:
        raise PartialTableError("operation requires a category with total tables")
