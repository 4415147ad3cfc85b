"""Braid groups, the braid category and its ribbon (framed) variant.

Words are sequences of signed generators ``(i, ±1)`` on ``n`` strands, read
left to right as time: ``compose_braids(a, b)`` performs ``a`` first.  The
word problem is decided by the left-greedy Garside normal form
``Δ^k · a_1 ⋯ a_r`` where each ``a_j`` is a permutation braid.

A permutation braid is stored as a tuple ``arr`` with ``arr[p]`` = the
starting index of the strand that ends at position ``p``.  With this
convention ``arr_{uv}[p] = arr_u[arr_v[p]]``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import FormatError

Perm = tuple[int, ...]


# -- words ------------------------------------------------------------------


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.strands < 0:
            raise FormatError("strand count must be non-negative")
        for i, e in self.letters:
            if not 1 <= i <= self.strands - 1 or e not in (1, -1):
                raise FormatError(f"generator {'s' if e > 0 else 'S'}{i} is out of range "
                                  f"for {self.strands} strands")

    @classmethod
    def parse(cls, text: str, strands: int) -> "BraidWord":
        """Parse ``"s1 S2 s1"``; ``sK`` is a positive crossing and ``SK`` its inverse."""
        letters = []
        for tok in text.replace(",", " ").split():
            if tok in ("e", "1"):
                continue
            if len(tok) < 2 or tok[0] not in "sS" or not tok[1:].isdigit():
                raise FormatError(f"bad braid token {tok!r}")
            letters.append((int(tok[1:]), 1 if tok[0] == "s" else -1))
        return cls(strands, tuple(letters))

    def __str__(self):
        return " ".join(f"{'s' if e > 0 else 'S'}{i}" for i, e in self.letters)

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((i, -e) for i, e in reversed(self.letters)))

    def shifted(self, k: int, strands: int | None = None) -> "BraidWord":
        n = self.strands + k if strands is None else strands
        return BraidWord(n, tuple((i + k, e) for i, e in self.letters))


def identity_word(n: int) -> BraidWord:
    return BraidWord(n)


def generator(n: int, i: int, sign: int = 1) -> BraidWord:
    return BraidWord(n, ((i, sign),))


def compose_braids(a: BraidWord, b: BraidWord) -> BraidWord:
    """``a`` then ``b`` (group product ``a·b``)."""
    if a.strands != b.strands:
        raise FormatError(f"cannot compose braids on {a.strands} and {b.strands} strands")
    return BraidWord(a.strands, a.letters + b.letters)


def compose_all(*words: BraidWord) -> BraidWord:
    out = words[0]
    for w in words[1:]:
        out = compose_braids(out, w)
    return out


def tensor_braids(a: BraidWord, b: BraidWord) -> BraidWord:
    """Place ``b`` to the right of ``a``."""
    return BraidWord(a.strands + b.strands, a.letters + b.shifted(a.strands).letters)


def permutation_of(w: BraidWord) -> Perm:
    """``p[i]`` is the final position of the strand starting at position ``i``."""
    arr = list(range(w.strands))
    for i, _ in w.letters:
        arr[i - 1], arr[i] = arr[i], arr[i - 1]
    p = [0] * w.strands
    for pos, strand in enumerate(arr):
        p[strand] = pos
    return tuple(p)


# -- simple elements ----------------------------------------------------------


def _swap_positions(a: Perm, i: int) -> Perm:
    b = list(a)
    b[i - 1], b[i] = b[i], b[i - 1]
    return tuple(b)


def _swap_values(a: Perm, i: int) -> Perm:
    """``s_i⁻¹ · a`` for a simple ``a`` with ``i`` in its left descent set."""
    return tuple(i if v == i - 1 else i - 1 if v == i else v for v in a)


def _inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for p, v in enumerate(a):
        inv[v] = p
    return tuple(inv)


def _mul(a: Perm, b: Perm) -> Perm:
    return tuple(a[v] for v in b)


@lru_cache(maxsize=None)
def delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def right_descents(a: Perm) -> frozenset[int]:
    return frozenset(i for i in range(1, len(a)) if a[i - 1] > a[i])


def left_descents(a: Perm) -> frozenset[int]:
    return right_descents(_inverse(a))


def tau(a: Perm) -> Perm:
    """Conjugation by ``Δ``: ``s_i ↦ s_{n-i}``."""
    n = len(a)
    return tuple(n - 1 - a[n - 1 - p] for p in range(n))


def right_complement(a: Perm) -> Perm:
    """The simple ``∂a`` with ``a · ∂a = Δ``."""
    return _mul(_inverse(a), delta(len(a)))


def simple_word(a: Perm) -> tuple[tuple[int, int], ...]:
    """A positive word for a permutation braid (peel right descents)."""
    letters = []
    a = tuple(a)
    while True:
        d = right_descents(a)
        if not d:
            break
        i = min(d)
        letters.append((i, 1))
        a = _swap_positions(a, i)
    return tuple(reversed(letters))


def perm_notation(a: Perm) -> str:
    return "[" + " ".join(str(v + 1) for v in a) + "]"


# -- normal form --------------------------------------------------------------


@dataclass(frozen=True)
class GarsideNormalForm:
    strands: int
    infimum: int
    factors: tuple[Perm, ...]

    def __str__(self):
        body = " . ".join(perm_notation(f) for f in self.factors)
        return f"D^{self.infimum} | {body}" if body else f"D^{self.infimum}"

    def to_word(self) -> BraidWord:
        n = self.strands
        d = simple_word(delta(n))
        if self.infimum >= 0:
            head = d * self.infimum
        else:
            head = tuple((i, -1) for i, _ in reversed(d)) * (-self.infimum)
        body = tuple(itertools.chain.from_iterable(simple_word(f) for f in self.factors))
        return BraidWord(n, head + body)

    def to_dict(self) -> dict:
        return {"strands": self.strands, "infimum": self.infimum,
                "factors": [[v + 1 for v in f] for f in self.factors], "text": str(self)}


def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm, bool]:
    """Move generators from the front of ``b`` to the back of ``a`` while possible."""
    changed = False
    while True:
        movable = left_descents(b) - right_descents(a)
        if not movable:
            return a, b, changed
        i = min(movable)
        a, b = _swap_positions(a, i), _swap_values(b, i)
        changed = True


def normal_form(w: BraidWord) -> GarsideNormalForm:
    n = w.strands
    if n <= 1:
        return GarsideNormalForm(n, 0, ())
    ident = tuple(range(n))
    k = 0
    factors: list[Perm] = []
    for i, e in w.letters:
        if e > 0:
            factors.append(_swap_positions(ident, i))
        else:
            # s_i⁻¹ = ∂(s_i) Δ⁻¹, and x Δ⁻¹ = Δ⁻¹ τ(x)
            factors.append(right_complement(_swap_positions(ident, i)))
            factors = [tau(f) for f in factors]
            k -= 1
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 1):
            a, b, moved = _left_weight(factors[j], factors[j + 1])
            if moved:
                factors[j], factors[j + 1] = a, b
                changed = True
        factors = [f for f in factors if f != ident]
    d = delta(n)
    while factors and factors[0] == d:
        factors.pop(0)
        k += 1
    return GarsideNormalForm(n, k, tuple(factors))


def braids_equal(a: BraidWord, b: BraidWord) -> bool:
    if a.strands != b.strands:
        raise FormatError(f"cannot compare braids on {a.strands} and {b.strands} strands")
    if permutation_of(a) != permutation_of(b):
        return False
    return normal_form(a) == normal_form(b)


# -- braiding -----------------------------------------------------------------


def _id(n: int) -> BraidWord:
    return BraidWord(n)


@lru_cache(maxsize=None)
def _c_one(n: int) -> BraidWord:
    """``c_{1,n}`` from ``c_{1,n} = (c_{1,1} ⊗ id) · (id_1 ⊗ c_{1,n-1})``."""
    if n == 0:
        return _id(1)
    if n == 1:
        return BraidWord(2, ((1, 1),))
    return compose_braids(tensor_braids(BraidWord(2, ((1, 1),)), _id(n - 1)),
                          tensor_braids(_id(1), _c_one(n - 1)))


@lru_cache(maxsize=None)
def _c_one_right(m: int) -> BraidWord:
    """``c_{m,1}`` from ``c_{m,1} = (id_1 ⊗ c_{m-1,1}) · (c_{1,1} ⊗ id)``."""
    if m == 0:
        return _id(1)
    if m == 1:
        return BraidWord(2, ((1, 1),))
    return compose_braids(tensor_braids(_id(1), _c_one_right(m - 1)),
                          tensor_braids(BraidWord(2, ((1, 1),)), _id(m - 1)))


@lru_cache(maxsize=None)
def braiding_word(m: int, n: int) -> BraidWord:
    """``c_{m,n}``: the first ``m`` strands cross over the remaining ``n``.

    Expanded along the first argument with
    ``c_{X⊗Y,Z} = (id_X ⊗ c_{Y,Z}) · (c_{X,Z} ⊗ id_Y)``.
    """
    if m == 0 or n == 0:
        return _id(m + n)
    if m == 1:
        return _c_one(n)
    return compose_braids(tensor_braids(_id(1), braiding_word(m - 1, n)),
                          tensor_braids(_c_one(n), _id(m - 1)))


@lru_cache(maxsize=None)
def braiding_word_by_second(m: int, n: int) -> BraidWord:
    """``c_{m,n}`` expanded along the second argument with
    ``c_{X,Y⊗Z} = (c_{X,Y} ⊗ id_Z) · (id_Y ⊗ c_{X,Z})``."""
    if m == 0 or n == 0:
        return _id(m + n)
    if n == 1:
        return _c_one_right(m)
    return compose_braids(tensor_braids(_c_one_right(m), _id(n - 1)),
                          tensor_braids(_id(1), braiding_word_by_second(m, n - 1)))


def braiding_orders_agree(m: int, n: int) -> bool:
    return braids_equal(braiding_word(m, n), braiding_word_by_second(m, n))


# -- framed braids -----------------------------------------------------------


@dataclass(frozen=True)
class FramedBraid:
    """A braid with an integer framing per strand, indexed by starting position."""

    word: BraidWord
    framings: tuple[int, ...]

    def __post_init__(self):
        if len(self.framings) != self.word.strands:
            raise FormatError("one framing per strand is required")

    @property
    def strands(self) -> int:
        return self.word.strands

    def __str__(self):
        return f"{self.word} | framing {list(self.framings)}"


def framed(word: BraidWord, framings=None) -> FramedBraid:
    return FramedBraid(word, tuple(framings) if framings is not None else (0,) * word.strands)


def twist(n: int, strand: int, turns: int = 1) -> FramedBraid:
    """``t_strand``: full twists on one ribbon (1-based), the image of ``s_n`` when ``strand = n``."""
    if not 1 <= strand <= n:
        raise FormatError(f"strand {strand} out of range for {n} strands")
    f = [0] * n
    f[strand - 1] = turns
    return FramedBraid(BraidWord(n), tuple(f))


def framed_compose(a: FramedBraid, b: FramedBraid) -> FramedBraid:
    """``a`` then ``b``; ``b``'s framings are read at the positions where ``a`` leaves each strand."""
    word = compose_braids(a.word, b.word)
    pa = permutation_of(a.word)
    return FramedBraid(word, tuple(a.framings[i] + b.framings[pa[i]] for i in range(a.strands)))


def framed_compose_all(*xs: FramedBraid) -> FramedBraid:
    out = xs[0]
    for x in xs[1:]:
        out = framed_compose(out, x)
    return out


def framed_tensor(a: FramedBraid, b: FramedBraid) -> FramedBraid:
    return FramedBraid(tensor_braids(a.word, b.word), a.framings + b.framings)


def framed_inverse(a: FramedBraid) -> FramedBraid:
    w = a.word.inverse()
    p = permutation_of(a.word)
    # strand starting at p[i] under the inverse is strand i of a
    f = [0] * a.strands
    for i in range(a.strands):
        f[p[i]] = -a.framings[i]
    return FramedBraid(w, tuple(f))


def framed_equal(a: FramedBraid, b: FramedBraid) -> bool:
    return a.framings == b.framings and braids_equal(a.word, b.word)


def ribbon_generator(n: int, i: int, sign: int = 1) -> FramedBraid:
    """Generator ``s_i`` of the ribbon presentation: a crossing for ``i < n``, ``t_n`` for ``i = n``."""
    if i == n:
        return twist(n, n, sign)
    return framed(generator(n, i, sign))


def ribbon_relations(n: int) -> list[tuple[str, list[tuple[int, int]], list[tuple[int, int]]]]:
    """Defining relations of the ribbon braid group on ``n`` strands as letter lists.

    Letters ``(i, ±1)`` with ``i = n`` denote the twist generator.
    """
    rels = []
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append((f"s{i} s{j} = s{j} s{i}", [(i, 1), (j, 1)], [(j, 1), (i, 1)]))
        if i + 1 < n:
            rels.append((f"s{i} s{i+1} s{i} = s{i+1} s{i} s{i+1}",
                         [(i, 1), (i + 1, 1), (i, 1)], [(i + 1, 1), (i, 1), (i + 1, 1)]))
    for i in range(1, n - 1):
        rels.append((f"s{i} s{n} = s{n} s{i}", [(i, 1), (n, 1)], [(n, 1), (i, 1)]))
    if n >= 2:
        a, b = n - 1, n
        rels.append((f"s{a} s{b} s{a} s{b} = s{b} s{a} s{b} s{a}",
                     [(a, 1), (b, 1), (a, 1), (b, 1)], [(b, 1), (a, 1), (b, 1), (a, 1)]))
    return rels


def evaluate_ribbon(n: int, letters) -> FramedBraid:
    out = framed(BraidWord(n))
    for i, e in letters:
        out = framed_compose(out, ribbon_generator(n, i, e))
    return out


# -- randomized words ------------------------------------------------------------


def random_word(n: int, length: int, rng: random.Random) -> BraidWord:
    if n < 2:
        return BraidWord(n)
    return BraidWord(n, tuple((rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)))


def random_framed(n: int, length: int, rng: random.Random, spread: int = 3) -> FramedBraid:
    return FramedBraid(random_word(n, length, rng),
                       tuple(rng.randint(-spread, spread) for _ in range(n)))


def rewrite_once(w: BraidWord, rng: random.Random) -> BraidWord:
    """Apply one defining relation (or free cancellation) at a random spot."""
    n, L = w.strands, list(w.letters)
    if n < 2:
        return w
    moves = []
    for p in range(len(L) - 1):
        (i, e), (j, f) = L[p], L[p + 1]
        if i == j and e == -f:
            moves.append(("cancel", p))
        if abs(i - j) >= 2:
            moves.append(("commute", p))
    for p in range(len(L) - 2):
        (i, e), (j, f), (k, g) = L[p:p + 3]
        if i == k and abs(i - j) == 1 and e == f == g:
            moves.append(("braid", p))
    moves.append(("insert", rng.randint(0, len(L))))
    kind, p = rng.choice(moves)
    if kind == "cancel":
        del L[p:p + 2]
    elif kind == "commute":
        L[p], L[p + 1] = L[p + 1], L[p]
    elif kind == "braid":
        (i, e), (j, _), _ = L[p:p + 3]
        L[p:p + 3] = [(j, e), (i, e), (j, e)]
    else:
        i, e = rng.randint(1, n - 1), rng.choice((1, -1))
        L[p:p] = [(i, e), (i, -e)]
    return BraidWord(n, tuple(L))


def random_relation_rewrite(w: BraidWord, rng: random.Random, steps: int = 8) -> BraidWord:
    for _ in range(steps):
        w = rewrite_once(w, rng)
    return w


# -- the braid category as a truncated table ----------------------------------


def braid_as_finmoncat(max_n: int, max_letters: int):
    """The braid category truncated to ``0..max_n`` strands and short words.

    Morphisms on ``n`` strands are the distinct braids expressible by words of
    at most ``max_letters`` letters, named ``"n:<shortest word>"`` (identities
    ``"id_n"``).  Composites, tensors and braidings that fall outside the
    truncation are left out and the table is marked partial, so any lookup
    of such an entry raises instead of returning something wrong.
    """
    from .fincat import FinMonCat

    if max_n < 0 or max_letters < 0:
        raise FormatError("bounds must be non-negative")
    objects = [str(n) for n in range(max_n + 1)]
    by_nf: dict = {}
    word_of: dict[str, BraidWord] = {}
    morphisms = []
    for n in range(max_n + 1):
        seen = {normal_form(BraidWord(n)): f"id_{n}"}
        word_of[f"id_{n}"] = BraidWord(n)
        letters = [(i, e) for i in range(1, n) for e in (1, -1)]
        for length in range(1, max_letters + 1):
            for combo in itertools.product(letters, repeat=length):
                w = BraidWord(n, combo)
                nf = normal_form(w)
                if nf not in seen:
                    name = f"{n}:{w}"
                    seen[nf] = name
                    word_of[name] = w
                    morphisms.append((name, str(n), str(n)))
        for nf, name in seen.items():
            by_nf[(n, nf)] = name

    def lookup(w: BraidWord):
        return by_nf.get((w.strands, normal_form(w)))

    names = [f"id_{n}" for n in range(max_n + 1)] + [m for m, _, _ in morphisms]
    strands = {m: word_of[m].strands for m in names}
    comp = {}
    missing = 0
    for f in names:
        for g in names:
            if strands[f] != strands[g]:
                continue
            r = lookup(compose_braids(word_of[f], word_of[g]))
            if r is None:
                missing += 1
            else:
                comp[(g, f)] = r
    tobj = {(str(a), str(b)): str(a + b) for a in range(max_n + 1) for b in range(max_n + 1)
            if a + b <= max_n}
    tmor = {}
    for f in names:
        for g in names:
            if strands[f] + strands[g] > max_n:
                continue
            r = lookup(tensor_braids(word_of[f], word_of[g]))
            if r is None:
                missing += 1
            else:
                tmor[(f, g)] = r
    braiding = {}
    for a in range(max_n + 1):
        for b in range(max_n + 1 - a):
            r = lookup(braiding_word(a, b))
            if r is not None:
                braiding[(str(a), str(b))] = r
    return FinMonCat(
        objects, morphisms, comp, unit="0", tensor_objects=tobj, tensor_morphisms=tmor,
        braiding=braiding, partial=True,
        provenance={"source": "braid category", "max_n": max_n, "max_letters": max_letters,
                    "missing_entries": missing},
    )


# -- executable checks of the braid-category results ----------------------------


@dataclass
class TheoremCheck:
    name: str
    passed: bool
    detail: dict

    def to_dict(self) -> dict:
        return {"check": self.name, "passed": self.passed, "detail": self.detail}


def hexagon_checks(max_k: int = 4) -> list[tuple]:
    """Failing ``(kind, m, n, p)`` tuples for both hexagons and both expansion orders."""
    bad = []
    for m, n in itertools.product(range(max_k + 1), repeat=2):
        if not braiding_orders_agree(m, n):
            bad.append(("orders", m, n, None))
    for m, n, p in itertools.product(range(max_k + 1), repeat=3):
        lhs = braiding_word(m, n + p)
        rhs = compose_braids(tensor_braids(braiding_word(m, n), _id(p)),
                             tensor_braids(_id(n), braiding_word(m, p)))
        if not braids_equal(lhs, rhs):
            bad.append(("hexagon-right", m, n, p))
        lhs = braiding_word(m + n, p)
        rhs = compose_braids(tensor_braids(_id(m), braiding_word(n, p)),
                             tensor_braids(braiding_word(m, p), _id(n)))
        if not braids_equal(lhs, rhs):
            bad.append(("hexagon-left", m, n, p))
    return bad


def naturality_checks(rng: random.Random, max_k: int = 4, samples: int = 3,
                      max_len: int = 6) -> list[tuple]:
    """Failing ``(α, β)`` pairs for ``(α⊗β)·c_{m,n} = c_{m,n}·(β⊗α)``."""
    bad = []
    for m, n in itertools.product(range(max_k + 1), repeat=2):
        for _ in range(samples):
            a = random_word(m, rng.randint(0, max_len), rng)
            b = random_word(n, rng.randint(0, max_len), rng)
            c = braiding_word(m, n)
            lhs = compose_braids(tensor_braids(a, b), c)
            rhs = compose_braids(c, tensor_braids(b, a))
            if not braids_equal(lhs, rhs):
                bad.append((str(a), m, str(b), n))
    return bad


def braid_theorem_checks(seed: int = 0) -> list[TheoremCheck]:
    """(a) no colimit of the discrete diagram on 1 and 2; (b) one comonoid on
    0..6 strands; (c) hexagons and naturality of the braiding up to 4 strands."""
    from .colimits import colimit
    from .comonoids import enumerate_comonoids
    from .fincat import discrete_diagram

    rng = random.Random(seed)
    out = []
    cat = braid_as_finmoncat(12, 1)
    lim = colimit(cat, discrete_diagram(cat, ["1", "2"]))
    out.append(TheoremCheck(
        "not cocomplete: discrete diagram {1, 2} has no colimit", not lim,
        {"result": "NotFound" if not lim else "found",
         "reason": getattr(lim, "reason", None)}))
    carriers = [str(k) for k in range(7)]
    comonoids = enumerate_comonoids(cat, carriers)
    out.append(TheoremCheck(
        "comonoids on 0..6 strands: only the trivial one on 0",
        [c.to_dict() for c in comonoids] == [{"carrier": "0", "comult": "id_0", "counit": "id_0"}],
        {"carriers": carriers, "comonoids": [c.to_dict() for c in comonoids]}))
    hex_bad = hexagon_checks(4)
    nat_bad = naturality_checks(rng, 4)
    out.append(TheoremCheck(
        "braiding hexagons and naturality for m, n, p <= 4", not hex_bad and not nat_bad,
        {"hexagon_failures": [list(x) for x in hex_bad],
         "naturality_failures": [list(x) for x in nat_bad], "seed": seed}))
    return out
