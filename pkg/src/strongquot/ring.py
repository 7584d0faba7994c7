"""Finite unital rings given by addition and multiplication tables.

Elements are the integers ``0..size-1``; ``zero`` and ``one`` name the two
distinguished elements.  All derived data (units, radical, idempotents) is
computed by exhaustive scans and memoised on the ring instance, which is
immutable after construction.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Sequence

import numpy as np

from ._bits import mask_of
from .errors import (
    ArityError,
    CapacityError,
    InternalConsistencyError,
    InvalidIdealError,
    InvalidSizeError,
    RingError,
    RingMapError,
)
from .verdict import Verdict

DEFAULT_SIZE_CAP = 256

SIDEDNESS = ("left", "right", "two-sided")


# --------------------------------------------------------------------------
# structure metadata: lets constructors expose matrix entries / components
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class MatrixStructure:
    base: "FiniteRing"
    n: int
    shape: str
    positions: tuple[tuple[int, int], ...]

    def entries(self, x: int) -> tuple[int, ...]:
        q = self.base.size
        out = []
        for _ in self.positions:
            out.append(x % q)
            x //= q
        return tuple(reversed(out))

    def entry(self, x: int, i: int, j: int) -> int:
        """Base-ring element at row ``i``, column ``j`` (1-based)."""
        try:
            k = self.positions.index((i - 1, j - 1))
        except ValueError:
            return self.base.zero
        return self.entries(x)[k]

    def index_of(self, entries: Sequence[int]) -> int:
        q = self.base.size
        x = 0
        for v in entries:
            x = x * q + v
        return x

    def index_of_matrix(self, rows: Sequence[Sequence[int]]) -> int:
        return self.index_of([rows[i][j] for i, j in self.positions])

    def unit_matrix(self, i: int, j: int) -> int:
        """Matrix unit E_ij (1-based) when it belongs to the shape."""
        if (i - 1, j - 1) not in self.positions:
            raise RingError(f"E_{i}{j} is not a {self.shape} matrix")
        entries = [self.base.one if p == (i - 1, j - 1) else self.base.zero for p in self.positions]
        return self.index_of(entries)


@dataclass(frozen=True)
class ProductStructure:
    factors: tuple["FiniteRing", ...]

    def components(self, x: int) -> tuple[int, ...]:
        out = []
        for f in reversed(self.factors):
            out.append(x % f.size)
            x //= f.size
        return tuple(reversed(out))

    def index_of(self, comps: Sequence[int]) -> int:
        x = 0
        for f, c in zip(self.factors, comps):
            x = x * f.size + c
        return x


@dataclass(frozen=True)
class QuotientStructure:
    parent: "FiniteRing"
    ideal: frozenset
    representatives: tuple[int, ...]


@dataclass(frozen=True)
class OppositeStructure:
    parent: "FiniteRing"


# --------------------------------------------------------------------------
# table validation (works on raw tables so corrupted input can be diagnosed)
# --------------------------------------------------------------------------


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return tuple(int(v) for v in hits[0]) if len(hits) else None


def validate_tables(add, mul, zero: int, one: int) -> Verdict:
    """Check every ring axiom; the first violation is reported with a witness."""
    name = "ring_axioms"
    try:
        A = np.asarray(add, dtype=np.int64)
        M = np.asarray(mul, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        return Verdict.failed(name, f"tables are not integer matrices: {exc}")
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        return Verdict.failed(name, f"add table has shape {A.shape}, expected square")
    n = A.shape[0]
    if M.shape != (n, n):
        return Verdict.failed(name, f"mul table has shape {M.shape}, expected {(n, n)}")
    if n < 2:
        return Verdict.failed(name, "size must be at least 2 (zero ring excluded)")
    for label, T in (("add", A), ("mul", M)):
        bad = _first((T < 0) | (T >= n))
        if bad is not None:
            return Verdict.failed(name, f"{label}[{bad[0]}][{bad[1]}] = {T[bad]} out of range 0..{n - 1}")
    if not (0 <= zero < n and 0 <= one < n):
        return Verdict.failed(name, f"zero={zero} or one={one} out of range")
    if zero == one:
        return Verdict.failed(name, "zero equals one")
    idx = np.arange(n)
    bad = _first(A[zero] != idx) or _first(A[:, zero] != idx)
    if bad is not None:
        return Verdict.failed(name, f"additive identity fails at element {bad[0]}")
    bad = _first(A != A.T)
    if bad is not None:
        return Verdict.failed(name, f"addition not commutative: {bad[0]}+{bad[1]}")
    bad = _first((A == zero).sum(axis=1) != 1)
    if bad is not None:
        return Verdict.failed(name, f"element {bad[0]} has no unique additive inverse")
    for a in range(n):
        lhs = A[A[a]]           # (a+b)+c  indexed [b, c]
        rhs = A[a][A]           # a+(b+c)
        bad = _first(lhs != rhs)
        if bad is not None:
            return Verdict.failed(name, f"addition not associative at ({a}, {bad[0]}, {bad[1]})")
    for a in range(n):
        bad = _first(M[M[a]] != M[a][M])
        if bad is not None:
            return Verdict.failed(name, f"multiplication not associative at ({a}, {bad[0]}, {bad[1]})")
    bad = _first(M[one] != idx) or _first(M[:, one] != idx)
    if bad is not None:
        return Verdict.failed(name, f"{one} is not a two-sided identity (fails at {bad[0]})")
    for a in range(n):
        row = M[a]
        bad = _first(row[A] != A[row[:, None], row[None, :]])
        if bad is not None:
            return Verdict.failed(name, f"left distributivity fails at a={a}, b={bad[0]}, c={bad[1]}")
        col = M[:, a]
        bad = _first(col[A] != A[col[:, None], col[None, :]])
        if bad is not None:
            return Verdict.failed(name, f"right distributivity fails at a={a}, b={bad[0]}, c={bad[1]}")
    return Verdict.passed(name)


# --------------------------------------------------------------------------
# the ring
# --------------------------------------------------------------------------


class FiniteRing:
    """A finite ring with 1 given by its operation tables."""

    def __init__(
        self,
        add_table,
        mul_table,
        zero: int,
        one: int,
        label: str = "R",
        names: Sequence[str] | None = None,
        structure=None,
        check: bool = True,
    ):
        if check:
            verdict = validate_tables(add_table, mul_table, zero, one)
            if not verdict.ok:
                raise RingError(f"{label}: {verdict.detail}")
        add = np.array(add_table, dtype=np.int64)
        mul = np.array(mul_table, dtype=np.int64)
        add.setflags(write=False)
        mul.setflags(write=False)
        self.size = int(add.shape[0])
        self.add_table = add
        self.mul_table = mul
        self.zero = int(zero)
        self.one = int(one)
        self.label = label
        self.names = tuple(names) if names is not None else None
        self.structure = structure
        self._add = add.tolist()
        self._mul = mul.tolist()
        self._memo: dict = {}

    # -- arithmetic -----------------------------------------------------
    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._negs[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._negs[b]]

    def prod(self, xs: Iterable[int]) -> int:
        acc = self.one
        for x in xs:
            acc = self._mul[acc][x]
        return acc

    @property
    def _negs(self) -> list[int]:
        negs = self._memo.get("negs")
        if negs is None:
            negs = [row.index(self.zero) for row in self._add]
            self._memo["negs"] = negs
        return negs

    @property
    def elements(self) -> range:
        return range(self.size)

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, size={self.size})"

    def name(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    # -- identity ---------------------------------------------------------
    @property
    def digest(self) -> str:
        """SHA-256 of the canonical table serialisation (label excluded)."""
        d = self._memo.get("digest")
        if d is None:
            h = hashlib.sha256()
            h.update(f"{self.size} {self.zero} {self.one}\n".encode())
            h.update(self.add_table.astype("<i4").tobytes())
            h.update(self.mul_table.astype("<i4").tobytes())
            d = h.hexdigest()
            self._memo["digest"] = d
        return d

    @property
    def is_commutative(self) -> bool:
        return bool((self.mul_table == self.mul_table.T).all())

    def memo(self, key, compute: Callable):
        """Per-instance memoisation for derived immutable data."""
        try:
            return self._memo[key]
        except KeyError:
            value = compute()
            self._memo[key] = value
            return value

    # -- one-sided multiples as bitmasks ----------------------------------
    @property
    def left_multiple_masks(self) -> list[int]:
        """``[mask(R*s) for s]``."""
        def compute():
            cols = self.mul_table.T.tolist()
            return [mask_of(col) for col in cols]
        return self.memo("left_multiples", compute)

    @property
    def right_multiple_masks(self) -> list[int]:
        """``[mask(s*R) for s]``."""
        return self.memo("right_multiples", lambda: [mask_of(row) for row in self._mul])

    @property
    def right_annihilator_masks(self) -> list[int]:
        """``[mask{r : s r = 0} for s]``."""
        z = self.zero
        return self.memo(
            "rann", lambda: [mask_of(r for r, v in enumerate(row) if v == z) for row in self._mul]
        )

    @property
    def left_annihilator_masks(self) -> list[int]:
        """``[mask{r : r s = 0} for s]``."""
        z = self.zero
        cols = self.mul_table.T.tolist()
        return self.memo(
            "lann", lambda: [mask_of(r for r, v in enumerate(col) if v == z) for col in cols]
        )


def validate_ring_axioms(R: FiniteRing) -> Verdict:
    return validate_tables(R.add_table, R.mul_table, R.zero, R.one)


# --------------------------------------------------------------------------
# ideals and ring maps
# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Ideal:
    ring: FiniteRing
    members: frozenset
    sidedness: str = "two-sided"

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        if isinstance(other, Ideal):
            return self.members == other.members
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.members)

    @property
    def is_zero(self) -> bool:
        return self.members == {self.ring.zero}

    @property
    def mask(self) -> int:
        return mask_of(self.members)


def ideal_violation(R: FiniteRing, members: Iterable[int], sidedness: str = "two-sided") -> str | None:
    """Reason ``members`` is not an ideal of the given sidedness, or None."""
    if sidedness not in SIDEDNESS:
        raise ValueError(f"unknown sidedness {sidedness!r}")
    S = set(members)
    if R.zero not in S:
        return "does not contain zero"
    for a in S:
        if R.neg(a) not in S:
            return f"not closed under negation at {a}"
        for b in S:
            if R.add(a, b) not in S:
                return f"not closed under addition: {a}+{b}"
    for a in S:
        for r in R.elements:
            if sidedness in ("left", "two-sided") and R.mul(r, a) not in S:
                return f"does not absorb {r}*{a} on the left"
            if sidedness in ("right", "two-sided") and R.mul(a, r) not in S:
                return f"does not absorb {a}*{r} on the right"
    return None


def make_ideal(R: FiniteRing, members: Iterable[int], sidedness: str = "two-sided") -> Ideal:
    members = frozenset(members)
    why = ideal_violation(R, members, sidedness)
    if why is not None:
        raise InvalidIdealError(f"not a {sidedness} ideal of {R.label}: {why}")
    return Ideal(R, members, sidedness)


def zero_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, frozenset({R.zero}))


def additive_closure(R: FiniteRing, gens: Iterable[int]) -> frozenset:
    span = {R.zero}
    frontier = list(set(gens) - span)
    span.update(frontier)
    while frontier:
        new = []
        for g in frontier:
            for s in list(span):
                t = R.add(g, s)
                if t not in span:
                    span.add(t)
                    new.append(t)
        frontier = new
    return frozenset(span)


def principal_right_ideal(R: FiniteRing, x: int) -> frozenset:
    """The set ``xR``."""
    return frozenset(R.mul(x, r) for r in R.elements)


def two_sided_ideal_generated(R: FiniteRing, gens: Iterable[int]) -> Ideal:
    prods = {R.mul(R.mul(a, g), b) for g in gens for a in R.elements for b in R.elements}
    return Ideal(R, additive_closure(R, prods))


@dataclass(frozen=True, eq=False)
class RingMap:
    """An element-indexed map ``image[x]`` from ``source`` to ``target``."""

    source: FiniteRing
    target: FiniteRing
    image: tuple
    unital: bool = True

    def __call__(self, x: int) -> int:
        return self.image[x]

    def verify(self) -> Verdict:
        S, T, f = self.source, self.target, self.image
        name = "ring_map"
        if len(f) != S.size:
            return Verdict.failed(name, f"image has length {len(f)}, source size {S.size}")
        if any(not (0 <= y < T.size) for y in f):
            return Verdict.failed(name, "image entry out of target range")
        if f[S.zero] != T.zero:
            return Verdict.failed(name, "zero not preserved")
        if self.unital and f[S.one] != T.one:
            return Verdict.failed(name, "one not preserved")
        for a in S.elements:
            fa = f[a]
            for b in S.elements:
                if f[S.add(a, b)] != T.add(fa, f[b]):
                    return Verdict.failed(name, f"addition not preserved at ({a}, {b})")
                if f[S.mul(a, b)] != T.mul(fa, f[b]):
                    return Verdict.failed(name, f"multiplication not preserved at ({a}, {b})")
        return Verdict.passed(name)

    def kernel(self) -> frozenset:
        z = self.target.zero
        return frozenset(x for x, y in enumerate(self.image) if y == z)

    def image_set(self, xs: Iterable[int] | None = None) -> frozenset:
        if xs is None:
            return frozenset(self.image)
        return frozenset(self.image[x] for x in xs)

    def preimage(self, ys: Iterable[int]) -> frozenset:
        ys = set(ys)
        return frozenset(x for x, y in enumerate(self.image) if y in ys)

    @property
    def is_injective(self) -> bool:
        return len(set(self.image)) == len(self.image)

    @property
    def is_surjective(self) -> bool:
        return len(set(self.image)) == self.target.size

    def is_isomorphism(self) -> bool:
        return self.is_injective and self.is_surjective and self.verify().ok

    def compose(self, first: "RingMap") -> "RingMap":
        """``self ∘ first``."""
        if first.target is not self.source and first.target.digest != self.source.digest:
            raise RingMapError("maps are not composable")
        return RingMap(first.source, self.target, tuple(self.image[y] for y in first.image),
                       self.unital and first.unital)


def identity_map(R: FiniteRing) -> RingMap:
    return RingMap(R, R, tuple(R.elements))


def checked_map(source: FiniteRing, target: FiniteRing, image: Sequence[int], unital: bool = True) -> RingMap:
    f = RingMap(source, target, tuple(int(y) for y in image), unital)
    v = f.verify()
    if not v.ok:
        raise RingMapError(f"{source.label} -> {target.label}: {v.detail}")
    return f


# --------------------------------------------------------------------------
# constructors
# --------------------------------------------------------------------------


def make_cyclic_ring(n: int) -> FiniteRing:
    """The ring of integers modulo ``n``."""
    if n < 2:
        raise InvalidSizeError(f"Z/{n} is not allowed: size must be at least 2")
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return FiniteRing(add, mul, 0, 1, label=f"Z/{n}")


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise InvalidSizeError(f"no field of order {q}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, m = 0, q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise InvalidSizeError(f"{q} is not a prime power")
    return p, k


def _polymod(a: list[int], f: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo monic ``f``; coefficient lists low-degree first."""
    a = [c % p for c in a]
    d = len(f) - 1
    while len(a) > d:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - d
            for i, c in enumerate(f):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    return a + [0] * (d - len(a))


def _is_irreducible(f: list[int], p: int) -> bool:
    d = len(f) - 1
    for deg in range(1, d // 2 + 1):
        for coeffs in product(range(p), repeat=deg):
            g = list(coeffs) + [1]
            if not any(_polymod(f, g, p)):
                return False
    return True


def make_finite_field(q: int) -> FiniteRing:
    """GF(q) for a prime power ``q``; elements encode polynomial coefficients in base p."""
    p, k = _factor_prime_power(q)
    if k == 1:
        R = make_cyclic_ring(p)
        R.label = f"F_{p}"
        return R
    modulus = None
    for coeffs in product(range(p), repeat=k):
        f = list(reversed(coeffs)) + [1]
        if f[0] and _is_irreducible(f, p):
            modulus = f
            break
    assert modulus is not None

    def digits(x):
        return [(x // p**i) % p for i in range(k)]

    def number(ds):
        return sum(c * p**i for i, c in enumerate(ds))

    add = [[number([(u + v) % p for u, v in zip(digits(a), digits(b))]) for b in range(q)] for a in range(q)]
    mul = []
    for a in range(q):
        da = digits(a)
        row = []
        for b in range(q):
            db = digits(b)
            prod_ = [0] * (2 * k - 1)
            for i, u in enumerate(da):
                for j, v in enumerate(db):
                    prod_[i + j] += u * v
            row.append(number(_polymod(prod_, modulus, p)))
        mul.append(row)
    return FiniteRing(add, mul, 0, 1, label=f"F_{q}")


def _shape_positions(n: int, shape: str) -> tuple[tuple[int, int], ...]:
    if shape == "full":
        keep = lambda i, j: True
    elif shape == "lower":
        keep = lambda i, j: i >= j
    elif shape == "upper":
        keep = lambda i, j: i <= j
    else:
        raise RingError(f"unknown matrix shape {shape!r}")
    return tuple((i, j) for i in range(n) for j in range(n) if keep(i, j))


def make_matrix_ring(
    base: FiniteRing,
    n: int,
    shape: str = "full",
    cap: int = DEFAULT_SIZE_CAP,
    allow_large: bool = False,
) -> FiniteRing:
    """Full, lower- or upper-triangular ``n×n`` matrices over ``base``."""
    if n < 1:
        raise InvalidSizeError("matrix size must be at least 1")
    positions = _shape_positions(n, shape)
    q = base.size
    size = q ** len(positions)
    if size > cap and not allow_large:
        raise CapacityError(f"{shape} {n}x{n} matrices over {base.label} have {size} elements, cap is {cap}")
    badd, bmul, z = base._add, base._mul, base.zero
    elems = list(product(range(q), repeat=len(positions)))

    def as_matrix(e):
        M = [[z] * n for _ in range(n)]
        for (i, j), v in zip(positions, e):
            M[i][j] = v
        return M

    mats = [as_matrix(e) for e in elems]
    weights = [q ** (len(positions) - 1 - k) for k in range(len(positions))]
    add = [[0] * size for _ in range(size)]
    mul = [[0] * size for _ in range(size)]
    for a, A in enumerate(elems):
        MA = mats[a]
        for b, B in enumerate(elems):
            add[a][b] = sum(badd[u][v] * w for u, v, w in zip(A, B, weights))
            MB = mats[b]
            idx = 0
            for (i, j), w in zip(positions, weights):
                acc = z
                for k in range(n):
                    acc = badd[acc][bmul[MA[i][k]][MB[k][j]]]
                idx += acc * w
            mul[a][b] = idx
    one_entries = [base.one if i == j else z for i, j in positions]
    one = sum(v * w for v, w in zip(one_entries, weights))
    names = []
    for M in mats:
        names.append("[" + ",".join("[" + ",".join(base.name(v) for v in row) + "]" for row in M) + "]")
    prefix = {"full": "M", "lower": "L", "upper": "U"}[shape]
    structure = MatrixStructure(base, n, shape, positions)
    return FiniteRing(add, mul, 0, one, label=f"{prefix}{n}({base.label})", names=names,
                      structure=structure, check=size <= 64)


def direct_product(factors: Sequence[FiniteRing], cap: int = DEFAULT_SIZE_CAP, allow_large: bool = False) -> FiniteRing:
    """Componentwise product; element index is mixed-radix, first factor most significant."""
    factors = tuple(factors)
    if len(factors) < 2:
        raise ArityError("a direct product needs at least two factors")
    size = 1
    for f in factors:
        size *= f.size
    if size > cap and not allow_large:
        raise CapacityError(f"product has {size} elements, cap is {cap}")
    st = ProductStructure(factors)
    comps = [st.components(x) for x in range(size)]
    add = np.zeros((size, size), dtype=np.int64)
    mul = np.zeros((size, size), dtype=np.int64)
    # radix weights
    weights = []
    w = 1
    for f in reversed(factors):
        weights.append(w)
        w *= f.size
    weights = list(reversed(weights))
    for i, f in enumerate(factors):
        c = np.array([cs[i] for cs in comps])
        add += f.add_table[c[:, None], c[None, :]] * weights[i]
        mul += f.mul_table[c[:, None], c[None, :]] * weights[i]
    zero = st.index_of([f.zero for f in factors])
    one = st.index_of([f.one for f in factors])
    names = None
    if any(f.names for f in factors):
        names = ["(" + ",".join(f.name(v) for f, v in zip(factors, cs)) + ")" for cs in comps]
    else:
        names = ["(" + ",".join(str(v) for v in cs) + ")" for cs in comps]
    label = " x ".join(f.label if " x " not in f.label else f"({f.label})" for f in factors)
    return FiniteRing(add, mul, zero, one, label=label, names=names, structure=st, check=False)


def product_projections(R: FiniteRing) -> list[RingMap]:
    st = R.structure
    if not isinstance(st, ProductStructure):
        raise RingError(f"{R.label} was not built as a direct product")
    comps = [st.components(x) for x in R.elements]
    return [RingMap(R, f, tuple(c[i] for c in comps)) for i, f in enumerate(st.factors)]


def product_injections(R: FiniteRing) -> list[RingMap]:
    """Component injections; these preserve 0, + and × but not 1."""
    st = R.structure
    if not isinstance(st, ProductStructure):
        raise RingError(f"{R.label} was not built as a direct product")
    maps = []
    for i, f in enumerate(st.factors):
        img = []
        for x in f.elements:
            comps = [g.zero for g in st.factors]
            comps[i] = x
            img.append(st.index_of(comps))
        maps.append(RingMap(f, R, tuple(img), unital=False))
    return maps


def quotient_ring(R: FiniteRing, I: Ideal | Iterable[int]) -> tuple[FiniteRing, RingMap]:
    """``R/I`` with cosets ordered by least representative, and the projection."""
    members = frozenset(I.members if isinstance(I, Ideal) else I)
    why = ideal_violation(R, members, "two-sided")
    if why is not None:
        raise InvalidIdealError(f"cannot form quotient of {R.label}: {why}")
    if R.one in members:
        raise InvalidIdealError(f"cannot form quotient of {R.label}: ideal contains one")
    coset_of = [min(R.add(x, i) for i in members) for x in R.elements]
    reps = sorted(set(coset_of))
    pos = {r: k for k, r in enumerate(reps)}
    proj = tuple(pos[c] for c in coset_of)
    add = [[proj[R.add(a, b)] for b in reps] for a in reps]
    mul = [[proj[R.mul(a, b)] for b in reps] for a in reps]
    if len(members) == 1:
        label = R.label
    else:
        label = f"{R.label}/I{len(members)}"
    names = ["[" + R.name(r) + "]" for r in reps] if len(members) > 1 else R.names
    Q = FiniteRing(add, mul, proj[R.zero], proj[R.one], label=label, names=names,
                   structure=QuotientStructure(R, members, tuple(reps)), check=False)
    pi = RingMap(R, Q, proj)
    return Q, pi


def opposite_ring(R: FiniteRing) -> FiniteRing:
    """Same additive group, multiplication ``a*b := b·a``."""
    def compute():
        if isinstance(R.structure, OppositeStructure):
            return R.structure.parent
        label = R.label[:-3] if R.label.endswith("^op") else f"{R.label}^op"
        return FiniteRing(R.add_table, R.mul_table.T, R.zero, R.one, label=label, names=R.names,
                          structure=OppositeStructure(R), check=False)
    return R.memo("opposite", compute)


# --------------------------------------------------------------------------
# elementary invariants
# --------------------------------------------------------------------------


def units(R: FiniteRing) -> frozenset:
    """Two-sided invertible elements."""
    def compute():
        one = R.one
        return frozenset(
            x for x in R.elements
            if any(R._mul[x][y] == one and R._mul[y][x] == one for y in R.elements)
        )
    return R.memo("units", compute)


def inverse(R: FiniteRing, x: int) -> int:
    table = R.memo("inverses", lambda: {u: next(y for y in R.elements if R._mul[u][y] == R.one)
                                        for u in units(R)})
    try:
        return table[x]
    except KeyError:
        raise RingError(f"{R.name(x)} is not a unit of {R.label}") from None


def left_invertible_elements(R: FiniteRing) -> frozenset:
    """Elements ``z`` with ``yz = 1`` for some ``y``."""
    def compute():
        return frozenset(z for z in R.elements if any(R._mul[y][z] == R.one for y in R.elements))
    return R.memo("left_invertible", compute)


def left_regular_elements(R: FiniteRing) -> frozenset:
    """Elements ``c`` with ``ker(r ↦ rc) = 0``."""
    def compute():
        lann = R.left_annihilator_masks
        zm = 1 << R.zero
        return frozenset(c for c in R.elements if lann[c] == zm)
    return R.memo("left_regular", compute)


def right_regular_elements(R: FiniteRing) -> frozenset:
    def compute():
        rann = R.right_annihilator_masks
        zm = 1 << R.zero
        return frozenset(c for c in R.elements if rann[c] == zm)
    return R.memo("right_regular", compute)


def regular_elements(R: FiniteRing) -> frozenset:
    """Non-zero-divisors on both sides."""
    return R.memo("regular", lambda: left_regular_elements(R) & right_regular_elements(R))


def check_unit_coincidence(R: FiniteRing) -> Verdict:
    """In a finite ring units, regular and left regular elements coincide."""
    u, c, lc = units(R), regular_elements(R), left_regular_elements(R)
    if u == c == lc:
        return Verdict.passed("units_regular_coincide")
    return Verdict.failed("units_regular_coincide",
                          f"units={sorted(u)} regular={sorted(c)} left_regular={sorted(lc)}")


def jacobson_radical(R: FiniteRing) -> Ideal:
    """``{x : 1 - r x is left invertible for every r}``."""
    def compute():
        linv = left_invertible_elements(R)
        members = frozenset(
            x for x in R.elements
            if all(R.sub(R.one, R._mul[r][x]) in linv for r in R.elements)
        )
        why = ideal_violation(R, members)
        if why is not None:
            raise InternalConsistencyError(f"radical of {R.label} is not an ideal: {why}")
        return Ideal(R, members)
    return R.memo("radical", compute)


def nilpotent_ideal_witness(R: FiniteRing) -> int | None:
    """A nonzero ``x`` whose two-sided ideal ``RxR`` squares to zero, if any.

    Every nonzero ideal with zero square contains such a principal ideal, so
    this scan decides semiprimeness.
    """
    z = R.zero
    for x in R.elements:
        if x == z:
            continue
        I = two_sided_ideal_generated(R, [x]).members
        if all(R._mul[a][b] == z for a in I for b in I):
            return x
    return None


def is_semisimple(R: FiniteRing) -> bool:
    return jacobson_radical(R).is_zero


def is_semiprime(R: FiniteRing) -> bool:
    def compute():
        direct = nilpotent_ideal_witness(R) is None
        if direct != is_semisimple(R):
            raise InternalConsistencyError(
                f"{R.label}: semiprime scan ({direct}) disagrees with radical test ({not direct})"
            )
        return direct
    return R.memo("semiprime", compute)


def idempotents(R: FiniteRing) -> tuple[int, ...]:
    return R.memo("idempotents", lambda: tuple(x for x in R.elements if R._mul[x][x] == x))


def central_idempotents(R: FiniteRing) -> tuple[int, ...]:
    def compute():
        return tuple(
            x for x in idempotents(R)
            if all(R._mul[x][r] == R._mul[r][x] for r in R.elements)
        )
    return R.memo("central_idempotents", compute)


def preimage_mask(f: RingMap, ys: Iterable[int]) -> int:
    return mask_of(f.preimage(ys))


def set_names(R: FiniteRing, xs: Iterable[int]) -> list[str]:
    return [R.name(x) for x in sorted(xs)]


def unit_group_verdict(R: FiniteRing) -> Verdict:
    """Units are closed under product and inverses."""
    U = units(R)
    for a in U:
        if inverse(R, a) not in U:
            return Verdict.failed("unit_group", f"inverse of {a} not a unit")
        for b in U:
            if R.mul(a, b) not in U:
                return Verdict.failed("unit_group", f"{a}*{b} not a unit")
    return Verdict.passed("unit_group")
