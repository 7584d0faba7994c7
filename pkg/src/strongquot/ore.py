"""Multiplicative sets, the Ore and denominator conditions, and catalogs of denominator sets."""
from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from ._bits import canonical_key, is_subset, mask_of, members_of
from .errors import (
    CapacityError,
    InternalConsistencyError,
    InvalidDenominatorError,
    NoSuchAssError,
    NotMultiplicativeError,
    NotOreError,
    ZeroAbsorbedError,
)
from .ring import FiniteRing, Ideal, ideal_violation, units

DEFAULT_CAP = 64
SIDES = ("left", "right", "both")


def _check_side(side: str) -> str:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    return side


# --------------------------------------------------------------------------
# elementwise conditions (direct scans, no opposite-ring trick)
# --------------------------------------------------------------------------


def left_ore_witness(R: FiniteRing, S: Iterable[int]) -> tuple[int, int] | None:
    """A pair ``(r, s)`` with ``Sr ∩ Rs = ∅``, or None."""
    S = sorted(S)
    lm = R.left_multiple_masks
    for r in R.elements:
        sr = mask_of(R.mul(t, r) for t in S)
        for s in S:
            if not sr & lm[s]:
                return r, s
    return None


def right_ore_witness(R: FiniteRing, S: Iterable[int]) -> tuple[int, int] | None:
    """A pair ``(r, s)`` with ``rS ∩ sR = ∅``, or None."""
    S = sorted(S)
    rm = R.right_multiple_masks
    for r in R.elements:
        rs = mask_of(R.mul(r, t) for t in S)
        for s in S:
            if not rs & rm[s]:
                return r, s
    return None


def left_kill_witness(R: FiniteRing, S: Iterable[int]) -> tuple[int, int] | None:
    """A pair ``(r, s)`` with ``rs = 0`` but ``tr ≠ 0`` for all ``t ∈ S``."""
    S = sorted(S)
    z = R.zero
    for s in S:
        for r in R.elements:
            if R.mul(r, s) == z and all(R.mul(t, r) != z for t in S):
                return r, s
    return None


def right_kill_witness(R: FiniteRing, S: Iterable[int]) -> tuple[int, int] | None:
    S = sorted(S)
    z = R.zero
    for s in S:
        for r in R.elements:
            if R.mul(s, r) == z and all(R.mul(r, t) != z for t in S):
                return r, s
    return None


def left_ass(R: FiniteRing, S: Iterable[int]) -> frozenset:
    """``{r : sr = 0 for some s ∈ S}``."""
    rann = R.right_annihilator_masks
    m = 0
    for s in S:
        m |= rann[s]
    return members_of(m)


def right_ass(R: FiniteRing, S: Iterable[int]) -> frozenset:
    lann = R.left_annihilator_masks
    m = 0
    for s in S:
        m |= lann[s]
    return members_of(m)


def multiplicative_violation(R: FiniteRing, members: Iterable[int]) -> str | None:
    S = set(members)
    if any(not 0 <= x < R.size for x in S):
        return "element out of range"
    if R.one not in S:
        return "does not contain one"
    if R.zero in S:
        return "contains zero"
    for a in S:
        for b in S:
            if R.mul(a, b) not in S:
                return f"not closed: {a}*{b} = {R.mul(a, b)}"
    return None


# --------------------------------------------------------------------------
# MultSet
# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class MultSet:
    """A multiplicative subset ``S`` (``1 ∈ S``, ``0 ∉ S``, ``SS ⊆ S``)."""

    ring: FiniteRing
    members: frozenset
    side: str = "left"

    def __post_init__(self):
        _check_side(self.side)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __eq__(self, other) -> bool:
        if isinstance(other, MultSet):
            return self.members == other.members
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        return f"MultSet({sorted(self.members)}, side={self.side!r})"

    def issubset(self, other) -> bool:
        return self.members <= frozenset(other)

    @cached_property
    def mask(self) -> int:
        return mask_of(self.members)

    def with_side(self, side: str) -> "MultSet":
        return MultSet(self.ring, self.members, side)

    @cached_property
    def ore_witness(self) -> tuple[int, int] | None:
        R = self.ring
        if self.side in ("left", "both"):
            w = left_ore_witness(R, self.members)
            if w is not None or self.side == "left":
                return w
        return right_ore_witness(R, self.members)

    @property
    def is_ore(self) -> bool:
        return self.ore_witness is None

    @cached_property
    def kill_witness(self) -> tuple[int, int] | None:
        R = self.ring
        if self.side in ("left", "both"):
            w = left_kill_witness(R, self.members)
            if w is not None or self.side == "left":
                return w
        return right_kill_witness(R, self.members)

    @property
    def is_denominator(self) -> bool:
        return self.is_ore and self.kill_witness is None

    @cached_property
    def ass(self) -> Ideal:
        """The kernel of localization at ``S``; refuses non-Ore sets."""
        if not self.is_ore:
            raise NotOreError(f"{sorted(self.members)} is not {self.side} Ore", self.ore_witness)
        R = self.ring
        if self.side == "right":
            members = right_ass(R, self.members)
        else:
            members = left_ass(R, self.members)
            if self.side == "both" and right_ass(R, self.members) != members:
                if self.is_denominator:
                    raise InternalConsistencyError("left and right ass differ on a two-sided denominator set")
        if self.is_denominator:
            why = ideal_violation(R, members, "two-sided")
            if why is not None:
                raise InternalConsistencyError(f"ass{sorted(self.members)} is not an ideal: {why}")
        return Ideal(R, members, "two-sided" if self.is_denominator else "left")


def make_multset(R: FiniteRing, members: Iterable[int], side: str = "left") -> MultSet:
    members = frozenset(int(x) for x in members)
    why = multiplicative_violation(R, members)
    if why is not None:
        raise NotMultiplicativeError(f"{sorted(members)} is not multiplicative: {why}")
    return MultSet(R, members, _check_side(side))


def monoid_closure(R: FiniteRing, generators: Iterable[int], side: str = "left") -> MultSet:
    """The submonoid generated by ``generators``; raises when it contains zero."""
    gens = sorted(set(generators))
    z = R.zero
    if z in gens:
        raise ZeroAbsorbedError("generators contain zero", (z,))
    members = [R.one] + [g for g in gens if g != R.one]
    seen = set(members)
    ptr = 0
    while ptr < len(members):
        y = members[ptr]
        ptr += 1
        for x in list(members):
            for a, b in ((x, y), (y, x)):
                p = R.mul(a, b)
                if p == z:
                    raise ZeroAbsorbedError(f"closure of {gens} contains zero: {a}*{b} = 0", (a, b))
                if p not in seen:
                    seen.add(p)
                    members.append(p)
    return MultSet(R, frozenset(members), _check_side(side))


def denominator_product(R: FiniteRing, S: MultSet, T: MultSet) -> MultSet:
    """The submonoid ``ST``; when it avoids zero it must again be a denominator set."""
    side = S.side
    prod = monoid_closure(R, S.members | T.members, side)
    if S.is_denominator and T.is_denominator and not prod.is_denominator:
        raise InternalConsistencyError(
            f"product of denominator sets {sorted(S)} and {sorted(T)} avoids 0 but is not a denominator set"
        )
    return prod


def join(R: FiniteRing, sets: Sequence[MultSet], side: str = "left") -> MultSet:
    """Least upper bound ``∨ S_i``: the submonoid generated by the union."""
    gens: set[int] = set()
    for S in sets:
        gens |= S.members
    return monoid_closure(R, gens or {R.one}, side)


# --------------------------------------------------------------------------
# the lattice of zero-free submonoids, shared between R and R^op
# --------------------------------------------------------------------------


class SubmonoidLattice:
    """Every submonoid of ``(R,·)`` missing zero, with a closure transition table."""

    def __init__(self, R: FiniteRing, use_numba: bool = True):
        masks, parent, gen, trans = _kernels.submonoid_lattice(R.mul_table, R.zero, R.one, use_numba)
        self.size = R.size
        self.masks: list[int] = masks
        self.parent = parent
        self.gen = gen
        self.trans = trans
        self.index = {m: i for i, m in enumerate(masks)}

    def __len__(self) -> int:
        return len(self.masks)

    @cached_property
    def chains(self) -> np.ndarray:
        return _kernels.generator_chains(self.parent, self.gen)

    def join(self, a: int, b: int) -> int:
        return _kernels.join_id(self.trans, self.chains, a, b)


_LATTICES: dict[str, SubmonoidLattice] = {}


def _symmetric_key(R: FiniteRing) -> str:
    a = R.mul_table.astype("<i4").tobytes()
    b = np.ascontiguousarray(R.mul_table.T).astype("<i4").tobytes()
    h = hashlib.sha256(f"{R.size} {R.zero} {R.one}".encode())
    h.update(min(a, b))
    return h.hexdigest()


def submonoid_lattice(R: FiniteRing) -> SubmonoidLattice:
    key = _symmetric_key(R)
    lat = _LATTICES.get(key)
    if lat is None:
        lat = SubmonoidLattice(R)
        _LATTICES[key] = lat
    return lat


# --------------------------------------------------------------------------
# catalogs
# --------------------------------------------------------------------------


@dataclass
class PairScan:
    violations: int
    witness: tuple[frozenset, frozenset] | None
    criterion_maximal: tuple[int, ...]   # catalog positions


@dataclass
class DenominatorCatalog:
    """Denominator sets of one side, in canonical order (size, then members)."""

    ring: FiniteRing
    side: str
    masks: list[int]
    ass_masks: list[int]
    exhaustive: bool
    explored: int
    lattice_ids: list[int] | None = None
    _pairs: PairScan | None = field(default=None, repr=False)
    pairs_path: Path | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.masks)

    @cached_property
    def maximal_positions(self) -> tuple[int, ...]:
        order = sorted(range(len(self.masks)), key=lambda i: -len(members_of(self.masks[i])))
        found: list[int] = []
        for i in order:
            m = self.masks[i]
            if not any(is_subset(m, self.masks[j]) for j in found):
                found.append(i)
        return tuple(sorted(found))

    @property
    def sets(self) -> list[MultSet]:
        return [MultSet(self.ring, members_of(m), self.side) for m in self.masks]

    @property
    def maximal_sets(self) -> list[MultSet]:
        return [MultSet(self.ring, members_of(self.masks[i]), self.side) for i in self.maximal_positions]

    def ass_of(self, position: int) -> Ideal:
        return Ideal(self.ring, members_of(self.ass_masks[position]))

    @property
    def ass_ideals(self) -> list[frozenset]:
        """Distinct ass ideals, in canonical order."""
        return [members_of(m) for m in sorted(set(self.ass_masks), key=canonical_key)]

    def position(self, members: Iterable[int]) -> int | None:
        try:
            return self.masks.index(mask_of(members))
        except ValueError:
            return None

    @cached_property
    def _scan_key(self) -> tuple[str, str]:
        # a scan depends only on the submonoid lattice and on which sets are denominator sets,
        # so R and R^op (whose lattices coincide) share scans of equal catalogs
        h = hashlib.sha256()
        for m in self.masks:
            h.update(format(m, "x").encode() + b",")
        return _symmetric_key(self.ring), h.hexdigest()

    def _ids(self) -> list[int]:
        if self.lattice_ids is None:
            lat = submonoid_lattice(self.ring)
            self.lattice_ids = [lat.index[m] for m in self.masks]
        return self.lattice_ids

    def criterion_violation(self, position: int) -> frozenset | None:
        """A catalog set ``T ⊄ S`` with ``0 ∉ ST`` for ``S`` at ``position``, if there is one."""
        if not self.exhaustive:
            raise CapacityError("the maximality criterion needs an exhaustive catalog")
        lat = submonoid_lattice(self.ring)
        ids = self._ids()
        b = _kernels.row_scan(lat.trans, lat.chains, ids[position], np.array(ids, np.int64))
        return None if b < 0 else members_of(self.masks[b])

    def pair_scan(self) -> PairScan:
        """Products of all pairs: closure soundness of ``ST`` and the 0∈ST maximality test."""
        if self._pairs is not None:
            return self._pairs
        key = self._scan_key
        shared = _SCANS.get(key)
        if shared is not None:
            self._pairs = shared
            return shared
        if not self.exhaustive:
            raise CapacityError("pair scan needs an exhaustive catalog")
        if self.pairs_path is not None and self.pairs_path.exists():
            loaded = _load_pairs(self.pairs_path, self)
            if loaded is not None:
                self._pairs = loaded
                _SCANS[key] = loaded
                return loaded
        lat = submonoid_lattice(self.ring)
        ids = self._ids()
        is_den = np.zeros(len(lat), np.bool_)
        is_den[ids] = True
        bad, bs, bt, has_ext = _kernels.pair_scan(lat.trans, lat.chains, np.array(ids, np.int64), is_den)
        witness = None
        if bad:
            witness = (members_of(lat.masks[bs]), members_of(lat.masks[bt]))
        crit = tuple(i for i in range(len(ids)) if not has_ext[i])
        self._pairs = PairScan(int(bad), witness, crit)
        _SCANS[key] = self._pairs
        if self.pairs_path is not None:
            _store_pairs(self.pairs_path, self, self._pairs)
        return self._pairs


# Results below depend only on the tables, so rings with equal digests share them.
_SCANS: dict[tuple[str, str], PairScan] = {}   # (lattice key, catalog hash)
_CATALOGS: dict[tuple[str, str, bool], tuple] = {}


def clear_caches() -> None:
    _SCANS.clear()
    _CATALOGS.clear()
    _LATTICES.clear()


def _transpose(R: FiniteRing) -> np.ndarray:
    return np.ascontiguousarray(R.mul_table.T)


def _exhaustive_catalog(R: FiniteRing, side: str) -> DenominatorCatalog:
    lat = submonoid_lattice(R)
    masks = lat.masks
    if side in ("left", "both"):
        _, den_l, ass_l = _kernels.denominator_flags(R.mul_table, R.zero, masks)
    if side in ("right", "both"):
        _, den_r, ass_r = _kernels.denominator_flags(_transpose(R), R.zero, masks)
    if side == "left":
        den, ass = den_l, ass_l
    elif side == "right":
        den, ass = den_r, ass_r
    else:
        den = den_l & den_r
        ass = ass_l
        for i in np.nonzero(den)[0]:
            if ass_l[i] != ass_r[i]:
                raise InternalConsistencyError(
                    f"two-sided denominator set {sorted(members_of(masks[i]))} has different left and right ass"
                )
    ids = sorted((int(i) for i in np.nonzero(den)[0]), key=lambda i: canonical_key(masks[i]))
    return DenominatorCatalog(R, side, [masks[i] for i in ids], [ass[i] for i in ids],
                              exhaustive=True, explored=len(masks), lattice_ids=ids)


def _is_denominator_mask(R: FiniteRing, members: frozenset, side: str) -> bool:
    return MultSet(R, members, side).is_denominator


def _partial_catalog(R: FiniteRing, side: str) -> DenominatorCatalog:
    """Closures of single elements and pairs, each also with the units adjoined."""
    U = units(R)
    candidates: set[frozenset] = set()
    elems = [x for x in R.elements if x != R.zero]
    gensets: list[set[int]] = [set()]
    gensets += [{x} for x in elems]
    gensets += [{x, y} for i, x in enumerate(elems) for y in elems[i + 1:]]
    explored = 0
    for g in gensets:
        for base in (g, g | U):
            try:
                S = monoid_closure(R, base or {R.one}, side)
            except ZeroAbsorbedError:
                continue
            explored += 1
            candidates.add(S.members)
    found = [m for m in candidates if _is_denominator_mask(R, m, side)]
    found.sort(key=lambda m: (len(m), sorted(m)))
    masks = [mask_of(m) for m in found]
    ass = []
    for m in found:
        a = right_ass(R, m) if side == "right" else left_ass(R, m)
        ass.append(mask_of(a))
    return DenominatorCatalog(R, side, masks, ass, exhaustive=False, explored=explored)


# on-disk cache -------------------------------------------------------------

CACHE_ENV = "STRONGQUOT_CACHE"
_CACHE_SCHEMA = 1


def _cache_file(cache_dir: str | os.PathLike, R: FiniteRing, side: str, exhaustive: bool) -> Path:
    tag = "full" if exhaustive else "partial"
    return Path(cache_dir) / f"{R.digest}-{side}-{tag}.json"


def _load_cached(path: Path, R: FiniteRing, side: str) -> DenominatorCatalog | None:
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if data.get("schema") != _CACHE_SCHEMA or data.get("digest") != R.digest or data.get("side") != side:
        return None
    return DenominatorCatalog(
        R, side,
        [int(h, 16) for h in data["masks"]],
        [int(h, 16) for h in data["ass"]],
        exhaustive=bool(data["exhaustive"]),
        explored=int(data["explored"]),
    )


def _store_cached(path: Path, cat: DenominatorCatalog) -> None:
    data = {
        "schema": _CACHE_SCHEMA,
        "digest": cat.ring.digest,
        "side": cat.side,
        "exhaustive": cat.exhaustive,
        "explored": cat.explored,
        "masks": [format(m, "x") for m in cat.masks],
        "ass": [format(m, "x") for m in cat.ass_masks],
    }
    _atomic_write(path, data)


def _atomic_write(path: Path, data: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(f"{path.name}.{os.getpid()}.tmp")
    tmp.write_text(json.dumps(data))
    os.replace(tmp, path)


def _pairs_file(cache_dir: str | os.PathLike, R: FiniteRing, side: str) -> Path:
    return Path(cache_dir) / f"{R.digest}-{side}-pairs.json"


def _load_pairs(path: Path, cat: DenominatorCatalog) -> PairScan | None:
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if data.get("schema") != _CACHE_SCHEMA or data.get("digest") != cat.ring.digest \
            or data.get("catalog") != cat._scan_key[1]:
        return None
    w = data["witness"]
    witness = None if w is None else (members_of(int(w[0], 16)), members_of(int(w[1], 16)))
    return PairScan(int(data["violations"]), witness, tuple(data["criterion_maximal"]))


def _store_pairs(path: Path, cat: DenominatorCatalog, scan: PairScan) -> None:
    w = None if scan.witness is None else [format(mask_of(x), "x") for x in scan.witness]
    _atomic_write(path, {"schema": _CACHE_SCHEMA, "digest": cat.ring.digest, "side": cat.side, "catalog": cat._scan_key[1],
                         "violations": scan.violations, "witness": w,
                         "criterion_maximal": list(scan.criterion_maximal)})


def enumerate_denominator_sets(
    R: FiniteRing,
    side: str = "left",
    cap: int = DEFAULT_CAP,
    cache_dir: str | os.PathLike | None = None,
) -> DenominatorCatalog:
    """All denominator sets of ``R`` on ``side`` when ``|R| ≤ cap``, else a partial catalog."""
    _check_side(side)
    exhaustive = R.size <= cap
    key = ("catalog", side, exhaustive)
    cat = R._memo.get(key)
    if cat is not None:
        return cat
    path = _cache_file(cache_dir, R, side, exhaustive) if cache_dir else None
    shared = _CATALOGS.get((R.digest, side, exhaustive))
    if shared is not None:
        masks, ass, explored, ids = shared
        cat = DenominatorCatalog(R, side, list(masks), list(ass), exhaustive, explored,
                                 None if ids is None else list(ids))
    if cat is None and path is not None and path.exists():
        cat = _load_cached(path, R, side)
    if cat is None:
        cat = _exhaustive_catalog(R, side) if exhaustive else _partial_catalog(R, side)
    if path is not None and not path.exists():
        _store_cached(path, cat)
    _CATALOGS[(R.digest, side, exhaustive)] = (tuple(cat.masks), tuple(cat.ass_masks), cat.explored,
                                               None if cat.lattice_ids is None else tuple(cat.lattice_ids))
    if cache_dir and exhaustive:
        cat.pairs_path = _pairs_file(cache_dir, R, side)
    R._memo[key] = cat
    return cat


def enumerate_left_denominator_sets(R: FiniteRing, cap: int = DEFAULT_CAP, **kw) -> DenominatorCatalog:
    return enumerate_denominator_sets(R, "left", cap, **kw)


def exhaustive_catalog(R: FiniteRing, side: str = "left", cap: int = DEFAULT_CAP, **kw) -> DenominatorCatalog:
    cat = enumerate_denominator_sets(R, side, cap, **kw)
    if not cat.exhaustive:
        raise CapacityError(f"{R.label} has {R.size} elements, above the exhaustive cap {cap}")
    return cat


def max_denominator_sets(R: FiniteRing, side: str = "left", cap: int = DEFAULT_CAP, **kw) -> list[MultSet]:
    """The ⊆-maximal denominator sets, each re-certified by the ``0 ∈ ST`` criterion."""
    cat = exhaustive_catalog(R, side, cap, **kw)
    for i in cat.maximal_positions:
        T = cat.criterion_violation(i)
        if T is not None:
            raise InternalConsistencyError(
                f"{R.label}: inclusion-maximal {sorted(members_of(cat.masks[i]))} has a zero-free product "
                f"with {sorted(T)}"
            )
    return cat.maximal_sets


def max_left_denominator_sets(R: FiniteRing, cap: int = DEFAULT_CAP, **kw) -> list[MultSet]:
    return max_denominator_sets(R, "left", cap, **kw)


def largest_denominator_set_for(
    R: FiniteRing,
    ideal: Ideal | Iterable[int],
    side: str = "left",
    cap: int = DEFAULT_CAP,
    **kw,
) -> MultSet:
    """Union of the denominator sets whose ass ideal is ``ideal``."""
    target = mask_of(ideal.members if isinstance(ideal, Ideal) else ideal)
    cat = exhaustive_catalog(R, side, cap, **kw)
    union = 0
    for m, a in zip(cat.masks, cat.ass_masks):
        if a == target:
            union |= m
    if not union:
        raise NoSuchAssError(f"{sorted(members_of(target))} is not the ass ideal of any {side} denominator set")
    S = MultSet(R, members_of(union), side)
    if multiplicative_violation(R, S.members) is not None or not S.is_denominator:
        raise InternalConsistencyError(f"union of denominator sets with ass {sorted(members_of(target))} is not one")
    if S.ass.members != members_of(target):
        raise InternalConsistencyError("union of denominator sets has a different ass ideal")
    return S


def require_denominator(S: MultSet) -> None:
    if multiplicative_violation(S.ring, S.members) is not None:
        raise InvalidDenominatorError(f"{sorted(S.members)} is not multiplicative")
    if not S.is_denominator:
        w = S.ore_witness or S.kill_witness
        raise InvalidDenominatorError(f"{sorted(S.members)} is not a {S.side} denominator set (witness r,s = {w})")
