"""Localizations ``S⁻¹R`` of finite rings, realized as quotients ``R/ass(S)``.

For a finite ring the canonical map ``R → S⁻¹R`` is onto and the images of
elements of ``S`` are regular, hence units.  Every construction below checks
these facts on the instance instead of assuming them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapacityError, InternalConsistencyError, NoInducedMapError
from .ore import (
    DEFAULT_CAP,
    MultSet,
    largest_denominator_set_for,
    left_ore_witness,
    make_multset,
    require_denominator,
    right_ore_witness,
)
from .ring import (
    DEFAULT_SIZE_CAP,
    FiniteRing,
    RingMap,
    direct_product,
    identity_map,
    inverse,
    quotient_ring,
    regular_elements,
    units,
    zero_ideal,
)
from .verdict import Verdict


@dataclass(frozen=True, eq=False)
class LocalizedRing:
    """``S⁻¹R`` with its canonical map and an inverse for the image of each ``s``."""

    source: FiniteRing
    denominators: MultSet
    carrier: FiniteRing
    canonical_map: RingMap
    inverted_witnesses: dict

    @property
    def side(self) -> str:
        return self.denominators.side

    @property
    def kernel(self) -> frozenset:
        return self.canonical_map.kernel()

    def sigma(self, r: int) -> int:
        return self.canonical_map.image[r]

    def fraction(self, s: int, r: int) -> int:
        """``s⁻¹r`` (left) or ``r s⁻¹`` (right) as a carrier element."""
        Q = self.carrier
        inv = self.inverted_witnesses[s]
        if self.side == "right":
            return Q.mul(self.sigma(r), inv)
        return Q.mul(inv, self.sigma(r))

    def check(self) -> list[Verdict]:
        """The three defining properties of an Ore localization, on this instance."""
        R, S, Q, f = self.source, self.denominators, self.carrier, self.canonical_map
        out = [f.verify()]
        ass = S.ass.members
        if self.kernel == ass:
            out.append(Verdict.passed("kernel_is_ass"))
        else:
            out.append(Verdict.failed("kernel_is_ass", f"kernel {sorted(self.kernel)} vs ass {sorted(ass)}"))
        U = units(Q)
        bad = [s for s in S.members if f(s) not in U]
        out.append(Verdict.passed("denominators_invertible") if not bad
                   else Verdict.failed("denominators_invertible", f"{bad} do not map to units"))
        reached = {self.fraction(s, r) for s in S.members for r in R.elements}
        missing = sorted(set(Q.elements) - reached)
        out.append(Verdict.passed("every_element_a_fraction") if not missing
                   else Verdict.failed("every_element_a_fraction", f"carrier elements {missing} unreached"))
        return out


def localize(R: FiniteRing, S: MultSet | Iterable[int], side: str | None = None) -> LocalizedRing:
    """Ore localization at a denominator set of the given side."""
    if not isinstance(S, MultSet):
        S = make_multset(R, S, side or "left")
    elif side is not None and side != S.side:
        S = S.with_side(side)
    require_denominator(S)
    Q, pi = quotient_ring(R, S.ass)
    if Q.size == R.size:
        Q.label = R.label
    else:
        Q.label = f"{R.label}[{'S^-1' if S.side != 'right' else 'S^-1 (right)'}]"
    U = units(Q)
    witnesses = {}
    for s in sorted(S.members):
        img = pi(s)
        if img not in U:
            raise InternalConsistencyError(
                f"image of denominator {R.name(s)} is not a unit of R/ass(S) for S={sorted(S.members)}"
            )
        witnesses[s] = inverse(Q, img)
    loc = LocalizedRing(R, S, Q, pi, witnesses)
    for v in loc.check():
        if not v.ok:
            raise InternalConsistencyError(f"localization of {R.label} at {sorted(S.members)}: {v.detail}")
    return loc


def largest_left_quotient(R: FiniteRing, side: str = "left", cap: int = DEFAULT_CAP, **kw) -> LocalizedRing:
    """Localization at the largest denominator set with ``ass = 0``."""
    S0 = largest_denominator_set_for(R, zero_ideal(R), side, cap, **kw)
    if S0.members != units(R):
        raise InternalConsistencyError(
            f"{R.label}: largest regular denominator set {sorted(S0.members)} is not the unit group"
        )
    loc = localize(R, S0)
    if loc.carrier.size != R.size:
        raise InternalConsistencyError(f"{R.label}: localization at units changed the ring size")
    return loc


@dataclass(frozen=True)
class NoClassicalQuotient:
    """The regular elements are not an Ore set; ``witness`` is a failing ``(r, s)``."""

    ring: FiniteRing
    side: str
    witness: tuple[int, int]

    def __bool__(self) -> bool:
        return False


def classical_left_quotient(R: FiniteRing, side: str = "left") -> LocalizedRing | NoClassicalQuotient:
    """Localization at the regular elements when they form an Ore set."""
    C = regular_elements(R)
    if side in ("left", "both"):
        w = left_ore_witness(R, C)
        if w is not None:
            return NoClassicalQuotient(R, "left", w)
    if side in ("right", "both"):
        w = right_ore_witness(R, C)
        if w is not None:
            return NoClassicalQuotient(R, "right", w)
    return localize(R, make_multset(R, C, side))


def induced_map(src: LocalizedRing, dst: LocalizedRing) -> RingMap:
    """The map ``S⁻¹R → T⁻¹R`` extending the identity of ``R``, for ``S ⊆ T``."""
    if src.source.digest != dst.source.digest:
        raise NoInducedMapError("localizations of different rings")
    if not src.denominators.members <= dst.denominators.members:
        extra = sorted(src.denominators.members - dst.denominators.members)
        raise NoInducedMapError(f"denominators {extra} are not inverted in the target")
    R = src.source
    image = [None] * src.carrier.size
    for r in R.elements:
        q = src.sigma(r)
        t = dst.sigma(r)
        if image[q] is None:
            image[q] = t
        elif image[q] != t:
            raise InternalConsistencyError("induced map is not well defined on cosets")
    f = RingMap(src.carrier, dst.carrier, tuple(image))
    v = f.verify()
    if not v.ok:
        raise InternalConsistencyError(f"induced map is not a ring map: {v.detail}")
    for r in R.elements:
        if f(src.sigma(r)) != dst.sigma(r):
            raise InternalConsistencyError("induced map does not commute with canonical maps")
    return f


@dataclass(frozen=True, eq=False)
class ProductMap:
    """``x ↦ (f_1(x), …, f_k(x))`` into a product of targets."""

    source: FiniteRing
    components: tuple[RingMap, ...]

    def __call__(self, x: int) -> tuple[int, ...]:
        return tuple(f(x) for f in self.components)

    def kernel(self) -> frozenset:
        K = frozenset(self.source.elements)
        for f in self.components:
            K &= f.kernel()
        return K

    @property
    def is_injective(self) -> bool:
        return len({self(x) for x in self.source.elements}) == self.source.size

    @property
    def target_size(self) -> int:
        n = 1
        for f in self.components:
            n *= f.target.size
        return n

    def as_ring_map(self, cap: int = DEFAULT_SIZE_CAP) -> tuple[FiniteRing, RingMap]:
        """Materialize the product ring (at least two factors) and the map into it."""
        if len(self.components) == 1:
            f = self.components[0]
            return f.target, f
        if self.target_size > cap:
            raise CapacityError(f"product of targets has {self.target_size} elements, cap is {cap}")
        P = direct_product([f.target for f in self.components], cap=cap)
        st = P.structure
        f = RingMap(self.source, P, tuple(st.index_of(self(x)) for x in self.source.elements))
        return P, f

    def verify(self) -> Verdict:
        for f in self.components:
            v = f.verify()
            if not v.ok:
                return v
        return Verdict.passed("product_map")


def product_map(src: LocalizedRing, targets: Sequence[LocalizedRing]) -> ProductMap:
    return ProductMap(src.carrier, tuple(induced_map(src, t) for t in targets))


def trivial_localization(R: FiniteRing, side: str = "left") -> LocalizedRing:
    """Localization at ``{1}``: the identity."""
    loc = localize(R, make_multset(R, [R.one], side))
    if loc.canonical_map.image != identity_map(R).image:
        raise InternalConsistencyError("localization at {1} is not the identity")
    return loc
