"""Strongly localizable elements, the largest strong denominator set and its quotient ring.

``side`` is ``"left"``, ``"right"`` or ``"both"``; the last works with sets
that are simultaneously left and right denominator sets.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ._bits import is_subset, mask_of, members_of
from .errors import InternalConsistencyError
from .localization import LocalizedRing, classical_left_quotient, largest_left_quotient, localize
from .ore import (
    DEFAULT_CAP,
    DenominatorCatalog,
    MultSet,
    exhaustive_catalog,
    largest_denominator_set_for,
    max_denominator_sets,
    multiplicative_violation,
)
from .ring import (
    FiniteRing,
    Ideal,
    RingMap,
    is_semiprime,
    is_semisimple,
    left_regular_elements,
    quotient_ring,
    regular_elements,
    right_regular_elements,
    units,
)
from .verdict import Verdict


@dataclass(eq=False)
class StrongProfile:
    ring: FiniteRing
    side: str
    catalog: DenominatorCatalog
    maximal: list[MultSet]
    maximal_localizations: list[LocalizedRing]
    strongly_localizable: frozenset
    weak_regular: frozenset
    weak_left_regular: frozenset
    largest_strong_denominator: MultSet
    strong_radical: Ideal
    localization_radical: Ideal
    strong_quotient: LocalizedRing
    crosschecks: dict = field(default_factory=dict)

    @property
    def T(self) -> frozenset:
        return self.largest_strong_denominator.members

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.crosschecks.values())


def _regular_in(Q: FiniteRing, side: str) -> frozenset:
    return regular_elements(Q)


def _one_sided_regular_in(Q: FiniteRing, side: str) -> frozenset:
    # mirror of "kernel of right multiplication is zero" for right-sided work
    return right_regular_elements(Q) if side == "right" else left_regular_elements(Q)


def _elements_mapping_into(R: FiniteRing, locs: list[LocalizedRing], pick) -> frozenset:
    out = set(R.elements)
    for loc in locs:
        good = pick(loc.carrier)
        out &= {r for r in R.elements if loc.sigma(r) in good}
    return frozenset(out)


def _largest_inside(cat: DenominatorCatalog, region: frozenset) -> frozenset:
    """Union of the catalog sets contained in ``region``."""
    rm = mask_of(region)
    u = 0
    for m in cat.masks:
        if is_subset(m, rm):
            u |= m
    return members_of(u)


def _set_check(name: str, got: Iterable[int], want: Iterable[int]) -> Verdict:
    got, want = frozenset(got), frozenset(want)
    if got == want:
        return Verdict.passed(name)
    return Verdict.failed(name, f"{sorted(got)} != {sorted(want)}")


def strong_profile(
    R: FiniteRing,
    side: str = "left",
    cap: int = DEFAULT_CAP,
    strict: bool = True,
    cache_dir=None,
) -> StrongProfile:
    """Everything about the largest strong quotient ring of ``R`` on one side."""
    key = ("profile", side)
    prof = R._memo.get(key)
    if prof is None:
        prof = _compute_profile(R, side, cap, cache_dir)
        R._memo[key] = prof
    if strict and not prof.ok:
        bad = [f"{k}: {v.detail}" for k, v in prof.crosschecks.items() if not v.ok]
        raise InternalConsistencyError(f"{R.label} ({side}): " + "; ".join(bad))
    return prof


def _compute_profile(R: FiniteRing, side: str, cap: int, cache_dir) -> StrongProfile:
    cat = exhaustive_catalog(R, side, cap, cache_dir=cache_dir)
    maxs = max_denominator_sets(R, side, cap, cache_dir=cache_dir)
    locs = [localize(R, S) for S in maxs]
    checks: dict[str, Verdict] = {}

    CL = frozenset(R.elements)
    for S in maxs:
        CL &= S.members
    checks["CL_is_units_in_every_maximal_localization"] = _set_check(
        "CL_is_units_in_every_maximal_localization", _elements_mapping_into(R, locs, units), CL
    )
    Cw = _elements_mapping_into(R, locs, lambda Q: _regular_in(Q, side))
    Cw1 = _elements_mapping_into(R, locs, lambda Q: _one_sided_regular_in(Q, side))

    T_members = _largest_inside(cat, CL)
    if multiplicative_violation(R, T_members) is not None:
        raise InternalConsistencyError(f"{R.label}: union of strong denominator sets is not multiplicative")
    T = MultSet(R, T_members, side)
    if not T.is_denominator:
        raise InternalConsistencyError(f"{R.label}: union of strong denominator sets is not a denominator set")
    ls = T.ass
    ell = frozenset(R.elements)
    for S in maxs:
        ell &= S.ass.members
    Qs = localize(R, T)

    checks["T_is_largest_with_its_ass"] = _set_check(
        "T_is_largest_with_its_ass", largest_denominator_set_for(R, ls, side, cap).members, T_members
    )
    pre = frozenset(r for r in R.elements if Qs.sigma(r) in units(Qs.carrier))
    checks["T_is_preimage_of_quotient_units"] = _set_check("T_is_preimage_of_quotient_units", pre, T_members)
    checks["T_is_largest_inside_weak_left_regular"] = _set_check(
        "T_is_largest_inside_weak_left_regular", _largest_inside(cat, Cw1), T_members
    )
    checks["T_is_largest_inside_weak_regular"] = _set_check(
        "T_is_largest_inside_weak_regular", _largest_inside(cat, Cw), T_members
    )
    return StrongProfile(
        ring=R, side=side, catalog=cat, maximal=maxs, maximal_localizations=locs,
        strongly_localizable=CL, weak_regular=Cw, weak_left_regular=Cw1,
        largest_strong_denominator=T, strong_radical=Ideal(R, ls.members),
        localization_radical=Ideal(R, ell), strong_quotient=Qs, crosschecks=checks,
    )


def strongly_localizable_set(R: FiniteRing, side: str = "left", cap: int = DEFAULT_CAP) -> frozenset:
    return strong_profile(R, side, cap).strongly_localizable


def weak_regular_sets(R: FiniteRing, side: str = "left", cap: int = DEFAULT_CAP) -> tuple[frozenset, frozenset]:
    p = strong_profile(R, side, cap)
    if not p.weak_regular <= p.weak_left_regular:
        raise InternalConsistencyError(f"{R.label}: weak regular set not inside weak one-sided regular set")
    return p.weak_regular, p.weak_left_regular


def largest_strong_denominator_set(R: FiniteRing, side: str = "left", cap: int = DEFAULT_CAP) -> MultSet:
    return strong_profile(R, side, cap).largest_strong_denominator


def strong_radical(R: FiniteRing, side: str = "left", cap: int = DEFAULT_CAP) -> Ideal:
    p = strong_profile(R, side, cap)
    if not p.strong_radical.members <= p.localization_radical.members:
        raise InternalConsistencyError(f"{R.label}: strong radical not inside localization radical")
    return p.strong_radical


def localization_radical(R: FiniteRing, side: str = "left", cap: int = DEFAULT_CAP) -> Ideal:
    return strong_profile(R, side, cap).localization_radical


def strong_quotient_ring(R: FiniteRing, side: str = "left", cap: int = DEFAULT_CAP) -> LocalizedRing:
    """``T⁻¹R``; also checks it against the largest quotient of ``R/ℓ^s`` and its unit group."""
    p = strong_profile(R, side, cap)
    for v in strong_quotient_checks(p, cap):
        if not v.ok:
            raise InternalConsistencyError(f"{R.label}: {v.name}: {v.detail}")
    return p.strong_quotient


def radical_quotient(p: StrongProfile) -> tuple[FiniteRing, RingMap]:
    """``R/ℓ^s`` with its projection (memoised on the profile's ring)."""
    R = p.ring
    return R.memo(("strong_quotient_ring", p.side), lambda: quotient_ring(R, p.strong_radical))


def largest_quotient(R: FiniteRing, side: str, cap: int = DEFAULT_CAP) -> LocalizedRing:
    """Largest quotient ring at the ass-zero denominator sets of the given side."""
    return R.memo(("largest_quotient", side), lambda: largest_left_quotient(R, side, cap))


def strong_quotient_checks(p: StrongProfile, cap: int = DEFAULT_CAP) -> list[Verdict]:
    R, Qs, T = p.ring, p.strong_quotient, p.T
    Rbar, pi = radical_quotient(p)
    Ql_bar = largest_quotient(Rbar, p.side, cap)
    out = []
    # the map σ(r) ↦ σ'(π(r)) must be a well defined isomorphism
    image = [None] * Qs.carrier.size
    ok = True
    for r in R.elements:
        a, b = Qs.sigma(r), Ql_bar.sigma(pi(r))
        if image[a] is None:
            image[a] = b
        elif image[a] != b:
            ok = False
    if ok and None not in image:
        f = RingMap(Qs.carrier, Ql_bar.carrier, tuple(image))
        ok = f.is_isomorphism()
    out.append(Verdict.passed("strong_quotient_is_largest_quotient_of_radical_quotient") if ok
               else Verdict.failed("strong_quotient_is_largest_quotient_of_radical_quotient",
                                   "canonical map is not an isomorphism"))
    U = units(Qs.carrier)
    fracs = {Qs.fraction(s, t) for s in T for t in T}
    out.append(_set_check("strong_quotient_units_are_fractions_of_T", fracs, U))
    S0bar = largest_denominator_set_for(Rbar, [Rbar.zero], p.side, cap).members
    out.append(_set_check("T_is_preimage_of_regular_quotient_set", pi.preimage(S0bar), T))
    return out


# --------------------------------------------------------------------------
# semisimplicity criteria
# --------------------------------------------------------------------------


@dataclass
class SemisimplicityReport:
    side: str
    strong: dict          # four statements about the strong quotient
    classical: dict       # three statements about the classical quotient
    consequences: list    # verdicts for the identities implied when the statements hold

    @property
    def strong_equivalent(self) -> bool:
        return len(set(self.strong.values())) == 1

    @property
    def classical_equivalent(self) -> bool:
        return len(set(self.classical.values())) == 1

    @property
    def ok(self) -> bool:
        return self.strong_equivalent and self.classical_equivalent and all(v.ok for v in self.consequences)


def _classical_semisimple(R: FiniteRing, side: str) -> bool:
    if side == "both":
        left = classical_left_quotient(R, "left")
        right = classical_left_quotient(R, "right")
        if not left or not right:
            return False
        return is_semisimple(left.carrier) and is_semisimple(right.carrier)
    loc = classical_left_quotient(R, side)
    return bool(loc) and is_semisimple(loc.carrier)


def semisimplicity_criterion(R: FiniteRing, side: str = "left", cap: int = DEFAULT_CAP) -> SemisimplicityReport:
    p = strong_profile(R, side, cap)
    Rbar, pi = radical_quotient(p)
    strong = {
        "strong_quotient_semisimple": is_semisimple(p.strong_quotient.carrier),
        "radical_quotient_semiprime_goldie": is_semiprime(Rbar),
        "largest_quotient_of_radical_quotient_semisimple": is_semisimple(largest_quotient(Rbar, side, cap).carrier),
        "classical_quotient_of_radical_quotient_semisimple": _classical_semisimple(Rbar, side),
    }
    classical = {
        "classical_quotient_semisimple": _classical_semisimple(R, side),
        "largest_quotient_semisimple": is_semisimple(largest_quotient(R, side, cap).carrier),
        "strong_quotient_semisimple_and_radical_zero": (
            is_semisimple(p.strong_quotient.carrier) and p.strong_radical.is_zero
        ),
    }
    consequences = []
    if all(strong.values()):
        C_bar = regular_elements(Rbar)
        consequences.append(_set_check("T_is_preimage_of_regular_elements_of_radical_quotient",
                                       pi.preimage(C_bar), p.T))
        Tbar = strong_profile(Rbar, side, cap, strict=False).T
        consequences.append(_set_check("radical_quotient_T_is_its_regular_elements", Tbar, C_bar))
    if all(classical.values()):
        C = regular_elements(R)
        consequences.append(_set_check("regular_elements_equal_T", C, p.T))
        consequences.append(_set_check("regular_elements_equal_CL", C, p.strongly_localizable))
    return SemisimplicityReport(side, strong, classical, consequences)
