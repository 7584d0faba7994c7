"""Closed-form predictions checked against the brute-force strong quotient.

Three families are covered: triangular matrix rings over finite fields, the
idempotent analysis of an arbitrary finite (hence Artinian) ring, and the
semiprime case where ``T_l`` is the set of regular elements.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ._bits import mask_of
from .errors import InternalConsistencyError, RingError
from .localization import induced_map, localize, product_map
from .ore import DEFAULT_CAP, MultSet
from .ring import (
    DEFAULT_SIZE_CAP,
    FiniteRing,
    Ideal,
    MatrixStructure,
    RingMap,
    central_idempotents,
    direct_product,
    idempotents,
    is_semisimple,
    jacobson_radical,
    make_finite_field,
    make_ideal,
    make_matrix_ring,
    opposite_ring,
    quotient_ring,
    regular_elements,
    units,
)
from .strong import StrongProfile, strong_profile
from .verdict import Verdict


# --------------------------------------------------------------------------
# triangular matrices
# --------------------------------------------------------------------------


@dataclass
class TriangularPrediction:
    """Predicted strong left data of ``L_n(F_q)`` or ``U_n(F_q)``.

    ``T`` and ``strong_radical`` are ``None`` in prediction-only mode, when
    the ring is too large to build.
    """

    q: int
    n: int
    shape: str
    corner: tuple[int, int]
    size: int
    T_size: int
    radical_size: int
    quotient_size: int
    max_count: int = 1
    ring: FiniteRing | None = None
    T: frozenset | None = None
    strong_radical: frozenset | None = None

    @property
    def prediction_only(self) -> bool:
        return self.ring is None


def triangular_strong_quotient(
    q: int, n: int, shape: str = "lower", cap: int = DEFAULT_SIZE_CAP, ring: FiniteRing | None = None
) -> TriangularPrediction:
    """Lower: ``T_l = {a : a_11 ≠ 0}``; upper: ``T_l = {a : a_nn ≠ 0}``; ``Q_l^s ≅ F_q``."""
    if shape not in ("lower", "upper"):
        raise RingError(f"shape must be 'lower' or 'upper', got {shape!r}")
    if n < 1:
        raise RingError("matrix size must be at least 1")
    F = make_finite_field(q)
    N = n * (n + 1) // 2
    size = q ** N
    corner = (1, 1) if shape == "lower" else (n, n)
    pred = TriangularPrediction(q, n, shape, corner, size, (q - 1) * q ** (N - 1), q ** (N - 1), q)
    if ring is None and size <= cap:
        ring = make_matrix_ring(F, n, shape, cap=cap)
    if ring is not None:
        st = ring.structure
        if not isinstance(st, MatrixStructure) or st.shape != shape or st.n != n or st.base.size != q:
            raise RingError(f"{ring.label} is not the {shape} {n}x{n} matrix ring over F_{q}")
        zero = st.base.zero
        pred.ring = ring
        pred.T = frozenset(x for x in ring.elements if st.entry(x, *corner) != zero)
        pred.strong_radical = frozenset(x for x in ring.elements if st.entry(x, *corner) == zero)
    return pred


def triangular_flip(q: int, n: int) -> RingMap:
    """The isomorphism ``U_n → L_n`` sending ``E_ij`` to ``E_{n+1-i, n+1-j}``."""
    F = make_finite_field(q)
    U = make_matrix_ring(F, n, "upper")
    L = make_matrix_ring(F, n, "lower")
    su, sl = U.structure, L.structure
    image = []
    for x in U.elements:
        rows = [[su.entry(x, n + 1 - i, n + 1 - j) for j in range(1, n + 1)] for i in range(1, n + 1)]
        image.append(sl.index_of_matrix(rows))
    f = RingMap(U, L, tuple(image))
    if not (f.verify().ok and f.is_isomorphism()):
        raise InternalConsistencyError("index reversal is not a ring isomorphism U_n -> L_n")
    return f


def transpose_map(q: int, n: int) -> RingMap:
    """Transposition as an isomorphism ``U_n^op → L_n``."""
    F = make_finite_field(q)
    U = make_matrix_ring(F, n, "upper")
    L = make_matrix_ring(F, n, "lower")
    Uop = opposite_ring(U)
    su, sl = U.structure, L.structure
    image = []
    for x in U.elements:
        rows = [[su.entry(x, j, i) for j in range(1, n + 1)] for i in range(1, n + 1)]
        image.append(sl.index_of_matrix(rows))
    f = RingMap(Uop, L, tuple(image))
    if not (f.verify().ok and f.is_isomorphism()):
        raise InternalConsistencyError("transposition is not an isomorphism U_n^op -> L_n")
    return f


# --------------------------------------------------------------------------
# idempotent analysis of finite rings
# --------------------------------------------------------------------------


def component_identities(R: FiniteRing) -> tuple[FiniteRing, RingMap, list[int]]:
    """``R/rad``, its projection and the identities of its simple components, in index order."""
    Rbar, pi = quotient_ring(R, jacobson_radical(R))
    cent = [c for c in central_idempotents(Rbar) if c != Rbar.zero]
    minimal = []
    for c in cent:
        # c is minimal when no nonzero central idempotent lies strictly below it
        if not any(d != c and Rbar.mul(c, d) == d for d in cent):
            minimal.append(c)
    minimal.sort()
    total = Rbar.zero
    for c in minimal:
        total = Rbar.add(total, c)
    if total != Rbar.one:
        raise InternalConsistencyError(f"{R.label}: component identities do not sum to 1")
    return Rbar, pi, minimal


def _liftings(R: FiniteRing, pi: RingMap, targets: list[int], limit: int):
    """Tuples of orthogonal idempotents lifting ``targets`` and summing to 1, lexicographically."""
    idem = idempotents(R)
    cands = [[e for e in idem if pi(e) == t] for t in targets]
    s = len(targets)
    found: list[tuple[int, ...]] = []

    def rec(chosen: list[int], total: int):
        if len(found) >= limit:
            return
        k = len(chosen)
        if k == s - 1:
            last = R.sub(R.one, total)
            if last in cands[k] and all(R.mul(last, c) == R.zero == R.mul(c, last) for c in chosen):
                found.append(tuple(chosen) + (last,))
            return
        for e in cands[k]:
            if all(R.mul(e, c) == R.zero == R.mul(c, e) for c in chosen):
                rec(chosen + [e], R.add(total, e))
                if len(found) >= limit:
                    return

    rec([], R.zero)
    return found


def lift_idempotents(R: FiniteRing, alternatives: int = 1) -> list[tuple[int, ...]]:
    """The lexicographically least lifting of the component identities, then up to ``alternatives`` more."""
    key = ("liftings", alternatives)

    def compute():
        _, pi, targets = component_identities(R)
        found = _liftings(R, pi, targets, 1 + alternatives)
        if not found:
            raise InternalConsistencyError(f"{R.label}: no lifting of the component identities")
        return found

    return R.memo(key, compute)


@dataclass
class ArtinianAnalysis:
    ring: FiniteRing
    radical: Ideal
    lifted_idempotents: tuple[int, ...]
    admissible: dict              # frozenset of component indices -> e_I
    minimal_admissible: list[frozenset]
    e_star: int
    predicted_maxden: list[frozenset]
    predicted_radical: Ideal
    predicted_quotient: FiniteRing
    component_quotients: list[tuple[FiniteRing, RingMap]]
    checks: list[Verdict] = field(default_factory=list)

    @property
    def s(self) -> int:
        return len(self.lifted_idempotents)

    @property
    def predicted_T(self) -> frozenset:
        out = frozenset(self.ring.elements)
        for S in self.predicted_maxden:
            out &= S
        return out

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.checks)


def _corner_ideal(R: FiniteRing, e: int) -> Ideal:
    """``(1-e)R`` as a two-sided ideal (it is one for admissible ``e``)."""
    f = R.sub(R.one, e)
    members = frozenset(R.mul(f, r) for r in R.elements)
    return make_ideal(R, members, "two-sided")


def _unit_preimage(R: FiniteRing, I: Ideal) -> tuple[frozenset, FiniteRing, RingMap]:
    Q, pi = quotient_ring(R, I)
    return pi.preimage(units(Q)), Q, pi


def _analysis_from_lifting(R: FiniteRing, lifting: tuple[int, ...]) -> ArtinianAnalysis:
    s = len(lifting)
    admissible: dict[frozenset, int] = {}
    for k in range(1, s + 1):
        for I in combinations(range(s), k):
            e = R.zero
            for i in I:
                e = R.add(e, lifting[i])
            f = R.sub(R.one, e)
            if all(R.mul(R.mul(e, r), f) == R.zero for r in R.elements):
                admissible[frozenset(I)] = e
    if frozenset(range(s)) not in admissible:
        raise InternalConsistencyError(f"{R.label}: 1 is not admissible")
    minimal = sorted((I for I in admissible if not any(J < I for J in admissible)), key=lambda I: sorted(I))
    top = frozenset().union(*minimal)
    checks = []
    lub_ok = top in admissible and all(top <= J for J in admissible if all(I <= J for I in minimal))
    checks.append(Verdict.check(lub_ok, "sum_of_minimal_admissible_is_their_least_upper_bound",
                          f"union {sorted(top)} is not the least upper bound"))
    e = admissible.get(top)
    if e is None:
        e = R.zero
        for i in top:
            e = R.add(e, lifting[i])
    checks.append(Verdict.check(R.mul(e, e) == e, "e_is_idempotent", "e*e != e"))
    rad_pred = _corner_ideal(R, e)
    Se = MultSet(R, frozenset({R.one, e}), "left")
    den = Se.is_denominator
    checks.append(Verdict.check(den, "one_and_e_form_a_denominator_set", f"witness {Se.ore_witness or Se.kill_witness}"))
    if den:
        checks.append(Verdict.check(Se.ass.members == rad_pred.members, "ass_of_one_and_e_is_corner_ideal",
                              f"{sorted(Se.ass.members)} vs {sorted(rad_pred.members)}"))
    maxden, comps = [], []
    for I in minimal:
        Te, Q, pi = _unit_preimage(R, _corner_ideal(R, admissible[I]))
        maxden.append(Te)
        comps.append((Q, pi))
    Qpred, _ = quotient_ring(R, rad_pred)
    return ArtinianAnalysis(R, jacobson_radical(R), lifting, admissible, minimal, e, maxden, rad_pred,
                            Qpred, comps, checks)


def artinian_analysis(R: FiniteRing) -> ArtinianAnalysis:
    """Idempotent predictions of the maximal left denominator sets, ``T_l``, ``ℓ^s`` and ``Q_l^s``."""

    def compute():
        lifts = lift_idempotents(R)
        main = _analysis_from_lifting(R, lifts[0])
        for alt in lifts[1:]:
            other = _analysis_from_lifting(R, alt)
            same = (
                other.predicted_radical == main.predicted_radical
                and sorted(map(mask_of, other.predicted_maxden)) == sorted(map(mask_of, main.predicted_maxden))
                and other.predicted_T == main.predicted_T
            )
            main.checks.append(Verdict.check(same, "predictions_independent_of_lifting",
                                       f"lifting {alt} changes the predictions"))
        return main

    return R.memo("artinian_analysis", compute)


# --------------------------------------------------------------------------
# comparison
# --------------------------------------------------------------------------


@dataclass
class Difference:
    quantity: str
    predicted: object
    computed: object


@dataclass
class ClosedFormComparison:
    ring: FiniteRing
    analysis: ArtinianAnalysis
    profile: StrongProfile
    triangular: TriangularPrediction | None
    differences: list[Difference]
    checks: list[Verdict]
    cardinality_equality: Verdict

    @property
    def agrees(self) -> bool:
        return not self.differences and all(v.ok for v in self.checks)

    @property
    def ok(self) -> bool:
        return self.agrees and self.cardinality_equality.ok


def _diff(out: list, name: str, predicted, computed) -> None:
    if predicted != computed:
        out.append(Difference(name, predicted, computed))


def _sorted_sets(sets) -> list[list[int]]:
    return sorted(sorted(S) for S in sets)


def _product_of_components(an: ArtinianAnalysis, p: StrongProfile, cap: int) -> Verdict:
    """``Q_l^s`` is isomorphic to ``∏ R/(1-e')R`` through the canonical map."""
    name = "strong_quotient_is_product_of_corner_quotients"
    R, Qs = an.ring, p.strong_quotient
    comps = an.component_quotients
    if len(comps) == 1:
        P, index = comps[0][0], (lambda x: comps[0][1](x))
    else:
        P = direct_product([Q for Q, _ in comps], cap=max(cap, DEFAULT_SIZE_CAP), allow_large=True)
        index = lambda x: P.structure.index_of([pi(x) for _, pi in comps])  # noqa: E731
    image: list = [None] * Qs.carrier.size
    for r in R.elements:
        a, b = Qs.sigma(r), index(r)
        if image[a] is not None and image[a] != b:
            return Verdict.failed(name, "not well defined")
        image[a] = b
    f = RingMap(Qs.carrier, P, tuple(image))
    if not f.verify().ok or not f.is_isomorphism():
        return Verdict.failed(name, f"canonical map {Qs.carrier.size} -> {P.size} is not an isomorphism")
    return Verdict.passed(name)


def _product_of_localizations(p: StrongProfile) -> Verdict:
    """The map from ``Q_l^s`` to the product of the maximal localizations is bijective."""
    name = "strong_quotient_is_product_of_maximal_localizations"
    P = product_map(p.strong_quotient, p.maximal_localizations)
    if not P.verify().ok:
        return Verdict.failed(name, "component is not a ring map")
    if not P.is_injective or P.target_size != p.strong_quotient.carrier.size:
        return Verdict.failed(name, f"{p.strong_quotient.carrier.size} elements vs product of size {P.target_size}")
    return Verdict.passed(name)


def compare_closed_form_vs_bruteforce(R: FiniteRing, cap: int = DEFAULT_CAP) -> ClosedFormComparison:
    """Elementwise comparison of every closed-form prediction with the left strong profile."""
    an = artinian_analysis(R)
    p = strong_profile(R, "left", cap)
    diffs: list[Difference] = []
    _diff(diffs, "maximal left denominator sets", _sorted_sets(an.predicted_maxden),
          _sorted_sets(S.members for S in p.maximal))
    _diff(diffs, "T_l", sorted(an.predicted_T), sorted(p.T))
    _diff(diffs, "T_l as intersection of maximal sets", sorted(an.predicted_T),
          sorted(p.strongly_localizable))
    _diff(diffs, "strong left localization radical", sorted(an.predicted_radical.members),
          sorted(p.strong_radical.members))
    _diff(diffs, "left localization radical", sorted(an.predicted_radical.members),
          sorted(p.localization_radical.members))
    _diff(diffs, "Q_l^s size", an.predicted_quotient.size, p.strong_quotient.carrier.size)
    checks = list(an.checks)
    checks.append(_product_of_components(an, p, cap))
    checks.append(_product_of_localizations(p))
    Qpi = induced_map(localize(R, MultSet(R, p.T, "left")), p.strong_quotient)
    checks.append(Verdict.check(Qpi.is_isomorphism(), "localization_at_T_is_strong_quotient", "not an isomorphism"))
    # e ∈ CL and the two-element set {1, e} sits inside T
    checks.append(Verdict.check(an.e_star in p.T, "e_lies_in_T", "e is not in T"))
    count, s = len(p.maximal), an.s
    checks.append(Verdict(count <= s, "max_count_at_most_component_count", f"{count} maximal sets, s = {s}"))
    semi = is_semisimple(R)
    equality = Verdict(
        (count == s) == semi, "max_count_equals_component_count_iff_semisimple",
        f"{count} maximal sets, s = {s}, semisimple = {semi}",
    )
    if semi:
        C = regular_elements(R)
        _diff(diffs, "T_l equals regular elements (semiprime)", sorted(C), sorted(p.T))
    tri = None
    st = R.structure
    if isinstance(st, MatrixStructure) and st.shape in ("lower", "upper") and st.base.label.startswith("F_"):
        tri = triangular_strong_quotient(st.base.size, st.n, st.shape, ring=R)
        _diff(diffs, "triangular T_l", sorted(tri.T), sorted(p.T))
        _diff(diffs, "triangular strong radical", sorted(tri.strong_radical), sorted(p.strong_radical.members))
        _diff(diffs, "triangular maximal count", tri.max_count, len(p.maximal))
        _diff(diffs, "triangular Q_l^s size", tri.quotient_size, p.strong_quotient.carrier.size)
        checks.append(_corner_map_is_isomorphism(p, tri))
    return ClosedFormComparison(R, an, p, tri, diffs, checks, equality)


def _corner_map_is_isomorphism(p: StrongProfile, tri: TriangularPrediction) -> Verdict:
    """``σ(a) ↦ a_corner`` is a well defined isomorphism ``Q_l^s → F_q``."""
    name = "triangular_strong_quotient_is_the_field"
    R, Qs = p.ring, p.strong_quotient
    st = R.structure
    image: list = [None] * Qs.carrier.size
    for a in R.elements:
        x, v = Qs.sigma(a), st.entry(a, *tri.corner)
        if image[x] is not None and image[x] != v:
            return Verdict.failed(name, "corner entry is not constant on cosets")
        image[x] = v
    if None in image:
        return Verdict.failed(name, "corner map undefined somewhere")
    f = RingMap(Qs.carrier, st.base, tuple(image))
    v = f.verify()
    if not v.ok or not f.is_isomorphism():
        return Verdict.failed(name, v.detail or "corner map is not bijective")
    return Verdict.passed(name)


def closed_form_prediction_only(q: int, n: int, shape: str) -> TriangularPrediction:
    return triangular_strong_quotient(q, n, shape, cap=0)


def transported_T_upper(q: int, n: int, cap: int = DEFAULT_CAP) -> dict[str, frozenset]:
    """``T_l(U_n)`` three ways: directly, from ``T_r(L_n)`` by transposition, from ``T_l(L_n)`` by index reversal."""
    flip = triangular_flip(q, n)
    tr = transpose_map(q, n)
    U, L = flip.source, flip.target
    direct = strong_profile(U, "left", cap).T
    # left sets of U are right sets of U^op, which transposition carries to right sets of L
    via_transpose = tr.preimage(strong_profile(L, "right", cap).T)
    via_opposite = strong_profile(opposite_ring(U), "right", cap).T
    via_flip = flip.preimage(strong_profile(L, "left", cap).T)
    return {"direct": direct, "transpose": via_transpose, "opposite": via_opposite, "flip": via_flip}
