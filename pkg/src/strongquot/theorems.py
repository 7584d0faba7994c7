"""Executable identities relating denominator sets, localizations and strong quotients.

``verify_theorem_suite`` returns ``{name: Verdict}``; names are prefixed with
``ring:``, ``left:``, ``right:``, ``both:`` or ``product-<side>:``.  Any failing
verdict means the computation contradicts an unconditional statement.
"""
from __future__ import annotations

import hashlib
from typing import Callable, Iterable

import numpy as np

from ._bits import is_subset, mask_of, members_of
from .errors import CapacityError, InternalConsistencyError, NoInducedMapError, ZeroAbsorbedError
from .localization import classical_left_quotient, induced_map, localize, product_map
from .ore import (
    DEFAULT_CAP,
    MultSet,
    largest_denominator_set_for,
    monoid_closure,
)
from .ring import (
    FiniteRing,
    ProductStructure,
    RingMap,
    check_unit_coincidence,
    direct_product,
    is_semiprime,
    is_semisimple,
    jacobson_radical,
    opposite_ring,
    product_projections,
    quotient_ring,
    unit_group_verdict,
    units,
    validate_ring_axioms,
)
from .strong import (
    StrongProfile,
    largest_quotient,
    radical_quotient,
    semisimplicity_criterion,
    strong_profile,
    strong_quotient_checks,
)
from .verdict import Verdict

LUB_FAMILIES = 48


def _eq(name: str, got: Iterable[int], want: Iterable[int]) -> Verdict:
    got, want = frozenset(got), frozenset(want)
    if got == want:
        return Verdict.passed(name)
    return Verdict.failed(name, f"got {sorted(got)}, expected {sorted(want)}")


def _sub(name: str, small: Iterable[int], big: Iterable[int]) -> Verdict:
    small, big = frozenset(small), frozenset(big)
    if small <= big:
        return Verdict.passed(name)
    return Verdict.failed(name, f"{sorted(small - big)} not contained")


def _all(name: str, verdicts: Iterable[Verdict]) -> Verdict:
    bad = [v for v in verdicts if not v.ok]
    if not bad:
        return Verdict.passed(name)
    return Verdict.failed(name, "; ".join(f"{v.name}: {v.detail}" for v in bad[:3]))


def _guard(name: str, fn: Callable[[], Verdict]) -> Verdict:
    """Run a check, turning a consistency exception into a failed verdict."""
    try:
        return fn()
    except (InternalConsistencyError, NoInducedMapError, ZeroAbsorbedError) as exc:
        return Verdict.failed(name, f"{type(exc).__name__}: {exc}")


def _image(f: RingMap, xs: Iterable[int]) -> frozenset:
    return frozenset(f(x) for x in xs)


def _canonical_iso(name: str, src: FiniteRing, dst: FiniteRing, pairs: Iterable[tuple[int, int]]) -> Verdict:
    """Check that ``src → dst`` defined by the given (x, f(x)) pairs is a ring isomorphism."""
    image: list = [None] * src.size
    for a, b in pairs:
        if image[a] is None:
            image[a] = b
        elif image[a] != b:
            return Verdict.failed(name, f"not well defined at {a}")
    if None in image:
        return Verdict.failed(name, "not defined everywhere")
    f = RingMap(src, dst, tuple(image))
    v = f.verify()
    if not v.ok:
        return Verdict.failed(name, v.detail)
    if not (f.is_injective and f.is_surjective):
        return Verdict.failed(name, f"not bijective ({src.size} -> {dst.size})")
    return Verdict.passed(name)


def _multiplicative_all(R: FiniteRing, masks: list[int]) -> Verdict:
    name = "catalog_sets_are_multiplicative"
    M = R.mul_table
    for m in masks:
        mem = np.array(sorted(members_of(m)), dtype=np.int64)
        inside = np.zeros(R.size, dtype=bool)
        inside[mem] = True
        if not inside[R.one] or inside[R.zero] or not inside[M[np.ix_(mem, mem)]].all():
            return Verdict.failed(name, f"{mem.tolist()} is not a submonoid avoiding zero")
    return Verdict.passed(name)


def _family_rng(R: FiniteRing, side: str) -> np.random.Generator:
    seed = int(hashlib.sha256(f"{R.digest}:{side}".encode()).hexdigest()[:16], 16)
    return np.random.default_rng(seed)


def _lub_check(p: StrongProfile) -> Verdict:
    """Joins of seeded random families of denominator sets are least upper bounds."""
    name = "join_of_family_is_least_upper_bound"
    R, cat = p.ring, p.catalog
    if len(cat) < 2:
        return Verdict.passed(name, "fewer than two sets")
    rng = _family_rng(R, p.side)
    families = [list(range(len(cat)))[:1]]
    for _ in range(LUB_FAMILIES):
        k = int(rng.integers(2, min(4, len(cat)) + 1))
        families.append(sorted(int(i) for i in rng.choice(len(cat), size=k, replace=False)))
    # the strong denominator sets form one family whose join must be T
    strong = [i for i, m in enumerate(cat.masks) if is_subset(m, mask_of(p.strongly_localizable))]
    families.append(strong)
    checked = 0
    for fam in families:
        gens = 0
        for i in fam:
            gens |= cat.masks[i]
        try:
            J = monoid_closure(R, members_of(gens), p.side)
        except ZeroAbsorbedError:
            continue
        checked += 1
        if not J.is_denominator:
            return Verdict.failed(name, f"join of {fam} is not a denominator set")
        for m in cat.masks:
            if is_subset(gens, m) and not is_subset(J.mask, m):
                return Verdict.failed(name, f"join of {fam} is not below an upper bound")
    if strong:
        gens = 0
        for i in strong:
            gens |= cat.masks[i]
        J = monoid_closure(R, members_of(gens), p.side)
        if J.members != p.T:
            return Verdict.failed(name, "join of strong denominator sets differs from T")
    return Verdict.passed(name, f"{checked} zero-free families")


# --------------------------------------------------------------------------
# per side
# --------------------------------------------------------------------------


def _catalog_checks(p: StrongProfile, cap: int) -> dict[str, Verdict]:
    R, side, cat = p.ring, p.side, p.catalog
    out: dict[str, Verdict] = {}
    out["catalog_sets_are_multiplicative"] = _multiplicative_all(R, cat.masks)
    out["maximal_sets_exist"] = (Verdict.passed("maximal_sets_exist") if p.maximal
                                 else Verdict.failed("maximal_sets_exist", "no maximal set"))
    out["maximal_sets_pass_direct_scan"] = _all(
        "maximal_sets_pass_direct_scan",
        [Verdict.check(S.is_denominator, str(sorted(S)), f"witness {S.ore_witness or S.kill_witness}")
         for S in p.maximal] + [Verdict.check(p.largest_strong_denominator.is_denominator, "T", "not a denominator set")],
    )
    scan = cat.pair_scan()
    out["product_of_denominator_sets_is_denominator"] = (
        Verdict.passed("product_of_denominator_sets_is_denominator", f"{len(cat)} sets")
        if scan.violations == 0 else
        Verdict.failed("product_of_denominator_sets_is_denominator",
                       f"{scan.violations} pairs, first {sorted(scan.witness[0])} and {sorted(scan.witness[1])}")
    )
    out["maximality_criterion_agrees_with_inclusion"] = (
        Verdict.passed("maximality_criterion_agrees_with_inclusion")
        if scan.criterion_maximal == cat.maximal_positions else
        Verdict.failed("maximality_criterion_agrees_with_inclusion",
                       f"criterion {scan.criterion_maximal} vs inclusion {cat.maximal_positions}")
    )
    sat = []
    for S in p.maximal:
        plus = {R.add(s, a) for s in S.members for a in S.ass.members}
        sat.append(_eq(f"{sorted(S)}", plus, S.members))
    out["maximal_sets_absorb_their_ass"] = _all("maximal_sets_absorb_their_ass", sat)
    S0 = largest_denominator_set_for(R, [R.zero], side, cap).members
    out["regular_denominator_set_inside_every_maximal"] = _all(
        "regular_denominator_set_inside_every_maximal", [_sub(str(sorted(S)), S0, S.members) for S in p.maximal]
    )
    out["join_of_family_is_least_upper_bound"] = _lub_check(p)
    return out


def _opposite_checks(p: StrongProfile, cap: int) -> dict[str, Verdict]:
    """Right-sided results for R equal left-sided results for R^op (two-sided: both)."""
    R = p.ring
    op_side = {"left": "right", "right": "left", "both": "both"}[p.side]
    q = strong_profile(opposite_ring(R), op_side, cap, strict=False)
    out = {}
    out["maximal_sets_match_opposite_ring"] = _eq(
        "maximal_sets_match_opposite_ring",
        [mask_of(S.members) for S in p.maximal], [mask_of(S.members) for S in q.maximal],
    )
    out["T_matches_opposite_ring"] = _eq("T_matches_opposite_ring", p.T, q.T)
    out["strong_radical_matches_opposite_ring"] = _eq(
        "strong_radical_matches_opposite_ring", p.strong_radical.members, q.strong_radical.members
    )
    return out


def _localization_checks(p: StrongProfile, cap: int) -> dict[str, Verdict]:
    R, side = p.ring, p.side
    out: dict[str, Verdict] = {}
    out["maximal_localizations_are_ore_localizations"] = _all(
        "maximal_localizations_are_ore_localizations", [v for loc in p.maximal_localizations for v in loc.check()]
    )
    pre, img = [], []
    for S, loc in zip(p.maximal, p.maximal_localizations):
        A = loc.carrier
        pre.append(_eq(str(sorted(S)), loc.canonical_map.preimage(units(A)), S.members))
        S0A = largest_denominator_set_for(A, [A.zero], side, cap).members
        img.append(_eq(str(sorted(S)), _image(loc.canonical_map, S.members), S0A))
        img.append(_eq(f"S0 of {A.label} is its unit group", S0A, units(A)))
    out["maximal_set_is_preimage_of_localization_units"] = _all("maximal_set_is_preimage_of_localization_units", pre)
    out["maximal_set_maps_onto_regular_set_of_quotient"] = _all("maximal_set_maps_onto_regular_set_of_quotient", img)

    def largest():
        Ql = largest_quotient(R, side, cap)
        Q = Ql.carrier
        checks = [
            _eq("regular denominator set is the unit group", Ql.denominators.members, units(R)),
            Verdict.check(Ql.canonical_map.is_isomorphism(), "canonical map R -> Q_l is bijective", "not bijective"),
        ]
        QQ = largest_quotient(Q, side, cap)
        checks.append(Verdict.check(QQ.carrier.size == Q.size and QQ.canonical_map.is_isomorphism(),
                              "Q_l(Q_l(R)) = Q_l(R)", "largest quotient not idempotent"))
        checks.append(_eq("units are fractions of regular denominators",
                          {Ql.fraction(s, t) for s in Ql.denominators for t in Ql.denominators}, units(Q)))
        return _all("largest_quotient_is_the_ring_and_idempotent", checks)

    out["largest_quotient_is_the_ring_and_idempotent"] = _guard("largest_quotient_is_the_ring_and_idempotent", largest)

    def classical():
        sides = ["left", "right"] if side == "both" else [side]
        res = [classical_left_quotient(R, s) for s in sides]
        bad = [r for r in res if not r]
        if bad:
            return Verdict.failed("classical_quotient_exists", f"Ore fails at {bad[0].witness}")
        return _all("classical_quotient_exists",
                    [Verdict.check(loc.carrier.size == R.size, "classical quotient is R", "size changed") for loc in res])

    out["classical_quotient_exists"] = _guard("classical_quotient_exists", classical)
    return out


def _strong_checks(p: StrongProfile, cap: int) -> dict[str, Verdict]:
    R = p.ring
    out: dict[str, Verdict] = {}
    T, CL, Cw, Cw1 = p.T, p.strongly_localizable, p.weak_regular, p.weak_left_regular
    ls, ell = p.strong_radical.members, p.localization_radical.members
    out["chain_T_CL_weak_regular_weak_one_sided_regular"] = _all(
        "chain_T_CL_weak_regular_weak_one_sided_regular",
        [_sub("T in CL", T, CL), _sub("CL in C^w", CL, Cw), _sub("C^w in 'C^w", Cw, Cw1)],
    )
    out["weak_regular_sets_equal_CL_for_finite_rings"] = _all(
        "weak_regular_sets_equal_CL_for_finite_rings", [_eq("C^w", Cw, CL), _eq("'C^w", Cw1, CL)]
    )
    for k, v in p.crosschecks.items():
        out[k] = v
    out["strong_radical_inside_localization_radical"] = _sub("strong_radical_inside_localization_radical", ls, ell)
    S0 = largest_denominator_set_for(R, [R.zero], p.side, cap).members
    out["units_inside_regular_set_inside_T"] = _all(
        "units_inside_regular_set_inside_T", [_sub("units in S0", units(R), S0), _sub("S0 in T", S0, T)]
    )
    out["T_absorbs_strong_radical"] = _eq("T_absorbs_strong_radical", {R.add(t, a) for t in T for a in ls}, T)
    out["CL_absorbs_localization_radical"] = _sub(
        "CL_absorbs_localization_radical", {R.add(c, a) for c in CL for a in ell}, CL
    )
    for v in strong_quotient_checks(p, cap):
        out[v.name] = v
    out["strong_quotient_kernel_is_strong_radical"] = _eq(
        "strong_quotient_kernel_is_strong_radical", p.strong_quotient.kernel, ls
    )
    return out


def _quotient_transport_checks(p: StrongProfile, cap: int) -> dict[str, Verdict]:
    side = p.side
    out: dict[str, Verdict] = {}
    Rbar, pi = radical_quotient(p)
    q = strong_profile(Rbar, side, cap, strict=False)
    Qs = p.strong_quotient
    c = strong_profile(Qs.carrier, side, cap, strict=False)
    out["strong_quotient_of_strong_quotient"] = _all("strong_quotient_of_strong_quotient", [
        _eq("T of Q^s is its unit group", c.T, units(Qs.carrier)),
        _eq("strong radical of Q^s is zero", c.strong_radical.members, {Qs.carrier.zero}),
        Verdict.check(c.strong_quotient.canonical_map.is_isomorphism(), "Q^s(Q^s) = Q^s", "canonical map not bijective"),
    ])
    out["T_of_radical_quotient_is_image_of_T"] = _all("T_of_radical_quotient_is_image_of_T", [
        _eq("image", _image(pi, p.T), q.T), _eq("preimage", pi.preimage(q.T), p.T),
    ])
    S0bar = largest_denominator_set_for(Rbar, [Rbar.zero], side, cap).members
    out["T_of_radical_quotient_is_its_regular_set"] = _eq("T_of_radical_quotient_is_its_regular_set", q.T, S0bar)
    out["radical_quotient_has_zero_strong_radical"] = _eq(
        "radical_quotient_has_zero_strong_radical", q.strong_radical.members, {Rbar.zero}
    )
    out["CL_of_radical_quotient_is_image_of_CL"] = _all("CL_of_radical_quotient_is_image_of_CL", [
        _eq("image", _image(pi, p.strongly_localizable), q.strongly_localizable),
        _eq("preimage", pi.preimage(q.strongly_localizable), p.strongly_localizable),
    ])
    Qlbar = largest_quotient(Rbar, side, cap)
    out["strong_quotient_of_radical_quotient_is_its_largest_quotient"] = _all(
        "strong_quotient_of_radical_quotient_is_its_largest_quotient", [
            _eq("denominators", q.T, Qlbar.denominators.members),
            _canonical_iso("canonical map", q.strong_quotient.carrier, Qlbar.carrier,
                           ((q.strong_quotient.sigma(x), Qlbar.sigma(x)) for x in Rbar.elements)),
        ])
    images = [_image(pi, S.members) for S in p.maximal]
    bar_max = [S.members for S in q.maximal]
    checks = [
        Verdict.check(sorted(map(sorted, images)) == sorted(map(sorted, bar_max)), "image of maximal sets",
                f"{sorted(map(sorted, images))} vs {sorted(map(sorted, bar_max))}"),
        Verdict.check(len(set(images)) == len(images), "injective", "two maximal sets share an image"),
    ]
    checks += [_eq(f"preimage of {sorted(Tb)}", pi.preimage(Tb), S.members)
               for S, Tb in zip(p.maximal, images)]
    out["maximal_sets_biject_with_radical_quotient"] = _all("maximal_sets_biject_with_radical_quotient", checks)
    return out


def _ass_below_checks(p: StrongProfile, cap: int) -> dict[str, Verdict]:
    R, side = p.ring, p.side
    name = "denominator_sets_for_ideals_below_strong_radical_lie_in_T"
    ls = p.strong_radical.members

    def run():
        checks = []
        for a in p.catalog.ass_ideals:
            if not a <= ls:
                continue
            Sa = largest_denominator_set_for(R, a, side, cap)
            checks.append(_sub(f"S for {sorted(a)}", Sa.members, p.T))
            induced_map(localize(R, Sa), p.strong_quotient)
        return _all(name, checks)

    return {name: _guard(name, run)}


def _theta_checks(p: StrongProfile, cap: int) -> dict[str, Verdict]:
    R = p.ring
    out: dict[str, Verdict] = {}

    def run_theta():
        Ql = largest_quotient(R, p.side, cap)
        theta = induced_map(Ql, p.strong_quotient)
        S0 = Ql.denominators.members
        ls = p.strong_radical.members
        statements = {
            "S0 = T": S0 == p.T,
            "strong radical zero": ls == {R.zero},
            "theta isomorphism": theta.is_isomorphism(),
            "theta injective": theta.is_injective,
            "theta onto and S0 absorbs strong radical": (
                theta.is_surjective and {R.add(s, a) for s in S0 for a in ls} <= S0
            ),
        }
        verdicts = [Verdict(len(set(statements.values())) == 1, "equivalent", str(statements))]
        kernel = {Ql.fraction(s, a) for s in S0 for a in ls}
        verdicts.append(_eq("kernel of theta is the localized strong radical", theta.kernel(), kernel))
        return _all("theta_criterion_and_kernel", verdicts)

    out["theta_criterion_and_kernel"] = _guard("theta_criterion_and_kernel", run_theta)

    def run_kernels():
        Qs = p.strong_quotient
        verdicts = []
        for S, loc in zip(p.maximal, p.maximal_localizations):
            f = induced_map(Qs, loc)
            want = {Qs.fraction(t, a) for t in p.T for a in S.ass.members}
            verdicts.append(_eq(f"kernel towards {sorted(S)}", f.kernel(), want))
        P = product_map(Qs, p.maximal_localizations)
        want = {Qs.fraction(t, a) for t in p.T for a in p.localization_radical.members}
        verdicts.append(_eq("kernel of the product map", P.kernel(), want))
        return _all("kernels_towards_maximal_localizations", verdicts)

    out["kernels_towards_maximal_localizations"] = _guard("kernels_towards_maximal_localizations", run_kernels)
    return out


def _largest_quotient_transport(p: StrongProfile, cap: int) -> dict[str, Verdict]:
    """Strong data of the largest quotient ring against strong data of R."""
    R, side = p.ring, p.side
    Ql = largest_quotient(R, side, cap)
    Q = Ql.carrier
    pq = strong_profile(Q, side, cap, strict=False)
    S0 = Ql.denominators.members
    out = {}
    out["T_of_largest_quotient_is_units_times_T"] = _all("T_of_largest_quotient_is_units_times_T", [
        _eq("fractions", {Ql.fraction(s, t) for s in S0 for t in p.T}, pq.T),
        _eq("restriction", Ql.canonical_map.preimage(pq.T), p.T),
    ])
    out["strong_radical_of_largest_quotient"] = _all("strong_radical_of_largest_quotient", [
        _eq("fractions", {Ql.fraction(s, a) for s in S0 for a in p.strong_radical.members},
            pq.strong_radical.members),
        _eq("restriction", Ql.canonical_map.preimage(pq.strong_radical.members), p.strong_radical.members),
    ])
    out["strong_quotients_of_ring_and_largest_quotient_agree"] = _canonical_iso(
        "strong_quotients_of_ring_and_largest_quotient_agree", p.strong_quotient.carrier,
        pq.strong_quotient.carrier,
        ((p.strong_quotient.sigma(r), pq.strong_quotient.sigma(Ql.sigma(r))) for r in R.elements),
    )
    maxQ = sorted(sorted(S.members) for S in pq.maximal)
    lifted = []
    for S in p.maximal:
        try:
            lifted.append(sorted(monoid_closure(Q, _image(Ql.canonical_map, S.members) | units(Q), side).members))
        except ZeroAbsorbedError:
            lifted.append(None)
    out["maximal_sets_correspond_over_largest_quotient"] = _all(
        "maximal_sets_correspond_over_largest_quotient", [
            Verdict.check(sorted(x for x in lifted if x is not None) == maxQ and None not in lifted, "forward",
                    f"{lifted} vs {maxQ}"),
            _eq("inverse", {mask_of(Ql.canonical_map.preimage(S.members)) for S in pq.maximal},
                {S.mask for S in p.maximal}),
        ])
    return out


def _semisimplicity_checks(p: StrongProfile, cap: int) -> dict[str, Verdict]:
    rep = semisimplicity_criterion(p.ring, p.side, cap)
    out = {
        "semisimplicity_statements_for_strong_quotient_agree": Verdict(
            rep.strong_equivalent, "semisimplicity_statements_for_strong_quotient_agree", str(rep.strong)),
        "semisimplicity_statements_for_classical_quotient_agree": Verdict(
            rep.classical_equivalent, "semisimplicity_statements_for_classical_quotient_agree", str(rep.classical)),
    }
    out["semisimplicity_consequences"] = _all("semisimplicity_consequences", rep.consequences)
    return out


def _product_checks(R: FiniteRing, side: str, cap: int) -> dict[str, Verdict]:
    st = R.structure
    factors = st.factors
    projs = product_projections(R)
    p = strong_profile(R, side, cap, strict=False)
    fp = [strong_profile(f, side, cap, strict=False) for f in factors]
    out: dict[str, Verdict] = {}

    def lift(i: int, X: Iterable[int]) -> frozenset:
        X = frozenset(X)
        return frozenset(x for x in R.elements if projs[i](x) in X)

    def prod_set(sets: list[frozenset]) -> frozenset:
        return frozenset(x for x in R.elements if all(projs[i](x) in sets[i] for i in range(len(sets))))

    if side != "both":
        lifted = [(i, S) for i, q in enumerate(fp) for S in q.maximal]
        want = {mask_of(lift(i, S.members)) for i, S in lifted}
        checks = [
            _eq("maximal sets", {S.mask for S in p.maximal}, want),
            Verdict.check(len(want) == len(lifted), "injective", "two factor sets lift to the same set"),
        ]
        for i, S in lifted:
            L = MultSet(R, lift(i, S.members), side)
            checks.append(_eq(f"ass of lift {sorted(S)}", L.ass.members, lift(i, S.ass.members)))
            locR, locF = localize(R, L), localize(factors[i], S)
            checks.append(_canonical_iso(f"localization at lift {sorted(S)}", locR.carrier, locF.carrier,
                                         ((locR.sigma(x), locF.sigma(projs[i](x))) for x in R.elements)))
        out["maximal_sets_are_lifted_factor_sets"] = _all("maximal_sets_are_lifted_factor_sets", checks)
    out["CL_of_product_is_product_of_CL"] = _eq(
        "CL_of_product_is_product_of_CL", p.strongly_localizable, prod_set([q.strongly_localizable for q in fp])
    )
    out["T_of_product_is_product_of_T"] = _eq("T_of_product_is_product_of_T", p.T, prod_set([q.T for q in fp]))

    def quot():
        P = direct_product([q.strong_quotient.carrier for q in fp], cap=max(cap, 256), allow_large=True)
        Qs = p.strong_quotient
        pairs = ((Qs.sigma(x), P.structure.index_of([q.strong_quotient.sigma(projs[i](x))
                                                      for i, q in enumerate(fp)])) for x in R.elements)
        return _canonical_iso("strong_quotient_of_product_is_product_of_strong_quotients", Qs.carrier, P, pairs)

    out["strong_quotient_of_product_is_product_of_strong_quotients"] = _guard(
        "strong_quotient_of_product_is_product_of_strong_quotients", quot)
    return out


def ring_checks(R: FiniteRing) -> dict[str, Verdict]:
    out = {
        "axioms": validate_ring_axioms(R),
        "units_regular_and_left_regular_coincide": check_unit_coincidence(R),
        "units_form_a_group": unit_group_verdict(R),
    }
    rad = jacobson_radical(R)
    Rr, _ = quotient_ring(R, rad)
    out["radical_quotient_is_semisimple"] = Verdict.check(
        is_semisimple(Rr), "radical_quotient_is_semisimple", f"radical of {R.label}/rad is nonzero"
    )
    out["semiprime_scan_agrees_with_radical"] = _guard(
        "semiprime_scan_agrees_with_radical",
        lambda: Verdict.check(is_semiprime(R) == is_semisimple(R), "semiprime_scan_agrees_with_radical", "disagree"),
    )
    if isinstance(R.structure, ProductStructure):
        ps = product_projections(R)
        fs = R.structure.factors
        out["units_of_product"] = _eq(
            "units_of_product", units(R),
            [x for x in R.elements if all(ps[i](x) in units(f) for i, f in enumerate(fs))])
        out["radical_of_product"] = _eq(
            "radical_of_product", rad.members,
            [x for x in R.elements if all(ps[i](x) in jacobson_radical(f).members for i, f in enumerate(fs))])
    return out


SIDE_GROUPS = {
    "left": (_catalog_checks, _opposite_checks, _localization_checks, _strong_checks, _quotient_transport_checks,
             _ass_below_checks, _theta_checks, _largest_quotient_transport, _semisimplicity_checks),
    "right": (_catalog_checks, _opposite_checks, _localization_checks, _strong_checks, _quotient_transport_checks,
              _ass_below_checks, _theta_checks, _largest_quotient_transport, _semisimplicity_checks),
    "both": (_catalog_checks, _opposite_checks, _localization_checks, _strong_checks, _quotient_transport_checks,
             _ass_below_checks, _theta_checks, _semisimplicity_checks),
}


def verify_side(R: FiniteRing, side: str, cap: int = DEFAULT_CAP) -> dict[str, Verdict]:
    p = strong_profile(R, side, cap, strict=False)
    out: dict[str, Verdict] = {}
    for group in SIDE_GROUPS[side]:
        for k, v in group(p, cap).items():
            out[f"{side}:{k}"] = v
    if isinstance(R.structure, ProductStructure):
        for k, v in _product_checks(R, side, cap).items():
            out[f"product-{side}:{k}"] = v
    return out


def verify_theorem_suite(R: FiniteRing, cap: int = DEFAULT_CAP, sides=("left", "right", "both")) -> dict[str, Verdict]:
    """Run every identity; raises only when the ring exceeds the exhaustive cap."""
    if R.size > cap:
        raise CapacityError(f"{R.label} has {R.size} elements, above the exhaustive cap {cap}")
    out = {f"ring:{k}": v for k, v in ring_checks(R).items()}
    for side in sides:
        out.update(verify_side(R, side, cap))
    return out


def observations(R: FiniteRing, cap: int = DEFAULT_CAP) -> dict[str, str]:
    """Facts worth reporting that are not asserted either way."""
    pl, pr, pb = (strong_profile(R, s, cap, strict=False) for s in ("left", "right", "both"))
    inter = pl.T & pr.T
    if pb.T == inter:
        rel = "equal"
    elif pb.T < inter:
        rel = "strictly smaller"
    elif pb.T > inter:
        rel = "strictly larger"
    else:
        rel = "incomparable"
    return {
        "two_sided_T_vs_left_and_right_T": f"T(R) has {len(pb.T)} elements, T_l∩T_r has {len(inter)}: {rel}",
    }
