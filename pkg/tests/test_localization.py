import pytest

import oracles as O
from strongquot.corpus import corpus_ring
from strongquot.errors import InvalidDenominatorError, NoInducedMapError
from strongquot.localization import (
    NoClassicalQuotient,
    classical_left_quotient,
    induced_map,
    largest_left_quotient,
    localize,
    product_map,
    trivial_localization,
)
from strongquot.ore import enumerate_denominator_sets, make_multset, max_denominator_sets
from strongquot.ring import units


class TestLocalize:
    def test_checks_pass_on_every_denominator_set(self, small_corpus):
        for name, R in small_corpus:
            for side in ("left", "right", "both"):
                for S in enumerate_denominator_sets(R, side).sets:
                    loc = localize(R, S)
                    assert all(v.ok for v in loc.check()), (name, side, sorted(S))

    def test_size_matches_fraction_count(self, small_corpus):
        """``|S^-1 R|`` from Ore classes of pairs ``(s, r)`` equals ``|R/ass S|``."""
        for name, R in small_corpus:
            if R.size > 12:
                continue
            for S in enumerate_denominator_sets(R, "left").sets:
                assert localize(R, S).carrier.size == O.fraction_classes(R, S.members), (name, sorted(S))

    def test_z6_at_3(self):
        R = corpus_ring("z6")
        loc = localize(R, [1, 3, 5])
        assert loc.kernel == {0, 2, 4} and loc.carrier.size == 2

    def test_fractions(self):
        R = corpus_ring("z12")
        loc = localize(R, [1, 5, 7, 11])
        for s in (5, 7, 11):
            Q = loc.carrier
            assert Q.mul(loc.sigma(s), loc.fraction(s, R.one)) == Q.one

    def test_right_fractions(self):
        R = corpus_ring("l2_f2")
        S = max_denominator_sets(R, "right")[0]
        loc = localize(R, S)
        reached = {loc.fraction(s, r) for s in S for r in R.elements}
        assert reached == set(loc.carrier.elements)

    def test_rejects_non_denominator(self):
        R = corpus_ring("m2_f2")
        with pytest.raises(InvalidDenominatorError):
            localize(R, [R.one, R.structure.unit_matrix(1, 1)])

    def test_trivial(self):
        R = corpus_ring("l2_f2")
        assert trivial_localization(R).carrier.size == R.size


class TestQuotientRings:
    def test_largest_quotient_is_ring(self, small_corpus):
        for name, R in small_corpus:
            loc = largest_left_quotient(R)
            assert loc.denominators.members == units(R)
            assert loc.canonical_map.is_isomorphism()

    def test_classical_quotient_exists_for_finite_rings(self, small_corpus):
        for name, R in small_corpus:
            for side in ("left", "right", "both"):
                loc = classical_left_quotient(R, side)
                assert not isinstance(loc, NoClassicalQuotient)
                assert loc.carrier.size == R.size

    def test_no_classical_quotient_is_falsy(self):
        R = corpus_ring("z4")
        nq = NoClassicalQuotient(R, "left", (0, 1))
        assert not nq


class TestInducedMaps:
    def test_induced_map_from_smaller_set(self):
        R = corpus_ring("z12")
        small = localize(R, [1, 5])
        big = localize(R, max_denominator_sets(R)[0])
        f = induced_map(small, big)
        assert f.verify().ok
        for r in R.elements:
            assert f(small.sigma(r)) == big.sigma(r)

    def test_induced_map_requires_inclusion(self):
        R = corpus_ring("z6")
        a, b = (localize(R, S) for S in max_denominator_sets(R))
        with pytest.raises(NoInducedMapError):
            induced_map(a, b)

    def test_product_map(self):
        R = corpus_ring("z6")
        locs = [localize(R, S) for S in max_denominator_sets(R)]
        P = product_map(trivial_localization(R), locs)
        assert P.is_injective and P.target_size == 6
        target, f = P.as_ring_map()
        assert f.is_isomorphism() and target.size == 6

    def test_multset_side_override(self):
        R = corpus_ring("l2_f2")
        S = make_multset(R, max_denominator_sets(R, "right")[0].members, "left")
        with pytest.raises(InvalidDenominatorError):
            localize(R, S)
        assert localize(R, S, side="right").side == "right"
