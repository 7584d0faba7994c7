import pytest

import oracles as O
from strongquot.corpus import corpus_ring
from strongquot.ring import is_semisimple, regular_elements
from strongquot.strong import (
    largest_strong_denominator_set,
    localization_radical,
    semisimplicity_criterion,
    strong_profile,
    strong_quotient_ring,
    strong_radical,
    strongly_localizable_set,
    weak_regular_sets,
)

# name -> side -> (number of denominator sets, number of maximal sets, |T|, |strong radical|, |Q^s|)
# frozen from the naive subset-scan oracle for sizes <= 16 and from the brute-force pipeline beyond
PROFILES = {
    "z4": {"left": (2, 1, 2, 1, 4), "both": (2, 1, 2, 1, 4)},
    "z6": {"left": (7, 2, 2, 1, 6), "both": (7, 2, 2, 1, 6)},
    "z8": {"left": (5, 1, 4, 1, 8)},
    "z9": {"left": (4, 1, 6, 1, 9)},
    "z12": {"left": (30, 2, 4, 1, 12)},
    "f4": {"left": (2, 1, 3, 1, 4)},
    "f2xf2": {"left": (3, 2, 1, 1, 4)},
    "z2xz3": {"left": (7, 2, 2, 1, 6)},
    "m2_f2": {"left": (6, 1, 6, 1, 16), "right": (6, 1, 6, 1, 16), "both": (6, 1, 6, 1, 16)},
    "l2_f2": {"left": (6, 1, 4, 4, 2), "right": (6, 1, 4, 4, 2), "both": (2, 1, 2, 1, 8)},
    "u2_f2": {"left": (6, 1, 4, 4, 2), "right": (6, 1, 4, 4, 2), "both": (2, 1, 2, 1, 8)},
    "l2_f3": {"left": (80, 1, 18, 9, 3), "right": (80, 1, 18, 9, 3), "both": (16, 1, 12, 1, 27)},
}


@pytest.mark.parametrize("name", sorted(PROFILES))
def test_frozen_profiles(name):
    R = corpus_ring(name)
    for side, (dens, maxs, t, ls, q) in PROFILES[name].items():
        p = strong_profile(R, side)
        got = (len(p.catalog), len(p.maximal), len(p.T), len(p.strong_radical), p.strong_quotient.carrier.size)
        assert got == (dens, maxs, t, ls, q), (name, side)
        assert p.ok


def test_T_and_CL_against_naive_oracle(small_corpus):
    for name, R in small_corpus:
        for side in ("left", "right", "both"):
            T, CL = O.naive_T(R, side)
            p = strong_profile(R, side)
            assert p.T == T and p.strongly_localizable == CL, (name, side)


def test_l2_f2_left_formulas():
    R = corpus_ring("l2_f2")
    corner = lambda x: R.structure.entry(x, 1, 1)  # noqa: E731
    assert largest_strong_denominator_set(R).members == {x for x in R.elements if corner(x) != 0}
    assert strong_radical(R).members == {x for x in R.elements if corner(x) == 0}
    assert strong_quotient_ring(R).carrier.size == 2


def test_accessors_agree(small_corpus):
    for name, R in small_corpus:
        p = strong_profile(R)
        assert strongly_localizable_set(R) == p.strongly_localizable
        assert weak_regular_sets(R) == (p.weak_regular, p.weak_left_regular)
        assert localization_radical(R) == p.localization_radical


def test_crosschecks_all_pass(small_corpus):
    for name, R in small_corpus:
        for side in ("left", "right", "both"):
            p = strong_profile(R, side)
            assert set(p.crosschecks) == {
                "CL_is_units_in_every_maximal_localization",
                "T_is_largest_with_its_ass",
                "T_is_preimage_of_quotient_units",
                "T_is_largest_inside_weak_left_regular",
                "T_is_largest_inside_weak_regular",
            }
            assert p.ok, (name, side)


def test_semiprime_path_T_is_regular():
    R = corpus_ring("z6")
    assert is_semisimple(R)
    assert strong_profile(R).T == regular_elements(R) == {1, 5}


class TestSemisimplicity:
    @pytest.mark.parametrize("name", ["z6", "m2_f2"])
    def test_all_true(self, name):
        for side in ("left", "right", "both"):
            rep = semisimplicity_criterion(corpus_ring(name), side)
            assert all(rep.strong.values()) and all(rep.classical.values()) and rep.ok

    def test_all_false(self):
        rep = semisimplicity_criterion(corpus_ring("z4"))
        assert not any(rep.strong.values()) and not any(rep.classical.values()) and rep.ok

    def test_strong_true_classical_false(self):
        rep = semisimplicity_criterion(corpus_ring("l2_f2"))
        assert all(rep.strong.values()) and not any(rep.classical.values()) and rep.ok

    def test_equivalences_on_small_corpus(self, small_corpus):
        for name, R in small_corpus:
            for side in ("left", "right", "both"):
                rep = semisimplicity_criterion(R, side)
                assert rep.strong_equivalent and rep.classical_equivalent, (name, side)
                assert all(v.ok for v in rep.consequences)
