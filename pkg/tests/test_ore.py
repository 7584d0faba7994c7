import json

import numpy as np
import pytest

import oracles as O
from strongquot import _kernels
from strongquot.corpus import corpus_ring
from strongquot.errors import (
    CapacityError,
    InvalidDenominatorError,
    NoSuchAssError,
    NotMultiplicativeError,
    NotOreError,
    ZeroAbsorbedError,
)
from strongquot.ore import (
    DenominatorCatalog,
    MultSet,
    clear_caches,
    denominator_product,
    enumerate_denominator_sets,
    exhaustive_catalog,
    join,
    largest_denominator_set_for,
    left_ore_witness,
    make_multset,
    max_denominator_sets,
    monoid_closure,
    require_denominator,
    submonoid_lattice,
)
from strongquot.ring import make_cyclic_ring, opposite_ring

SIDES = ("left", "right", "both")
KERNEL_RINGS = ["z6", "z12", "l2_f2", "u2_f2", "m2_f2", "f2xf2"]


def sets_of(cat):
    return sorted(sorted(S.members) for S in cat.sets)


class TestExamples:
    def test_z6_catalog(self):
        R = corpus_ring("z6")
        cat = enumerate_denominator_sets(R, "left")
        assert sets_of(cat) == sorted([[1], [1, 3], [1, 4], [1, 5], [1, 2, 4], [1, 3, 5], [1, 2, 4, 5]])
        maxs = max_denominator_sets(R)
        assert sorted(sorted(S.members) for S in maxs) == [[1, 2, 4, 5], [1, 3, 5]]
        assert {frozenset(S.ass.members) for S in maxs} == {frozenset({0, 2, 4}), frozenset({0, 3})}

    def test_set_with_zero_product_is_not_multiplicative(self):
        with pytest.raises(NotMultiplicativeError):
            make_multset(corpus_ring("z6"), [1, 3, 4])

    def test_l2_f2_maximal_sets(self):
        R = corpus_ring("l2_f2")
        corner = {x for x in R.elements if R.structure.entry(x, 1, 1) != 0}
        assert [S.members for S in max_denominator_sets(R, "left")] == [corner]
        assert len(enumerate_denominator_sets(R, "left")) == 6
        assert len(enumerate_denominator_sets(R, "both")) == 2

    def test_f2xf2_two_maximal_sets(self):
        R = corpus_ring("f2xf2")
        maxs = max_denominator_sets(R)
        assert len(maxs) == 2 and all(len(S) == 2 for S in maxs)


class TestAgainstNaiveOracle:
    @pytest.mark.parametrize("side", SIDES)
    def test_catalog_equals_subset_scan(self, small_corpus, side):
        for name, R in small_corpus:
            naive = sorted(sorted(S) for S in O.naive_denominator_sets(R, side))
            assert sets_of(enumerate_denominator_sets(R, side)) == naive, name

    @pytest.mark.parametrize("side", ("left", "right"))
    def test_ass_equals_definition(self, small_corpus, side):
        for name, R in small_corpus:
            for S in enumerate_denominator_sets(R, side).sets:
                assert S.ass.members == O.ass(R, S.members, side), (name, sorted(S))

    def test_maximal_sets_equal_naive(self, small_corpus):
        for name, R in small_corpus:
            for side in SIDES:
                naive = sorted(sorted(S) for S in O.maximal(O.naive_denominator_sets(R, side)))
                assert sorted(sorted(S.members) for S in max_denominator_sets(R, side)) == naive, (name, side)

    def test_lattice_equals_subset_scan(self, small_corpus):
        for name, R in small_corpus:
            lat = submonoid_lattice(R)
            assert sorted(map(sorted, map(_to_set, lat.masks))) == sorted(map(sorted, O.naive_submonoids(R))), name


def _to_set(mask):
    return frozenset(i for i in range(mask.bit_length()) if (mask >> i) & 1)


class TestKernels:
    """The numba kernels against their pure-Python references."""

    @pytest.mark.parametrize("name", KERNEL_RINGS + ["l2_f3"])
    def test_lattice(self, name):
        R = corpus_ring(name)
        a = _kernels.submonoid_lattice(R.mul_table, R.zero, R.one, use_numba=True)
        b = _kernels.submonoid_lattice(R.mul_table, R.zero, R.one, use_numba=False)
        assert a[0] == b[0]
        for x, y in zip(a[1:], b[1:]):
            assert np.array_equal(x, y)

    @pytest.mark.parametrize("name", KERNEL_RINGS + ["l2_f3"])
    def test_flags_and_pairs(self, name):
        R = corpus_ring(name)
        masks, parent, gen, trans = _kernels.submonoid_lattice(R.mul_table, R.zero, R.one)
        for table in (R.mul_table, np.ascontiguousarray(R.mul_table.T)):
            fa = _kernels.denominator_flags(table, R.zero, masks, use_numba=True)
            fb = _kernels.denominator_flags(table, R.zero, masks, use_numba=False)
            assert np.array_equal(fa[0], fb[0]) and np.array_equal(fa[1], fb[1]) and fa[2] == fb[2]
            ids = np.flatnonzero(fa[1])
            chains = _kernels.generator_chains(parent, gen)
            pa = _kernels.pair_scan(trans, chains, ids, fa[1], use_numba=True)
            pb = _kernels.pair_scan(trans, chains, ids, fa[1], use_numba=False)
            assert pa[:3] == pb[:3] and np.array_equal(pa[3], pb[3])

    @pytest.mark.parametrize("name", KERNEL_RINGS)
    def test_row_scan(self, name):
        R = corpus_ring(name)
        lat = submonoid_lattice(R)
        cat = exhaustive_catalog(R)
        ids = [lat.index[m] for m in cat.masks]
        for s in ids:
            a = _kernels.row_scan(lat.trans, lat.chains, s, ids, use_numba=True)
            b = _kernels.row_scan(lat.trans, lat.chains, s, ids, use_numba=False)
            assert a == b

    def test_python_path_for_large_masks(self):
        R = corpus_ring("z12")
        masks, *_ = _kernels.submonoid_lattice(R.mul_table, R.zero, R.one, use_numba=False)
        ore, den, ass = _kernels.denominator_flags(R.mul_table, R.zero, masks, use_numba=False)
        assert den.all()  # commutative: every multiplicative set is a denominator set

    def test_join_id_matches_closure(self):
        R = corpus_ring("l2_f2")
        lat = submonoid_lattice(R)
        for a in range(len(lat)):
            for b in range(len(lat)):
                j = lat.join(a, b)
                gens = _to_set(lat.masks[a]) | _to_set(lat.masks[b])
                try:
                    closure = monoid_closure(R, gens).members
                except ZeroAbsorbedError:
                    assert j == -1
                    continue
                assert _to_set(lat.masks[j]) == closure


class TestMultSets:
    def test_direct_witnesses(self):
        R = corpus_ring("l2_f2")
        e22 = R.structure.unit_matrix(2, 2)
        S = MultSet(R, frozenset({R.one, e22}), "left")
        assert not S.is_denominator
        assert S.ore_witness is not None or S.kill_witness is not None

    def test_ass_refuses_non_ore(self):
        R = corpus_ring("m2_f2")
        e11 = R.structure.unit_matrix(1, 1)
        S = MultSet(R, frozenset({R.one, e11}), "left")
        assert left_ore_witness(R, S.members) is not None
        with pytest.raises(NotOreError) as info:
            S.ass
        assert info.value.witness is not None

    def test_closure_zero_absorbed(self):
        R = corpus_ring("z6")
        with pytest.raises(ZeroAbsorbedError) as info:
            monoid_closure(R, [2, 3])
        a, b = info.value.witness
        assert R.mul(a, b) == R.zero

    def test_require_denominator(self):
        R = corpus_ring("m2_f2")
        with pytest.raises(InvalidDenominatorError):
            require_denominator(MultSet(R, frozenset({R.one, R.structure.unit_matrix(1, 1)}), "left"))

    def test_product_and_join(self):
        R = corpus_ring("z12")
        S, T = make_multset(R, [1, 5]), make_multset(R, [1, 7])
        P = denominator_product(R, S, T)
        assert P.members == {1, 5, 7, 11} and P.is_denominator
        assert join(R, [S, T]).members == P.members

    def test_largest_with_given_ass(self):
        R = corpus_ring("l2_f2")
        S0 = largest_denominator_set_for(R, [R.zero])
        assert len(S0) == 2
        with pytest.raises(NoSuchAssError):
            largest_denominator_set_for(R, [R.zero, 1, 2])


class TestCatalogs:
    def test_capacity(self):
        R = corpus_ring("l2_f3")
        cat = enumerate_denominator_sets(R, "left", cap=8)
        assert not cat.exhaustive and len(cat) > 0
        for S in cat.sets:
            assert S.is_denominator
        with pytest.raises(CapacityError):
            exhaustive_catalog(R, "left", cap=8)
        with pytest.raises(CapacityError):
            cat.pair_scan()

    def test_opposite_side_symmetry(self, small_corpus):
        for name, R in small_corpus:
            a = sets_of(enumerate_denominator_sets(R, "right"))
            b = sets_of(enumerate_denominator_sets(opposite_ring(R), "left"))
            assert a == b, name

    def test_disk_cache_roundtrip(self, tmp_path):
        R = make_cyclic_ring(12)
        clear_caches()
        R._memo.clear()
        first = enumerate_denominator_sets(R, "left", cache_dir=tmp_path)
        first.pair_scan()
        files = sorted(p.name for p in tmp_path.iterdir())
        assert any(f.endswith("-left-full.json") for f in files)
        assert any(f.endswith("-left-pairs.json") for f in files)
        data = json.loads(next(tmp_path.glob("*-full.json")).read_text())
        assert data["schema"] == 1 and data["digest"] == R.digest
        clear_caches()
        R2 = make_cyclic_ring(12)
        second = enumerate_denominator_sets(R2, "left", cache_dir=tmp_path)
        assert second.masks == first.masks and second.ass_masks == first.ass_masks
        assert second.pair_scan() == first.pair_scan()

    def test_corrupt_cache_is_ignored(self, tmp_path):
        R = make_cyclic_ring(9)
        clear_caches()
        enumerate_denominator_sets(R, "left", cache_dir=tmp_path)
        for p in tmp_path.glob("*.json"):
            p.write_text("{not json")
        clear_caches()
        R2 = make_cyclic_ring(9)
        cat = enumerate_denominator_sets(R2, "left", cache_dir=tmp_path)
        assert sets_of(cat) == sorted(sorted(S) for S in O.naive_denominator_sets(R2))

    def test_criterion_violation_marks_exactly_the_non_maximal(self, small_corpus):
        for name, R in small_corpus:
            for side in SIDES:
                cat = exhaustive_catalog(R, side)
                for i in range(len(cat)):
                    T = cat.criterion_violation(i)
                    assert (T is None) == (i in cat.maximal_positions), (name, side, i)
                    if T is not None:
                        assert not T <= _to_set(cat.masks[i])

    def test_catalog_positions(self):
        R = corpus_ring("z6")
        cat = enumerate_denominator_sets(R)
        assert isinstance(cat, DenominatorCatalog)
        assert cat.position([1, 5]) is not None and cat.position([1, 3, 4]) is None
        assert cat.ass_of(cat.position([1, 3])).members == {0, 2, 4}
