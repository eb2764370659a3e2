"""Binary block census: orbits, primitives, certificates, determination."""

import pytest

from linrec.errors import HypothesisError
from linrec.multiseq import MultiSpec
from linrec.orbits import (
    Orbit,
    block_index,
    block_sequence,
    classify_orbits,
    enumerate_blocks,
    format_block,
    format_shift,
    generation_certificate,
    positions_determine,
)
from linrec.rings import QQ, ZZ


@pytest.fixture(scope="module")
def orbits():
    return classify_orbits()


class TestEnumeration:
    def test_sixteen_blocks(self):
        blocks = enumerate_blocks()
        assert len(blocks) == 16
        assert len(set(blocks)) == 16

    def test_counting_order(self):
        blocks = enumerate_blocks()
        assert blocks[0] == (0, 0, 0, 0)
        assert blocks[1] == (1, 0, 0, 0)
        assert blocks[2] == (0, 1, 0, 0)
        assert blocks[15] == (1, 1, 1, 1)

    def test_index_round_trip(self):
        for i, b in enumerate(enumerate_blocks()):
            assert block_index(b) == i


class TestCensus:
    def test_five_orbits(self, orbits):
        assert len(orbits) == 5

    def test_sizes(self, orbits):
        assert sorted(o.size for o in orbits) == [1, 1, 2, 3, 9]

    def test_partition_covers_everything(self, orbits):
        seen = []
        for o in orbits:
            seen.extend(o.blocks())
        assert sorted(block_index(b) for b in seen) == list(range(16))

    def test_primitive_indices(self, orbits):
        assert [block_index(o.primitive) for o in orbits] == [0, 1, 6, 7, 9]

    def test_member_sets(self, orbits):
        by_primitive = {block_index(o.primitive): o for o in orbits}
        expected = {
            0: {0},
            1: {1, 2, 3, 4, 5, 8, 10, 12, 15},
            6: {6, 11, 13},
            7: {7},
            9: {9, 14},
        }
        for prim, indices in expected.items():
            got = {block_index(b) for b in by_primitive[prim].blocks()}
            assert got == indices

    def test_zero_block_is_alone(self, orbits):
        zero = orbits[0]
        assert zero.primitive == (0, 0, 0, 0)
        assert zero.size == 1

    def test_known_shifts(self, orbits):
        by_primitive = {block_index(o.primitive): o for o in orbits}
        b1 = dict(by_primitive[1].members)
        assert b1[(1, 0, 0, 0)] == (0, 0)
        assert b1[(0, 1, 0, 0)] == (1, 0)
        assert b1[(0, 0, 1, 0)] == (0, 1)
        assert b1[(0, 0, 0, 1)] == (1, 1)
        assert b1[(0, 0, 1, 1)] == (2, 1)
        assert b1[(0, 1, 0, 1)] == (1, 2)
        assert b1[(1, 1, 1, 1)] == (2, 2)
        b2 = dict(by_primitive[6].members)
        assert b2[(1, 1, 0, 1)] == (1, 0)
        assert b2[(1, 0, 1, 1)] == (0, 1)
        b3 = dict(by_primitive[9].members)
        assert b3[(0, 1, 1, 1)] in ((1, 0), (0, 1))

    def test_shifts_reproduce_members(self, orbits):
        for o in orbits:
            seq = block_sequence(o.primitive)
            for block, (i, j) in o.members:
                window = (
                    seq.term((i, j)).scalar().value,
                    seq.term((i + 1, j)).scalar().value,
                    seq.term((i, j + 1)).scalar().value,
                    seq.term((i + 1, j + 1)).scalar().value,
                )
                assert window == block

    def test_stable_under_larger_bound(self, orbits):
        wider = classify_orbits(search_bound=6)
        assert [(o.primitive, o.blocks()) for o in wider] == [
            (o.primitive, o.blocks()) for o in orbits
        ]

    def test_bound_too_small(self):
        with pytest.raises(ValueError):
            classify_orbits(search_bound=1)


class TestFormatting:
    def test_block_prints_second_row_on_top(self):
        assert format_block((1, 0, 0, 0)) == "0 0\n1 0"
        assert format_block((0, 1, 1, 0)) == "1 0\n0 1"

    def test_shift_names(self):
        assert format_shift((0, 0)) == "id"
        assert format_shift((1, 0)) == "H"
        assert format_shift((0, 1)) == "V"
        assert format_shift((1, 1)) == "HV"
        assert format_shift((2, 1)) == "H^2V"
        assert format_shift((1, 2)) == "HV^2"
        assert format_shift((2, 2)) == "H^2V^2"


class TestGenerationCertificate:
    def test_identity_matrix(self):
        matrix, det = generation_certificate()
        assert matrix == [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ]
        assert det == 1


class TestPositionsDetermine:
    @pytest.fixture
    def fib_spec(self):
        return MultiSpec(ZZ, [(1, 1), (1, 1)])

    def test_initial_block_positions(self, fib_spec):
        assert positions_determine(
            fib_spec, [(0, 0), (1, 0), (0, 1), (1, 1)]
        )

    def test_diagonal_fails(self, fib_spec):
        assert not positions_determine(
            fib_spec, [(0, 0), (1, 1), (2, 2), (3, 3)]
        )

    def test_mixed_set_succeeds(self, fib_spec):
        assert positions_determine(
            fib_spec, [(0, 0), (1, 0), (0, 1), (2, 2)]
        )

    def test_permutation_invariance(self, fib_spec):
        base = [(0, 0), (1, 0), (0, 1), (2, 2)]
        import itertools

        results = {
            positions_determine(fib_spec, list(p))
            for p in itertools.permutations(base)
        }
        assert results == {True}

    def test_duplicates_refused(self, fib_spec):
        with pytest.raises(HypothesisError):
            positions_determine(fib_spec, [(0, 0), (0, 0), (0, 1), (1, 1)])

    def test_wrong_count_refused(self, fib_spec):
        with pytest.raises(HypothesisError):
            positions_determine(fib_spec, [(0, 0), (1, 0), (0, 1)])

    def test_needs_two_axes(self):
        spec = MultiSpec(ZZ, [(1, 1)])
        with pytest.raises(HypothesisError):
            positions_determine(spec, [(0, 0), (1, 0)])

    def test_rational_spec_allowed(self):
        spec = MultiSpec(QQ, [(1, 1), (1, 1)])
        assert positions_determine(spec, [(0, 0), (1, 0), (0, 1), (1, 1)])

    def test_works_for_larger_orders(self):
        spec = MultiSpec(ZZ, [(1, 1, 1), (2, 1)])
        positions = [(n, k) for n in range(3) for k in range(2)]
        assert positions_determine(spec, positions)
