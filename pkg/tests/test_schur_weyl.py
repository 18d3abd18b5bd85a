import random

import pytest

from plethyra.diagrams import PartitionDiagram, RamifiedDiagram, compose, ramified_compose
from plethyra.partitions import bell_number, line_set_partitions
from plethyra.schur_weyl import (
    BudgetError,
    SparseExactMatrix,
    check_commute,
    diagram_action,
    faithfulness_rank,
    flatten_index,
    minimal_r_tuple,
    orbit_action,
    ramified_action,
    ramified_generators,
    sym_action,
    value_type,
    ramified_value_type,
    wreath_embed,
    wreath_generators,
)


def all_diagrams(r):
    return [PartitionDiagram(r, r, blocks) for blocks in line_set_partitions(2 * r)]


def rand_perm(rng, d):
    p = list(range(1, d + 1))
    rng.shuffle(p)
    return tuple(p)


class TestSymAction:
    def test_identity(self):
        mat = sym_action((1, 2, 3), 3, 2)
        assert all(dest == src for (dest, src), _ in mat.entries())
        assert mat.nnz() == 9

    def test_permutation_matrix_shape(self):
        rng = random.Random(0)
        for _ in range(5):
            sigma = rand_perm(rng, 3)
            mat = sym_action(sigma, 3, 2)
            assert mat.nnz() == 9
            assert all(v == 1 for _, v in mat.entries())

    def test_composition_convention(self):
        rng = random.Random(1)
        for _ in range(20):
            s, t = rand_perm(rng, 3), rand_perm(rng, 3)
            st = tuple(s[t[i] - 1] for i in range(3))
            assert sym_action(st, 3, 2) == sym_action(s, 3, 2) @ sym_action(t, 3, 2)


class TestDiagramAction:
    def test_identity_diagram(self):
        ident = PartitionDiagram.identity(2)
        mat = diagram_action(ident, 3, 2)
        assert all(src == dest for (src, dest), _ in mat.entries())
        assert mat.nnz() == 9

    def test_p1_all_ones(self):
        p1 = PartitionDiagram.p_gen(1, 1)
        mat = diagram_action(p1, 2, 1)
        assert sorted(mat.entries()) == [
            (((1,), (1,)), 1), (((1,), (2,)), 1), (((2,), (1,)), 1), (((2,), (2,)), 1)
        ]

    @pytest.mark.parametrize("d", (2, 3))
    def test_coarsening_identity_exhaustive(self, d):
        for diag in all_diagrams(2):
            total = SparseExactMatrix()
            for coarse in diag.coarser_diagrams():
                total = total + orbit_action(coarse, d, 2)
            assert total == diagram_action(diag, d, 2)

    def test_algebra_map_random(self):
        rng = random.Random(7)
        diags = all_diagrams(2)
        for _ in range(100):
            d1, d2 = rng.choice(diags), rng.choice(diags)
            sc = compose(d1, d2)
            lhs = diagram_action(sc.diagram, 3, 2).scale(3 ** sc.exp_out)
            assert lhs == diagram_action(d1, 3, 2) @ diagram_action(d2, 3, 2)

    def test_left_right_consistency(self):
        rng = random.Random(8)
        diags = all_diagrams(2)
        for _ in range(30):
            sigma = rand_perm(rng, 3)
            a = sym_action(sigma, 3, 2)
            op = diagram_action(rng.choice(diags), 3, 2).transpose()
            assert a @ op == op @ a


class TestWreathEmbedding:
    def test_identity(self):
        assert wreath_embed(((1, 2), (1, 2)), (1, 2), 2, 2) == (1, 2, 3, 4)

    def test_pure_top_permutes_blocks(self):
        embedded = wreath_embed(((1, 2), (1, 2)), (2, 1), 2, 2)
        assert embedded == (3, 4, 1, 2)

    def test_homomorphism_random(self):
        # group law matching the embedding:
        # (sigma; pi)(tau; rho) = ((sigma_k tau_{pi^-1(k)}); pi o rho)
        rng = random.Random(12)
        m = n = 2

        def rand_elt():
            return (tuple(rand_perm(rng, m) for _ in range(n)), rand_perm(rng, n))

        def mult(g, h):
            (sig, pi), (tau, rho) = g, h
            pi_inv = [0] * n
            for j in range(n):
                pi_inv[pi[j] - 1] = j + 1
            new_base = tuple(
                tuple(sig[k][tau[pi_inv[k] - 1][i - 1] - 1] for i in range(1, m + 1))
                for k in range(n)
            )
            new_top = tuple(pi[rho[j] - 1] for j in range(n))
            return (new_base, new_top)

        for _ in range(100):
            g, h = rand_elt(), rand_elt()
            eg = wreath_embed(*g, m, n)
            eh = wreath_embed(*h, m, n)
            composed = tuple(eg[eh[x - 1] - 1] for x in range(1, m * n + 1))
            assert composed == wreath_embed(*mult(g, h), m, n)

    def test_generators_count(self):
        gens = wreath_generators(2, 3)
        assert len(gens) == 3 * 1 + 2


class TestRamifiedAction:
    def test_identity(self):
        ident = RamifiedDiagram.diagonal(PartitionDiagram.identity(2))
        mat = ramified_action(ident, 2, 2, 2)
        assert all(src == dest for (src, dest), _ in mat.entries())

    def test_diagonal_matches_plain_action(self):
        m = n = 2
        for diag in all_diagrams(2):
            ram = ramified_action(RamifiedDiagram.diagonal(diag), m, n, 2)
            plain = diagram_action(diag, m * n, 2)
            assert ram == plain

    def test_respects_composition(self):
        rng = random.Random(21)
        m = n = 2
        rams = []
        for d in all_diagrams(2):
            for coarse in d.coarser_diagrams():
                rams.append(RamifiedDiagram(d, coarse))
        for _ in range(60):
            r1, r2 = rng.choice(rams), rng.choice(rams)
            sc = ramified_compose(r1, r2)
            lhs = ramified_action(sc.diagram, m, n, 2).scale(
                m ** sc.exp_in * n ** sc.exp_out
            )
            assert lhs == ramified_action(r1, m, n, 2) @ ramified_action(r2, m, n, 2)

    def test_flatten_convention(self):
        assert flatten_index(1, 1, 3) == 1
        assert flatten_index(3, 2, 3) == 6


class TestCommutation:
    def test_small_cases(self):
        assert check_commute(2, 2, 2)
        assert check_commute(2, 2, 3)

    def test_asymmetric_case(self):
        assert check_commute(2, 3, 2)
        assert check_commute(3, 2, 2)

    def test_negative_control(self):
        assert not check_commute(2, 3, 2, swap_roles=True)
        assert not check_commute(3, 2, 2, swap_roles=True)

    def test_budget(self):
        with pytest.raises(BudgetError):
            check_commute(3, 3, 5, cap=10**4)

    def test_generator_inventory(self):
        kinds = len(ramified_generators(3))
        # s_1, s_2; p_1..p_3 and inner-only versions; p_{12}, p_{23} and outer-only
        assert kinds == 2 + 3 * 2 + 2 * 2


class TestFaithfulness:
    def test_rank_full(self):
        assert faithfulness_rank(4, 2) == 15 == bell_number(4)

    def test_rank_deficient_below_threshold(self):
        assert faithfulness_rank(2, 2) < 15

    def test_rank_trivial(self):
        assert faithfulness_rank(1, 1) == 1

    def test_budget(self):
        with pytest.raises(BudgetError):
            faithfulness_rank(6, 3, cap=10**3)

    @pytest.mark.slow
    def test_rank_six_three(self):
        assert faithfulness_rank(6, 3) == bell_number(6) == 203


class TestValueTypes:
    def test_plain_example(self):
        e = (1, 1, 1, 2, 3, 2, 3)
        assert value_type(e) == ((1, 2, 3), (4, 6), (5, 7))

    def test_constant_tensor(self):
        assert value_type((2, 2, 2)) == ((1, 2, 3),)
        pure = tuple((1, 1) for _ in range(4))
        r_part, s_part = ramified_value_type(pure)
        assert r_part == s_part == ((1, 2, 3, 4),)

    def test_worked_ramified_example(self):
        v = ((2, 1), (1, 1), (1, 1), (3, 2), (2, 3), (3, 2), (3, 3))
        r_part, s_part = ramified_value_type(v)
        assert s_part == ((1, 2, 3), (4, 6), (5, 7))
        assert r_part == ((1,), (2, 3), (4, 6), (5,), (7,))
        assert minimal_r_tuple(r_part, s_part) == (1, 2, 2, 1, 1, 1, 2)

    def test_minimal_tuple_requires_refinement(self):
        with pytest.raises(ValueError):
            minimal_r_tuple(((1, 2),), ((1,), (2,)))

    def test_minimal_tuple_realizes_type(self):
        rng = random.Random(5)
        for _ in range(40):
            pairs = tuple((rng.randint(1, 3), rng.randint(1, 3)) for _ in range(6))
            r_part, s_part = ramified_value_type(pairs)
            minimal = minimal_r_tuple(r_part, s_part)
            # reassemble with fresh superscripts per S-block
            supers = {}
            for idx, block in enumerate(s_part):
                for v in block:
                    supers[v] = idx + 1
            rebuilt = tuple(
                (minimal[pos - 1], supers[pos]) for pos in range(1, 7)
            )
            assert ramified_value_type(rebuilt) == (r_part, s_part)
