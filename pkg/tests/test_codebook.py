import math
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from csseq import (
    BaseParams,
    Codebook,
    CodebookSpec,
    base_cs,
    code_rate,
    concat_cs,
    enumerate_codebook,
    enumerate_constrained_permutations,
    floor_log,
    format_fixed,
    hamming_distance,
    is_complementary_set,
    iter_codewords,
    min_hamming_distance,
    predicted_dmin,
    render_table,
    size_formula,
)

from oracles import naive_min_hamming


def param_grid(spec, perms):
    """BaseParams tuples in the same lexicographic order iter_codewords uses."""
    q, m, v = spec.q, spec.m, spec.v
    lam_space = [(0,) * v] if spec.restricted else list(product(range(q), repeat=v))
    mu_m_space = (0,) if spec.restricted else tuple(range(q))
    for perm in perms:
        for lam in lam_space:
            for mu_head in product(range(q), repeat=m - 1):
                for mu_m in mu_m_space:
                    for mu0 in range(q):
                        yield BaseParams(q, m, v, perm=perm, lam=lam,
                                         mu=mu_head + (mu_m,), mu0=mu0)


class TestSpec:
    def test_validation(self):
        with pytest.raises(ValueError):
            CodebookSpec("c5", 2, 4, 1)
        with pytest.raises(ValueError):
            CodebookSpec("c2", 3, 4, 1)
        with pytest.raises(ValueError):
            CodebookSpec("c2", 2, 2, 1)
        with pytest.raises(ValueError):
            CodebookSpec("c2", 2, 4, 3)
        with pytest.raises(ValueError):
            CodebookSpec("c2", 2, 4, 1, -1)
        with pytest.raises(ValueError, match="no null gap"):
            CodebookSpec("c1", 2, 4, 1, 2)

    def test_flags_and_lengths(self):
        bare = CodebookSpec("c1", 2, 4, 1)
        assert not bare.padded and not bare.restricted
        assert bare.length == 10
        padded = CodebookSpec("c2", 2, 4, 1, 3)
        assert padded.padded and not padded.restricted
        assert padded.length == 16 + 4 + 3
        assert CodebookSpec("c3", 2, 4, 1).restricted
        assert CodebookSpec("c21", 2, 4, 1).restricted


class TestSizeAndEnumeration:
    def test_size_formula_values(self):
        assert size_formula(CodebookSpec("c2", 2, 3, 1)) == 32
        assert size_formula(CodebookSpec("c1", 2, 3, 1)) == 32
        assert size_formula(CodebookSpec("c3", 2, 3, 1)) == 8
        assert size_formula(CodebookSpec("c21", 2, 3, 1)) == 8
        assert size_formula(CodebookSpec("c3", 2, 6, 3)) == 6 * 2 * 64
        assert size_formula(CodebookSpec("c21", 4, 5, 2)) == 4 ** 5

    def test_enumerate_counts_and_distinctness(self):
        for variant, want in (("c1", 32), ("c2", 32), ("c3", 8), ("c21", 8)):
            cb = enumerate_codebook(CodebookSpec(variant, 2, 3, 1, 0))
            assert cb.raw_count == want == size_formula(cb.spec)
            assert cb.distinct_count == want
            assert cb.collisions == ()
            assert len(cb) == want

    def test_cap_is_an_error_not_a_truncation(self):
        with pytest.raises(ValueError, match="cap"):
            enumerate_codebook(CodebookSpec("c2", 2, 3, 1), cap=10)

    def test_duplicated_perms_collide_predictably(self):
        spec = CodebookSpec("c21", 2, 3, 1)
        perm = next(iter(enumerate_constrained_permutations(3, 1)))
        cb = enumerate_codebook(spec, perms=[perm, perm])
        assert cb.raw_count == 16
        assert cb.distinct_count == 8
        assert cb.collisions == tuple((i, i + 8) for i in range(8))

    def test_codeword_shapes(self):
        for spec in (CodebookSpec("c1", 2, 4, 2),
                     CodebookSpec("c2", 2, 4, 2, 3),
                     CodebookSpec("c3", 4, 4, 1, 1)):
            for w in iter_codewords(spec):
                assert len(w) == spec.length
                assert w.q == spec.q
                assert w.null_count == (spec.b if spec.padded else 0)
                break

    def test_perm_override_must_match(self):
        spec = CodebookSpec("c2", 2, 4, 1)
        wrong = next(iter(enumerate_constrained_permutations(4, 2)))
        with pytest.raises(ValueError):
            list(iter_codewords(spec, perms=[wrong]))


class TestConstructEquivalence:
    # codewords must be exactly the leader sequences of the construct module
    def test_padded_words_are_concat_members(self):
        spec = CodebookSpec("c2", 2, 3, 1, b=2)
        perms = list(enumerate_constrained_permutations(3, 1))
        words = list(iter_codewords(spec))
        params = list(param_grid(spec, perms))
        assert len(words) == len(params)
        for w, p in zip(words, params):
            assert w == concat_cs(p, spec.b)[0]

    def test_bare_words_are_base_members(self):
        spec = CodebookSpec("c1", 4, 3, 1)
        perms = list(enumerate_constrained_permutations(3, 1))
        for w, p in zip(iter_codewords(spec), param_grid(spec, perms)):
            assert w == base_cs(p)[0]

    def test_restricted_words_are_concat_members(self):
        spec = CodebookSpec("c3", 2, 4, 1, b=1)
        perms = list(enumerate_constrained_permutations(4, 1))
        for w, p in zip(iter_codewords(spec), param_grid(spec, perms)):
            assert p.lam == (0,) and p.mu[-1] == 0
            assert w == concat_cs(p, spec.b)[0]

    def test_every_codeword_family_is_complementary(self):
        spec = CodebookSpec("c2", 2, 3, 1, b=1)
        perms = list(enumerate_constrained_permutations(3, 1))
        for p in param_grid(spec, perms):
            assert is_complementary_set(concat_cs(p, spec.b))


class TestRateArithmetic:
    def test_floor_log_exact_edges(self):
        assert floor_log(2, 7) == 2
        assert floor_log(2, 8) == 3
        assert floor_log(10, 10 ** 15) == 15
        assert floor_log(10, 10 ** 15 - 1) == 14
        assert floor_log(6, 6 ** 7) == 7
        assert floor_log(6, 6 ** 7 - 1) == 6
        assert floor_log(2, 1) == 0
        with pytest.raises(ValueError):
            floor_log(1, 5)
        with pytest.raises(ValueError):
            floor_log(2, 0)

    def test_code_rate_is_exact(self):
        assert code_rate(CodebookSpec("c2", 2, 3, 1)) == Fraction(5, 12)
        assert code_rate(CodebookSpec("c3", 2, 3, 1)) == Fraction(3, 12)
        assert code_rate(CodebookSpec("c21", 2, 5, 1, 2)) == Fraction(5, 38)

    def test_reference_spot_cells(self):
        assert format_fixed(code_rate(CodebookSpec("c2", 2, 3, 1, 0))) == "0.4167"
        assert format_fixed(code_rate(CodebookSpec("c2", 2, 6, 4, 6))) == "0.1471"
        assert format_fixed(code_rate(CodebookSpec("c2", 4, 4, 1, 1))) == "0.2857"

    def test_round_half_up(self):
        # 15/96 = 0.15625 must round up, not to even
        assert format_fixed(Fraction(15, 96)) == "0.1563"
        assert format_fixed(Fraction(1, 8), places=2) == "0.13"
        assert format_fixed(Fraction(1, 3)) == "0.3333"
        assert format_fixed(2.0) == "2.0000"


class TestMinDistance:
    def test_matches_naive_oracle(self):
        cb = enumerate_codebook(CodebookSpec("c3", 2, 4, 1, 1))
        want, _, _ = naive_min_hamming([list(w.values) for w in cb.codewords])
        assert min_hamming_distance(cb) == want

    def test_needs_two_codewords(self):
        cb = enumerate_codebook(CodebookSpec("c21", 2, 3, 1))
        lone = Codebook(spec=cb.spec, codewords=cb.codewords[:1], raw_count=1)
        with pytest.raises(ValueError):
            min_hamming_distance(lone)

    def test_comparison_budget(self):
        cb = enumerate_codebook(CodebookSpec("c21", 2, 3, 1))
        with pytest.raises(ValueError, match="budget"):
            min_hamming_distance(cb, max_comparisons=10)


class TestPredictions:
    def test_prediction_table(self):
        assert predicted_dmin(CodebookSpec("c1", 2, 5, 2), "same-perm") == 8
        assert predicted_dmin(CodebookSpec("c1", 2, 5, 2), "differing-perm") == 4
        assert predicted_dmin(CodebookSpec("c2", 2, 5, 1), "same-perm") == 16
        assert predicted_dmin(CodebookSpec("c2", 2, 5, 1), "differing-perm") == 8
        assert predicted_dmin(CodebookSpec("c3", 2, 3, 1), "union") == 4
        assert predicted_dmin(CodebookSpec("c3", 2, 5, 1), "union") == 8
        assert predicted_dmin(CodebookSpec("c21", 2, 4, 1), "same-perm") == 8
        assert predicted_dmin(CodebookSpec("c21", 2, 4, 1), "union") == 8

    def test_context_and_range_errors(self):
        with pytest.raises(ValueError):
            predicted_dmin(CodebookSpec("c2", 2, 4, 1), "sideways")
        with pytest.raises(ValueError):
            predicted_dmin(CodebookSpec("c1", 2, 4, 1), "union")
        with pytest.raises(ValueError):
            predicted_dmin(CodebookSpec("c2", 2, 4, 1), "union")
        with pytest.raises(ValueError):
            predicted_dmin(CodebookSpec("c2", 2, 4, 2), "differing-perm")
        with pytest.raises(ValueError):
            predicted_dmin(CodebookSpec("c3", 2, 4, 2), "union")
        with pytest.raises(ValueError):
            predicted_dmin(CodebookSpec("c21", 2, 4, 1), "differing-perm")

    def test_single_perm_restricted_subcodes_attain_predictions(self):
        # same-perm and differing-perm claims checked by direct enumeration
        m, v = 4, 1
        spec = CodebookSpec("c3", 2, m, v, b=0)
        perms = list(enumerate_constrained_permutations(m, v))
        codes = [list(iter_codewords(spec, perms=[p])) for p in perms[:2]]
        same = min(
            hamming_distance(a, b)
            for code in codes for i, a in enumerate(code) for b in code[i + 1:]
        )
        assert same == predicted_dmin(CodebookSpec("c2", 2, m, v), "same-perm")
        cross = min(
            hamming_distance(a, b) for a in codes[0] for b in codes[1]
        )
        assert cross == predicted_dmin(CodebookSpec("c2", 2, m, v), "differing-perm")
        # bare leaders: slice off the null-free prefix of length L
        L = (1 << (m - 1)) + (1 << v)
        heads = [[w.values[:L] for w in code] for code in codes]
        same_bare = min(
            int((a != b).sum())
            for code in heads for i, a in enumerate(code) for b in code[i + 1:]
        )
        assert same_bare == predicted_dmin(CodebookSpec("c1", 2, m, v), "same-perm")
        cross_bare = min(
            int((a != b).sum()) for a in heads[0] for b in heads[1]
        )
        assert cross_bare == predicted_dmin(
            CodebookSpec("c1", 2, m, v), "differing-perm"
        )

    def test_union_codes_attain_predictions(self):
        for m in (3, 4):
            cb = enumerate_codebook(CodebookSpec("c3", 2, m, 1, 0))
            assert min_hamming_distance(cb) == predicted_dmin(cb.spec, "union")
        for m in (3, 4, 5):
            cb = enumerate_codebook(CodebookSpec("c21", 2, m, 1, 0))
            assert min_hamming_distance(cb) == 1 << (m - 1)

    def test_full_grid_bare_code_can_have_distance_one(self):
        # a lone lam difference hits only indices with x_pi(1) = x_m = 1,
        # of which just one lies below the cutoff at v=1: the prediction
        # genuinely needs the restricted grid
        cb = enumerate_codebook(CodebookSpec("c1", 2, 4, 1))
        assert min_hamming_distance(cb) == 1


TABLE6_REFERENCE = {
    # (b, m, v): (printed_length, code_rate, d_min)
    (0, 3, 1): (6, "0.2500", 4), (0, 4, 1): (10, "0.2500", 4),
    (0, 5, 1): (18, "0.1944", 8), (0, 5, 2): (20, "0.1750", 8),
    (0, 6, 1): (34, "0.1471", 16), (0, 6, 2): (36, "0.1250", 16),
    (0, 6, 3): (40, "0.1125", 16),
    (1, 3, 1): (7, "0.2308", 4), (1, 4, 1): (11, "0.2381", 4),
    (1, 5, 1): (19, "0.1892", 8), (1, 5, 2): (21, "0.1707", 8),
    (1, 6, 1): (35, "0.1449", 16), (1, 6, 2): (37, "0.1233", 16),
    (1, 6, 3): (41, "0.1111", 16),
    (2, 3, 1): (8, "0.2143", 4), (2, 4, 1): (12, "0.2273", 4),
    (2, 5, 1): (20, "0.1842", 8), (2, 5, 2): (22, "0.1667", 8),
    (2, 6, 1): (36, "0.1429", 16), (2, 6, 2): (38, "0.1216", 16),
    (2, 6, 3): (42, "0.1098", 16),
}


class TestTables:
    def test_restricted_code_table_matches_reference_values(self):
        import csv
        import io
        rows = list(csv.reader(io.StringIO(render_table(6))))
        assert rows[0] == ["b", "m", "v", "length_as_printed",
                           "codeword_length", "code_rate", "d_min"]
        assert len(rows) == 22
        for b, m, v, printed, full, rate, dmin in rows[1:]:
            want = TABLE6_REFERENCE[(int(b), int(m), int(v))]
            assert (int(printed), rate, int(dmin)) == want
            assert int(full) == (1 << int(m)) + (1 << (int(v) + 1)) + int(b)

    def test_rate_table_shape(self):
        import csv
        import io
        rows = list(csv.reader(io.StringIO(render_table(3))))
        assert len(rows) == 8 and len(rows[0]) == 11
        assert rows[1][0] == "0" and rows[1][1] == "0.4167"

    def test_unknown_table(self):
        with pytest.raises(ValueError):
            render_table(5)
