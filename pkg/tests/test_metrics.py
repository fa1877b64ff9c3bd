import math

import pytest
from hypothesis import given, strategies as st

from verilab import metrics
from verilab.minilang import parse_program, tokenize


class TestHalsteadCounts:
    def test_hand_counted_fragment(self):
        counts = metrics.halstead_counts_from_source("x = a + a * b;")
        assert counts == metrics.HalsteadCounts(eta1=3, eta2=3, n1=3, n2=4)

    def test_empty_stream(self):
        assert metrics.halstead_counts_from_source("") == \
            metrics.HalsteadCounts(eta1=0, eta2=0, n1=0, n2=0)

    def test_return_statement(self):
        counts = metrics.halstead_counts_from_source("return 1;")
        assert counts == metrics.HalsteadCounts(eta1=1, eta2=1, n1=1, n2=1)

    def test_punctuation_excluded(self):
        counts = metrics.halstead_counts_from_source("( ) { } ; ,")
        assert counts == metrics.HalsteadCounts(eta1=0, eta2=0, n1=0, n2=0)

    @given(st.sampled_from([
        "x = a + a * b;", "return 1;", "let y = f(2, 3);",
        "if (x > 0) { y = y - 1; }",
    ]), st.sampled_from(["while (i < 9) { i = i + 1; }", "assert f(1) == 1;"]))
    def test_concatenation_sums_totals(self, left, right):
        a = metrics.halstead_counts_from_source(left)
        b = metrics.halstead_counts_from_source(right)
        both = metrics.halstead_counts_from_source(left + "\n" + right)
        assert both.n1 == a.n1 + b.n1
        assert both.n2 == a.n2 + b.n2
        # distinct counts are set-union cardinalities, so bounded by sums
        assert max(a.eta1, b.eta1) <= both.eta1 <= a.eta1 + b.eta1
        assert max(a.eta2, b.eta2) <= both.eta2 <= a.eta2 + b.eta2


class TestHalsteadDerived:
    def test_difficulty_hand_value(self):
        counts = metrics.HalsteadCounts(eta1=3, eta2=3, n1=3, n2=4)
        assert metrics.halstead_difficulty_raw(counts) == 2.0

    def test_difficulty_zero_operands(self):
        counts = metrics.HalsteadCounts(eta1=5, eta2=0, n1=5, n2=0)
        assert metrics.halstead_difficulty_raw(counts) == 0.0

    def test_difficulty_unit(self):
        counts = metrics.HalsteadCounts(eta1=2, eta2=2, n1=2, n2=2)
        assert metrics.halstead_difficulty_raw(counts) == 1.0

    def test_volume(self):
        counts = metrics.HalsteadCounts(eta1=3, eta2=3, n1=3, n2=4)
        assert metrics.halstead_volume(counts) == pytest.approx(7 * math.log2(6))

    def test_volume_degenerate(self):
        assert metrics.halstead_volume(metrics.HalsteadCounts(0, 0, 0, 0)) == 0.0
        assert metrics.halstead_volume(metrics.HalsteadCounts(1, 0, 4, 0)) == 0.0


class TestCyclomatic:
    def test_branchless(self):
        assert metrics.cyclomatic(parse_program("fn f() { return 1; }")) == 1

    def test_if_plus_while(self):
        src = "fn f(n) { if (n > 0) { n = 0; } while (n > 0) { n = n - 1; } return n; }"
        assert metrics.cyclomatic(parse_program(src)) == 3

    def test_nested_ifs(self):
        src = "fn f(n) { if (n > 0) { if (n > 1) { return 2; } } return 0; }"
        assert metrics.cyclomatic(parse_program(src)) == 3


class TestLocAndComments:
    def test_plain_code(self):
        src = "\n".join(f"let x{i} = {i};" for i in range(10))
        assert metrics.loc_and_comments(src) == (10, 0.0)

    def test_mixed(self):
        src = "\n".join(["# one", "# two"] + [f"let x{i} = {i};" for i in range(8)])
        loc, ratio = metrics.loc_and_comments(src)
        assert loc == 8
        assert ratio == pytest.approx(0.2)

    def test_comment_only_source(self):
        assert metrics.loc_and_comments("# note") == (1, 1.0)


class TestMaintainability:
    def test_worked_example(self):
        assert metrics.maintainability_index(100, 2, 10, 0.0) == pytest.approx(63.9130, abs=1e-3)

    def test_tiny_program_upper_clamp_region(self):
        assert metrics.maintainability_index(1, 1, 1, 0.0) == pytest.approx(99.8655, abs=1e-3)

    def test_lower_clamp(self):
        assert metrics.maintainability_index(1e12, 50, 10 ** 9, 0.0) == 0.0

    def test_bad_comment_ratio_rejected(self):
        with pytest.raises(metrics.DomainError):
            metrics.maintainability_index(10, 1, 1, 1.5)

    @given(st.floats(min_value=1, max_value=1e6),
           st.integers(min_value=1, max_value=50),
           st.integers(min_value=1, max_value=10000),
           st.floats(min_value=0, max_value=1))
    def test_range_and_monotonicity(self, volume, cyclo, loc, ratio):
        mi = metrics.maintainability_index(volume, cyclo, loc, ratio)
        assert 0.0 <= mi <= 100.0
        assert metrics.maintainability_index(volume * 2, cyclo, loc, ratio) <= mi
        assert metrics.maintainability_index(volume, cyclo + 1, loc, ratio) <= mi
        assert metrics.maintainability_index(volume, cyclo, loc * 2, ratio) <= mi

    def test_difficulty_endpoints(self):
        assert metrics.maintainability_difficulty(100.0) == 0.0
        assert metrics.maintainability_difficulty(0.0) == 1.0
        assert metrics.maintainability_difficulty(63.9130) == pytest.approx(0.360870)


class TestNormalization:
    def test_nearest_rank_percentile(self):
        norm = metrics.fit_normalizer(range(1, 101))
        assert norm.d_hat_95 == 95

    def test_singleton(self):
        assert metrics.fit_normalizer([5]).d_hat_95 == 5

    def test_all_zero_corpus(self):
        norm = metrics.fit_normalizer([0, 0, 0, 0])
        assert norm.d_hat_95 == 0
        assert metrics.normalized_halstead(3.0, norm) == 0.0

    def test_empty_corpus_rejected(self):
        with pytest.raises(metrics.EmptyCorpus):
            metrics.fit_normalizer([])

    def test_clip(self):
        norm = metrics.CorpusNormalizer(d_hat_95=4.0, corpus_size=10)
        assert metrics.normalized_halstead(2.0, norm) == 0.5
        assert metrics.normalized_halstead(10.0, norm) == 1.0

    @given(st.floats(min_value=0, max_value=100), st.floats(min_value=0.01, max_value=50))
    def test_normalized_range_and_monotone(self, d_hat, clip):
        norm = metrics.CorpusNormalizer(d_hat_95=clip, corpus_size=3)
        value = metrics.normalized_halstead(d_hat, norm)
        assert 0.0 <= value <= 1.0
        assert metrics.normalized_halstead(d_hat + 1.0, norm) >= value
        assert metrics.normalized_halstead(clip * 2, norm) == 1.0


class TestSampleDifficulty:
    def test_worked_example(self):
        assert metrics.sample_difficulty(0.25, 0.49) == pytest.approx(0.35)

    def test_annihilator_and_identity(self):
        assert metrics.sample_difficulty(0.0, 0.7) == 0.0
        assert metrics.sample_difficulty(1.0, 1.0) == 1.0

    # floor keeps the product above float underflow; zero stays reachable
    @given(st.one_of(st.just(0.0), st.floats(min_value=1e-9, max_value=1)),
           st.one_of(st.just(0.0), st.floats(min_value=1e-9, max_value=1)))
    def test_range_and_zero_iff(self, d_h, d_m):
        d = metrics.sample_difficulty(d_h, d_m)
        assert 0.0 <= d <= 1.0
        assert (d == 0.0) == (d_h == 0.0 or d_m == 0.0)

    @given(st.floats(min_value=0, max_value=0.9), st.floats(min_value=0, max_value=1))
    def test_monotone(self, d_h, d_m):
        assert metrics.sample_difficulty(d_h + 0.1, d_m) >= metrics.sample_difficulty(d_h, d_m)


def test_static_profile_is_pure():
    src = "fn f(n) {\n  # doubles n\n  if (n > 0) { return n * 2; }\n  return 0;\n}"
    assert metrics.static_profile(src) == metrics.static_profile(src)
