import itertools

import pytest

from oligoforge.codegen import (
    PRIMITIVE_POLYNOMIALS,
    SimplexCodeError,
    build_dna_code,
    code_properties,
    default_generator,
    load_dna_code,
    simplex_code,
    verify_code,
)
from oligoforge.seqcore import DnaSequence, binary_image, gc_content, mu

import oracles
from fixtures import (
    ALL_GA_LISTED,
    EXAMPLE_GENERATOR,
    EXAMPLE_WORDS_CONSTRUCTIBLE,
    MU1_ONE_WORDS,
    MU1_TWO_WORDS,
)


class TestSimplexCode:
    def test_reference_generator(self):
        code = simplex_code(3, EXAMPLE_GENERATOR)
        assert code.n == 7
        assert len(code.codewords) == 7
        assert all(w.count("1") == 4 for w in code.codewords)
        assert code.generator == EXAMPLE_GENERATOR

    def test_pairwise_intersection(self):
        code = simplex_code(3, EXAMPLE_GENERATOR)
        for a, b in itertools.combinations(code.codewords, 2):
            shared = sum(x == y == "1" for x, y in zip(a, b))
            assert shared == 2

    def test_smallest_dimension(self):
        code = simplex_code(2, "110")
        assert set(code.codewords) == {"110", "011", "101"}
        assert all(w.count("1") == 2 for w in code.codewords)

    def test_xor_closure(self):
        code = simplex_code(3)
        values = {int(w, 2) for w in code.codewords} | {0}
        for a in values:
            for b in values:
                assert a ^ b in values

    def test_rejects_constant_word(self):
        with pytest.raises(SimplexCodeError, match="weight 7"):
            simplex_code(3, "1111111")

    def test_rejects_wrong_weight(self):
        with pytest.raises(SimplexCodeError, match="weight"):
            simplex_code(3, "1110000")

    def test_rejects_non_simplex_constant_weight_word(self):
        # weight 4 and distinct shifts, but not closed under XOR
        with pytest.raises(SimplexCodeError):
            simplex_code(3, "1010101")

    def test_rejects_wrong_length(self):
        with pytest.raises(SimplexCodeError, match="length"):
            simplex_code(3, "11101000")

    def test_rejects_bad_characters(self):
        with pytest.raises(SimplexCodeError, match="bit string"):
            simplex_code(3, "111010x")

    def test_rejects_dimension_below_two(self):
        with pytest.raises(SimplexCodeError):
            simplex_code(1)

    def test_default_generators_all_verify(self):
        for m in PRIMITIVE_POLYNOMIALS:
            code = simplex_code(m)
            assert code.n == 2**m - 1
            assert code.generator == default_generator(m)

    def test_default_generator_m3_matches_reference(self):
        assert default_generator(3) == EXAMPLE_GENERATOR

    def test_no_default_for_large_dimension(self):
        with pytest.raises(SimplexCodeError, match="no default generator"):
            default_generator(9)


class TestBuildDnaCode:
    def test_reference_code_size(self):
        code = build_dna_code(simplex_code(3, EXAMPLE_GENERATOR))
        assert len(code.codewords) == 49
        assert len(set(code.codewords)) == 49
        assert code.properties.length == 7

    def test_listed_words_present(self):
        code = build_dna_code(simplex_code(3, EXAMPLE_GENERATOR))
        words = {w.text for w in code.codewords}
        for listed in EXAMPLE_WORDS_CONSTRUCTIBLE:
            assert listed in words

    def test_even_odd_pair_decodes_to_listed_word(self):
        code = build_dna_code(simplex_code(3, EXAMPLE_GENERATOR))
        by_components = {
            (binary_image(w).even, binary_image(w).odd): w.text for w in code.codewords
        }
        assert by_components[("0111010", "1110100")] == "TGGCTCA"
        assert by_components[(EXAMPLE_GENERATOR, EXAMPLE_GENERATOR)] == "GGGAGAA"

    def test_equal_components_give_ga_words(self):
        code = build_dna_code(simplex_code(3, EXAMPLE_GENERATOR))
        ga_words = {w.text for w in code.codewords if set(w.text) <= {"G", "A"}}
        assert set(ALL_GA_LISTED) <= ga_words
        assert len(ga_words) == 7

    def test_round_trip_components(self):
        code = build_dna_code(simplex_code(3, EXAMPLE_GENERATOR))
        shifts = set(simplex_code(3, EXAMPLE_GENERATOR).codewords)
        for w in code.codewords:
            img = binary_image(w)
            assert img.even in shifts
            assert img.odd in shifts

    def test_m2_code(self):
        code = build_dna_code(simplex_code(2, "110"))
        assert len(code.codewords) == 9
        assert code.properties.length == 3

    def test_deterministic_order(self):
        first = build_dna_code(simplex_code(3))
        second = build_dna_code(simplex_code(3))
        assert [w.text for w in first.codewords] == [w.text for w in second.codewords]


class TestCodeProperties:
    def test_reference_code_metadata(self):
        code = build_dna_code(simplex_code(3, EXAMPLE_GENERATOR))
        props = code.properties
        assert props.size == 49
        assert props.min_hamming_distance == 4
        assert props.gc_content == 4
        assert props.max_shift_match == 2

    def test_min_distance_matches_naive(self):
        for m, gen in ((2, "110"), (3, EXAMPLE_GENERATOR)):
            code = build_dna_code(simplex_code(m, gen))
            assert code.properties.min_hamming_distance == oracles.naive_min_distance(
                code.codewords
            )

    def test_gc_equals_even_weight(self):
        code = build_dna_code(simplex_code(3))
        for w in code.codewords:
            assert gc_content(w) == 4

    def test_metadata_equals_recomputation(self):
        code = build_dna_code(simplex_code(3))
        assert code_properties(code.codewords) == code.properties

    def test_non_constant_gc_reported(self):
        props = code_properties(["ACGT", "AAAA"])
        assert props.gc_content is None
        assert props.gc_values == (0, 2)

    def test_rejects_mixed_lengths(self):
        with pytest.raises(ValueError):
            code_properties(["ACG", "ACGT"])

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            code_properties([])

    def test_shift_bound_small_dimensions(self):
        for m in (2, 3, 4):
            code = build_dna_code(simplex_code(m))
            bound = 2 ** (m - 2)
            for w in code.codewords:
                for i in range(1, code.properties.length):
                    assert mu(w, i) <= bound


class TestShiftMatchValues:
    def test_mu1_values_of_named_words(self):
        for word in MU1_ONE_WORDS:
            assert mu(word, 1) == 1, word
        for word in MU1_TWO_WORDS:
            assert mu(word, 1) == 2, word

    def test_ga_words_have_zero_profile(self):
        for word in ALL_GA_LISTED:
            for i in range(len(word)):
                assert mu(word, i) == 0


class TestVerifyCode:
    def test_reference_code_passes(self):
        code = build_dna_code(simplex_code(3, EXAMPLE_GENERATOR))
        report = verify_code(code)
        assert report.passed
        assert report.min_hamming_distance == 4
        assert report.gc_constant
        assert report.max_shift_match == 2
        assert report.mu_bound == 2
        assert len(report.energies) == 49
        assert all(e <= 0 for e in report.energies.values())

    def test_report_renders(self):
        code = build_dna_code(simplex_code(2))
        text = verify_code(code).render_text()
        assert "codewords: 9" in text
        assert "verdict: PASS" in text

    def test_loaded_code_without_dimension(self):
        code = load_dna_code(["ACGT", "TGCA"])
        report = verify_code(code)
        assert report.mu_bound is None
        assert report.mu_bound_met

    def test_non_constant_gc_fails(self):
        code = load_dna_code(["ACGT", "AAAA"])
        report = verify_code(code)
        assert not report.gc_constant
        assert not report.passed
        assert "NOT CONSTANT" in report.render_text()

    def test_violated_bound_fails(self):
        # claim dimension 2 (bound 1) for words with larger shift matches
        code = load_dna_code(["GCG", "CGC"], m=2)
        report = verify_code(code)
        assert not report.mu_bound_met
        assert not report.passed

    def test_m4_scaling(self):
        code = build_dna_code(simplex_code(4))
        report = verify_code(code)
        assert report.size == 225
        assert report.max_shift_match <= 4
        assert report.mu_bound_met


class TestDnaCodeType:
    def test_mu_bound_property(self):
        assert build_dna_code(simplex_code(3)).mu_bound == 2
        assert load_dna_code(["ACGT"]).mu_bound is None

    def test_codewords_are_sequences(self):
        code = build_dna_code(simplex_code(2))
        assert all(isinstance(w, DnaSequence) for w in code.codewords)
