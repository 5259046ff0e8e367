import random

import pytest

from polycrt import (
    DegreeOutOfRangeError,
    InconsistentResiduesError,
    Polynomial,
    ResiduePair,
    check_consistency,
    crt_pair,
    encode,
    random_moduli_pair,
)
from polycrt.simulation import enumerate_polynomials, sample_polynomial

from conftest import REF_A, poly


class TestEncode:
    def test_reference_values(self, f2, reference_pair):
        a = poly(f2, REF_A)
        residues, witness = encode(a, reference_pair)
        assert residues.a1 == poly(f2, "x^7+x^2+x+1")
        assert residues.a2 == poly(f2, "x^5+x^4+x+1")
        assert witness.k2 == poly(f2, "x^4")

    def test_folding_identity(self, f2, reference_pair):
        a = poly(f2, REF_A)
        residues, witness = encode(a, reference_pair)
        assert witness.k1 * reference_pair.m1 + residues.a1 == a
        assert witness.k2 * reference_pair.m2 + residues.a2 == a

    def test_zero_polynomial(self, f2, reference_pair):
        residues, witness = encode(Polynomial(f2), reference_pair)
        assert residues.a1.is_zero and residues.a2.is_zero
        assert witness.k1.is_zero and witness.k2.is_zero

    def test_no_folding_below_first_modulus(self, f2, reference_pair):
        a = poly(f2, "x^5+x^3+1")
        residues, witness = encode(a, reference_pair)
        assert residues.a1 == a and residues.a2 == a
        assert witness.k1.is_zero and witness.k2.is_zero

    def test_degree_at_lcm_rejected(self, f2, reference_pair):
        with pytest.raises(DegreeOutOfRangeError):
            encode(poly(f2, "x^17"), reference_pair)

    def test_residue_pair_validates_degrees(self, f2, reference_pair):
        with pytest.raises(DegreeOutOfRangeError):
            ResiduePair(poly(f2, "x^8"), Polynomial(f2), reference_pair)
        with pytest.raises(DegreeOutOfRangeError):
            ResiduePair(Polynomial(f2), poly(f2, "x^11"), reference_pair)


class TestConsistency:
    def test_clean_residues_consistent(self, f2, reference_pair):
        residues, _ = encode(poly(f2, REF_A), reference_pair)
        assert check_consistency(residues)

    def test_scalar_disagreement_detected(self, f2, reference_pair):
        pair = ResiduePair(Polynomial(f2), poly(f2, "1"), reference_pair)
        assert not check_consistency(pair)

    def test_any_encoded_polynomial_consistent(self, f2, reference_pair):
        rng = random.Random(11)
        for _ in range(100):
            a = sample_polynomial(17, f2, rng)
            residues, _ = encode(a, reference_pair)
            assert check_consistency(residues)


class TestCrtPair:
    def test_reference_round_trip(self, f2, reference_pair):
        a = poly(f2, REF_A)
        residues, _ = encode(a, reference_pair)
        assert crt_pair(residues) == a

    def test_scalar_residues(self, f13):
        analysis = random_moduli_pair(f13, random.Random(2))
        c = poly(f13, "5")
        assert crt_pair(ResiduePair(c, c, analysis)) == c

    def test_inconsistent_residues_raise(self, f2, reference_pair):
        pair = ResiduePair(Polynomial(f2), poly(f2, "1"), reference_pair)
        with pytest.raises(InconsistentResiduesError):
            crt_pair(pair)

    def test_exhaustive_round_trip_micro_pair(self, f2, micro_pair):
        # All p^deg(lcm) polynomials below the lcm degree round-trip exactly.
        seen = {}
        for a in enumerate_polynomials(f2, micro_pair.lcm.degree):
            residues, _ = encode(a, micro_pair)
            assert crt_pair(residues) == a
            key = (residues.a1.coeffs, residues.a2.coeffs)
            assert key not in seen, "distinct polynomials share a residue pair"
            seen[key] = a

    def test_random_round_trips_mod13(self, f13):
        rng = random.Random(21)
        for _ in range(20):
            analysis = random_moduli_pair(f13, rng)
            for _ in range(10):
                a = sample_polynomial(analysis.lcm.degree, f13, rng)
                residues, _ = encode(a, analysis)
                assert crt_pair(residues) == a

    def test_recovered_k2_satisfies_cofactor_identity(self, f13):
        # k2 * gamma2 - k1 * gamma1 == (a1 - a2) / m for the encode witness.
        rng = random.Random(31)
        for _ in range(50):
            analysis = random_moduli_pair(f13, rng)
            a = sample_polynomial(analysis.lcm.degree, f13, rng)
            residues, witness = encode(a, analysis)
            lhs = witness.k2 * analysis.gamma2 - witness.k1 * analysis.gamma1
            assert lhs * analysis.m == residues.a1 - residues.a2
            assert crt_pair(residues) == a
