import random
from dataclasses import replace
from fractions import Fraction

import pytest

from curvefoundry.catalog import (
    SUSPECT,
    FamilyRecord,
    builtin_families,
    family_names,
    get_family,
    rho_value,
    validate_family,
)
from curvefoundry.polyring import RatPoly, classify_cm, cyclotomic

X = RatPoly.x()


def parametric_records():
    return [r for r in builtin_families() if r.is_parametric]


def clean_records():
    return [r for r in parametric_records() if SUSPECT not in r.flags]


class TestCatalogShape:
    def test_at_least_30_records(self):
        assert len(builtin_families()) >= 30

    def test_names_unique(self):
        names = family_names()
        assert len(names) == len(set(names))

    def test_expected_members_present(self):
        for name in ("BN", "BLS12", "BLS24", "BLS48", "KSS8-D3", "KSS8-D1", "KSS16",
                     "KSS18", "KSS32", "KSS36", "KSS40", "MNT3a", "MNT4a", "MNT6b",
                     "Freeman10", "BWodd5", "DryloCVD9", "DryloSparse10", "FK5",
                     "ScottGuillevic54", "CocksPinch", "Supersingular"):
            get_family(name)

    def test_lookup_bn(self):
        bn = get_family("BN")
        assert bn.k == 12
        assert rho_value(bn) == 1
        assert bn.D == 3

    def test_lookup_bls12(self):
        bls = get_family("BLS12")
        expected_q = (X - 1) ** 2 * (X**4 - X**2 + 1) * Fraction(1, 3) + X
        assert bls.q == expected_q
        assert bls.r == cyclotomic(12)

    def test_lookup_freeman_prime_order(self):
        fm = get_family("Freeman10")
        assert fm.h == RatPoly.one()
        assert (fm.q + 1 - fm.t - fm.r).is_zero()

    def test_bn_trace(self):
        bn = get_family("BN")
        assert bn.t == RatPoly.from_list([1, 0, 6])
        assert (bn.q + 1 - bn.r - bn.t).is_zero()

    def test_bls24_from_bls_rule(self):
        b = get_family("BLS24")
        assert b.r == RatPoly.from_list([1, 0, 0, 0, -1, 0, 0, 0, 1])
        assert b.q == (X - 1) ** 2 * b.r * Fraction(1, 3) + X

    def test_supersingular_stub_k_constraint(self):
        stub = get_family("Supersingular")
        assert stub.taxonomy == "supersingular"
        assert not stub.is_parametric

    def test_count_identity_everywhere(self):
        for rec in clean_records():
            assert (rec.q + 1 - rec.t - rec.h * rec.r).is_zero(), rec.name

    def test_rho_matches_degrees(self):
        for rec in clean_records():
            assert rec.rho == Fraction(rec.q.degree, rec.r.degree), rec.name


class TestRhoValues:
    def test_published_rho(self):
        assert rho_value(get_family("BN")) == 1
        assert rho_value(get_family("KSS18")) == Fraction(4, 3)
        assert rho_value(get_family("KSS16")) == Fraction(5, 4)
        assert rho_value(get_family("KSS8-D3")) == Fraction(5, 4)
        assert rho_value(get_family("KSS8-D1")) == Fraction(3, 2)
        assert rho_value(get_family("KSS32")) == Fraction(9, 8)
        assert rho_value(get_family("KSS36")) == Fraction(7, 6)
        assert rho_value(get_family("KSS40")) == Fraction(11, 8)
        assert rho_value(get_family("Freeman10")) == 1

    def test_bw_odd_rho(self):
        from curvefoundry.polyring import euler_phi

        for k in (5, 7, 9, 11, 13):
            rec = get_family(f"BWodd{k}")
            assert rho_value(rec) == Fraction(2 * k + 4, 2 * euler_phi(k))


class TestValidation:
    def test_all_clean_records_pass_c2_to_c4(self):
        for rec in clean_records():
            report = validate_family(rec)
            for cond in ("c2", "c3", "c4"):
                assert report.status_of(cond) == "pass", (rec.name, cond)
            assert report.status_of("c5") == "pass", rec.name
            assert report.status_of("numeric") == "pass", rec.name

    def test_suspect_records_fail_and_are_flagged(self):
        flagged = [r for r in parametric_records() if SUSPECT in r.flags]
        assert flagged, "catalog should keep the inconsistent rows"
        for rec in flagged:
            assert rec.validation is not None, rec.name
            assert rec.validation.failures(), rec.name
            assert rec.notes

    def test_verbatim_rows_have_corrected_twins(self):
        names = set(family_names())
        for rec in parametric_records():
            if SUSPECT in rec.flags and rec.name.endswith("-verbatim"):
                assert rec.name[: -len("-verbatim")] in names, rec.name

    def test_mutated_record_fails(self):
        bn = get_family("BN")
        bad = replace(bn, t=bn.t + 1, validation=None)
        report = validate_family(bad)
        assert report.status_of("c4") == "fail"

    def test_random_single_coefficient_mutations_fail(self):
        rng = random.Random(20240809)
        targets = [get_family(n) for n in ("BN", "BLS12", "KSS16", "KSS18", "Freeman10")]
        for trial in range(50):
            rec = targets[trial % len(targets)]
            which = rng.choice("qrt")
            poly = getattr(rec, which)
            idx = rng.randrange(len(poly.coeffs))
            delta = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 1, 3]))
            coeffs = list(poly.coeffs)
            coeffs[idx] += delta
            mutated = replace(rec, **{which: RatPoly.from_list(coeffs)}, validation=None)
            report = validate_family(mutated)
            assert report.failures(), (rec.name, which, idx, str(delta))


class TestPublishedIdentities:
    def test_bn_cm_identity(self):
        bn = get_family("BN")
        lhs = bn.cm_poly()
        rhs = 3 * RatPoly.from_list([1, 4, 6]) ** 2
        assert (lhs - rhs).is_zero()

    def test_bls12_cm_identity(self):
        b = get_family("BLS12")
        assert (3 * b.cm_poly() - ((X - 1) * (2 * X**2 - 1)) ** 2).is_zero()

    def test_bw_odd_cm_identity(self):
        for k in (5, 7, 9, 11, 13):
            rec = get_family(f"BWodd{k}")
            rhs = (RatPoly.monomial(1, k) * (X**2 + 1)) ** 2
            assert (rec.cm_poly() - rhs).is_zero(), k
            assert rec.D == 1

    def test_scott_guillevic_count_identity(self):
        sg = get_family("ScottGuillevic54")
        cof = RatPoly.from_list([1, 3, 3])
        assert (sg.q + 1 - sg.t - cof * sg.r).is_zero()
        assert sg.h == cof
        cm = classify_cm(sg.cm_poly())
        assert cm.kind == "CFD" and cm.D == 3

    def test_freeman_cm_identity(self):
        fm = get_family("Freeman10")
        # t^2 - 4q = -(15u^2 + 10u + 3); the published sign (+4q) is a typo
        assert (fm.t * fm.t - 4 * fm.q + RatPoly.from_list([3, 10, 15])).is_zero()

    def test_cfd_records_recover_advertised_discriminant(self):
        for name, d in [("BN", 3), ("BLS12", 3), ("BLS24", 3), ("BLS48", 3),
                        ("KSS8-D3", 3), ("KSS8-D1", 1), ("KSS16", 1), ("KSS18", 3),
                        ("KSS32", 1), ("KSS36", 3), ("KSS40", 1), ("ScottGuillevic54", 3)]:
            rec = get_family(name)
            cm = classify_cm(rec.cm_poly())
            assert cm.kind == "CFD" and cm.D == d, name

    def test_classification_reconstructs_cm_poly(self):
        for rec in clean_records():
            cm = classify_cm(rec.cm_poly())
            assert (cm.g * cm.y * cm.y - rec.cm_poly()).is_zero(), rec.name

    def test_drylo_table7_k10_equals_freeman(self):
        a, b = get_family("DryloSparse10"), get_family("Freeman10")
        assert a.q == b.q and a.r == b.r and a.t == b.t

    def test_kss_cofactors(self):
        assert get_family("KSS16").r_cofactor == 61250
        assert get_family("KSS18").r_cofactor == 343
        assert get_family("KSS8-D1").r_cofactor == 450


class TestJsonRoundTrip:
    def test_round_trip_all(self):
        for rec in builtin_families():
            data = rec.to_json()
            back = FamilyRecord.from_json(data)
            assert back.name == rec.name
            assert back.q == rec.q and back.r == rec.r and back.t == rec.t
            assert back.r_cofactor == rec.r_cofactor
            assert back.D == rec.D
            assert back.integrality == rec.integrality

    def test_provenance_tags_present(self):
        for rec in builtin_families():
            assert rec.provenance
