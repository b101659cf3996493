#include "doctest.h"

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "skewalg/homs.hpp"

TEST_SUITE_BEGIN("homs");

using namespace skewalg;

TEST_CASE("monomial criterion equals the brute-force oracle (F_9, m = 3)") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    for (std::int64_t ae = 0; ae < 8; ++ae) {
        const PetitAlgebra Sa = PetitAlgebra::constacyclic(ring, 3, F.from_log(ae));
        for (std::int64_t be = 0; be < 8; ++be) {
            const PetitAlgebra Sb = PetitAlgebra::constacyclic(ring, 3, F.from_log(be));
            for (int ts = 0; ts < 2; ++ts)
                for (std::int64_t ce = 0; ce < 8; ++ce)
                    for (int k = 1; k < 3; ++k) {
                        const MonomialHomSpec spec{&Sa, &Sb, FrobAut{ts}, F.from_log(ce), k};
                        const HomCertificate crit = check_monomial_hom(spec);
                        const HomCertificate orac = brute_force_is_hom(to_poly_spec(spec));
                        CHECK(crit.verdict == orac.verdict);
                        if (k == 1 && crit.verdict != HomVerdict::not_hom) {
                            CHECK(crit.verdict == HomVerdict::iso);  // degree 1 homs invert
                        }
                    }
        }
    }
}

TEST_CASE("certified homs are multiplicative and semilinear on samples") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    const PetitAlgebra Sa = PetitAlgebra::constacyclic(ring, 4, F.one());
    const PetitAlgebra Sb = PetitAlgebra::constacyclic(ring, 4, F.one());
    const EnumerationResult res = enumerate_homs(Sa, Sb, EnumRestrict::all);
    REQUIRE(!res.homs.empty());
    for (const auto& [spec, cert] : res.homs) {
        CHECK(cert.is_hom());
        for (std::int64_t i = 0; i < 81; i += 7) {
            std::vector<FieldElem> cx, cy;
            std::int64_t v = i;
            for (int d = 0; d < 4; ++d) {
                cx.push_back(v % 3 == 0 ? F.zero() : F.from_log(v % 3));
                cy.push_back(v % 5 == 0 ? F.zero() : F.from_log(v % 5));
                v = v * 31 % 83;
            }
            const AlgebraElem x = Sa.element(SkewPoly(ring, cx));
            const AlgebraElem y = Sa.element(SkewPoly(ring, cy));
            CHECK(apply_hom(spec, Sa.mul(x, y)) ==
                  Sb.mul(apply_hom(spec, x), apply_hom(spec, y)));
            CHECK(apply_hom(spec, Sa.add(x, y)) ==
                  Sb.add(apply_hom(spec, x), apply_hom(spec, y)));
            const FieldElem c = F.from_log(i % 8);
            CHECK(apply_hom(spec, Sa.scalar_mul(c, x)) ==
                  Sb.scalar_mul(F.apply_aut(spec.tau, c), apply_hom(spec, x)));
        }
    }
}

TEST_CASE("degree-one isomorphisms compose") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    // S_xi -> S_(xi^3) by tau = frobenius (norms are trivial at m = 4).
    const PetitAlgebra Sa = PetitAlgebra::constacyclic(ring, 4, F.xi());
    const PetitAlgebra Sb = PetitAlgebra::constacyclic(ring, 4, F.from_log(3));
    const PetitAlgebra Sc = PetitAlgebra::constacyclic(ring, 4, F.xi());
    const MonomialHomSpec g1{&Sa, &Sb, FrobAut{1}, F.one(), 1};
    const MonomialHomSpec g2{&Sb, &Sc, FrobAut{1}, F.xi(), 1};
    REQUIRE(check_monomial_hom(g1).verdict == HomVerdict::iso);
    REQUIRE(check_monomial_hom(g2).verdict == HomVerdict::iso);
    const MonomialHomSpec composed{&Sa, &Sc, F.compose(g1.tau, g2.tau),
                                   F.mul(F.apply_aut(g2.tau, g1.alpha), g2.alpha), 1};
    CHECK(check_monomial_hom(composed).verdict == HomVerdict::iso);
    const AlgebraElem probe = Sa.element(SkewPoly::monomial(ring, F.from_log(5), 3));
    CHECK(apply_hom(composed, probe) == apply_hom(g2, apply_hom(g1, probe)));
}

TEST_CASE("refutation witnesses re-verify") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    const PetitAlgebra Sa = PetitAlgebra::constacyclic(ring, 3, F.xi());
    const PetitAlgebra Sb = PetitAlgebra::constacyclic(ring, 3, F.from_log(2));
    int refuted = 0;
    for (std::int64_t ce = 0; ce < 8; ++ce)
        for (int k = 1; k < 3; ++k) {
            const MonomialHomSpec spec{&Sa, &Sb, FrobAut{0}, F.from_log(ce), k};
            const PolyHomSpec poly = to_poly_spec(spec);
            const HomCertificate cert = brute_force_is_hom(poly);
            if (cert.verdict == HomVerdict::not_hom) {
                REQUIRE(cert.witness.has_value());
                CHECK(reverify_witness(poly, *cert.witness));
                ++refuted;
            }
        }
    CHECK(refuted > 0);
}

TEST_CASE("proper sector over F_4: only degree-one monomial homs") {
    const FieldCtx F = FieldCtx::make(2, 2);
    const SkewRing ring{&F, FrobAut{1}};  // n = 2, m = 3: n does not divide m
    const PetitAlgebra Sa = PetitAlgebra::constacyclic(ring, 3, F.xi());
    const PetitAlgebra Sb = PetitAlgebra::constacyclic(ring, 3, F.xi());
    const EnumerationResult res = enumerate_homs(Sa, Sb, EnumRestrict::all);
    CHECK(res.candidates == 128);  // 2 tau choices x 4^3 images
    CHECK(res.degenerate == 2);
    CHECK(res.hom + res.iso == 2);
    for (const auto& [spec, cert] : res.homs) {
        CHECK(cert.monomial);
        CHECK(cert.image_degree == 1);
        CHECK(cert.verdict == HomVerdict::iso);
    }
}

TEST_CASE("pinned non-monomial endomorphism of S_(t^4 - 4) over F_25") {
    const FieldCtx F = FieldCtx::make(5, 2);
    const SkewRing ring{&F, FrobAut{1}};
    const FieldElem four = F.from_log(12);
    const PetitAlgebra S = PetitAlgebra::constacyclic(ring, 4, four);
    const SkewPoly g =
        SkewPoly::monomial(ring, F.one(), 1) + SkewPoly::monomial(ring, F.one(), 3);
    const PolyHomSpec spec{&S, &S, FrobAut{0}, g};

    const HomCertificate cert = brute_force_is_hom(spec);
    CHECK(cert.verdict == HomVerdict::hom);  // a hom, but not surjective
    CHECK(!cert.monomial);
    CHECK(cert.image_degree == 3);
    CHECK(nonmonomial_structure_check(spec));
    CHECK(!star_hypothesis(4, 3));
    CHECK(is_associative_algebra(S));

    const WeightPreservation wp = is_weight_preserving(spec);
    CHECK(wp.exhaustive);
    CHECK(!wp.preserving);
    // t itself is a weight-one element with a weight-two image.
    CHECK(hamming_weight(S.element(g)) == 2);
    CHECK(hamming_weight(apply_hom(spec, S.t_power(1))) == 2);
}

TEST_CASE("star hypothesis closed form") {
    // Holds whenever k < m/2; fails for the pinned (m, k) = (4, 3) example.
    CHECK(star_hypothesis(7, 2));
    CHECK(star_hypothesis(9, 4));
    CHECK(star_hypothesis(4, 2));
    CHECK(!star_hypothesis(4, 3));
    CHECK(!star_hypothesis(5, 4));
    CHECK_THROWS_AS(star_hypothesis(4, 1), Error);
    CHECK_THROWS_AS(star_hypothesis(4, 4), Error);
}

TEST_CASE("hamming weight counts nonzero coefficients") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    const PetitAlgebra S = PetitAlgebra::constacyclic(ring, 4, F.one());
    CHECK(hamming_weight(S.zero()) == 0);
    CHECK(hamming_weight(S.one()) == 1);
    CHECK(hamming_weight(S.element(SkewPoly::t_power_minus(ring, 2, F.xi()))) == 2);
}

TEST_CASE("enumeration budget guard") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    const PetitAlgebra Sa = PetitAlgebra::constacyclic(ring, 4, F.one());
    CHECK_THROWS_AS(enumerate_homs(Sa, Sa, EnumRestrict::all, 100), BudgetError);
    CHECK_NOTHROW(enumerate_homs(Sa, Sa, EnumRestrict::monomial, 100));
}

TEST_CASE("mismatched algebra pairs are rejected") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing r1{&F, FrobAut{1}};
    const SkewRing r0{&F, FrobAut{0}};
    const PetitAlgebra A = PetitAlgebra::constacyclic(r1, 3, F.one());
    const PetitAlgebra B = PetitAlgebra::constacyclic(r0, 3, F.one());
    const PetitAlgebra C = PetitAlgebra::constacyclic(r1, 4, F.one());
    CHECK_THROWS_AS(check_monomial_hom(MonomialHomSpec{&A, &B, FrobAut{0}, F.one(), 1}), Error);
    CHECK_THROWS_AS(check_monomial_hom(MonomialHomSpec{&A, &C, FrobAut{0}, F.one(), 1}), Error);
    CHECK_THROWS_AS(check_monomial_hom(MonomialHomSpec{&A, &A, FrobAut{0}, F.zero(), 1}), Error);
    CHECK_THROWS_AS(check_monomial_hom(MonomialHomSpec{&A, &A, FrobAut{0}, F.one(), 0}), Error);
}

TEST_SUITE_END();
