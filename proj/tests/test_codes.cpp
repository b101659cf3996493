#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "skewalg/codes.hpp"
#include "skewalg/io.hpp"

TEST_SUITE_BEGIN("codes");

using namespace skewalg;

namespace {

// All monic degree-d polynomials, low digits first; q^d of them.
std::vector<SkewPoly> monic_polys(const SkewRing& ring, int d) {
    const FieldCtx& F = *ring.field;
    const std::int64_t q = F.q();
    std::int64_t total = 1;
    for (int i = 0; i < d; ++i) total *= q;
    std::vector<SkewPoly> out;
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::vector<FieldElem> c(d + 1);
        std::int64_t v = idx;
        for (int i = 0; i < d; ++i) {
            const std::int64_t digit = v % q;
            v /= q;
            c[i] = digit == 0 ? F.zero() : F.from_log(digit - 1);
        }
        c[d] = F.one();
        out.emplace_back(ring, std::move(c));
    }
    return out;
}

std::vector<std::string> sorted_texts(const std::vector<SkewPoly>& polys) {
    std::vector<std::string> out;
    for (const SkewPoly& g : polys) out.push_back(io::poly_text(g));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("degree-one right divisors match the norm equation") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    const FrobAut sigma{1};

    // m = 3: N_3(c) = c^5 on exponents, a bijection of the unit group, so
    // every t^3 - a has exactly one monic linear right divisor.
    for (std::int64_t ea = 0; ea < F.group_order(); ++ea) {
        const FieldElem a = F.from_log(ea);
        const PetitAlgebra alg = PetitAlgebra::constacyclic(ring, 3, a);
        const std::vector<SkewPoly> divs = right_divisors(alg, 1);
        std::vector<SkewPoly> expected;
        for (std::int64_t ec = 0; ec < F.group_order(); ++ec) {
            const FieldElem c = F.from_log(ec);
            if (F.iter_norm(sigma, 3, c) == a)
                expected.push_back(SkewPoly::t_power_minus(ring, 1, c));
        }
        CHECK(expected.size() == 1);
        CHECK(sorted_texts(divs) == sorted_texts(expected));
    }

    // m = 4: the norm collapses to 1, so t^4 - 1 has all eight linear
    // divisors and t^4 - xi has none.
    const PetitAlgebra unit = PetitAlgebra::constacyclic(ring, 4, F.one());
    CHECK(right_divisors(unit, 1).size() == 8);
    const PetitAlgebra twisted = PetitAlgebra::constacyclic(ring, 4, F.xi());
    CHECK(right_divisors(twisted, 1).empty());
}

TEST_CASE("divisor scan agrees with the multiplication oracle") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    const PetitAlgebra alg = PetitAlgebra::constacyclic(ring, 3, F.xi());

    for (int d = 1; d <= 2; ++d) {
        // g right-divides f iff some monic cofactor h of degree m - d has
        // h * g == f; brute products avoid the division routine entirely.
        std::vector<SkewPoly> expected;
        for (const SkewPoly& g : monic_polys(ring, d)) {
            bool hit = false;
            for (const SkewPoly& h : monic_polys(ring, 3 - d))
                if (h * g == alg.modulus()) { hit = true; break; }
            if (hit) expected.push_back(g);
        }
        CHECK(sorted_texts(right_divisors(alg, d)) == sorted_texts(expected));
    }
}

TEST_CASE("generator and scan validation") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    const PetitAlgebra alg = PetitAlgebra::constacyclic(ring, 3, F.one());

    CHECK_THROWS_AS(right_divisors(alg, 0), Error);
    CHECK_THROWS_AS(right_divisors(alg, 3), Error);
    CHECK_THROWS_AS(right_divisors(alg, 2, 10), BudgetError);

    // t - xi does not divide t^3 - 1 (its norm is xi^5, not 1).
    CHECK_THROWS_AS(code_from_generator(alg, SkewPoly::t_power_minus(ring, 1, F.xi())), Error);
    const SkewPoly good = SkewPoly::t_power_minus(ring, 1, F.one());
    CHECK_THROWS_AS(code_from_generator(alg, good.scaled(F.xi())), Error);
    CHECK_THROWS_AS(code_from_generator(alg, SkewPoly(ring)), Error);
    CHECK_THROWS_AS(code_from_generator(alg, alg.modulus()), Error);

    const SkewCode code = code_from_generator(alg, good);
    CHECK_THROWS_AS(weight_distribution(code, 10), BudgetError);
}

TEST_CASE("unit generator spans the whole space") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    const PetitAlgebra alg = PetitAlgebra::constacyclic(ring, 3, F.one());

    const SkewCode full = code_from_generator(alg, SkewPoly::constant(ring, F.one()));
    CHECK(full.dim == 3);
    const WeightDistribution dist = weight_distribution(full);
    // Binomial counts C(3, w) * 8^w over the 9^3 words.
    CHECK(dist.counts == std::vector<std::uint64_t>{1, 24, 192, 512});
    CHECK(dist.min_distance() == 1);
}

TEST_CASE("pinned cubic code generated by t - 1") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    const PetitAlgebra alg = PetitAlgebra::constacyclic(ring, 3, F.one());

    const SkewCode code = code_from_generator(alg, SkewPoly::t_power_minus(ring, 1, F.one()));
    CHECK(io::poly_text(code.generator) == "4,8");
    CHECK(code.dim == 2);
    REQUIRE(code.gen_matrix.size() == 2);

    const WeightDistribution dist = weight_distribution(code);
    CHECK(dist.counts == std::vector<std::uint64_t>{1, 0, 24, 56});
    CHECK(dist.min_distance() == 2);

    // Rows are t^i * g reduced mod the modulus.
    for (int i = 0; i < code.dim; ++i) {
        const AlgebraElem row = alg.mul(alg.t_power(i), alg.element(code.generator));
        std::vector<FieldElem> want(3);
        for (int j = 0; j <= row.poly.degree(); ++j) want[j] = row.poly.coeff(j);
        CHECK(code.gen_matrix[i] == want);
    }

    // The code is a left ideal: closed under left multiplication by t and
    // scalars, on basis rows and on a combination.
    std::vector<AlgebraElem> rows;
    for (const auto& row : code.gen_matrix) rows.push_back(alg.element(SkewPoly(ring, row)));
    for (const AlgebraElem& x : rows) {
        CHECK(code_contains(code, x));
        CHECK(code_contains(code, alg.mul(alg.t_power(1), x)));
        CHECK(code_contains(code, alg.scalar_mul(F.xi(), x)));
    }
    const AlgebraElem combo = alg.add(rows[0], alg.scalar_mul(F.from_log(3), rows[1]));
    CHECK(code_contains(code, combo));
    CHECK(code_contains(code, alg.mul(alg.t_power(2), combo)));

    // Weight-1 words are absent, so the unit scalar lies outside.
    CHECK_FALSE(code_contains(code, alg.one()));
    CHECK_THROWS_AS(code_contains(code, PetitAlgebra::constacyclic(ring, 3, F.xi()).one()),
                    Error);
}

TEST_CASE("mapped codes preserve dimension and weight structure") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    // tau = id, alpha = xi^3 witnesses S_xi ~ S_{xi^2}: N_3(xi^3) = xi^15 =
    // xi^7 carries a = xi onto b = xi^2.
    const PetitAlgebra src = PetitAlgebra::constacyclic(ring, 3, F.xi());
    const PetitAlgebra dst = PetitAlgebra::constacyclic(ring, 3, F.from_log(2));
    const MonomialHomSpec spec{&src, &dst, FrobAut{0}, F.from_log(3), 1};
    REQUIRE(check_monomial_hom(spec).verdict == HomVerdict::iso);

    const SkewCode code = code_from_generator(src, right_divisors(src, 1).at(0));
    const SkewCode image = map_code(spec, code);
    CHECK(image.algebra == &dst);
    CHECK(image.dim == code.dim);
    // The image ideal's canonical generator is the unique linear divisor
    // t - xi^2 of t^3 - xi^2; its constant term is -xi^2 = xi^6.
    CHECK(io::poly_text(image.generator) == "6,8");
    CHECK(weight_distribution(image).counts == weight_distribution(code).counts);

    // The mapped basis spans exactly the regenerated ideal.
    SkewCode manual;
    manual.algebra = &dst;
    manual.generator = image.generator;
    manual.dim = code.dim;
    for (const auto& row : code.gen_matrix) {
        const AlgebraElem y = apply_hom(spec, src.element(SkewPoly(ring, row)));
        CHECK(hamming_weight(y) ==
              static_cast<int>(row.size() -
                               std::count(row.begin(), row.end(), FieldElem{})));
        CHECK(code_contains(image, y));
        std::vector<FieldElem> out(3);
        for (int j = 0; j <= y.poly.degree(); ++j) out[j] = y.poly.coeff(j);
        manual.gen_matrix.push_back(out);
    }
    CHECK(same_code(manual, image));

    // Rejections: wrong source algebra, and a spec that is not an iso.
    CHECK_THROWS_AS(map_code(spec, image), Error);
    const MonomialHomSpec broken{&src, &dst, FrobAut{0}, F.one(), 1};
    REQUIRE(check_monomial_hom(broken).verdict == HomVerdict::not_hom);
    CHECK_THROWS_AS(map_code(broken, code), Error);
}

TEST_CASE("row-space equality separates distinct ideals") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    const PetitAlgebra alg = PetitAlgebra::constacyclic(ring, 4, F.one());

    const std::vector<SkewPoly> divs = right_divisors(alg, 1);
    REQUIRE(divs.size() == 8);
    const SkewCode x = code_from_generator(alg, divs[0]);
    const SkewCode y = code_from_generator(alg, divs[1]);
    CHECK(same_code(x, x));
    CHECK_FALSE(same_code(x, y));

    // Same ring, different constant: moduli differ, never the same code.
    const PetitAlgebra other = PetitAlgebra::constacyclic(ring, 4, F.xi());
    SkewCode z = x;
    z.algebra = &other;
    CHECK_FALSE(same_code(x, z));
}

TEST_CASE("minimum distance needs a nonzero word") {
    WeightDistribution zero_only;
    zero_only.counts = {1};
    CHECK_THROWS_AS(zero_only.min_distance(), Error);
    WeightDistribution dist;
    dist.counts = {1, 0, 0, 8};
    CHECK(dist.min_distance() == 3);
}

TEST_SUITE_END();
