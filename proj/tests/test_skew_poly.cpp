#include "doctest.h"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "skewalg/skew_poly.hpp"

TEST_SUITE_BEGIN("skew_poly");

using namespace skewalg;

namespace {

SkewPoly random_poly(const SkewRing& ring, int max_deg, std::mt19937_64& rng) {
    const FieldCtx& F = *ring.field;
    const int deg = static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg + 1));
    std::vector<FieldElem> c;
    for (int i = 0; i <= deg; ++i) {
        const std::int64_t v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(F.q()));
        c.push_back(v == 0 ? F.zero() : F.from_log(v - 1));
    }
    return SkewPoly(ring, std::move(c));
}

}  // namespace

TEST_CASE("canonical form trims trailing zeros") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    const SkewPoly p(ring, {F.one(), F.zero(), F.zero()});
    CHECK(p.degree() == 0);
    CHECK(SkewPoly(ring).is_zero());
    CHECK(SkewPoly(ring, {F.zero(), F.zero()}).is_zero());
    CHECK(SkewPoly(ring).degree() == -1);
    CHECK(SkewPoly::monomial(ring, F.xi(), 3).degree() == 3);
    CHECK(SkewPoly::monomial(ring, F.xi(), 3).is_monomial());
    CHECK(!SkewPoly::t_power_minus(ring, 2, F.xi()).is_monomial());
    CHECK(SkewPoly::t_power_minus(ring, 2, F.xi()).is_monic());
}

TEST_CASE("twist law t^j a = sigma^j(a) t^j") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    for (int j = 0; j <= 5; ++j) {
        for (std::int64_t e = 0; e < 8; ++e) {
            const FieldElem a = F.from_log(e);
            const SkewPoly lhs =
                SkewPoly::monomial(ring, F.one(), j) * SkewPoly::constant(ring, a);
            CHECK(lhs == SkewPoly::monomial(ring, F.apply_aut_pow(ring.sigma, j, a), j));
        }
    }
    // Monomial times monomial: c t^j * d t^i = c sigma^j(d) t^(i+j).
    const FieldElem c = F.from_log(5), d = F.from_log(2);
    CHECK(SkewPoly::monomial(ring, c, 2) * SkewPoly::monomial(ring, d, 1) ==
          SkewPoly::monomial(ring, F.mul(c, F.apply_aut_pow(ring.sigma, 2, d)), 3));
}

TEST_CASE("pinned square: (t + t^3)^2 mod (t^4 - 4) over F_25") {
    const FieldCtx F = FieldCtx::make(5, 2);
    const SkewRing ring{&F, FrobAut{1}};
    const SkewPoly g = SkewPoly::monomial(ring, F.one(), 1) + SkewPoly::monomial(ring, F.one(), 3);
    const SkewPoly f = SkewPoly::t_power_minus(ring, 4, F.from_log(12));  // 4 = xi^12
    CHECK(right_mod(g * g, f) == SkewPoly::constant(ring, F.from_log(18)));  // 3 = xi^18
}

TEST_CASE("ring multiplication is associative and distributive") {
    // Exhaustive over F_4 with degree <= 1 factors.
    const FieldCtx F4 = FieldCtx::make(2, 2);
    const SkewRing r4{&F4, FrobAut{1}};
    std::vector<SkewPoly> small;
    for (std::int64_t v0 = 0; v0 < 4; ++v0)
        for (std::int64_t v1 = 0; v1 < 4; ++v1) {
            const FieldElem c0 = v0 == 0 ? F4.zero() : F4.from_log(v0 - 1);
            const FieldElem c1 = v1 == 0 ? F4.zero() : F4.from_log(v1 - 1);
            small.push_back(SkewPoly(r4, {c0, c1}));
        }
    for (const SkewPoly& a : small)
        for (const SkewPoly& b : small)
            for (const SkewPoly& c : small) {
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK((a + b) * c == a * c + b * c);
            }

    // Random over F_9 and F_25 with larger degrees.
    std::mt19937_64 rng(7);
    for (auto [p, r] : {std::pair<int, int>{3, 2}, {5, 2}}) {
        const FieldCtx F = FieldCtx::make(p, r);
        const SkewRing ring{&F, FrobAut{1}};
        for (int trial = 0; trial < 200; ++trial) {
            const SkewPoly a = random_poly(ring, 5, rng);
            const SkewPoly b = random_poly(ring, 5, rng);
            const SkewPoly c = random_poly(ring, 5, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == SkewPoly(ring));
            CHECK(-(-a) == a);
        }
    }
}

TEST_CASE("coefficientwise maps respect products") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const SkewPoly a = random_poly(ring, 4, rng);
        const SkewPoly b = random_poly(ring, 4, rng);
        // tau commutes with sigma, so both maps are ring homomorphisms.
        for (int ts = 0; ts < 2; ++ts) {
            const FrobAut tau{ts};
            CHECK((a * b).mapped(tau) == a.mapped(tau) * b.mapped(tau));
        }
        for (int j = -3; j <= 3; ++j) {
            CHECK((a * b).twisted(j) == a.twisted(j) * b.twisted(j));
            CHECK(a.twisted(j).twisted(-j) == a);
        }
        const FieldElem c = F.from_log(static_cast<std::int64_t>(rng() % 8));
        CHECK(a.scaled(c) == SkewPoly::constant(ring, c) * a);
    }
}

TEST_CASE("right division: identity, degree bound, uniqueness") {
    std::mt19937_64 rng(23);
    for (auto [p, r, s] : {std::array<int, 3>{3, 2, 1}, {5, 2, 1}, {2, 4, 2}, {2, 4, 1}}) {
        const FieldCtx F = FieldCtx::make(p, r);
        const SkewRing ring{&F, FrobAut{s}};
        for (int trial = 0; trial < 150; ++trial) {
            SkewPoly f = random_poly(ring, 4, rng);
            if (f.is_zero()) f = SkewPoly::constant(ring, F.one());
            const SkewPoly g = random_poly(ring, 8, rng);
            const DivModResult dm = right_divmod(g, f);
            CHECK(g == dm.quot * f + dm.rem);
            CHECK(dm.rem.degree() < f.degree());
            CHECK(right_mod(g, f) == dm.rem);
            CHECK(right_divides(f, g) == dm.rem.is_zero());
            CHECK(right_divides(f, dm.quot * f));
            // Perturbing the remainder below deg f breaks exactness.
            if (!dm.rem.is_zero() && f.degree() > 0) {
                CHECK(!right_divides(f, dm.quot * f + dm.rem));
            }
        }
    }
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    CHECK_THROWS_AS(right_divmod(SkewPoly::constant(ring, F.one()), SkewPoly(ring)), Error);
}

TEST_CASE("noncommutativity is real") {
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    const SkewPoly t = SkewPoly::monomial(ring, F.one(), 1);
    const SkewPoly c = SkewPoly::constant(ring, F.xi());
    CHECK(t * c != c * t);
    // With the identity twist the ring is the plain polynomial ring.
    const SkewRing plain{&F, FrobAut{0}};
    const SkewPoly tp = SkewPoly::monomial(plain, F.one(), 1);
    const SkewPoly cp = SkewPoly::constant(plain, F.xi());
    CHECK(tp * cp == cp * tp);
}

TEST_SUITE_END();
