#pragma once

#include <optional>

#include "skewalg/skew_poly.hpp"

namespace skewalg {

class PetitAlgebra;

// Element of S[t;sigma]/S[t;sigma]f, stored as the reduced representative of
// degree < m. Valid only while the owning algebra is alive.
struct AlgebraElem {
    const PetitAlgebra* alg = nullptr;
    SkewPoly poly;

    friend bool operator==(const AlgebraElem& a, const AlgebraElem& b) {
        return a.alg == b.alg && a.poly == b.poly;
    }
};

// Monomial alpha * t^k with alpha != 0 and 0 <= k < m.
struct Monomial {
    FieldElem alpha;
    int k = 0;
};

enum class PowerAssocMode { criterion, oracle };

// Quotient algebra S_f = S[t;sigma]/S[t;sigma]f for monic f of degree m >= 1.
// The product g∘h = (g*h) mod_r f is S_0-bilinear but in general not
// associative. When f = t^m - a the reduction has the closed form
// t^(m+j) -> sigma^j(a) t^j and constacyclic_a() is set to a.
class PetitAlgebra {
public:
    static PetitAlgebra make(SkewRing ring, SkewPoly f);
    static PetitAlgebra constacyclic(SkewRing ring, int m, FieldElem a);

    const SkewRing& ring() const { return ring_; }
    const FieldCtx& field() const { return *ring_.field; }
    const SkewPoly& modulus() const { return f_; }
    int m() const { return m_; }
    int sigma_order() const { return ring_.sigma_order(); }
    const std::optional<FieldElem>& constacyclic_a() const { return a_; }

    AlgebraElem element(SkewPoly p) const;  // reduces mod f
    AlgebraElem zero() const;
    AlgebraElem one() const;
    AlgebraElem scalar(FieldElem c) const;
    AlgebraElem t_power(int i) const;  // 0 <= i < m
    AlgebraElem monomial_elem(const Monomial& z) const;

    AlgebraElem add(const AlgebraElem& g, const AlgebraElem& h) const;
    AlgebraElem sub(const AlgebraElem& g, const AlgebraElem& h) const;
    AlgebraElem mul(const AlgebraElem& g, const AlgebraElem& h) const;
    AlgebraElem scalar_mul(FieldElem c, const AlgebraElem& g) const;

    // L(z, s): L(z,0) = 1, L(z,1) = z, L(z,s+1) = z ∘ L(z,s).
    AlgebraElem left_nested_power(const AlgebraElem& z, std::int64_t s) const;

    // Reduction of an arbitrary ring element mod f; fast path for
    // constacyclic moduli, generic right division otherwise.
    SkewPoly reduce(const SkewPoly& p) const;

private:
    PetitAlgebra() = default;
    void check_elem(const AlgebraElem& g) const;

    SkewRing ring_;
    SkewPoly f_;
    int m_ = 0;
    std::optional<FieldElem> a_;
};

// The power-associativity condition for z = alpha t^k in S_{t^m - b}:
// alpha * b == sigma^m(alpha) * sigma^k(b). `criterion` evaluates exactly
// that; `oracle` decides behaviourally: it checks z^r z = z z^r for the
// least r with r k >= m, that L(z,s)∘L(z,l) = L(z,s+l) for all s+l <= 2m,
// and that all full bracketings up to 8 factors give a single value.
bool is_power_assoc_monomial(const PetitAlgebra& alg, const Monomial& z, PowerAssocMode mode);

// Closed form for the s-th power of a power-associative monomial:
// N_s^{sigma^k}(alpha) * prod_{i=1..floor(sk/m)} sigma^(sk-im)(b) * t^(sk mod m).
// k = 0 is the plain scalar power. For k >= 1 with the condition violated this
// refuses with a PowerAssocError carrying the least failing nesting.
AlgebraElem monomial_power_formula(const PetitAlgebra& alg, const Monomial& z, std::int64_t s);

// Coefficient identity used by the power formula's split argument:
//   sigma^(sk mod m)(N) * prod_{j=1..z} sigma^(sk-jm)(b)
//     == sigma^(sk)(N) * prod_{j=1..z} sigma^(sk-jm+lk)(b),
// with N = N_l^{sigma^k}(alpha) and z = floor(sk/m). Requires the
// power-associativity condition for (alpha, k, b).
bool keystep_identity_check(const FieldCtx& F, FrobAut sigma, int m, int k,
                            FieldElem alpha, FieldElem b, std::int64_t s, std::int64_t l);

// For f = t^m - a with a != 0: associative iff a is fixed by sigma and the
// order of sigma divides m. The closed criterion is cross-validated against
// an associator scan over an S_0-basis; disagreement throws.
bool is_associative_algebra(const PetitAlgebra& alg);

// Negation of is_associative_algebra: a not fixed by sigma, or n ∤ m.
bool is_proper_nonassociative(const PetitAlgebra& alg);

}  // namespace skewalg
