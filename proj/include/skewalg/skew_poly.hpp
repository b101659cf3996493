#pragma once

#include <vector>

#include "skewalg/field.hpp"

namespace skewalg {

// The ring S[t; sigma]: coefficients in the field of `field`, multiplication
// twisted by t^j * a = sigma^j(a) * t^j. Two rings interoperate only when
// both the field pointer and sigma agree.
struct SkewRing {
    const FieldCtx* field = nullptr;
    FrobAut sigma;

    friend bool operator==(const SkewRing&, const SkewRing&) = default;
    // Order n of sigma; sigma^n = id.
    int sigma_order() const { return field->aut_order(sigma); }
};

// Polynomial in S[t; sigma], coefficients low-to-high with no trailing zeros
// (the canonical form); the zero polynomial has an empty coefficient vector.
class SkewPoly {
public:
    SkewPoly() = default;
    explicit SkewPoly(SkewRing ring) : ring_(ring) {}
    SkewPoly(SkewRing ring, std::vector<FieldElem> coeffs);

    static SkewPoly constant(SkewRing ring, FieldElem c);
    static SkewPoly monomial(SkewRing ring, FieldElem c, int deg);
    // t^m - a
    static SkewPoly t_power_minus(SkewRing ring, int m, FieldElem a);

    const SkewRing& ring() const { return ring_; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    FieldElem coeff(int i) const;
    FieldElem lead() const;
    bool is_monic() const;
    // Nonzero with exactly one nonzero coefficient.
    bool is_monomial() const;

    // Coefficientwise sigma^j (the twist map); j may be negative.
    SkewPoly twisted(std::int64_t j) const;
    // Coefficientwise image under another automorphism.
    SkewPoly mapped(FrobAut tau) const;

    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);
    SkewPoly operator-() const;
    friend bool operator==(const SkewPoly& a, const SkewPoly& b);

    // Left scalar multiple c * g; the right multiple g * c twists through.
    SkewPoly scaled(FieldElem c) const;

private:
    void trim();
    SkewRing ring_;
    std::vector<FieldElem> c_;
};

struct DivModResult {
    SkewPoly quot;
    SkewPoly rem;
};

// Right division g = quot * f + rem with deg rem < deg f; f must be nonzero
// (its leading coefficient is a unit in a field). The pair is unique.
DivModResult right_divmod(const SkewPoly& g, const SkewPoly& f);
SkewPoly right_mod(const SkewPoly& g, const SkewPoly& f);
bool right_divides(const SkewPoly& f, const SkewPoly& g);  // g = q*f exactly

}  // namespace skewalg
