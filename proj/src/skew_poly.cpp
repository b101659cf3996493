#include "skewalg/skew_poly.hpp"

namespace skewalg {

namespace {
void require_same_ring(const SkewRing& a, const SkewRing& b) {
    if (!(a == b)) throw Error("skew_poly: mixed rings (field or sigma differ)");
}
}  // namespace

SkewPoly::SkewPoly(SkewRing ring, std::vector<FieldElem> coeffs)
    : ring_(ring), c_(std::move(coeffs)) {
    trim();
}

void SkewPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

SkewPoly SkewPoly::constant(SkewRing ring, FieldElem c) {
    return SkewPoly(ring, {c});
}

SkewPoly SkewPoly::monomial(SkewRing ring, FieldElem c, int deg) {
    if (deg < 0) throw Error("skew_poly: negative degree");
    std::vector<FieldElem> v(deg + 1);
    v[deg] = c;
    return SkewPoly(ring, std::move(v));
}

SkewPoly SkewPoly::t_power_minus(SkewRing ring, int m, FieldElem a) {
    if (m < 1) throw Error("skew_poly: modulus degree must be >= 1");
    std::vector<FieldElem> v(m + 1);
    v[0] = ring.field->neg(a);
    v[m] = ring.field->one();
    return SkewPoly(ring, std::move(v));
}

FieldElem SkewPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElem{};
    return c_[i];
}

FieldElem SkewPoly::lead() const {
    if (is_zero()) return FieldElem{};
    return c_.back();
}

bool SkewPoly::is_monic() const {
    return !is_zero() && lead() == ring_.field->one();
}

bool SkewPoly::is_monomial() const {
    if (is_zero()) return false;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

SkewPoly SkewPoly::twisted(std::int64_t j) const {
    std::vector<FieldElem> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        out[i] = ring_.field->apply_aut_pow(ring_.sigma, j, c_[i]);
    return SkewPoly(ring_, std::move(out));
}

SkewPoly SkewPoly::mapped(FrobAut tau) const {
    std::vector<FieldElem> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        out[i] = ring_.field->apply_aut(tau, c_[i]);
    return SkewPoly(ring_, std::move(out));
}

SkewPoly SkewPoly::scaled(FieldElem c) const {
    std::vector<FieldElem> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = ring_.field->mul(c, c_[i]);
    return SkewPoly(ring_, std::move(out));
}

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    require_same_ring(a.ring_, b.ring_);
    const FieldCtx& F = *a.ring_.field;
    std::vector<FieldElem> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return SkewPoly(a.ring_, std::move(out));
}

SkewPoly SkewPoly::operator-() const {
    std::vector<FieldElem> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = ring_.field->neg(c_[i]);
    return SkewPoly(ring_, std::move(out));
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
    require_same_ring(a.ring_, b.ring_);
    const FieldCtx& F = *a.ring_.field;
    if (a.is_zero() || b.is_zero()) return SkewPoly(a.ring_);
    std::vector<FieldElem> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            FieldElem term = F.mul(a.c_[i], F.apply_aut_pow(a.ring_.sigma, static_cast<std::int64_t>(i), b.c_[j]));
            out[i + j] = F.add(out[i + j], term);
        }
    }
    return SkewPoly(a.ring_, std::move(out));
}

bool operator==(const SkewPoly& a, const SkewPoly& b) {
    return a.ring_ == b.ring_ && a.c_ == b.c_;
}

DivModResult right_divmod(const SkewPoly& g, const SkewPoly& f) {
    require_same_ring(g.ring(), f.ring());
    if (f.is_zero()) throw Error("skew_poly: division by zero");
    const FieldCtx& F = *g.ring().field;
    const FrobAut sigma = g.ring().sigma;
    const int df = f.degree();

    SkewPoly rem = g;
    std::vector<FieldElem> quot(std::max(0, g.degree() - df + 1));
    while (!rem.is_zero() && rem.degree() >= df) {
        const int d = rem.degree() - df;
        // (c t^d) * f has leading coefficient c * sigma^d(lead f).
        FieldElem c = F.div(rem.lead(), F.apply_aut_pow(sigma, d, f.lead()));
        quot[d] = c;
        rem = rem - SkewPoly::monomial(g.ring(), c, d) * f;
    }
    return DivModResult{SkewPoly(g.ring(), std::move(quot)), std::move(rem)};
}

SkewPoly right_mod(const SkewPoly& g, const SkewPoly& f) {
    return right_divmod(g, f).rem;
}

bool right_divides(const SkewPoly& f, const SkewPoly& g) {
    return right_mod(g, f).is_zero();
}

}  // namespace skewalg
