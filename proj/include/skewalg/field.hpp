#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewalg/errors.hpp"

namespace skewalg {

// Element of F_{p^r} in discrete-log form: log == kZero marks 0, otherwise
// 0 <= log < p^r - 1 and the element is xi^log for the canonical generator.
struct FieldElem {
    static constexpr std::int32_t kZero = -1;
    std::int32_t log = kZero;

    bool is_zero() const { return log == kZero; }
    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

// The automorphism x -> x^(p^s) of F_{p^r}, 0 <= s < r. Composition adds
// exponents mod r; all such maps commute.
struct FrobAut {
    int s = 0;
    friend bool operator==(const FrobAut&, const FrobAut&) = default;
};

// Immutable context for one finite field F_{p^r}, p^r <= 2^20. Carries the
// discrete-log tables and the packed coefficient-vector view side by side;
// elements are valid only with the context that produced them.
class FieldCtx {
public:
    static constexpr std::int64_t kMaxOrder = 1 << 20;

    // Builds the canonical field: modulus is the monic irreducible of degree
    // r over F_p with the smallest coefficient encoding sum(c_i p^i) whose
    // root x generates the multiplicative group; xi is the class of x. If no
    // irreducible of degree r has a primitive root (cannot happen, but the
    // fallback is kept defensive), the smallest irreducible is used and xi is
    // the first generator in vec-index order.
    static FieldCtx make(std::int64_t p, int r);

    std::int64_t p() const { return p_; }
    int r() const { return r_; }
    std::int64_t q() const { return q_; }
    std::int64_t group_order() const { return q_ - 1; }
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElem zero() const { return FieldElem{}; }
    FieldElem one() const { return FieldElem{0}; }
    FieldElem xi() const { return xi_; }

    // xi^e for any integer e (reduced mod q-1).
    FieldElem from_log(std::int64_t e) const;
    // Packed coefficient vector sum(c_i p^i) -> element; inverse of vec_index.
    FieldElem from_vec_index(std::int64_t idx) const;
    std::int64_t vec_index(FieldElem x) const;
    std::vector<int> vec(FieldElem x) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;
    FieldElem div(FieldElem a, FieldElem b) const;
    FieldElem pow(FieldElem a, std::int64_t e) const;

    int aut_order(FrobAut t) const;
    FrobAut compose(FrobAut a, FrobAut b) const { return FrobAut{(a.s + b.s) % r_}; }
    FrobAut aut_inverse(FrobAut t) const { return FrobAut{(r_ - t.s) % r_}; }
    FieldElem apply_aut(FrobAut t, FieldElem x) const;
    // tau^j applied to x, any integer j >= 0 or j < 0 (inverse iterates).
    FieldElem apply_aut_pow(FrobAut t, std::int64_t j, FieldElem x) const;
    bool in_fixed_field(FrobAut t, FieldElem x) const;

    // Iterated norm prod_{j=0..i-1} tau^j(beta); i = 0 gives 1, and the
    // relation N_{i+j}(beta) = N_i(beta) * tau^i(N_j(beta)) holds.
    FieldElem iter_norm(FrobAut t, std::int64_t i, FieldElem beta) const;
    bool norm_relation_check(FrobAut t, std::int64_t i, std::int64_t j, FieldElem beta) const;

    // Scalar I/O: "0" is the zero element, otherwise a decimal exponent e
    // with 1 <= e meaning xi^e (so the identity is written q-1, never 0).
    std::string encode(FieldElem x) const;
    FieldElem decode(const std::string& text) const;
    // Human-readable polynomial form, e.g. "x+2".
    std::string poly_string(FieldElem x) const;

private:
    FieldCtx() = default;

    std::int64_t p_ = 0;
    int r_ = 0;
    std::int64_t q_ = 0;
    std::vector<int> modulus_;              // c_0..c_r, monic
    FieldElem xi_;
    std::vector<std::int32_t> vec_of_log_;  // size q-1
    std::vector<std::int32_t> log_of_vec_;  // size q, kZero at index 0
    std::vector<std::int64_t> frob_mult_;   // p^s mod (q-1) for s in [0, r)
};

// [m]_s = (p^(s m) - 1) / (p^s - 1) = sum_{j<m} p^(s j), exact; throws
// Error once the value leaves the unsigned 128-bit range.
unsigned __int128 bracket_m_s(std::int64_t p, int s, int m);
// Same quantity reduced mod `mod` without overflow.
std::int64_t bracket_m_s_mod(std::int64_t p, int s, int m, std::int64_t mod);

std::string uint128_to_string(unsigned __int128 v);

}  // namespace skewalg
