#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewalg/homs.hpp"

namespace skewalg {

// Which (tau, k) ranges define the relation a ~ b (a certified isomorphism
// S_a -> S_b exists with G|_S = tau of degree k):
//   m_sigma_equivalence: tau = id, k = 1   (refines all others)
//   m_sigma_isometry:    tau = id, 1 <= k < m
//   equivalence:         any tau, k = 1
//   isometry:            any tau, 1 <= k < m
enum class ClassMode { m_sigma_equivalence, m_sigma_isometry, equivalence, isometry };

const char* to_string(ClassMode mode);
std::optional<ClassMode> class_mode_from_string(std::string_view name);

struct ClassInfo {
    std::vector<std::int64_t> exponents;  // ascending; front() is the representative
    bool contains_subfield = false;       // some member lies in the fixed field of sigma
    bool associative_sector = false;      // n | m and contains_subfield
};

// One of the four coset-census cases: the number of b in a N_m(K^x) with
// b outside F_{p^s}. `formula` is the value the census derivation gives;
// `stated` is the classical closed form ((p^r-1)/w - t in the last case),
// which overcounts whenever the coset walks through more than one period of
// the subfield congruence. Both are reported; only `formula` is asserted
// against the oracle.
struct PerCaseCount {
    std::string label;
    bool applicable = false;
    std::int64_t formula = 0;
    std::int64_t stated = 0;
    std::optional<std::int64_t> oracle;  // filled by count_vs_oracle
    bool uniform = true;                 // census identical for every a in the case
    std::optional<bool> agree;           // formula == oracle
};

struct CountResult {
    std::int64_t q = 0;
    int n = 0;
    std::int64_t N = 0;  // headline class count: w if n does not divide m, else w - 1
    std::int64_t w = 0;  // gcd([m]_s, q - 1); norm subgroup has order (q-1)/w
    std::int64_t t = 0;  // gcd([m]_s, (q-1)/(p^s-1))
    std::array<PerCaseCount, 4> per_case;
};

struct ClassReport {
    int p = 0, r = 0, s = 0, m = 0, n = 0;
    ClassMode mode = ClassMode::m_sigma_equivalence;
    std::vector<ClassInfo> classes;  // sorted by representative exponent
    std::int64_t w = 0;
    std::int64_t t = 0;  // 0 when s does not divide r
    std::optional<std::int64_t> formula_N;
    std::int64_t oracle_N = 0;  // classes containing an element outside the fixed field
    std::optional<bool> agree;
    std::array<PerCaseCount, 4> per_case{};
    // Norm-subgroup cosets fully contained in the fixed field; the witnesses
    // for any headline disagreement.
    std::vector<std::vector<std::int64_t>> subfield_cosets;
    std::optional<std::string> flag_note;
};

// The subgroup N_m(K^x) = <xi^([m]_s)>, sorted by discrete log.
std::vector<FieldElem> norm_subgroup(const FieldCtx& F, FrobAut sigma, int m);

// Partition K^x (as exponents 0..q-2) under the mode's relation. The merge
// generators are exact: b ~ a N_m(K^x) (always), Galois twists a ~ a^p when
// tau is free, and a ~ b^k for fixed-field b and admissible k when k is
// free; every certified isomorphism decomposes into these. Throws
// BudgetError when q exceeds 2^12.
ClassReport partition(const FieldCtx& F, FrobAut sigma, int m, ClassMode mode);

// Closed-form class count and the four coset-census cases. Requires p prime
// and s | r (1 <= s <= r).
CountResult count_formula(std::int64_t p, int r, int s, int m);

// Builds the field, runs the m-sigma-isometry partition as the oracle, and
// compares: the four per-case censuses must match `formula`; the headline N
// is only compared, with any mismatch noted (the cosets inside the fixed
// field are listed as witnesses), because several singleton cosets can sit
// inside F_{p^s} when the norm subgroup is small.
ClassReport count_vs_oracle(std::int64_t p, int r, int s, int m);

// First (k, tau, alpha) in lexicographic sweep order within the mode's
// ranges whose monomial criterion certifies an isomorphism S_a -> S_b.
std::optional<MonomialHomSpec> find_certified_iso(const PetitAlgebra& Sa, const PetitAlgebra& Sb,
                                                  ClassMode mode);

// Evaluates the three associative-sector statements independently for given
// (a, b, k) with a, b fixed-field units and n | m:
//   (i)   some G_{tau,alpha,k}: S_a -> S_b is an isomorphism (monomial criterion);
//   (ii)  some G_{tau,alpha}: S_a -> S_{b^k} is a degree-1 isomorphism, and
//         k = 1 mod n with gcd(k, m) = 1;
//   (iii) tau(a) = N_m(alpha) b^k solvable over (tau, alpha), with the same
//         side conditions on k (integer arithmetic, no algebra built).
// Throws Error if the three disagree; otherwise returns the common value.
bool associative_sector_equivalence(const FieldCtx& F, FrobAut sigma, int m, FieldElem a,
                                    FieldElem b, int k);

}  // namespace skewalg
