#pragma once

#include <cstdint>
#include <vector>

#include "skewalg/homs.hpp"

namespace skewalg {

// A skew constacyclic code: the principal left ideal of S_a generated by a
// monic right divisor g of t^m - a, presented as the row space of
// { t^i ∘ g : 0 <= i < m - deg g }.
struct SkewCode {
    const PetitAlgebra* algebra = nullptr;
    SkewPoly generator;
    int dim = 0;
    std::vector<std::vector<FieldElem>> gen_matrix;  // dim rows, m columns
};

struct WeightDistribution {
    std::vector<std::uint64_t> counts;  // index = Hamming weight, 0..m

    // Least positive weight with a codeword; requires dim >= 1.
    int min_distance() const;
};

// All monic degree-d right divisors of the modulus t^m - a, in coefficient
// enumeration order. Exhaustive scan over q^d monic candidates; throws
// BudgetError past `budget`. Parallel with a serial reference.
std::vector<SkewPoly> right_divisors(const PetitAlgebra& alg, int d,
                                     std::uint64_t budget = 1000000);
std::vector<SkewPoly> right_divisors_serial(const PetitAlgebra& alg, int d,
                                            std::uint64_t budget = 1000000);

// Builds the code generated by g; validates that g is monic and right-divides
// the modulus, and that the generator matrix has full row rank m - deg g.
SkewCode code_from_generator(const PetitAlgebra& alg, const SkewPoly& g);

// Exact weight enumerator over all q^dim codewords (budget-guarded).
WeightDistribution weight_distribution(const SkewCode& code, std::uint64_t budget = 1000000);
WeightDistribution weight_distribution_serial(const SkewCode& code, std::uint64_t budget = 1000000);

// Image of a code under a certified monomial isomorphism: the ideal generated
// by the image of g, returned with its canonical monic minimal-degree
// generator. The result is cross-checked: the regenerated row space must
// equal the mapped row space, and the new generator must right-divide
// t^m - b.
SkewCode map_code(const MonomialHomSpec& spec, const SkewCode& code);

// Row-space equality (codes with distinct generators can coincide).
bool same_code(const SkewCode& x, const SkewCode& y);

bool code_contains(const SkewCode& code, const AlgebraElem& x);

}  // namespace skewalg
