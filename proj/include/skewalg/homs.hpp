#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "skewalg/petit.hpp"

namespace skewalg {

// Candidate map G: S_a -> S_b determined by G|_S = tau and G(t) = alpha t^k.
// Source and target must share the field, sigma and degree m.
struct MonomialHomSpec {
    const PetitAlgebra* source = nullptr;
    const PetitAlgebra* target = nullptr;
    FrobAut tau;
    FieldElem alpha;
    int k = 1;
};

// Candidate map G: S_f -> S_h determined by G|_S = tau and G(t) = g_image,
// extended additively and tau-semilinearly over the t-power basis with
// left-nested powers of g_image.
struct PolyHomSpec {
    const PetitAlgebra* source = nullptr;
    const PetitAlgebra* target = nullptr;
    FrobAut tau;
    SkewPoly g_image;
};

enum class HomVerdict { hom, iso, not_hom };

// Concrete refutation: a twist pair (t^i, c) or a basis pair (t^i, t^j) on
// which multiplicativity fails, or a named closed-form condition.
struct HomWitness {
    enum class Kind { twist, pair, relation };
    Kind kind = Kind::relation;
    int i = 0;
    int j = 0;
    FieldElem c;
    std::string relation;
};

struct StructureFlags {
    bool k_mod_n = false;       // every image-support degree is 1 mod n
    bool n_divides_m = false;
    bool a_in_S0 = false;
    bool b_in_S0 = false;
    bool norm_condition = false;  // tau(a) == N_m(alpha) b^k (monomial specs)
};

struct HomCertificate {
    HomVerdict verdict = HomVerdict::not_hom;
    bool degenerate = false;  // zero image of t; excluded from hom counts
    bool monomial = false;
    int image_degree = -1;
    StructureFlags flags;
    std::optional<HomWitness> witness;

    bool is_hom() const { return verdict != HomVerdict::not_hom && !degenerate; }
};

PolyHomSpec to_poly_spec(const MonomialHomSpec& spec);

AlgebraElem apply_hom(const PolyHomSpec& spec, const AlgebraElem& x);
AlgebraElem apply_hom(const MonomialHomSpec& spec, const AlgebraElem& x);

// Degree-1 criterion: hom iff tau(a) = N_m^sigma(alpha) * b, and then always
// an isomorphism because alpha is a unit. Requires k == 1.
HomCertificate check_degree1_hom(const MonomialHomSpec& spec);

// Monomial criterion for 1 <= k < m. For k >= 2: hom iff k = 1 mod n,
// n | m, both constants lie in the fixed field, and
// N_{S/S_0}(alpha)^(m/n) * b^k = tau(a); an isomorphism iff additionally
// gcd(k, m) = 1. k == 1 delegates to check_degree1_hom.
HomCertificate check_monomial_hom(const MonomialHomSpec& spec);

// Ground-truth decision procedure. Additivity and tau-semilinearity hold by
// construction; the oracle checks the scalar twists G(t^i ∘ c) =
// G(t^i) ∘ G(c) for every scalar and every i < m, and the basis pairs
// G(t^i ∘ t^j) = G(t^i) ∘ G(t^j) for all i, j < m (the defining relation is
// the pair (m-1, 1); left-nested image powers make any bracketing
// sensitivity surface here). Bilinearity of the product makes this set
// sufficient. Isomorphy is decided by the rank of the image basis matrix.
HomCertificate brute_force_is_hom(const PolyHomSpec& spec);

// Recomputes a stored witness; true when it still refutes the map.
bool reverify_witness(const PolyHomSpec& spec, const HomWitness& witness);

enum class EnumRestrict { monomial, all };

struct EnumerationResult {
    // Certified homs in deterministic candidate order.
    std::vector<std::pair<PolyHomSpec, HomCertificate>> homs;
    std::uint64_t candidates = 0;
    std::uint64_t degenerate = 0;
    std::uint64_t not_hom = 0;
    std::uint64_t hom = 0;
    std::uint64_t iso = 0;
};

// Exhaustive certified enumeration over all tau and all images of t:
// alpha t^k with alpha a unit and 1 <= k < m (monomial), or every
// polynomial of degree < m including zero (all). Throws BudgetError when
// the image count q^m exceeds `budget` in all-mode. OpenMP-parallel with
// results merged in candidate order; `enumerate_homs_serial` is the plain
// reference implementation.
EnumerationResult enumerate_homs(const PetitAlgebra& source, const PetitAlgebra& target,
                                 EnumRestrict restrict, std::uint64_t budget = 1000000);
EnumerationResult enumerate_homs_serial(const PetitAlgebra& source, const PetitAlgebra& target,
                                        EnumRestrict restrict, std::uint64_t budget = 1000000);

int hamming_weight(const AlgebraElem& x);

struct WeightPreservation {
    bool preserving = true;
    bool exhaustive = true;  // false when the domain was sampled
    std::optional<std::uint64_t> violating_index;  // domain enumeration index
};

// Does G preserve Hamming weight? Exhaustive over the q^m domain when it
// fits the budget, otherwise all elements of weight <= 2 plus a fixed-seed
// sample (reported via exhaustive = false). Serial reference kept alongside
// the parallel scan.
WeightPreservation is_weight_preserving(const PolyHomSpec& spec, std::uint64_t budget = 1000000);
WeightPreservation is_weight_preserving_serial(const PolyHomSpec& spec, std::uint64_t budget = 1000000);

// Structure of a certified non-monomial hom: n | m and the image of t has
// support only in degrees = 1 mod n.
bool nonmonomial_structure_check(const PolyHomSpec& spec);

// (s+1)k <= 2m for the least s > 1 with sk >= m; requires 2 <= k < m.
bool star_hypothesis(int m, int k);

}  // namespace skewalg
