#include "skewalg/homs.hpp"

#include <numeric>
#include <random>

#include "skewalg/parallel.hpp"

namespace skewalg {

namespace {

void validate_pair(const PetitAlgebra* source, const PetitAlgebra* target) {
    if (!source || !target) throw Error("homs: null algebra handle");
    if (!(source->ring() == target->ring()))
        throw Error("homs: source and target live over different rings");
    if (source->m() != target->m())
        throw Error("homs: source and target must have equal degree");
}

void validate_constacyclic(const PetitAlgebra& alg) {
    if (!alg.constacyclic_a() || alg.constacyclic_a()->is_zero())
        throw Error("homs: constacyclic modulus t^m - a with a != 0 required");
}

// Left-nested powers of the image of t, the basis images G(t^i).
std::vector<AlgebraElem> image_powers(const PolyHomSpec& spec) {
    const PetitAlgebra& T = *spec.target;
    std::vector<AlgebraElem> ghat;
    ghat.reserve(spec.source->m());
    ghat.push_back(T.one());
    AlgebraElem g = T.element(spec.g_image);
    for (int i = 1; i < spec.source->m(); ++i) ghat.push_back(T.mul(g, ghat.back()));
    return ghat;
}

AlgebraElem apply_with_powers(const PolyHomSpec& spec, const std::vector<AlgebraElem>& ghat,
                              const SkewPoly& x) {
    const PetitAlgebra& T = *spec.target;
    const FieldCtx& F = T.field();
    AlgebraElem acc = T.zero();
    for (int i = 0; i <= x.degree(); ++i) {
        const FieldElem c = x.coeff(i);
        if (c.is_zero()) continue;
        acc = T.add(acc, T.scalar_mul(F.apply_aut(spec.tau, c), ghat[i]));
    }
    return acc;
}

StructureFlags compute_flags(const PolyHomSpec& spec) {
    const FieldCtx& F = spec.target->field();
    const FrobAut sigma = spec.source->ring().sigma;
    const int n = spec.source->sigma_order();
    const int m = spec.source->m();
    StructureFlags flags;
    flags.n_divides_m = (m % n == 0);
    if (!spec.g_image.is_zero()) {
        flags.k_mod_n = true;
        for (int i = 0; i <= spec.g_image.degree(); ++i)
            if (!spec.g_image.coeff(i).is_zero() && (i % n) != (1 % n)) flags.k_mod_n = false;
    }
    const auto& a = spec.source->constacyclic_a();
    const auto& b = spec.target->constacyclic_a();
    if (a && !a->is_zero()) flags.a_in_S0 = F.in_fixed_field(sigma, *a);
    if (b && !b->is_zero()) flags.b_in_S0 = F.in_fixed_field(sigma, *b);
    if (a && b && !a->is_zero() && !b->is_zero() && spec.g_image.is_monomial()) {
        const int k = spec.g_image.degree();
        const FieldElem alpha = spec.g_image.lead();
        FieldElem lhs = F.mul(F.iter_norm(sigma, m, alpha), F.pow(*b, k));
        flags.norm_condition = (lhs == F.apply_aut(spec.tau, *a));
    }
    return flags;
}

// Rank of the m x m matrix whose rows are the basis images; the map is
// tau-semilinear, so full rank is exactly bijectivity.
int image_rank(const PolyHomSpec& spec, const std::vector<AlgebraElem>& ghat) {
    const FieldCtx& F = spec.target->field();
    const int m = spec.source->m();
    std::vector<std::vector<FieldElem>> rows(m, std::vector<FieldElem>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) rows[i][j] = ghat[i].poly.coeff(j);
    int rank = 0;
    for (int col = 0; col < m && rank < m; ++col) {
        int pivot = -1;
        for (int row = rank; row < m; ++row)
            if (!rows[row][col].is_zero()) { pivot = row; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const FieldElem inv = F.inv(rows[rank][col]);
        for (int j = 0; j < m; ++j) rows[rank][j] = F.mul(inv, rows[rank][j]);
        for (int row = 0; row < m; ++row) {
            if (row == rank || rows[row][col].is_zero()) continue;
            const FieldElem factor = rows[row][col];
            for (int j = 0; j < m; ++j)
                rows[row][j] = F.sub(rows[row][j], F.mul(factor, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

PolyHomSpec to_poly_spec(const MonomialHomSpec& spec) {
    validate_pair(spec.source, spec.target);
    if (spec.alpha.is_zero()) throw Error("homs: alpha must be a unit");
    if (spec.k < 1 || spec.k >= spec.source->m()) throw Error("homs: k out of range [1, m)");
    return PolyHomSpec{spec.source, spec.target, spec.tau,
                       SkewPoly::monomial(spec.source->ring(), spec.alpha, spec.k)};
}

AlgebraElem apply_hom(const PolyHomSpec& spec, const AlgebraElem& x) {
    validate_pair(spec.source, spec.target);
    if (x.alg != spec.source) throw Error("homs: argument not in the source algebra");
    return apply_with_powers(spec, image_powers(spec), x.poly);
}

AlgebraElem apply_hom(const MonomialHomSpec& spec, const AlgebraElem& x) {
    return apply_hom(to_poly_spec(spec), x);
}

HomCertificate check_degree1_hom(const MonomialHomSpec& spec) {
    validate_pair(spec.source, spec.target);
    validate_constacyclic(*spec.source);
    validate_constacyclic(*spec.target);
    if (spec.k != 1) throw Error("homs: degree-1 check needs k == 1");
    if (spec.alpha.is_zero()) throw Error("homs: alpha must be a unit");

    const FieldCtx& F = spec.source->field();
    const FrobAut sigma = spec.source->ring().sigma;
    const int m = spec.source->m();
    const FieldElem a = *spec.source->constacyclic_a();
    const FieldElem b = *spec.target->constacyclic_a();

    HomCertificate cert;
    cert.monomial = true;
    cert.image_degree = 1;
    cert.flags = compute_flags(to_poly_spec(spec));
    const bool ok = F.apply_aut(spec.tau, a) == F.mul(F.iter_norm(sigma, m, spec.alpha), b);
    if (ok) {
        cert.verdict = HomVerdict::iso;  // alpha is a unit, so hom implies iso
    } else {
        cert.verdict = HomVerdict::not_hom;
        // G(t^(m-1) ∘ t) = tau(a) while G(t^(m-1)) ∘ G(t) = N_m(alpha) b.
        cert.witness = HomWitness{HomWitness::Kind::pair, m - 1, 1, FieldElem{}, ""};
    }
    return cert;
}

HomCertificate check_monomial_hom(const MonomialHomSpec& spec) {
    if (spec.k == 1) return check_degree1_hom(spec);
    validate_pair(spec.source, spec.target);
    validate_constacyclic(*spec.source);
    validate_constacyclic(*spec.target);
    if (spec.k < 2 || spec.k >= spec.source->m()) throw Error("homs: k out of range [1, m)");
    if (spec.alpha.is_zero()) throw Error("homs: alpha must be a unit");

    const FieldCtx& F = spec.source->field();
    const FrobAut sigma = spec.source->ring().sigma;
    const int n = spec.source->sigma_order();
    const int m = spec.source->m();
    const FieldElem a = *spec.source->constacyclic_a();
    const FieldElem b = *spec.target->constacyclic_a();

    HomCertificate cert;
    cert.monomial = true;
    cert.image_degree = spec.k;
    cert.flags = compute_flags(to_poly_spec(spec));

    bool norm_condition;
    if (cert.flags.n_divides_m) {
        // N_{S/S_0}(alpha)^(m/n) b^k = tau(a)
        const FieldElem rel_norm = F.iter_norm(sigma, n, spec.alpha);
        norm_condition = F.mul(F.pow(rel_norm, m / n), F.pow(b, spec.k)) == F.apply_aut(spec.tau, a);
    } else {
        norm_condition = cert.flags.norm_condition;
    }

    const bool hom = cert.flags.k_mod_n && cert.flags.n_divides_m && cert.flags.a_in_S0 &&
                     cert.flags.b_in_S0 && norm_condition;
    if (hom) {
        const bool coprime = std::gcd(static_cast<std::int64_t>(spec.k), static_cast<std::int64_t>(m)) == 1;
        cert.verdict = coprime ? HomVerdict::iso : HomVerdict::hom;
        return cert;
    }
    cert.verdict = HomVerdict::not_hom;
    if (!cert.flags.k_mod_n) {
        cert.witness = HomWitness{HomWitness::Kind::twist, 1, 0, F.xi(), ""};
    } else if (cert.flags.n_divides_m && cert.flags.a_in_S0 && cert.flags.b_in_S0 && !norm_condition) {
        cert.witness = HomWitness{HomWitness::Kind::pair, m - 1, 1, FieldElem{}, ""};
    } else if (!cert.flags.n_divides_m) {
        cert.witness = HomWitness{HomWitness::Kind::relation, 0, 0, FieldElem{}, "n_divides_m"};
    } else if (!cert.flags.a_in_S0) {
        cert.witness = HomWitness{HomWitness::Kind::relation, 0, 0, FieldElem{}, "a_in_S0"};
    } else {
        cert.witness = HomWitness{HomWitness::Kind::relation, 0, 0, FieldElem{}, "b_in_S0"};
    }
    return cert;
}

HomCertificate brute_force_is_hom(const PolyHomSpec& spec) {
    validate_pair(spec.source, spec.target);
    if (!(spec.g_image.ring() == spec.target->ring()))
        throw Error("homs: image belongs to another ring");
    if (spec.g_image.degree() >= spec.source->m())
        throw Error("homs: image of t must already be reduced (degree < m)");

    const PetitAlgebra& S = *spec.source;
    const PetitAlgebra& T = *spec.target;
    const FieldCtx& F = T.field();
    const FrobAut sigma = S.ring().sigma;
    const int m = S.m();
    const std::int64_t q = F.q();

    HomCertificate cert;
    cert.degenerate = spec.g_image.is_zero();
    cert.monomial = spec.g_image.is_monomial();
    cert.image_degree = spec.g_image.degree();
    cert.flags = compute_flags(spec);

    // Basis images built incrementally; the scalar-twist checks run per
    // level so structurally impossible candidates exit early.
    std::vector<AlgebraElem> ghat{T.one()};
    AlgebraElem g = T.element(spec.g_image);
    for (int i = 1; i < m; ++i) {
        ghat.push_back(T.mul(g, ghat.back()));
        for (std::int64_t e = 0; e < q - 1; ++e) {
            const FieldElem c = F.from_log(e);
            AlgebraElem lhs = T.mul(ghat[i], T.scalar(F.apply_aut(spec.tau, c)));
            AlgebraElem rhs = T.scalar_mul(
                F.apply_aut(spec.tau, F.apply_aut_pow(sigma, i, c)), ghat[i]);
            if (!(lhs == rhs)) {
                cert.verdict = HomVerdict::not_hom;
                cert.witness = HomWitness{HomWitness::Kind::twist, i, 0, c, ""};
                return cert;
            }
        }
    }

    for (int i = 1; i < m; ++i) {
        for (int j = 1; j < m; ++j) {
            AlgebraElem prod = S.mul(S.t_power(i), S.t_power(j));
            AlgebraElem lhs = apply_with_powers(spec, ghat, prod.poly);
            AlgebraElem rhs = T.mul(ghat[i], ghat[j]);
            if (!(lhs == rhs)) {
                cert.verdict = HomVerdict::not_hom;
                cert.witness = HomWitness{HomWitness::Kind::pair, i, j, FieldElem{}, ""};
                return cert;
            }
        }
    }

    cert.verdict = image_rank(spec, ghat) == m ? HomVerdict::iso : HomVerdict::hom;
    return cert;
}

bool reverify_witness(const PolyHomSpec& spec, const HomWitness& witness) {
    validate_pair(spec.source, spec.target);
    const PetitAlgebra& S = *spec.source;
    const PetitAlgebra& T = *spec.target;
    const FieldCtx& F = T.field();
    const FrobAut sigma = S.ring().sigma;

    switch (witness.kind) {
        case HomWitness::Kind::twist: {
            auto ghat = image_powers(spec);
            AlgebraElem lhs = T.mul(ghat[witness.i], T.scalar(F.apply_aut(spec.tau, witness.c)));
            AlgebraElem rhs = T.scalar_mul(
                F.apply_aut(spec.tau, F.apply_aut_pow(sigma, witness.i, witness.c)), ghat[witness.i]);
            return !(lhs == rhs);
        }
        case HomWitness::Kind::pair: {
            auto ghat = image_powers(spec);
            AlgebraElem prod = S.mul(S.t_power(witness.i), S.t_power(witness.j));
            AlgebraElem lhs = apply_with_powers(spec, ghat, prod.poly);
            AlgebraElem rhs = T.mul(ghat[witness.i], ghat[witness.j]);
            return !(lhs == rhs);
        }
        case HomWitness::Kind::relation: {
            StructureFlags flags = compute_flags(spec);
            if (witness.relation == "k_mod_n") return !flags.k_mod_n;
            if (witness.relation == "n_divides_m") return !flags.n_divides_m;
            if (witness.relation == "a_in_S0") return !flags.a_in_S0;
            if (witness.relation == "b_in_S0") return !flags.b_in_S0;
            if (witness.relation == "norm_condition") return !flags.norm_condition;
            return false;
        }
    }
    return false;
}

namespace {

struct CandidateSpace {
    const PetitAlgebra* source;
    const PetitAlgebra* target;
    EnumRestrict restrict_mode;
    std::int64_t q;
    int m;
    std::uint64_t images = 0;  // candidates per tau

    std::uint64_t total() const {
        return images * static_cast<std::uint64_t>(source->field().r());
    }

    PolyHomSpec decode(std::uint64_t idx) const {
        const FrobAut tau{static_cast<int>(idx / images)};
        std::uint64_t img = idx % images;
        if (restrict_mode == EnumRestrict::monomial) {
            const int k = 1 + static_cast<int>(img % static_cast<std::uint64_t>(m - 1));
            const std::int64_t e = static_cast<std::int64_t>(img / static_cast<std::uint64_t>(m - 1));
            return PolyHomSpec{source, target, tau,
                               SkewPoly::monomial(source->ring(), FieldElem{static_cast<std::int32_t>(e)}, k)};
        }
        std::vector<FieldElem> coeffs(m);
        for (int i = 0; i < m; ++i) {
            const std::int64_t digit = static_cast<std::int64_t>(img % static_cast<std::uint64_t>(q));
            img /= static_cast<std::uint64_t>(q);
            coeffs[i] = digit == 0 ? FieldElem{} : FieldElem{static_cast<std::int32_t>(digit - 1)};
        }
        return PolyHomSpec{source, target, tau, SkewPoly(source->ring(), std::move(coeffs))};
    }
};

CandidateSpace make_space(const PetitAlgebra& source, const PetitAlgebra& target,
                          EnumRestrict restrict_mode, std::uint64_t budget) {
    validate_pair(&source, &target);
    if (source.m() < 2 && restrict_mode == EnumRestrict::monomial)
        throw Error("homs: no monomial candidates for m < 2");
    CandidateSpace space{&source, &target, restrict_mode, source.field().q(), source.m(), 0};
    if (restrict_mode == EnumRestrict::monomial) {
        space.images = static_cast<std::uint64_t>(space.q - 1) * static_cast<std::uint64_t>(space.m - 1);
    } else {
        std::uint64_t images = 1;
        for (int i = 0; i < space.m; ++i) {
            if (images > budget / static_cast<std::uint64_t>(space.q) + 1)
                throw BudgetError("homs: q^m exceeds the enumeration budget");
            images *= static_cast<std::uint64_t>(space.q);
        }
        if (images > budget) throw BudgetError("homs: q^m exceeds the enumeration budget");
        space.images = images;
    }
    return space;
}

enum : std::uint8_t { kNotHom = 0, kHom = 1, kIso = 2, kDegenerate = 3 };

EnumerationResult collect(const CandidateSpace& space, const std::vector<std::uint8_t>& verdicts) {
    EnumerationResult out;
    out.candidates = verdicts.size();
    for (std::uint64_t idx = 0; idx < verdicts.size(); ++idx) {
        switch (verdicts[idx]) {
            case kDegenerate:
                ++out.degenerate;
                break;
            case kNotHom:
                ++out.not_hom;
                break;
            case kHom:
            case kIso: {
                PolyHomSpec spec = space.decode(idx);
                HomCertificate cert = brute_force_is_hom(spec);
                verdicts[idx] == kIso ? ++out.iso : ++out.hom;
                out.homs.emplace_back(std::move(spec), std::move(cert));
                break;
            }
        }
    }
    return out;
}

std::uint8_t classify_candidate(const CandidateSpace& space, std::uint64_t idx) {
    PolyHomSpec spec = space.decode(idx);
    HomCertificate cert = brute_force_is_hom(spec);
    if (cert.degenerate) return kDegenerate;
    if (cert.verdict == HomVerdict::iso) return kIso;
    if (cert.verdict == HomVerdict::hom) return kHom;
    return kNotHom;
}

}  // namespace

EnumerationResult enumerate_homs(const PetitAlgebra& source, const PetitAlgebra& target,
                                 EnumRestrict restrict_mode, std::uint64_t budget) {
    const CandidateSpace space = make_space(source, target, restrict_mode, budget);
    std::vector<std::uint8_t> verdicts(space.total());
    par::for_index(verdicts.size(),
                   [&](std::size_t idx) { verdicts[idx] = classify_candidate(space, idx); });
    return collect(space, verdicts);
}

EnumerationResult enumerate_homs_serial(const PetitAlgebra& source, const PetitAlgebra& target,
                                        EnumRestrict restrict_mode, std::uint64_t budget) {
    const CandidateSpace space = make_space(source, target, restrict_mode, budget);
    std::vector<std::uint8_t> verdicts(space.total());
    for (std::uint64_t idx = 0; idx < verdicts.size(); ++idx)
        verdicts[idx] = classify_candidate(space, idx);
    return collect(space, verdicts);
}

int hamming_weight(const AlgebraElem& x) {
    int w = 0;
    for (const FieldElem& c : x.poly.coeffs())
        if (!c.is_zero()) ++w;
    return w;
}

namespace {

// Domain elements are indexed in base q: digit 0 is the zero coefficient,
// digit d >= 1 is xi^(d-1).
FieldElem digit_elem(std::int64_t d) {
    return d == 0 ? FieldElem{} : FieldElem{static_cast<std::int32_t>(d - 1)};
}

// Checks weight preservation of the single domain element with this index;
// returns true when preserved.
bool check_weight_at(const PolyHomSpec& spec, const std::vector<AlgebraElem>& ghat,
                     std::uint64_t idx) {
    const PetitAlgebra& T = *spec.target;
    const FieldCtx& F = T.field();
    const std::int64_t q = F.q();
    const int m = spec.source->m();
    AlgebraElem image = T.zero();
    int weight = 0;
    std::uint64_t v = idx;
    for (int i = 0; i < m; ++i) {
        const std::int64_t digit = static_cast<std::int64_t>(v % static_cast<std::uint64_t>(q));
        v /= static_cast<std::uint64_t>(q);
        if (digit == 0) continue;
        ++weight;
        image = T.add(image, T.scalar_mul(F.apply_aut(spec.tau, digit_elem(digit)), ghat[i]));
    }
    return hamming_weight(image) == weight;
}

WeightPreservation weight_scan(const PolyHomSpec& spec, std::uint64_t budget, bool parallel) {
    validate_pair(spec.source, spec.target);
    const FieldCtx& F = spec.source->field();
    const int m = spec.source->m();
    const std::int64_t q = F.q();
    const auto ghat = image_powers(spec);

    std::uint64_t domain = 1;
    bool exhaustive = true;
    for (int i = 0; i < m; ++i) {
        if (domain > budget / static_cast<std::uint64_t>(q) + 1) {
            exhaustive = false;
            break;
        }
        domain *= static_cast<std::uint64_t>(q);
    }
    if (exhaustive && domain > budget) exhaustive = false;

    WeightPreservation out;
    if (exhaustive) {
        constexpr std::uint64_t kNone = ~std::uint64_t{0};
        if (parallel) {
            const std::size_t chunks = 64;
            std::vector<std::uint64_t> first(chunks, kNone);
            const std::uint64_t per = (domain + chunks - 1) / chunks;
            par::for_index(chunks, [&](std::size_t c) {
                const std::uint64_t lo = c * per;
                const std::uint64_t hi = std::min(domain, lo + per);
                for (std::uint64_t idx = lo; idx < hi; ++idx) {
                    if (!check_weight_at(spec, ghat, idx)) {
                        first[c] = idx;
                        return;
                    }
                }
            });
            for (std::uint64_t f : first)
                if (f != kNone && (!out.violating_index || f < *out.violating_index))
                    out.violating_index = f;
        } else {
            for (std::uint64_t idx = 0; idx < domain; ++idx) {
                if (!check_weight_at(spec, ghat, idx)) {
                    out.violating_index = idx;
                    break;
                }
            }
        }
        out.preserving = !out.violating_index;
        out.exhaustive = true;
        return out;
    }

    // Sampled fallback: all weight-1 elements, all weight-2 elements up to
    // the budget, then a fixed-seed sample.
    out.exhaustive = false;
    std::vector<std::uint64_t> q_pow(m, 1);
    for (int i = 1; i < m; ++i) q_pow[i] = q_pow[i - 1] * static_cast<std::uint64_t>(q);
    for (int i = 0; i < m && out.preserving; ++i) {
        for (std::int64_t e = 0; e < q - 1; ++e) {
            const std::uint64_t idx = static_cast<std::uint64_t>(e + 1) * q_pow[i];
            if (!check_weight_at(spec, ghat, idx)) {
                out.violating_index = idx;
                out.preserving = false;
                break;
            }
        }
    }
    std::uint64_t pairs_checked = 0;
    for (int i = 0; i < m && out.preserving; ++i) {
        for (int j = i + 1; j < m && out.preserving; ++j) {
            for (std::int64_t e1 = 0; e1 < q - 1 && out.preserving; ++e1) {
                for (std::int64_t e2 = 0; e2 < q - 1; ++e2) {
                    if (++pairs_checked > budget) goto pairs_done;
                    const std::uint64_t idx = static_cast<std::uint64_t>(e1 + 1) * q_pow[i] +
                                              static_cast<std::uint64_t>(e2 + 1) * q_pow[j];
                    if (!check_weight_at(spec, ghat, idx)) {
                        out.violating_index = idx;
                        out.preserving = false;
                        break;
                    }
                }
            }
        }
    }
pairs_done:
    std::mt19937_64 rng(0x5ca1ab1eULL);
    for (std::uint64_t draws = 0; draws < budget && out.preserving; ++draws) {
        std::uint64_t idx = 0, scale = 1;
        for (int i = 0; i < m; ++i) {
            idx += (rng() % static_cast<std::uint64_t>(q)) * scale;
            scale *= static_cast<std::uint64_t>(q);
        }
        if (!check_weight_at(spec, ghat, idx)) {
            out.violating_index = idx;
            out.preserving = false;
        }
    }
    return out;
}

}  // namespace

WeightPreservation is_weight_preserving(const PolyHomSpec& spec, std::uint64_t budget) {
    return weight_scan(spec, budget, true);
}

WeightPreservation is_weight_preserving_serial(const PolyHomSpec& spec, std::uint64_t budget) {
    return weight_scan(spec, budget, false);
}

bool nonmonomial_structure_check(const PolyHomSpec& spec) {
    validate_pair(spec.source, spec.target);
    const int n = spec.source->sigma_order();
    if (spec.source->m() % n != 0) return false;
    if (spec.g_image.is_zero()) return false;
    for (int i = 0; i <= spec.g_image.degree(); ++i)
        if (!spec.g_image.coeff(i).is_zero() && (i % n) != (1 % n)) return false;
    return true;
}

bool star_hypothesis(int m, int k) {
    if (k < 2 || k >= m) throw Error("homs: star hypothesis needs 2 <= k < m");
    const int s = (m + k - 1) / k;  // least s with sk >= m; s >= 2 since k < m
    return (s + 1) * k <= 2 * m;
}

}  // namespace skewalg
