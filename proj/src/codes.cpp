#include "skewalg/codes.hpp"

#include <algorithm>

#include "skewalg/parallel.hpp"

namespace skewalg {

namespace {

void require_constacyclic(const PetitAlgebra& alg) {
    if (!alg.constacyclic_a() || alg.constacyclic_a()->is_zero())
        throw Error("codes: modulus t^m - a with a != 0 required");
}

std::uint64_t checked_count(std::int64_t q, int exp, std::uint64_t budget, const char* what) {
    std::uint64_t total = 1;
    for (int i = 0; i < exp; ++i) {
        if (total > budget / static_cast<std::uint64_t>(q) + 1)
            throw BudgetError(std::string("codes: ") + what + " exceeds the enumeration budget");
        total *= static_cast<std::uint64_t>(q);
    }
    if (total > budget)
        throw BudgetError(std::string("codes: ") + what + " exceeds the enumeration budget");
    return total;
}

FieldElem digit_elem(std::int64_t d) {
    return d == 0 ? FieldElem{} : FieldElem{static_cast<std::int32_t>(d - 1)};
}

// Gaussian elimination in place. Column order is ascending when
// `high_to_low` is false, descending otherwise; rows end up fully reduced
// with distinct pivot columns, zero rows trimmed. Returns the rank.
int gauss(const FieldCtx& F, std::vector<std::vector<FieldElem>>& rows, bool high_to_low) {
    const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    int rank = 0;
    for (int step = 0; step < cols && rank < static_cast<int>(rows.size()); ++step) {
        const int col = high_to_low ? cols - 1 - step : step;
        int pivot = -1;
        for (int row = rank; row < static_cast<int>(rows.size()); ++row)
            if (!rows[row][col].is_zero()) { pivot = row; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const FieldElem inv = F.inv(rows[rank][col]);
        for (FieldElem& x : rows[rank]) x = F.mul(inv, x);
        for (int row = 0; row < static_cast<int>(rows.size()); ++row) {
            if (row == rank || rows[row][col].is_zero()) continue;
            const FieldElem factor = rows[row][col];
            for (int j = 0; j < cols; ++j)
                rows[row][j] = F.sub(rows[row][j], F.mul(factor, rows[rank][j]));
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

std::vector<FieldElem> poly_row(const SkewPoly& p, int m) {
    std::vector<FieldElem> row(m);
    for (int i = 0; i <= p.degree(); ++i) row[i] = p.coeff(i);
    return row;
}

std::vector<SkewPoly> divisor_scan(const PetitAlgebra& alg, int d, std::uint64_t budget,
                                   bool parallel) {
    require_constacyclic(alg);
    if (d < 1 || d >= alg.m()) throw Error("codes: divisor degree must satisfy 1 <= d < m");
    const FieldCtx& F = alg.field();
    const std::int64_t q = F.q();
    const std::uint64_t total = checked_count(q, d, budget, "q^d divisor scan");

    const auto candidate = [&](std::uint64_t idx) {
        std::vector<FieldElem> coeffs(d + 1);
        for (int i = 0; i < d; ++i) {
            coeffs[i] = digit_elem(static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(q)));
            idx /= static_cast<std::uint64_t>(q);
        }
        coeffs[d] = F.one();
        return SkewPoly(alg.ring(), std::move(coeffs));
    };

    std::vector<std::uint8_t> hit(total, 0);
    const auto test = [&](std::size_t idx) {
        hit[idx] = right_divides(candidate(idx), alg.modulus()) ? 1 : 0;
    };
    if (parallel) {
        par::for_index(total, test);
    } else {
        for (std::uint64_t idx = 0; idx < total; ++idx) test(idx);
    }

    std::vector<SkewPoly> out;
    for (std::uint64_t idx = 0; idx < total; ++idx)
        if (hit[idx]) out.push_back(candidate(idx));
    return out;
}

WeightDistribution weight_scan(const SkewCode& code, std::uint64_t budget, bool parallel) {
    const FieldCtx& F = code.algebra->field();
    const std::int64_t q = F.q();
    const int m = code.algebra->m();
    const std::uint64_t total = checked_count(q, code.dim, budget, "q^dim codeword scan");

    // Codewords are row combinations: u ∘ g = sum u_i (t^i ∘ g).
    const auto tally = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& counts) {
        std::vector<FieldElem> word(m);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::fill(word.begin(), word.end(), FieldElem{});
            std::uint64_t v = idx;
            for (int i = 0; i < code.dim; ++i) {
                const FieldElem c = digit_elem(static_cast<std::int64_t>(v % static_cast<std::uint64_t>(q)));
                v /= static_cast<std::uint64_t>(q);
                if (c.is_zero()) continue;
                for (int j = 0; j < m; ++j)
                    word[j] = F.add(word[j], F.mul(c, code.gen_matrix[i][j]));
            }
            int weight = 0;
            for (const FieldElem& x : word)
                if (!x.is_zero()) ++weight;
            ++counts[weight];
        }
    };

    WeightDistribution dist;
    dist.counts.assign(m + 1, 0);
    if (parallel) {
        const std::size_t chunks = 64;
        const std::uint64_t per = (total + chunks - 1) / chunks;
        std::vector<std::vector<std::uint64_t>> local(chunks,
                                                      std::vector<std::uint64_t>(m + 1, 0));
        par::for_index(chunks, [&](std::size_t c) {
            const std::uint64_t lo = c * per;
            const std::uint64_t hi = std::min(total, lo + per);
            if (lo < hi) tally(lo, hi, local[c]);
        });
        for (const auto& counts : local)
            for (int w = 0; w <= m; ++w) dist.counts[w] += counts[w];
    } else {
        tally(0, total, dist.counts);
    }
    return dist;
}

}  // namespace

int WeightDistribution::min_distance() const {
    for (std::size_t w = 1; w < counts.size(); ++w)
        if (counts[w] > 0) return static_cast<int>(w);
    throw Error("codes: zero-dimensional code has no minimum distance");
}

std::vector<SkewPoly> right_divisors(const PetitAlgebra& alg, int d, std::uint64_t budget) {
    return divisor_scan(alg, d, budget, true);
}

std::vector<SkewPoly> right_divisors_serial(const PetitAlgebra& alg, int d, std::uint64_t budget) {
    return divisor_scan(alg, d, budget, false);
}

SkewCode code_from_generator(const PetitAlgebra& alg, const SkewPoly& g) {
    require_constacyclic(alg);
    if (g.is_zero() || !g.is_monic()) throw Error("codes: generator must be monic");
    if (g.degree() >= alg.m()) throw Error("codes: generator degree must be below m");
    if (!right_divides(g, alg.modulus()))
        throw Error("codes: generator does not right-divide the modulus");

    SkewCode code;
    code.algebra = &alg;
    code.generator = g;
    code.dim = alg.m() - g.degree();
    const AlgebraElem gen = alg.element(g);
    for (int i = 0; i < code.dim; ++i)
        code.gen_matrix.push_back(poly_row(alg.mul(alg.t_power(i), gen).poly, alg.m()));

    auto copy = code.gen_matrix;
    if (gauss(alg.field(), copy, false) != code.dim)
        throw Error("codes: generator matrix rank below m - deg g (internal)");
    return code;
}

WeightDistribution weight_distribution(const SkewCode& code, std::uint64_t budget) {
    return weight_scan(code, budget, true);
}

WeightDistribution weight_distribution_serial(const SkewCode& code, std::uint64_t budget) {
    return weight_scan(code, budget, false);
}

SkewCode map_code(const MonomialHomSpec& spec, const SkewCode& code) {
    if (spec.source != code.algebra) throw Error("codes: spec source is not the code's algebra");
    if (check_monomial_hom(spec).verdict != HomVerdict::iso)
        throw Error("codes: spec is not a certified isomorphism");
    const PetitAlgebra& T = *spec.target;
    const FieldCtx& F = T.field();
    const int m = T.m();

    // The image ideal is generated by the image of g; its basis multiples
    // row-reduce to the canonical monic generator of minimal degree.
    const AlgebraElem gimg = apply_hom(spec, code.algebra->element(code.generator));
    std::vector<std::vector<FieldElem>> span;
    for (int j = 0; j < m; ++j) span.push_back(poly_row(T.mul(T.t_power(j), gimg).poly, m));
    auto reduced = span;
    if (gauss(F, reduced, true) != code.dim)
        throw Error("codes: image ideal dimension drifted (internal)");

    int best = -1, best_deg = m;
    for (int row = 0; row < static_cast<int>(reduced.size()); ++row) {
        int deg = -1;
        for (int j = m - 1; j >= 0; --j)
            if (!reduced[row][j].is_zero()) { deg = j; break; }
        if (deg >= 0 && deg < best_deg) {
            best_deg = deg;
            best = row;
        }
    }
    std::vector<FieldElem> coeffs(reduced[best].begin(), reduced[best].begin() + best_deg + 1);
    const FieldElem scale = F.inv(coeffs.back());
    for (FieldElem& c : coeffs) c = F.mul(scale, c);
    SkewPoly gprime(T.ring(), std::move(coeffs));
    if (!right_divides(gprime, T.modulus()))
        throw Error("codes: mapped generator does not divide the target modulus (internal)");

    SkewCode out = code_from_generator(T, gprime);
    auto left = out.gen_matrix;
    auto right = span;
    gauss(F, left, false);
    gauss(F, right, false);
    if (left != right) throw Error("codes: mapped row space mismatch (internal)");
    return out;
}

bool same_code(const SkewCode& x, const SkewCode& y) {
    if (x.algebra != y.algebra) {
        if (!x.algebra || !y.algebra) return false;
        if (!(x.algebra->ring() == y.algebra->ring()) ||
            !(x.algebra->modulus() == y.algebra->modulus()))
            return false;
    }
    auto a = x.gen_matrix;
    auto b = y.gen_matrix;
    const FieldCtx& F = x.algebra->field();
    gauss(F, a, false);
    gauss(F, b, false);
    return a == b;
}

bool code_contains(const SkewCode& code, const AlgebraElem& x) {
    if (x.alg != code.algebra) throw Error("codes: element from another algebra");
    const FieldCtx& F = code.algebra->field();
    auto rows = code.gen_matrix;
    const int base = gauss(F, rows, false);
    rows.push_back(poly_row(x.poly, code.algebra->m()));
    return gauss(F, rows, false) == base;
}

}  // namespace skewalg
