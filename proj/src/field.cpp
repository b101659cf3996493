#include "skewalg/field.hpp"

#include <algorithm>
#include <numeric>

namespace skewalg {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over F_p, coefficient vectors low-to-high, used only
// while constructing the field. No trailing zeros except the zero poly {}.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<int>((out[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
    }
    trim(out);
    return out;
}

Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
    // m monic
    const std::size_t dm = m.size() - 1;
    trim(a);
    while (a.size() > dm) {
        const int c = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        if (c != 0) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                std::int64_t v = a[shift + i] - static_cast<std::int64_t>(c) * m[i];
                a[shift + i] = static_cast<int>(((v % p) + p) % p);
            }
        }
        trim(a);
    }
    return a;
}

Poly poly_powmod(Poly base, unsigned __int128 e, const Poly& m, std::int64_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) result = poly_mod(poly_mul(result, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // reduce a mod b after making b monic
        const int lead = b.back();
        if (lead != 1) {
            // scale b monic: multiply by inverse of lead
            std::int64_t inv = 1, base = lead, ee = p - 2;
            while (ee > 0) {
                if (ee & 1) inv = inv * base % p;
                base = base * base % p;
                ee >>= 1;
            }
            for (int& c : b) c = static_cast<int>(c * inv % p);
        }
        a = poly_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

bool rabin_irreducible(const Poly& f, std::int64_t p, int r) {
    if (r == 1) return true;
    // x^(p^r) == x mod f, and gcd(x^(p^(r/l)) - x, f) == 1 for prime l | r.
    unsigned __int128 pr = 1;
    for (int i = 0; i < r; ++i) pr *= static_cast<unsigned __int128>(p);
    Poly x{0, 1};
    Poly xpr = poly_powmod(x, pr, f, p);
    Poly diff = xpr;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<int>(((diff[1] - 1) % p + p) % p);
    trim(diff);
    if (!diff.empty()) return false;
    for (std::int64_t l : prime_factors(r)) {
        unsigned __int128 pd = 1;
        for (int i = 0; i < r / l; ++i) pd *= static_cast<unsigned __int128>(p);
        Poly xpd = poly_powmod(x, pd, f, p);
        Poly d = xpd;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = static_cast<int>(((d[1] - 1) % p + p) % p);
        trim(d);
        Poly g = poly_gcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

bool root_is_primitive(const Poly& f, std::int64_t p, std::int64_t q) {
    // order of x in (F_p[x]/f)^*; requires f(0) != 0 so x is a unit.
    if (f[0] == 0) return false;
    const std::int64_t n = q - 1;
    Poly x{0, 1};
    for (std::int64_t l : prime_factors(n)) {
        Poly v = poly_powmod(x, static_cast<unsigned __int128>(n / l), f, p);
        if (v.size() == 1 && v[0] == 1) return false;
    }
    Poly v = poly_powmod(x, static_cast<unsigned __int128>(n), f, p);
    return v.size() == 1 && v[0] == 1;
}

}  // namespace

FieldCtx FieldCtx::make(std::int64_t p, int r) {
    if (!is_prime(p)) throw Error("field: p = " + std::to_string(p) + " is not prime");
    if (r < 1) throw Error("field: extension degree must be >= 1");
    std::int64_t q = 1;
    for (int i = 0; i < r; ++i) {
        if (q > kMaxOrder / p) throw Error("field: p^r exceeds the 2^20 cap");
        q *= p;
    }
    if (q > kMaxOrder) throw Error("field: p^r exceeds the 2^20 cap");

    // Scan moduli in coefficient-encoding order; remember the first
    // irreducible as fallback, prefer the first whose root is primitive.
    Poly chosen;
    Poly first_irreducible;
    for (std::int64_t k = 0; k < q; ++k) {
        Poly f(r + 1, 0);
        std::int64_t kk = k;
        for (int i = 0; i < r; ++i) {
            f[i] = static_cast<int>(kk % p);
            kk /= p;
        }
        f[r] = 1;
        if (!rabin_irreducible(f, p, r)) continue;
        if (first_irreducible.empty()) first_irreducible = f;
        if (r == 1) {
            // root of x + c is -c; primitive iff it generates F_p^*
            const std::int64_t root = ((p - f[0]) % p + p) % p;
            if (root == 0) continue;
            bool prim = true;
            for (std::int64_t l : prime_factors(p - 1)) {
                std::int64_t v = 1, base = root, e = (p - 1) / l;
                while (e > 0) {
                    if (e & 1) v = v * base % p;
                    base = base * base % p;
                    e >>= 1;
                }
                if (v == 1) { prim = false; break; }
            }
            if (p == 2) prim = true;  // group is trivial, root 1 generates
            if (!prim) continue;
        } else if (!root_is_primitive(f, p, q)) {
            continue;
        }
        chosen = f;
        break;
    }

    FieldCtx ctx;
    ctx.p_ = p;
    ctx.r_ = r;
    ctx.q_ = q;

    Poly gen{0, 1};  // the class of x
    if (!chosen.empty()) {
        ctx.modulus_ = chosen;
    } else {
        // Fallback: smallest irreducible plus a separate generator search.
        ctx.modulus_ = first_irreducible;
        const std::int64_t n = q - 1;
        auto order_ok = [&](const Poly& g) {
            for (std::int64_t l : prime_factors(n)) {
                Poly v = poly_powmod(g, static_cast<unsigned __int128>(n / l), ctx.modulus_, p);
                if (v.size() == 1 && v[0] == 1) return false;
            }
            return true;
        };
        gen.clear();
        for (std::int64_t idx = 1; idx < q; ++idx) {
            Poly g;
            std::int64_t kk = idx;
            for (int i = 0; i < r; ++i) {
                g.push_back(static_cast<int>(kk % p));
                kk /= p;
            }
            trim(g);
            if (order_ok(g)) { gen = g; break; }
        }
    }

    if (r == 1) gen = Poly{static_cast<int>(((p - ctx.modulus_[0]) % p + p) % p)};

    // Build the log/vec tables by iterating powers of the generator.
    ctx.vec_of_log_.assign(q - 1, 0);
    ctx.log_of_vec_.assign(q, FieldElem::kZero);
    Poly cur{1};
    for (std::int64_t e = 0; e < q - 1; ++e) {
        std::int64_t packed = 0;
        for (std::size_t i = cur.size(); i-- > 0;) packed = packed * p + cur[i];
        ctx.vec_of_log_[e] = static_cast<std::int32_t>(packed);
        if (ctx.log_of_vec_[packed] != FieldElem::kZero)
            throw Error("field: generator order is not q-1 (internal)");
        ctx.log_of_vec_[packed] = static_cast<std::int32_t>(e);
        cur = poly_mod(poly_mul(cur, gen, p), ctx.modulus_, p);
    }
    if (!(cur.size() == 1 && cur[0] == 1))
        throw Error("field: generator order is not q-1 (internal)");

    ctx.xi_ = (q == 2) ? ctx.one() : FieldElem{1};

    ctx.frob_mult_.assign(r, 1);
    for (int s = 1; s < r; ++s) ctx.frob_mult_[s] = ctx.frob_mult_[s - 1] * p % (q - 1);
    return ctx;
}

FieldElem FieldCtx::from_log(std::int64_t e) const {
    const std::int64_t n = q_ - 1;
    if (n == 1) return one();
    return FieldElem{static_cast<std::int32_t>(((e % n) + n) % n)};
}

FieldElem FieldCtx::from_vec_index(std::int64_t idx) const {
    if (idx < 0 || idx >= q_) throw Error("field: vec index out of range");
    if (idx == 0) return zero();
    return FieldElem{log_of_vec_[idx]};
}

std::int64_t FieldCtx::vec_index(FieldElem x) const {
    if (x.is_zero()) return 0;
    return vec_of_log_[x.log];
}

std::vector<int> FieldCtx::vec(FieldElem x) const {
    std::vector<int> out(r_, 0);
    std::int64_t idx = vec_index(x);
    for (int i = 0; i < r_; ++i) {
        out[i] = static_cast<int>(idx % p_);
        idx /= p_;
    }
    return out;
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::int64_t ia = vec_of_log_[a.log], ib = vec_of_log_[b.log];
    std::int64_t out = 0, mult = 1;
    for (int i = 0; i < r_; ++i) {
        out += (ia % p_ + ib % p_) % p_ * mult;
        ia /= p_;
        ib /= p_;
        mult *= p_;
    }
    return out == 0 ? zero() : FieldElem{log_of_vec_[out]};
}

FieldElem FieldCtx::neg(FieldElem a) const {
    if (a.is_zero() || p_ == 2) return a;
    // -1 = xi^((q-1)/2)
    return FieldElem{static_cast<std::int32_t>((a.log + (q_ - 1) / 2) % (q_ - 1))};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    return FieldElem{static_cast<std::int32_t>((a.log + b.log) % (q_ - 1))};
}

FieldElem FieldCtx::inv(FieldElem a) const {
    if (a.is_zero()) throw Error("field: inverse of zero");
    return FieldElem{static_cast<std::int32_t>((q_ - 1 - a.log) % (q_ - 1))};
}

FieldElem FieldCtx::div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

FieldElem FieldCtx::pow(FieldElem a, std::int64_t e) const {
    if (a.is_zero()) {
        if (e < 0) throw Error("field: inverse of zero");
        return e == 0 ? one() : zero();
    }
    const std::int64_t n = q_ - 1;
    std::int64_t ee = ((e % n) + n) % n;
    return FieldElem{static_cast<std::int32_t>(static_cast<std::int64_t>(a.log) * ee % n)};
}

int FieldCtx::aut_order(FrobAut t) const {
    if (t.s < 0 || t.s >= r_) throw Error("field: automorphism power out of range");
    return r_ / static_cast<int>(std::gcd(static_cast<std::int64_t>(r_), static_cast<std::int64_t>(t.s)));
}

FieldElem FieldCtx::apply_aut(FrobAut t, FieldElem x) const {
    if (t.s < 0 || t.s >= r_) throw Error("field: automorphism power out of range");
    if (x.is_zero()) return x;
    return FieldElem{static_cast<std::int32_t>(static_cast<std::int64_t>(x.log) * frob_mult_[t.s] % (q_ - 1))};
}

FieldElem FieldCtx::apply_aut_pow(FrobAut t, std::int64_t j, FieldElem x) const {
    if (t.s < 0 || t.s >= r_) throw Error("field: automorphism power out of range");
    if (x.is_zero()) return x;
    std::int64_t sj = (static_cast<std::int64_t>(t.s) * j) % r_;
    if (sj < 0) sj += r_;
    return FieldElem{static_cast<std::int32_t>(static_cast<std::int64_t>(x.log) * frob_mult_[sj] % (q_ - 1))};
}

bool FieldCtx::in_fixed_field(FrobAut t, FieldElem x) const {
    return apply_aut(t, x) == x;
}

FieldElem FieldCtx::iter_norm(FrobAut t, std::int64_t i, FieldElem beta) const {
    if (i < 0) throw Error("field: iterated norm needs i >= 0");
    if (i == 0) return one();
    if (beta.is_zero()) return zero();
    std::int64_t acc = 0;
    for (std::int64_t j = 0; j < i; ++j) {
        std::int64_t sj = (static_cast<std::int64_t>(t.s) * j) % r_;
        acc = (acc + frob_mult_[sj]) % (q_ - 1);
    }
    return FieldElem{static_cast<std::int32_t>(static_cast<std::int64_t>(beta.log) * acc % (q_ - 1))};
}

bool FieldCtx::norm_relation_check(FrobAut t, std::int64_t i, std::int64_t j, FieldElem beta) const {
    FieldElem lhs = iter_norm(t, i + j, beta);
    FieldElem rhs = mul(iter_norm(t, i, beta), apply_aut_pow(t, i, iter_norm(t, j, beta)));
    return lhs == rhs;
}

std::string FieldCtx::encode(FieldElem x) const {
    if (x.is_zero()) return "0";
    return std::to_string(x.log == 0 ? q_ - 1 : x.log);
}

FieldElem FieldCtx::decode(const std::string& text) const {
    std::size_t pos = 0;
    long long e = 0;
    try {
        e = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw Error("field: cannot parse element '" + text + "'");
    }
    if (pos != text.size() || e < 0) throw Error("field: cannot parse element '" + text + "'");
    if (e == 0) return zero();
    return from_log(e);
}

std::string FieldCtx::poly_string(FieldElem x) const {
    if (x.is_zero()) return "0";
    std::vector<int> v = vec(x);
    std::string out;
    for (int i = r_ - 1; i >= 0; --i) {
        if (v[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(v[i]);
        } else {
            if (v[i] != 1) out += std::to_string(v[i]) + "*";
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

unsigned __int128 bracket_m_s(std::int64_t p, int s, int m) {
    if (p < 2 || s < 0 || m < 0) throw Error("bracket: bad arguments");
    // sum_{j<m} p^(s j) with overflow checks
    unsigned __int128 ps = 1;
    const unsigned __int128 kMax = ~static_cast<unsigned __int128>(0);
    for (int i = 0; i < s; ++i) {
        if (ps > kMax / static_cast<unsigned __int128>(p)) throw Error("bracket: overflow beyond 128 bits");
        ps *= static_cast<unsigned __int128>(p);
    }
    unsigned __int128 sum = 0, term = 1;
    for (int j = 0; j < m; ++j) {
        if (sum > kMax - term) throw Error("bracket: overflow beyond 128 bits");
        sum += term;
        if (j + 1 < m) {
            if (term != 0 && term > kMax / ps) throw Error("bracket: overflow beyond 128 bits");
            term *= ps;
        }
    }
    return sum;
}

std::int64_t bracket_m_s_mod(std::int64_t p, int s, int m, std::int64_t mod) {
    if (mod <= 0) throw Error("bracket: modulus must be positive");
    std::int64_t ps = 1;
    for (int i = 0; i < s; ++i) ps = static_cast<std::int64_t>((static_cast<unsigned __int128>(ps) * p) % mod);
    std::int64_t sum = 0, term = 1 % mod;
    for (int j = 0; j < m; ++j) {
        sum = (sum + term) % mod;
        term = static_cast<std::int64_t>((static_cast<unsigned __int128>(term) * ps) % mod);
    }
    return sum;
}

std::string uint128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out += static_cast<char>('0' + static_cast<int>(v % 10));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace skewalg
