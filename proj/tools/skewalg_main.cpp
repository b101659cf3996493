#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "skewalg/io.hpp"
#include "skewalg/parallel.hpp"

namespace {

using namespace skewalg;

int run_field_info(const std::string& field, std::optional<int> s, bool show_table,
                   const std::string& format) {
    const auto [p, r] = io::parse_field_spec(field);
    const FieldCtx F = FieldCtx::make(p, r);
    if (format == "csv") {
        std::cout << io::field_info_csv(F);
    } else {
        std::cout << io::dump(io::field_info_json(F, show_table, s));
    }
    return 0;
}

int run_algebra(const std::string& field, int s, int m, const std::string& a,
                const std::string& f, const std::string& format) {
    const auto [p, r] = io::parse_field_spec(field);
    const FieldCtx F = FieldCtx::make(p, r);
    const SkewRing ring{&F, FrobAut{s}};
    const PetitAlgebra alg = [&] {
        if (!f.empty()) return PetitAlgebra::make(ring, io::parse_poly(ring, f));
        if (a.empty()) throw Error("algebra: need --a (with --m) or --f");
        return PetitAlgebra::constacyclic(ring, m, F.decode(a));
    }();
    if (format == "csv") {
        std::cout << io::algebra_csv(alg);
    } else {
        std::cout << io::dump(io::algebra_json(alg));
    }
    return 0;
}

struct HomsArgs {
    std::string field;
    int s = 1;
    int m = 0;
    std::string a, b;
    bool all = false;
    std::uint64_t budget = 1000000;
    int tau = 0;
    std::string alpha;
    int k = 1;
    std::string g;
    bool weight = false;
    std::string format = "json";
};

int run_homs(const HomsArgs& args) {
    const auto [p, r] = io::parse_field_spec(args.field);
    const FieldCtx F = FieldCtx::make(p, r);
    const SkewRing ring{&F, FrobAut{args.s}};
    const PetitAlgebra Sa = PetitAlgebra::constacyclic(ring, args.m, F.decode(args.a));
    const PetitAlgebra Sb = PetitAlgebra::constacyclic(ring, args.m, F.decode(args.b));
    const EnumRestrict restrict_mode = args.all ? EnumRestrict::all : EnumRestrict::monomial;

    EnumerationResult result;
    if (!args.g.empty() || !args.alpha.empty()) {
        // Single-candidate check; the certificate is reported whatever the
        // verdict, so refutation witnesses reach the output.
        PolyHomSpec spec;
        HomCertificate cert;
        if (!args.g.empty()) {
            spec = PolyHomSpec{&Sa, &Sb, FrobAut{args.tau},
                               Sb.element(io::parse_poly(ring, args.g)).poly};
            cert = brute_force_is_hom(spec);
        } else {
            const MonomialHomSpec mono{&Sa, &Sb, FrobAut{args.tau}, F.decode(args.alpha), args.k};
            cert = check_monomial_hom(mono);
            spec = to_poly_spec(mono);
        }
        result.candidates = 1;
        if (cert.degenerate) ++result.degenerate;
        else if (cert.verdict == HomVerdict::not_hom) ++result.not_hom;
        else if (cert.verdict == HomVerdict::iso) ++result.iso;
        else ++result.hom;
        result.homs.emplace_back(spec, cert);
    } else {
        result = enumerate_homs(Sa, Sb, restrict_mode, args.budget);
    }

    std::vector<std::optional<WeightPreservation>> weight(result.homs.size());
    if (args.weight) {
        for (std::size_t i = 0; i < result.homs.size(); ++i) {
            if (result.homs[i].second.is_hom()) {
                weight[i] = is_weight_preserving(result.homs[i].first, args.budget);
            }
        }
    }
    if (args.format == "csv") {
        std::cout << io::homs_csv(result, weight);
    } else {
        std::cout << io::dump(
            io::homs_json(Sa, Sb, restrict_mode, args.budget, result, weight));
    }
    return 0;
}

int run_classify(const std::string& field, int s, int m, const std::string& mode_name,
                 const std::string& format) {
    const auto mode = class_mode_from_string(mode_name);
    if (!mode) throw Error("classify: unknown mode '" + mode_name + "'");
    const auto [p, r] = io::parse_field_spec(field);
    ClassReport report;
    if (*mode == ClassMode::m_sigma_isometry && s >= 1 && r % s == 0) {
        report = count_vs_oracle(p, r, s, m);
    } else {
        const FieldCtx F = FieldCtx::make(p, r);
        report = partition(F, FrobAut{s}, m, *mode);
    }
    if (format == "csv") {
        std::cout << io::class_report_csv(report);
    } else {
        std::cout << io::dump(io::class_report_json(report));
    }
    return 0;
}

int run_codes(const std::string& field, int s, int m, const std::string& a, int d,
              std::uint64_t budget, const std::string& format) {
    const auto [p, r] = io::parse_field_spec(field);
    const FieldCtx F = FieldCtx::make(p, r);
    const SkewRing ring{&F, FrobAut{s}};
    const PetitAlgebra alg = PetitAlgebra::constacyclic(ring, m, F.decode(a));
    std::vector<int> degrees;
    if (d > 0) {
        degrees.push_back(d);
    } else {
        for (int deg = 1; deg < m; ++deg) degrees.push_back(deg);
    }
    std::vector<io::CodeRow> rows;
    for (int deg : degrees) {
        for (const SkewPoly& g : right_divisors(alg, deg, budget)) {
            const SkewCode code = code_from_generator(alg, g);
            const WeightDistribution dist = weight_distribution(code, budget);
            io::CodeRow row;
            row.field = io::field_spec(F);
            row.s = s;
            row.m = m;
            row.a = F.encode(*alg.constacyclic_a());
            row.g = io::poly_text(g);
            row.dim = code.dim;
            row.d_min = dist.min_distance();
            row.weight_distribution = dist.counts;
            rows.push_back(std::move(row));
        }
    }
    if (format == "csv") {
        std::cout << io::codes_csv(rows);
    } else {
        std::cout << io::dump(io::codes_json(rows));
    }
    return 0;
}

int run_verify(const std::vector<std::string>& suites, const std::optional<std::string>& grid,
               std::uint64_t budget, bool timings, const std::string& format) {
    SuiteSpec spec;
    spec.suites = suites;
    spec.grid = grid ? io::parse_grid(*grid) : default_grid();
    spec.budget = budget;
    const Scorecard card = run_suite(spec);
    if (format == "csv") {
        std::cout << io::scorecard_csv(card, timings);
    } else {
        std::cout << io::dump(io::scorecard_json(card, spec, timings));
    }
    return card.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic in twisted polynomial rings, their quotient algebras, and "
                 "the classification of the constacyclic codes they carry"};
    app.require_subcommand(1);
    int jobs = 0;
    app.add_option("--jobs", jobs, "worker threads for parallel kernels (0 = default)");

    std::string fi_field, fi_format = "json";
    int fi_s = -1;
    bool fi_table = false;
    auto* fi = app.add_subcommand("field-info", "inspect a field and its exponent dictionary");
    fi->add_option("--field", fi_field, "field spec p^r")->required();
    fi->add_option("--s", fi_s, "twist exponent; adds fixed-subfield data");
    fi->add_flag("--show-table", fi_table, "include the exponent <-> vector table");
    fi->add_option("--format", fi_format)->check(CLI::IsMember({"json", "csv"}));

    std::string al_field, al_a, al_f, al_format = "json";
    int al_s = 1, al_m = 0;
    auto* al = app.add_subcommand("algebra", "construct a quotient algebra and report structure");
    al->add_option("--field", al_field)->required();
    al->add_option("--s", al_s, "twist exponent");
    al->add_option("--m", al_m, "degree for t^m - a");
    al->add_option("--a", al_a, "constant (element encoding)");
    al->add_option("--f", al_f, "general monic modulus (polynomial text)");
    al->add_option("--format", al_format)->check(CLI::IsMember({"json", "csv"}));

    HomsArgs ha;
    auto* ho = app.add_subcommand("homs", "enumerate or check homomorphisms between algebras");
    ho->add_option("--field", ha.field)->required();
    ho->add_option("--s", ha.s, "twist exponent");
    ho->add_option("--m", ha.m, "degree for t^m - a")->required();
    ho->add_option("--a", ha.a, "source constant")->required();
    ho->add_option("--b", ha.b, "target constant")->required();
    ho->add_flag("--all", ha.all, "search every image of t, not only monomials");
    ho->add_option("--budget", ha.budget, "max image candidates");
    ho->add_option("--tau", ha.tau, "scalar automorphism exponent for a single candidate");
    ho->add_option("--alpha", ha.alpha, "single monomial candidate: coefficient");
    ho->add_option("--k", ha.k, "single monomial candidate: degree");
    ho->add_option("--g", ha.g, "single candidate: image of t (polynomial text)");
    ho->add_flag("--weight", ha.weight, "also decide weight preservation per hom");
    ho->add_option("--format", ha.format)->check(CLI::IsMember({"json", "csv"}));

    std::string cl_field, cl_mode = "m-sigma-isometry", cl_format = "json";
    int cl_s = 1, cl_m = 0;
    auto* cl = app.add_subcommand("classify", "partition constants into isomorphism classes");
    cl->add_option("--field", cl_field)->required();
    cl->add_option("--s", cl_s, "twist exponent");
    cl->add_option("--m", cl_m, "degree for t^m - a")->required();
    cl->add_option("--mode", cl_mode,
                   "m-sigma-equivalence | m-sigma-isometry | equivalence | isometry");
    cl->add_option("--format", cl_format)->check(CLI::IsMember({"json", "csv"}));

    std::string co_field, co_a, co_format = "json";
    int co_s = 1, co_m = 0, co_d = 0;
    std::uint64_t co_budget = 1000000;
    auto* co = app.add_subcommand("codes", "tabulate constacyclic codes with exact weights");
    co->add_option("--field", co_field)->required();
    co->add_option("--s", co_s, "twist exponent");
    co->add_option("--m", co_m, "code length")->required();
    co->add_option("--a", co_a, "constant (element encoding)")->required();
    co->add_option("--d", co_d, "generator degree (default: every degree 1..m-1)");
    co->add_option("--budget", co_budget, "max scan candidates");
    co->add_option("--format", co_format)->check(CLI::IsMember({"json", "csv"}));

    std::vector<std::string> ve_suites;
    std::string ve_grid, ve_format = "json";
    std::uint64_t ve_budget = 1000000;
    bool ve_timings = false;
    auto* ve = app.add_subcommand("verify", "run the oracle-vs-criterion audit scorecard");
    ve->add_option("--suite", ve_suites, "suite names (repeat or comma-separate; default all)")
        ->delimiter(',');
    auto* ve_grid_opt = ve->add_option("--grid", ve_grid, "tuples \"p,r,s,m;p,r,s,m;...\"");
    ve->add_option("--budget", ve_budget, "max candidates per cell");
    ve->add_flag("--timings", ve_timings, "include per-cell runtimes in the output");
    ve->add_option("--format", ve_format)->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    skewalg::par::set_jobs(jobs);
    try {
        if (*fi) {
            return run_field_info(fi_field, fi_s >= 0 ? std::optional<int>(fi_s) : std::nullopt,
                                  fi_table, fi_format);
        }
        if (*al) return run_algebra(al_field, al_s, al_m, al_a, al_f, al_format);
        if (*ho) return run_homs(ha);
        if (*cl) return run_classify(cl_field, cl_s, cl_m, cl_mode, cl_format);
        if (*co) return run_codes(co_field, co_s, co_m, co_a, co_d, co_budget, co_format);
        if (*ve) {
            return run_verify(ve_suites,
                              ve_grid_opt->count() ? std::optional<std::string>(ve_grid)
                                                   : std::nullopt,
                              ve_budget, ve_timings, ve_format);
        }
    } catch (const skewalg::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const skewalg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
