#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "skewalg/codes.hpp"
#include "skewalg/homs.hpp"
#include "skewalg/io.hpp"
#include "skewalg/parallel.hpp"

namespace {

using namespace skewalg;
using Clock = std::chrono::steady_clock;

template <typename F>
double best_ms(int reps, F&& body) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = Clock::now();
        body();
        const auto t1 = Clock::now();
        best = std::min(
            best,
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0)
                .count());
    }
    return best;
}

void report(const std::string& kernel, double serial_ms, double parallel_ms, bool equal) {
    std::cout << std::left << std::setw(28) << kernel << std::right << std::fixed
              << std::setprecision(2) << std::setw(12) << serial_ms << std::setw(12)
              << parallel_ms << std::setw(10) << std::setprecision(2)
              << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << std::setw(8)
              << (equal ? "yes" : "NO") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compare the parallel kernels against their serial references"};
    int jobs = 0;
    int reps = 3;
    app.add_option("--jobs", jobs, "worker threads (0 = default)");
    app.add_option("--reps", reps, "repetitions per kernel; best time wins");
    CLI11_PARSE(app, argc, argv);
    par::set_jobs(jobs);

    std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(12)
              << "serial ms" << std::setw(12) << "parallel" << std::setw(10) << "speedup"
              << std::setw(8) << "equal" << "\n";

    {
        const FieldCtx F = FieldCtx::make(5, 2);
        const SkewRing ring{&F, FrobAut{1}};
        const PetitAlgebra Sa = PetitAlgebra::constacyclic(ring, 3, F.xi());
        const PetitAlgebra Sb = PetitAlgebra::constacyclic(ring, 3, F.xi());
        EnumerationResult rs, rp;
        const double serial =
            best_ms(reps, [&] { rs = enumerate_homs_serial(Sa, Sb, EnumRestrict::all); });
        const double parallel =
            best_ms(reps, [&] { rp = enumerate_homs(Sa, Sb, EnumRestrict::all); });
        const bool equal = rs.candidates == rp.candidates && rs.hom == rp.hom &&
                           rs.iso == rp.iso && rs.homs.size() == rp.homs.size();
        report("enumerate_homs F_25 m=3", serial, parallel, equal);
    }
    {
        const FieldCtx F = FieldCtx::make(3, 2);
        const SkewRing ring{&F, FrobAut{1}};
        const PetitAlgebra Sa = PetitAlgebra::constacyclic(ring, 4, F.one());
        const PetitAlgebra Sb = PetitAlgebra::constacyclic(ring, 4, F.one());
        const MonomialHomSpec mono{&Sa, &Sb, FrobAut{0}, F.xi(), 1};
        const PolyHomSpec spec = to_poly_spec(mono);
        WeightPreservation ws, wp;
        const double serial = best_ms(reps, [&] { ws = is_weight_preserving_serial(spec); });
        const double parallel = best_ms(reps, [&] { wp = is_weight_preserving(spec); });
        report("weight scan F_9 m=4", serial, parallel,
               ws.preserving == wp.preserving && ws.exhaustive == wp.exhaustive);
    }
    {
        const FieldCtx F = FieldCtx::make(5, 2);
        const SkewRing ring{&F, FrobAut{1}};
        const PetitAlgebra alg = PetitAlgebra::constacyclic(ring, 3, F.one());
        std::vector<SkewPoly> ds, dp;
        const double serial = best_ms(reps, [&] { ds = right_divisors_serial(alg, 2); });
        const double parallel = best_ms(reps, [&] { dp = right_divisors(alg, 2); });
        bool equal = ds.size() == dp.size();
        for (std::size_t i = 0; equal && i < ds.size(); ++i) equal = ds[i] == dp[i];
        report("divisor scan F_25 m=3 d=2", serial, parallel, equal);
    }
    {
        const FieldCtx F = FieldCtx::make(3, 2);
        const SkewRing ring{&F, FrobAut{1}};
        const PetitAlgebra alg = PetitAlgebra::constacyclic(ring, 4, F.one());
        const SkewPoly g = io::parse_poly(ring, "4,8");  // t - 1, a right divisor of t^4 - 1
        const SkewCode code = code_from_generator(alg, g);
        WeightDistribution ws, wp;
        const double serial = best_ms(reps, [&] { ws = weight_distribution_serial(code); });
        const double parallel = best_ms(reps, [&] { wp = weight_distribution(code); });
        report("weight distribution F_9", serial, parallel, ws.counts == wp.counts);
    }
    return 0;
}
