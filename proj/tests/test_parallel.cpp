#include "doctest.h"

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "skewalg/io.hpp"
#include "skewalg/parallel.hpp"

TEST_SUITE_BEGIN("parallel");

using namespace skewalg;

namespace {

// Canonical trace of an enumeration: order, shape and verdict of every
// certified hom plus the aggregate counters.
std::string enum_trace(const EnumerationResult& r) {
    std::string out = std::to_string(r.candidates) + "/" + std::to_string(r.degenerate) + "/" +
                      std::to_string(r.not_hom) + "/" + std::to_string(r.hom) + "/" +
                      std::to_string(r.iso);
    for (const auto& [spec, cert] : r.homs) {
        out += ";" + std::to_string(spec.tau.s) + ":" + io::poly_text(spec.g_image) + ":" +
               std::to_string(static_cast<int>(cert.verdict));
    }
    return out;
}

struct JobsGuard {
    ~JobsGuard() { par::set_jobs(0); }
};

}  // namespace

TEST_CASE("worker count round trips") {
    JobsGuard guard;
    par::set_jobs(3);
    CHECK(par::jobs() == 3);
    par::set_jobs(0);
    CHECK(par::jobs() == 0);
}

TEST_CASE("for_index covers every slot exactly once") {
    JobsGuard guard;
    for (int jobs : {1, 2, 4}) {
        par::set_jobs(jobs);
        std::vector<std::atomic<int>> hits(1000);
        par::for_index(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
        for (const auto& h : hits) CHECK(h.load() == 1);
    }
}

TEST_CASE("enumeration matches the serial reference under any worker count") {
    JobsGuard guard;
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    const PetitAlgebra A = PetitAlgebra::constacyclic(ring, 3, F.xi());

    const std::string serial =
        enum_trace(enumerate_homs_serial(A, A, EnumRestrict::all, 1000000));
    for (int jobs : {1, 2, 4}) {
        par::set_jobs(jobs);
        CHECK(enum_trace(enumerate_homs(A, A, EnumRestrict::all, 1000000)) == serial);
    }
    const std::string serial_mono =
        enum_trace(enumerate_homs_serial(A, A, EnumRestrict::monomial));
    par::set_jobs(4);
    CHECK(enum_trace(enumerate_homs(A, A, EnumRestrict::monomial)) == serial_mono);
}

TEST_CASE("weight scan agrees with the serial reference on a violating map") {
    JobsGuard guard;
    const FieldCtx F = FieldCtx::make(5, 2);
    const SkewRing ring{&F, FrobAut{1}};
    const FieldElem a = F.from_log(12);  // the element 4
    const PetitAlgebra A = PetitAlgebra::constacyclic(ring, 4, a);
    const SkewPoly g = SkewPoly::monomial(ring, F.one(), 1) +
                       SkewPoly::monomial(ring, F.one(), 3);
    const PolyHomSpec spec{&A, &A, FrobAut{0}, g};
    REQUIRE(brute_force_is_hom(spec).is_hom());

    const WeightPreservation serial = is_weight_preserving_serial(spec);
    REQUIRE(serial.exhaustive);
    REQUIRE_FALSE(serial.preserving);
    REQUIRE(serial.violating_index.has_value());
    for (int jobs : {1, 2, 4}) {
        par::set_jobs(jobs);
        const WeightPreservation parallel = is_weight_preserving(spec);
        CHECK(parallel.exhaustive == serial.exhaustive);
        CHECK(parallel.preserving == serial.preserving);
        CHECK(parallel.violating_index == serial.violating_index);
    }
}

TEST_CASE("divisor scan and weight distribution match their serial references") {
    JobsGuard guard;
    const FieldCtx F = FieldCtx::make(3, 2);
    const SkewRing ring{&F, FrobAut{1}};
    for (int m : {3, 4}) {
        const PetitAlgebra alg = PetitAlgebra::constacyclic(ring, m, F.one());
        for (int d = 1; d < m; ++d) {
            const std::vector<SkewPoly> serial = right_divisors_serial(alg, d);
            for (int jobs : {1, 4}) {
                par::set_jobs(jobs);
                const std::vector<SkewPoly> parallel = right_divisors(alg, d);
                REQUIRE(parallel.size() == serial.size());
                for (std::size_t i = 0; i < serial.size(); ++i)
                    CHECK(parallel[i] == serial[i]);
            }
            for (const SkewPoly& g : serial) {
                const SkewCode code = code_from_generator(alg, g);
                const WeightDistribution want = weight_distribution_serial(code);
                par::set_jobs(4);
                CHECK(weight_distribution(code).counts == want.counts);
            }
        }
    }
}

TEST_CASE("scorecards are byte-identical across worker counts") {
    JobsGuard guard;
    SuiteSpec spec;
    spec.suites = {"division", "norms"};
    spec.grid = {{3, 2, 1, 3}, {2, 4, 2, 4}};

    par::set_jobs(1);
    const std::string one = io::dump(io::scorecard_json(run_suite(spec), spec, false));
    par::set_jobs(4);
    const std::string four = io::dump(io::scorecard_json(run_suite(spec), spec, false));
    CHECK(one == four);
    CHECK(one.find("\"all_ok\": true") != std::string::npos);
}

TEST_SUITE_END();
