#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "skewalg/classify.hpp"
#include "skewalg/codes.hpp"
#include "skewalg/verify.hpp"

namespace skewalg::io {

using json = nlohmann::json;

// Every top-level JSON document carries {schema_version, kind}.
inline constexpr int kSchemaVersion = 1;

// "p^r"
std::string field_spec(const FieldCtx& F);
// Parses "p^r" (r optional, default 1); throws Error on malformed input.
std::pair<std::int64_t, int> parse_field_spec(const std::string& text);

// Coefficients low-to-high joined by ','; zero coefficients inside a nonzero
// polynomial print as '-'; the zero polynomial is "0". Nonzero coefficients
// use the element encoding (decimal exponent of xi, identity = q-1).
// Example over F_25: t + t^3 is "-,24,-,24".
std::string poly_text(const SkewPoly& g);
// Accepts the same form; '-' and '0' both denote a zero coefficient.
SkewPoly parse_poly(SkewRing ring, const std::string& text);

// "p,r,s,m;p,r,s,m;..." -> tuples; throws Error on malformed input.
std::vector<GridTuple> parse_grid(const std::string& text);

// One CSV cell, quoted iff it contains a comma, quote or newline.
std::string csv_escape(const std::string& cell);

// Canonical dump: sorted keys, two-space indent, trailing newline.
// Scorecards serialized this way compare byte-identical across worker
// counts.
std::string dump(const json& j);

json field_info_json(const FieldCtx& F, bool show_table, std::optional<int> s);
std::string field_info_csv(const FieldCtx& F);

// {field, s, m, a} for constacyclic algebras, {field, s, f} otherwise.
json algebra_spec_json(const PetitAlgebra& alg);
json algebra_json(const PetitAlgebra& alg);
std::string algebra_csv(const PetitAlgebra& alg);

json witness_json(const FieldCtx& F, const HomWitness& w);
json certificate_json(const PolyHomSpec& spec, const HomCertificate& cert,
                      const std::optional<WeightPreservation>& wp);
json homs_json(const PetitAlgebra& source, const PetitAlgebra& target,
               EnumRestrict restrict_mode, std::uint64_t budget, const EnumerationResult& result,
               const std::vector<std::optional<WeightPreservation>>& weight);
std::string homs_csv(const EnumerationResult& result,
                     const std::vector<std::optional<WeightPreservation>>& weight);

json class_report_json(const ClassReport& report);
std::string class_report_csv(const ClassReport& report);

struct CodeRow {
    std::string field;
    int s = 0;
    int m = 0;
    std::string a;
    std::string g;
    int dim = 0;
    int d_min = 0;
    std::vector<std::uint64_t> weight_distribution;
};

json codes_json(const std::vector<CodeRow>& rows);
std::string codes_csv(const std::vector<CodeRow>& rows);

// runtime_ms is emitted only when timings is set, so default scorecards are
// byte-stable across machines and worker counts.
json scorecard_json(const Scorecard& card, const SuiteSpec& spec, bool timings);
std::string scorecard_csv(const Scorecard& card, bool timings);

}  // namespace skewalg::io
