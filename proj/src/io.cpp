#include "skewalg/io.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "skewalg/errors.hpp"

namespace skewalg::io {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::int64_t parse_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const std::int64_t value = std::stoll(text, &used);
        if (used != text.size()) throw Error("");
        return value;
    } catch (const std::exception&) {
        throw Error(std::string("io: malformed ") + what + " '" + text + "'");
    }
}

const char* to_string(HomVerdict v) {
    switch (v) {
        case HomVerdict::hom: return "hom";
        case HomVerdict::iso: return "iso";
        default: return "not_hom";
    }
}

const char* to_string(EnumRestrict r) {
    return r == EnumRestrict::monomial ? "monomial" : "all";
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

json int_vector_json(const std::vector<int>& v) {
    json out = json::array();
    for (int x : v) out.push_back(x);
    return out;
}

json counts_json(const std::vector<std::pair<std::string, std::uint64_t>>& counts) {
    json out = json::object();
    for (const auto& [key, value] : counts) out[key] = value;
    return out;
}

std::string counts_text(const std::vector<std::pair<std::string, std::uint64_t>>& counts) {
    std::string out;
    for (const auto& [key, value] : counts) {
        if (!out.empty()) out.push_back('|');
        out += key + "=" + std::to_string(value);
    }
    return out;
}

std::string witness_text(const FieldCtx& F, const HomWitness& w) {
    switch (w.kind) {
        case HomWitness::Kind::twist:
            return "twist i=" + std::to_string(w.i) + " c=" + F.encode(w.c);
        case HomWitness::Kind::pair:
            return "pair i=" + std::to_string(w.i) + " j=" + std::to_string(w.j);
        default:
            return "relation " + w.relation;
    }
}

json per_case_json(const PerCaseCount& c) {
    json out = json::object();
    out["label"] = c.label;
    out["applicable"] = c.applicable;
    out["formula"] = c.formula;
    out["stated"] = c.stated;
    out["oracle"] = c.oracle ? json(*c.oracle) : json(nullptr);
    out["uniform"] = c.uniform;
    out["agree"] = c.agree ? json(*c.agree) : json(nullptr);
    return out;
}

}  // namespace

std::string field_spec(const FieldCtx& F) {
    return std::to_string(F.p()) + "^" + std::to_string(F.r());
}

std::pair<std::int64_t, int> parse_field_spec(const std::string& text) {
    const auto caret = text.find('^');
    if (caret == std::string::npos) return {parse_int(text, "field spec"), 1};
    const std::int64_t p = parse_int(text.substr(0, caret), "field spec");
    const std::int64_t r = parse_int(text.substr(caret + 1), "field spec");
    if (r < 1 || r > 64) throw Error("io: field extension degree out of range");
    return {p, static_cast<int>(r)};
}

std::string poly_text(const SkewPoly& g) {
    if (g.is_zero()) return "0";
    const FieldCtx& F = *g.ring().field;
    std::string out;
    for (int i = 0; i <= g.degree(); ++i) {
        if (i > 0) out.push_back(',');
        const FieldElem c = g.coeff(i);
        out += c.is_zero() ? "-" : F.encode(c);
    }
    return out;
}

SkewPoly parse_poly(SkewRing ring, const std::string& text) {
    const FieldCtx& F = *ring.field;
    std::vector<FieldElem> coeffs;
    for (const std::string& tok : split(text, ',')) {
        if (tok == "-") {
            coeffs.push_back(F.zero());
        } else {
            coeffs.push_back(F.decode(tok));
        }
    }
    return SkewPoly(ring, std::move(coeffs));
}

std::vector<GridTuple> parse_grid(const std::string& text) {
    std::vector<GridTuple> grid;
    if (text.empty()) return grid;
    for (const std::string& part : split(text, ';')) {
        const auto nums = split(part, ',');
        if (nums.size() != 4) throw Error("io: grid tuple '" + part + "' needs p,r,s,m");
        GridTuple t{};
        for (int i = 0; i < 4; ++i) t[i] = static_cast<int>(parse_int(nums[i], "grid entry"));
        grid.push_back(t);
    }
    return grid;
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char ch : cell) {
        if (ch == '"') out += "\"\"";
        else out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json field_info_json(const FieldCtx& F, bool show_table, std::optional<int> s) {
    json out = json::object();
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "field-info";
    out["field"] = field_spec(F);
    out["p"] = F.p();
    out["r"] = F.r();
    out["q"] = F.q();
    out["group_order"] = F.group_order();
    out["modulus"] = int_vector_json(F.modulus());
    out["xi_vector"] = int_vector_json(F.vec(F.xi()));
    out["xi_poly"] = F.poly_string(F.xi());
    if (s) {
        const FrobAut sigma{*s};
        out["s"] = *s;
        out["sigma_order"] = F.aut_order(sigma);
        std::int64_t fixed = 0;
        for (std::int64_t i = 0; i < F.q(); ++i) {
            if (F.in_fixed_field(sigma, F.from_vec_index(i))) ++fixed;
        }
        out["fixed_field_order"] = fixed;
    }
    if (show_table) {
        json table = json::array();
        json zero_row = json::object();
        zero_row["element"] = "0";
        zero_row["vector"] = int_vector_json(F.vec(F.zero()));
        zero_row["poly"] = F.poly_string(F.zero());
        table.push_back(zero_row);
        for (std::int64_t e = 1; e <= F.group_order(); ++e) {
            const FieldElem x = F.from_log(e);
            json row = json::object();
            row["element"] = F.encode(x);
            row["vector"] = int_vector_json(F.vec(x));
            row["poly"] = F.poly_string(x);
            table.push_back(row);
        }
        out["table"] = table;
    }
    return out;
}

std::string field_info_csv(const FieldCtx& F) {
    std::string out = "element,vector,poly\n";
    auto row = [&](FieldElem x) {
        std::string vec_text;
        for (int v : F.vec(x)) {
            if (!vec_text.empty()) vec_text.push_back('|');
            vec_text += std::to_string(v);
        }
        out += csv_escape(F.encode(x)) + "," + csv_escape(vec_text) + "," +
               csv_escape(F.poly_string(x)) + "\n";
    };
    row(F.zero());
    for (std::int64_t e = 1; e <= F.group_order(); ++e) row(F.from_log(e));
    return out;
}

json algebra_spec_json(const PetitAlgebra& alg) {
    const FieldCtx& F = alg.field();
    json out = json::object();
    out["field"] = field_spec(F);
    out["s"] = alg.ring().sigma.s;
    if (alg.constacyclic_a()) {
        out["m"] = alg.m();
        out["a"] = F.encode(*alg.constacyclic_a());
    } else {
        json coeffs = json::array();
        for (int i = 0; i <= alg.modulus().degree(); ++i) {
            const FieldElem c = alg.modulus().coeff(i);
            coeffs.push_back(c.is_zero() ? "0" : F.encode(c));
        }
        out["f"] = coeffs;
    }
    return out;
}

json algebra_json(const PetitAlgebra& alg) {
    json out = json::object();
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "algebra";
    out["algebra"] = algebra_spec_json(alg);
    out["m"] = alg.m();
    out["n"] = alg.sigma_order();
    out["modulus"] = poly_text(alg.modulus());
    out["associative"] = is_associative_algebra(alg);
    out["proper_nonassociative"] = is_proper_nonassociative(alg);
    if (alg.constacyclic_a()) {
        out["a_in_fixed_field"] =
            alg.field().in_fixed_field(alg.ring().sigma, *alg.constacyclic_a());
    }
    return out;
}

std::string algebra_csv(const PetitAlgebra& alg) {
    const json j = algebra_json(alg);
    std::string out = "field,s,m,n,modulus,associative,proper_nonassociative\n";
    out += csv_escape(j["algebra"]["field"].get<std::string>()) + ",";
    out += std::to_string(alg.ring().sigma.s) + ",";
    out += std::to_string(alg.m()) + ",";
    out += std::to_string(alg.sigma_order()) + ",";
    out += csv_escape(poly_text(alg.modulus())) + ",";
    out += std::string(bool_text(j["associative"].get<bool>())) + ",";
    out += bool_text(j["proper_nonassociative"].get<bool>());
    out.push_back('\n');
    return out;
}

json witness_json(const FieldCtx& F, const HomWitness& w) {
    json out = json::object();
    switch (w.kind) {
        case HomWitness::Kind::twist:
            out["kind"] = "twist";
            out["i"] = w.i;
            out["c"] = F.encode(w.c);
            break;
        case HomWitness::Kind::pair:
            out["kind"] = "pair";
            out["i"] = w.i;
            out["j"] = w.j;
            break;
        default:
            out["kind"] = "relation";
            out["relation"] = w.relation;
            break;
    }
    return out;
}

json certificate_json(const PolyHomSpec& spec, const HomCertificate& cert,
                      const std::optional<WeightPreservation>& wp) {
    const FieldCtx& F = spec.source->field();
    json out = json::object();
    json inner = json::object();
    inner["tau"] = spec.tau.s;
    inner["g_image"] = poly_text(spec.g_image);
    out["spec"] = inner;
    out["verdict"] = to_string(cert.verdict);
    out["degenerate"] = cert.degenerate;
    out["monomial"] = cert.monomial;
    out["image_degree"] = cert.image_degree;
    json flags = json::object();
    flags["k_mod_n"] = cert.flags.k_mod_n;
    flags["n_divides_m"] = cert.flags.n_divides_m;
    flags["a_in_S0"] = cert.flags.a_in_S0;
    flags["b_in_S0"] = cert.flags.b_in_S0;
    flags["norm_condition"] = cert.flags.norm_condition;
    out["structure_flags"] = flags;
    if (cert.witness) out["witness"] = witness_json(F, *cert.witness);
    if (wp) {
        out["weight_preserving"] = wp->preserving;
        out["weight_scan_exhaustive"] = wp->exhaustive;
    }
    return out;
}

json homs_json(const PetitAlgebra& source, const PetitAlgebra& target,
               EnumRestrict restrict_mode, std::uint64_t budget, const EnumerationResult& result,
               const std::vector<std::optional<WeightPreservation>>& weight) {
    json out = json::object();
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "homs";
    out["source"] = algebra_spec_json(source);
    out["target"] = algebra_spec_json(target);
    out["restrict"] = to_string(restrict_mode);
    out["budget"] = budget;
    json counts = json::object();
    counts["candidates"] = result.candidates;
    counts["degenerate"] = result.degenerate;
    counts["not_hom"] = result.not_hom;
    counts["hom"] = result.hom;
    counts["iso"] = result.iso;
    out["counts"] = counts;
    json homs = json::array();
    for (std::size_t i = 0; i < result.homs.size(); ++i) {
        const std::optional<WeightPreservation> wp =
            i < weight.size() ? weight[i] : std::optional<WeightPreservation>{};
        homs.push_back(certificate_json(result.homs[i].first, result.homs[i].second, wp));
    }
    out["homs"] = homs;
    return out;
}

std::string homs_csv(const EnumerationResult& result,
                     const std::vector<std::optional<WeightPreservation>>& weight) {
    std::string out =
        "tau,g_image,verdict,monomial,image_degree,k_mod_n,n_divides_m,a_in_S0,b_in_S0,"
        "norm_condition,weight_preserving,witness\n";
    for (std::size_t i = 0; i < result.homs.size(); ++i) {
        const auto& [spec, cert] = result.homs[i];
        out += std::to_string(spec.tau.s) + ",";
        out += csv_escape(poly_text(spec.g_image)) + ",";
        out += std::string(to_string(cert.verdict)) + ",";
        out += std::string(bool_text(cert.monomial)) + ",";
        out += std::to_string(cert.image_degree) + ",";
        out += std::string(bool_text(cert.flags.k_mod_n)) + ",";
        out += std::string(bool_text(cert.flags.n_divides_m)) + ",";
        out += std::string(bool_text(cert.flags.a_in_S0)) + ",";
        out += std::string(bool_text(cert.flags.b_in_S0)) + ",";
        out += std::string(bool_text(cert.flags.norm_condition)) + ",";
        if (i < weight.size() && weight[i]) out += bool_text(weight[i]->preserving);
        out.push_back(',');
        if (cert.witness) out += csv_escape(witness_text(spec.source->field(), *cert.witness));
        out.push_back('\n');
    }
    return out;
}

json class_report_json(const ClassReport& report) {
    json out = json::object();
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "classify";
    json params = json::object();
    params["field"] = std::to_string(report.p) + "^" + std::to_string(report.r);
    params["p"] = report.p;
    params["r"] = report.r;
    params["s"] = report.s;
    params["m"] = report.m;
    params["n"] = report.n;
    out["params"] = params;
    out["mode"] = to_string(report.mode);
    json classes = json::array();
    json info = json::array();
    for (const ClassInfo& cls : report.classes) {
        json exps = json::array();
        for (std::int64_t e : cls.exponents) exps.push_back(e);
        classes.push_back(exps);
        json one = json::object();
        one["representative"] = cls.exponents.front();
        one["size"] = cls.exponents.size();
        one["contains_subfield"] = cls.contains_subfield;
        one["associative_sector"] = cls.associative_sector;
        info.push_back(one);
    }
    out["classes"] = classes;
    out["class_info"] = info;
    out["w"] = report.w;
    out["t"] = report.t;
    out["formula_N"] = report.formula_N ? json(*report.formula_N) : json(nullptr);
    out["oracle_N"] = report.oracle_N;
    out["agree"] = report.agree ? json(*report.agree) : json(nullptr);
    json per_case = json::array();
    for (const PerCaseCount& c : report.per_case) per_case.push_back(per_case_json(c));
    out["per_case"] = per_case;
    json cosets = json::array();
    for (const auto& coset : report.subfield_cosets) {
        json exps = json::array();
        for (std::int64_t e : coset) exps.push_back(e);
        cosets.push_back(exps);
    }
    out["subfield_cosets"] = cosets;
    out["flag_note"] = report.flag_note ? json(*report.flag_note) : json(nullptr);
    return out;
}

std::string class_report_csv(const ClassReport& report) {
    std::string out =
        "mode,p,r,s,m,n,w,t,formula_N,oracle_N,agree,representative,size,exponents,"
        "contains_subfield,associative_sector\n";
    const std::string prefix = std::string(to_string(report.mode)) + "," +
                               std::to_string(report.p) + "," + std::to_string(report.r) + "," +
                               std::to_string(report.s) + "," + std::to_string(report.m) + "," +
                               std::to_string(report.n) + "," + std::to_string(report.w) + "," +
                               std::to_string(report.t) + "," +
                               (report.formula_N ? std::to_string(*report.formula_N) : "") + "," +
                               std::to_string(report.oracle_N) + "," +
                               (report.agree ? bool_text(*report.agree) : "");
    for (const ClassInfo& cls : report.classes) {
        std::string exps;
        for (std::int64_t e : cls.exponents) {
            if (!exps.empty()) exps.push_back('|');
            exps += std::to_string(e);
        }
        out += prefix + "," + std::to_string(cls.exponents.front()) + "," +
               std::to_string(cls.exponents.size()) + "," + csv_escape(exps) + "," +
               bool_text(cls.contains_subfield) + "," + bool_text(cls.associative_sector) + "\n";
    }
    return out;
}

json codes_json(const std::vector<CodeRow>& rows) {
    json out = json::object();
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "codes";
    json list = json::array();
    for (const CodeRow& row : rows) {
        json one = json::object();
        one["field"] = row.field;
        one["s"] = row.s;
        one["m"] = row.m;
        one["a"] = row.a;
        one["g"] = row.g;
        one["dim"] = row.dim;
        one["d_min"] = row.d_min;
        json dist = json::array();
        for (std::uint64_t c : row.weight_distribution) dist.push_back(c);
        one["weight_distribution"] = dist;
        list.push_back(one);
    }
    out["rows"] = list;
    return out;
}

std::string codes_csv(const std::vector<CodeRow>& rows) {
    std::string out = "field,s,m,a,g,dim,d_min,weight_distribution\n";
    for (const CodeRow& row : rows) {
        std::string dist;
        for (std::uint64_t c : row.weight_distribution) {
            if (!dist.empty()) dist.push_back('|');
            dist += std::to_string(c);
        }
        out += csv_escape(row.field) + "," + std::to_string(row.s) + "," + std::to_string(row.m) +
               "," + csv_escape(row.a) + "," + csv_escape(row.g) + "," + std::to_string(row.dim) +
               "," + std::to_string(row.d_min) + "," + csv_escape(dist) + "\n";
    }
    return out;
}

json scorecard_json(const Scorecard& card, const SuiteSpec& spec, bool timings) {
    json out = json::object();
    out["schema_version"] = kSchemaVersion;
    out["kind"] = "scorecard";
    out["budget"] = spec.budget;
    json suites = json::array();
    for (const std::string& name : spec.suites.empty() ? suite_names() : spec.suites) {
        suites.push_back(name);
    }
    out["suites"] = suites;
    json grid = json::array();
    for (const GridTuple& t : spec.grid) {
        grid.push_back(json::array({t[0], t[1], t[2], t[3]}));
    }
    out["grid"] = grid;
    json cells = json::array();
    for (const CellResult& cell : card.cells) {
        json one = json::object();
        one["suite"] = cell.suite;
        one["tuple"] = json::array({cell.tuple[0], cell.tuple[1], cell.tuple[2], cell.tuple[3]});
        one["status"] = to_string(cell.status);
        one["note"] = cell.note;
        one["witness"] = cell.witness;
        one["counts"] = counts_json(cell.counts);
        if (timings) one["runtime_ms"] = cell.runtime_ms;
        cells.push_back(one);
    }
    out["cells"] = cells;
    out["all_ok"] = card.all_ok();
    return out;
}

std::string scorecard_csv(const Scorecard& card, bool timings) {
    std::string out = "suite,p,r,s,m,status,note,witness,counts";
    if (timings) out += ",runtime_ms";
    out.push_back('\n');
    for (const CellResult& cell : card.cells) {
        out += csv_escape(cell.suite) + "," + std::to_string(cell.tuple[0]) + "," +
               std::to_string(cell.tuple[1]) + "," + std::to_string(cell.tuple[2]) + "," +
               std::to_string(cell.tuple[3]) + "," + to_string(cell.status) + "," +
               csv_escape(cell.note) + "," + csv_escape(cell.witness) + "," +
               csv_escape(counts_text(cell.counts));
        if (timings) {
            std::ostringstream ms;
            ms << cell.runtime_ms;
            out += "," + ms.str();
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace skewalg::io
