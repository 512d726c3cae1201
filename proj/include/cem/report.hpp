#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cem {

/// One verification suite per identity the library checks. The order here is
/// the canonical report order.
enum class SuiteId {
    main,
    carlitz,
    util,
    case_i0,
    case_i1,
    case_i2,
    case_I,
    missing_odd,
    df_even,
    df_odd,
    gessel_simion,
    wachs,
    adin_gr,
    q1_triple,
    m4_eulerian,
    m4_mahonian,
    qlucas,
    lemma_agr,
};

inline const std::vector<std::pair<SuiteId, const char*>>& suite_table() {
    static const std::vector<std::pair<SuiteId, const char*>> table = {
        {SuiteId::main, "main"},
        {SuiteId::carlitz, "carlitz"},
        {SuiteId::util, "util"},
        {SuiteId::case_i0, "case_i0"},
        {SuiteId::case_i1, "case_i1"},
        {SuiteId::case_i2, "case_i2"},
        {SuiteId::case_I, "case_I"},
        {SuiteId::missing_odd, "missing_odd"},
        {SuiteId::df_even, "df_even"},
        {SuiteId::df_odd, "df_odd"},
        {SuiteId::gessel_simion, "gessel_simion"},
        {SuiteId::wachs, "wachs"},
        {SuiteId::adin_gr, "adin_gr"},
        {SuiteId::q1_triple, "q1_triple"},
        {SuiteId::m4_eulerian, "m4_eulerian"},
        {SuiteId::m4_mahonian, "m4_mahonian"},
        {SuiteId::qlucas, "qlucas"},
        {SuiteId::lemma_agr, "lemma_agr"},
    };
    return table;
}

inline std::string suite_name(SuiteId id) {
    for (const auto& [sid, name] : suite_table())
        if (sid == id) return name;
    return "?";
}

inline std::optional<SuiteId> suite_from_name(const std::string& name) {
    for (const auto& [sid, sname] : suite_table())
        if (name == sname) return sid;
    return std::nullopt;
}

inline std::vector<SuiteId> all_suites() {
    std::vector<SuiteId> out;
    for (const auto& [sid, name] : suite_table()) out.push_back(sid);
    return out;
}

/// Location and both values of the first differing coefficient, in the
/// canonical (t-degree, q-degree) order. Coefficients are rendered text so a
/// single shape covers integers, ring elements, and polynomials in p.
struct Mismatch {
    long long t_deg = 0;
    long long q_deg = 0;
    std::string lhs_coeff;
    std::string rhs_coeff;
};

/// Ordered named integer parameters; insertion order is the render order.
using Params = std::vector<std::pair<std::string, long long>>;

struct VerificationReport {
    SuiteId suite = SuiteId::main;
    Params params;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    std::optional<Mismatch> first_mismatch;
};

inline bool has_param(const VerificationReport& r, const std::string& key) {
    for (const auto& [k, v] : r.params)
        if (k == key) return true;
    return false;
}

/// An informational report records an expected discrepancy (it is marked in
/// params); it is excluded from the aggregate pass used for exit codes.
inline bool is_informational(const VerificationReport& r) {
    return has_param(r, "informational");
}

inline bool aggregate_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass && !is_informational(r)) return false;
    return true;
}

/// One JSON object per report; field set mirrors VerificationReport exactly.
inline std::string report_json_line(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = suite_name(r.suite);
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) p[k] = v;
    j["params"] = std::move(p);
    j["status"] = r.pass ? "pass" : "fail";
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    if (r.first_mismatch) {
        nlohmann::ordered_json fm;
        fm["t_deg"] = r.first_mismatch->t_deg;
        fm["q_deg"] = r.first_mismatch->q_deg;
        fm["lhs_coeff"] = r.first_mismatch->lhs_coeff;
        fm["rhs_coeff"] = r.first_mismatch->rhs_coeff;
        j["first_mismatch"] = std::move(fm);
    }
    return j.dump();
}

/// Human-oriented single line: status, suite, parameters, and the mismatch
/// location when failing.
inline std::string report_table_line(const VerificationReport& r) {
    std::string out = r.pass ? "pass" : (is_informational(r) ? "FAIL (expected)" : "FAIL");
    out += "  ";
    out += suite_name(r.suite);
    for (const auto& [k, v] : r.params) {
        out += " ";
        out += k;
        out += "=";
        out += std::to_string(v);
    }
    if (r.first_mismatch) {
        out += "  first mismatch at t^" + std::to_string(r.first_mismatch->t_deg) + " q^" +
               std::to_string(r.first_mismatch->q_deg) + ": lhs=" + r.first_mismatch->lhs_coeff +
               " rhs=" + r.first_mismatch->rhs_coeff;
    }
    return out;
}

}  // namespace cem
