#pragma once

#include "wres/oracle_numeric.hpp"
#include "wres/pipeline.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace wres {

inline constexpr const char* kToolVersion = "1.0.0";

enum class CompareMode { strict, report };
enum class MatchStatus { exact, discrepancy, paper_value_absent };
const char* match_status_name(MatchStatus s);
MatchStatus parse_match_status(const std::string& s);

struct OracleVerdict {
    bool agree = false;
    double rel_error = 0;
};

struct CaseRecord {
    CaseSpec spec;
    ParameterPolynomial engine;
    std::optional<ParameterPolynomial> paper;
    MatchStatus status = MatchStatus::paper_value_absent;
    bool ambiguous = false;
    std::optional<ParameterPolynomial> alternative;  // zero reading of the ambiguous entry
    std::string ledger_digest;
    std::size_t ledger_size = 0;
    std::optional<OracleVerdict> oracle;
};

struct TotalRecord {
    ParameterPolynomial engine;
    ParameterPolynomial paper;
    MatchStatus status = MatchStatus::discrepancy;
};

struct TheoremRecord {
    TotalRecord total;
    ParameterPolynomial interior;
    ParameterPolynomial imaginary_part;
    ParameterPolynomial undeformed;
};

struct GravityRecord {
    TotalRecord k;
    TotalRecord i_gr_b;
    ParameterPolynomial q0_engine;
    ParameterPolynomial q0_paper;
    std::string corollary_engine;
    std::string corollary_paper;
};

struct ReportDocument {
    std::string tool_version = kToolVersion;
    std::string paper_table_version = kPaperTableVersion;
    std::string policy = "diagonal";
    std::vector<CaseRecord> cases;
    std::optional<TotalRecord> phi;  // present when all cases ran
    std::optional<TheoremRecord> theorem;
    std::optional<GravityRecord> gravity;
};

nlohmann::json to_json(const ParameterPolynomial& p);
ParameterPolynomial polynomial_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ReportDocument& d);
ReportDocument report_from_json(const nlohmann::json& j);
bool operator==(const ReportDocument& a, const ReportDocument& b);

// Deterministic: sorted keys, canonical rationals.
std::string render_structured(const ReportDocument& d);
std::string render_text(const ReportDocument& d);

// FNV-1a over the canonical ledger rendering.
std::string ledger_digest(const std::vector<LedgerEntry>& ledger);

struct VerifyOptions {
    std::vector<int> cases;  // empty: all fifteen
    bool oracle = false;     // oracle on every case; discrepancies are always checked
    CompareMode mode = CompareMode::report;
    AmbiguityPolicy policy = AmbiguityPolicy::diagonal;
    ParamAssignment oracle_point = default_oracle_point();

    static ParamAssignment default_oracle_point();
};

struct VerifyOutcome {
    ReportDocument document;
    int exit_code = 0;  // 0 ok, 1 reference discrepancy in strict mode, 2 internal error
    std::string error;
};

VerifyOutcome run_verify(const VerifyOptions& options);

}  // namespace wres
