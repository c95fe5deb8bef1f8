#include "wres/cli_report.hpp"

#include <cstdint>
#include <iomanip>
#include <set>
#include <sstream>

namespace wres {

using nlohmann::json;

const char* match_status_name(MatchStatus s) {
    switch (s) {
        case MatchStatus::exact: return "exact";
        case MatchStatus::discrepancy: return "discrepancy";
        case MatchStatus::paper_value_absent: return "paper-value-absent";
    }
    return "?";
}

MatchStatus parse_match_status(const std::string& s) {
    if (s == "exact") return MatchStatus::exact;
    if (s == "discrepancy") return MatchStatus::discrepancy;
    if (s == "paper-value-absent") return MatchStatus::paper_value_absent;
    throw std::invalid_argument("unknown status " + s);
}

json to_json(const ParameterPolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json ex = json::object();
        for (int k = 0; k < kParamCount; ++k)
            if (e[k]) ex[param_name(static_cast<Param>(k))] = e[k];
        terms.push_back({{"monomial", ex}, {"re", to_string(c.re())}, {"im", to_string(c.im())}});
    }
    return {{"terms", terms}, {"text", p.str()}};
}

ParameterPolynomial polynomial_from_json(const json& j) {
    ParameterPolynomial p;
    for (const json& t : j.at("terms")) {
        ParamExponents e{};
        for (const auto& [name, v] : t.at("monomial").items()) {
            bool found = false;
            for (int k = 0; k < kParamCount; ++k)
                if (name == param_name(static_cast<Param>(k))) {
                    e[k] = v.get<unsigned>();
                    found = true;
                }
            if (!found) throw std::invalid_argument("unknown parameter " + name);
        }
        p.add_term(e, GaussianRational(parse_rational(t.at("re").get<std::string>()),
                                       parse_rational(t.at("im").get<std::string>())));
    }
    return p;
}

namespace {

json total_json(const TotalRecord& t) {
    return {{"engine_value", to_json(t.engine)}, {"paper_value", to_json(t.paper)},
            {"status", match_status_name(t.status)}};
}

TotalRecord total_from(const json& j) {
    return {polynomial_from_json(j.at("engine_value")), polynomial_from_json(j.at("paper_value")),
            parse_match_status(j.at("status").get<std::string>())};
}

MatchStatus compare(const ParameterPolynomial& engine, const ParameterPolynomial& paper) {
    return engine == paper ? MatchStatus::exact : MatchStatus::discrepancy;
}

bool same(const TotalRecord& a, const TotalRecord& b) {
    return a.engine == b.engine && a.paper == b.paper && a.status == b.status;
}

std::string with_measure(const ParameterPolynomial& p, const char* measure) {
    if (p.terms().size() > 1) return "(" + p.str() + ") · " + measure;
    return p.str() + " · " + measure;
}

}  // namespace

json to_json(const ReportDocument& d) {
    json cases = json::array();
    for (const CaseRecord& c : d.cases) {
        json o = {{"case_id", c.spec.case_id},
                  {"r", c.spec.r},
                  {"l", c.spec.l},
                  {"k", c.spec.k},
                  {"j", c.spec.j},
                  {"alpha", c.spec.alpha},
                  {"prefactor", c.spec.prefactor().str()},
                  {"engine_value", to_json(c.engine)},
                  {"paper_value", c.paper ? to_json(*c.paper) : json(nullptr)},
                  {"status", match_status_name(c.status)},
                  {"ambiguous_entry", c.ambiguous},
                  {"alternative_value", c.alternative ? to_json(*c.alternative) : json(nullptr)},
                  {"ledger_digest", c.ledger_digest},
                  {"ledger_size", c.ledger_size},
                  {"oracle", c.oracle ? json{{"agree", c.oracle->agree}, {"rel_error", c.oracle->rel_error}}
                                      : json(nullptr)}};
        cases.push_back(std::move(o));
    }
    json doc = {{"tool_version", d.tool_version},
                {"paper_table_version", d.paper_table_version},
                {"ambiguity_policy", d.policy},
                {"cases", cases},
                {"phi", d.phi ? total_json(*d.phi) : json(nullptr)}};
    if (d.theorem) {
        doc["theorem"] = {{"total", total_json(d.theorem->total)},
                          {"interior", to_json(d.theorem->interior)},
                          {"imaginary_part", to_json(d.theorem->imaginary_part)},
                          {"undeformed", to_json(d.theorem->undeformed)}};
    } else {
        doc["theorem"] = nullptr;
    }
    if (d.gravity) {
        doc["gravitational_action"] = {{"K", total_json(d.gravity->k)},
                                       {"I_Gr_b", total_json(d.gravity->i_gr_b)},
                                       {"Q0_engine", to_json(d.gravity->q0_engine)},
                                       {"Q0_paper", to_json(d.gravity->q0_paper)},
                                       {"corollary_engine", d.gravity->corollary_engine},
                                       {"corollary_paper", d.gravity->corollary_paper}};
    } else {
        doc["gravitational_action"] = nullptr;
    }
    return doc;
}

ReportDocument report_from_json(const json& j) {
    ReportDocument d;
    d.tool_version = j.at("tool_version").get<std::string>();
    d.paper_table_version = j.at("paper_table_version").get<std::string>();
    d.policy = j.at("ambiguity_policy").get<std::string>();
    for (const json& o : j.at("cases")) {
        CaseRecord c;
        c.spec.case_id = o.at("case_id").get<int>();
        c.spec.r = o.at("r").get<int>();
        c.spec.l = o.at("l").get<int>();
        c.spec.k = o.at("k").get<unsigned>();
        c.spec.j = o.at("j").get<unsigned>();
        c.spec.alpha = o.at("alpha").get<unsigned>();
        c.engine = polynomial_from_json(o.at("engine_value"));
        if (!o.at("paper_value").is_null()) c.paper = polynomial_from_json(o.at("paper_value"));
        c.status = parse_match_status(o.at("status").get<std::string>());
        c.ambiguous = o.at("ambiguous_entry").get<bool>();
        if (!o.at("alternative_value").is_null()) c.alternative = polynomial_from_json(o.at("alternative_value"));
        c.ledger_digest = o.at("ledger_digest").get<std::string>();
        c.ledger_size = o.at("ledger_size").get<std::size_t>();
        if (!o.at("oracle").is_null())
            c.oracle = OracleVerdict{o["oracle"].at("agree").get<bool>(), o["oracle"].at("rel_error").get<double>()};
        d.cases.push_back(std::move(c));
    }
    if (!j.at("phi").is_null()) d.phi = total_from(j["phi"]);
    if (!j.at("theorem").is_null()) {
        const json& t = j["theorem"];
        d.theorem = TheoremRecord{total_from(t.at("total")), polynomial_from_json(t.at("interior")),
                                  polynomial_from_json(t.at("imaginary_part")),
                                  polynomial_from_json(t.at("undeformed"))};
    }
    if (!j.at("gravitational_action").is_null()) {
        const json& g = j["gravitational_action"];
        d.gravity = GravityRecord{total_from(g.at("K")),
                                  total_from(g.at("I_Gr_b")),
                                  polynomial_from_json(g.at("Q0_engine")),
                                  polynomial_from_json(g.at("Q0_paper")),
                                  g.at("corollary_engine").get<std::string>(),
                                  g.at("corollary_paper").get<std::string>()};
    }
    return d;
}

bool operator==(const ReportDocument& a, const ReportDocument& b) {
    if (a.tool_version != b.tool_version || a.paper_table_version != b.paper_table_version || a.policy != b.policy ||
        a.cases.size() != b.cases.size())
        return false;
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
        const CaseRecord& x = a.cases[i];
        const CaseRecord& y = b.cases[i];
        bool oracle_same = x.oracle.has_value() == y.oracle.has_value() &&
                           (!x.oracle || (x.oracle->agree == y.oracle->agree && x.oracle->rel_error == y.oracle->rel_error));
        if (x.spec.case_id != y.spec.case_id || x.spec.r != y.spec.r || x.spec.l != y.spec.l || x.spec.k != y.spec.k ||
            x.spec.j != y.spec.j || x.spec.alpha != y.spec.alpha || x.engine != y.engine || x.paper != y.paper ||
            x.status != y.status || x.ambiguous != y.ambiguous || x.alternative != y.alternative ||
            x.ledger_digest != y.ledger_digest || x.ledger_size != y.ledger_size || !oracle_same)
            return false;
    }
    if (a.phi.has_value() != b.phi.has_value() || (a.phi && !same(*a.phi, *b.phi))) return false;
    if (a.theorem.has_value() != b.theorem.has_value()) return false;
    if (a.theorem && (!same(a.theorem->total, b.theorem->total) || a.theorem->interior != b.theorem->interior ||
                      a.theorem->imaginary_part != b.theorem->imaginary_part ||
                      a.theorem->undeformed != b.theorem->undeformed))
        return false;
    if (a.gravity.has_value() != b.gravity.has_value()) return false;
    if (a.gravity && (!same(a.gravity->k, b.gravity->k) || !same(a.gravity->i_gr_b, b.gravity->i_gr_b) ||
                      a.gravity->q0_engine != b.gravity->q0_engine || a.gravity->q0_paper != b.gravity->q0_paper ||
                      a.gravity->corollary_engine != b.gravity->corollary_engine ||
                      a.gravity->corollary_paper != b.gravity->corollary_paper))
        return false;
    return true;
}

std::string render_structured(const ReportDocument& d) { return to_json(d).dump(2) + "\n"; }

std::string render_text(const ReportDocument& d) {
    std::ostringstream os;
    os << "wres verify " << d.tool_version << "  (reference table v" << d.paper_table_version << ", ambiguity reading "
       << d.policy << ")\n\n";
    for (const CaseRecord& c : d.cases) {
        os << "case " << std::setw(2) << c.spec.case_id << "  r=" << c.spec.r << " l=" << c.spec.l
           << " k=" << c.spec.k << " j=" << c.spec.j << " |alpha|=" << c.spec.alpha << "  ["
           << match_status_name(c.status) << "]\n";
        os << "  engine: " << with_measure(c.engine, "πΩ5") << "\n";
        os << "  ref:    " << (c.paper ? with_measure(*c.paper, "πΩ5") : std::string("(absent)")) << "\n";
        if (c.ambiguous) os << "  zero reading of the ambiguous entry: " << with_measure(*c.alternative, "πΩ5") << "\n";
        if (c.oracle)
            os << "  oracle: " << (c.oracle->agree ? "agree" : "DISAGREE") << " (rel " << c.oracle->rel_error << ")\n";
        os << "  ledger: " << c.ledger_size << " terms, digest " << c.ledger_digest << "\n";
    }
    if (d.phi) {
        os << "\nPhi [" << match_status_name(d.phi->status) << "]\n";
        os << "  engine: " << with_measure(d.phi->engine, "πΩ5") << "\n";
        os << "  ref:    " << with_measure(d.phi->paper, "πΩ5") << "\n";
    }
    if (d.theorem) {
        os << "\nWres[(pi+ D_T^-2)^2] boundary density [" << match_status_name(d.theorem->total.status) << "]\n";
        os << "  interior term: " << d.theorem->interior.str() << "\n";
        os << "  imaginary part (engine): " << d.theorem->imaginary_part.str() << "\n";
        os << "  undeformed (TV = 0): " << with_measure(d.theorem->undeformed, "πΩ5") << "\n";
    }
    if (d.gravity) {
        os << "\ngravitational action\n";
        os << "  K(x0):  engine " << d.gravity->k.engine.str() << ", reference " << d.gravity->k.paper.str() << "  ["
           << match_status_name(d.gravity->k.status) << "]\n";
        os << "  I_Gr,b: engine " << with_measure(d.gravity->i_gr_b.engine, "Vol") << ", reference "
           << with_measure(d.gravity->i_gr_b.paper, "Vol") << "  [" << match_status_name(d.gravity->i_gr_b.status)
           << "]\n";
        os << "  engine: " << d.gravity->corollary_engine << "\n";
        os << "  ref:    " << d.gravity->corollary_paper << "\n";
    }
    return os.str();
}

std::string ledger_digest(const std::vector<LedgerEntry>& ledger) {
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    for (const LedgerEntry& e : ledger) {
        feed(e.alpha);
        feed(e.monomial.str());
        feed(e.integrand.str());
        feed(e.weight.str());
        feed(e.line_integral.str());
        feed(to_string(e.moment));
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

ParamAssignment VerifyOptions::default_oracle_point() {
    ParamAssignment a;
    a.set(Param::H1, 0.3).set(Param::H2, 0.7).set(Param::SM, 1.1).set(Param::SB, 0.9).set(Param::TV, 0.5);
    return a;
}

VerifyOutcome run_verify(const VerifyOptions& options) {
    VerifyOutcome out;
    ReportDocument& doc = out.document;
    doc.policy = ambiguity_policy_name(options.policy);
    try {
        auto specs = enumerate_cases(kDim, 2, 2);
        std::set<int> wanted(options.cases.begin(), options.cases.end());
        for (int id : wanted)
            if (id < 1 || id > static_cast<int>(specs.size()))
                throw std::invalid_argument("no case " + std::to_string(id));
        const bool all = wanted.empty() || wanted.size() == specs.size();

        std::vector<CaseResult> results;
        if (all) {
            results = compute_all_cases(options.policy);
        } else {
            for (int id : wanted) results.push_back(compute_case(specs[id - 1], options.policy));
        }

        const auto paper = paper_case_values();
        bool discrepancy = false;
        bool oracle_failed = false;
        for (const CaseResult& r : results) {
            CaseRecord c;
            c.spec = r.spec;
            c.engine = r.value;
            auto it = paper.find(r.spec.case_id);
            if (it != paper.end()) {
                c.paper = it->second;
                c.status = compare(r.value, it->second);
            }
            c.ambiguous = r.ambiguous;
            c.alternative = r.alternative_value;
            c.ledger_digest = ledger_digest(r.ledger);
            c.ledger_size = r.ledger.size();
            if (options.oracle || c.status == MatchStatus::discrepancy) {
                NumericCheck chk = numeric_case_check(r, options.oracle_point);
                c.oracle = OracleVerdict{chk.agree, chk.rel_error};
                oracle_failed |= !chk.agree;
            }
            discrepancy |= c.status == MatchStatus::discrepancy;
            doc.cases.push_back(std::move(c));
        }

        if (all) {
            ParameterPolynomial phi = assemble_phi(results);
            ParameterPolynomial from_ledgers;
            for (const CaseResult& r : results) from_ledgers += value_from_ledger(r.ledger);
            if (from_ledgers != phi) throw std::logic_error("Phi differs from the sum recomputed from the ledgers");

            doc.phi = TotalRecord{phi, paper_phi(), compare(phi, paper_phi())};
            TheoremReport t = theorem_wres(phi);
            doc.theorem = TheoremRecord{TotalRecord{t.boundary, t.paper, compare(t.boundary, t.paper)}, t.interior,
                                        t.imaginary_part, t.undeformed};
            GravitationalAction g = gravitational_action(phi);
            doc.gravity = GravityRecord{TotalRecord{g.k_engine, g.k_paper, compare(g.k_engine, g.k_paper)},
                                        TotalRecord{g.i_gr_b_engine, g.i_gr_b_paper,
                                                    compare(g.i_gr_b_engine, g.i_gr_b_paper)},
                                        g.q0_engine,
                                        g.q0_paper,
                                        g.corollary_engine,
                                        g.corollary_paper};
            discrepancy |= doc.phi->status == MatchStatus::discrepancy ||
                           doc.gravity->k.status == MatchStatus::discrepancy ||
                           doc.gravity->i_gr_b.status == MatchStatus::discrepancy;
        }

        if (oracle_failed) {
            out.exit_code = 2;
            out.error = "numeric oracle disagrees with the exact engine";
        } else if (discrepancy && options.mode == CompareMode::strict) {
            out.exit_code = 1;
        }
    } catch (const std::exception& ex) {
        out.exit_code = 2;
        out.error = ex.what();
    }
    return out;
}

}  // namespace wres
