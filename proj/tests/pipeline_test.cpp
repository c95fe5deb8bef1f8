#include "intermediates.hpp"
#include "properties.hpp"
#include "wres/cli_report.hpp"

#include <gtest/gtest.h>

#include <tuple>

using namespace wres;
using namespace wres::testing;

namespace {

ParameterPolynomial P(Param p, unsigned e = 1) { return ParameterPolynomial::var(p, e); }
GaussianRational q(long a, long b = 1) { return GaussianRational(make_rational(a, b)); }

const std::vector<CaseResult>& all_cases() {
    static const std::vector<CaseResult> cases = compute_all_cases();
    return cases;
}

const CaseResult& case_(int id) { return all_cases().at(id - 1); }

}  // namespace

TEST(Enumerate, FifteenShapesForDimensionSeven) {
    auto cs = enumerate_cases(7, 2, 2);
    ASSERT_EQ(cs.size(), 15u);
    const std::vector<std::tuple<int, int, unsigned, unsigned, unsigned>> expect{
        {-2, -2, 0, 1, 1}, {-2, -2, 0, 2, 0}, {-2, -2, 0, 0, 2}, {-2, -2, 1, 1, 0}, {-2, -2, 1, 0, 1},
        {-2, -2, 2, 0, 0}, {-2, -3, 0, 1, 0}, {-2, -3, 0, 0, 1}, {-2, -3, 1, 0, 0}, {-3, -2, 0, 1, 0},
        {-3, -2, 0, 0, 1}, {-3, -2, 1, 0, 0}, {-3, -3, 0, 0, 0}, {-2, -4, 0, 0, 0}, {-4, -2, 0, 0, 0}};
    for (std::size_t i = 0; i < cs.size(); ++i) {
        EXPECT_EQ(cs[i].case_id, static_cast<int>(i + 1));
        EXPECT_EQ(std::make_tuple(cs[i].r, cs[i].l, cs[i].k, cs[i].j, cs[i].alpha), expect[i]) << cs[i].str();
        EXPECT_EQ(-cs[i].r - cs[i].l + 1 + static_cast<int>(cs[i].k + cs[i].j + cs[i].alpha), 7);
    }
}

TEST(Enumerate, MatchesBruteForceSearch) {
    for (auto [n, p1, p2] : {std::tuple{5, 1, 1}, std::tuple{5, 2, 2}, std::tuple{9, 2, 3}}) {
        std::set<std::tuple<int, int, unsigned, unsigned, unsigned>> brute, got;
        for (int r = -12; r <= -p1; ++r)
            for (int l = -12; l <= -p2; ++l)
                for (unsigned k = 0; k < 12; ++k)
                    for (unsigned j = 0; j < 12; ++j)
                        for (unsigned a = 0; a < 12; ++a)
                            if (-r - l + 1 + static_cast<int>(k + j + a) == n) brute.insert({r, l, k, j, a});
        for (const CaseSpec& s : enumerate_cases(n, p1, p2)) got.insert({s.r, s.l, s.k, s.j, s.alpha});
        EXPECT_EQ(got, brute) << n << " " << p1 << " " << p2;
    }
}

TEST(Enumerate, PrefactorsAndMultiIndices) {
    auto cs = enumerate_cases(7, 2, 2);
    EXPECT_EQ(cs[0].prefactor(), q(1, 2) * GaussianRational::i());   // (-i)³/2!
    EXPECT_EQ(cs[1].prefactor(), q(1, 6) * GaussianRational::i());   // (-i)³/3!
    EXPECT_EQ(cs[6].prefactor(), q(-1, 2));                          // (-i)²/2!
    EXPECT_EQ(cs[7].prefactor(), q(-1));                             // (-i)²/1!
    EXPECT_EQ(cs[12].prefactor(), -GaussianRational::i());
    auto al = cs[2].alphas();
    EXPECT_EQ(al.size(), 21u);  // 6 squares + 15 mixed pairs
    int halves = 0;
    for (const MultiIndex& m : al) halves += m.inv_factorial == make_rational(1, 2);
    EXPECT_EQ(halves, 6);
}

TEST(Pipeline, CasesMatchingTheLiterature) {
    auto paper = paper_case_values();
    for (int id : {1, 2, 4, 5, 6, 7, 8, 11, 12}) EXPECT_EQ(case_(id).value, paper.at(id)) << "case " << id;
    EXPECT_TRUE(case_(1).value.is_zero());
    EXPECT_TRUE(case_(5).value.is_zero());
    EXPECT_TRUE(case_(11).value.is_zero());
}

TEST(Pipeline, Case3AgainstItsOwnCurvatureIntegrand) {
    // (i/2)·tr(id)·∫ (-4ξ - 2iξ²) / (9 (ξ-i)² (1+ξ²)³) dξ / π = 1/8, the SB coefficient.
    auto f = parse_fixture("(-4 xin - 2 i xin^2)/(9 (xin - i)^2 (1+xin^2)^3)").term_list().at(0).xi_n_part;
    EXPECT_EQ(GaussianRational::i() * q(1, 2) * q(8) * integrate_real_line(f), q(1, 8));
    EXPECT_EQ(case_(3).value, q(1, 8) * P(Param::SB));
}

TEST(Pipeline, Case13AgainstHandEvaluatedSigma3) {
    // σ₋₃(x0) = S + A·Σξk ck cn + B·Σξk c̄k c̄n; tr of the product gives 8(π⁺S·S' - π⁺A·A' - π⁺B·B').
    auto scalar = [](const char* s) { return parse_fixture(s).term_list().at(0).xi_n_part; };
    auto S = scalar("-3 i xin/(1+xin^2)^2 - 2 i xin/(1+xin^2)^3");
    auto A = scalar("-i/(2 (1+xin^2)^2)");
    auto B = scalar("i/(2 (1+xin^2)^2)");
    auto tr = q(8) * (pi_plus(S) * rf_derivative(S) - pi_plus(A) * rf_derivative(A) - pi_plus(B) * rf_derivative(B));
    GaussianRational oracle = -GaussianRational::i() * integrate_real_line(tr);
    EXPECT_EQ(oracle, q(-57, 8));
    EXPECT_EQ(case_(13).value, oracle * P(Param::H1, 2));
}

TEST(Pipeline, AmbiguousEntryReadings) {
    EXPECT_EQ(case_(9).value, q(45, 16) * P(Param::H2) + q(-93, 16) * P(Param::H1, 2));
    ASSERT_TRUE(case_(9).alternative_value);
    EXPECT_EQ(*case_(9).alternative_value, q(27, 16) * P(Param::H2) + q(-75, 16) * P(Param::H1, 2));
    for (int id : {9, 10, 14, 15}) EXPECT_TRUE(case_(id).ambiguous) << id;
    for (int id : {1, 2, 3, 4, 5, 6, 7, 8, 11, 12, 13}) EXPECT_FALSE(case_(id).ambiguous) << id;
}

TEST(Pipeline, FrozenValuesOfTheRemainingCases) {
    // Confirmed by the numeric oracle (dual-path ledger evaluation) in Oracle.CaseChecks.
    EXPECT_EQ(case_(10).value, case_(9).value);
    auto edge = -P(Param::TV) - q(1, 4) * P(Param::SM) - q(5, 32) * P(Param::SB) - q(13, 4) * P(Param::H2) +
                q(7) * P(Param::H1, 2);
    EXPECT_EQ(case_(14).value, edge);
    EXPECT_EQ(case_(15).value, edge);
    EXPECT_EQ(*case_(14).alternative_value, -P(Param::TV) - q(1, 4) * P(Param::SM) - q(5, 32) * P(Param::SB) -
                                                q(25, 16) * P(Param::H2) + q(85, 16) * P(Param::H1, 2));
}

TEST(Pipeline, SwapIdentityForCases10_12_15) {
    auto cs = enumerate_cases(7, 2, 2);
    for (int id : {10, 12, 15}) EXPECT_EQ(compute_case_swapped(cs[id - 1]), case_(id).value) << id;
}

TEST(Pipeline, PiPlusSwapOnRandomPairs) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        auto a = BoundarySymbolValue(random_decaying(rng)) * parse_fixture("1 + c(1) cb(2)");
        auto b = BoundarySymbolValue(random_decaying(rng)) * parse_fixture("2 - c(1) cb(2) + h1");
        SwapSplit s = pi_plus_swap(a, b);
        EXPECT_EQ(s.direct, subtract(s.full, s.cross));
        EXPECT_TRUE(s.plus_plus.empty());
        EXPECT_TRUE(s.minus_minus.empty());
    }
    // Poles only at +i: the cross term closes in the lower half-plane.
    auto up = BoundarySymbolValue(PoleLimitedRational(Polynomial(GaussianRational(1)), 3, 0));
    EXPECT_TRUE(pi_plus_swap(up, up).cross.empty());
}

TEST(Pipeline, PhiIsTheSumOfCases) {
    ParameterPolynomial phi = assemble_phi(all_cases()), from_ledgers, tv;
    for (const CaseResult& c : all_cases()) from_ledgers += value_from_ledger(c.ledger);
    EXPECT_EQ(phi, from_ledgers);
    EXPECT_EQ(phi, -q(1, 2) * P(Param::SM) + q(1, 8) * P(Param::SB) - q(2) * P(Param::TV) - q(13, 8) * P(Param::H2) +
                       q(13, 8) * P(Param::H1, 2));
    ParamExponents tv_e{};
    tv_e[static_cast<int>(Param::TV)] = 1;
    EXPECT_EQ(phi.coeff(tv_e), case_(14).value.coeff(tv_e) + case_(15).value.coeff(tv_e));
}

TEST(Pipeline, TheoremAndGravitationalAction) {
    ParameterPolynomial phi = assemble_phi(all_cases());
    TheoremReport t = theorem_wres(phi);
    EXPECT_TRUE(t.interior.is_zero());
    EXPECT_TRUE(t.imaginary_part.is_zero());
    EXPECT_EQ(t.undeformed, phi.without(Param::TV));
    EXPECT_FALSE(t.matches_paper);
    EXPECT_EQ(t.paper.imag_part(), paper_phi().imag_part());

    GravitationalAction g = gravitational_action(phi);
    EXPECT_EQ(g.k_engine, q(-3) * P(Param::H1));  // -(n-1)/2 · h'(0) for n = 7
    EXPECT_EQ(g.i_gr_b_engine, q(-6) * P(Param::H1));
    EXPECT_EQ(g.k_paper, q(-5, 2) * P(Param::H1));
    EXPECT_EQ(g.i_gr_b_paper, q(-5) * P(Param::H1));
    EXPECT_EQ(g.q0_engine, phi);
    EXPECT_NE(g.corollary_engine.find(phi.str()), std::string::npos);
    EXPECT_NE(g.corollary_paper.find(paper_phi().str()), std::string::npos);
}

TEST(Pipeline, ErrorsCarryTheCaseId) {
    CaseSpec bad;
    bad.case_id = 42;
    bad.r = -5;
    bad.l = -2;
    try {
        compute_case(bad);
        FAIL() << "expected case_error";
    } catch (const case_error& e) {
        EXPECT_EQ(e.case_id, 42);
        EXPECT_NE(std::string(e.what()).find("case 42"), std::string::npos);
    }
}

TEST(Pipeline, Deterministic) {
    auto a = compute_case(enumerate_cases(7, 2, 2)[13]);
    auto b = compute_case(enumerate_cases(7, 2, 2)[13]);
    EXPECT_EQ(ledger_digest(a.ledger), ledger_digest(b.ledger));
    EXPECT_EQ(ledger_digest(a.ledger), ledger_digest(case_(14).ledger));
    EXPECT_EQ(a.value, b.value);
}
