#include <gtest/gtest.h>

#include <random>
#include <set>

#include "spectrec/errors.hpp"
#include "spectrec/recognizer.hpp"

using namespace spectrec;

namespace {

const Catalog& cat() {
    static const Catalog c = load(std::string(SPECTREC_DATA_DIR) + "/catalog.json");
    return c;
}

const MuSet kAutMcL({9, 14, 20, 22, 24, 30});
const MuSet kAutJ2({10, 14, 15, 24});

const Elimination* find(const RecognitionReport& rep, const std::string& name) {
    for (const auto& e : rep.eliminations) {
        if (e.candidate == name) return &e;
    }
    return nullptr;
}

// Independent pass over the report: witness soundness, citations, partition.
void check_report(const RecognitionReport& rep) {
    std::set<std::string> seen;
    for (const auto& e : rep.eliminations) {
        EXPECT_FALSE(e.citations.empty()) << e.candidate;
        EXPECT_TRUE(seen.insert(e.candidate).second);
        if (e.rule == RuleKind::SpectrumWitness) {
            const auto* r = cat().find_record(e.candidate);
            ASSERT_TRUE(r && r->mu);
            EXPECT_TRUE(member(*r->mu, e.witness)) << e.candidate;
            EXPECT_FALSE(member(rep.target_mu, e.witness)) << e.candidate;
        }
    }
    for (const auto& s : rep.survivors) EXPECT_TRUE(seen.insert(s.candidate).second);
    std::set<std::string> pool(rep.candidate_pool.begin(), rep.candidate_pool.end());
    EXPECT_EQ(seen, pool);
}

}  // namespace

TEST(Recognizer, AutMcLReplay) {
    auto rep = recognize("aut-mcl", cat());
    check_report(rep);
    EXPECT_EQ(rep.candidate_pool.size(), 28u);
    EXPECT_EQ(rep.survivor_names(), (std::vector<std::string>{"McL"}));
    for (auto [name, w] : std::vector<std::pair<std::string, Order>>{
             {"L2(49)", 25}, {"S4(7)", 25}, {"A10", 21}, {"A11", 21}, {"A12", 21}, {"U5(2)", 18}, {"U6(2)", 18}}) {
        const auto* e = find(rep, name);
        ASSERT_NE(e, nullptr) << name;
        EXPECT_EQ(e->rule, RuleKind::SpectrumWitness) << name;
        EXPECT_EQ(e->witness, w) << name;
    }
    for (const char* n : {"A5", "L2(7)", "A6", "L2(8)", "U3(3)", "U4(2)"}) {
        EXPECT_EQ(find(rep, n)->rule, RuleKind::OutPowerArgument) << n;
    }
    for (const char* n : {"A7", "A8", "L3(4)", "U3(5)", "A9", "J2", "S6(2)", "U4(3)", "O8+(2)"}) {
        EXPECT_EQ(find(rep, n)->rule, RuleKind::FrobeniusExclusionConflict) << n;
        EXPECT_EQ(find(rep, n)->primes, std::vector<Order>{11}) << n;
    }
    for (const char* n : {"L2(11)", "M11", "M12"}) EXPECT_EQ(find(rep, n)->primes, std::vector<Order>{7}) << n;
    for (const char* n : {"M22", "HS"}) EXPECT_EQ(find(rep, n)->primes, std::vector<Order>{3}) << n;
    EXPECT_TRUE(rep.survivors[0].resolved);
}

TEST(Recognizer, AutJ2Replay) {
    auto rep = recognize("aut-j2", cat());
    check_report(rep);
    std::vector<std::string> pool{"L2(7)", "L2(8)", "A7", "U3(3)", "A8", "L3(4)", "L2(49)", "U3(5)",
                                  "A9", "J2", "S6(2)", "A10", "U4(3)", "S4(7)", "O8+(2)"};
    EXPECT_EQ(rep.candidate_pool, pool);
    EXPECT_EQ(rep.pool_derivation.required_prime, std::optional<Order>(7));
    EXPECT_EQ(rep.survivor_names(), (std::vector<std::string>{"A8", "J2"}));
    for (const auto& s : rep.survivors) EXPECT_EQ(s.n_summary, "N is a 2-group") << s.candidate;
    EXPECT_FALSE(rep.survivors[0].resolved);
    EXPECT_TRUE(rep.survivors[1].resolved);
}

TEST(Recognizer, SporadicTargetsResolve) {
    for (auto [t, s] : std::vector<std::pair<std::string, std::string>>{
             {"aut-m12", "M12"}, {"aut-m22", "M22"}, {"aut-he", "He"}, {"aut-suz", "Suz"}, {"aut-on", "ON"}}) {
        auto rep = recognize(t, cat());
        check_report(rep);
        ASSERT_EQ(rep.survivor_names(), std::vector<std::string>{s}) << t;
        EXPECT_TRUE(rep.survivors[0].resolved) << t;
        EXPECT_EQ(rep.survivors[0].status, "resolved: N = 1, G = " + s + ".2") << t;
    }
}

TEST(Recognizer, FrobeniusExclusions) {
    auto ex = frobenius_exclusions(*cat().find_record("L3(4)"), kAutJ2);
    ASSERT_EQ(ex.size(), 3u);
    EXPECT_EQ(ex.at(3).witness.label(), "7:3");
    EXPECT_EQ(ex.at(3).product, 9u);
    EXPECT_EQ(ex.at(5).witness.label(), "16:5");
    EXPECT_EQ(ex.at(5).product, 25u);
    EXPECT_EQ(ex.at(7).witness.label(), "16:5");
    EXPECT_EQ(ex.at(7).product, 35u);

    auto mcl = frobenius_exclusions(*cat().find_record("McL"), kAutMcL);
    EXPECT_EQ(mcl.size(), 4u);
    for (Order p : {3, 5, 7, 11}) EXPECT_EQ(mcl.at(p).witness.label(), "8:7");

    EXPECT_TRUE(frobenius_exclusions(*cat().find_record("L2(49)"), kAutJ2).empty());
}

TEST(Recognizer, EliminateExamples) {
    auto e = eliminate(*cat().find_record("L2(49)"), kAutMcL, cat());
    ASSERT_TRUE(e);
    EXPECT_EQ(e->rule, RuleKind::SpectrumWitness);
    EXPECT_EQ(e->witness, 25u);

    auto l211 = eliminate(*cat().find_record("L2(11)"), kAutMcL, cat());
    ASSERT_TRUE(l211);
    EXPECT_EQ(l211->rule, RuleKind::FrobeniusExclusionConflict);
    EXPECT_NE(std::find(l211->assumptions.begin(), l211->assumptions.end(), "F not inside N*C_G(N)/N"),
              l211->assumptions.end());

    EXPECT_FALSE(eliminate(*cat().find_record("McL"), kAutMcL, cat()));
}

TEST(Recognizer, AllRulesKeepsFirstAndAddsOthers) {
    auto first = eliminate(*cat().find_record("A5"), kAutMcL, cat());
    auto all = eliminate_all(*cat().find_record("A5"), kAutMcL, cat());
    ASSERT_TRUE(first);
    ASSERT_GE(all.size(), 2u);
    EXPECT_EQ(all.front().summary, first->summary);
    RecognizerOptions o;
    o.all_rules = true;
    auto rep = recognize("aut-mcl", cat(), o);
    EXPECT_EQ(rep.survivor_names(), (std::vector<std::string>{"McL"}));
    EXPECT_FALSE(rep.additional_rules.empty());
}

TEST(Recognizer, SolubleConstraint) {
    auto s = soluble_part_constraint(kAutMcL, cat());
    bool found = std::any_of(s.begin(), s.end(), [](const auto& c) { return c.triple == std::array<Order, 3>{5, 7, 11}; });
    EXPECT_TRUE(found);
    EXPECT_TRUE(soluble_part_constraint(kAutJ2, cat()).empty());
    EXPECT_TRUE(soluble_part_constraint(MuSet({30}), cat()).empty());
}

TEST(Recognizer, SocleDerivation) {
    auto m = socle_simplicity_derivation(kAutMcL, cat());
    EXPECT_TRUE(m.conclusive);
    bool p11 = std::any_of(m.steps.begin(), m.steps.end(), [](const auto& s) { return s.prime == 11 && s.fires; });
    EXPECT_TRUE(p11);
    auto j = socle_simplicity_derivation(kAutJ2, cat());
    ASSERT_EQ(j.steps.size(), 1u);
    EXPECT_TRUE(j.steps[0].fires);
    EXPECT_EQ(j.steps[0].product, 21u);
    auto inc = socle_simplicity_derivation(MuSet({21, 33, 2}), cat());
    EXPECT_FALSE(inc.conclusive);
    EXPECT_EQ(inc.conclusion, "inconclusive");
}

TEST(Recognizer, PoolErrors) {
    EXPECT_THROW(candidate_pool(MuSet({1}), cat()), UnsupportedTarget);
    EXPECT_THROW(candidate_pool(MuSet({13, 12}), cat()), UnsupportedTarget);
    EXPECT_THROW(recognize("aut-nothing", cat()), UnsupportedTarget);
    EXPECT_EQ(candidate_pool(kAutMcL, cat()).size(), 28u);
}

TEST(Recognizer, CustomTargetDoesNotCrash) {
    auto rep = recognize(MuSet({4, 5, 6}), cat());
    check_report(rep);
    EXPECT_EQ(rep.target_name, "custom");
}

TEST(Recognizer, EmptySurvivorReport) {
    auto rep = recognize(MuSet({6}), cat());
    EXPECT_TRUE(rep.survivors.empty());
    EXPECT_NE(render_report(rep, ReportFormat::Text).find("SURVIVORS: none"), std::string::npos);
}

TEST(Recognizer, WitnessMonotonicity) {
    // Enlarging the target never adds a spectrum-witness elimination.
    std::mt19937_64 rng(17);
    std::vector<Order> extras{2, 3, 5, 7, 11, 6, 10, 14, 15, 21, 22, 33, 35, 9, 25, 8, 16, 12, 18, 20, 24, 28, 30};
    for (int i = 0; i < 40; ++i) {
        std::vector<Order> base{9, 14, 20, 22, 24, 30};
        std::vector<Order> big = base;
        for (int k = 0; k < 3; ++k) big.push_back(extras[rng() % extras.size()]);
        MuSet small(base);
        MuSet large = maximal_elements(big);
        for (const auto& r : cat().records) {
            if (!r.mu) continue;
            bool in_large = !witnesses_not_in(*r.mu, large).empty();
            bool in_small = !witnesses_not_in(*r.mu, small).empty();
            EXPECT_TRUE(!in_large || in_small) << r.name;
        }
    }
}

TEST(Recognizer, Determinism) {
    auto a = render_report(recognize("aut-j2", cat()), ReportFormat::Text);
    auto b = render_report(recognize("aut-j2", cat()), ReportFormat::Text);
    EXPECT_EQ(a, b);
    auto ja = render_report(recognize("aut-j2", cat()), ReportFormat::Json);
    EXPECT_EQ(ja, render_report(recognize("aut-j2", cat()), ReportFormat::Json));
}

TEST(Recognizer, FormatParsing) {
    EXPECT_EQ(parse_format("text"), ReportFormat::Text);
    EXPECT_EQ(parse_format("json"), ReportFormat::Json);
    EXPECT_THROW(parse_format("xml"), UsageError);
}

TEST(Recognizer, ReportLines) {
    auto text = render_report(recognize("aut-mcl", cat()), ReportFormat::Text);
    EXPECT_NE(text.find("\nELIMINATED L2(49): witness 25\n"), std::string::npos);
    EXPECT_NE(text.find("\nSURVIVORS: McL\n"), std::string::npos);
}

TEST(Recognizer, MatrixChecksAppearInReport) {
    auto text = render_report(recognize("aut-m12", cat()), ReportFormat::Text);
    EXPECT_NE(text.find("matrix modules/m12-10-8a-1.mat: GF(2) dim 10, T of order 8"), std::string::npos);
    EXPECT_NE(text.find("verified"), std::string::npos);
}
