#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "spectrec/catalog.hpp"
#include "spectrec/errors.hpp"
#include "spectrec/permgroup.hpp"

using namespace spectrec;

namespace {

const std::string kDataDir = SPECTREC_DATA_DIR;

std::string catalog_text() {
    std::ifstream in(kDataDir + "/catalog.json");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const Catalog& shipped() {
    static const Catalog c = load(kDataDir + "/catalog.json");
    return c;
}

// Group orders and |Out| of the groups with all primes at most 11, independent of the data file.
const std::map<std::string, std::pair<BigInt, Order>>& known() {
    static const std::map<std::string, std::pair<BigInt, Order>> m{
        {"A5", {60, 2}},
        {"L2(7)", {168, 2}},
        {"A6", {360, 4}},
        {"L2(8)", {504, 3}},
        {"L2(11)", {660, 2}},
        {"A7", {2520, 2}},
        {"U3(3)", {6048, 2}},
        {"M11", {7920, 1}},
        {"A8", {20160, 2}},
        {"L3(4)", {20160, 12}},
        {"U4(2)", {25920, 2}},
        {"L2(49)", {58800, 4}},
        {"M12", {95040, 2}},
        {"U3(5)", {126000, 6}},
        {"A9", {181440, 2}},
        {"M22", {443520, 2}},
        {"J2", {604800, 2}},
        {"S6(2)", {1451520, 1}},
        {"A10", {1814400, 2}},
        {"U4(3)", {3265920, 8}},
        {"U5(2)", {13685760, 2}},
        {"A11", {19958400, 2}},
        {"HS", {44352000, 2}},
        {"S4(7)", {138297600, 2}},
        {"O8+(2)", {174182400, 6}},
        {"A12", {239500800, 2}},
        {"McL", {898128000, 2}},
        {"U6(2)", {BigInt("9196830720"), 6}},
    };
    return m;
}

Catalog mutated(const std::function<void(nlohmann::json&)>& f) {
    auto j = nlohmann::json::parse(catalog_text());
    f(j);
    return parse_catalog(j.dump(), kDataDir);
}

}  // namespace

TEST(Catalog, LoadsTwentyEightGroupsUpToEleven) {
    EXPECT_EQ(subcatalog(shipped(), 11).size(), 28u);
    for (const auto* r : subcatalog(shipped(), 11)) {
        SCOPED_TRACE(r->name);
        auto it = known().find(r->name);
        ASSERT_NE(it, known().end());
        EXPECT_EQ(r->order, it->second.first);
        EXPECT_EQ(r->out_order, it->second.second);
    }
}

TEST(Catalog, McLOrderFactors) {
    const auto* r = shipped().find_record("McL");
    ASSERT_NE(r, nullptr);
    std::vector<std::pair<Order, unsigned>> want{{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}};
    EXPECT_EQ(r->order_factors, want);
}

TEST(Catalog, SubcatalogBounds) {
    EXPECT_TRUE(subcatalog(shipped(), 3).empty());
    EXPECT_EQ(subcatalog(shipped(), 5).size(), 3u);
    std::vector<std::string> names;
    for (const auto* r : subcatalog(shipped(), 7, 7)) names.push_back(r->name);
    std::vector<std::string> want{"L2(7)", "L2(8)", "A7", "U3(3)", "A8", "L3(4)", "L2(49)", "U3(5)",
                                  "A9", "J2", "S6(2)", "A10", "U4(3)", "S4(7)", "O8+(2)"};
    EXPECT_EQ(names, want);
}

TEST(Catalog, AutOrderPower) {
    const auto* a5 = shipped().find_record("A5");
    EXPECT_EQ(aut_order_power(*a5, 1), BigInt(120));
    EXPECT_EQ(aut_order_power(*a5, 2), BigInt(28800));
    const auto* m11 = shipped().find_record("M11");
    EXPECT_EQ(aut_order_power(*m11, 1), m11->order);
}

TEST(Catalog, EveryFactAndWitnessIsCited) {
    for (const auto& r : shipped().records) {
        for (const auto& w : r.frobenius_witnesses) EXPECT_FALSE(w.citation.empty()) << r.name;
        for (const auto& f : r.module_facts) EXPECT_FALSE(f.citation.empty()) << r.name;
    }
}

TEST(Catalog, TargetsMatchTheirGroups) {
    for (const auto& t : shipped().targets) {
        const auto* r = shipped().find_record(t.socle);
        ASSERT_NE(r, nullptr) << t.name;
        auto am = r->aut_mu();
        ASSERT_TRUE(am.has_value()) << t.name;
        EXPECT_EQ(*am, t.mu) << t.name;
    }
}

TEST(Catalog, ShippedSpectraMatchEnumeration) {
    for (const auto& r : shipped().records) {
        if (!r.generators || r.order > 200000) continue;
        SCOPED_TRACE(r.name);
        auto gf = read_generator_file(shipped().resolve(*r.generators));
        auto g = build_chain(gf.generators, gf.degree);
        EXPECT_EQ(g.order(), r.order);
        EXPECT_EQ(maximal_elements(spectrum_exhaustive(g)), *r.mu);
    }
}

TEST(Catalog, RejectsDuplicateName) {
    EXPECT_THROW(mutated([](auto& j) { j["simple_groups"].push_back(j["simple_groups"][12]); }), ValidationError);
}

TEST(Catalog, RejectsUnknownKeys) {
    EXPECT_THROW(mutated([](auto& j) { j["extra"] = 1; }), ValidationError);
    EXPECT_THROW(mutated([](auto& j) { j["simple_groups"][0]["colour"] = "red"; }), ValidationError);
}

TEST(Catalog, RejectsInconsistentOrder) {
    EXPECT_THROW(mutated([](auto& j) { j["simple_groups"][0]["order"] = "61"; }), ValidationError);
}

TEST(Catalog, RejectsOutsideTwoThree) {
    EXPECT_THROW(mutated([](auto& j) { j["simple_groups"][0]["out_order"] = 5; }), ValidationError);
}

TEST(Catalog, RejectsNonAntichainMu) {
    EXPECT_THROW(mutated([](auto& j) { j["simple_groups"][0]["mu"] = {2, 4, 5}; }), ValidationError);
}

TEST(Catalog, RejectsBadWitness) {
    EXPECT_THROW(mutated([](auto& j) { j["simple_groups"][0]["frobenius_witnesses"][0]["complement_order"] = 2; }),
                 ValidationError);
}

TEST(Catalog, ErrorNamesRecordAndField) {
    try {
        mutated([](auto& j) { j["simple_groups"][1]["order"] = "169"; });
        FAIL();
    } catch (const ValidationError& e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("L2(7)"), std::string::npos);
        EXPECT_NE(msg.find("order"), std::string::npos);
    }
}

TEST(Catalog, MissingFileIsValidationError) {
    EXPECT_THROW(load(kDataDir + "/no-such.json"), ValidationError);
}
