#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "spectrec/errors.hpp"
#include "spectrec/permgroup.hpp"

using namespace spectrec;

namespace {

// Every element of <gens> by breadth-first closure on image vectors.
std::set<std::vector<Point>> closure(const std::vector<Permutation>& gens) {
    std::size_t n = gens.front().degree();
    std::vector<Point> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<Point>> seen{id};
    std::vector<std::vector<Point>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<Point>> next;
        for (const auto& x : frontier) {
            for (const auto& g : gens) {
                std::vector<Point> y(n);
                for (std::size_t i = 0; i < n; ++i) y[i] = g[x[i]];
                if (seen.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

std::vector<Order> naive_orders(const std::set<std::vector<Point>>& elems) {
    std::set<Order> out;
    for (const auto& e : elems) out.insert(element_order(Permutation::from_images(e)));
    return {out.begin(), out.end()};
}

std::vector<Permutation> gens_of(std::initializer_list<const char*> cycles, std::size_t n) {
    std::vector<Permutation> out;
    for (const char* c : cycles) out.push_back(parse_cycles(c, n));
    return out;
}

std::string data(const std::string& rel) { return std::string(SPECTREC_DATA_DIR) + "/" + rel; }

}  // namespace

TEST(Permutation, CompositionActsOnTheRight) {
    auto a = parse_cycles("(1,2)", 3);
    auto b = parse_cycles("(2,3)", 3);
    auto ab = a * b;
    EXPECT_EQ(ab[0], 2u);  // 1 -> 2 -> 3
    EXPECT_EQ(ab.to_cycles(), "(1,3,2)");
    EXPECT_TRUE((ab * ab.inverse()).is_identity());
}

TEST(Permutation, ParseCycles) {
    EXPECT_EQ(parse_cycles("()", 4).to_cycles(), "()");
    EXPECT_EQ(parse_cycles("(1,2)(3,4)", 4).to_cycles(), "(1,2)(3,4)");
    EXPECT_EQ(element_order(parse_cycles("(1,2,3)(4,5)", 5)), 6u);
    EXPECT_THROW(parse_cycles("(1,2", 4), ParseError);
    EXPECT_THROW(parse_cycles("(1,5)", 4), ParseError);
    EXPECT_THROW(parse_cycles("(1,2)(2,3)", 4), ParseError);
    EXPECT_THROW(parse_cycles("()(1,2)", 4), ParseError);
    try {
        parse_cycles("(1,2)x", 4);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 5u);
    }
}

TEST(Permutation, FromImagesRejectsNonBijection) {
    EXPECT_THROW(Permutation::from_images({0, 0, 1}), ValidationError);
    EXPECT_THROW(Permutation::from_images({0, 3}), ValidationError);
}

TEST(GeneratorFile, Parse) {
    auto gf = parse_generator_text("degree 5\n# A5\n(1,2,3,4,5)\n\n(1,2,3)\n");
    EXPECT_EQ(gf.degree, 5u);
    EXPECT_EQ(gf.generators.size(), 2u);
    EXPECT_EQ(gf.comments.size(), 1u);
    EXPECT_THROW(parse_generator_text("(1,2)\n"), ParseError);
    EXPECT_THROW(parse_generator_text("degree 0\n"), ParseError);
}

struct SmallGroup {
    const char* name;
    std::vector<Permutation> gens;
};

TEST(PermGroup, ChainMatchesClosureOracle) {
    std::vector<SmallGroup> groups{
        {"S4", gens_of({"(1,2,3,4)", "(1,2)"}, 4)},
        {"A5", gens_of({"(1,2,3,4,5)", "(1,2,3)"}, 5)},
        {"S5", gens_of({"(1,2,3,4,5)", "(1,2)"}, 5)},
        {"D8 on 8", gens_of({"(1,2,3,4,5,6,7,8)", "(2,8)(3,7)(4,6)"}, 8)},
        {"8-point", gens_of({"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)", "(1,8)(2,7)(3,4)(5,6)"}, 8)},
        {"2^3", gens_of({"(1,2)", "(3,4)", "(5,6)"}, 6)},
    };
    for (const auto& g : groups) {
        SCOPED_TRACE(g.name);
        auto elems = closure(g.gens);
        auto chain = build_chain(g.gens);
        EXPECT_NO_THROW(chain.verify());
        EXPECT_EQ(chain.order(), BigInt(elems.size()));
        EXPECT_EQ(spectrum_exhaustive(chain).elements(), naive_orders(elems));
        EXPECT_EQ(enumerate_orders(chain, kDefaultExhaustiveCap, 1).visited, elems.size());
        for (const auto& e : elems) EXPECT_TRUE(contains(chain, Permutation::from_images(e)));
    }
}

TEST(PermGroup, MembershipRejectsOutsiders) {
    auto a5 = build_chain(gens_of({"(1,2,3,4,5)", "(1,2,3)"}, 5));
    EXPECT_FALSE(contains(a5, parse_cycles("(1,2)", 5)));
    EXPECT_TRUE(contains(a5, parse_cycles("(1,2)(3,4)", 5)));
    auto [res, level] = a5.sift(parse_cycles("(1,2)", 5));
    EXPECT_FALSE(res.is_identity() && level == a5.base().size());
}

TEST(PermGroup, TrivialAndIdentityGenerators) {
    auto t = build_chain(gens_of({"()"}, 3));
    EXPECT_EQ(t.order(), BigInt(1));
    EXPECT_EQ(spectrum_exhaustive(t).elements(), (std::vector<Order>{1}));
    EXPECT_EQ(build_chain({}).order(), BigInt(1));
}

TEST(PermGroup, DegreeMismatchIsValidationError) {
    std::vector<Permutation> g{parse_cycles("(1,2)", 3), parse_cycles("(1,2)", 4)};
    EXPECT_THROW(build_chain(g, 3), ValidationError);
}

TEST(PermGroup, CapExceeded) {
    auto s5 = build_chain(gens_of({"(1,2,3,4,5)", "(1,2)"}, 5));
    EXPECT_THROW(enumerate_orders(s5, 100), CapExceeded);
}

TEST(PermGroup, ThreadCountDoesNotChangeResult) {
    auto gf = read_generator_file(data("generators/m11.gens"));
    auto g = build_chain(gf.generators, gf.degree);
    auto a = enumerate_orders(g, kDefaultExhaustiveCap, 1);
    auto b = enumerate_orders(g, kDefaultExhaustiveCap, 4);
    EXPECT_EQ(a.spectrum, b.spectrum);
    EXPECT_EQ(a.visited, 7920u);
}

TEST(PermGroup, SampleIsDeterministicSubset) {
    auto gf = read_generator_file(data("generators/m12.gens"));
    auto g = build_chain(gf.generators, gf.degree);
    auto full = spectrum_exhaustive(g);
    auto s1 = spectrum_sample(g, 3000, 42);
    auto s2 = spectrum_sample(g, 3000, 42);
    EXPECT_EQ(s1, s2);
    EXPECT_TRUE(subset(s1, full));
    EXPECT_EQ(maximal_elements(s1), maximal_elements(full));
}

TEST(PermGroup, SampledElementsAreMembers) {
    auto a5 = build_chain(gens_of({"(1,2,3,4,5)", "(1,2,3)"}, 5));
    ProductReplacement pr(a5, 9);
    for (int i = 0; i < 200; ++i) EXPECT_TRUE(contains(a5, pr.next()));
}

TEST(PermGroup, ShippedGeneratorOrders) {
    std::map<std::string, BigInt> want{
        {"a5", 60},           {"l2-7", 168},        {"a6", 360},          {"l2-8", 504},
        {"l2-11", 660},       {"a7", 2520},         {"u3-3", 6048},       {"m11", 7920},
        {"a8", 20160},        {"l3-4", 20160},      {"u4-2", 25920},      {"l2-49", 58800},
        {"m12", 95040},       {"u3-5", 126000},     {"a9", 181440},       {"m22", 443520},
        {"j2", 604800},       {"s6-2", 1451520},    {"aut-m12", 190080},  {"aut-m22", 887040},
        {"aut-j2", 1209600},  {"aut-he", BigInt(8060774400)}, {"aut-mcl", BigInt(1796256000)},
        {"aut-suz", BigInt("896690995200")},
    };
    for (const auto& [stem, order] : want) {
        SCOPED_TRACE(stem);
        auto gf = read_generator_file(data("generators/" + stem + ".gens"));
        EXPECT_EQ(build_chain(gf.generators, gf.degree).order(), order);
    }
}
