#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "spectrec/errors.hpp"
#include "spectrec/modlinalg.hpp"

using namespace spectrec;

namespace {

ModMatrix random_invertible(std::mt19937_64& rng, std::uint32_t p, std::size_t dim) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    for (;;) {
        ModMatrix t(p, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) t.set(r, c, d(rng));
        if (t.rank() == dim) return t;
    }
}

// Least k with T^k = I by repeated multiplication.
std::uint64_t naive_order(const ModMatrix& t) {
    auto id = ModMatrix::identity(t.p(), t.dim());
    auto x = t;
    for (std::uint64_t k = 1;; ++k) {
        if (x == id) return k;
        x = x * t;
    }
}

}  // namespace

TEST(ModMatrix, Arithmetic) {
    ModMatrix a(5, {{1, 2}, {3, 4}});
    ModMatrix b(5, {{0, 1}, {1, 0}});
    EXPECT_EQ(a * b, ModMatrix(5, {{2, 1}, {4, 3}}));
    EXPECT_EQ(a + b, ModMatrix(5, {{1, 3}, {4, 4}}));
    EXPECT_EQ(a - a, ModMatrix(5, 2));
    EXPECT_EQ(ModMatrix(5, {{-1, 7}, {0, 0}}).at(0, 0), 4u);
    EXPECT_EQ(a.rank(), 2u);
    EXPECT_EQ(ModMatrix(3, {{1, 2}, {2, 1}}).rank(), 1u);
    EXPECT_THROW(ModMatrix(4, 2), ValidationError);
    EXPECT_THROW(a * ModMatrix(7, 2), ValidationError);
}

TEST(ModMatrix, PowerAndOrderMatchNaive) {
    std::mt19937_64 rng(1);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (std::size_t dim = 1; dim <= 3; ++dim) {
            for (int i = 0; i < 20; ++i) {
                auto t = random_invertible(rng, p, dim);
                std::uint64_t k = naive_order(t);
                EXPECT_EQ(matrix_order(t), BigInt(k));
                EXPECT_TRUE(pow(t, k).is_identity());
                EXPECT_EQ(pow(t, BigInt(k + 1)), t);
            }
        }
    }
}

TEST(ModMatrix, SingularOrderThrows) {
    EXPECT_THROW(matrix_order(ModMatrix(3, {{1, 1}, {1, 1}})), SingularError);
}

TEST(ModMatrix, FixedSpace) {
    EXPECT_EQ(fixed_space_dim(ModMatrix::identity(2, 4)), 4u);
    EXPECT_EQ(fixed_space_dim(ModMatrix(2, {{0, 1}, {1, 1}})), 0u);  // order 3 on GF(4)
}

TEST(Coset, UniformOrderAgreesWithBruteForce) {
    std::mt19937_64 rng(2024);
    int cases = 0;
    while (cases < 600) {
        std::uint32_t p = std::array<std::uint32_t, 4>{2, 3, 5, 7}[rng() % 4];
        std::size_t dim = 1 + rng() % 3;
        auto t = random_invertible(rng, p, dim);
        std::uint64_t k = naive_order(t);
        for (std::uint64_t m = k; m <= 12; m += k) {
            auto orders = coset_orders_bruteforce(t, m);
            bool all_m = std::all_of(orders.begin(), orders.end(), [&](std::uint64_t o) { return o == m; });
            EXPECT_EQ(coset_uniform_order(t, m), all_m);
            // Otherwise some element has order m*p.
            if (!all_m) EXPECT_NE(std::find(orders.begin(), orders.end(), m * p), orders.end());
            EXPECT_EQ(orders.size(), static_cast<std::size_t>(std::pow(p, dim)));
            ++cases;
        }
    }
}

TEST(Coset, TelescopingIdentity) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::uint32_t> d(0, 6);
    for (int i = 0; i < 1000; ++i) {
        std::uint32_t p = std::array<std::uint32_t, 4>{2, 3, 5, 7}[rng() % 4];
        std::size_t dim = 1 + rng() % 4;
        ModMatrix t(p, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) t.set(r, c, d(rng));
        std::uint64_t m = 1 + rng() % 40;
        auto id = ModMatrix::identity(p, dim);
        EXPECT_EQ(power_sum(t, m) * (t - id), pow(t, m) - id);
    }
}

TEST(Coset, PreconditionAndCap) {
    ModMatrix t(2, {{0, 1}, {1, 1}});
    EXPECT_THROW(coset_uniform_order(t, 2), PreconditionError);
    EXPECT_THROW(coset_orders_bruteforce(t, 3, 2), CapExceeded);
    EXPECT_TRUE(coset_uniform_order(t, 3));
    EXPECT_FALSE(coset_uniform_order(ModMatrix::identity(2, 2), 1));
}

TEST(MatrixFile, ParseAndErrors) {
    auto mf = parse_matrix_text("gfp 3 2\n# source\n1 2\n0 1\n");
    EXPECT_EQ(mf.matrix.p(), 3u);
    EXPECT_EQ(mf.provenance, "source");
    EXPECT_EQ(matrix_order(mf.matrix), BigInt(3));
    EXPECT_THROW(parse_matrix_text("gfp 3 2\n1 3\n0 1\n"), ValidationError);
    EXPECT_THROW(parse_matrix_text("gfp 3 2\n1 2\n"), ValidationError);
    EXPECT_THROW(parse_matrix_text("gf 3 2\n1 0\n0 1\n"), ValidationError);
}

TEST(MatrixFile, ShippedModules) {
    struct Case {
        const char* file;
        std::uint64_t order;
        bool doubling;
    };
    for (const auto& c : {Case{"m12-10-8a-1.mat", 8, true}, Case{"m22-10-8a-1.mat", 8, true},
                          Case{"m22-10-8a-2.mat", 8, true}, Case{"s8-6-10a-1.mat", 10, true},
                          Case{"j2.2-12-10a-1.mat", 10, true}}) {
        SCOPED_TRACE(c.file);
        auto mf = read_matrix_file(std::string(SPECTREC_DATA_DIR) + "/modules/" + c.file);
        EXPECT_EQ(matrix_order(mf.matrix), BigInt(c.order));
        EXPECT_EQ(coset_uniform_order(mf.matrix, c.order), !c.doubling);
        EXPECT_FALSE(mf.provenance.empty());
    }
    auto fpf = read_matrix_file(std::string(SPECTREC_DATA_DIR) + "/modules/s8-8-3a-1.mat");
    EXPECT_EQ(matrix_order(fpf.matrix), BigInt(3));
    EXPECT_EQ(fixed_space_dim(fpf.matrix), 0u);
}
