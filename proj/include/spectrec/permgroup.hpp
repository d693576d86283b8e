#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectrec/numtheory.hpp"
#include "spectrec/spectrum.hpp"

namespace spectrec {

using Point = std::uint32_t;

// Bijection on {0, ..., degree-1}; acts on the right, so (a * b)[x] = b[a[x]].
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::size_t degree);

    // Validates that `images` is a bijection.
    static Permutation from_images(std::vector<Point> images);

    std::size_t degree() const { return images_.size(); }
    Point operator[](Point x) const { return images_[x]; }
    const std::vector<Point>& images() const { return images_; }
    bool is_identity() const;
    Permutation inverse() const;
    // Disjoint-cycle notation with 1-based points; "()" for the identity.
    std::string to_cycles() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    bool operator==(const Permutation&) const = default;

private:
    friend class PermGroup;
    std::vector<Point> images_;
};

// Parses 1-based disjoint-cycle notation such as "(1,2)(3,4)" or "()".
Permutation parse_cycles(std::string_view text, std::size_t degree);

// lcm of the cycle lengths.
Order element_order(const Permutation& p);

struct GeneratorFile {
    std::size_t degree = 0;
    std::vector<Permutation> generators;
    std::vector<std::string> comments;  // '#' lines without the marker
};

// Line 1 `degree N`; then one generator per non-empty line not starting with '#'.
GeneratorFile parse_generator_text(std::string_view text);
GeneratorFile read_generator_file(const std::filesystem::path& path);

struct ExhaustiveResult {
    Spectrum spectrum;
    std::uint64_t visited = 0;
};

// Permutation group with a verified base and strong generating set.
class PermGroup {
public:
    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    std::vector<Point> base() const;
    // Union of the level generating sets, without duplicates, top level first.
    std::vector<Permutation> strong_generators() const;
    std::vector<std::size_t> transversal_sizes() const;
    const BigInt& order() const { return order_; }

    // Sifts p through the chain; returns the residue and the level where it
    // left the chain (base length if it sifted through every level).
    std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t start = 0) const;

    // Re-checks every Schreier generator of every level; throws std::logic_error
    // if the chain is not a stabilizer chain of the generated group.
    void verify() const;

    friend PermGroup build_chain(const std::vector<Permutation>& generators, std::size_t degree);
    friend ExhaustiveResult enumerate_orders(const PermGroup& g, std::uint64_t cap, unsigned threads);

private:
    struct Level {
        Point base = 0;
        std::vector<Permutation> gens;
        std::vector<Point> orbit;
        std::vector<std::int32_t> where;  // orbit position of each point, or -1
        std::vector<Permutation> u;       // u[j] maps base to orbit[j]
        std::vector<Permutation> uinv;
        std::vector<std::size_t> done;    // per generator: orbit prefix already verified
    };

    void add_level(Point base);
    void extend_orbit(Level& level);
    // Sifted Schreier generator u_j * s * u_{j^s}^-1 of level i.
    std::pair<Permutation, std::size_t> schreier_residue(std::size_t i, std::size_t s, std::size_t j) const;
    bool schreier_pass(std::size_t i, std::size_t& restart);

    std::size_t degree_ = 0;
    std::vector<Permutation> gens_;
    std::vector<Level> levels_;
    BigInt order_ = 1;
};

// Deterministic Schreier-Sims followed by a full verification pass. Throws
// ValidationError if a generator has a degree other than `degree`.
PermGroup build_chain(const std::vector<Permutation>& generators, std::size_t degree);
// Degree taken from the first generator; the empty list gives the trivial group on 0 points.
PermGroup build_chain(const std::vector<Permutation>& generators);

bool contains(const PermGroup& g, const Permutation& p);

inline constexpr std::uint64_t kDefaultExhaustiveCap = std::uint64_t{1} << 21;

// Visits every element once via the chain; work is split over the first-level
// transversal. threads = 0 uses the hardware concurrency. Throws CapExceeded
// when the order exceeds `cap`.
ExhaustiveResult enumerate_orders(const PermGroup& g, std::uint64_t cap = kDefaultExhaustiveCap,
                                  unsigned threads = 0);
Spectrum spectrum_exhaustive(const PermGroup& g, std::uint64_t cap = kDefaultExhaustiveCap,
                             unsigned threads = 0);

// Product replacement with an accumulator: 15 slots, 50 burn-in rounds.
class ProductReplacement {
public:
    static constexpr std::size_t kSlots = 15;
    static constexpr unsigned kBurnIn = 50;

    ProductReplacement(const PermGroup& g, std::uint64_t seed);
    const Permutation& next();

private:
    void step();

    std::vector<Permutation> slots_;
    Permutation acc_;
    std::mt19937_64 rng_;
    bool trivial_ = false;
};

// {1} together with the orders of `samples` product-replacement elements, closed
// under divisors. A subset of the true spectrum.
Spectrum spectrum_sample(const PermGroup& g, std::uint64_t samples, std::uint64_t seed);

}  // namespace spectrec
