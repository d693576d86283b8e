#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spectrec/numtheory.hpp"
#include "spectrec/spectrum.hpp"

namespace spectrec {

struct FrobeniusWitness {
    Order kernel_order = 0;      // |F|
    Order complement_order = 0;  // |C|, C cyclic
    std::string citation;

    std::string label() const;   // "7:3"
};

enum class FactKind { ForcedAdjacency, ForcedDimensions, FixedPointFreeClass, CosetOrderDoubling, ForcedOrderAmong };

std::string to_string(FactKind k);

// A consequence of modular representation data for chief factors of
// characteristic p below a quotient G/N.
struct ModuleFact {
    std::string group;                   // simple group the fact is about
    std::vector<std::string> quotients;  // quotients G/N the fact applies to
    Order characteristic = 0;
    FactKind kind = FactKind::ForcedAdjacency;

    // ForcedAdjacency: p, q with pq forced. ForcedOrderAmong: orders, one of which is forced.
    std::vector<Order> primes;
    std::vector<Order> orders;
    // ForcedDimensions: possible module dimensions.
    std::vector<std::size_t> dimensions;
    // FixedPointFreeClass / CosetOrderDoubling.
    std::string class_label;
    Order element_order = 0;
    Order absent_order = 0;  // FixedPointFreeClass: order ruled out by the fixed-point-free action

    std::optional<std::size_t> dimension;  // module dimension the fact is specific to
    std::vector<Order> context_absent;     // orders that must be absent from the target
    std::vector<std::string> matrices;     // catalog-relative matrix files
    std::vector<std::string> axioms;
    std::vector<std::string> assumptions;
    std::string citation;

    // One-line statement such as "char 2: class 8A (order 8) doubles to 16 in dim 10".
    std::string describe() const;
};

struct Extension {
    std::string name;
    Order out_order = 1;  // order of the image in Out(S)
    MuSet mu{{1}};
};

struct SimpleGroupRecord {
    std::string name;
    std::vector<std::pair<Order, unsigned>> order_factors;
    BigInt order;
    Order out_order = 1;
    std::string out_structure;
    std::optional<MuSet> mu;
    std::vector<Extension> extensions;
    bool extensions_complete = false;
    std::vector<FrobeniusWitness> frobenius_witnesses;
    std::vector<ModuleFact> module_facts;
    std::vector<std::string> citations;
    std::optional<std::string> generators;

    std::vector<Order> primes() const;
    bool divides_order(Order n) const;
    // Extension realising the full Out(S); nullptr when Out(S) = 1 or not listed.
    const Extension* full_extension() const;
    // mu(Aut(S)) when known.
    std::optional<MuSet> aut_mu() const;
};

struct ImportedReduction {
    std::string quotient;  // G/N is forced to be this group
    Order prime = 2;       // N is a prime-power group for this prime
    std::string axiom;
};

struct Target {
    std::string name;
    std::string socle;
    std::string group;
    MuSet mu{{1}};
    std::string citation;
    std::optional<std::string> generators;
    std::optional<ImportedReduction> reduction;
};

struct Axiom {
    std::string id;
    std::string statement;
    std::string citation;
};

class Catalog {
public:
    std::vector<SimpleGroupRecord> records;
    std::vector<Target> targets;
    std::vector<Axiom> axioms;
    std::filesystem::path base_dir;

    const SimpleGroupRecord* find_record(const std::string& name) const;
    const Target* find_target(const std::string& name) const;
    const Axiom* find_axiom(const std::string& id) const;
    std::filesystem::path resolve(const std::string& relative) const { return base_dir / relative; }
};

// Parses and validates a catalog document; relative paths resolve against base_dir.
Catalog parse_catalog(const std::string& json_text, const std::filesystem::path& base_dir);
Catalog load(const std::filesystem::path& path);

// Largest prime allowed in the complete part of the catalog.
inline constexpr Order kCompletePrimeBound = 11;

// Records whose order primes are all at most max_prime and, when given,
// divisible by required_prime. Catalog order.
std::vector<const SimpleGroupRecord*> subcatalog(const Catalog& c, Order max_prime,
                                                 std::optional<Order> required_prime = std::nullopt);

// (|S| |Out(S)|)^t t!
BigInt aut_order_power(const SimpleGroupRecord& r, unsigned t);

}  // namespace spectrec
