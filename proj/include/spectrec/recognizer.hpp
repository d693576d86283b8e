#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spectrec/catalog.hpp"
#include "spectrec/prime_graph.hpp"
#include "spectrec/spectrum.hpp"

namespace spectrec {

inline constexpr const char* kEngineVersion = "spectrec 1.0.0";

enum class RuleKind {
    SpectrumWitness,
    OutPowerArgument,
    FrobeniusExclusionConflict,
    ModuleFactConflict,
    QuotientCaseSplit,
};

std::string to_string(RuleKind k);

struct RecognizerOptions {
    bool all_rules = false;           // evaluate every rule, not only the first that fires
    bool frobenius_product = false;   // also apply the |C| * prod(pi(N)) variant of the Frobenius lemma
    bool verify_matrices = true;      // check module facts against their matrix files
};

// Prime p cannot divide |N|: witness F:C with (|F|, p) = 1 and p|C| outside the target.
struct PrimeExclusion {
    Order prime = 0;
    FrobeniusWitness witness;
    Order product = 0;
};

struct Elimination {
    std::string candidate;
    RuleKind rule = RuleKind::SpectrumWitness;
    Order witness = 0;           // SpectrumWitness
    std::vector<Order> primes;   // OutPowerArgument: primes outside |Aut(S)|; Frobenius/module: the clause
    std::string summary;         // text after "ELIMINATED <name>: "
    std::vector<std::string> details;
    std::vector<std::string> assumptions;
    std::vector<std::string> citations;
};

struct QuotientAnalysis {
    std::string quotient;
    bool excluded = false;
    bool trivial_n_possible = false;  // N = 1 is consistent
    std::vector<Order> allowed_primes;  // primes that may still divide |N|
    std::string verdict;
    std::vector<std::string> details;
    std::vector<std::string> citations;
};

struct SurvivorAnalysis {
    std::string candidate;
    std::vector<PrimeExclusion> exclusions;
    std::vector<Order> allowed_primes;
    std::string n_summary;  // e.g. "N is a 2-group"
    std::vector<QuotientAnalysis> quotients;
    bool resolved = false;
    std::string status;
};

struct SocleStep {
    Order prime = 0;
    Order product = 0;  // 3p
    bool fires = false;
};

struct SocleDerivation {
    std::vector<SocleStep> steps;
    bool conclusive = false;
    std::string conclusion;
    std::vector<std::string> citations;
};

struct SolubleConstraint {
    std::array<Order, 3> triple{};
    std::string statement;
    std::vector<std::string> citations;
};

struct PoolDerivation {
    std::string rule;
    std::optional<Order> required_prime;
    std::vector<std::string> lines;
    std::vector<std::string> citations;
};

struct RecognitionReport {
    std::string target_name;
    MuSet target_mu{{1}};
    std::vector<Order> primes;
    std::vector<std::pair<Order, Order>> edges;
    std::vector<std::vector<Order>> components;
    std::vector<std::array<Order, 3>> nonadjacent;
    std::vector<SolubleConstraint> soluble;
    SocleDerivation socle;
    std::optional<std::string> imported_axiom;
    std::vector<std::string> candidate_pool;
    PoolDerivation pool_derivation;
    std::vector<Elimination> eliminations;
    std::map<std::string, std::vector<Elimination>> additional_rules;  // with all_rules
    std::vector<SurvivorAnalysis> survivors;
    std::string engine_version = kEngineVersion;
    bool seed_independent = true;

    std::vector<std::string> survivor_names() const;
};

// Pool for a target spectrum: simple groups with all primes at most the
// largest target prime, restricted to those divisible by a prime the engine
// derives must divide |S|. Throws UnsupportedTarget when the target has no
// primes or exceeds the complete part of the catalog.
std::vector<const SimpleGroupRecord*> candidate_pool(const MuSet& target_mu, const Catalog& c,
                                                     PoolDerivation* derivation = nullptr);

SocleDerivation socle_simplicity_derivation(const MuSet& target_mu, const Catalog& c);

// Primes p of the target excluded from |N| by a Frobenius witness of r.
std::map<Order, PrimeExclusion> frobenius_exclusions(const SimpleGroupRecord& r, const MuSet& target_mu);

std::vector<SolubleConstraint> soluble_part_constraint(const MuSet& target_mu, const Catalog& c);

// Applies the rules in order: spectrum witness, out-power argument,
// Frobenius exclusion conflict, module fact conflict, quotient case split.
// Returns the first firing rule, or nullopt if r survives.
std::optional<Elimination> eliminate(const SimpleGroupRecord& r, const MuSet& target_mu, const Catalog& c,
                                     const RecognizerOptions& opts = {},
                                     const std::optional<ImportedReduction>& reduction = std::nullopt);
// Every firing rule, in rule order.
std::vector<Elimination> eliminate_all(const SimpleGroupRecord& r, const MuSet& target_mu, const Catalog& c,
                                       const RecognizerOptions& opts = {},
                                       const std::optional<ImportedReduction>& reduction = std::nullopt);

SurvivorAnalysis analyze_survivor(const SimpleGroupRecord& r, const MuSet& target_mu, const Catalog& c,
                                  const RecognizerOptions& opts = {},
                                  const std::optional<ImportedReduction>& reduction = std::nullopt);

// Named target from the catalog.
RecognitionReport recognize(const std::string& target_name, const Catalog& c, const RecognizerOptions& opts = {});
// Explicit spectrum; reported under the name "custom".
RecognitionReport recognize(const MuSet& target_mu, const Catalog& c, const RecognizerOptions& opts = {});

enum class ReportFormat { Text, Json };

// Throws UsageError for anything but "text" or "json".
ReportFormat parse_format(const std::string& name);
std::string render_report(const RecognitionReport& rep, ReportFormat format);

}  // namespace spectrec
