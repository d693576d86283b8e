#include "spectrec/recognizer.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#include "spectrec/errors.hpp"
#include "spectrec/modlinalg.hpp"

namespace spectrec {

namespace {

struct Quotient {
    std::string name;
    Order out_order = 1;
    const MuSet* mu = nullptr;
};

std::vector<Quotient> quotients_of(const SimpleGroupRecord& r) {
    std::vector<Quotient> q;
    q.push_back({r.name, 1, r.mu ? &*r.mu : nullptr});
    for (const auto& e : r.extensions) q.push_back({e.name, e.out_order, &e.mu});
    return q;
}

bool divides_quotient(const SimpleGroupRecord& r, Order out_order, Order p) {
    return r.divides_order(p) || out_order % p == 0;
}

std::string set_text(const std::vector<Order>& v) { return "{" + join(v) + "}"; }

std::string triple_text(const std::array<Order, 3>& t) {
    return set_text({t[0], t[1], t[2]});
}

std::string axiom_cite(const Catalog& c, const std::string& id) {
    const Axiom* a = c.find_axiom(id);
    if (!a) return "axiom " + id;
    return "axiom " + id + ": " + a->citation;
}

void add_unique(std::vector<std::string>& v, const std::string& s) {
    if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
}

const std::string kFrobeniusAssumption = "F not inside N*C_G(N)/N";

struct MatrixCheck {
    bool ok = false;
    std::vector<std::string> lines;
};

class Engine {
public:
    Engine(const Catalog& c, const MuSet& mu, const RecognizerOptions& opts,
           const std::optional<ImportedReduction>& reduction)
        : c_(c), mu_(mu), omega_(divisor_closure(mu)), primes_(primes_of(mu)), opts_(opts), red_(reduction) {}

    const Spectrum& omega() const { return omega_; }
    const std::vector<Order>& primes() const { return primes_; }

    std::map<Order, PrimeExclusion> exclusions(const SimpleGroupRecord& r) const {
        std::map<Order, PrimeExclusion> out;
        for (Order p : primes_) {
            for (const auto& w : r.frobenius_witnesses) {
                if (std::gcd(w.kernel_order, p) != 1) continue;
                Order prod = p * w.complement_order;
                if (omega_.contains(prod)) continue;
                out.emplace(p, PrimeExclusion{p, w, prod});
                break;
            }
        }
        return out;
    }

    std::vector<Elimination> run(const SimpleGroupRecord& r) {
        std::vector<Elimination> out;
        auto push = [&](std::optional<Elimination> e) {
            if (e) {
                e->candidate = r.name;
                out.push_back(std::move(*e));
            }
            return !out.empty() && !opts_.all_rules;
        };
        if (push(spectrum_witness(r))) return out;
        if (push(out_power(r))) return out;
        if (push(frobenius_conflict(r))) return out;
        if (opts_.frobenius_product && push(frobenius_product(r))) return out;
        if (push(module_conflict(r))) return out;
        push(case_split(r));
        return out;
    }

    QuotientAnalysis analyze_quotient(const SimpleGroupRecord& r, const Quotient& q,
                                      const std::map<Order, PrimeExclusion>& ex) {
        QuotientAnalysis qa;
        qa.quotient = q.name;
        if (red_ && q.name != red_->quotient) {
            qa.excluded = true;
            qa.verdict = "excluded: G/N is " + red_->quotient + " by imported reduction";
            add_unique(qa.citations, axiom_cite(c_, red_->axiom));
            return qa;
        }
        if (!q.mu) {
            qa.verdict = "no spectrum recorded";
            qa.allowed_primes = primes_;
            qa.trivial_n_possible = true;
            return qa;
        }
        Spectrum wa = divisor_closure(*q.mu);
        auto extra = witnesses_not_in(wa, omega_);
        if (!extra.empty()) {
            qa.excluded = true;
            qa.verdict = "excluded: witness " + std::to_string(best_witness(extra));
            qa.citations = r.citations;
            return qa;
        }
        auto clauses = clauses_for(r, q.out_order, wa);
        std::map<Order, std::vector<std::string>> kills;
        std::vector<std::string> kill_cites;
        for (Order p : primes_) {
            if (ex.count(p)) continue;
            auto k = kill_prime(r, p, q.name);
            if (k.killed) {
                kills.emplace(p, k.lines);
                for (auto& cte : k.citations) add_unique(kill_cites, cte);
            }
        }
        auto blocked = [&](Order p) {
            return ex.count(p) || kills.count(p) || (red_ && p != red_->prime);
        };
        for (const auto& cl : clauses) {
            if (!std::all_of(cl.primes.begin(), cl.primes.end(), blocked)) continue;
            qa.excluded = true;
            qa.verdict = "excluded: clause " + set_text(cl.primes) + " closed";
            qa.details.push_back(cl.reason);
            for (Order p : cl.primes) describe_block(p, ex, kills, qa.details);
            for (auto& cte : kill_cites) add_unique(qa.citations, cte);
            if (std::any_of(cl.primes.begin(), cl.primes.end(), [&](Order p) { return ex.count(p) > 0; })) {
                add_unique(qa.citations, axiom_cite(c_, "frobenius-normal"));
            }
            return qa;
        }
        for (Order p : primes_) {
            if (!blocked(p)) qa.allowed_primes.push_back(p);
        }
        for (const auto& [p, lines] : kills) {
            qa.details.push_back("prime " + std::to_string(p) + " cannot divide |N|:");
            for (const auto& l : lines) qa.details.push_back("  " + l);
        }
        for (auto& cte : kill_cites) add_unique(qa.citations, cte);
        if (red_) add_unique(qa.citations, axiom_cite(c_, red_->axiom));
        qa.trivial_n_possible = clauses.empty();
        if (qa.allowed_primes.empty()) {
            qa.verdict = clauses.empty() ? "N = 1" : "excluded: no prime left for N";
            qa.excluded = !clauses.empty();
        } else if (clauses.empty()) {
            qa.verdict = "N = 1 or N a nontrivial " + prime_group_text(qa.allowed_primes);
        } else {
            qa.verdict = "N a nontrivial " + prime_group_text(qa.allowed_primes);
        }
        return qa;
    }

    static std::string prime_group_text(const std::vector<Order>& ps) {
        if (ps.size() == 1) return std::to_string(ps[0]) + "-group";
        return set_text(ps) + "-group";
    }

    static Order best_witness(const std::vector<Order>& cands) {
        Order best = 0;
        std::size_t best_np = 0;
        for (Order n : cands) {
            std::size_t np = prime_divisors(n).size();
            if (best == 0 || np < best_np || (np == best_np && n < best)) {
                best = n;
                best_np = np;
            }
        }
        return best;
    }

private:
    struct Clause {
        std::vector<Order> primes;
        std::string reason;
    };

    struct Kill {
        bool killed = false;
        std::vector<std::string> lines;
        std::vector<std::string> citations;
    };

    // Sets of primes, one of which must divide |N| when G/N embeds in a
    // group with out_order and spectrum wa.
    std::vector<Clause> clauses_for(const SimpleGroupRecord& r, Order out_order, const Spectrum& wa) const {
        std::vector<Clause> out;
        for (Order p : primes_) {
            if (divides_quotient(r, out_order, p)) continue;
            out.push_back({{p}, std::to_string(p) + " divides the target order but not |G/N|, so " +
                                    std::to_string(p) + " divides |N|"});
        }
        for (Order n : witnesses_not_in(omega_, wa)) {
            auto ps = prime_divisors(n);
            std::vector<Order> v(ps.begin(), ps.end());
            out.push_back({v, std::to_string(n) + " is an element order but not one of G/N, so a prime of " +
                                  set_text(v) + " divides |N|"});
        }
        return out;
    }

    void describe_block(Order p, const std::map<Order, PrimeExclusion>& ex,
                        const std::map<Order, std::vector<std::string>>& kills,
                        std::vector<std::string>& out) const {
        if (auto it = ex.find(p); it != ex.end()) {
            out.push_back("prime " + std::to_string(p) + " excluded via " + it->second.witness.label() + ": " +
                          std::to_string(it->second.product) + " not in spectrum");
        } else if (auto k = kills.find(p); k != kills.end()) {
            out.push_back("prime " + std::to_string(p) + " excluded by module facts:");
            for (const auto& l : k->second) out.push_back("  " + l);
        } else if (red_ && p != red_->prime) {
            out.push_back("prime " + std::to_string(p) + " excluded: N is a " + std::to_string(red_->prime) +
                          "-group by imported reduction");
        }
    }

    bool applies(const ModuleFact& f, const std::string& quotient) const {
        if (std::find(f.quotients.begin(), f.quotients.end(), quotient) == f.quotients.end()) return false;
        return std::none_of(f.context_absent.begin(), f.context_absent.end(),
                            [&](Order n) { return omega_.contains(n); });
    }

    // Whether the fact's own statement conflicts with the target spectrum.
    bool conflicts(const ModuleFact& f) const {
        switch (f.kind) {
            case FactKind::ForcedAdjacency: return !omega_.contains(f.primes[0] * f.primes[1]);
            case FactKind::ForcedOrderAmong:
                return std::none_of(f.orders.begin(), f.orders.end(), [&](Order n) { return omega_.contains(n); });
            case FactKind::FixedPointFreeClass: return omega_.contains(f.absent_order);
            case FactKind::CosetOrderDoubling: return !omega_.contains(f.element_order * f.characteristic);
            case FactKind::ForcedDimensions: return false;
        }
        return false;
    }

    std::string conflict_text(const ModuleFact& f) const {
        switch (f.kind) {
            case FactKind::ForcedAdjacency:
                return std::to_string(f.primes[0] * f.primes[1]) + " not in spectrum";
            case FactKind::ForcedOrderAmong: return "none of " + set_text(f.orders) + " in spectrum";
            case FactKind::FixedPointFreeClass: return std::to_string(f.absent_order) + " in spectrum";
            case FactKind::CosetOrderDoubling:
                return std::to_string(f.element_order * f.characteristic) + " not in spectrum";
            case FactKind::ForcedDimensions: break;
        }
        return "";
    }

    const MatrixCheck& check_matrix(const ModuleFact& f, const std::string& rel) {
        auto key = rel + "|" + f.class_label;
        if (auto it = matrix_cache_.find(key); it != matrix_cache_.end()) return it->second;
        MatrixCheck mc;
        std::string head = "matrix " + rel + ": ";
        try {
            auto mf = read_matrix_file(c_.resolve(rel));
            const auto& t = mf.matrix;
            BigInt ord = matrix_order(t);
            bool shape = t.p() == f.characteristic && (!f.dimension || t.dim() == *f.dimension);
            bool order_ok = ord == f.element_order;
            std::string tail;
            bool prop = false;
            if (f.kind == FactKind::CosetOrderDoubling) {
                auto fs = power_sum(t, f.element_order);
                prop = !fs.is_zero();
                tail = "f(T) rank " + std::to_string(fs.rank());
            } else {
                std::size_t fd = fixed_space_dim(t);
                prop = fd == 0;
                tail = "fixed space dim " + std::to_string(fd);
            }
            mc.ok = shape && order_ok && prop;
            std::ostringstream os;
            os << head << "GF(" << t.p() << ") dim " << t.dim() << ", T of order " << ord << ", " << tail << ", "
               << (mc.ok ? "verified" : "check failed");
            mc.lines.push_back(os.str());
            if (!mf.provenance.empty()) mc.lines.push_back("  provenance: " + mf.provenance);
        } catch (const std::exception& e) {
            mc.ok = false;
            mc.lines.push_back(head + "unreadable (" + e.what() + ")");
        }
        return matrix_cache_.emplace(key, std::move(mc)).first->second;
    }

    // A fact with matrices is usable only if every matrix passes the check.
    bool usable(const ModuleFact& f, std::vector<std::string>& lines) {
        if (!opts_.verify_matrices || f.matrices.empty()) return true;
        bool ok = true;
        for (const auto& m : f.matrices) {
            const auto& mc = check_matrix(f, m);
            lines.insert(lines.end(), mc.lines.begin(), mc.lines.end());
            ok = ok && mc.ok;
        }
        return ok;
    }

    void cite_fact(const ModuleFact& f, Kill& k) const {
        add_unique(k.citations, f.citation);
        for (const auto& a : f.axioms) add_unique(k.citations, axiom_cite(c_, a));
    }

    Kill kill_prime(const SimpleGroupRecord& r, Order p, const std::string& quotient) {
        for (const auto& f : r.module_facts) {
            if (f.characteristic != p || f.dimension || !applies(f, quotient)) continue;
            Kill k;
            if (f.kind != FactKind::ForcedDimensions) {
                if (!conflicts(f)) continue;
                std::vector<std::string> ml;
                if (!usable(f, ml)) continue;
                k.killed = true;
                k.lines.push_back(quotient + ", " + f.describe() + "; " + conflict_text(f));
                k.lines.insert(k.lines.end(), ml.begin(), ml.end());
                cite_fact(f, k);
                for (const auto& a : f.assumptions) k.lines.push_back("assume: " + a);
                return k;
            }
            k.lines.push_back(quotient + ", " + f.describe());
            cite_fact(f, k);
            bool all = true;
            for (std::size_t d : f.dimensions) {
                bool dim_killed = false;
                for (const auto& g : r.module_facts) {
                    if (g.characteristic != p || g.dimension != d || !applies(g, quotient) || !conflicts(g)) continue;
                    std::vector<std::string> ml;
                    if (!usable(g, ml)) {
                        k.lines.insert(k.lines.end(), ml.begin(), ml.end());
                        continue;
                    }
                    k.lines.push_back("dim " + std::to_string(d) + ": " + g.describe() + "; " + conflict_text(g));
                    k.lines.insert(k.lines.end(), ml.begin(), ml.end());
                    cite_fact(g, k);
                    dim_killed = true;
                    break;
                }
                if (!dim_killed) {
                    all = false;
                    break;
                }
            }
            if (all) {
                k.killed = true;
                for (const auto& a : f.assumptions) k.lines.push_back("assume: " + a);
                return k;
            }
        }
        return {};
    }

    std::optional<Elimination> spectrum_witness(const SimpleGroupRecord& r) const {
        if (!r.mu) return std::nullopt;
        auto extra = witnesses_not_in(divisor_closure(*r.mu), omega_);
        if (extra.empty()) return std::nullopt;
        Elimination e;
        e.rule = RuleKind::SpectrumWitness;
        e.witness = best_witness(extra);
        e.summary = "witness " + std::to_string(e.witness);
        e.details.push_back(std::to_string(e.witness) + " is an element order of " + r.name +
                            " but not of the target");
        e.citations = r.citations;
        return e;
    }

    std::optional<Elimination> out_power(const SimpleGroupRecord& r) const {
        // Triple with the most primes outside |Aut(S)|, the largest on ties.
        std::optional<std::array<Order, 3>> best;
        std::vector<Order> outside;
        for (const auto& t : nonadjacent_triples(build(mu_))) {
            std::vector<Order> o;
            for (Order p : t) {
                if (!divides_quotient(r, r.out_order, p)) o.push_back(p);
            }
            if (o.size() >= 2 && o.size() >= outside.size()) {
                best = t;
                outside = o;
            }
        }
        if (best) {
            const auto& t = *best;
            Elimination e;
            e.rule = RuleKind::OutPowerArgument;
            e.primes = outside;
            e.summary = "out-power " + join(outside) + " in triple " + triple_text(t);
            e.details.push_back(join(outside, ", ") + " divide neither |" + r.name + "| nor |Out(" + r.name +
                                ")| = " + std::to_string(r.out_order) + ", so they divide the soluble radical");
            e.details.push_back("at most one prime of the nonadjacent triple " + triple_text(t) +
                                " divides the soluble radical");
            e.citations = {axiom_cite(c_, "soluble-independence"), axiom_cite(c_, "thompson-fpf")};
            return e;
        }
        return std::nullopt;
    }

    // Clauses valid for every quotient G/N <= Aut(S).
    std::vector<Clause> aut_clauses(const SimpleGroupRecord& r) const {
        auto am = r.aut_mu();
        return clauses_for(r, r.out_order, am ? divisor_closure(*am) : omega_);
    }

    std::optional<Elimination> frobenius_conflict(const SimpleGroupRecord& r) const {
        auto ex = exclusions(r);
        for (const auto& cl : aut_clauses(r)) {
            if (!std::all_of(cl.primes.begin(), cl.primes.end(), [&](Order p) { return ex.count(p) > 0; })) continue;
            Elimination e;
            e.rule = RuleKind::FrobeniusExclusionConflict;
            e.primes = cl.primes;
            std::string parts;
            for (Order p : cl.primes) {
                const auto& x = ex.at(p);
                if (!parts.empty()) parts += ", ";
                parts += std::to_string(p) + " via " + x.witness.label() + " (" + std::to_string(x.product) + ")";
            }
            e.summary = "frobenius clause " + set_text(cl.primes) + ": " + parts;
            e.details.push_back(cl.reason);
            describe_frobenius(cl.primes, ex, e);
            return e;
        }
        return std::nullopt;
    }

    void describe_frobenius(const std::vector<Order>& ps, const std::map<Order, PrimeExclusion>& ex,
                            Elimination& e) const {
        for (Order p : ps) {
            auto it = ex.find(p);
            if (it == ex.end()) continue;
            const auto& x = it->second;
            e.details.push_back("prime " + std::to_string(p) + " excluded via " + x.witness.label() + ": " +
                                std::to_string(p) + "*" + std::to_string(x.witness.complement_order) + " = " +
                                std::to_string(x.product) + " not in spectrum");
            add_unique(e.citations, x.witness.citation);
        }
        add_unique(e.citations, axiom_cite(c_, "frobenius-normal"));
        add_unique(e.assumptions, kFrobeniusAssumption);
    }

    std::optional<Elimination> frobenius_product(const SimpleGroupRecord& r) const {
        std::vector<Order> forced;
        for (const auto& cl : aut_clauses(r)) {
            if (cl.primes.size() == 1) forced.push_back(cl.primes[0]);
        }
        if (forced.empty()) return std::nullopt;
        Order prod = std::accumulate(forced.begin(), forced.end(), Order{1}, std::multiplies<>());
        for (const auto& w : r.frobenius_witnesses) {
            if (std::gcd(w.kernel_order, prod) != 1) continue;
            Order n = w.complement_order * prod;
            if (omega_.contains(n)) continue;
            Elimination e;
            e.rule = RuleKind::FrobeniusExclusionConflict;
            e.primes = forced;
            e.summary = "frobenius product via " + w.label() + " (" + std::to_string(n) + ")";
            e.details.push_back(set_text(forced) + " divide |N|; " + std::to_string(w.complement_order) + "*" +
                                std::to_string(prod) + " = " + std::to_string(n) + " not in spectrum");
            e.citations = {w.citation, axiom_cite(c_, "frobenius-normal")};
            e.assumptions = {kFrobeniusAssumption, "the preimage of F in G is a Frobenius group"};
            return e;
        }
        return std::nullopt;
    }

    bool universal_quotients(const SimpleGroupRecord& r) const { return r.extensions_complete || r.out_order == 1; }

    std::optional<Elimination> module_conflict(const SimpleGroupRecord& r) {
        if (!universal_quotients(r)) return std::nullopt;
        auto ex = exclusions(r);
        auto qs = quotients_of(r);
        std::map<Order, Kill> kills;
        for (Order p : primes_) {
            if (ex.count(p)) continue;
            Kill first;
            bool all = true;
            for (const auto& q : qs) {
                auto k = kill_prime(r, p, q.name);
                if (!k.killed) {
                    all = false;
                    break;
                }
                if (!first.killed) first = std::move(k);
            }
            if (all) kills.emplace(p, std::move(first));
        }
        if (kills.empty()) return std::nullopt;
        for (const auto& cl : aut_clauses(r)) {
            bool closed = std::all_of(cl.primes.begin(), cl.primes.end(),
                                      [&](Order p) { return ex.count(p) || kills.count(p); });
            if (!closed) continue;
            Elimination e;
            e.rule = RuleKind::ModuleFactConflict;
            e.primes = cl.primes;
            e.summary = "module clause " + set_text(cl.primes);
            e.details.push_back(cl.reason);
            std::vector<Order> fro;
            for (Order p : cl.primes) {
                if (auto it = kills.find(p); it != kills.end()) {
                    e.details.push_back("prime " + std::to_string(p) + " excluded by module facts:");
                    for (const auto& l : it->second.lines) e.details.push_back("  " + l);
                    for (const auto& cte : it->second.citations) add_unique(e.citations, cte);
                } else {
                    fro.push_back(p);
                }
            }
            if (!fro.empty()) describe_frobenius(fro, ex, e);
            return e;
        }
        return std::nullopt;
    }

    std::optional<Elimination> case_split(const SimpleGroupRecord& r) {
        if (!universal_quotients(r)) return std::nullopt;
        auto ex = exclusions(r);
        std::vector<QuotientAnalysis> qas;
        for (const auto& q : quotients_of(r)) {
            auto qa = analyze_quotient(r, q, ex);
            if (!qa.excluded) return std::nullopt;
            qas.push_back(std::move(qa));
        }
        Elimination e;
        e.rule = RuleKind::QuotientCaseSplit;
        std::vector<std::string> names;
        for (const auto& qa : qas) names.push_back(qa.quotient);
        std::string ns;
        for (const auto& n : names) ns += (ns.empty() ? "" : ", ") + n;
        e.summary = "quotient case split over " + ns;
        for (const auto& qa : qas) {
            e.details.push_back("quotient " + qa.quotient + ": " + qa.verdict);
            for (const auto& d : qa.details) e.details.push_back("  " + d);
            for (const auto& cte : qa.citations) add_unique(e.citations, cte);
        }
        if (!ex.empty()) {
            add_unique(e.assumptions, kFrobeniusAssumption);
        }
        if (e.citations.empty()) e.citations = r.citations;
        return e;
    }

    const Catalog& c_;
    const MuSet& mu_;
    Spectrum omega_;
    std::vector<Order> primes_;
    const RecognizerOptions& opts_;
    const std::optional<ImportedReduction>& red_;
    std::map<std::string, MatrixCheck> matrix_cache_;
};

// Largest target prime p with 3p absent, when every pool record avoiding p
// is excluded by a Frobenius witness for p.
std::optional<Order> derive_required_prime(const MuSet& mu, const std::vector<const SimpleGroupRecord*>& pool,
                                           const Catalog& c, PoolDerivation* d) {
    auto g = build(mu);
    if (!nonadjacent_triples(g).empty()) return std::nullopt;
    auto ps = primes_of(mu);
    Order p = ps.back();
    Spectrum om = divisor_closure(mu);
    if (p <= 3 || om.contains(3 * p)) return std::nullopt;
    std::vector<std::string> lines;
    for (const auto* r : pool) {
        if (r->divides_order(p) || r->out_order % p == 0) continue;
        bool found = false;
        for (const auto& w : r->frobenius_witnesses) {
            if (std::gcd(w.kernel_order, p) == 1 && !om.contains(p * w.complement_order)) {
                lines.push_back(r->name + ": " + std::to_string(p) + " divides |N| yet is excluded via " + w.label() +
                                " (" + std::to_string(p * w.complement_order) + " not in spectrum)");
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    if (d) {
        d->lines = std::move(lines);
        d->citations.push_back(axiom_cite(c, "frobenius-normal"));
    }
    return p;
}

}  // namespace

std::string to_string(RuleKind k) {
    switch (k) {
        case RuleKind::SpectrumWitness: return "SpectrumWitness";
        case RuleKind::OutPowerArgument: return "OutPowerArgument";
        case RuleKind::FrobeniusExclusionConflict: return "FrobeniusExclusionConflict";
        case RuleKind::ModuleFactConflict: return "ModuleFactConflict";
        case RuleKind::QuotientCaseSplit: return "QuotientCaseSplit";
    }
    return "?";
}

std::vector<std::string> RecognitionReport::survivor_names() const {
    std::vector<std::string> out;
    for (const auto& s : survivors) out.push_back(s.candidate);
    return out;
}

std::vector<const SimpleGroupRecord*> candidate_pool(const MuSet& target_mu, const Catalog& c,
                                                     PoolDerivation* derivation) {
    auto ps = primes_of(target_mu);
    if (ps.empty()) throw UnsupportedTarget("target spectrum has no prime divisors");
    Order maxp = ps.back();
    if (maxp > kCompletePrimeBound) {
        throw UnsupportedTarget("target prime " + std::to_string(maxp) + " exceeds the complete catalog bound " +
                                std::to_string(kCompletePrimeBound));
    }
    auto pool = subcatalog(c, maxp);
    PoolDerivation d;
    d.rule = "simple groups with all primes at most " + std::to_string(maxp);
    if (auto req = derive_required_prime(target_mu, pool, c, &d)) {
        d.required_prime = req;
        d.rule += " and divisible by " + std::to_string(*req);
        d.lines.insert(d.lines.begin(), std::to_string(*req) + " divides |S|: " + std::to_string(3 * *req) +
                                            " not in spectrum, and every candidate prime to " +
                                            std::to_string(*req) + " fails:");
        pool = subcatalog(c, maxp, req);
    } else {
        d.lines.clear();
        d.citations.clear();
    }
    d.citations.push_back(axiom_cite(c, "out-s11"));
    if (derivation) *derivation = std::move(d);
    return pool;
}

SocleDerivation socle_simplicity_derivation(const MuSet& target_mu, const Catalog& c) {
    SocleDerivation d;
    auto om = divisor_closure(target_mu);
    for (Order p : primes_of(target_mu)) {
        if (p != 7 && p != 11) continue;
        d.steps.push_back({p, 3 * p, !om.contains(3 * p)});
    }
    d.conclusive = std::any_of(d.steps.begin(), d.steps.end(), [](const SocleStep& s) { return s.fires; });
    d.conclusion = d.conclusive ? "socle is a single simple group" : "inconclusive";
    if (d.conclusive) {
        d.citations = {axiom_cite(c, "aut-direct-power")};
    }
    return d;
}

std::map<Order, PrimeExclusion> frobenius_exclusions(const SimpleGroupRecord& r, const MuSet& target_mu) {
    Catalog empty;
    RecognizerOptions opts;
    std::optional<ImportedReduction> none;
    return Engine(empty, target_mu, opts, none).exclusions(r);
}

std::vector<SolubleConstraint> soluble_part_constraint(const MuSet& target_mu, const Catalog& c) {
    std::vector<SolubleConstraint> out;
    for (const auto& t : nonadjacent_triples(build(target_mu))) {
        SolubleConstraint s;
        s.triple = t;
        s.statement = "at most one of " + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
                      std::to_string(t[2]) + " divides the maximal normal soluble subgroup";
        s.citations = {axiom_cite(c, "soluble-independence"), axiom_cite(c, "thompson-fpf")};
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Elimination> eliminate_all(const SimpleGroupRecord& r, const MuSet& target_mu, const Catalog& c,
                                       const RecognizerOptions& opts,
                                       const std::optional<ImportedReduction>& reduction) {
    RecognizerOptions o = opts;
    o.all_rules = true;
    Engine eng(c, target_mu, o, reduction);
    return eng.run(r);
}

std::optional<Elimination> eliminate(const SimpleGroupRecord& r, const MuSet& target_mu, const Catalog& c,
                                     const RecognizerOptions& opts,
                                     const std::optional<ImportedReduction>& reduction) {
    RecognizerOptions o = opts;
    o.all_rules = false;
    Engine eng(c, target_mu, o, reduction);
    auto v = eng.run(r);
    if (v.empty()) return std::nullopt;
    return v.front();
}

SurvivorAnalysis analyze_survivor(const SimpleGroupRecord& r, const MuSet& target_mu, const Catalog& c,
                                  const RecognizerOptions& opts,
                                  const std::optional<ImportedReduction>& reduction) {
    Engine eng(c, target_mu, opts, reduction);
    SurvivorAnalysis s;
    s.candidate = r.name;
    auto ex = eng.exclusions(r);
    for (const auto& [p, x] : ex) s.exclusions.push_back(x);
    for (Order p : eng.primes()) {
        if (ex.count(p)) continue;
        if (reduction && p != reduction->prime) continue;
        s.allowed_primes.push_back(p);
    }
    s.n_summary = s.allowed_primes.empty() ? "N = 1" : "N is a " + Engine::prime_group_text(s.allowed_primes);
    for (const auto& q : quotients_of(r)) s.quotients.push_back(eng.analyze_quotient(r, q, ex));
    std::vector<const QuotientAnalysis*> open;
    for (const auto& qa : s.quotients) {
        if (!qa.excluded) open.push_back(&qa);
    }
    s.resolved = r.extensions_complete && open.size() == 1 && open[0]->trivial_n_possible &&
                 open[0]->allowed_primes.empty();
    s.status = s.resolved ? "resolved: N = 1, G = " + open[0]->quotient : "unresolved survivor (open problem)";
    return s;
}

namespace {

RecognitionReport run_recognition(const std::string& name, const MuSet& mu, const Catalog& c,
                                  const RecognizerOptions& opts, const Target* target) {
    RecognitionReport rep;
    rep.target_name = name;
    rep.target_mu = mu;
    rep.primes = primes_of(mu);
    auto g = build(mu);
    rep.edges = g.edges();
    rep.components = components(g);
    rep.nonadjacent = nonadjacent_triples(g);
    rep.soluble = soluble_part_constraint(mu, c);
    rep.socle = socle_simplicity_derivation(mu, c);

    std::optional<ImportedReduction> reduction;
    std::vector<const SimpleGroupRecord*> pool;
    if (target && target->reduction) {
        reduction = target->reduction;
        const auto* r = c.find_record(target->socle);
        if (!r) throw UnsupportedTarget("socle '" + target->socle + "' not in catalog");
        pool.push_back(r);
        rep.imported_axiom = reduction->axiom;
        rep.pool_derivation.rule = "imported reduction: G/N = " + reduction->quotient + " with N a " +
                                   std::to_string(reduction->prime) + "-group";
        rep.pool_derivation.citations.push_back(axiom_cite(c, reduction->axiom));
    } else {
        pool = candidate_pool(mu, c, &rep.pool_derivation);
    }
    for (const auto* r : pool) rep.candidate_pool.push_back(r->name);

    Engine eng(c, mu, opts, reduction);
    for (const auto* r : pool) {
        auto es = eng.run(*r);
        if (es.empty()) {
            rep.survivors.push_back(analyze_survivor(*r, mu, c, opts, reduction));
            continue;
        }
        rep.eliminations.push_back(es.front());
        if (es.size() > 1) rep.additional_rules[r->name].assign(es.begin() + 1, es.end());
    }
    return rep;
}

}  // namespace

RecognitionReport recognize(const std::string& target_name, const Catalog& c, const RecognizerOptions& opts) {
    const Target* t = c.find_target(target_name);
    if (!t) throw UnsupportedTarget("unknown target '" + target_name + "'");
    return run_recognition(t->name, t->mu, c, opts, t);
}

RecognitionReport recognize(const MuSet& target_mu, const Catalog& c, const RecognizerOptions& opts) {
    return run_recognition("custom", target_mu, c, opts, nullptr);
}

ReportFormat parse_format(const std::string& name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "json") return ReportFormat::Json;
    throw UsageError("unknown format '" + name + "' (expected text or json)");
}

namespace {

void text_block(std::ostringstream& os, const std::vector<std::string>& details,
                const std::vector<std::string>& assumptions, const std::vector<std::string>& citations) {
    for (const auto& d : details) os << "  " << d << "\n";
    for (const auto& a : assumptions) os << "  assume: " << a << "\n";
    for (const auto& c : citations) os << "  cite: " << c << "\n";
}

std::string render_text(const RecognitionReport& rep) {
    std::ostringstream os;
    os << "REPORT " << rep.target_name << "\n";
    os << "ENGINE " << rep.engine_version << "\n";
    os << "SEED-INDEPENDENT " << (rep.seed_independent ? "yes" : "no") << "\n";
    os << "MU " << join(rep.target_mu.elements()) << "\n";
    os << "PRIMES " << join(rep.primes) << "\n";
    os << "GK EDGES";
    for (const auto& [p, q] : rep.edges) os << " " << p << "-" << q;
    os << "\nGK COMPONENTS";
    for (const auto& comp : rep.components) os << " " << set_text(comp);
    os << "\nGK NONADJACENT";
    if (rep.nonadjacent.empty()) os << " none";
    for (const auto& t : rep.nonadjacent) os << " " << triple_text(t);
    os << "\n";
    if (rep.soluble.empty()) os << "SOLUBLE none\n";
    for (const auto& s : rep.soluble) {
        os << "SOLUBLE " << triple_text(s.triple) << ": " << s.statement << "\n";
        text_block(os, {}, {}, s.citations);
    }
    for (const auto& st : rep.socle.steps) {
        os << "SOCLE p=" << st.prime << ": " << st.product << (st.fires ? " not in spectrum" : " in spectrum")
           << "\n";
    }
    os << "SOCLE " << rep.socle.conclusion << "\n";
    text_block(os, {}, {}, rep.socle.citations);
    os << "POOL " << rep.candidate_pool.size() << ":";
    for (const auto& n : rep.candidate_pool) os << " " << n;
    os << "\nPOOL RULE " << rep.pool_derivation.rule << "\n";
    text_block(os, rep.pool_derivation.lines, {}, rep.pool_derivation.citations);
    for (const auto& e : rep.eliminations) {
        os << "ELIMINATED " << e.candidate << ": " << e.summary << "\n";
        text_block(os, e.details, e.assumptions, e.citations);
        if (auto it = rep.additional_rules.find(e.candidate); it != rep.additional_rules.end()) {
            for (const auto& a : it->second) os << "  also: " << to_string(a.rule) << ": " << a.summary << "\n";
        }
    }
    for (const auto& s : rep.survivors) {
        os << "SURVIVOR " << s.candidate << ": " << s.status << "\n";
        os << "  frobenius exclusions: " << s.n_summary << "\n";
        for (const auto& x : s.exclusions) {
            os << "  exclude " << x.prime << " via " << x.witness.label() << ": " << x.product
               << " not in spectrum\n";
        }
        if (!s.exclusions.empty()) os << "  assume: " << kFrobeniusAssumption << "\n";
        for (const auto& q : s.quotients) {
            os << "  quotient " << q.quotient << ": " << q.verdict << "\n";
            for (const auto& d : q.details) os << "    " << d << "\n";
            for (const auto& c : q.citations) os << "    cite: " << c << "\n";
        }
    }
    os << "SURVIVORS:";
    if (rep.survivors.empty()) os << " none";
    for (const auto& s : rep.survivors) os << " " << s.candidate;
    os << "\n";
    return os.str();
}

using ojson = nlohmann::ordered_json;

ojson elimination_json(const Elimination& e) {
    ojson j;
    j["candidate"] = e.candidate;
    j["rule"] = to_string(e.rule);
    if (e.rule == RuleKind::SpectrumWitness) j["witness"] = e.witness;
    j["primes"] = e.primes;
    j["summary"] = e.summary;
    j["details"] = e.details;
    j["assumptions"] = e.assumptions;
    j["citations"] = e.citations;
    return j;
}

ojson exclusion_json(const PrimeExclusion& x) {
    return ojson{{"prime", x.prime}, {"witness", x.witness.label()}, {"absent_order", x.product}};
}

std::string render_json(const RecognitionReport& rep) {
    ojson j;
    j["target"] = rep.target_name;
    j["engine_version"] = rep.engine_version;
    j["seed_independent"] = rep.seed_independent;
    j["mu"] = rep.target_mu.elements();
    j["primes"] = rep.primes;
    ojson gk;
    gk["edges"] = ojson::array();
    for (const auto& [p, q] : rep.edges) gk["edges"].push_back({p, q});
    gk["components"] = rep.components;
    gk["nonadjacent_triples"] = ojson::array();
    for (const auto& t : rep.nonadjacent) gk["nonadjacent_triples"].push_back({t[0], t[1], t[2]});
    j["gk"] = gk;
    j["soluble"] = ojson::array();
    for (const auto& s : rep.soluble) {
        j["soluble"].push_back({{"triple", {s.triple[0], s.triple[1], s.triple[2]}},
                                {"statement", s.statement},
                                {"citations", s.citations}});
    }
    ojson socle;
    socle["steps"] = ojson::array();
    for (const auto& st : rep.socle.steps) {
        socle["steps"].push_back({{"prime", st.prime}, {"product", st.product}, {"fires", st.fires}});
    }
    socle["conclusion"] = rep.socle.conclusion;
    socle["citations"] = rep.socle.citations;
    j["socle"] = socle;
    ojson pool;
    pool["candidates"] = rep.candidate_pool;
    pool["rule"] = rep.pool_derivation.rule;
    if (rep.pool_derivation.required_prime) pool["required_prime"] = *rep.pool_derivation.required_prime;
    pool["derivation"] = rep.pool_derivation.lines;
    pool["citations"] = rep.pool_derivation.citations;
    j["pool"] = pool;
    j["eliminations"] = ojson::array();
    for (const auto& e : rep.eliminations) {
        auto ej = elimination_json(e);
        if (auto it = rep.additional_rules.find(e.candidate); it != rep.additional_rules.end()) {
            ej["also"] = ojson::array();
            for (const auto& a : it->second) ej["also"].push_back(elimination_json(a));
        }
        j["eliminations"].push_back(ej);
    }
    j["normal_prime_constraints"] = ojson::object();
    j["survivors"] = ojson::array();
    for (const auto& s : rep.survivors) {
        ojson ex = ojson::array();
        for (const auto& x : s.exclusions) ex.push_back(exclusion_json(x));
        j["normal_prime_constraints"][s.candidate] = ex;
        ojson sj;
        sj["candidate"] = s.candidate;
        sj["n_summary"] = s.n_summary;
        sj["allowed_primes"] = s.allowed_primes;
        sj["resolved"] = s.resolved;
        sj["status"] = s.status;
        sj["quotients"] = ojson::array();
        for (const auto& q : s.quotients) {
            sj["quotients"].push_back({{"quotient", q.quotient},
                                       {"excluded", q.excluded},
                                       {"verdict", q.verdict},
                                       {"allowed_primes", q.allowed_primes},
                                       {"details", q.details},
                                       {"citations", q.citations}});
        }
        j["survivors"].push_back(sj);
    }
    return j.dump(2) + "\n";
}

}  // namespace

std::string render_report(const RecognitionReport& rep, ReportFormat format) {
    return format == ReportFormat::Json ? render_json(rep) : render_text(rep);
}

}  // namespace spectrec
