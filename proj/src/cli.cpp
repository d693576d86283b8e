#include "spectrec/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spectrec/catalog.hpp"
#include "spectrec/errors.hpp"
#include "spectrec/modlinalg.hpp"
#include "spectrec/permgroup.hpp"
#include "spectrec/prime_graph.hpp"
#include "spectrec/recognizer.hpp"

#ifndef SPECTREC_DATA_DIR
#define SPECTREC_DATA_DIR "data"
#endif

namespace spectrec::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string set_text(const std::vector<Order>& v) { return "{" + join(v) + "}"; }

struct Common {
    std::string format = "text";
};

void add_format(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format: text or json");
}

struct SpectrumArgs {
    Common common;
    std::string generators;
    std::string method;
    std::uint64_t cap = kDefaultExhaustiveCap;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
    auto fmt = parse_format(a.common.format);
    if (a.method != "exhaustive" && a.method != "sample") {
        throw UsageError("--method must be exhaustive or sample");
    }
    if (a.method == "sample" && (!a.seed || !a.samples)) {
        throw UsageError("sampling requires --samples and --seed");
    }
    auto gf = read_generator_file(a.generators);
    auto g = build_chain(gf.generators, gf.degree);
    Spectrum s;
    std::uint64_t visited = 0;
    if (a.method == "exhaustive") {
        auto r = enumerate_orders(g, a.cap, a.threads);
        s = r.spectrum;
        visited = r.visited;
    } else {
        s = spectrum_sample(g, *a.samples, *a.seed);
    }
    auto mu = maximal_elements(s);
    if (fmt == ReportFormat::Json) {
        ojson j;
        j["generators"] = a.generators;
        j["degree"] = gf.degree;
        j["order"] = g.order().str();
        j["method"] = a.method;
        if (a.method == "exhaustive") {
            j["visited"] = visited;
        } else {
            j["samples"] = *a.samples;
            j["seed"] = *a.seed;
        }
        j["mu"] = mu.elements();
        j["spectrum"] = s.elements();
        out << j.dump(2) << "\n";
    } else {
        out << "DEGREE " << gf.degree << "\n";
        out << "ORDER " << g.order() << "\n";
        out << "METHOD " << a.method << "\n";
        if (a.method == "exhaustive") {
            out << "VISITED " << visited << "\n";
        } else {
            out << "SAMPLES " << *a.samples << "\nSEED " << *a.seed << "\n";
        }
        out << "MU " << join(mu.elements()) << "\n";
        out << "SPECTRUM " << join(s.elements()) << "\n";
    }
    return kExitOk;
}

int cmd_gk(const std::string& mu_text, const Common& c, std::ostream& out) {
    auto fmt = parse_format(c.format);
    auto mu = parse_mu(mu_text);
    auto g = build(mu);
    auto comps = components(g);
    auto triples = nonadjacent_triples(g);
    if (fmt == ReportFormat::Json) {
        ojson j;
        j["mu"] = mu.elements();
        j["primes"] = g.vertices();
        j["edges"] = ojson::array();
        for (const auto& [p, q] : g.edges()) j["edges"].push_back({p, q});
        j["components"] = comps;
        j["nonadjacent_triples"] = ojson::array();
        for (const auto& t : triples) j["nonadjacent_triples"].push_back({t[0], t[1], t[2]});
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "MU " << join(mu.elements()) << "\n";
    out << "PRIMES " << join(g.vertices()) << "\n";
    out << "EDGES";
    for (const auto& [p, q] : g.edges()) out << " " << p << "-" << q;
    out << "\nCOMPONENTS " << comps.size() << ":";
    for (const auto& comp : comps) out << " " << set_text(comp);
    out << "\nNONADJACENT";
    if (triples.empty()) out << " none";
    for (const auto& t : triples) out << " " << set_text({t[0], t[1], t[2]});
    out << "\n";
    return kExitOk;
}

int cmd_coset(const std::string& path, std::uint64_t m, bool brute, const Common& c, std::ostream& out) {
    auto fmt = parse_format(c.format);
    auto mf = read_matrix_file(path);
    const auto& t = mf.matrix;
    bool uniform = coset_uniform_order(t, m);
    auto fs = power_sum(t, m);
    std::optional<std::map<std::uint64_t, std::uint64_t>> hist;
    if (brute) {
        std::map<std::uint64_t, std::uint64_t> h;
        for (auto o : coset_orders_bruteforce(t, m)) ++h[o];
        hist = std::move(h);
    }
    if (fmt == ReportFormat::Json) {
        ojson j;
        j["matrix"] = path;
        j["p"] = t.p();
        j["dim"] = t.dim();
        j["m"] = m;
        j["uniform"] = uniform;
        j["coset_order"] = uniform ? m : m * t.p();
        j["power_sum_rank"] = fs.rank();
        j["fixed_space_dim"] = fixed_space_dim(t);
        j["provenance"] = mf.provenance;
        if (hist) {
            ojson h = ojson::object();
            for (const auto& [o, n] : *hist) h[std::to_string(o)] = n;
            j["bruteforce"] = h;
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "MATRIX GF(" << t.p() << ") dim " << t.dim() << "\n";
    out << "M " << m << "\n";
    out << "POWER-SUM RANK " << fs.rank() << "\n";
    out << "FIXED-SPACE DIM " << fixed_space_dim(t) << "\n";
    out << "COSET " << (uniform ? "uniform order " + std::to_string(m)
                                : "contains order " + std::to_string(m * t.p()))
        << "\n";
    if (hist) {
        out << "BRUTEFORCE";
        for (const auto& [o, n] : *hist) out << " " << o << "x" << n;
        out << "\n";
    }
    if (!mf.provenance.empty()) out << "PROVENANCE " << mf.provenance << "\n";
    return kExitOk;
}

ojson record_json(const SimpleGroupRecord& r) {
    ojson j;
    j["name"] = r.name;
    j["order"] = r.order.str();
    j["out_order"] = r.out_order;
    j["out_structure"] = r.out_structure;
    j["primes"] = r.primes();
    if (r.mu) j["mu"] = r.mu->elements();
    j["extensions"] = ojson::array();
    for (const auto& e : r.extensions) j["extensions"].push_back({{"name", e.name}, {"mu", e.mu.elements()}});
    j["frobenius_witnesses"] = ojson::array();
    for (const auto& w : r.frobenius_witnesses) j["frobenius_witnesses"].push_back(w.label());
    j["module_facts"] = ojson::array();
    for (const auto& f : r.module_facts) j["module_facts"].push_back(f.describe());
    return j;
}

int cmd_catalog(const Catalog& cat, const std::string& record, std::optional<Order> max_prime,
                std::optional<Order> required, const Common& c, std::ostream& out) {
    auto fmt = parse_format(c.format);
    std::vector<const SimpleGroupRecord*> rs;
    if (!record.empty()) {
        const auto* r = cat.find_record(record);
        if (!r) throw ValidationError("unknown record '" + record + "'");
        rs.push_back(r);
    } else if (max_prime) {
        rs = subcatalog(cat, *max_prime, required);
    } else {
        for (const auto& r : cat.records) rs.push_back(&r);
    }
    if (fmt == ReportFormat::Json) {
        ojson j = ojson::array();
        for (const auto* r : rs) j.push_back(record_json(*r));
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "RECORDS " << rs.size() << "\n";
    for (const auto* r : rs) {
        out << r->name << " order " << r->order << " out " << r->out_order;
        if (r->mu) out << " mu " << join(r->mu->elements());
        out << "\n";
        if (!record.empty()) {
            for (const auto& e : r->extensions) out << "  extension " << e.name << " mu " << join(e.mu.elements()) << "\n";
            for (const auto& w : r->frobenius_witnesses) out << "  frobenius " << w.label() << "\n";
            for (const auto& f : r->module_facts) out << "  fact " << f.describe() << "\n";
        }
    }
    return kExitOk;
}

struct RecognizeArgs {
    Common common;
    std::string target;
    std::string mu;
    bool all_rules = false;
    bool frobenius_product = false;
    bool no_matrix_check = false;
    std::optional<std::string> expect;
};

int cmd_recognize(const Catalog& cat, const RecognizeArgs& a, std::ostream& out, std::ostream& err) {
    auto fmt = parse_format(a.common.format);
    if (a.target.empty() == a.mu.empty()) throw UsageError("give exactly one of --target or --mu");
    RecognizerOptions opts;
    opts.all_rules = a.all_rules;
    opts.frobenius_product = a.frobenius_product;
    opts.verify_matrices = !a.no_matrix_check;
    auto rep = a.target.empty() ? recognize(parse_mu(a.mu), cat, opts) : recognize(a.target, cat, opts);
    out << render_report(rep, fmt);
    if (!a.expect) return kExitOk;
    std::vector<std::string> want;
    std::stringstream ss(*a.expect);
    for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) want.push_back(item);
    }
    auto got = rep.survivor_names();
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want == got) return kExitOk;
    err << "expectation mismatch: survivors ";
    for (const auto& g : got) err << g << " ";
    err << "\n";
    return kExitExpect;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectrum recognition toolkit", "spectrec"};
    app.require_subcommand(1);
    std::string catalog_path = std::string(SPECTREC_DATA_DIR) + "/catalog.json";
    app.add_option("--catalog", catalog_path, "Catalog file");

    SpectrumArgs sa;
    auto* sp = app.add_subcommand("spectrum", "Element order spectrum of a permutation group");
    sp->add_option("--generators", sa.generators, "Generator file")->required();
    sp->add_option("--method", sa.method, "exhaustive or sample")->required();
    sp->add_option("--cap", sa.cap, "Largest group order for exhaustive enumeration");
    sp->add_option("--samples", sa.samples, "Number of random elements");
    sp->add_option("--seed", sa.seed, "Random seed (required for sampling)");
    sp->add_option("--threads", sa.threads, "Worker threads, 0 for hardware concurrency");
    add_format(sp, sa.common);

    Common gc;
    std::string gk_mu;
    auto* gk = app.add_subcommand("gk", "Prime graph of a spectrum");
    gk->add_option("--mu", gk_mu, "Maximal element orders, comma separated")->required();
    add_format(gk, gc);

    Common cc;
    std::string matrix;
    std::uint64_t m = 0;
    bool brute = false;
    auto* co = app.add_subcommand("coset-order", "Element orders in the coset K.g of K x| <g>");
    co->add_option("--matrix", matrix, "Matrix file")->required();
    co->add_option("--m", m, "Order of g")->required();
    co->add_flag("--bruteforce", brute, "Also enumerate the coset");
    add_format(co, cc);

    Common kc;
    std::string record;
    std::optional<Order> max_prime, required;
    auto* ca = app.add_subcommand("catalog", "Query the catalog");
    ca->add_option("--record", record, "Show one record");
    ca->add_option("--max-prime", max_prime, "Records with all primes at most this bound");
    ca->add_option("--required-prime", required, "With --max-prime, records divisible by this prime");
    add_format(ca, kc);

    RecognizeArgs ra;
    auto* re = app.add_subcommand("recognize", "Run the recognition engine");
    re->add_option("--target", ra.target, "Named target");
    re->add_option("--mu", ra.mu, "Explicit target spectrum");
    re->add_flag("--all-rules", ra.all_rules, "Evaluate every rule");
    re->add_flag("--frobenius-product", ra.frobenius_product, "Enable the product form of the Frobenius rule");
    re->add_flag("--no-matrix-check", ra.no_matrix_check, "Skip module matrix verification");
    re->add_option("--expect", ra.expect, "Expected survivors, comma separated");
    add_format(re, ra.common);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (sp->parsed()) return cmd_spectrum(sa, out);
        if (gk->parsed()) return cmd_gk(gk_mu, gc, out);
        if (co->parsed()) return cmd_coset(matrix, m, brute, cc, out);
        Catalog cat = load(catalog_path);
        if (ca->parsed()) return cmd_catalog(cat, record, max_prime, required, kc, out);
        return cmd_recognize(cat, ra, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

}  // namespace spectrec::cli
