#include "spectrec/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "spectrec/errors.hpp"

namespace spectrec {

using nlohmann::json;

std::string FrobeniusWitness::label() const {
    return std::to_string(kernel_order) + ":" + std::to_string(complement_order);
}

std::string to_string(FactKind k) {
    switch (k) {
        case FactKind::ForcedAdjacency: return "ForcedAdjacency";
        case FactKind::ForcedDimensions: return "ForcedDimensions";
        case FactKind::FixedPointFreeClass: return "FixedPointFreeClass";
        case FactKind::CosetOrderDoubling: return "CosetOrderDoubling";
        case FactKind::ForcedOrderAmong: return "ForcedOrderAmong";
    }
    return "?";
}

std::string ModuleFact::describe() const {
    std::string s = "char " + std::to_string(characteristic);
    if (dimension) s += ", dim " + std::to_string(*dimension);
    s += ": ";
    switch (kind) {
        case FactKind::ForcedAdjacency:
            s += "forces an element of order " + std::to_string(primes[0] * primes[1]);
            break;
        case FactKind::ForcedDimensions: {
            std::vector<Order> d(dimensions.begin(), dimensions.end());
            s += "module dimension in {" + join(d) + "}";
            break;
        }
        case FactKind::FixedPointFreeClass:
            s += "class " + class_label + " (order " + std::to_string(element_order) +
                 ") acts fixed-point-freely, so " + std::to_string(absent_order) + " is not an element order";
            break;
        case FactKind::CosetOrderDoubling:
            s += "a preimage of class " + class_label + " has order " + std::to_string(element_order * characteristic);
            break;
        case FactKind::ForcedOrderAmong:
            s += "forces an element order in {" + join(orders) + "}";
            break;
    }
    return s;
}

std::vector<Order> SimpleGroupRecord::primes() const {
    std::vector<Order> out;
    for (const auto& [p, e] : order_factors) out.push_back(p);
    return out;
}

bool SimpleGroupRecord::divides_order(Order n) const { return order % n == 0; }

const Extension* SimpleGroupRecord::full_extension() const {
    for (const auto& e : extensions) {
        if (e.out_order == out_order) return &e;
    }
    return nullptr;
}

std::optional<MuSet> SimpleGroupRecord::aut_mu() const {
    if (out_order == 1) return mu;
    if (const Extension* e = full_extension()) return e->mu;
    return std::nullopt;
}

const SimpleGroupRecord* Catalog::find_record(const std::string& name) const {
    for (const auto& r : records) {
        if (r.name == name) return &r;
    }
    return nullptr;
}

const Target* Catalog::find_target(const std::string& name) const {
    for (const auto& t : targets) {
        if (t.name == name) return &t;
    }
    return nullptr;
}

const Axiom* Catalog::find_axiom(const std::string& id) const {
    for (const auto& a : axioms) {
        if (a.id == id) return &a;
    }
    return nullptr;
}

namespace {

// Typed access to one JSON object with a context string for error messages.
class Obj {
public:
    Obj(const json& j, std::string ctx, std::initializer_list<const char*> allowed) : j_(j), ctx_(std::move(ctx)) {
        if (!j.is_object()) fail("expected an object");
        for (const auto& [key, value] : j.items()) {
            bool ok = false;
            for (const char* a : allowed) ok = ok || key == a;
            if (!ok) fail("unknown key '" + key + "'");
        }
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ValidationError(ctx_ + ": " + msg); }
    [[noreturn]] void fail(const std::string& field, const std::string& msg) const {
        throw ValidationError(ctx_ + ", field '" + field + "': " + msg);
    }

    bool has(const char* k) const { return j_.contains(k); }
    const json& raw(const char* k) const {
        if (!j_.contains(k)) fail(k, "missing");
        return j_.at(k);
    }
    std::string str(const char* k) const {
        const json& v = raw(k);
        if (!v.is_string()) fail(k, "expected a string");
        return v.get<std::string>();
    }
    std::string nonempty(const char* k) const {
        std::string s = str(k);
        if (s.empty()) fail(k, "must be nonempty");
        return s;
    }
    Order pos(const char* k) const { return pos_value(raw(k), k); }
    Order pos_value(const json& v, const std::string& k) const {
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) fail(k, "expected a positive integer");
        return v.get<std::uint64_t>();
    }
    std::vector<Order> pos_list(const char* k) const {
        const json& v = raw(k);
        if (!v.is_array()) fail(k, "expected an array");
        std::vector<Order> out;
        for (const auto& x : v) out.push_back(pos_value(x, k));
        return out;
    }
    std::vector<std::string> str_list(const char* k) const {
        const json& v = raw(k);
        if (!v.is_array()) fail(k, "expected an array");
        std::vector<std::string> out;
        for (const auto& x : v) {
            if (!x.is_string() || x.get<std::string>().empty()) fail(k, "expected nonempty strings");
            out.push_back(x.get<std::string>());
        }
        return out;
    }
    bool boolean(const char* k) const {
        const json& v = raw(k);
        if (!v.is_boolean()) fail(k, "expected a boolean");
        return v.get<bool>();
    }
    MuSet mu(const char* k) const {
        try {
            return MuSet(pos_list(k));
        } catch (const ValidationError& e) {
            fail(k, e.what());
        }
    }
    const std::string& ctx() const { return ctx_; }

private:
    const json& j_;
    std::string ctx_;
};

bool subset_of(const std::vector<Order>& a, const std::vector<Order>& b) {
    return std::all_of(a.begin(), a.end(), [&](Order x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

void check_file(const Catalog& c, const Obj& o, const char* field, const std::string& rel) {
    if (!std::filesystem::exists(c.resolve(rel))) o.fail(field, "file not found: " + rel);
}

ModuleFact parse_fact(const json& j, const std::string& ctx, const SimpleGroupRecord& r, const Catalog& c,
                      const std::vector<std::string>& quotient_names) {
    Obj o(j, ctx, {"group", "quotients", "characteristic", "statement", "dimension", "context_absent", "matrices",
                   "axioms", "assumptions", "citation"});
    ModuleFact f;
    f.group = o.nonempty("group");
    if (f.group != r.name) o.fail("group", "must name the enclosing record " + r.name);
    f.quotients = o.has("quotients") ? o.str_list("quotients") : std::vector<std::string>{f.group};
    for (const auto& q : f.quotients) {
        if (std::find(quotient_names.begin(), quotient_names.end(), q) == quotient_names.end()) {
            o.fail("quotients", "unknown quotient '" + q + "'");
        }
    }
    f.characteristic = o.pos("characteristic");
    if (!is_prime(f.characteristic)) o.fail("characteristic", "must be prime");
    f.citation = o.nonempty("citation");
    if (o.has("dimension")) f.dimension = static_cast<std::size_t>(o.pos("dimension"));
    if (o.has("context_absent")) f.context_absent = o.pos_list("context_absent");
    if (o.has("matrices")) {
        f.matrices = o.str_list("matrices");
        for (const auto& m : f.matrices) check_file(c, o, "matrices", m);
    }
    if (o.has("axioms")) f.axioms = o.str_list("axioms");
    if (o.has("assumptions")) f.assumptions = o.str_list("assumptions");

    const std::string sctx = ctx + ", statement";
    const json& sj = o.raw("statement");
    if (!sj.is_object() || !sj.contains("kind") || !sj.at("kind").is_string()) {
        o.fail("statement", "expected an object with a string 'kind'");
    }
    const std::string kind = sj.at("kind").get<std::string>();
    if (kind == "ForcedAdjacency") {
        Obj s(sj, sctx, {"kind", "primes"});
        f.kind = FactKind::ForcedAdjacency;
        f.primes = s.pos_list("primes");
        if (f.primes.size() != 2 || !is_prime(f.primes[0]) || !is_prime(f.primes[1]) || f.primes[0] == f.primes[1]) {
            s.fail("primes", "expected two distinct primes");
        }
    } else if (kind == "ForcedDimensions") {
        Obj s(sj, sctx, {"kind", "dimensions"});
        f.kind = FactKind::ForcedDimensions;
        for (Order d : s.pos_list("dimensions")) f.dimensions.push_back(static_cast<std::size_t>(d));
        if (f.dimensions.empty()) s.fail("dimensions", "must be nonempty");
    } else if (kind == "FixedPointFreeClass") {
        Obj s(sj, sctx, {"kind", "class", "order", "absent_order"});
        f.kind = FactKind::FixedPointFreeClass;
        f.class_label = s.nonempty("class");
        f.element_order = s.pos("order");
        f.absent_order = s.pos("absent_order");
    } else if (kind == "CosetOrderDoubling") {
        Obj s(sj, sctx, {"kind", "class", "order"});
        f.kind = FactKind::CosetOrderDoubling;
        f.class_label = s.nonempty("class");
        f.element_order = s.pos("order");
    } else if (kind == "ForcedOrderAmong") {
        Obj s(sj, sctx, {"kind", "orders"});
        f.kind = FactKind::ForcedOrderAmong;
        f.orders = s.pos_list("orders");
        if (f.orders.empty()) s.fail("orders", "must be nonempty");
    } else {
        o.fail("statement", "unknown kind '" + kind + "'");
    }
    return f;
}

SimpleGroupRecord parse_record(const json& j, std::size_t index, const Catalog& c) {
    std::string ctx = "simple_groups[" + std::to_string(index) + "]";
    if (j.is_object() && j.contains("name") && j.at("name").is_string()) {
        ctx = "record '" + j.at("name").get<std::string>() + "'";
    }
    Obj o(j, ctx, {"name", "order", "order_factors", "out_order", "out_structure", "mu", "extensions",
                   "extensions_complete", "frobenius_witnesses", "module_facts", "citations", "generators"});
    SimpleGroupRecord r;
    r.name = o.nonempty("name");

    const json& of = o.raw("order_factors");
    if (!of.is_array() || of.empty()) o.fail("order_factors", "expected a nonempty array of [prime, exponent]");
    r.order = 1;
    Order last = 0;
    for (const auto& pe : of) {
        if (!pe.is_array() || pe.size() != 2) o.fail("order_factors", "expected [prime, exponent] pairs");
        const Order p = o.pos_value(pe[0], "order_factors");
        const Order e = o.pos_value(pe[1], "order_factors");
        if (!is_prime(p)) o.fail("order_factors", std::to_string(p) + " is not prime");
        if (p <= last) o.fail("order_factors", "primes must be strictly increasing");
        last = p;
        r.order_factors.emplace_back(p, static_cast<unsigned>(e));
        for (Order i = 0; i < e; ++i) r.order *= p;
    }
    if (o.has("order")) {
        const std::string stated = o.str("order");
        if (BigInt(stated) != r.order) {
            o.fail("order", "stated order " + stated + " differs from the product of order_factors " + r.order.str());
        }
    }
    r.out_order = o.pos("out_order");
    r.out_structure = o.nonempty("out_structure");
    if (o.has("mu")) {
        r.mu = o.mu("mu");
        if (!subset_of(primes_of(*r.mu), r.primes())) o.fail("mu", "primes must divide the group order");
    }
    r.extensions_complete = o.has("extensions_complete") && o.boolean("extensions_complete");
    std::vector<std::string> quotient_names{r.name};
    if (o.has("extensions")) {
        const json& ex = o.raw("extensions");
        if (!ex.is_array()) o.fail("extensions", "expected an array");
        std::vector<Order> allowed = r.primes();
        for (Order p : prime_divisors(r.out_order)) allowed.push_back(p);
        for (std::size_t i = 0; i < ex.size(); ++i) {
            Obj eo(ex[i], ctx + ", extensions[" + std::to_string(i) + "]", {"name", "out_order", "mu"});
            Extension e;
            e.name = eo.nonempty("name");
            e.out_order = eo.pos("out_order");
            if (e.out_order == 1 || r.out_order % e.out_order != 0) {
                eo.fail("out_order", "must be a nontrivial divisor of |Out(S)|");
            }
            e.mu = eo.mu("mu");
            if (!subset_of(primes_of(e.mu), allowed)) eo.fail("mu", "primes must divide |S| |Out(S)|");
            if (r.mu && !subset(divisor_closure(*r.mu), divisor_closure(e.mu))) {
                eo.fail("mu", "spectrum must contain the spectrum of " + r.name);
            }
            if (std::find(quotient_names.begin(), quotient_names.end(), e.name) != quotient_names.end()) {
                eo.fail("name", "duplicate extension name");
            }
            quotient_names.push_back(e.name);
            r.extensions.push_back(std::move(e));
        }
    }
    if (r.extensions_complete && r.out_order > 1 && r.full_extension() == nullptr) {
        o.fail("extensions", "complete extension list must contain the full automorphism group");
    }
    if (o.has("frobenius_witnesses")) {
        const json& fw = o.raw("frobenius_witnesses");
        if (!fw.is_array()) o.fail("frobenius_witnesses", "expected an array");
        for (std::size_t i = 0; i < fw.size(); ++i) {
            Obj wo(fw[i], ctx + ", frobenius_witnesses[" + std::to_string(i) + "]",
                   {"kernel_order", "complement_order", "citation"});
            FrobeniusWitness w;
            w.kernel_order = wo.pos("kernel_order");
            w.complement_order = wo.pos("complement_order");
            w.citation = wo.nonempty("citation");
            if (w.kernel_order < 2 || w.complement_order < 2) wo.fail("orders must be at least 2");
            if (std::gcd(w.kernel_order, w.complement_order) != 1) wo.fail("kernel and complement orders must be coprime");
            if (!r.divides_order(w.kernel_order * w.complement_order)) {
                wo.fail("|F||C| must divide the group order");
            }
            if (r.mu && !member(*r.mu, w.complement_order)) wo.fail("cyclic complement order is not an element order");
            r.frobenius_witnesses.push_back(std::move(w));
        }
    }
    if (o.has("module_facts")) {
        const json& mf = o.raw("module_facts");
        if (!mf.is_array()) o.fail("module_facts", "expected an array");
        for (std::size_t i = 0; i < mf.size(); ++i) {
            r.module_facts.push_back(
                parse_fact(mf[i], ctx + ", module_facts[" + std::to_string(i) + "]", r, c, quotient_names));
        }
    }
    if (o.has("citations")) r.citations = o.str_list("citations");
    if (o.has("generators")) {
        r.generators = o.nonempty("generators");
        check_file(c, o, "generators", *r.generators);
    }
    const auto ps = r.primes();
    if (ps.back() <= kCompletePrimeBound) {
        if (!subset_of({2, 3}, ps)) o.fail("order_factors", "2 and 3 must divide the order");
        if (!subset_of(prime_divisors(r.out_order), {2, 3})) o.fail("out_order", "Out(S) must be a {2,3}-group");
    }
    return r;
}

}  // namespace

Catalog parse_catalog(const std::string& json_text, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("catalog is not valid JSON: ") + e.what());
    }
    Obj top(doc, "catalog", {"simple_groups", "targets", "axioms"});
    Catalog c;
    c.base_dir = base_dir;

    const json& ax = top.raw("axioms");
    if (!ax.is_array()) top.fail("axioms", "expected an array");
    for (std::size_t i = 0; i < ax.size(); ++i) {
        Obj o(ax[i], "axioms[" + std::to_string(i) + "]", {"id", "statement", "citation"});
        Axiom a{o.nonempty("id"), o.nonempty("statement"), o.nonempty("citation")};
        if (c.find_axiom(a.id)) o.fail("id", "duplicate axiom id '" + a.id + "'");
        c.axioms.push_back(std::move(a));
    }

    const json& sg = top.raw("simple_groups");
    if (!sg.is_array()) top.fail("simple_groups", "expected an array");
    std::set<std::string> names;
    for (std::size_t i = 0; i < sg.size(); ++i) {
        SimpleGroupRecord r = parse_record(sg[i], i, c);
        if (!names.insert(r.name).second) {
            throw ValidationError("record '" + r.name + "', field 'name': duplicate record name");
        }
        for (const auto& e : r.extensions) {
            if (!names.insert(e.name).second) {
                throw ValidationError("record '" + r.name + "', field 'extensions': duplicate name '" + e.name + "'");
            }
        }
        for (const auto& f : r.module_facts) {
            for (const auto& a : f.axioms) {
                if (!c.find_axiom(a)) {
                    throw ValidationError("record '" + r.name + "', field 'module_facts': unknown axiom '" + a + "'");
                }
            }
        }
        c.records.push_back(std::move(r));
    }
    const auto complete = subcatalog(c, kCompletePrimeBound);
    if (complete.size() != 28) {
        throw ValidationError("catalog: expected 28 records with all primes at most 11, found " +
                              std::to_string(complete.size()));
    }

    const json& tg = top.raw("targets");
    if (!tg.is_array()) top.fail("targets", "expected an array");
    for (std::size_t i = 0; i < tg.size(); ++i) {
        std::string ctx = "targets[" + std::to_string(i) + "]";
        if (tg[i].is_object() && tg[i].contains("name") && tg[i].at("name").is_string()) {
            ctx = "target '" + tg[i].at("name").get<std::string>() + "'";
        }
        Obj o(tg[i], ctx, {"name", "socle", "group", "mu", "citation", "generators", "imported_reduction"});
        Target t;
        t.name = o.nonempty("name");
        if (c.find_target(t.name)) o.fail("name", "duplicate target name");
        t.socle = o.nonempty("socle");
        t.group = o.nonempty("group");
        t.mu = o.mu("mu");
        t.citation = o.nonempty("citation");
        const SimpleGroupRecord* r = c.find_record(t.socle);
        if (!r) o.fail("socle", "unknown record '" + t.socle + "'");
        const MuSet* gmu = nullptr;
        if (t.group == r->name && r->mu) gmu = &*r->mu;
        for (const auto& e : r->extensions) {
            if (e.name == t.group) gmu = &e.mu;
        }
        if (!gmu) o.fail("group", "'" + t.group + "' is not a listed quotient of " + r->name);
        if (!(*gmu == t.mu)) o.fail("mu", "differs from the catalog spectrum of " + t.group);
        if (o.has("generators")) {
            t.generators = o.nonempty("generators");
            check_file(c, o, "generators", *t.generators);
        }
        if (o.has("imported_reduction")) {
            Obj ro(o.raw("imported_reduction"), ctx + ", imported_reduction", {"quotient", "prime", "axiom"});
            ImportedReduction red{ro.nonempty("quotient"), ro.pos("prime"), ro.nonempty("axiom")};
            if (!is_prime(red.prime)) ro.fail("prime", "must be prime");
            if (!c.find_axiom(red.axiom)) ro.fail("axiom", "unknown axiom '" + red.axiom + "'");
            bool known = red.quotient == r->name;
            for (const auto& e : r->extensions) known = known || e.name == red.quotient;
            if (!known) ro.fail("quotient", "'" + red.quotient + "' is not a listed quotient of " + r->name);
            t.reduction = std::move(red);
        }
        c.targets.push_back(std::move(t));
    }
    return c;
}

Catalog load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open catalog " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str(), path.parent_path());
}

std::vector<const SimpleGroupRecord*> subcatalog(const Catalog& c, Order max_prime, std::optional<Order> required_prime) {
    std::vector<const SimpleGroupRecord*> out;
    for (const auto& r : c.records) {
        if (r.primes().back() > max_prime) continue;
        if (required_prime && !r.divides_order(*required_prime)) continue;
        out.push_back(&r);
    }
    return out;
}

BigInt aut_order_power(const SimpleGroupRecord& r, unsigned t) {
    if (t == 0) throw ValidationError("aut_order_power: t must be positive");
    BigInt base = r.order * r.out_order;
    BigInt out = 1;
    for (unsigned i = 0; i < t; ++i) out *= base;
    for (unsigned i = 2; i <= t; ++i) out *= i;
    return out;
}

}  // namespace spectrec
