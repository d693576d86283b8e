#include "spectrec/permgroup.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spectrec/errors.hpp"

namespace spectrec {

Permutation::Permutation(std::size_t degree) : images_(degree) {
    for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<Point>(i);
}

Permutation Permutation::from_images(std::vector<Point> images) {
    std::vector<bool> seen(images.size(), false);
    for (Point x : images) {
        if (x >= images.size() || seen[x]) throw ValidationError("images do not form a bijection");
        seen[x] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

Permutation Permutation::inverse() const {
    Permutation r(degree());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
    return r;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw ValidationError("degree mismatch in product");
    Permutation r;
    r.images_.resize(a.degree());
    for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
    return r;
}

std::string Permutation::to_cycles() const {
    std::string out;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        out += '(';
        Point x = static_cast<Point>(i);
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first) out += ',';
            out += std::to_string(x + 1);
            first = false;
            x = images_[x];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
    Permutation p(degree);
    std::vector<Point> images = p.images();
    std::vector<bool> used(degree, false);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
    };
    auto read_point = [&]() -> Point {
        skip_ws();
        const std::size_t start = i;
        std::uint64_t v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
            if (v > degree + 1) v = degree + 1;
            ++i;
        }
        if (i == start) throw ParseError("expected a point", start);
        if (v < 1 || v > degree) {
            throw ParseError("point out of range 1.." + std::to_string(degree), start);
        }
        const Point x = static_cast<Point>(v - 1);
        if (used[x]) throw ParseError("repeated point " + std::to_string(v), start);
        used[x] = true;
        skip_ws();
        return x;
    };
    skip_ws();
    if (i == text.size()) throw ParseError("empty permutation", i);
    std::size_t cycles = 0;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') throw ParseError("expected '('", i);
        ++i;
        skip_ws();
        if (i < text.size() && text[i] == ')') {
            ++i;
            skip_ws();
            if (cycles != 0 || i != text.size()) throw ParseError("'()' must stand alone", i);
            return p;
        }
        std::vector<Point> cyc{read_point()};
        while (i < text.size() && text[i] == ',') {
            ++i;
            cyc.push_back(read_point());
        }
        if (i == text.size() || text[i] != ')') throw ParseError("expected ',' or ')'", i);
        ++i;
        for (std::size_t k = 0; k < cyc.size(); ++k) images[cyc[k]] = cyc[(k + 1) % cyc.size()];
        ++cycles;
    }
    return Permutation::from_images(std::move(images));
}

Order element_order(const Permutation& p) {
    std::vector<bool> seen(p.degree(), false);
    Order ord = 1;
    for (Point i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        Order len = 0;
        for (Point x = i; !seen[x]; x = p[x]) {
            seen[x] = true;
            ++len;
        }
        ord = checked_lcm(ord, len);
    }
    return ord;
}

GeneratorFile parse_generator_text(std::string_view text) {
    GeneratorFile f;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    bool header = false;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        if (!header) {
            constexpr std::string_view kKey = "degree ";
            if (line.substr(0, kKey.size()) != kKey) {
                throw ParseError("line 1 must be 'degree N'", pos);
            }
            std::size_t n = 0;
            std::string_view num = line.substr(kKey.size());
            if (num.empty()) throw ParseError("missing degree", pos + kKey.size());
            for (char c : num) {
                if (c < '0' || c > '9') throw ParseError("degree must be a positive integer", pos + kKey.size());
                n = n * 10 + static_cast<std::size_t>(c - '0');
                if (n > (std::size_t{1} << 24)) throw ValidationError("degree too large");
            }
            if (n == 0) throw ParseError("degree must be positive", pos + kKey.size());
            f.degree = n;
            header = true;
        } else if (!line.empty() && line.front() == '#') {
            std::string_view c = line.substr(1);
            if (!c.empty() && c.front() == ' ') c.remove_prefix(1);
            f.comments.emplace_back(c);
        } else if (line.find_first_not_of(" \t") != std::string_view::npos) {
            try {
                f.generators.push_back(parse_cycles(line, f.degree));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), pos + e.position());
            }
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    if (!header) throw ParseError("line 1 must be 'degree N'", 0);
    return f;
}

GeneratorFile read_generator_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open generator file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_generator_text(ss.str());
}

std::vector<Point> PermGroup::base() const {
    std::vector<Point> b;
    for (const auto& l : levels_) b.push_back(l.base);
    return b;
}

std::vector<Permutation> PermGroup::strong_generators() const {
    std::vector<Permutation> out;
    for (const auto& l : levels_) {
        for (const auto& g : l.gens) {
            if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
        }
    }
    return out;
}

std::vector<std::size_t> PermGroup::transversal_sizes() const {
    std::vector<std::size_t> out;
    for (const auto& l : levels_) out.push_back(l.orbit.size());
    return out;
}

void PermGroup::add_level(Point base) {
    Level l;
    l.base = base;
    l.where.assign(degree_, -1);
    l.orbit.push_back(base);
    l.where[base] = 0;
    l.u.emplace_back(degree_);
    l.uinv.emplace_back(degree_);
    levels_.push_back(std::move(l));
}

void PermGroup::extend_orbit(Level& l) {
    for (std::size_t j = 0; j < l.orbit.size(); ++j) {
        for (const auto& s : l.gens) {
            const Point y = s[l.orbit[j]];
            if (l.where[y] >= 0) continue;
            l.where[y] = static_cast<std::int32_t>(l.orbit.size());
            l.orbit.push_back(y);
            l.u.push_back(l.u[j] * s);
            l.uinv.push_back(l.u.back().inverse());
        }
    }
    l.done.resize(l.gens.size(), 0);
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation p, std::size_t start) const {
    if (p.degree() != degree_) throw ValidationError("degree mismatch in sift");
    std::vector<Point> tmp(degree_);
    for (std::size_t i = start; i < levels_.size(); ++i) {
        const Level& l = levels_[i];
        const std::int32_t j = l.where[p[l.base]];
        if (j < 0) return {std::move(p), i};
        const auto& inv = l.uinv[static_cast<std::size_t>(j)].images_;
        for (std::size_t x = 0; x < degree_; ++x) tmp[x] = inv[p.images_[x]];
        std::swap(tmp, p.images_);
    }
    return {std::move(p), levels_.size()};
}

std::pair<Permutation, std::size_t> PermGroup::schreier_residue(std::size_t i, std::size_t s,
                                                               std::size_t j) const {
    const Level& l = levels_[i];
    Permutation g = l.u[j] * l.gens[s];
    const Point y = g[l.base];
    return sift(g * l.uinv[static_cast<std::size_t>(l.where[y])], i + 1);
}

// Checks the Schreier generators of level i not verified on an earlier visit.
// A failing generator extends the chain and sets `restart` to the deepest
// level touched.
bool PermGroup::schreier_pass(std::size_t i, std::size_t& restart) {
    for (std::size_t s = 0; s < levels_[i].gens.size(); ++s) {
        for (std::size_t j = levels_[i].done[s]; j < levels_[i].orbit.size(); ++j) {
            auto [r, lev] = schreier_residue(i, s, j);
            if (lev == levels_.size() && r.is_identity()) {
                levels_[i].done[s] = j + 1;
                continue;
            }
            if (lev == levels_.size()) {
                Point moved = 0;
                while (r[moved] == moved) ++moved;
                add_level(moved);
            }
            for (std::size_t m = i + 1; m <= lev; ++m) {
                levels_[m].gens.push_back(r);
                extend_orbit(levels_[m]);
            }
            restart = lev;
            return false;
        }
    }
    return true;
}

void PermGroup::verify() const {
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const Level& l = levels_[i];
        for (std::size_t j = 0; j < l.orbit.size(); ++j) {
            if (l.u[j][l.base] != l.orbit[j]) throw std::logic_error("bad transversal element");
        }
        for (std::size_t s = 0; s < l.gens.size(); ++s) {
            for (std::size_t j = 0; j < l.orbit.size(); ++j) {
                auto [r, lev] = schreier_residue(i, s, j);
                if (lev != levels_.size() || !r.is_identity()) {
                    throw std::logic_error("stabilizer chain verification failed");
                }
            }
        }
    }
    for (const auto& g : gens_) {
        auto [r, lev] = sift(g);
        if (lev != levels_.size() || !r.is_identity()) throw std::logic_error("generator does not sift");
    }
}

PermGroup build_chain(const std::vector<Permutation>& generators, std::size_t degree) {
    PermGroup G;
    G.degree_ = degree;
    for (const auto& g : generators) {
        if (g.degree() != degree) {
            throw ValidationError("generator degree " + std::to_string(g.degree()) +
                                  " differs from " + std::to_string(degree));
        }
        if (!g.is_identity()) G.gens_.push_back(g);
    }
    for (const auto& g : G.gens_) {
        bool fixes_base = true;
        for (const auto& l : G.levels_) {
            if (g[l.base] != l.base) {
                fixes_base = false;
                break;
            }
        }
        if (fixes_base) {
            Point moved = 0;
            while (g[moved] == moved) ++moved;
            G.add_level(moved);
        }
    }
    for (std::size_t i = 0; i < G.levels_.size(); ++i) {
        for (const auto& g : G.gens_) {
            bool fixes = true;
            for (std::size_t m = 0; m < i; ++m) {
                if (g[G.levels_[m].base] != G.levels_[m].base) {
                    fixes = false;
                    break;
                }
            }
            if (fixes) G.levels_[i].gens.push_back(g);
        }
        G.extend_orbit(G.levels_[i]);
    }
    std::size_t i = G.levels_.size();
    while (i > 0) {
        std::size_t restart = 0;
        if (G.schreier_pass(i - 1, restart)) {
            --i;
        } else {
            i = restart + 1;
        }
    }
    for (auto& l : G.levels_) {
        l.done.clear();
        l.done.shrink_to_fit();
    }
    G.verify();
    G.order_ = 1;
    for (const auto& l : G.levels_) G.order_ *= l.orbit.size();
    G.gens_ = generators;
    return G;
}

PermGroup build_chain(const std::vector<Permutation>& generators) {
    return build_chain(generators, generators.empty() ? 0 : generators.front().degree());
}

bool contains(const PermGroup& g, const Permutation& p) {
    if (p.degree() != g.degree()) throw ValidationError("degree mismatch in membership test");
    auto [r, lev] = g.sift(p);
    return lev == g.base().size() && r.is_identity();
}

namespace {

Order order_with(const std::vector<Point>& images, std::vector<std::uint32_t>& stamp, std::uint32_t tag) {
    Order ord = 1;
    const std::size_t n = images.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (stamp[i] == tag) continue;
        Order len = 0;
        for (std::size_t x = i; stamp[x] != tag; x = images[x]) {
            stamp[x] = tag;
            ++len;
        }
        ord = checked_lcm(ord, len);
    }
    return ord;
}

}  // namespace

ExhaustiveResult enumerate_orders(const PermGroup& g, std::uint64_t cap, unsigned threads) {
    if (g.order() > cap) {
        throw CapExceeded("group order " + g.order().str() + " exceeds the exhaustive cap " +
                          std::to_string(cap), g.order().str());
    }
    ExhaustiveResult res;
    const auto& levels = g.levels_;
    const std::size_t k = levels.size();
    const std::size_t n = g.degree();
    if (k == 0) {
        res.visited = 1;
        return res;
    }
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t top = levels[0].orbit.size();
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, top));

    struct Local {
        std::set<Order> orders;
        std::uint64_t visited = 0;
    };
    std::vector<Local> locals(threads);

    auto work = [&](unsigned t) {
        Local& out = locals[t];
        std::vector<std::vector<Point>> suf(k, std::vector<Point>(n));
        std::vector<std::size_t> idx(k, 0);
        std::vector<std::uint32_t> stamp(n, 0);
        std::uint32_t tag = 0;
        auto leaf = [&](const std::vector<Point>& el) {
            if (++tag == 0) {
                std::fill(stamp.begin(), stamp.end(), 0);
                tag = 1;
            }
            out.orders.insert(order_with(el, stamp, tag));
            ++out.visited;
        };
        for (std::size_t j0 = t; j0 < top; j0 += threads) {
            suf[0] = levels[0].u[j0].images();
            if (k == 1) {
                leaf(suf[0]);
                continue;
            }
            // Iterative odometer over levels 1..k-1; suf[l] = u_l * suf[l-1].
            std::size_t l = 1;
            idx[1] = 0;
            while (true) {
                const auto& u = levels[l].u[idx[l]].images();
                const auto& prev = suf[l - 1];
                auto& cur = suf[l];
                for (std::size_t x = 0; x < n; ++x) cur[x] = prev[u[x]];
                if (l + 1 < k) {
                    ++l;
                    idx[l] = 0;
                    continue;
                }
                leaf(cur);
                while (l >= 1 && ++idx[l] == levels[l].orbit.size()) --l;
                if (l == 0) break;
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool) th.join();

    std::set<Order> all;
    for (const auto& loc : locals) {
        all.insert(loc.orders.begin(), loc.orders.end());
        res.visited += loc.visited;
    }
    res.spectrum = Spectrum::from_closed({all.begin(), all.end()});
    return res;
}

Spectrum spectrum_exhaustive(const PermGroup& g, std::uint64_t cap, unsigned threads) {
    return enumerate_orders(g, cap, threads).spectrum;
}

ProductReplacement::ProductReplacement(const PermGroup& g, std::uint64_t seed) : rng_(seed) {
    std::vector<Permutation> gens;
    for (const auto& s : g.generators()) {
        if (!s.is_identity()) gens.push_back(s);
    }
    acc_ = Permutation(g.degree());
    if (gens.empty()) {
        trivial_ = true;
        return;
    }
    for (std::size_t i = 0; i < kSlots; ++i) slots_.push_back(gens[i % gens.size()]);
    for (unsigned i = 0; i < kBurnIn; ++i) step();
}

void ProductReplacement::step() {
    std::uniform_int_distribution<std::size_t> pick(0, kSlots - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    const std::size_t s = pick(rng_);
    std::size_t t = pick(rng_);
    while (t == s) t = pick(rng_);
    const bool inv = coin(rng_) == 1;
    const bool left = coin(rng_) == 1;
    const Permutation other = inv ? slots_[t].inverse() : slots_[t];
    slots_[s] = left ? other * slots_[s] : slots_[s] * other;
    acc_ = acc_ * slots_[s];
}

const Permutation& ProductReplacement::next() {
    if (!trivial_) step();
    return acc_;
}

Spectrum spectrum_sample(const PermGroup& g, std::uint64_t samples, std::uint64_t seed) {
    std::set<Order> orders{1};
    if (samples > 0) {
        ProductReplacement pr(g, seed);
        for (std::uint64_t i = 0; i < samples; ++i) orders.insert(element_order(pr.next()));
    }
    return divisor_closure(std::vector<Order>(orders.begin(), orders.end()));
}

}  // namespace spectrec
