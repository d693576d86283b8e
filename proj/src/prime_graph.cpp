#include "spectrec/prime_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "spectrec/errors.hpp"

namespace spectrec {

std::size_t PrimeGraph::index(Order p) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
    if (it == vertices_.end() || *it != p) {
        throw ValidationError("prime " + std::to_string(p) + " is not a vertex");
    }
    return static_cast<std::size_t>(it - vertices_.begin());
}

bool PrimeGraph::adjacent(Order p, Order q) const { return adj_[index(p)][index(q)]; }

std::vector<std::pair<Order, Order>> PrimeGraph::edges() const {
    std::vector<std::pair<Order, Order>> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
            if (adj_[i][j]) out.emplace_back(vertices_[i], vertices_[j]);
        }
    }
    return out;
}

PrimeGraph build(const MuSet& mu) {
    PrimeGraph g;
    g.vertices_ = primes_of(mu);
    const std::size_t n = g.vertices_.size();
    g.adj_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool e = member(mu, g.vertices_[i] * g.vertices_[j]);
            g.adj_[i][j] = g.adj_[j][i] = e;
        }
    }
    return g;
}

std::vector<std::vector<Order>> components(const PrimeGraph& g) {
    const auto& vs = g.vertices();
    std::vector<std::size_t> parent(vs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [p, q] : g.edges()) {
        const auto a = find(static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), p) - vs.begin()));
        const auto b = find(static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), q) - vs.begin()));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::size_t, std::vector<Order>> byroot;
    for (std::size_t i = 0; i < vs.size(); ++i) byroot[find(i)].push_back(vs[i]);
    std::vector<std::vector<Order>> out;
    for (auto& [root, comp] : byroot) out.push_back(std::move(comp));
    // Components are ordered by least prime; 2 is the least prime overall.
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::vector<std::array<Order, 3>> nonadjacent_triples(const PrimeGraph& g) {
    const auto& vs = g.vertices();
    std::vector<std::array<Order, 3>> out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (g.adjacent(vs[i], vs[j])) continue;
            for (std::size_t k = j + 1; k < vs.size(); ++k) {
                if (!g.adjacent(vs[i], vs[k]) && !g.adjacent(vs[j], vs[k])) {
                    out.push_back({vs[i], vs[j], vs[k]});
                }
            }
        }
    }
    return out;
}

}  // namespace spectrec
