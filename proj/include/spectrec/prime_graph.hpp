#pragma once

#include <array>
#include <utility>
#include <vector>

#include "spectrec/spectrum.hpp"

namespace spectrec {

// Gruenberg-Kegel graph: primes of a spectrum, p ~ q iff pq is an element order.
class PrimeGraph {
public:
    PrimeGraph() = default;

    const std::vector<Order>& vertices() const { return vertices_; }
    bool adjacent(Order p, Order q) const;
    // Edges as (p, q) with p < q, lexicographic.
    std::vector<std::pair<Order, Order>> edges() const;

    friend PrimeGraph build(const MuSet& mu);

private:
    std::size_t index(Order p) const;

    std::vector<Order> vertices_;
    std::vector<std::vector<bool>> adj_;
};

PrimeGraph build(const MuSet& mu);

// Connected components; the one containing 2 first, the rest by least prime.
std::vector<std::vector<Order>> components(const PrimeGraph& g);

// 3-sets of pairwise nonadjacent vertices, lexicographic.
std::vector<std::array<Order, 3>> nonadjacent_triples(const PrimeGraph& g);

}  // namespace spectrec
