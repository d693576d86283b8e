#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spectrec {

using Order = std::uint64_t;

// Divisor-closed set of element orders, ascending, always containing 1.
class Spectrum {
public:
    Spectrum() : elems_{1} {}

    // Validates that `orders` contains 1 and is closed under divisors.
    static Spectrum from_closed(std::vector<Order> orders);

    const std::vector<Order>& elements() const { return elems_; }
    bool contains(Order n) const;
    std::size_t size() const { return elems_.size(); }
    bool operator==(const Spectrum&) const = default;

private:
    std::vector<Order> elems_;
};

// Nonempty antichain under divisibility, ascending.
class MuSet {
public:
    // Validates the antichain invariants.
    explicit MuSet(std::vector<Order> elems);

    const std::vector<Order>& elements() const { return elems_; }
    Order max() const { return elems_.back(); }
    bool operator==(const MuSet&) const = default;

private:
    std::vector<Order> elems_;
};

Spectrum divisor_closure(const MuSet& mu);
Spectrum divisor_closure(const std::vector<Order>& orders);
MuSet maximal_elements(const std::vector<Order>& s);
MuSet maximal_elements(const Spectrum& s);
bool member(const MuSet& mu, Order n);
std::vector<Order> witnesses_not_in(const MuSet& a, const MuSet& b);
std::vector<Order> witnesses_not_in(const Spectrum& a, const Spectrum& b);
std::vector<Order> primes_of(const MuSet& mu);
std::vector<Order> primes_of(const Spectrum& s);
bool subset(const Spectrum& a, const Spectrum& b);

// Parses "8,10,11,12" (whitespace tolerated) into a MuSet.
MuSet parse_mu(std::string_view text);

std::string join(const std::vector<Order>& v, std::string_view sep = ",");

}  // namespace spectrec
