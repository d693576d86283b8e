#include "spectrec/spectrum.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "spectrec/errors.hpp"
#include "spectrec/numtheory.hpp"

namespace spectrec {

namespace {

std::vector<Order> minimal_elements(const std::vector<Order>& sorted) {
    std::vector<Order> out;
    for (Order n : sorted) {
        bool minimal = true;
        for (Order m : out) {
            if (n % m == 0) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(n);
    }
    return out;
}

}  // namespace

Spectrum Spectrum::from_closed(std::vector<Order> orders) {
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    if (orders.empty() || orders.front() != 1) throw ValidationError("spectrum must contain 1");
    for (Order n : orders) {
        for (Order d : divisors(n)) {
            if (!std::binary_search(orders.begin(), orders.end(), d)) {
                throw ValidationError("spectrum is not closed under divisors: " + std::to_string(d) +
                                      " divides " + std::to_string(n));
            }
        }
    }
    Spectrum s;
    s.elems_ = std::move(orders);
    return s;
}

bool Spectrum::contains(Order n) const { return std::binary_search(elems_.begin(), elems_.end(), n); }

MuSet::MuSet(std::vector<Order> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty()) throw ValidationError("mu set must be nonempty");
    if (elems.front() == 0) throw ValidationError("mu set elements must be positive");
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            if (elems[j] % elems[i] == 0) {
                throw ValidationError("mu set is not an antichain: " + std::to_string(elems[i]) +
                                      " divides " + std::to_string(elems[j]));
            }
        }
    }
    elems_ = std::move(elems);
}

Spectrum divisor_closure(const std::vector<Order>& orders) {
    if (orders.empty()) throw ValidationError("divisor closure of an empty set");
    std::set<Order> all;
    for (Order n : orders) {
        if (n == 0) throw ValidationError("orders must be positive");
        for (Order d : divisors(n)) all.insert(d);
    }
    return Spectrum::from_closed({all.begin(), all.end()});
}

Spectrum divisor_closure(const MuSet& mu) { return divisor_closure(mu.elements()); }

MuSet maximal_elements(const std::vector<Order>& s) {
    if (s.empty()) throw ValidationError("maximal elements of an empty set");
    std::vector<Order> sorted(s);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Order> out;
    for (Order n : sorted) {
        if (n == 0) throw ValidationError("orders must be positive");
        bool maximal = true;
        for (Order m : out) {
            if (m % n == 0) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(n);
    }
    return MuSet(std::move(out));
}

MuSet maximal_elements(const Spectrum& s) { return maximal_elements(s.elements()); }

bool member(const MuSet& mu, Order n) {
    if (n == 0) throw ValidationError("member: order must be positive");
    for (Order m : mu.elements()) {
        if (m % n == 0) return true;
    }
    return false;
}

std::vector<Order> witnesses_not_in(const Spectrum& a, const Spectrum& b) {
    std::vector<Order> diff;
    for (Order n : a.elements()) {
        if (!b.contains(n)) diff.push_back(n);
    }
    return minimal_elements(diff);
}

std::vector<Order> witnesses_not_in(const MuSet& a, const MuSet& b) {
    return witnesses_not_in(divisor_closure(a), divisor_closure(b));
}

std::vector<Order> primes_of(const Spectrum& s) {
    std::vector<Order> out;
    for (Order n : s.elements()) {
        if (n > 1 && is_prime(n)) out.push_back(n);
    }
    return out;
}

std::vector<Order> primes_of(const MuSet& mu) {
    std::set<Order> ps;
    for (Order n : mu.elements()) {
        for (Order p : prime_divisors(n)) ps.insert(p);
    }
    return {ps.begin(), ps.end()};
}

bool subset(const Spectrum& a, const Spectrum& b) {
    return std::includes(b.elements().begin(), b.elements().end(), a.elements().begin(),
                         a.elements().end());
}

MuSet parse_mu(std::string_view text) {
    std::vector<Order> out;
    std::size_t i = 0;
    while (true) {
        while (i < text.size() && text[i] == ' ') ++i;
        Order v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc()) throw ParseError("expected a positive integer", i);
        if (v == 0) throw ParseError("orders must be positive", i);
        out.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
        while (i < text.size() && text[i] == ' ') ++i;
        if (i == text.size()) break;
        if (text[i] != ',') throw ParseError("expected ','", i);
        ++i;
    }
    return MuSet(std::move(out));
}

std::string join(const std::vector<Order>& v, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace spectrec
