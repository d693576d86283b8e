#include "spectrec/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <boost/multiprecision/miller_rabin.hpp>

#include "spectrec/errors.hpp"

namespace spectrec {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t k = out.size();
        std::uint64_t pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < k; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ValidationError("integer overflow");
    return r;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
    return checked_mul(a / std::gcd(a, b), b);
}

namespace {

BigInt rho(const BigInt& n, std::mt19937_64& rng) {
    if (n % 2 == 0) return 2;
    std::uniform_int_distribution<std::uint64_t> dist(1, 1u << 30);
    while (true) {
        BigInt c = dist(rng);
        BigInt y = dist(rng) % n;
        BigInt g = 1, q = 1, x, ys;
        std::uint64_t r = 1;
        const std::uint64_t m = 128;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = (q * (x > y ? x - y : y - x)) % n;
                }
                g = boost::multiprecision::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = (ys * ys + c) % n;
                g = boost::multiprecision::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(const BigInt& n, std::vector<BigInt>& out, std::mt19937_64& rng) {
    if (n == 1) return;
    if (boost::multiprecision::miller_rabin_test(n, 32, rng)) {
        out.push_back(n);
        return;
    }
    const BigInt d = rho(n, rng);
    split(d, out, rng);
    split(n / d, out, rng);
}

}  // namespace

std::vector<BigInt> prime_divisors(const BigInt& n) {
    std::vector<BigInt> out;
    BigInt m = n;
    for (unsigned d = 2; d < 10000 && m > 1; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    std::mt19937_64 rng(0x5eed);
    split(m, out, rng);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace spectrec
