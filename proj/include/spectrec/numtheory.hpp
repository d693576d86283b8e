#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spectrec {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n);

// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// lcm with overflow check; throws ValidationError on overflow.
std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);

// Checked multiplication; throws ValidationError on overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

// Distinct prime divisors of an arbitrary-precision integer (Miller-Rabin and
// Pollard rho), ascending.
std::vector<BigInt> prime_divisors(const BigInt& n);

}  // namespace spectrec
