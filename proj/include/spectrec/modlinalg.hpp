#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "spectrec/numtheory.hpp"

namespace spectrec {

// Dense square matrix over GF(p), row-major, entries in [0, p).
class ModMatrix {
public:
    ModMatrix() = default;
    // Zero matrix. Throws ValidationError unless p is prime.
    ModMatrix(std::uint32_t p, std::size_t dim);
    // Entries are reduced mod p; rows must all have length rows.size().
    ModMatrix(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);

    static ModMatrix identity(std::uint32_t p, std::size_t dim);

    std::uint32_t p() const { return p_; }
    std::size_t dim() const { return dim_; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t v);

    bool is_zero() const;
    bool is_identity() const;
    std::size_t rank() const;

    friend ModMatrix operator+(const ModMatrix& a, const ModMatrix& b);
    friend ModMatrix operator-(const ModMatrix& a, const ModMatrix& b);
    friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
    // Applies the matrix to a column vector.
    std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;
    bool operator==(const ModMatrix&) const = default;

private:
    void check_same_shape(const ModMatrix& b) const;

    std::uint32_t p_ = 2;
    std::size_t dim_ = 0;
    std::vector<std::uint32_t> a_;
};

ModMatrix pow(const ModMatrix& t, const BigInt& e);
ModMatrix pow(const ModMatrix& t, std::uint64_t e);

// f(T) = I + T + ... + T^(m-1).
ModMatrix power_sum(const ModMatrix& t, std::uint64_t m);

// True iff every element of the coset K.g has order m, i.e. f(T) = 0.
// Throws PreconditionError unless T^m = I.
bool coset_uniform_order(const ModMatrix& t, std::uint64_t m);

inline constexpr std::uint64_t kCosetOracleCap = std::uint64_t{1} << 20;

// Orders of all p^dim elements (v, g) of the coset K.g in K x| <g>, where
// <g> is cyclic of order m acting through T, by iterated multiplication
// (v, g^i)(w, g^j) = (v + T^i w, g^(i+j)). Ascending, with multiplicity.
std::vector<std::uint64_t> coset_orders_bruteforce(const ModMatrix& t, std::uint64_t m,
                                                   std::uint64_t cap = kCosetOracleCap);

// Dimension of ker(T - I).
std::size_t fixed_space_dim(const ModMatrix& t);

// Least k >= 1 with T^k = I. Throws SingularError for singular T.
BigInt matrix_order(const ModMatrix& t);

struct MatrixFile {
    ModMatrix matrix;
    std::string provenance;  // first '#' line, empty if none
};

// Line 1 `gfp p dim`, then dim rows of dim integers in [0, p). Lines starting
// with '#' are comments; the first one is kept as the provenance string.
MatrixFile parse_matrix_text(std::string_view text);
MatrixFile read_matrix_file(const std::filesystem::path& path);

}  // namespace spectrec
