#include "spectrec/modlinalg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "spectrec/errors.hpp"

namespace spectrec {

ModMatrix::ModMatrix(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim), a_(dim * dim, 0) {
    if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
    if (p > (1u << 16)) throw ValidationError("field characteristic too large");
}

ModMatrix::ModMatrix(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows)
    : ModMatrix(p, rows.size()) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != dim_) throw ValidationError("matrix is not square");
        for (std::size_t c = 0; c < dim_; ++c) set(r, c, rows[r][c]);
    }
}

ModMatrix ModMatrix::identity(std::uint32_t p, std::size_t dim) {
    ModMatrix m(p, dim);
    for (std::size_t i = 0; i < dim; ++i) m.a_[i * dim + i] = 1;
    return m;
}

void ModMatrix::set(std::size_t r, std::size_t c, std::int64_t v) {
    const std::int64_t p = p_;
    a_[r * dim_ + c] = static_cast<std::uint32_t>(((v % p) + p) % p);
}

bool ModMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::uint32_t x) { return x == 0; });
}

bool ModMatrix::is_identity() const { return *this == identity(p_, dim_); }

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // a^(p-2) mod p
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

}  // namespace

std::size_t ModMatrix::rank() const {
    std::vector<std::uint32_t> m = a_;
    const std::size_t n = dim_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && m[piv * n + col] == 0) ++piv;
        if (piv == n) continue;
        for (std::size_t c = 0; c < n; ++c) std::swap(m[piv * n + c], m[rank * n + c]);
        const std::uint64_t inv = inv_mod(m[rank * n + col], p_);
        for (std::size_t c = 0; c < n; ++c) m[rank * n + c] = static_cast<std::uint32_t>(m[rank * n + c] * inv % p_);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || m[r * n + col] == 0) continue;
            const std::uint64_t f = m[r * n + col];
            for (std::size_t c = 0; c < n; ++c) {
                m[r * n + c] = static_cast<std::uint32_t>((m[r * n + c] + (p_ - f) * m[rank * n + c]) % p_);
            }
        }
        ++rank;
    }
    return rank;
}

void ModMatrix::check_same_shape(const ModMatrix& b) const {
    if (p_ != b.p_ || dim_ != b.dim_) throw ValidationError("matrix shape or field mismatch");
}

ModMatrix operator+(const ModMatrix& a, const ModMatrix& b) {
    a.check_same_shape(b);
    ModMatrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = (a.a_[i] + b.a_[i]) % a.p_;
    return r;
}

ModMatrix operator-(const ModMatrix& a, const ModMatrix& b) {
    a.check_same_shape(b);
    ModMatrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = (a.a_[i] + a.p_ - b.a_[i]) % a.p_;
    return r;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
    a.check_same_shape(b);
    const std::size_t n = a.dim_;
    ModMatrix r(a.p_, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint64_t x = a.a_[i * n + k];
            if (x == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                r.a_[i * n + j] = static_cast<std::uint32_t>((r.a_[i * n + j] + x * b.a_[k * n + j]) % a.p_);
            }
        }
    }
    return r;
}

std::vector<std::uint32_t> ModMatrix::apply(const std::vector<std::uint32_t>& v) const {
    if (v.size() != dim_) throw ValidationError("vector length mismatch");
    std::vector<std::uint32_t> out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < dim_; ++j) s = (s + std::uint64_t{a_[i * dim_ + j]} * v[j]) % p_;
        out[i] = static_cast<std::uint32_t>(s);
    }
    return out;
}

ModMatrix pow(const ModMatrix& t, const BigInt& e) {
    ModMatrix r = ModMatrix::identity(t.p(), t.dim());
    ModMatrix b = t;
    BigInt k = e;
    while (k > 0) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k > 0) b = b * b;
    }
    return r;
}

ModMatrix pow(const ModMatrix& t, std::uint64_t e) { return pow(t, BigInt(e)); }

ModMatrix power_sum(const ModMatrix& t, std::uint64_t m) {
    if (m == 0) throw ValidationError("power_sum: m must be positive");
    // f(T) for m = 2k and m = 2k+1 from f_k(T) and T^k: f_2k = f_k (I + T^k).
    ModMatrix f = ModMatrix::identity(t.p(), t.dim());  // f_1
    ModMatrix tk = t;                                   // T^1
    int top = 63;
    while (!((m >> top) & 1)) --top;
    for (int bit = top - 1; bit >= 0; --bit) {
        f = f + f * tk;  // f_2k = f_k + T^k f_k
        tk = tk * tk;
        if ((m >> bit) & 1) {
            f = f + tk;  // f_(2k+1) = f_2k + T^2k
            tk = tk * t;
        }
    }
    return f;
}

bool coset_uniform_order(const ModMatrix& t, std::uint64_t m) {
    if (m == 0) throw ValidationError("coset_uniform_order: m must be positive");
    if (!pow(t, m).is_identity()) throw PreconditionError("T^m is not the identity");
    return power_sum(t, m).is_zero();
}

std::vector<std::uint64_t> coset_orders_bruteforce(const ModMatrix& t, std::uint64_t m, std::uint64_t cap) {
    if (m == 0) throw ValidationError("coset_orders_bruteforce: m must be positive");
    if (!pow(t, m).is_identity()) throw PreconditionError("T^m is not the identity");
    BigInt count = 1;
    for (std::size_t i = 0; i < t.dim(); ++i) count *= t.p();
    if (count > cap) {
        throw CapExceeded("coset size " + count.str() + " exceeds the oracle cap " + std::to_string(cap),
                          count.str());
    }
    const std::size_t n = t.dim();
    const std::uint32_t p = t.p();
    std::vector<ModMatrix> powers{ModMatrix::identity(p, n)};
    for (std::uint64_t i = 1; i < m; ++i) powers.push_back(powers.back() * t);

    std::vector<std::uint64_t> out;
    std::vector<std::uint32_t> v(n, 0);
    const auto total = static_cast<std::uint64_t>(count);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t x = idx;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = static_cast<std::uint32_t>(x % p);
            x /= p;
        }
        // acc = (a, g^e); multiply by (v, g) until the identity (0, g^0) recurs.
        std::vector<std::uint32_t> a(n, 0);
        std::uint64_t e = 0;
        std::uint64_t k = 0;
        do {
            const auto w = powers[e].apply(v);
            for (std::size_t i = 0; i < n; ++i) a[i] = (a[i] + w[i]) % p;
            e = (e + 1) % m;
            ++k;
        } while (e != 0 || std::any_of(a.begin(), a.end(), [](std::uint32_t z) { return z != 0; }));
        out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t fixed_space_dim(const ModMatrix& t) {
    return t.dim() - (t - ModMatrix::identity(t.p(), t.dim())).rank();
}

BigInt matrix_order(const ModMatrix& t) {
    const std::size_t n = t.dim();
    if (t.rank() != n) throw SingularError("matrix is singular");
    if (n == 0) return 1;
    const std::uint32_t p = t.p();
    // The order divides p^e * lcm(p^i - 1 : 1 <= i <= n) with p^e >= n.
    BigInt bound = 1;
    std::vector<BigInt> primes{BigInt(p)};
    BigInt pi = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        pi *= p;
        const BigInt q = pi - 1;
        if (q > 1) {
            bound = bound / boost::multiprecision::gcd(bound, q) * q;
            for (const auto& r : prime_divisors(q)) primes.push_back(r);
        }
    }
    BigInt pe = 1;
    while (pe < n) pe *= p;
    bound *= pe;
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    if (!pow(t, bound).is_identity()) throw std::logic_error("matrix order bound violated");
    for (const auto& r : primes) {
        while (bound % r == 0 && pow(t, bound / r).is_identity()) bound /= r;
    }
    return bound;
}

MatrixFile parse_matrix_text(std::string_view text) {
    MatrixFile out;
    std::vector<std::string> lines;
    std::vector<std::size_t> offsets;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string line(text.substr(pos, end - pos));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        offsets.push_back(pos);
        if (end == text.size()) break;
        pos = end + 1;
    }
    std::istringstream head(lines.at(0));
    std::string key;
    long long p = 0, dim = -1;
    if (!(head >> key >> p >> dim) || key != "gfp" || !(head >> std::ws).eof()) {
        throw ParseError("line 1 must be 'gfp p dim'", 0);
    }
    if (p < 2 || p > (1 << 16) || !is_prime(static_cast<std::uint64_t>(p))) {
        throw ValidationError("gfp: " + std::to_string(p) + " is not a supported prime");
    }
    if (dim < 0 || dim > 4096) throw ValidationError("gfp: unsupported dimension");
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (!line.empty() && line.front() == '#') {
            if (out.provenance.empty()) {
                std::string_view c(line);
                c.remove_prefix(1);
                if (!c.empty() && c.front() == ' ') c.remove_prefix(1);
                out.provenance = std::string(c);
            }
            continue;
        }
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (rows.size() == static_cast<std::size_t>(dim)) {
            throw ParseError("more than " + std::to_string(dim) + " rows", offsets[i]);
        }
        std::istringstream row(line);
        std::vector<std::int64_t> r;
        long long v;
        while (row >> v) {
            if (v < 0 || v >= p) {
                throw ParseError("entry " + std::to_string(v) + " is not in [0, p)", offsets[i]);
            }
            r.push_back(v);
        }
        if (!row.eof()) throw ParseError("non-integer entry", offsets[i]);
        if (r.size() != static_cast<std::size_t>(dim)) {
            throw ParseError("row has " + std::to_string(r.size()) + " entries, expected " + std::to_string(dim),
                             offsets[i]);
        }
        rows.push_back(std::move(r));
    }
    if (rows.size() != static_cast<std::size_t>(dim)) {
        throw ParseError("expected " + std::to_string(dim) + " rows, found " + std::to_string(rows.size()),
                         text.size());
    }
    out.matrix = ModMatrix(static_cast<std::uint32_t>(p), rows);
    return out;
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open matrix file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix_text(ss.str());
}

}  // namespace spectrec
