#include "gbent/gf2.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace gbent {

namespace {

void check_len(int len) {
    if (len < 0 || len > 63) throw std::invalid_argument("Gf2Vec: length must be in [0, 63]");
}

}  // namespace

Gf2Vec::Gf2Vec(int len_, std::uint64_t bits_) : len(len_), bits(bits_) {
    check_len(len_);
    if (len < 64) bits &= (std::uint64_t{1} << len) - 1;
}

Gf2Vec Gf2Vec::from_string(std::string_view s) {
    Gf2Vec v(static_cast<int>(s.size()), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.bits |= std::uint64_t{1} << i;
        else if (s[i] != '0')
            throw std::invalid_argument("Gf2Vec: expected a string of 0/1 characters");
    }
    return v;
}

int Gf2Vec::bit(int i) const {
    if (i < 0 || i >= len) throw std::out_of_range("Gf2Vec: coordinate out of range");
    return static_cast<int>((bits >> i) & 1);
}

void Gf2Vec::set(int i, int v) {
    if (i < 0 || i >= len) throw std::out_of_range("Gf2Vec: coordinate out of range");
    if (v)
        bits |= std::uint64_t{1} << i;
    else
        bits &= ~(std::uint64_t{1} << i);
}

std::string Gf2Vec::to_string() const {
    std::string s(static_cast<std::size_t>(len), '0');
    for (int i = 0; i < len; ++i)
        if ((bits >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

Gf2Vec operator^(Gf2Vec a, Gf2Vec b) {
    if (a.len != b.len) throw std::invalid_argument("Gf2Vec: length mismatch in xor");
    return {a.len, a.bits ^ b.bits};
}

int dot(Gf2Vec a, Gf2Vec b) {
    if (a.len != b.len) throw std::invalid_argument("Gf2Vec: length mismatch in dot");
    return std::popcount(a.bits & b.bits) & 1;
}

Gf2Matrix::Gf2Matrix(int k) : k_(k), rows_(static_cast<std::size_t>(k), 0) { check_len(k); }

Gf2Matrix Gf2Matrix::identity(int k) {
    Gf2Matrix m(k);
    for (int i = 0; i < k; ++i) m.set(i, i, 1);
    return m;
}

Gf2Matrix Gf2Matrix::from_bits(int k, std::string_view row_major) {
    if (row_major.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(k))
        throw std::invalid_argument("Gf2Matrix: row-major bit string must have k*k characters");
    Gf2Matrix m(k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) {
            char ch = row_major[static_cast<std::size_t>(r * k + c)];
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("Gf2Matrix: expected a string of 0/1 characters");
            m.set(r, c, ch == '1');
        }
    return m;
}

int Gf2Matrix::bit(int r, int c) const {
    if (r < 0 || r >= k_ || c < 0 || c >= k_) throw std::out_of_range("Gf2Matrix: index out of range");
    return static_cast<int>((rows_[static_cast<std::size_t>(r)] >> c) & 1);
}

void Gf2Matrix::set(int r, int c, int v) {
    if (r < 0 || r >= k_ || c < 0 || c >= k_) throw std::out_of_range("Gf2Matrix: index out of range");
    if (v)
        rows_[static_cast<std::size_t>(r)] |= std::uint64_t{1} << c;
    else
        rows_[static_cast<std::size_t>(r)] &= ~(std::uint64_t{1} << c);
}

std::string Gf2Matrix::to_string() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(k_) * static_cast<std::size_t>(k_));
    for (int r = 0; r < k_; ++r)
        for (int c = 0; c < k_; ++c) s.push_back(bit(r, c) ? '1' : '0');
    return s;
}

namespace {

// Gauss-Jordan over GF(2) on [A | I]; returns false when A is singular.
bool invert_rows(std::vector<std::uint64_t> a, std::vector<std::uint64_t>& inv, int k) {
    inv.assign(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) inv[static_cast<std::size_t>(i)] = std::uint64_t{1} << i;
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r)
            if ((a[static_cast<std::size_t>(r)] >> col) & 1) {
                pivot = r;
                break;
            }
        if (pivot < 0) return false;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
        std::swap(inv[static_cast<std::size_t>(pivot)], inv[static_cast<std::size_t>(col)]);
        for (int r = 0; r < k; ++r) {
            if (r == col) continue;
            if ((a[static_cast<std::size_t>(r)] >> col) & 1) {
                a[static_cast<std::size_t>(r)] ^= a[static_cast<std::size_t>(col)];
                inv[static_cast<std::size_t>(r)] ^= inv[static_cast<std::size_t>(col)];
            }
        }
    }
    return true;
}

}  // namespace

bool Gf2Matrix::invertible() const {
    std::vector<std::uint64_t> inv;
    return invert_rows(rows_, inv, k_);
}

Gf2Matrix Gf2Matrix::inverse() const {
    Gf2Matrix out(k_);
    std::vector<std::uint64_t> inv;
    if (!invert_rows(rows_, inv, k_)) throw std::domain_error("singular matrix");
    out.rows_ = std::move(inv);
    return out;
}

Gf2Vec Gf2Matrix::mul_row_vec(Gf2Vec x) const {
    if (x.len != k_) throw std::invalid_argument("Gf2Matrix: vector length does not match dimension");
    std::uint64_t acc = 0;
    for (int i = 0; i < k_; ++i)
        if ((x.bits >> i) & 1) acc ^= rows_[static_cast<std::size_t>(i)];
    return {k_, acc};
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const {
    if (k_ != rhs.k_) throw std::invalid_argument("Gf2Matrix: dimension mismatch in product");
    Gf2Matrix out(k_);
    for (int r = 0; r < k_; ++r) {
        std::uint64_t acc = 0;
        for (int i = 0; i < k_; ++i)
            if ((rows_[static_cast<std::size_t>(r)] >> i) & 1) acc ^= rhs.rows_[static_cast<std::size_t>(i)];
        out.rows_[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

Gf2Matrix random_invertible(int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("random_invertible: k must be >= 1");
    check_len(k);
    std::mt19937_64 rng(seed);
    const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    Gf2Matrix m(k);
    do {
        for (int r = 0; r < k; ++r) {
            const std::uint64_t row = rng() & mask;
            for (int c = 0; c < k; ++c) m.set(r, c, static_cast<int>((row >> c) & 1));
        }
    } while (!m.invertible());
    return m;
}

Gf2Vec affine_apply(const Gf2Matrix& s, Gf2Vec d, Gf2Vec x) { return s.mul_row_vec(x) ^ d; }

Gf2Vec affine_inverse_apply(const Gf2Matrix& s, Gf2Vec d, Gf2Vec x) {
    return s.inverse().mul_row_vec(x ^ d);
}

}  // namespace gbent
