#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gbent {

/// Vector over GF(2) with at most 63 coordinates; coordinate i lives in bit i
/// of `bits`, so the integer value of `bits` is the index of the vector in
/// the enumeration (0,0,...,0), (1,0,...,0), (0,1,...,0), ...
struct Gf2Vec {
    int len = 0;
    std::uint64_t bits = 0;

    Gf2Vec() = default;
    Gf2Vec(int len_, std::uint64_t bits_);

    // "011" -> v_0=0, v_1=1, v_2=1 (characters in coordinate order)
    static Gf2Vec from_string(std::string_view s);
    static Gf2Vec from_index(int len_, std::uint64_t index) { return {len_, index}; }

    int bit(int i) const;
    void set(int i, int v);
    std::string to_string() const;

    friend bool operator==(const Gf2Vec&, const Gf2Vec&) = default;
};

Gf2Vec operator^(Gf2Vec a, Gf2Vec b);
int dot(Gf2Vec a, Gf2Vec b);

/// Square binary matrix, row i stored as a bitmask over columns.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    explicit Gf2Matrix(int k);
    static Gf2Matrix identity(int k);
    // Row-major bit string, length k*k: row 0 first, each row in column order.
    static Gf2Matrix from_bits(int k, std::string_view row_major);

    int dim() const { return k_; }
    int bit(int r, int c) const;
    void set(int r, int c, int v);
    std::uint64_t row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
    std::string to_string() const;

    bool invertible() const;
    Gf2Matrix inverse() const;  // throws std::domain_error("singular matrix")

    /// Row-vector product x*S (x is a row vector, as in sigma(x) = xS + d).
    Gf2Vec mul_row_vec(Gf2Vec x) const;
    Gf2Matrix operator*(const Gf2Matrix& rhs) const;

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    int k_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Uniformly seeded invertible k x k matrix via rejection sampling on rank.
Gf2Matrix random_invertible(int k, std::uint64_t seed);

Gf2Vec affine_apply(const Gf2Matrix& s, Gf2Vec d, Gf2Vec x);          // x*S ^ d
Gf2Vec affine_inverse_apply(const Gf2Matrix& s, Gf2Vec d, Gf2Vec x);  // (x ^ d)*S^{-1}

}  // namespace gbent
