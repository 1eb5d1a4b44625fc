#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbent/gf2.hpp"

namespace gbent {

/// Boolean function on n variables as a packed 2^n-bit truth table.
/// Entry i is f(z_i) where z_i = (i_0,...,i_{n-1}) and i = sum_j i_j 2^j,
/// so coordinate 0 is the least-significant bit of the index.
class BoolFn {
public:
    BoolFn() = default;
    explicit BoolFn(int n);  // zero function
    static BoolFn from_bit_string(int n, std::string_view bits);

    int n() const { return n_; }
    std::uint64_t size() const { return std::uint64_t{1} << n_; }
    int get(std::uint64_t i) const {
        return static_cast<int>((table_[i >> 6] >> (i & 63)) & 1);
    }
    void set(std::uint64_t i, int v) {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (v)
            table_[i >> 6] |= bit;
        else
            table_[i >> 6] &= ~bit;
    }
    std::span<const std::uint64_t> words() const { return table_; }
    std::span<std::uint64_t> words() { return table_; }
    std::string bit_string() const;

    BoolFn operator^(const BoolFn& rhs) const;
    friend bool operator==(const BoolFn&, const BoolFn&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> table_;
};

/// Coefficient vector of the algebraic normal form: coeffs entry u is the
/// coefficient of the monomial prod_{j: u_j=1} x_j, indexed like truth tables.
class AnfPoly {
public:
    AnfPoly() = default;
    explicit AnfPoly(int n);
    static AnfPoly from_bit_string(int n, std::string_view bits);

    int n() const { return n_; }
    std::uint64_t size() const { return std::uint64_t{1} << n_; }
    int get(std::uint64_t u) const {
        return static_cast<int>((coeffs_[u >> 6] >> (u & 63)) & 1);
    }
    void set(std::uint64_t u, int v) {
        const std::uint64_t bit = std::uint64_t{1} << (u & 63);
        if (v)
            coeffs_[u >> 6] |= bit;
        else
            coeffs_[u >> 6] &= ~bit;
    }
    std::string bit_string() const;

    friend bool operator==(const AnfPoly&, const AnfPoly&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> coeffs_;
};

int eval(const BoolFn& f, Gf2Vec x);

// Binary Moebius transform, in both directions; the two maps are mutual
// inverses (the transform is an involution over GF(2)).
BoolFn anf_to_table(const AnfPoly& a);
AnfPoly table_to_anf(const BoolFn& f);

/// XOR of the functions selected by the bits of z: returns the pointwise sum
/// over GF(2) of fs[m] for every m with z_m = 1 (constant 0 when z = 0).
BoolFn dot_combine(Gf2Vec z, std::span<const BoolFn> fs);

// Truth-table text format: first line "n=<int>", second line 2^n characters
// in {0,1} in index order.
std::string to_table_text(const BoolFn& f);
BoolFn parse_table_text(std::istream& in);

// ANF text format: first line "n=<int>", second line a sum of monomials,
// e.g. "x0*x2 + x1 + 1"; "0" denotes the zero polynomial.
std::string to_anf_text(const AnfPoly& a);
AnfPoly parse_anf_text(std::istream& in);
AnfPoly parse_anf_expr(int n, std::string_view expr);
std::string anf_expr(const AnfPoly& a);

}  // namespace gbent
