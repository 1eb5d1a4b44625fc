#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace gbent {

/// Exact element of Z[zeta] for zeta = e^{2*pi*i/q}, q = 2^p, represented by
/// integer coefficients in Z[x]/(x^{2^{p-1}} + 1): value = sum_m c_m zeta^m
/// for m in [0, 2^{p-1}), with the reduction zeta^{2^{p-1}} = -1.
class CycInt {
public:
    explicit CycInt(int p);
    static CycInt constant(int p, std::int64_t v);
    static CycInt zeta_pow(int p, std::uint64_t m);

    int p() const { return p_; }
    int degree() const { return static_cast<int>(coeffs_.size()); }  // 2^{p-1}
    std::int64_t coeff(int m) const { return coeffs_[static_cast<std::size_t>(m)]; }
    std::span<const std::int64_t> coeffs() const { return coeffs_; }

    /// Adds sgn * zeta^m; m is reduced modulo q = 2^p with the sign rule.
    void add_zeta_pow(std::uint64_t m, int sgn);

    CycInt operator+(const CycInt& rhs) const;
    CycInt operator-(const CycInt& rhs) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& rhs) const;  // negacyclic convolution

    /// Complex conjugate: zeta^m -> zeta^{q-m}, reduced back into the ring.
    CycInt conj() const;

    /// z * conj(z); the result is the constant |z|^2 exactly when the
    /// non-constant coefficients vanish.
    CycInt norm_sq() const;

    bool is_constant(std::int64_t v) const;
    std::complex<double> to_complex() const;  // evaluate at zeta = e^{2*pi*i/q}

    friend bool operator==(const CycInt&, const CycInt&) = default;

private:
    int p_ = 1;
    std::vector<std::int64_t> coeffs_;
};

}  // namespace gbent
