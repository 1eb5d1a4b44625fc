#include "gbent/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gbent {

namespace {

void check_p(int p) {
    if (p < 1 || p > 20) throw std::invalid_argument("CycInt: exponent p must be in [1, 20]");
}

}  // namespace

CycInt::CycInt(int p) : p_(p) {
    check_p(p);
    coeffs_.assign(std::size_t{1} << (p - 1), 0);
}

CycInt CycInt::constant(int p, std::int64_t v) {
    CycInt z(p);
    z.coeffs_[0] = v;
    return z;
}

CycInt CycInt::zeta_pow(int p, std::uint64_t m) {
    CycInt z(p);
    z.add_zeta_pow(m, 1);
    return z;
}

void CycInt::add_zeta_pow(std::uint64_t m, int sgn) {
    const std::uint64_t q = std::uint64_t{1} << p_;
    const std::uint64_t half = q >> 1;
    m &= q - 1;
    if (m < half)
        coeffs_[m] += sgn;
    else
        coeffs_[m - half] -= sgn;  // zeta^{half} = -1
}

CycInt CycInt::operator+(const CycInt& rhs) const {
    if (p_ != rhs.p_) throw std::invalid_argument("CycInt: ring mismatch");
    CycInt out(p_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
    return out;
}

CycInt CycInt::operator-(const CycInt& rhs) const {
    if (p_ != rhs.p_) throw std::invalid_argument("CycInt: ring mismatch");
    CycInt out(p_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
    return out;
}

CycInt CycInt::operator-() const {
    CycInt out(p_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
}

CycInt CycInt::operator*(const CycInt& rhs) const {
    if (p_ != rhs.p_) throw std::invalid_argument("CycInt: ring mismatch");
    const std::size_t deg = coeffs_.size();
    CycInt out(p_);
    for (std::size_t i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            const std::int64_t prod = coeffs_[i] * rhs.coeffs_[j];
            const std::size_t e = i + j;
            if (e < deg)
                out.coeffs_[e] += prod;
            else
                out.coeffs_[e - deg] -= prod;  // x^deg = -1
        }
    }
    return out;
}

CycInt CycInt::conj() const {
    CycInt out(p_);
    const std::size_t deg = coeffs_.size();
    out.coeffs_[0] = coeffs_[0];
    for (std::size_t m = 1; m < deg; ++m) out.coeffs_[deg - m] -= coeffs_[m];
    return out;
}

CycInt CycInt::norm_sq() const { return *this * conj(); }

bool CycInt::is_constant(std::int64_t v) const {
    if (coeffs_[0] != v) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

std::complex<double> CycInt::to_complex() const {
    const double q = static_cast<double>(std::uint64_t{1} << p_);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
        if (coeffs_[m] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / q;
        acc += static_cast<double>(coeffs_[m]) * std::complex<double>{std::cos(angle), std::sin(angle)};
    }
    return acc;
}

}  // namespace gbent
