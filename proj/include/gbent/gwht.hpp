#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbent/cyclotomic.hpp"
#include "gbent/gen_fn.hpp"
#include "gbent/walsh.hpp"

namespace gbent {

/// Generalized Walsh spectrum H_g(w) = sum_x zeta^{g(x)} (-1)^{w.x}.
/// `exact` holds cyclotomic-integer values and is present iff q is a power
/// of two; `approx` is always computed independently by complex summation,
/// so the two can be cross-checked against each other.
struct GwhtSpectrum {
    int n = 0;
    std::uint32_t q = 2;
    std::optional<std::vector<CycInt>> exact;
    std::vector<std::complex<double>> approx;
};

GwhtSpectrum gwht(const GenFn& g);

// Spectrum dump formats: "<index> <W-value>" per line for a Walsh spectrum,
// "<index> <coeff list> | <re> <im>" for a generalized spectrum (the coeff
// list is empty when no exact representation exists).
std::string dump(const WalshSpectrum& s);
std::string dump(const GwhtSpectrum& s);

}  // namespace gbent
