#pragma once

#include <cstdint>
#include <vector>

#include "gbent/bool_fn.hpp"

namespace gbent {

/// Full Walsh spectrum of a Boolean function: values[w] = W_f(z_w), the
/// exact signed sum over x of (-1)^{f(x) ^ z_w.x}.
struct WalshSpectrum {
    int n = 0;
    std::vector<std::int64_t> values;
};

/// Fast Walsh-Hadamard transform, O(n 2^n) butterfly on the (-1)^f sequence.
WalshSpectrum fwht(const BoolFn& f);

enum class SpectrumClass { Bent, SemiBent, Other };

struct ClassifyResult {
    SpectrumClass cls = SpectrumClass::Other;
    std::vector<std::int64_t> distinct_values;  // sorted spectrum summary
};

/// Bent: n even and |W(w)| = 2^{n/2} everywhere.  Semi-bent: n odd and
/// W(w) in {0, +-2^{(n+1)/2}} everywhere.
ClassifyResult classify(const BoolFn& f);
ClassifyResult classify(const WalshSpectrum& s);

bool disjoint_spectra(const WalshSpectrum& a, const WalshSpectrum& b);
bool disjoint_spectra(const BoolFn& f, const BoolFn& g);

}  // namespace gbent
