#include "gbent/walsh.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gbent {

WalshSpectrum fwht(const BoolFn& f) {
    const std::uint64_t size = f.size();
    WalshSpectrum s{f.n(), std::vector<std::int64_t>(size)};
    for (std::uint64_t i = 0; i < size; ++i) s.values[i] = f.get(i) ? -1 : 1;
    for (std::uint64_t len = 1; len < size; len <<= 1) {
        for (std::uint64_t base = 0; base < size; base += 2 * len) {
            for (std::uint64_t j = base; j < base + len; ++j) {
                const std::int64_t a = s.values[j];
                const std::int64_t b = s.values[j + len];
                s.values[j] = a + b;
                s.values[j + len] = a - b;
            }
        }
    }
    return s;
}

ClassifyResult classify(const WalshSpectrum& s) {
    ClassifyResult r;
    r.distinct_values = s.values;
    std::sort(r.distinct_values.begin(), r.distinct_values.end());
    r.distinct_values.erase(std::unique(r.distinct_values.begin(), r.distinct_values.end()),
                            r.distinct_values.end());
    if (s.n % 2 == 0) {
        const std::int64_t level = std::int64_t{1} << (s.n / 2);
        bool bent = true;
        for (std::int64_t v : r.distinct_values)
            if (v != level && v != -level) bent = false;
        r.cls = bent ? SpectrumClass::Bent : SpectrumClass::Other;
    } else {
        const std::int64_t level = std::int64_t{1} << ((s.n + 1) / 2);
        bool semibent = true;
        for (std::int64_t v : r.distinct_values)
            if (v != 0 && v != level && v != -level) semibent = false;
        // Parseval rules out the all-zero spectrum, so three-valuedness is enough.
        r.cls = semibent ? SpectrumClass::SemiBent : SpectrumClass::Other;
    }
    return r;
}

ClassifyResult classify(const BoolFn& f) { return classify(fwht(f)); }

bool disjoint_spectra(const WalshSpectrum& a, const WalshSpectrum& b) {
    if (a.n != b.n) throw std::invalid_argument("disjoint_spectra: variable count mismatch");
    for (std::size_t w = 0; w < a.values.size(); ++w)
        if (a.values[w] != 0 && b.values[w] != 0) return false;
    return true;
}

bool disjoint_spectra(const BoolFn& f, const BoolFn& g) {
    if (f.n() != g.n()) throw std::invalid_argument("disjoint_spectra: variable count mismatch");
    return disjoint_spectra(fwht(f), fwht(g));
}

}  // namespace gbent
