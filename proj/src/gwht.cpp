#include "gbent/gwht.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace gbent {

GwhtSpectrum gwht(const GenFn& g) {
    validate(g);
    const std::uint64_t size = std::uint64_t{1} << g.n;
    GwhtSpectrum s;
    s.n = g.n;
    s.q = g.q;

    // Floating route: direct summation with a precomputed root table.
    std::vector<std::complex<double>> roots(g.q);
    for (std::uint32_t v = 0; v < g.q; ++v) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(g.q);
        roots[v] = {std::cos(angle), std::sin(angle)};
    }
    s.approx.assign(size, {0.0, 0.0});
    for (std::uint64_t w = 0; w < size; ++w) {
        std::complex<double> acc{0.0, 0.0};
        for (std::uint64_t x = 0; x < size; ++x) {
            const std::complex<double> term = roots[g.values[x]];
            acc += (std::popcount(w & x) & 1) ? -term : term;
        }
        s.approx[w] = acc;
    }

    // Exact route, only for q = 2^p: accumulate unit powers in Z[zeta].
    if (const auto p = exact_log2(g.q)) {
        std::vector<CycInt> exact(size, CycInt(*p));
        for (std::uint64_t w = 0; w < size; ++w) {
            CycInt& acc = exact[w];
            for (std::uint64_t x = 0; x < size; ++x)
                acc.add_zeta_pow(g.values[x], (std::popcount(w & x) & 1) ? -1 : 1);
        }
        s.exact = std::move(exact);
    }
    return s;
}

std::string dump(const WalshSpectrum& s) {
    std::string out;
    for (std::size_t w = 0; w < s.values.size(); ++w)
        out += std::to_string(w) + " " + std::to_string(s.values[w]) + "\n";
    return out;
}

std::string dump(const GwhtSpectrum& s) {
    std::string out;
    char buf[64];
    for (std::size_t w = 0; w < s.approx.size(); ++w) {
        out += std::to_string(w) + " ";
        if (s.exact)
            for (std::int64_t c : (*s.exact)[w].coeffs()) out += std::to_string(c) + " ";
        std::snprintf(buf, sizeof buf, "| %.12g %.12g", s.approx[w].real(), s.approx[w].imag());
        out += buf;
        out += "\n";
    }
    return out;
}

}  // namespace gbent
