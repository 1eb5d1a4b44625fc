#include "gbent/gen_fn.hpp"

#include <bit>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gbent {

void validate(const GenFn& g) {
    if (g.n < 1 || g.n > 30) throw std::invalid_argument("GenFn: variable count must be in [1, 30]");
    if (g.q < 2) throw std::invalid_argument("GenFn: modulus q must be at least 2");
    if (g.values.size() != (std::size_t{1} << g.n))
        throw std::invalid_argument("GenFn: value table must have exactly 2^n entries");
    for (std::uint32_t v : g.values)
        if (v >= g.q) throw std::invalid_argument("GenFn: value out of range [0, q)");
}

std::optional<int> exact_log2(std::uint32_t q) {
    if (q == 0 || !std::has_single_bit(q)) return std::nullopt;
    return std::countr_zero(q);
}

std::vector<BoolFn> decompose(const GenFn& g) {
    validate(g);
    const auto p = exact_log2(g.q);
    if (!p) throw std::invalid_argument("decompose: q must be a power of two");
    std::vector<BoolFn> parts;
    parts.reserve(static_cast<std::size_t>(*p));
    for (int i = 0; i < *p; ++i) {
        BoolFn a(g.n);
        for (std::uint64_t x = 0; x < g.values.size(); ++x)
            a.set(x, static_cast<int>((g.values[x] >> i) & 1));
        parts.push_back(std::move(a));
    }
    return parts;
}

GenFn compose(std::span<const BoolFn> parts) {
    if (parts.empty()) throw std::invalid_argument("compose: needs at least one component");
    if (parts.size() > 31) throw std::invalid_argument("compose: too many components");
    const int n = parts[0].n();
    GenFn g{n, std::uint32_t{1} << parts.size(), std::vector<std::uint32_t>(std::size_t{1} << n, 0)};
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].n() != n) throw std::invalid_argument("compose: variable count mismatch");
        for (std::uint64_t x = 0; x < g.values.size(); ++x)
            g.values[x] |= static_cast<std::uint32_t>(parts[i].get(x)) << i;
    }
    return g;
}

GenFn genfn_from_bool(const BoolFn& f) {
    GenFn g{f.n(), 2, std::vector<std::uint32_t>(f.size(), 0)};
    for (std::uint64_t x = 0; x < g.values.size(); ++x)
        g.values[x] = static_cast<std::uint32_t>(f.get(x));
    return g;
}

void write_genfn(std::ostream& out, const GenFn& g) {
    validate(g);
    out << "n=" << g.n << " q=" << g.q << "\n";
    for (std::uint32_t v : g.values) out << v << "\n";
}

GenFn read_genfn(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("missing function file header");
    int n = 0;
    std::uint32_t q = 0;
    {
        const std::string_view sv{header};
        if (sv.rfind("n=", 0) != 0) throw std::invalid_argument("expected \"n=<int> q=<int>\" header");
        const std::size_t sp = sv.find(' ');
        if (sp == std::string_view::npos || sv.substr(sp + 1, 2) != "q=")
            throw std::invalid_argument("expected \"n=<int> q=<int>\" header");
        auto r1 = std::from_chars(sv.data() + 2, sv.data() + sp, n);
        auto r2 = std::from_chars(sv.data() + sp + 3, sv.data() + sv.size(), q);
        if (r1.ec != std::errc{} || r1.ptr != sv.data() + sp || r2.ec != std::errc{} ||
            r2.ptr != sv.data() + sv.size())
            throw std::invalid_argument("malformed function file header");
    }
    if (n < 1 || n > 30) throw std::invalid_argument("function file: variable count out of range");
    GenFn g{n, q, {}};
    g.values.reserve(std::size_t{1} << n);
    std::string line;
    while (g.values.size() < (std::size_t{1} << n)) {
        if (!std::getline(in, line)) throw std::invalid_argument("function file: too few values");
        if (line.empty()) continue;
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
        if (ec != std::errc{} || ptr != line.data() + line.size())
            throw std::invalid_argument("function file: malformed value line");
        g.values.push_back(v);
    }
    validate(g);
    return g;
}

}  // namespace gbent
