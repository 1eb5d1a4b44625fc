#include "gbent/bool_fn.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace gbent {

namespace {

constexpr int kMaxVars = 30;

std::size_t word_count(int n) {
    const std::uint64_t entries = std::uint64_t{1} << n;
    return static_cast<std::size_t>((entries + 63) >> 6);
}

void check_n(int n) {
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("variable count must be in [1, 30]");
}

std::vector<std::uint64_t> table_from_string(int n, std::string_view bits) {
    check_n(n);
    if (bits.size() != (std::uint64_t{1} << n))
        throw std::invalid_argument("truth table must have exactly 2^n entries");
    std::vector<std::uint64_t> words(word_count(n), 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            words[i >> 6] |= std::uint64_t{1} << (i & 63);
        else if (bits[i] != '0')
            throw std::invalid_argument("truth table must consist of 0/1 characters");
    }
    return words;
}

std::string string_from_table(std::uint64_t entries, std::span<const std::uint64_t> words) {
    std::string s(entries, '0');
    for (std::uint64_t i = 0; i < entries; ++i)
        if ((words[i >> 6] >> (i & 63)) & 1) s[i] = '1';
    return s;
}

// Subset-sum butterfly over GF(2): t[i | 2^b] ^= t[i].  Strides below the
// word size are done with masked shifts, larger strides word-by-word.
constexpr std::uint64_t kStrideMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

void mobius_inplace(std::span<std::uint64_t> words, int n) {
    for (int b = 0; b < n && b < 6; ++b)
        for (auto& w : words) w ^= (w & kStrideMask[b]) << (1u << b);
    for (int b = 6; b < n; ++b) {
        const std::size_t step = std::size_t{1} << (b - 6);
        for (std::size_t base = 0; base < words.size(); base += 2 * step)
            for (std::size_t j = 0; j < step; ++j) words[base + step + j] ^= words[base + j];
    }
}

}  // namespace

BoolFn::BoolFn(int n) : n_(n), table_(word_count(n), 0) { check_n(n); }

BoolFn BoolFn::from_bit_string(int n, std::string_view bits) {
    BoolFn f(n);
    f.table_ = table_from_string(n, bits);
    return f;
}

std::string BoolFn::bit_string() const { return string_from_table(size(), table_); }

BoolFn BoolFn::operator^(const BoolFn& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("BoolFn: variable count mismatch in xor");
    BoolFn out(n_);
    for (std::size_t w = 0; w < table_.size(); ++w) out.table_[w] = table_[w] ^ rhs.table_[w];
    return out;
}

AnfPoly::AnfPoly(int n) : n_(n), coeffs_(word_count(n), 0) { check_n(n); }

AnfPoly AnfPoly::from_bit_string(int n, std::string_view bits) {
    AnfPoly a(n);
    a.coeffs_ = table_from_string(n, bits);
    return a;
}

std::string AnfPoly::bit_string() const { return string_from_table(size(), coeffs_); }

int eval(const BoolFn& f, Gf2Vec x) {
    if (x.len != f.n()) throw std::invalid_argument("eval: vector length does not match variable count");
    return f.get(x.bits);
}

BoolFn anf_to_table(const AnfPoly& a) {
    BoolFn f = BoolFn::from_bit_string(a.n(), a.bit_string());
    mobius_inplace(f.words(), f.n());
    return f;
}

AnfPoly table_to_anf(const BoolFn& f) {
    BoolFn tmp = f;
    mobius_inplace(tmp.words(), tmp.n());
    return AnfPoly::from_bit_string(f.n(), tmp.bit_string());
}

BoolFn dot_combine(Gf2Vec z, std::span<const BoolFn> fs) {
    if (static_cast<std::size_t>(z.len) != fs.size())
        throw std::invalid_argument("dot_combine: selector length must equal the number of functions");
    if (fs.empty()) throw std::invalid_argument("dot_combine: needs at least one function");
    BoolFn acc(fs[0].n());
    for (int m = 0; m < z.len; ++m) {
        if (fs[static_cast<std::size_t>(m)].n() != acc.n())
            throw std::invalid_argument("dot_combine: variable count mismatch");
        if (z.bit(m)) acc = acc ^ fs[static_cast<std::size_t>(m)];
    }
    return acc;
}

namespace {

int parse_header_n(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("missing \"n=<int>\" header line");
    if (line.rfind("n=", 0) != 0) throw std::invalid_argument("expected \"n=<int>\" header line");
    int n = 0;
    const char* first = line.data() + 2;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || ptr != last) throw std::invalid_argument("malformed variable count");
    return n;
}

}  // namespace

std::string to_table_text(const BoolFn& f) {
    std::ostringstream os;
    os << "n=" << f.n() << "\n" << f.bit_string() << "\n";
    return os.str();
}

BoolFn parse_table_text(std::istream& in) {
    const int n = parse_header_n(in);
    check_n(n);
    std::string bits;
    if (!std::getline(in, bits)) throw std::invalid_argument("missing truth-table line");
    return BoolFn::from_bit_string(n, bits);
}

std::string anf_expr(const AnfPoly& a) {
    std::string out;
    for (std::uint64_t u = 0; u < a.size(); ++u) {
        if (!a.get(u)) continue;
        if (!out.empty()) out += " + ";
        if (u == 0) {
            out += "1";
            continue;
        }
        bool first = true;
        for (int j = 0; j < a.n(); ++j) {
            if (!((u >> j) & 1)) continue;
            if (!first) out += "*";
            out += "x" + std::to_string(j);
            first = false;
        }
    }
    return out.empty() ? "0" : out;
}

AnfPoly parse_anf_expr(int n, std::string_view expr) {
    check_n(n);
    AnfPoly a(n);
    std::string term;
    auto flush_term = [&](std::string_view t) {
        // strip whitespace
        std::size_t b = t.find_first_not_of(" \t");
        std::size_t e = t.find_last_not_of(" \t");
        if (b == std::string_view::npos) throw std::invalid_argument("empty term in ANF expression");
        t = t.substr(b, e - b + 1);
        if (t == "0") return;  // additive identity
        std::uint64_t u = 0;
        if (t != "1") {
            std::size_t pos = 0;
            while (pos < t.size()) {
                std::size_t star = t.find('*', pos);
                std::string_view var = t.substr(pos, star == std::string_view::npos ? star : star - pos);
                std::size_t vb = var.find_first_not_of(" \t");
                std::size_t ve = var.find_last_not_of(" \t");
                if (vb == std::string_view::npos) throw std::invalid_argument("empty factor in ANF term");
                var = var.substr(vb, ve - vb + 1);
                if (var.size() < 2 || var[0] != 'x')
                    throw std::invalid_argument("ANF factor must look like x<index>");
                int idx = 0;
                auto [ptr, ec] = std::from_chars(var.data() + 1, var.data() + var.size(), idx);
                if (ec != std::errc{} || ptr != var.data() + var.size())
                    throw std::invalid_argument("malformed variable index in ANF term");
                if (idx < 0 || idx >= n) throw std::invalid_argument("ANF variable index out of range");
                u |= std::uint64_t{1} << idx;
                pos = (star == std::string_view::npos) ? t.size() : star + 1;
            }
        }
        a.set(u, a.get(u) ^ 1);  // repeated terms cancel over GF(2)
    };
    std::size_t pos = 0;
    while (pos <= expr.size()) {
        std::size_t plus = expr.find('+', pos);
        if (plus == std::string_view::npos) {
            flush_term(expr.substr(pos));
            break;
        }
        flush_term(expr.substr(pos, plus - pos));
        pos = plus + 1;
    }
    return a;
}

std::string to_anf_text(const AnfPoly& a) {
    std::ostringstream os;
    os << "n=" << a.n() << "\n" << anf_expr(a) << "\n";
    return os.str();
}

AnfPoly parse_anf_text(std::istream& in) {
    const int n = parse_header_n(in);
    std::string expr;
    if (!std::getline(in, expr)) throw std::invalid_argument("missing ANF expression line");
    return parse_anf_expr(n, expr);
}

}  // namespace gbent
