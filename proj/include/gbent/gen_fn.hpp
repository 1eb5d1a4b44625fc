#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "gbent/bool_fn.hpp"

namespace gbent {

/// Generalized Boolean function Z_2^n -> Z_q as a length-2^n vector of
/// residues mod q, indexed like truth tables.
struct GenFn {
    int n = 0;
    std::uint32_t q = 2;
    std::vector<std::uint32_t> values;
};

/// Throws unless the table has 2^n entries, q >= 2 and every value is < q.
void validate(const GenFn& g);

/// log2(q) when q is a power of two, nullopt otherwise.
std::optional<int> exact_log2(std::uint32_t q);

/// Binary-digit components a_0,...,a_{p-1} of g with q = 2^p:
/// g(x) = sum_i 2^i a_i(x).  Throws when q is not a power of two.
std::vector<BoolFn> decompose(const GenFn& g);
GenFn compose(std::span<const BoolFn> parts);

GenFn genfn_from_bool(const BoolFn& f);  // q = 2

// Function file format: header line "n=<int> q=<int>", then one value per line.
void write_genfn(std::ostream& out, const GenFn& g);
GenFn read_genfn(std::istream& in);

}  // namespace gbent
