#pragma once

#include <optional>
#include <span>
#include <vector>

#include "artinlab/arith.hpp"

namespace artinlab {

/// An admissible k-tuple h_1 < ... < h_k. When built by paper_tuple the
/// offsets are h_i = (i - 1) K! and `K` records the threshold used.
struct TupleH {
    std::vector<i64> offsets;
    std::optional<u64> K;

    std::size_t k() const { return offsets.size(); }
    i64 front() const { return offsets.front(); }
    i64 back() const { return offsets.back(); }
    bool contains(i64 h) const;
};

/// True iff for every prime p <= k the offsets miss some residue class mod p.
/// Offsets must be distinct.
bool is_admissible(std::span<const i64> offsets);

/// Validates distinctness and admissibility and sorts the offsets.
TupleH make_tuple(std::vector<i64> offsets);

/// 9 k^2 4^k, or nullopt when it does not fit in 64 bits.
std::optional<u64> default_threshold(u64 k);

/// {0, K!, 2 K!, ..., (k - 1) K!} with K = min(9 k^2 4^k, K_override).
/// ResourceError when (k - 1) K! overflows; the message asks for an override.
TupleH paper_tuple(u64 k, std::optional<u64> K_override = std::nullopt);

/// Largest prime factor of any pairwise difference, 1 for k = 1.
u64 largest_difference_prime(const TupleH& tuple);

}  // namespace artinlab
