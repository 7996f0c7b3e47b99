#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artinlab/arith.hpp"
#include "artinlab/census.hpp"

namespace artinlab {

enum class PrStatus { DividesG, PrimitiveRoot, InPq };

std::string to_string(PrStatus s);

struct QClassification {
    u64 p = 0;
    PrStatus status = PrStatus::PrimitiveRoot;
    u64 q = 0;  // the least q when status == InPq, else 0
};

struct PrimrootOptions {
    CensusOptions census;
    /// Drop p = 2 and every p | 2g from censuses.
    bool exclude_small = false;
};

/// g is a primitive root mod 2 iff g is odd.
bool is_primitive_root(i64 g, u64 p);

/// p = 1 (mod q) and g^((p-1)/q) = 1 (mod p). Throws std::invalid_argument when p | g.
bool in_Pq0(i64 g, u64 p, u64 q);

/// Least prime q | p - 1 with in_Pq0, scanning q upward.
QClassification classify(i64 g, u64 p);

std::vector<u64> enumerate_pr_primes(i64 g, u64 lo, u64 hi, const PrimrootOptions& options = {});
u64 count_pr_primes(i64 g, u64 lo, u64 hi, const PrimrootOptions& options = {});

struct GapReport {
    i64 g = 0;
    u64 x = 0;
    unsigned m = 2;
    u64 primes_found = 0;
    u64 min_gap = 0;
    u64 attained_at = 0;
    /// span q_{n+m-1} - q_n -> number of n
    std::map<u64, u64> histogram;
};

/// Spans of m consecutive members of the primitive-root sequence up to x (inclusive).
/// Throws InsufficientData when fewer than m primes are found.
GapReport gap_stats(i64 g, u64 x, unsigned m, const PrimrootOptions& options = {});

/// First run of m consecutive primes, all at most x, each having g as a primitive root.
std::optional<std::vector<u64>> consecutive_run(i64 g, u64 x, unsigned m, const PrimrootOptions& options = {});

}  // namespace artinlab
