#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anatomy/interval.hpp"

namespace anatomy {

enum class SetId { B1, B, VB1, VB, F31, F3 };

std::string set_name(SetId id);
std::optional<SetId> parse_set_name(const std::string& name);

struct BadWitness {
    uint64_t N;
    uint64_t H;
    uint64_t p0;
};

struct F3IntervalRecord {
    uint64_t N;
    uint64_t H;
    uint64_t a;  // smallest witness
};

inline constexpr uint64_t kDefaultHmaxBad = 64;
inline constexpr uint64_t kDefaultHmaxVb = 8;
inline constexpr uint64_t kDefaultHmaxF3 = 64;

/// n <= x divisible by the square of their largest prime factor.
std::vector<uint64_t> enumerate_b1(uint64_t x, bool include_one = true);

/// Powerful numbers <= x via the a^2 b^3 (b squarefree) representation.
std::vector<uint64_t> enumerate_vb1(uint64_t x);

/// n <= x contained in at least one bad interval.  Run method over a
/// largest-prime-factor table, brute-force window scan for N <= hmax^2.
std::vector<uint64_t> enumerate_b(uint64_t x, uint64_t hmax = kDefaultHmaxBad,
                                  bool include_one = true);

/// Brute-force oracle: all n <= x covered by a bad interval with N <= x
/// and H <= hmax.
std::vector<uint64_t> enumerate_b_bruteforce(uint64_t x, uint64_t hmax,
                                             bool include_one = true);

/// n <= x contained in a very bad interval with H <= hmax (VB1 plus the
/// H >= 2 candidate-window search).
std::vector<uint64_t> enumerate_vb(uint64_t x, uint64_t hmax = kDefaultHmaxVb);

/// Second elements N of consecutive powerful pairs {N-1, N}, N <= x.
std::vector<uint64_t> consecutive_powerful(uint64_t x);

/// n <= x with s(n) = s(a!) for some 1 <= a < n-1.
std::vector<uint64_t> enumerate_f31(uint64_t x);

/// Brute-force oracle for F3^1 via per-n kernel comparison.
std::vector<uint64_t> enumerate_f31_bruteforce(uint64_t x);

/// Right endpoints N+H <= x of type F3 intervals with H <= hmax.
std::vector<uint64_t> enumerate_f3(uint64_t x, uint64_t hmax = kDefaultHmaxF3);

/// All type F3 intervals with 2 <= H <= hmax and N+H <= x.
std::vector<F3IntervalRecord> f3_interval_scan(uint64_t x, uint64_t hmax);

/// A bad interval containing n, if one exists with H <= hmax.
std::optional<BadWitness> bad_interval_witness(uint64_t n, uint64_t hmax);

struct CountTable {
    std::vector<SetId> sets;
    std::vector<uint64_t> thresholds;
    std::vector<std::vector<uint64_t>> counts;  // row per threshold
};

CountTable cumulative_counts(uint64_t x, const std::vector<SetId>& sets,
                             uint64_t step);

}  // namespace anatomy
