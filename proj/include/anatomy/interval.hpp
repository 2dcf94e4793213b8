#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "anatomy/core_arith.hpp"

namespace anatomy {

/// Merged factorization of (N+1)...(N+H) with incremental extension.
class IntervalProduct {
  public:
    IntervalProduct(uint64_t N, uint64_t H);
    IntervalProduct(uint64_t N, uint64_t H, const SpfTable& table);

    // Appends N+H+1 to the window.
    void extend();
    void extend(const SpfTable& table);

    uint64_t N() const { return N_; }
    uint64_t H() const { return H_; }
    const std::map<uint64_t, uint64_t>& merged() const { return merged_; }
    std::pair<uint64_t, uint64_t> largest() const;

    const ParitySet& kernel() const { return kernel_; }
    uint64_t kernel_hash() const { return kernel_hash_; }

  private:
    void absorb(const Factorization& f);

    uint64_t N_, H_;
    std::map<uint64_t, uint64_t> merged_;
    ParitySet kernel_;
    uint64_t kernel_hash_ = 0;
};

/// a such that s(a!) equals the interval kernel, 1 <= a < N.
struct F3Witness {
    uint64_t a;
};

/// Kernels of a! for 1 <= a <= amax, with hash index for equality lookups.
class FactorialKernelTable {
  public:
    explicit FactorialKernelTable(uint64_t amax);

    uint64_t amax() const { return amax_; }
    const ParitySet& kernel(uint64_t a) const { return kernels_[a]; }

    /// All a in [lo, hi] whose kernel equals `ps` (exact set comparison
    /// behind the hash).
    std::vector<uint64_t> matches(const ParitySet& ps, uint64_t hash,
                                  uint64_t lo, uint64_t hi) const;

  private:
    uint64_t amax_;
    std::vector<ParitySet> kernels_;  // index 0 unused
    std::unordered_map<uint64_t, std::vector<uint64_t>> by_hash_;
};

FactorialKernelTable build_factorial_kernels(uint64_t amax);

IntervalProduct interval_product(uint64_t N, uint64_t H);

bool is_bad(const IntervalProduct& ip);
bool is_very_bad(const IntervalProduct& ip);

/// Default witness cap ceil(4 H log(N+H)).
uint64_t default_a_cap(uint64_t N, uint64_t H);

std::vector<F3Witness> f3_witnesses(const IntervalProduct& ip,
                                    const FactorialKernelTable& table,
                                    uint64_t a_cap);

}  // namespace anatomy
