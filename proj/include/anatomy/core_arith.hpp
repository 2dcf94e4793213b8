#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace anatomy {

/// Exact prime decomposition.  Primes strictly increasing, exponents >= 1.
/// The empty factor list represents 1.
struct Factorization {
    uint64_t value = 1;
    std::vector<std::pair<uint64_t, uint32_t>> factors;

    bool operator==(const Factorization&) const = default;
};

/// Smallest-prime-factor table for 2..limit.
class SpfTable {
  public:
    explicit SpfTable(uint64_t limit);

    uint64_t limit() const { return limit_; }
    uint32_t spf(uint64_t n) const { return spf_[n]; }
    bool is_prime(uint64_t n) const { return n >= 2 && spf_[n] == n; }

    const std::vector<uint32_t>& primes() const { return primes_; }

  private:
    uint64_t limit_;
    std::vector<uint32_t> spf_;
    std::vector<uint32_t> primes_;
};

/// Set of primes occurring to an odd exponent; canonical form of the
/// squarefree kernel s(n).  Strictly increasing.
struct ParitySet {
    std::vector<uint64_t> primes;

    bool operator==(const ParitySet&) const = default;
    bool empty() const { return primes.empty(); }

    // s(m*n) = s(m) xor s(n)
    void toggle(uint64_t p);
    ParitySet sym_diff(const ParitySet& other) const;

    // XOR of per-prime hashes; order independent, O(1) to maintain
    // incrementally.
    uint64_t hash() const;
};

uint64_t prime_hash(uint64_t p);

SpfTable build_spf(uint64_t limit);

Factorization factorize(uint64_t n);
Factorization factorize(uint64_t n, const SpfTable& table);

/// Factorizations of N+1,...,N+H by sieving primes <= primes_to over the
/// window.  Requires primes_to >= sqrt(N+H) so each residual cofactor is
/// 1 or prime.
std::vector<Factorization> factorize_interval(uint64_t N, uint64_t H,
                                              uint64_t primes_to);

std::pair<uint64_t, uint32_t> largest_prime_factor(const Factorization& f);
ParitySet squarefree_part(const Factorization& f);
bool is_powerful(const Factorization& f);
bool is_smooth(const Factorization& f, uint64_t y);

/// Standalone powerful test (trial division to cbrt, square remainder).
bool is_powerful(uint64_t n);

uint64_t isqrt(uint64_t n);
bool is_square(uint64_t n);

std::vector<uint32_t> primes_up_to(uint64_t limit);

}  // namespace anatomy
