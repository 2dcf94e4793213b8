#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace anatomy {

/// u0 and z at scale x, with z = x^(1/u0).
struct ScaleParams {
    double x;
    double u0;
    double z;
};

/// Psi(x,y): number of y-smooth integers up to x.  Exact.
class PsiCounter {
  public:
    uint64_t psi(uint64_t x, uint64_t y);

  private:
    uint64_t psi_rec(uint64_t x, size_t k);  // largest allowed prime index < k
    void ensure_primes(uint64_t y);

    std::vector<uint32_t> primes_;
    std::unordered_map<uint64_t, uint64_t> memo_;
};

uint64_t psi(uint64_t x, uint64_t y);

ScaleParams scale_params(double x);

/// #(B^1 cap [1,x]) via sum over p <= sqrt(x) of Psi(x/p^2, p).
/// 1 is excluded (the defining predicate fails for it).
uint64_t b1_count_exact(uint64_t x);

}  // namespace anatomy
