#include "anatomy/smooth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anatomy/core_arith.hpp"

namespace anatomy {

namespace {
// memo key packs x (< 2^44) with the prime-index bound (< 2^20)
uint64_t memo_key(uint64_t x, size_t k) { return (x << 20) | k; }
}  // namespace

void PsiCounter::ensure_primes(uint64_t y) {
    if (!primes_.empty() && primes_.back() >= y) return;
    primes_ = primes_up_to(y);
}

uint64_t PsiCounter::psi_rec(uint64_t x, size_t k) {
    if (x == 0) return 0;
    if (k == 0) return 1;
    // All primes <= x allowed: every n <= x is smooth.
    if (primes_[k - 1] >= x) return x;
    uint64_t key = memo_key(x, k);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    // Psi(x,y) = 1 + sum over primes p <= y of Psi(x/p, p)
    uint64_t total = 1;
    for (size_t j = 1; j <= k; ++j) total += psi_rec(x / primes_[j - 1], j);
    memo_.emplace(key, total);
    return total;
}

uint64_t PsiCounter::psi(uint64_t x, uint64_t y) {
    if (x < 1 || y < 1)
        throw std::domain_error("psi: x and y must be >= 1");
    if (y >= x) return x;
    ensure_primes(y);
    size_t k = std::upper_bound(primes_.begin(), primes_.end(), y) -
               primes_.begin();
    return psi_rec(x, k);
}

uint64_t psi(uint64_t x, uint64_t y) {
    PsiCounter c;
    return c.psi(x, y);
}

ScaleParams scale_params(double x) {
    double lx = std::log(x);
    if (lx <= 1.0)
        throw std::domain_error("scale_params: need x > e (log log x > 0)");
    double llx = std::log(lx);
    ScaleParams sp;
    sp.x = x;
    sp.u0 = std::sqrt(2.0) * std::sqrt(lx) / std::sqrt(llx);
    sp.z = std::exp(lx / sp.u0);
    return sp;
}

uint64_t b1_count_exact(uint64_t x) {
    if (x < 1) throw std::domain_error("b1_count_exact: x must be >= 1");
    PsiCounter counter;
    uint64_t total = 0;
    for (uint32_t p : primes_up_to(isqrt(x)))
        total += counter.psi(x / (static_cast<uint64_t>(p) * p), p);
    return total;
}

}  // namespace anatomy
