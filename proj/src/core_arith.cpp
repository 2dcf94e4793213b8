#include "anatomy/core_arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anatomy {

SpfTable::SpfTable(uint64_t limit) : limit_(limit) {
    if (limit < 2) throw std::domain_error("SpfTable: limit must be >= 2");
    spf_.assign(limit + 1, 0);
    for (uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<uint32_t>(i);
            primes_.push_back(static_cast<uint32_t>(i));
        }
        for (uint32_t p : primes_) {
            if (p > spf_[i] || i * p > limit) break;
            spf_[i * p] = p;
        }
    }
}

SpfTable build_spf(uint64_t limit) { return SpfTable(limit); }

void ParitySet::toggle(uint64_t p) {
    auto it = std::lower_bound(primes.begin(), primes.end(), p);
    if (it != primes.end() && *it == p)
        primes.erase(it);
    else
        primes.insert(it, p);
}

ParitySet ParitySet::sym_diff(const ParitySet& other) const {
    ParitySet out;
    std::set_symmetric_difference(primes.begin(), primes.end(),
                                  other.primes.begin(), other.primes.end(),
                                  std::back_inserter(out.primes));
    return out;
}

uint64_t prime_hash(uint64_t p) {
    // splitmix64
    uint64_t z = p + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t ParitySet::hash() const {
    uint64_t h = 0;
    for (uint64_t p : primes) h ^= prime_hash(p);
    return h;
}

Factorization factorize(uint64_t n) {
    if (n == 0) throw std::domain_error("factorize: n must be >= 1");
    Factorization f;
    f.value = n;
    for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        uint32_t e = 0;
        while (n % p == 0) n /= p, ++e;
        f.factors.emplace_back(p, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

Factorization factorize(uint64_t n, const SpfTable& table) {
    if (n == 0) throw std::domain_error("factorize: n must be >= 1");
    if (n > table.limit()) return factorize(n);
    Factorization f;
    f.value = n;
    while (n > 1) {
        uint64_t p = table.spf(n);
        uint32_t e = 0;
        while (n % p == 0) n /= p, ++e;
        f.factors.emplace_back(p, e);
    }
    return f;
}

std::vector<Factorization> factorize_interval(uint64_t N, uint64_t H,
                                              uint64_t primes_to) {
    if (H < 1) throw std::domain_error("factorize_interval: H must be >= 1");
    uint64_t top = N + H;
    if (primes_to * primes_to < top)
        throw std::invalid_argument(
            "factorize_interval: primes_to must be >= sqrt(N+H)");

    std::vector<Factorization> out(H);
    std::vector<uint64_t> residual(H);
    for (uint64_t i = 0; i < H; ++i) {
        out[i].value = N + 1 + i;
        residual[i] = N + 1 + i;
    }

    for (uint32_t p : primes_up_to(std::min<uint64_t>(primes_to, top))) {
        uint64_t first = ((N + 1) + p - 1) / p * p;
        for (uint64_t m = first; m <= top; m += p) {
            uint64_t i = m - (N + 1);
            uint32_t e = 0;
            while (residual[i] % p == 0) residual[i] /= p, ++e;
            if (e) out[i].factors.emplace_back(p, e);
        }
    }
    // Anything left is 1 or a prime > primes_to.
    for (uint64_t i = 0; i < H; ++i)
        if (residual[i] > 1) out[i].factors.emplace_back(residual[i], 1);
    return out;
}

std::pair<uint64_t, uint32_t> largest_prime_factor(const Factorization& f) {
    if (f.factors.empty())
        throw std::domain_error("largest_prime_factor: 1 has no prime factors");
    return f.factors.back();
}

ParitySet squarefree_part(const Factorization& f) {
    ParitySet s;
    for (auto& [p, e] : f.factors)
        if (e & 1) s.primes.push_back(p);
    return s;
}

bool is_powerful(const Factorization& f) {
    for (auto& [p, e] : f.factors)
        if (e < 2) return false;
    return true;
}

bool is_smooth(const Factorization& f, uint64_t y) {
    return f.factors.empty() || f.factors.back().first <= y;
}

bool is_powerful(uint64_t n) {
    if (n == 0) return false;
    for (uint64_t p = 2; p * p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        uint32_t e = 0;
        while (n % p == 0) n /= p, ++e;
        if (e < 2) return false;
    }
    // Residual is 1, a prime, a prime square, or a product of two primes.
    return n == 1 || is_square(n);
}

uint64_t isqrt(uint64_t n) {
    if (n == 0) return 0;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

bool is_square(uint64_t n) {
    uint64_t r = isqrt(n);
    return r * r == n;
}

std::vector<uint32_t> primes_up_to(uint64_t limit) {
    std::vector<uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<char> composite(limit + 1, 0);
    for (uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<uint32_t>(i));
        for (uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return primes;
}

}  // namespace anatomy
