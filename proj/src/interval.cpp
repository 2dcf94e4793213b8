#include "anatomy/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anatomy {

IntervalProduct::IntervalProduct(uint64_t N, uint64_t H) : N_(N), H_(0) {
    if (H < 1) throw std::domain_error("IntervalProduct: H must be >= 1");
    for (uint64_t i = 0; i < H; ++i) extend();
}

IntervalProduct::IntervalProduct(uint64_t N, uint64_t H, const SpfTable& table)
    : N_(N), H_(0) {
    if (H < 1) throw std::domain_error("IntervalProduct: H must be >= 1");
    for (uint64_t i = 0; i < H; ++i) extend(table);
}

void IntervalProduct::absorb(const Factorization& f) {
    ++H_;
    for (auto& [p, e] : f.factors) {
        merged_[p] += e;
        if (e & 1) {
            kernel_.toggle(p);
            kernel_hash_ ^= prime_hash(p);
        }
    }
}

void IntervalProduct::extend() { absorb(factorize(N_ + H_ + 1)); }

void IntervalProduct::extend(const SpfTable& table) {
    absorb(factorize(N_ + H_ + 1, table));
}

std::pair<uint64_t, uint64_t> IntervalProduct::largest() const {
    if (merged_.empty())
        throw std::domain_error("IntervalProduct: product is 1");
    auto it = std::prev(merged_.end());
    return {it->first, it->second};
}

IntervalProduct interval_product(uint64_t N, uint64_t H) {
    return IntervalProduct(N, H);
}

bool is_bad(const IntervalProduct& ip) {
    if (ip.merged().empty()) return false;  // product 1
    return ip.largest().second >= 2;
}

bool is_very_bad(const IntervalProduct& ip) {
    for (auto& [p, e] : ip.merged())
        if (e < 2) return false;
    return true;
}

FactorialKernelTable::FactorialKernelTable(uint64_t amax) : amax_(amax) {
    if (amax < 1)
        throw std::domain_error("FactorialKernelTable: amax must be >= 1");
    kernels_.resize(amax + 1);
    ParitySet cur;  // kernel of 1! = {}
    by_hash_[cur.hash()].push_back(1);
    for (uint64_t a = 2; a <= amax; ++a) {
        for (auto& [p, e] : factorize(a).factors)
            if (e & 1) cur.toggle(p);
        kernels_[a] = cur;
        by_hash_[cur.hash()].push_back(a);
    }
    kernels_[1] = ParitySet{};
}

std::vector<uint64_t> FactorialKernelTable::matches(const ParitySet& ps,
                                                    uint64_t hash, uint64_t lo,
                                                    uint64_t hi) const {
    std::vector<uint64_t> out;
    auto it = by_hash_.find(hash);
    if (it == by_hash_.end()) return out;
    for (uint64_t a : it->second)
        if (a >= lo && a <= hi && kernels_[a] == ps) out.push_back(a);
    return out;
}

FactorialKernelTable build_factorial_kernels(uint64_t amax) {
    return FactorialKernelTable(amax);
}

uint64_t default_a_cap(uint64_t N, uint64_t H) {
    return static_cast<uint64_t>(
        std::ceil(4.0 * static_cast<double>(H) * std::log(static_cast<double>(N + H))));
}

std::vector<F3Witness> f3_witnesses(const IntervalProduct& ip,
                                    const FactorialKernelTable& table,
                                    uint64_t a_cap) {
    if (a_cap > table.amax())
        throw std::invalid_argument("f3_witnesses: a_cap exceeds table");
    std::vector<F3Witness> out;
    if (ip.N() < 2) return out;  // need 1 <= a < N
    // The largest prime of the kernel divides s(a!), so a must be at least
    // that prime.
    uint64_t lo = ip.kernel().empty() ? 1 : ip.kernel().primes.back();
    uint64_t hi = std::min(a_cap, ip.N() - 1);
    for (uint64_t a : table.matches(ip.kernel(), ip.kernel_hash(), lo, hi))
        out.push_back(F3Witness{a});
    std::sort(out.begin(), out.end(),
              [](const F3Witness& x, const F3Witness& y) { return x.a < y.a; });
    return out;
}

}  // namespace anatomy
