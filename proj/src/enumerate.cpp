#include "anatomy/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace anatomy {

std::string set_name(SetId id) {
    switch (id) {
        case SetId::B1: return "B1";
        case SetId::B: return "B";
        case SetId::VB1: return "VB1";
        case SetId::VB: return "VB";
        case SetId::F31: return "F31";
        case SetId::F3: return "F3";
    }
    return "?";
}

std::optional<SetId> parse_set_name(const std::string& name) {
    if (name == "B1") return SetId::B1;
    if (name == "B") return SetId::B;
    if (name == "VB1") return SetId::VB1;
    if (name == "VB") return SetId::VB;
    if (name == "F31") return SetId::F31;
    if (name == "F3") return SetId::F3;
    return std::nullopt;
}

namespace {

// Largest-prime-factor table on [2, limit].
std::vector<uint32_t> lpf_table(uint64_t limit) {
    std::vector<uint32_t> lpf(limit + 1, 0);
    for (uint64_t i = 2; i <= limit; ++i) {
        if (lpf[i]) continue;
        for (uint64_t j = i; j <= limit; j += i)
            lpf[j] = static_cast<uint32_t>(i);
    }
    return lpf;
}

bool squarefree(uint64_t n) {
    for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return false;
    }
    return true;
}

}  // namespace

std::vector<uint64_t> enumerate_b1(uint64_t x, bool include_one) {
    std::vector<uint64_t> out;
    if (x >= 1 && include_one) out.push_back(1);
    if (x < 4) return out;
    auto lpf = lpf_table(x);
    for (uint64_t n = 4; n <= x; ++n) {
        uint64_t p = lpf[n];
        if (n % (p * p) == 0) out.push_back(n);
    }
    return out;
}

std::vector<uint64_t> enumerate_vb1(uint64_t x) {
    std::vector<uint64_t> out;
    for (uint64_t b = 1; b * b * b <= x; ++b) {
        if (!squarefree(b)) continue;
        uint64_t cube = b * b * b;
        for (uint64_t a = 1; a * a <= x / cube; ++a) out.push_back(a * a * cube);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint64_t> enumerate_b(uint64_t x, uint64_t hmax, bool include_one) {
    if (x < 4) return enumerate_b1(x, include_one);
    double lx = std::log(static_cast<double>(x));
    uint64_t margin = hmax * static_cast<uint64_t>(std::ceil(lx * lx));
    uint64_t limit = x + margin;
    auto lpf = lpf_table(limit);
    std::vector<char> member(x + 1, 0);

    // Run method: seed at n0 with lpf(n0)^2 | n0, extend while the
    // largest prime factor stays <= p0.
    for (uint64_t n0 = 4; n0 <= limit; ++n0) {
        uint64_t p0 = lpf[n0];
        if (n0 % (p0 * p0)) continue;
        uint64_t l = n0;
        while (l > 2 && lpf[l - 1] <= p0) --l;
        if (l > x) continue;
        uint64_t r = n0;
        while (r < limit && lpf[r + 1] <= p0) ++r;
        for (uint64_t n = l; n <= std::min(r, x); ++n) member[n] = 1;
    }

    // Brute-force fallback for small N, where a bad interval need not
    // contain an element divisible by p0^2.
    uint64_t nmax = std::min(hmax * hmax, x);
    SpfTable spf(std::max<uint64_t>(2, isqrt(nmax + hmax) + 1));
    for (uint64_t N = 0; N <= nmax; ++N) {
        IntervalProduct ip(N, 1);
        for (uint64_t H = 1; H <= hmax; ++H) {
            if (H > 1) ip.extend();
            if (N + H > x + hmax) break;
            if (!ip.merged().empty() && is_bad(ip))
                for (uint64_t n = N + 1; n <= std::min(N + H, x); ++n)
                    member[n] = 1;
        }
    }

    std::vector<uint64_t> out;
    if (include_one) out.push_back(1);
    for (uint64_t n = 2; n <= x; ++n)
        if (member[n]) out.push_back(n);
    return out;
}

std::vector<uint64_t> enumerate_b_bruteforce(uint64_t x, uint64_t hmax,
                                             bool include_one) {
    std::vector<char> member(x + 1, 0);
    for (uint64_t N = 0; N <= x; ++N) {
        IntervalProduct ip(N, 1);
        for (uint64_t H = 1; H <= hmax && N + H <= x + hmax; ++H) {
            if (H > 1) ip.extend();
            if (N + 1 > x) break;
            if (is_bad(ip))
                for (uint64_t n = N + 1; n <= std::min(N + H, x); ++n)
                    member[n] = 1;
        }
    }
    std::vector<uint64_t> out;
    if (include_one && x >= 1) out.push_back(1);
    for (uint64_t n = 2; n <= x; ++n)
        if (member[n]) out.push_back(n);
    return out;
}

std::vector<uint64_t> enumerate_vb(uint64_t x, uint64_t hmax) {
    if (hmax < 2) throw std::domain_error("enumerate_vb: hmax must be >= 2");
    std::vector<uint64_t> out = enumerate_vb1(x);

    // Candidate set: every prime > hmax dividing n divides it at least
    // twice, i.e. n = (hmax-smooth) * (powerful with least prime > hmax).
    // Every element of a very bad interval with H <= hmax is of this form.
    std::vector<uint64_t> smooth;
    {
        smooth.push_back(1);
        for (uint32_t p : primes_up_to(hmax)) {
            size_t sz = smooth.size();
            for (size_t i = 0; i < sz; ++i) {
                uint64_t v = smooth[i];
                while (v <= x / p) {
                    v *= p;
                    smooth.push_back(v);
                }
            }
        }
    }
    std::vector<uint64_t> rough_powerful;
    for (uint64_t k : enumerate_vb1(x)) {
        bool ok = true;
        for (uint32_t p : primes_up_to(hmax))
            if (k % p == 0) { ok = false; break; }
        if (ok) rough_powerful.push_back(k);
    }
    std::vector<uint64_t> cand;
    for (uint64_t s : smooth)
        for (uint64_t k : rough_powerful) {
            if (k > x / s) continue;
            cand.push_back(s * k);
        }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    // Windows of consecutive integers inside the candidate set.
    std::vector<uint64_t> extra;
    for (size_t i = 0; i < cand.size(); ++i) {
        size_t j = i;
        while (j + 1 < cand.size() && cand[j + 1] == cand[j] + 1) ++j;
        uint64_t run_lo = cand[i], run_hi = cand[j];
        for (uint64_t start = run_lo; start + 1 <= run_hi; ++start) {
            IntervalProduct ip(start - 1, 2);
            for (uint64_t H = 2; H <= hmax && start - 1 + H <= run_hi; ++H) {
                if (H > 2) ip.extend();
                if (is_very_bad(ip))
                    for (uint64_t n = start; n <= start - 1 + H; ++n)
                        extra.push_back(n);
            }
        }
        i = j;
    }
    out.insert(out.end(), extra.begin(), extra.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<uint64_t> consecutive_powerful(uint64_t x) {
    auto vb1 = enumerate_vb1(x);
    std::unordered_set<uint64_t> set(vb1.begin(), vb1.end());
    std::vector<uint64_t> out;
    for (uint64_t n : vb1)
        if (n >= 2 && set.count(n - 1)) out.push_back(n);
    return out;
}

namespace {

// Kernels s(a!) as integers (capped at x), deduplicated, with the least a
// attaining each value.  Beyond the returned range every s(a!) exceeds x:
// the primes in (a/2, a] divide a! exactly once, and explicit Chebyshev
// bounds give theta(a) - theta(a/2) > 0.33 a for a >= 202.
std::vector<std::pair<uint64_t, uint64_t>> kernel_values(uint64_t x) {
    uint64_t amax = std::max<uint64_t>(
        210, static_cast<uint64_t>(std::ceil(3.1 * std::log(static_cast<double>(x)))) + 1);
    FactorialKernelTable table(amax);
    std::unordered_map<uint64_t, uint64_t> min_a;  // kernel value -> least a
    for (uint64_t a = 1; a <= amax; ++a) {
        const ParitySet& k = table.kernel(a);
        uint64_t s = 1;
        bool fits = true;
        for (uint64_t p : k.primes) {
            if (s > x / p) { fits = false; break; }
            s *= p;
        }
        if (!fits) continue;
        auto it = min_a.find(s);
        if (it == min_a.end() || a < it->second) min_a[s] = a;
    }
    return {min_a.begin(), min_a.end()};
}

}  // namespace

std::vector<uint64_t> enumerate_f31(uint64_t x) {
    std::vector<uint64_t> out;
    for (auto [s, a] : kernel_values(x)) {
        for (uint64_t k = 1; k <= isqrt(x / s); ++k) {
            uint64_t n = s * k * k;
            if (a + 1 < n) out.push_back(n);  // requires a < n - 1
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<uint64_t> enumerate_f31_bruteforce(uint64_t x) {
    uint64_t amax = std::max<uint64_t>(
        210, static_cast<uint64_t>(std::ceil(3.1 * std::log(static_cast<double>(std::max<uint64_t>(x, 2))))) + 1);
    FactorialKernelTable table(amax);
    SpfTable spf(std::max<uint64_t>(2, x));
    std::vector<uint64_t> out;
    for (uint64_t n = 2; n <= x; ++n) {
        ParitySet s = squarefree_part(factorize(n, spf));
        uint64_t hi = std::min(amax, n - 2);
        if (n < 3) continue;
        bool found = !table.matches(s, s.hash(), 1, hi).empty();
        if (found) out.push_back(n);
    }
    return out;
}

std::vector<F3IntervalRecord> f3_interval_scan(uint64_t x, uint64_t hmax) {
    std::vector<F3IntervalRecord> out;
    if (x < 3 || hmax < 2) return out;
    uint64_t amax = std::max<uint64_t>(default_a_cap(x, hmax), 16);
    FactorialKernelTable table(amax);
    SpfTable spf(std::max<uint64_t>(2, x));
    for (uint64_t N = 2; N + 2 <= x; ++N) {
        IntervalProduct ip(N, 1, spf);
        uint64_t top = std::min(hmax, x - N);
        for (uint64_t H = 2; H <= top; ++H) {
            ip.extend(spf);
            uint64_t a_cap = std::min(amax, default_a_cap(N, H));
            auto wit = f3_witnesses(ip, table, a_cap);
            if (!wit.empty()) out.push_back({N, H, wit.front().a});
        }
    }
    return out;
}

std::vector<uint64_t> enumerate_f3(uint64_t x, uint64_t hmax) {
    std::vector<uint64_t> out = enumerate_f31(x);
    for (const auto& rec : f3_interval_scan(x, hmax)) out.push_back(rec.N + rec.H);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<BadWitness> bad_interval_witness(uint64_t n, uint64_t hmax) {
    if (n < 2) return std::nullopt;
    // Canonical witness: largest special prime first, then shortest
    // interval, then largest N (so the interval starts at the p0^2 seed
    // when possible, matching the run method's anatomy).
    std::optional<BadWitness> best;
    uint64_t n_lo = (n > hmax) ? n - hmax : 1;
    for (uint64_t N = n_lo - 1; N < n; ++N) {
        IntervalProduct ip(N, 1);
        for (uint64_t H = 1; H <= hmax; ++H) {
            if (H > 1) ip.extend();
            if (N + H < n) continue;
            if (ip.merged().empty() || !is_bad(ip)) continue;
            uint64_t p0 = ip.largest().first;
            if (!best || p0 > best->p0 ||
                (p0 == best->p0 &&
                 (H < best->H || (H == best->H && N > best->N))))
                best = BadWitness{N, H, p0};
        }
    }
    return best;
}

CountTable cumulative_counts(uint64_t x, const std::vector<SetId>& sets,
                             uint64_t step) {
    if (step < 1) throw std::domain_error("cumulative_counts: step must be >= 1");
    CountTable t;
    t.sets = sets;
    std::vector<std::vector<uint64_t>> lists;
    for (SetId id : sets) {
        switch (id) {
            case SetId::B1: lists.push_back(enumerate_b1(x)); break;
            case SetId::B: lists.push_back(enumerate_b(x)); break;
            case SetId::VB1: lists.push_back(enumerate_vb1(x)); break;
            case SetId::VB: lists.push_back(enumerate_vb(x)); break;
            case SetId::F31: lists.push_back(enumerate_f31(x)); break;
            case SetId::F3: lists.push_back(enumerate_f3(x)); break;
        }
    }
    for (uint64_t thr = step; thr <= x; thr += step) {
        t.thresholds.push_back(thr);
        std::vector<uint64_t> row;
        for (auto& list : lists)
            row.push_back(std::upper_bound(list.begin(), list.end(), thr) -
                          list.begin());
        t.counts.push_back(std::move(row));
    }
    return t;
}

}  // namespace anatomy
