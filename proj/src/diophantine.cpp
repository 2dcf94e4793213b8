#include "anatomy/diophantine.hpp"

#include <algorithm>
#include <stdexcept>

namespace anatomy {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

bool is_square_u128(u128 n, uint64_t* root) {
    if (n > u128(UINT64_MAX) * UINT64_MAX) return false;
    u128 lo = 0, hi = UINT64_MAX;
    while (lo < hi) {
        u128 mid = (lo + hi) / 2;
        if (mid * mid < n)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo * lo != n) return false;
    if (root) *root = static_cast<uint64_t>(lo);
    return true;
}

std::vector<uint64_t> divisors_from(const Factorization& f) {
    std::vector<uint64_t> divs{1};
    for (auto& [p, e] : f.factors) {
        size_t sz = divs.size();
        uint64_t pk = 1;
        for (uint32_t i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

PellSolution pell_fundamental(uint64_t D) {
    if (D < 2 || is_square(D))
        throw std::domain_error("pell_fundamental: D must be a nonsquare >= 2");
    uint64_t a0 = isqrt(D);
    uint64_t m = 0, d = 1, a = a0;
    u128 p_prev = 1, p_cur = a0;
    u128 q_prev = 0, q_cur = 1;
    while (true) {
        if (p_cur * p_cur == u128(D) * q_cur * q_cur + 1)
            return {1, D, static_cast<uint64_t>(p_cur),
                    static_cast<uint64_t>(q_cur)};
        m = d * a - m;
        d = (D - m * m) / d;
        a = (a0 + m) / d;
        u128 p_next = u128(a) * p_cur + p_prev;
        u128 q_next = u128(a) * q_cur + q_prev;
        p_prev = p_cur; p_cur = p_next;
        q_prev = q_cur; q_cur = q_next;
        if (p_cur > (u128(1) << 100))
            throw std::overflow_error("pell_fundamental: solution too large");
    }
}

std::vector<PellSolution> pell_like_solutions(uint64_t u, uint64_t v,
                                              uint64_t ybound) {
    if (u < 1 || v < 1)
        throw std::domain_error("pell_like_solutions: u, v must be >= 1");
    std::vector<PellSolution> out;
    for (uint64_t y = 1; y <= ybound; ++y) {
        u128 t = u128(v) * y * y + 1;
        if (t % u) continue;
        uint64_t x;
        if (is_square_u128(t / u, &x)) out.push_back({u, v, x, y});
    }
    return out;
}

std::vector<F3PellMember> f3_from_pell(uint64_t a, uint64_t ybound,
                                       const FactorialKernelTable& table) {
    if (a < 1 || a > 20)
        throw std::domain_error(
            "f3_from_pell: a! divisor enumeration needs 1 <= a <= 20");
    uint64_t fact = 1;
    for (uint64_t i = 2; i <= a; ++i) fact *= i;
    std::vector<F3PellMember> out;
    for (uint64_t u : divisors_from(factorize(fact))) {
        uint64_t v = fact / u;
        for (const auto& sol : pell_like_solutions(u, v, ybound)) {
            uint64_t vy2 = v * sol.y * sol.y;
            if (vy2 <= a) continue;  // need a < N for the witness
            // Replay {v y^2, v y^2 + 1} through the interval classifier.
            IntervalProduct ip(vy2 - 1, 2);
            uint64_t a_cap = std::min<uint64_t>(table.amax(), vy2 - 1);
            bool verified = false;
            for (const auto& w : f3_witnesses(ip, table, a_cap))
                if (w.a == a) { verified = true; break; }
            if (verified) out.push_back({vy2 + 1, u, v, sol.x, sol.y, a});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const F3PellMember& l, const F3PellMember& r) {
                  return l.member < r.member;
              });
    return out;
}

uint64_t count_hyperbola(const HyperbolaQuery& q) {
    if (q.a < 1 || q.b < 1 || q.h == 0)
        throw std::domain_error("count_hyperbola: need a,b >= 1 and h != 0");
    uint64_t count = 0;
    for (uint64_t n = 1; n <= q.x; ++n) {
        i128 t = i128(q.a) * n * n + q.h;
        if (t < i128(q.b)) continue;  // m >= 1
        if (t % i128(q.b)) continue;
        if (is_square_u128(u128(t / q.b), nullptr)) ++count;
    }
    return count;
}

uint64_t count_hyperbola_divisor(const HyperbolaQuery& q) {
    uint64_t ab = q.a * q.b;
    if (!is_square(ab))
        throw std::domain_error("count_hyperbola_divisor: a*b must be square");
    uint64_t c = isqrt(ab);
    // a n^2 + h = b m^2  <=>  (bm - cn)(bm + cn) = b h
    i128 K = i128(q.b) * q.h;
    uint64_t absK = static_cast<uint64_t>(K < 0 ? -K : K);
    uint64_t count = 0;
    for (uint64_t e2 : divisors_from(factorize(absK))) {
        i128 e1 = K / i128(e2);  // e2 > 0, e1 carries the sign of K
        i128 twice_bm = e1 + i128(e2);
        i128 twice_cn = i128(e2) - e1;
        if (twice_bm <= 0 || twice_cn <= 0) continue;
        if (twice_bm % 2 || twice_cn % 2) continue;
        i128 bm = twice_bm / 2, cn = twice_cn / 2;
        if (bm % i128(q.b) || cn % i128(c)) continue;
        uint64_t n = static_cast<uint64_t>(cn / i128(c));
        uint64_t m = static_cast<uint64_t>(bm / i128(q.b));
        if (n >= 1 && m >= 1 && n <= q.x) ++count;
    }
    return count;
}

uint64_t count_powerful_linear(uint64_t a, uint64_t b, int64_t h, uint64_t x) {
    if (a < 1 || b < 1 || h == 0)
        throw std::domain_error("count_powerful_linear: need a,b >= 1, h != 0");
    uint64_t count = 0;
    // powerful n with a*n <= x, generated as r^2 s^3 with s squarefree
    for (uint64_t s = 1; s * s * s <= x / a; ++s) {
        Factorization sf = factorize(s);
        bool sqfree = true;
        for (auto& [p, e] : sf.factors)
            if (e > 1) { sqfree = false; break; }
        if (!sqfree) continue;
        uint64_t cube = s * s * s;
        for (uint64_t r = 1; r * r <= (x / a) / cube; ++r) {
            uint64_t n = r * r * cube;
            i128 t = i128(a) * n + h;
            if (t < 1) continue;
            if (t % i128(b)) continue;
            uint64_t m = static_cast<uint64_t>(t / i128(b));
            if (is_powerful(m)) ++count;
        }
    }
    return count;
}

PellSolution pell_compose(const PellSolution& s1, const PellSolution& s2,
                          uint64_t D) {
    u128 x = u128(s1.x) * s2.x + u128(D) * s1.y * s2.y;
    u128 y = u128(s1.x) * s2.y + u128(s2.x) * s1.y;
    if (x > UINT64_MAX || y > UINT64_MAX)
        throw std::overflow_error("pell_compose: overflow");
    return {1, D, static_cast<uint64_t>(x), static_cast<uint64_t>(y)};
}

}  // namespace anatomy
