#include "anatomy/probes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "anatomy/core_arith.hpp"

namespace anatomy {

namespace {

// zeta(s) via the alternating eta series; tail certified by the
// alternating series bound.
long double zeta_eta(long double s, long double max_err, long double* err) {
    long double scale = 1.0L - std::pow(2.0L, 1.0L - s);
    // need (N+1)^-s <= max_err * scale
    long double n_needed = std::pow(max_err * scale, -1.0L / s);
    uint64_t N = static_cast<uint64_t>(n_needed) + 2;
    long double eta = 0.0L;
    for (uint64_t n = N; n >= 1; --n) {
        long double term = std::pow(static_cast<long double>(n), -s);
        eta += (n & 1) ? term : -term;
    }
    *err = std::pow(static_cast<long double>(N + 1), -s) / scale;
    return eta / scale;
}

}  // namespace

CertifiedValue erdos_szekeres_constant(double precision) {
    if (precision < 1e-8)
        throw std::domain_error("erdos_szekeres_constant: precision >= 1e-8");
    long double e32, e3;
    long double z32 = zeta_eta(1.5L, precision / 4, &e32);
    long double z3 = zeta_eta(3.0L, precision / 4, &e3);
    long double value = z32 / z3;
    long double tail = (e32 + value * e3) / (z3 - e3);
    return {static_cast<double>(value), static_cast<double>(tail)};
}

CertifiedValue c31_constant(double precision) {
    if (precision < 1e-4)
        throw std::domain_error("c31_constant: precision >= 1e-4");
    // theta prefix: theta(a) - theta(a/2) lower-bounds log s(a!) since the
    // primes in (a/2, a] divide a! exactly once.
    const uint64_t kThetaMax = 4096;
    std::vector<long double> theta(kThetaMax + 1, 0.0L);
    {
        auto ps = primes_up_to(kThetaMax);
        size_t i = 0;
        long double acc = 0.0L;
        for (uint64_t n = 0; n <= kThetaMax; ++n) {
            if (i < ps.size() && ps[i] == n) acc += std::log((long double)n), ++i;
            theta[n] = acc;
        }
    }
    auto tail_from = [&](uint64_t A) {
        long double t = 0.0L;
        for (uint64_t a = A + 1; a <= kThetaMax; ++a)
            t += std::exp(-(theta[a] - theta[a / 2]) / 2);
        // a > kThetaMax: theta(a) - theta(a/2) > 0.33 a (explicit Chebyshev
        // bounds, a >= 202), geometric remainder
        t += std::exp(-0.165L * (kThetaMax + 1)) / (1.0L - std::exp(-0.165L));
        return t;
    };

    ParitySet kernel;
    std::set<std::vector<uint64_t>> seen;
    long double sum = 0.0L;
    uint64_t a = 0;
    long double tail = 1.0L;
    while (tail >= precision / 2) {
        ++a;
        if (a > kThetaMax - 2)
            throw std::runtime_error("c31_constant: tail did not certify");
        if (a >= 2)
            for (auto& [p, e] : factorize(a).factors)
                if (e & 1) kernel.toggle(p);
        if (seen.insert(kernel.primes).second) {
            long double logs = 0.0L;
            for (uint64_t p : kernel.primes) logs += std::log((long double)p);
            sum += std::exp(-logs / 2);
        }
        tail = tail_from(a);
    }
    return {static_cast<double>(sum), static_cast<double>(tail)};
}

MontgomeryResult montgomery_check(const SieveProblem& problem,
                                  const Sequence& f,
                                  const std::vector<uint64_t>& subset) {
    std::complex<double> total = 0.0;
    for (auto& [n, v] : f) total += v;
    if (subset.empty()) {
        double t2 = std::norm(total);
        return {t2, t2};
    }

    double product = 1.0;
    uint64_t Q = 1;
    for (uint64_t q : subset) {
        auto it = std::find_if(problem.moduli.begin(), problem.moduli.end(),
                               [q](const ModulusClasses& m) { return m.q == q; });
        if (it == problem.moduli.end())
            throw std::invalid_argument("montgomery_check: unknown modulus");
        uint64_t w = it->removed.size();
        if (w >= q)
            throw std::domain_error("montgomery_check: omega(q) = q degenerate");
        for (auto& [n, v] : f)
            if (std::abs(v) > 0)
                for (uint64_t r : it->removed)
                    if (n % q == r % q)
                        throw std::invalid_argument(
                            "montgomery_check: f does not vanish on removed "
                            "classes");
        product *= static_cast<double>(w) / static_cast<double>(q - w);
        Q *= q;
    }

    double lhs = 0.0;
    for (uint64_t a = 0; a < Q; ++a) {
        bool skip = false;
        for (uint64_t q : subset)
            if (a % q == 0) { skip = true; break; }
        if (skip) continue;
        std::complex<double> s = 0.0;
        for (auto& [n, v] : f) {
            double phase = -2.0 * std::numbers::pi *
                           static_cast<double>(a) * static_cast<double>(n % Q) /
                           static_cast<double>(Q);
            s += v * std::complex<double>(std::cos(phase), std::sin(phase));
        }
        lhs += std::norm(s);
    }
    return {lhs, product * std::norm(total)};
}

LargeSieveReport large_sieve_report(const SieveProblem& problem, uint64_t k) {
    std::vector<double> terms;
    std::vector<uint64_t> qs;
    for (auto& m : problem.moduli) {
        uint64_t w = m.removed.size();
        if (w >= m.q)
            throw std::domain_error("large_sieve_report: omega(q) = q");
        terms.push_back(static_cast<double>(w) / static_cast<double>(m.q - w));
        qs.push_back(m.q);
    }
    // precondition: any product of k moduli is at most sqrt(|I|)
    std::sort(qs.rbegin(), qs.rend());
    double prod = 1.0;
    for (uint64_t i = 0; i < k && i < qs.size(); ++i)
        prod *= static_cast<double>(qs[i]);
    if (prod > std::sqrt(static_cast<double>(problem.length)))
        throw std::domain_error(
            "large_sieve_report: product of k moduli exceeds sqrt(|I|)");

    uint64_t survivors = 0;
    for (uint64_t i = 0; i < problem.length; ++i) {
        int64_t n = problem.start + static_cast<int64_t>(i);
        if (n < 1) continue;
        bool removed = false;
        for (auto& m : problem.moduli) {
            uint64_t r = static_cast<uint64_t>(n) % m.q;
            if (std::find(m.removed.begin(), m.removed.end(), r) !=
                m.removed.end()) {
                removed = true;
                break;
            }
        }
        if (!removed) ++survivors;
    }

    double denom = 0.0;
    if (k >= 1 && terms.size() > k) {
        std::sort(terms.rbegin(), terms.rend());
        double s = std::accumulate(terms.begin() + k, terms.end(), 0.0);
        denom = std::pow(s / static_cast<double>(k), static_cast<double>(k));
    }
    return {survivors, denom};
}

CharacterGroup::CharacterGroup(uint64_t q) : q_(q), phi_(1) {
    if (q < 1) throw std::domain_error("CharacterGroup: q must be >= 1");
    for (auto& [p, e] : factorize(q).factors) {
        if (e > 2)
            throw std::domain_error("CharacterGroup: q must be cubefree");
        Component c;
        c.p = p;
        c.pe = (e == 1) ? p : p * p;
        c.order = (e == 1) ? p - 1 : p * (p - 1);
        // generator search; (Z/p^e)* is cyclic for all cubefree components
        c.dlog.assign(c.pe, 0);
        uint64_t g = 1;
        for (uint64_t cand = 2; c.order > 1 && cand < c.pe; ++cand) {
            if (std::gcd(cand, c.pe) != 1) continue;
            uint64_t v = 1;
            bool full = true;
            for (uint64_t j = 1; j < c.order; ++j) {
                v = v * cand % c.pe;
                if (v == 1) { full = false; break; }
            }
            if (full) { g = cand; break; }
        }
        uint64_t v = 1;
        for (uint64_t j = 0; j < c.order; ++j) {
            c.dlog[v] = static_cast<uint32_t>(j);
            v = v * g % c.pe;
        }
        phi_ *= c.order;
        comps_.push_back(std::move(c));
    }
}

std::vector<uint64_t> CharacterGroup::component_indices(uint64_t index) const {
    std::vector<uint64_t> out;
    for (auto& c : comps_) {
        out.push_back(index % c.order);
        index /= c.order;
    }
    return out;
}

std::complex<double> CharacterGroup::eval(uint64_t index, uint64_t n) const {
    if (index >= phi_) throw std::domain_error("CharacterGroup: bad index");
    if (q_ > 1 && std::gcd(n % q_, q_) != 1) return 0.0;
    auto ts = component_indices(index);
    double phase = 0.0;
    for (size_t i = 0; i < comps_.size(); ++i) {
        const Component& c = comps_[i];
        phase += static_cast<double>(ts[i]) *
                 static_cast<double>(c.dlog[n % c.pe]) /
                 static_cast<double>(c.order);
    }
    phase = 2.0 * std::numbers::pi * phase;
    return {std::cos(phase), std::sin(phase)};
}

bool CharacterGroup::is_principal(uint64_t index) const {
    for (uint64_t t : component_indices(index))
        if (t != 0) return false;
    return true;
}

bool CharacterGroup::is_primitive(uint64_t index) const {
    auto ts = component_indices(index);
    for (size_t i = 0; i < comps_.size(); ++i) {
        const Component& c = comps_[i];
        if (c.pe == c.p) {
            if (ts[i] == 0) return false;  // conductor 1 at this place
        } else {
            // conductor p^2 requires chi nontrivial on the kernel of
            // reduction mod p
            if (c.p == 2) {
                if (ts[i] == 0) return false;
            } else if (ts[i] % c.p == 0) {
                return false;
            }
        }
    }
    return true;
}

PrimeCharSum char_sum(const CharacterGroup& group, uint64_t index, uint64_t Z) {
    if (Z < 2) throw std::domain_error("char_sum: Z must be >= 2");
    std::complex<double> sum = 0.0;
    uint64_t count = 0;
    for (uint32_t p : primes_up_to(2 * Z - 1)) {
        if (p < Z) continue;
        sum += group.eval(index, p);
        ++count;
    }
    if (count == 0) throw std::domain_error("char_sum: no primes in [Z, 2Z)");
    return {{group.modulus(), index}, Z, sum / static_cast<double>(count)};
}

ExceptionalScanResult exceptional_scan(const std::vector<uint64_t>& moduli,
                                       uint64_t Z, double exponent) {
    ExceptionalScanResult res{{}, 0.0, 0};
    double threshold = std::pow(static_cast<double>(Z), -exponent);
    for (uint64_t q : moduli) {
        CharacterGroup group(q);
        for (uint64_t idx = 0; idx < group.size(); ++idx) {
            if (group.is_principal(idx)) continue;
            PrimeCharSum s = char_sum(group, idx, Z);
            if (std::abs(s.value) >= threshold) res.exceptional.push_back(s);
            if (group.is_primitive(idx)) {
                res.primitive_sq_sum += std::norm(s.value);
                ++res.primitive_count;
            }
        }
    }
    return res;
}

namespace {

uint32_t frac_bin(uint64_t num, uint64_t den, uint32_t bins) {
    // bin of {num/den}: floor(bins * (num mod den) / den)
    uint64_t r = num % den;
    return static_cast<uint32_t>(static_cast<unsigned __int128>(r) * bins / den);
}

}  // namespace

Histogram fracpart_histogram(uint64_t N, uint64_t P, uint32_t j,
                             uint32_t bins) {
    if (P < 2 || (j != 1 && j != 2) || bins < 2)
        throw std::domain_error("fracpart_histogram: bad parameters");
    Histogram h;
    h.bins.assign(bins, 0);
    h.samples = 0;
    for (uint32_t p : primes_up_to(2 * P - 1)) {
        if (p < P) continue;
        uint64_t den = (j == 1) ? p : static_cast<uint64_t>(p) * p;
        ++h.bins[frac_bin(N, den, bins)];
        ++h.samples;
    }
    double expect = static_cast<double>(h.samples) / bins;
    h.chi_square = 0.0;
    for (uint64_t c : h.bins) {
        double d = static_cast<double>(c) - expect;
        h.chi_square += d * d / expect;
    }
    return h;
}

JointHistogram fracpart_joint_histogram(uint64_t N, uint64_t P,
                                        uint32_t bins) {
    if (P < 2 || bins < 2)
        throw std::domain_error("fracpart_joint_histogram: bad parameters");
    JointHistogram h;
    h.bins.assign(bins, std::vector<uint64_t>(bins, 0));
    h.samples = 0;
    for (uint32_t p : primes_up_to(2 * P - 1)) {
        if (p < P) continue;
        uint64_t p2 = static_cast<uint64_t>(p) * p;
        ++h.bins[frac_bin(N, p, bins)][frac_bin(N, p2, bins)];
        ++h.samples;
    }
    return h;
}

}  // namespace anatomy
