#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace anatomy {

/// Value with a certified tail bound: the true quantity lies within
/// [value - tail, value + tail].
struct CertifiedValue {
    double value;
    double tail;
};

/// zeta(3/2)/zeta(3), tail certified via the alternating eta series.
CertifiedValue erdos_szekeres_constant(double precision);

/// Sum of 1/sqrt(s) over distinct kernel values s of s(a!).
CertifiedValue c31_constant(double precision);

struct ModulusClasses {
    uint64_t q;
    std::vector<uint64_t> removed;  // distinct residues mod q
};

struct SieveProblem {
    int64_t start;       // interval is {start, ..., start + length - 1}
    uint64_t length;
    std::vector<ModulusClasses> moduli;  // pairwise coprime
};

/// Finitely supported complex sequence.
using Sequence = std::vector<std::pair<uint64_t, std::complex<double>>>;

struct MontgomeryResult {
    double lhs;
    double rhs;
};

/// Uncertainty principle check: lhs is the exponential-sum energy over
/// a mod q1...qk with no qj | a, rhs the vanishing-classes product times
/// |sum f|^2.  lhs >= rhs is a theorem.
MontgomeryResult montgomery_check(const SieveProblem& problem,
                                  const Sequence& f,
                                  const std::vector<uint64_t>& subset);

struct LargeSieveReport {
    uint64_t survivors;
    double denominator;  // ((1/k) sum^[-k] w/(q-w))^k
};

LargeSieveReport large_sieve_report(const SieveProblem& problem, uint64_t k);

/// Dirichlet characters mod cubefree q, indexed through the dual group
/// built by CRT from the (cyclic) prime-power components.
class CharacterGroup {
  public:
    explicit CharacterGroup(uint64_t q);  // throws if q not cubefree

    uint64_t modulus() const { return q_; }
    uint64_t size() const { return phi_; }  // number of characters

    std::complex<double> eval(uint64_t index, uint64_t n) const;
    bool is_principal(uint64_t index) const;
    bool is_primitive(uint64_t index) const;

  private:
    struct Component {
        uint64_t pe;         // p or p^2
        uint64_t p;
        uint64_t order;      // phi(pe)
        std::vector<uint32_t> dlog;  // discrete log base generator, size pe
    };
    std::vector<uint64_t> component_indices(uint64_t index) const;

    uint64_t q_;
    uint64_t phi_;
    std::vector<Component> comps_;
};

struct CharacterSpec {
    uint64_t q;
    uint64_t index;
};

struct PrimeCharSum {
    CharacterSpec chi;
    uint64_t Z;
    std::complex<double> value;
};

PrimeCharSum char_sum(const CharacterGroup& group, uint64_t index, uint64_t Z);

struct ExceptionalScanResult {
    std::vector<PrimeCharSum> exceptional;  // non-principal, |s_Z| >= Z^-exp
    double primitive_sq_sum;                // sum |s_Z|^2 over primitive chi
    uint64_t primitive_count;
};

ExceptionalScanResult exceptional_scan(const std::vector<uint64_t>& moduli,
                                       uint64_t Z, double exponent = 0.008);

struct Histogram {
    std::vector<uint64_t> bins;
    uint64_t samples;
    double chi_square;  // against the uniform law
};

struct JointHistogram {
    std::vector<std::vector<uint64_t>> bins;  // [i][j]
    uint64_t samples;
};

/// Fractional parts {N/p^j} over primes p in [P, 2P).
Histogram fracpart_histogram(uint64_t N, uint64_t P, uint32_t j,
                             uint32_t bins);

/// Joint distribution of ({N/p}, {N/p^2}).
JointHistogram fracpart_joint_histogram(uint64_t N, uint64_t P, uint32_t bins);

}  // namespace anatomy
