#pragma once

#include <string>
#include <vector>

#include "dortho/rational.hpp"
#include "dortho/upoly.hpp"

namespace dortho {

// Monic Meixner parameters; beta = q + 1/2 in the contraction experiments.
struct MeixnerParams {
    Rational beta;
    Rational d;    // d != 0, d != 1
};

// Monic Meixner polynomial by the three-term recurrence
// x B_n = B_{n+1} + [(n + (n+beta) d)/(1-d)] B_n + [n (n+beta-1) d/(1-d)^2] B_{n-1}.
UPoly meixner_monic(long n, const MeixnerParams& params);

// Krawtchouk K_n(x; p, N) = 2F1[-n, -x; -N; 1/p], exact evaluation.
Rational krawtchouk(long n, const Rational& x, const Rational& p, long N);
UPoly krawtchouk_poly(long n, const Rational& p, long N);

// Hermite H_n by the recurrence H_{n+1} = 2x H_n - 2n H_{n-1}.
Rational hermite(long n, const Rational& x);
UPoly hermite_poly(long n);

// Contraction experiment output. For two-candidate experiments (Meixner d
// parameter) both deviation columns are filled; single-target experiments
// leave dev_candidate2 empty and declare candidate1.
struct ContractionReport {
    std::string target;              // "meixner", "charlier", or "gf"
    std::vector<long> Ns;            // strictly increasing
    std::vector<double> dev_candidate1;
    std::vector<double> dev_candidate2;
    double order;                    // fitted decay order of the winner
    std::string winner;              // "candidate1" or "candidate2"
};

// c -> c/N^2 coefficient-level contraction of A_j^{(q)} against both monic
// Meixner candidates: d1 = c/(c-4) and d2 = 4c/(4c-1) (from 1 - 1/d = 1/(4c)).
// Deviations are max-abs coefficient differences, computed in exact rationals.
ContractionReport contract_A(long q, const Rational& c, long j, const std::vector<long>& Ns);
// Exact per-N deviations behind contract_A, winner candidate selectable (1 or 2).
std::vector<Rational> contract_A_deviations(long q, const Rational& c, long j,
                                            const std::vector<long>& Ns, int candidate);

// Hypergeometric-value contraction: the 2F3 value at argument N^2/(16c)
// against the 2F1[-j, -l; q+1/2; 1/(4c)] target.
ContractionReport contract_A_matrix(long q, const Rational& c, long j, long ell,
                                    const std::vector<long>& Ns);

// a -> a/sqrt(N), b -> b/N^{M/2} contraction of the unitary matrix element
// phi_{k,n} against its 1+M F M-1 closed form (floating point).
ContractionReport contract_B(long M, const Rational& a, const Rational& b, long j, long q,
                             long k, const std::vector<long>& Ns);

// eta -> eta/sqrt(N) generating-function contraction toward
// e^{c eta^2} eta^q 1F1[-l; q+1/2; -eta^2/4]; deviation maximized over small l.
ContractionReport contract_gf_check(long q, const Rational& c, double eta,
                                    const std::vector<long>& Ns);

} // namespace dortho
