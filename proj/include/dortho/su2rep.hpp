#pragma once

#include <vector>

#include "dortho/matrix.hpp"
#include "dortho/rational.hpp"

namespace dortho {

// Ladder operators on the (N+1)-dimensional irreducible module, written in the
// rationalized basis f_n (n = 0..N) in which all matrix entries are rational:
//   Jp f_n = (n+1)   f_{n+1},   Jm f_n = (N-n+1) f_{n-1},   J0 f_n = (n - N/2) f_n.
struct RepMatrices {
    long N;
    RationalMatrix jp, jm, j0;
};

RepMatrices build_rep(long N);

// S = exp(a Jp^2) exp(b Jm^2) and its inverse exp(-b Jm^2) exp(-a Jp^2).
RationalMatrix matrix_S(long N, const Rational& a, const Rational& b);
RationalMatrix matrix_S_inverse(long N, const Rational& a, const Rational& b);

// Q = exp(a Jp) exp(b Jm^M) and its inverse exp(-b Jm^M) exp(-a Jp).
RationalMatrix matrix_Q(long N, const Rational& a, const Rational& b, long M);
RationalMatrix matrix_Q_inverse(long N, const Rational& a, const Rational& b, long M);

// Exact conjugation identities: for Q(x) in {a x, a x^2, b x^M} the single
// exponential moves J0 and the opposite ladder operator by the closed-form
// right-hand sides, and the composed maps S J0 S^-1, S^-1 J0 S, S Jm^2 S^-1,
// Q^-1 J0 Q, Q J0 Q^-1 match their polynomial expressions in (Jp, Jm, J0).
// Throws IdentityFailure on the first residual.
void verify_conjugation_identities(long N, const Rational& a, const Rational& b, long M);

// Vector with components binomial(N,n) eta^n, n = 0..N.
struct CoherentVector {
    long N;
    Rational eta;
    std::vector<Rational> components;
};

CoherentVector coherent_vector(long N, const Rational& eta);

// Row-vector ladder relations for the coherent vector v:
//   v^T Jm = eta^-1 v^T Nhat   and   v^T Jp = eta v^T (N I - Nhat),
// with Nhat = J0 + N/2 the number operator. Throws EtaZero when eta = 0 (the
// relations involve eta^-1) and IdentityFailure on any entry mismatch.
void coherent_relations_check(const CoherentVector& v);

} // namespace dortho
