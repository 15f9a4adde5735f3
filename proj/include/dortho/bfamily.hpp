#pragma once

#include <complex>
#include <vector>

#include "dortho/afamily.hpp"   // GFReport, InverseRowDecomposition, LinearFunctional
#include "dortho/matrix.hpp"
#include "dortho/rational.hpp"
#include "dortho/upoly.hpp"

namespace dortho {

// Parameters of the family B_n(k; f, N), d = 2M - 1, with f = a^M b.
// Residue decomposition n = M j + q, q in {0..M-1}, is centralized here.
struct FamilyParamsB {
    long M;        // M >= 1
    Rational f;    // f = a^M b, nonzero
    long N;        // N >= 0

    void validate() const;
    long j_of(long n) const { return n / M; }
    long q_of(long n) const { return n % M; }
};

// Coefficients of the (d+2)-term recurrence.
struct ZetaTable {
    long M;
    long N;
    Rational zeta_M(long n) const;       // (-1)^M M (-n)_M (N-n+1)_M
    Rational zeta_Mm1(long n) const;     // (-1)^M M (-n)_{M-1} (N-n+1)_{M-1} (2n-M-N+1)
    Rational zeta_2Mm1(long n) const;    // -M^2 (-n)_{2M-1} (N-n+1)_{2M-1}
};

// Members n = 0..n_max by the recurrence; variable tag "k".
std::vector<UPoly> b_poly_recurrence(const FamilyParamsB& params, long n_max);

// Single member via the terminating 1+M F 2M-1 expansion.
UPoly b_poly_hypergeometric(const FamilyParamsB& params, long n);

// Single member extracted from column n of the rationalized Q matrix
// (a = 1, b = f), divided by the ground-state row value, then interpolated.
UPoly b_poly_from_matrix(const FamilyParamsB& params, long n);
UPoly b_poly_from_matrix_split(const FamilyParamsB& params, long n,
                               const Rational& a, const Rational& b);

// Rationalized inverse elements (a = 1, b = f) with the star-reflection law
// asserted; for M = 2 the four-term inverse recurrence is validated too.
RationalMatrix inverse_elements_B(const FamilyParamsB& params);

// Sum_k w_k B_n(k; f, N) B_{N-m}(N-k; f', N) = (-1)^n delta_{nm},
// w_k = (-1)^k / (k! (N-k)!), f' = (-1)^{M+1} f.
void biortho_poly_check_B(const FamilyParamsB& params);

// Five-point difference identity at M = 2, asserted as an exact polynomial
// identity in k.
void b_difference_check(const FamilyParamsB& params, long n);

// The 2M-1 functionals at M = 2 with the moment pattern asserted.
std::vector<LinearFunctional> functionals_B(const FamilyParamsB& params);

// Decomposition of inverse row n over rows 0..2M-2 with polynomial
// coefficients in k; degree caps follow n = (2M-1)*gamma + delta.
InverseRowDecomposition decompose_inverse_row_B(const FamilyParamsB& params, long n);

// Generating-function cross-check at one eta: (i) defining sum, (ii) unitary
// coherent-state matrix element, (iii) the mF0 closed form. Maximized over
// k = 0..N.
GFReport b_generating_function_check(const FamilyParamsB& params, const Rational& a,
                                     std::complex<double> eta);

} // namespace dortho
