#pragma once

#include <complex>
#include <vector>

#include "dortho/functional.hpp"
#include "dortho/matrix.hpp"
#include "dortho/rational.hpp"
#include "dortho/upoly.hpp"

namespace dortho {

// Parameters of the degree-indexed family A_j^{(q)}(l; c, N), d = 3.
// The index maps are n = 2j + q (column) and k = 2l + q (row); the family has
// members j = 0..p with p = floor((N-q)/2).
struct FamilyParamsA {
    long q;        // parity class, 0 or 1
    Rational c;    // c = a b, nonzero
    long N;        // representation label, N >= 0

    void validate() const;
    long p() const { return (N - q) / 2; }
};

// Coefficient tables of the five-term recurrence (xi) and of the inverse-side
// recurrence (sigma), exactly as tabulated.
struct XiTable {
    long N;
    Rational value(long t, long n) const;
    // Same coefficient with n = 2l + q substituted, as a polynomial in l.
    UPoly value_poly(long t, long q) const;
};

struct SigmaTable {
    long N;
    Rational value(long t, long n) const;
};

// All members j = 0..j_max by the five-term recurrence; variable tag "l".
std::vector<UPoly> a_poly_recurrence(const FamilyParamsA& params, long j_max);

// Single member via the terminating 2F3 expansion.
UPoly a_poly_hypergeometric(const FamilyParamsA& params, long j);

// Single member extracted from column n = 2j + q of the rationalized S matrix
// (a = 1, b = c), divided by the ground-state column entry, then interpolated.
// Accepts an explicit (a, b) split of c for cross-checking that only the
// product enters.
UPoly a_poly_from_matrix(const FamilyParamsA& params, long j);
UPoly a_poly_from_matrix_split(const FamilyParamsA& params, long j,
                               const Rational& a, const Rational& b);

// Rationalized inverse-operator elements (a = 1, b = c), cross-checked three
// ways: direct inverse, star-reflection with basis ratios, and (even N) the
// closed form through A_{p-j}(p-l). Also validates the inverse-side recurrence.
RationalMatrix inverse_elements_A(const FamilyParamsA& params);

// Weighted polynomial biorthogonality; even N pairs the class with itself,
// odd N interlaces the two parity classes.
void biortho_poly_check(const FamilyParamsA& params);

// Difference operator H^{(q)} applied to an arbitrary polynomial in l.
UPoly a_difference_operator(const FamilyParamsA& params, const UPoly& f);

// Asserts H^{(q)} A_j = j A_j as an exact polynomial identity.
void a_difference_apply(const FamilyParamsA& params, long j);

// Forward-shift operator F^{(q)} and the assertion
// F^{(q)} A_j = (-2j-q)_2 (N-2j-q+1)_2 A_{j-1}.
UPoly a_forward_shift_operator(const FamilyParamsA& params, const UPoly& f);
void a_forward_shift(const FamilyParamsA& params, long j);

// The three d-orthogonality functionals, with the moment pattern asserted:
// L_i[l^gamma A_j] = 0 for j >= 3*gamma + i + 1 and != 0 at j = 3*gamma + i.
std::vector<LinearFunctional> functionals_A(const FamilyParamsA& params);

// Decomposition of inverse row n = 2j + q over the first three rows with
// polynomial coefficients Y_i(l); degree caps follow j = 3*gamma + delta.
struct InverseRowDecomposition {
    std::vector<UPoly> y;          // coefficients Y_0, Y_1, Y_2 in l (or k)
    std::vector<long> degree_cap;  // allowed degree per Y_i
    // i such that deg Y_i fell below its cap (top coefficient vanished);
    // the structurally zero Y_i of the trivial rows (gamma = 0, i < delta)
    // are not recorded.
    std::vector<long> dropped;
};
InverseRowDecomposition decompose_inverse_row_A(const FamilyParamsA& params, long j);

// Generating-function cross-check at one eta: (i) defining sum, (ii) unitary
// coherent-state matrix element, (iii) Hermite-sum closed form. dev12 must be
// at double-precision level; dev23 is informational. Maximized over l = 0..p.
struct GFReport {
    double dev12;
    double dev23;
};
GFReport a_generating_function_check(const FamilyParamsA& params, const Rational& a,
                                     std::complex<double> eta);

} // namespace dortho
