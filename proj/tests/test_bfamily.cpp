#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>

#include "dortho/bfamily.hpp"
#include "dortho/combinatorics.hpp"
#include "dortho/errors.hpp"
#include "dortho/limits.hpp"

using namespace dortho;

namespace {
Rational rat(long n, long d) { return Rational(Integer(n), Integer(d)); }
} // namespace

TEST_CASE("parameter validation and residues") {
    CHECK_THROWS_AS((FamilyParamsB{0, Rational(1), 5}.validate()), ParseError);
    CHECK_THROWS_AS((FamilyParamsB{2, Rational(0), 5}.validate()), ParseError);
    CHECK_THROWS_AS((FamilyParamsB{2, Rational(1), -1}.validate()), ParseError);
    FamilyParamsB params{3, Rational(1), 9};
    CHECK(params.j_of(7) == 2);
    CHECK(params.q_of(7) == 1);
}

TEST_CASE("first member closed form at M = 1") {
    FamilyParamsB params{1, rat(2, 3), 5};
    std::vector<UPoly> fam = b_poly_recurrence(params, 1);
    CHECK(fam[1] == UPoly("k", {rat(2, 3) * Rational(5), Rational(1)}));
}

TEST_CASE("frozen members") {
    CHECK(b_poly_recurrence(FamilyParamsB{2, rat(1, 3), 6}, 4)[4] ==
          UPoly("k", {Rational(480), Rational(-54), Rational(59), Rational(-6), Rational(1)}));
    CHECK(b_poly_recurrence(FamilyParamsB{3, rat(-2, 5), 7}, 5)[5] ==
          UPoly("k", {Rational(0), Rational(1464), Rational(-1490), Rational(35), Rational(-10),
                      Rational(1)}));
}

TEST_CASE("family bounds") {
    FamilyParamsB params{2, Rational(1), 5};
    CHECK_THROWS_AS(b_poly_recurrence(params, 6), IndexOutOfFamily);
    CHECK_THROWS_AS(b_poly_hypergeometric(params, -1), IndexOutOfFamily);
    CHECK_THROWS_AS(b_poly_from_matrix(params, 9), IndexOutOfFamily);
}

TEST_CASE("three construction routes agree") {
    for (long M = 1; M <= 3; ++M)
        for (const Rational& f : {Rational(1), rat(-2, 5)})
            for (long N = 0; N <= 7; ++N) {
                FamilyParamsB params{M, f, N};
                std::vector<UPoly> fam = b_poly_recurrence(params, N);
                for (long n = 0; n <= N; ++n) {
                    CHECK(fam[static_cast<size_t>(n)].degree() == n);
                    CHECK(fam[static_cast<size_t>(n)].leading_coeff() == Rational(1));
                    CHECK(b_poly_hypergeometric(params, n) == fam[static_cast<size_t>(n)]);
                    CHECK(b_poly_from_matrix(params, n) == fam[static_cast<size_t>(n)]);
                }
            }
}

TEST_CASE("only f = a^M b reaches the polynomials") {
    FamilyParamsB m1{1, rat(1, 2), 6};
    std::vector<UPoly> fam1 = b_poly_recurrence(m1, 6);
    FamilyParamsB m2{2, rat(1, 3), 6};
    std::vector<UPoly> fam2 = b_poly_recurrence(m2, 6);
    for (long n = 0; n <= 6; ++n) {
        CHECK(b_poly_from_matrix_split(m1, n, rat(1, 2), Rational(1)) ==
              fam1[static_cast<size_t>(n)]);
        CHECK(b_poly_from_matrix_split(m2, n, Rational(-1), rat(1, 3)) ==
              fam2[static_cast<size_t>(n)]);
    }
    CHECK_THROWS_AS(b_poly_from_matrix_split(m2, 1, Rational(2), Rational(1)), ParseError);
}

TEST_CASE("M = 1 members are scaled Krawtchouk polynomials") {
    // B_n(k) = (ab)^n N!/(N-n)! K_n(k; -ab, N) with a = 1, b = f
    const long N = 6;
    for (const Rational& f : {rat(1, 2), rat(-2, 5)}) {
        FamilyParamsB params{1, f, N};
        std::vector<UPoly> fam = b_poly_recurrence(params, N);
        for (long n = 0; n <= N; ++n) {
            UPoly scaled = krawtchouk_poly(n, -f, N) *
                           (pow(f, n) * Rational(factorial(N)) / Rational(factorial(N - n)));
            CHECK(scaled == fam[static_cast<size_t>(n)]);
        }
    }
}

TEST_CASE("inverse elements survive all cross-checks") {
    for (long M = 1; M <= 3; ++M)
        for (const Rational& f : {rat(1, 3), rat(-2, 5)})
            for (long N = 0; N <= 6; ++N)
                CHECK_NOTHROW(inverse_elements_B(FamilyParamsB{M, f, N}));
}

TEST_CASE("polynomial biorthogonality with the sign-flipped dual") {
    for (long M = 1; M <= 2; ++M)
        for (long N = 0; N <= 6; ++N)
            CHECK_NOTHROW(biortho_poly_check_B(FamilyParamsB{M, rat(1, 3), N}));
    CHECK_NOTHROW(biortho_poly_check_B(FamilyParamsB{3, rat(-2, 5), 5}));
}

TEST_CASE("five-point difference identity at M = 2") {
    for (const Rational& f : {Rational(1), rat(1, 3)})
        for (long N = 0; N <= 8; ++N)
            for (long n = 0; n <= N; ++n)
                CHECK_NOTHROW(b_difference_check(FamilyParamsB{2, f, N}, n));
    CHECK_THROWS_AS(b_difference_check(FamilyParamsB{1, Rational(1), 4}, 1), DorthoError);
}

TEST_CASE("functionals carry the moment pattern") {
    FamilyParamsB params{2, rat(1, 3), 8};
    std::vector<LinearFunctional> funcs = functionals_B(params);
    REQUIRE(funcs.size() == 3);
    std::vector<UPoly> fam = b_poly_recurrence(params, 8);
    CHECK(funcs[0].apply_moment(fam[1], 0).is_zero());
    CHECK_FALSE(funcs[0].apply_moment(fam[0], 0).is_zero());
    CHECK_FALSE(funcs[1].apply_moment(fam[4], 1).is_zero());
    CHECK(funcs[1].apply_moment(fam[5], 1).is_zero());
    CHECK_THROWS_AS(functionals_B(FamilyParamsB{3, Rational(1), 8}), DorthoError);
}

TEST_CASE("inverse rows decompose with no attainment drops") {
    for (long N : {8L, 9L, 10L, 12L}) {
        FamilyParamsB params{2, rat(1, 3), N};
        for (long n = 0; n <= std::min<long>(N, 9); ++n) {
            InverseRowDecomposition dec = decompose_inverse_row_B(params, n);
            REQUIRE(dec.y.size() == 3);
            const long gamma = n / 3, delta = n % 3;
            for (long i = 0; i < 3; ++i)
                CHECK(dec.degree_cap[static_cast<size_t>(i)] ==
                      ((i <= delta) ? gamma : gamma - 1));
            CHECK(dec.dropped.empty());
        }
    }
}

TEST_CASE("generating function routes agree") {
    using cd = std::complex<double>;
    // displayed example: M = 1, N = 3, a = 1, b = -1/2
    GFReport m1 = b_generating_function_check(FamilyParamsB{1, rat(-1, 2), 3}, Rational(1),
                                              cd(0.7, 0.1));
    CHECK(m1.dev12 <= 1e-12);
    CHECK(m1.dev23 <= 1e-12);   // includes the binomial-product closed form

    for (long M = 1; M <= 3; ++M) {
        GFReport rep = b_generating_function_check(FamilyParamsB{M, rat(1, 3), 6}, Rational(1),
                                                   cd(0.4, -0.3));
        CHECK(rep.dev12 <= 1e-10);
        CHECK(rep.dev23 <= 1e-8);
    }
    // a != 1 split
    GFReport split = b_generating_function_check(FamilyParamsB{2, rat(1, 3), 5}, rat(3, 2),
                                                 cd(0.5, 0.2));
    CHECK(split.dev12 <= 1e-10);
}

TEST_CASE("zeta table seeds the recurrence") {
    ZetaTable zeta{1, 7};
    CHECK(zeta.zeta_Mm1(0) == Rational(7));   // B_1 = k + f N at M = 1
    ZetaTable z2{2, 6};
    // (-1)^2 * 2 * (-n)_2 (N-n+1)_2 at n = 3: 2 * 6 * 4*5 = 240
    CHECK(z2.zeta_M(3) == Rational(240));
    CHECK(z2.zeta_2Mm1(3) == Rational(-4) * pochhammer(Rational(-3), 3) *
                                 pochhammer(Rational(4), 3));
}
