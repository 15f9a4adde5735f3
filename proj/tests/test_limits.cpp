#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dortho/combinatorics.hpp"
#include "dortho/errors.hpp"
#include "dortho/hyp.hpp"
#include "dortho/limits.hpp"

using namespace dortho;

namespace {
Rational rat(long n, long d) { return Rational(Integer(n), Integer(d)); }
} // namespace

TEST_CASE("monic meixner basics") {
    MeixnerParams mp{rat(1, 2), rat(1, 3)};
    CHECK(meixner_monic(0, mp) == UPoly::constant("x", Rational(1)));
    // M_1 = x - beta d / (1 - d) = x - 1/4
    CHECK(meixner_monic(1, mp) == UPoly("x", {rat(-1, 4), Rational(1)}));
    CHECK(meixner_monic(5, mp).degree() == 5);
    CHECK(meixner_monic(5, mp).leading_coeff() == Rational(1));
    CHECK_THROWS_AS(meixner_monic(2, MeixnerParams{rat(1, 2), Rational(1)}), ParseError);
}

TEST_CASE("monic meixner matches its hypergeometric form") {
    // M_n(x) = (beta)_n (d/(d-1))^n 2F1[-n, -x; beta; 1 - 1/d] in monic form
    const Rational beta = rat(1, 2), d = rat(1, 3);
    MeixnerParams mp{beta, d};
    const Rational z = Rational(1) - Rational(1) / d;
    for (long n = 0; n <= 8; ++n) {
        UPoly monic = meixner_monic(n, mp);
        Rational conv = pow((d - Rational(1)) / d, n) / pochhammer(beta, n);
        for (long x = 0; x <= 8; ++x)
            CHECK(conv * monic.evaluate(Rational(x)) ==
                  hyp_terminating({Rational(-n), Rational(-x)}, {beta}, z));
    }
}

TEST_CASE("krawtchouk values and normalization") {
    for (long n = 0; n <= 5; ++n) CHECK(krawtchouk(n, Rational(0), rat(1, 3), 5) == Rational(1));
    CHECK(krawtchouk(1, Rational(2), rat(1, 3), 6) == Rational(1) - Rational(2) / (Rational(6) * rat(1, 3)));
    for (long n = 0; n <= 6; ++n)
        for (long x = 0; x <= 6; ++x)
            CHECK(krawtchouk_poly(n, rat(1, 3), 6).evaluate(Rational(x)) ==
                  krawtchouk(n, Rational(x), rat(1, 3), 6));
}

TEST_CASE("krawtchouk orthogonality with closed-form norms") {
    const long N = 6;
    for (const Rational& p : {rat(1, 3), Rational(-2), rat(5, 2)}) {
        for (long m = 0; m <= N; ++m)
            for (long n = 0; n <= N; ++n) {
                Rational sum(0);
                for (long x = 0; x <= N; ++x)
                    sum += Rational(binomial(N, x)) * pow(p, x) * pow(Rational(1) - p, N - x) *
                           krawtchouk(m, Rational(x), p, N) * krawtchouk(n, Rational(x), p, N);
                Rational expect(0);
                if (m == n)
                    expect = Rational((n % 2 == 0) ? 1 : -1) * Rational(factorial(n)) /
                             pochhammer(Rational(-N), n) * pow((Rational(1) - p) / p, n);
                CHECK(sum == expect);
            }
    }
}

TEST_CASE("hermite recurrence") {
    CHECK(hermite_poly(0) == UPoly::constant("x", Rational(1)));
    CHECK(hermite_poly(1) == UPoly("x", {Rational(0), Rational(2)}));
    CHECK(hermite_poly(2) == UPoly("x", {Rational(-2), Rational(0), Rational(4)}));
    CHECK(hermite_poly(3) == UPoly("x", {Rational(0), Rational(-12), Rational(0), Rational(8)}));
    for (long n = 0; n <= 7; ++n)
        CHECK(hermite(n, rat(1, 2)) == hermite_poly(n).evaluate(rat(1, 2)));
}

TEST_CASE("meixner contraction: exact frozen deviations for the winner") {
    // candidate 2, j = 1: deviation 2|c|/N at q=0 and 6|c|(3N-2)/N^2 at q=1
    CHECK(contract_A_deviations(0, Rational(1), 1, {32}, 2) ==
          std::vector<Rational>{rat(1, 16)});
    CHECK(contract_A_deviations(0, Rational(1), 1, {64}, 2) ==
          std::vector<Rational>{rat(1, 32)});
    CHECK(contract_A_deviations(0, rat(-3, 7), 1, {32}, 2) ==
          std::vector<Rational>{rat(3, 112)});
    CHECK(contract_A_deviations(1, Rational(1), 1, {32}, 2) ==
          std::vector<Rational>{rat(141, 256)});
    CHECK(contract_A_deviations(1, Rational(1), 1, {64}, 2) ==
          std::vector<Rational>{rat(285, 1024)});
    CHECK(contract_A_deviations(1, rat(-3, 7), 1, {32}, 2) ==
          std::vector<Rational>{rat(423, 1792)});
}

TEST_CASE("meixner contraction declares the second candidate") {
    for (long q = 0; q <= 1; ++q) {
        ContractionReport rep = contract_A(q, Rational(1), 2, {32, 64, 128});
        CHECK(rep.target == "meixner");
        CHECK(rep.winner == "candidate2");
        CHECK(rep.dev_candidate1.size() == 3);
        CHECK(rep.dev_candidate2.size() == 3);
        for (size_t i = 0; i + 1 < rep.dev_candidate2.size(); ++i) {
            const double ratio = rep.dev_candidate2[i] / rep.dev_candidate2[i + 1];
            CHECK(ratio >= 1.7);
            CHECK(ratio <= 2.3);
        }
        CHECK(rep.order >= 0.7);
        CHECK(rep.order <= 1.3);
        // the losing candidate stalls at a nonvanishing offset
        CHECK(rep.dev_candidate1.back() > 10.0 * rep.dev_candidate2.back());
    }
    // winning parameter reproduces the expected first moment: M_1 = x + 2c at q=0, c=1
    ContractionReport rep = contract_A(0, Rational(1), 1, {32, 64});
    CHECK(rep.winner == "candidate2");
    CHECK(meixner_monic(1, MeixnerParams{rat(1, 2), rat(4, 3)}) ==
          UPoly("x", {Rational(2), Rational(1)}));
}

TEST_CASE("hypergeometric-value contraction") {
    ContractionReport rep = contract_A_matrix(0, Rational(1), 2, 3, {16, 32, 64});
    CHECK(rep.target == "meixner");
    CHECK(rep.winner == "candidate1");
    CHECK(rep.dev_candidate2.empty());
    for (size_t i = 0; i + 1 < rep.dev_candidate1.size(); ++i) {
        CHECK(rep.dev_candidate1[i] > rep.dev_candidate1[i + 1]);
        const double ratio = rep.dev_candidate1[i] / rep.dev_candidate1[i + 1];
        CHECK(ratio >= 1.5);
        CHECK(ratio <= 2.5);
    }
}

TEST_CASE("charlier-type contraction of the unitary matrix element") {
    ContractionReport rep = contract_B(2, Rational(1), rat(1, 2), 1, 0, 2, {32, 64, 128, 256});
    CHECK(rep.target == "charlier");
    CHECK(rep.winner == "candidate1");
    const std::vector<double> expected = {1.0 / 96, 1.0 / 192, 1.0 / 384, 1.0 / 768};
    REQUIRE(rep.dev_candidate1.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i)
        CHECK(rep.dev_candidate1[i] == doctest::Approx(expected[i]).epsilon(1e-6));

    // M = 1 contraction decays monotonically
    ContractionReport m1 = contract_B(1, Rational(1), rat(1, 2), 2, 0, 3, {32, 64, 128, 256});
    for (size_t i = 0; i + 1 < m1.dev_candidate1.size(); ++i)
        CHECK(m1.dev_candidate1[i] > m1.dev_candidate1[i + 1]);
}

TEST_CASE("contracted generating function converges") {
    ContractionReport rep = contract_gf_check(0, rat(1, 4), 0.5, {16, 32, 64});
    CHECK(rep.target == "gf");
    for (size_t i = 0; i + 1 < rep.dev_candidate1.size(); ++i)
        CHECK(rep.dev_candidate1[i] > rep.dev_candidate1[i + 1]);
    ContractionReport odd = contract_gf_check(1, rat(1, 3), 0.4, {16, 32, 64});
    for (size_t i = 0; i + 1 < odd.dev_candidate1.size(); ++i)
        CHECK(odd.dev_candidate1[i] > odd.dev_candidate1[i + 1]);
}

TEST_CASE("contraction guards") {
    CHECK_THROWS_AS(contract_A(0, Rational(4), 1, {16, 32}), ParseError);
    CHECK_THROWS_AS(contract_A(0, rat(1, 4), 1, {16, 32}), ParseError);
    CHECK_THROWS_AS(contract_A(0, Rational(1), 1, {32, 16}), ParseError);
    CHECK_THROWS_AS(contract_B(2, Rational(1), Rational(1), 1, 2, 2, {16, 32}), ParseError);
    CHECK_THROWS_AS(contract_B(2, Rational(1), Rational(1), 40, 0, 2, {16, 32}),
                    IndexOutOfFamily);
}
