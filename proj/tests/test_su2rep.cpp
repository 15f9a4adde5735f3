#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dortho/combinatorics.hpp"
#include "dortho/errors.hpp"
#include "dortho/su2rep.hpp"

using namespace dortho;

TEST_CASE("ladder matrices in the rationalized basis") {
    RepMatrices rep = build_rep(3);
    CHECK(rep.jp.at(1, 0) == Rational(1));
    CHECK(rep.jp.at(2, 1) == Rational(2));
    CHECK(rep.jp.at(3, 2) == Rational(3));
    CHECK(rep.jp.at(0, 1) == Rational(0));
    CHECK(rep.jm.at(0, 1) == Rational(3));
    CHECK(rep.jm.at(1, 2) == Rational(2));
    CHECK(rep.jm.at(2, 3) == Rational(1));
    for (long n = 0; n <= 3; ++n)
        CHECK(rep.j0.at(n, n) == Rational(Integer(2 * n - 3), Integer(2)));

    // commutators: [J0, Jp] = Jp, [J0, Jm] = -Jm, [Jp, Jm] = 2 J0
    CHECK(rep.j0 * rep.jp - rep.jp * rep.j0 == rep.jp);
    CHECK(rep.j0 * rep.jm - rep.jm * rep.j0 == rep.jm * Rational(-1));
    CHECK(rep.jp * rep.jm - rep.jm * rep.jp == rep.j0 * Rational(2));
}

TEST_CASE("ladder powers carry pochhammer entries") {
    const long N = 5;
    RepMatrices rep = build_rep(N);
    for (long k = 0; k <= 3; ++k) {
        RationalMatrix up = rep.jp.pow(k), dn = rep.jm.pow(k);
        for (long n = 0; n <= N; ++n) {
            if (n + k <= N) CHECK(up.at(n + k, n) == pochhammer(Rational(n + 1), k));
            if (n - k >= 0) CHECK(dn.at(n - k, n) == pochhammer(Rational(N - n + 1), k));
        }
    }
}

TEST_CASE("matrix_S closed forms at small N") {
    Rational a(Integer(1), Integer(2)), b(Integer(-1), Integer(3));
    RationalMatrix s = matrix_S(2, a, b);
    CHECK(s.at(0, 0) == Rational(1));
    CHECK(s.at(0, 2) == Rational(2) * b);
    CHECK(s.at(1, 1) == Rational(1));
    CHECK(s.at(2, 0) == Rational(2) * a);
    CHECK(s.at(2, 2) == Rational(4) * a * b + Rational(1));
    CHECK(s.at(0, 1) == Rational(0));
    CHECK(s.at(1, 0) == Rational(0));

    RationalMatrix s4 = matrix_S(4, a, b);
    CHECK(s4.at(0, 0) == Rational(1));
    CHECK(s4.at(2, 0) == Rational(2) * a);
    CHECK(s4.at(4, 0) == Rational(12) * a * a);
    CHECK(s4.at(0, 4) == Rational(12) * b * b);
    CHECK(s4.at(2, 4) == Rational(24) * a * b * b + Rational(2) * b);
    CHECK(s4.at(4, 4) == Rational(144) * a * a * b * b + Rational(24) * a * b + Rational(1));
}

TEST_CASE("matrix_S parity selection rule") {
    RationalMatrix s = matrix_S(5, Rational(Integer(2), Integer(7)), Rational(3));
    for (long k = 0; k <= 5; ++k)
        for (long n = 0; n <= 5; ++n)
            if ((k - n) % 2 != 0) CHECK(s.at(k, n) == Rational(0));
}

TEST_CASE("matrix_S ground column") {
    // S_{2l+q, q} = a^l (2l+q)! / l!
    Rational a(Integer(3), Integer(4)), b(Integer(-1), Integer(5));
    const long N = 7;
    RationalMatrix s = matrix_S(N, a, b);
    for (long q = 0; q <= 1; ++q)
        for (long ell = 0; 2 * ell + q <= N; ++ell)
            CHECK(s.at(2 * ell + q, q) ==
                  pow(a, ell) * Rational(factorial(2 * ell + q)) / Rational(factorial(ell)));
}

TEST_CASE("matrix_Q closed form at N = 1") {
    Rational a(Integer(2), Integer(3)), b(Integer(-5), Integer(4));
    RationalMatrix qm = matrix_Q(1, a, b, 1);
    CHECK(qm.at(0, 0) == Rational(1));
    CHECK(qm.at(0, 1) == b);
    CHECK(qm.at(1, 0) == a);
    CHECK(qm.at(1, 1) == a * b + Rational(1));
}

TEST_CASE("inverses invert") {
    Rational a(Integer(1), Integer(2)), b(Integer(2), Integer(3));
    CHECK(matrix_S(6, a, b) * matrix_S_inverse(6, a, b) == RationalMatrix::identity(7));
    CHECK(matrix_S_inverse(6, a, b) * matrix_S(6, a, b) == RationalMatrix::identity(7));
    for (long m = 1; m <= 3; ++m) {
        CHECK(matrix_Q(6, a, b, m) * matrix_Q_inverse(6, a, b, m) == RationalMatrix::identity(7));
        CHECK(matrix_Q_inverse(6, a, b, m) * matrix_Q(6, a, b, m) == RationalMatrix::identity(7));
    }
    CHECK(matrix_Q(0, a, b, 2) == RationalMatrix::identity(1));
}

TEST_CASE("conjugation identities hold across parameters") {
    for (long n = 0; n <= 6; ++n)
        for (long m = 1; m <= 3; ++m) {
            CHECK_NOTHROW(verify_conjugation_identities(n, Rational(1), Rational(1), m));
            CHECK_NOTHROW(verify_conjugation_identities(n, Rational(Integer(1), Integer(2)),
                                                        Rational(Integer(-1), Integer(3)), m));
        }
}

TEST_CASE("coherent vector components") {
    CoherentVector v1 = coherent_vector(1, Rational(1));
    CHECK(v1.components == (std::vector<Rational>{Rational(1), Rational(1)}));

    CoherentVector v2 = coherent_vector(2, Rational(Integer(1), Integer(2)));
    CHECK(v2.components ==
          std::vector<Rational>{Rational(1), Rational(1), Rational(Integer(1), Integer(4))});

    // eta = 0 degenerates to the lowest-weight vector and must not throw
    CoherentVector v0 = coherent_vector(3, Rational(0));
    CHECK(v0.components ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0)});
}

TEST_CASE("coherent ladder relations") {
    CHECK_NOTHROW(coherent_relations_check(coherent_vector(1, Rational(1))));
    CHECK_NOTHROW(coherent_relations_check(coherent_vector(2, Rational(Integer(1), Integer(2)))));
    for (long n = 0; n <= 6; ++n)
        CHECK_NOTHROW(coherent_relations_check(coherent_vector(n, Rational(Integer(-2), Integer(3)))));
    CHECK_THROWS_AS(coherent_relations_check(coherent_vector(3, Rational(0))), EtaZero);
}

TEST_CASE("iterated coherent ladder actions") {
    // (Jm^T)^k v = eta^-k falling(Nhat, k) v and (Jp^T)^k v = eta^k falling(N - Nhat, k) v
    const long N = 4;
    const Rational eta(Integer(2), Integer(3));
    RepMatrices rep = build_rep(N);
    CoherentVector v = coherent_vector(N, eta);
    for (long k = 0; k <= N; ++k) {
        std::vector<Rational> down = rep.jm.transpose().pow(k).mat_vec(v.components);
        std::vector<Rational> up = rep.jp.transpose().pow(k).mat_vec(v.components);
        for (long n = 0; n <= N; ++n) {
            CHECK(down[static_cast<size_t>(n)] ==
                  pow(eta, -k) * falling_factorial(Rational(n), k) *
                      v.components[static_cast<size_t>(n)]);
            CHECK(up[static_cast<size_t>(n)] ==
                  pow(eta, k) * falling_factorial(Rational(N - n), k) *
                      v.components[static_cast<size_t>(n)]);
        }
    }
}
