#include "dortho/su2rep.hpp"

#include <string>

#include "dortho/combinatorics.hpp"
#include "dortho/errors.hpp"

namespace dortho {

RepMatrices build_rep(long N) {
    if (N < 0) throw DorthoError("build_rep: N must be nonnegative");
    const long dim = N + 1;
    RepMatrices rep{N, RationalMatrix(dim, dim), RationalMatrix(dim, dim), RationalMatrix(dim, dim)};
    for (long n = 0; n < dim; ++n) {
        if (n + 1 <= N) rep.jp.at(n + 1, n) = Rational(n + 1);
        if (n - 1 >= 0) rep.jm.at(n - 1, n) = Rational(N - n + 1);
        rep.j0.at(n, n) = Rational(Integer(2 * n - N), Integer(2));
    }
    return rep;
}

RationalMatrix matrix_S(long N, const Rational& a, const Rational& b) {
    RepMatrices rep = build_rep(N);
    RationalMatrix jp2 = rep.jp * rep.jp;
    RationalMatrix jm2 = rep.jm * rep.jm;
    return exp_nilpotent(jp2 * a) * exp_nilpotent(jm2 * b);
}

RationalMatrix matrix_S_inverse(long N, const Rational& a, const Rational& b) {
    RepMatrices rep = build_rep(N);
    RationalMatrix jp2 = rep.jp * rep.jp;
    RationalMatrix jm2 = rep.jm * rep.jm;
    return exp_nilpotent(jm2 * (-b)) * exp_nilpotent(jp2 * (-a));
}

RationalMatrix matrix_Q(long N, const Rational& a, const Rational& b, long M) {
    if (M < 1) throw DorthoError("matrix_Q: M must be positive");
    RepMatrices rep = build_rep(N);
    return exp_nilpotent(rep.jp * a) * exp_nilpotent(rep.jm.pow(M) * b);
}

RationalMatrix matrix_Q_inverse(long N, const Rational& a, const Rational& b, long M) {
    if (M < 1) throw DorthoError("matrix_Q_inverse: M must be positive");
    RepMatrices rep = build_rep(N);
    return exp_nilpotent(rep.jm.pow(M) * (-b)) * exp_nilpotent(rep.jp * a * Rational(-1));
}

namespace {

void expect_equal(const RationalMatrix& lhs, const RationalMatrix& rhs, const std::string& label) {
    if (lhs != rhs) throw IdentityFailure("conjugation identity failed: " + label);
}

// exp(X) C exp(-X) computed directly from the exponentials.
RationalMatrix conjugate(const RationalMatrix& x, const RationalMatrix& center) {
    return exp_nilpotent(x) * center * exp_nilpotent(x * Rational(-1));
}

} // namespace

void verify_conjugation_identities(long N, const Rational& a, const Rational& b, long M) {
    if (M < 1) throw DorthoError("verify_conjugation_identities: M must be positive");
    RepMatrices rep = build_rep(N);
    const RationalMatrix& jp = rep.jp;
    const RationalMatrix& jm = rep.jm;
    const RationalMatrix& j0 = rep.j0;
    const RationalMatrix id = RationalMatrix::identity(N + 1);
    const Rational two(2);

    // Single exponentials, Q(x) = a x.
    {
        RationalMatrix qp = jp * a;      // Q(Jp); Q'(Jp) = a I, Q'' = 0
        expect_equal(conjugate(qp, j0), j0 - jp * a, "exp(a Jp) J0 exp(-a Jp)");
        expect_equal(conjugate(qp, jm), jm + (j0 * a) * two + jp * (-(a * a)),
                     "exp(a Jp) Jm exp(-a Jp)");
        RationalMatrix qm = jm * a;
        expect_equal(conjugate(qm, j0), j0 + jm * a, "exp(a Jm) J0 exp(-a Jm)");
        expect_equal(conjugate(qm, jp), jp - (j0 * a) * two - jm * (a * a),
                     "exp(a Jm) Jp exp(-a Jm)");
    }

    // Single exponentials, Q(x) = a x^2.
    {
        RationalMatrix jp2 = jp * jp, jm2 = jm * jm;
        RationalMatrix dqp = jp * (a * two);            // Q'(Jp) = 2a Jp
        expect_equal(conjugate(jp2 * a, j0), j0 - jp * dqp, "exp(a Jp^2) J0 exp(-a Jp^2)");
        // Jm moves by 2 Q'(Jp) J0 + Jp [Q'' - Q'^2], the derivative factor on the left.
        expect_equal(conjugate(jp2 * a, jm),
                     jm + (dqp * j0) * two + jp * (id * (a * two) - dqp * dqp),
                     "exp(a Jp^2) Jm exp(-a Jp^2)");
        RationalMatrix dqm = jm * (a * two);
        expect_equal(conjugate(jm2 * a, j0), j0 + jm * dqm, "exp(a Jm^2) J0 exp(-a Jm^2)");
        // Jp moves by -2 J0 Q'(Jm) - Jm [Q'' + Q'^2], the J0 factor on the left.
        expect_equal(conjugate(jm2 * a, jp),
                     jp - (j0 * dqm) * two - jm * (id * (a * two) + dqm * dqm),
                     "exp(a Jm^2) Jp exp(-a Jm^2)");
    }

    // Single exponential, Q(x) = b x^M.
    {
        RationalMatrix jmM = jm.pow(M);
        RationalMatrix dq = jm.pow(M - 1) * (b * Rational(M));
        RationalMatrix ddq = (M >= 2) ? jm.pow(M - 2) * (b * Rational(M * (M - 1)))
                                      : RationalMatrix(N + 1, N + 1);
        expect_equal(conjugate(jmM * b, j0), j0 + jm * dq, "exp(b Jm^M) J0 exp(-b Jm^M)");
        expect_equal(conjugate(jmM * b, jp), jp - (j0 * dq) * two - jm * (ddq + dq * dq),
                     "exp(b Jm^M) Jp exp(-b Jm^M)");
    }

    // Composite maps for S = exp(a Jp^2) exp(b Jm^2).
    {
        RationalMatrix s = matrix_S(N, a, b);
        RationalMatrix s_inv = matrix_S_inverse(N, a, b);
        expect_equal(s * s_inv, id, "S S^-1");

        // K = Jm + 2a Jp (1 + 2 J0) - 4a^2 Jp^3, with Jp left of (1 + 2 J0).
        RationalMatrix one_2j0 = id + j0 * two;
        RationalMatrix k = jm + (jp * one_2j0) * (a * two) - jp.pow(3) * (a * a * Rational(4));
        expect_equal(s * j0 * s_inv, j0 - (jp * jp) * (a * two) + (k * k) * (b * two),
                     "S J0 S^-1");
        expect_equal(s * (jm * jm) * s_inv, k * k, "S Jm^2 S^-1");

        // L = Jp + 2b (1 + 2 J0) Jm - 4b^2 Jm^3, with (1 + 2 J0) left of Jm.
        RationalMatrix l = jp + (one_2j0 * jm) * (b * two) - jm.pow(3) * (b * b * Rational(4));
        expect_equal(s_inv * j0 * s, j0 - (jm * jm) * (b * two) + (l * l) * (a * two),
                     "S^-1 J0 S");
    }

    // Composite maps for Q = exp(a Jp) exp(b Jm^M).
    {
        RationalMatrix qmat = matrix_Q(N, a, b, M);
        RationalMatrix q_inv = matrix_Q_inverse(N, a, b, M);
        expect_equal(qmat * q_inv, id, "Q Q^-1");

        RationalMatrix rhs = j0 + jp * a - jm.pow(M) * (b * Rational(M)) +
                             ((id * Rational(M - 1) + j0 * two) * jm.pow(M - 1)) *
                                 (a * b * Rational(M)) -
                             jm.pow(2 * M - 1) * (a * b * b * Rational(M * M));
        expect_equal(q_inv * j0 * qmat, rhs, "Q^-1 J0 Q");

        RationalMatrix w = jm + j0 * (a * two) - jp * (a * a);
        expect_equal(qmat * j0 * q_inv, j0 - jp * a + w.pow(M) * (b * Rational(M)),
                     "Q J0 Q^-1");
    }
}

CoherentVector coherent_vector(long N, const Rational& eta) {
    if (N < 0) throw DorthoError("coherent_vector: N must be nonnegative");
    CoherentVector v{N, eta, {}};
    v.components.reserve(static_cast<size_t>(N) + 1);
    for (long n = 0; n <= N; ++n) v.components.push_back(Rational(binomial(N, n)) * pow(eta, n));
    return v;
}

void coherent_relations_check(const CoherentVector& v) {
    if (v.eta.is_zero())
        throw EtaZero("coherent relations need eta != 0");
    if (static_cast<long>(v.components.size()) != v.N + 1)
        throw DorthoError("coherent vector has wrong length");

    RepMatrices rep = build_rep(v.N);
    RationalMatrix nhat = rep.j0;           // Nhat = J0 + N/2
    for (long n = 0; n <= v.N; ++n) nhat.at(n, n) += Rational(Integer(v.N), Integer(2));

    std::vector<Rational> lhs_m = rep.jm.transpose().mat_vec(v.components);
    std::vector<Rational> rhs_m = nhat.mat_vec(v.components);
    std::vector<Rational> lhs_p = rep.jp.transpose().mat_vec(v.components);
    for (long n = 0; n <= v.N; ++n) {
        const auto i = static_cast<size_t>(n);
        if (lhs_m[i] * v.eta != rhs_m[i])
            throw IdentityFailure("coherent lowering relation failed at n=" + std::to_string(n));
        Rational rhs_p = v.eta * (Rational(v.N) * v.components[i] - rhs_m[i]);
        if (lhs_p[i] != rhs_p)
            throw IdentityFailure("coherent raising relation failed at n=" + std::to_string(n));
    }
}

} // namespace dortho
