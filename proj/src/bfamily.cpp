#include "dortho/bfamily.hpp"

#include <cmath>
#include <string>

#include "dortho/combinatorics.hpp"
#include "dortho/errors.hpp"
#include "dortho/su2rep.hpp"

namespace dortho {

void FamilyParamsB::validate() const {
    if (M < 1) throw ParseError("family B: M must be at least 1");
    if (f.is_zero()) throw ParseError("family B: f must be nonzero");
    if (N < 0) throw ParseError("family B: N must be nonnegative");
}

Rational ZetaTable::zeta_M(long n) const {
    Rational sign((M % 2 == 0) ? 1 : -1);
    return sign * Rational(M) * pochhammer(Rational(-n), M) * pochhammer(Rational(N - n + 1), M);
}

Rational ZetaTable::zeta_Mm1(long n) const {
    Rational sign((M % 2 == 0) ? 1 : -1);
    return sign * Rational(M) * pochhammer(Rational(-n), M - 1) *
           pochhammer(Rational(N - n + 1), M - 1) * Rational(2 * n - M - N + 1);
}

Rational ZetaTable::zeta_2Mm1(long n) const {
    return Rational(-M * M) * pochhammer(Rational(-n), 2 * M - 1) *
           pochhammer(Rational(N - n + 1), 2 * M - 1);
}

std::vector<UPoly> b_poly_recurrence(const FamilyParamsB& params, long n_max) {
    params.validate();
    if (n_max < 0 || n_max > params.N)
        throw IndexOutOfFamily("family B: n_max " + std::to_string(n_max) +
                               " outside range 0.." + std::to_string(params.N));
    const ZetaTable zeta{params.M, params.N};
    const Rational& f = params.f;
    const UPoly k_var("k", {Rational(0), Rational(1)});

    std::vector<UPoly> b;
    b.push_back(UPoly::constant("k", Rational(1)));
    for (long n = 0; n < n_max; ++n) {
        UPoly next = (k_var - UPoly::constant("k", Rational(n))) * b[static_cast<size_t>(n)];
        if (n - params.M >= 0)
            next += b[static_cast<size_t>(n - params.M)] * (f * zeta.zeta_M(n));
        if (n + 1 - params.M >= 0)
            next += b[static_cast<size_t>(n + 1 - params.M)] * (f * zeta.zeta_Mm1(n));
        if (n + 1 - 2 * params.M >= 0)
            next += b[static_cast<size_t>(n + 1 - 2 * params.M)] * (f * f * zeta.zeta_2Mm1(n));
        b.push_back(next);
    }
    return b;
}

UPoly b_poly_hypergeometric(const FamilyParamsB& params, long n) {
    params.validate();
    if (n < 0 || n > params.N) throw IndexOutOfFamily("family B: n outside range");
    const long M = params.M, N = params.N;
    const long q = params.q_of(n), j = params.j_of(n);
    const Rational& f = params.f;

    const Rational z = Rational(-1) / (pow(Rational(M), M) * f);
    std::vector<Rational> lower;
    for (long mp = 0; mp < M; ++mp)
        if (mp != M - 1 - q) lower.push_back(Rational(Integer(q + mp + 1), Integer(M)));
    for (long mp = 0; mp < M; ++mp) lower.push_back(Rational(Integer(q - N + mp), Integer(M)));

    UPoly series("k");
    Rational scalar(1);    // (-j)_m z^m / (m! prod(lower)_m), updated per term
    for (long m = 0; m <= j; ++m) {
        UPoly numer = UPoly::constant("k", Rational(1));
        for (long mp = 0; mp < M; ++mp)
            numer = numer * poly_pochhammer(
                UPoly("k", {Rational(Integer(q + mp), Integer(M)),
                            Rational(Integer(-1), Integer(M))}),
                m);
        series += numer * scalar;
        if (m == j) break;
        Rational den(m + 1);
        for (const Rational& d : lower) den *= d + Rational(m);
        if (den.is_zero())
            throw ZeroDenominatorParameter("family B hypergeometric form hit a vanishing lower parameter");
        scalar *= (Rational(-j) + Rational(m)) * z / den;
    }

    Rational pref = Rational((q % 2 == 0) ? 1 : -1) * pow(f, j) /
                    (Rational(factorial(j)) * Rational(factorial(q))) *
                    Rational(factorial(N - q)) * Rational(factorial(n)) / Rational(factorial(N - n));
    UPoly kfall = poly_pochhammer(UPoly("k", {Rational(0), Rational(-1)}), q);   // (-k)_q
    return series * kfall * pref;
}

UPoly b_poly_from_matrix_split(const FamilyParamsB& params, long n,
                               const Rational& a, const Rational& b) {
    params.validate();
    if (n < 0 || n > params.N) throw IndexOutOfFamily("family B: n outside range");
    if (a.is_zero() || pow(a, params.M) * b != params.f)
        throw ParseError("family B matrix extraction: need a != 0 and a^M b = f");

    const long N = params.N;
    RationalMatrix phi = matrix_Q(N, a, b, params.M);

    std::vector<Rational> values(static_cast<size_t>(N) + 1);
    for (long k = 0; k <= N; ++k)
        values[static_cast<size_t>(k)] =
            pow(a, n) * Rational(factorial(n)) * phi.at(k, n) / pow(a, k);

    std::vector<std::pair<Rational, Rational>> pts;
    for (long k = 0; k <= n; ++k) pts.emplace_back(Rational(k), values[static_cast<size_t>(k)]);
    UPoly poly = UPoly::interpolate("k", pts);

    if (poly.degree() != n)
        throw InterpolationDegreeMismatch("family B matrix extraction: degree " +
                                          std::to_string(poly.degree()) + " for n = " +
                                          std::to_string(n));
    for (long k = n + 1; k <= N; ++k)
        if (poly.evaluate(Rational(k)) != values[static_cast<size_t>(k)])
            throw InterpolationDegreeMismatch(
                "family B matrix extraction: extra sample point off the interpolant");
    return poly;
}

UPoly b_poly_from_matrix(const FamilyParamsB& params, long n) {
    return b_poly_from_matrix_split(params, n, Rational(1), params.f);
}

RationalMatrix inverse_elements_B(const FamilyParamsB& params) {
    params.validate();
    const long N = params.N, M = params.M;
    const Rational a(1), b = params.f;

    RationalMatrix phi = matrix_Q(N, a, b, M);
    RationalMatrix vs = matrix_Q_inverse(N, a, b, M);
    const RationalMatrix id = RationalMatrix::identity(N + 1);
    if (vs * phi != id || phi * vs != id)
        throw IdentityFailure("family B: Q^-1 Q != I");

    RationalMatrix star = matrix_Q(N, -a, -b, M);
    for (long n = 0; n <= N; ++n)
        for (long k = 0; k <= N; ++k)
            if (vs.at(n, k) * Rational(binomial(N, n)) !=
                star.at(N - k, N - n) * Rational(binomial(N, k)))
                throw ReflectionMismatch("family B reflection law failed at (" +
                                         std::to_string(n) + "," + std::to_string(k) + ")");

    if (M == 2) {
        auto vs_at = [&](long n, long k) -> Rational {
            if (n < 0 || n > N) return Rational(0);
            return vs.at(n, k);
        };
        for (long n = 0; n <= N; ++n)
            for (long k = 0; k <= N; ++k) {
                Rational lhs = Rational(k - n) * vs.at(n, k);
                Rational rhs = a * Rational(n) * vs_at(n - 1, k) +
                               Rational(2) * a * b * Rational(2 * n + 1 - N) * Rational(N - n) *
                                   vs_at(n + 1, k) -
                               Rational(2) * b * Rational(N - n) * Rational(N - n - 1) *
                                   vs_at(n + 2, k) -
                               Rational(4) * a * b * b * Rational(N - n) * Rational(N - n - 1) *
                                   Rational(N - n - 2) * vs_at(n + 3, k);
                if (lhs != rhs)
                    throw IdentityFailure("family B inverse recurrence failed at (" +
                                          std::to_string(n) + "," + std::to_string(k) + ")");
            }
    }
    return vs;
}

void biortho_poly_check_B(const FamilyParamsB& params) {
    params.validate();
    const long N = params.N;
    FamilyParamsB dual{params.M, Rational((params.M % 2 == 0) ? -1 : 1) * params.f, N};

    std::vector<UPoly> first = b_poly_recurrence(params, N);
    std::vector<UPoly> second = b_poly_recurrence(dual, N);

    for (long n = 0; n <= N; ++n)
        for (long m = 0; m <= N; ++m) {
            Rational sum(0);
            for (long k = 0; k <= N; ++k) {
                Rational w = Rational((k % 2 == 0) ? 1 : -1) /
                             (Rational(factorial(k)) * Rational(factorial(N - k)));
                sum += w * first[static_cast<size_t>(n)].evaluate(Rational(k)) *
                       second[static_cast<size_t>(N - m)].evaluate(Rational(N - k));
            }
            Rational expect = (n == m) ? Rational((n % 2 == 0) ? 1 : -1) : Rational(0);
            if (sum != expect)
                throw IdentityFailure("family B biorthogonality failed at (n,m) = (" +
                                      std::to_string(n) + "," + std::to_string(m) +
                                      "), sum " + sum.str());
        }
}

void b_difference_check(const FamilyParamsB& params, long n) {
    params.validate();
    if (params.M != 2) throw DorthoError("the five-point difference identity is stated at M = 2");
    const long N = params.N;
    const Rational& f = params.f;
    std::vector<UPoly> fam = b_poly_recurrence(params, n);
    const UPoly& bn = fam[static_cast<size_t>(n)];

    auto kp = [](const Rational& a0, const Rational& a1) { return UPoly("k", {a0, a1}); };
    const UPoly k_var = kp(Rational(0), Rational(1));
    const UPoly one = UPoly::constant("k", Rational(1));
    const Rational Nr(N);

    // Coefficients in k. The (k+1)-shift carries 2k - N + 1 and the stationary
    // term carries N(N-1); the variants with 2k - N - 1 and N(N+1) fail the
    // identity already at n = 0.
    UPoly c_p2 = kp(Rational(-N), Rational(1)) * kp(Rational(-N + 1), Rational(1)) *
                 (Rational(2) * f);
    UPoly c_p1 = kp(Rational(-N + 1), Rational(2)) * kp(Nr, Rational(-1)) * (Rational(4) * f);
    UPoly c_0 = k_var + (k_var * k_var * Rational(6) - k_var * (Rational(6) * Nr) +
                         one * (Nr * (Nr - Rational(1)))) *
                            (Rational(2) * f);
    UPoly c_m1 = k_var * (kp(Rational(-N - 1), Rational(2)) * (Rational(4) * f) + one) *
                 Rational(-1);
    UPoly c_m2 = k_var * kp(Rational(-1), Rational(1)) * (Rational(2) * f);

    UPoly rhs = c_p2 * bn.shift_argument(Rational(2)) + c_p1 * bn.shift_argument(Rational(1)) +
                c_0 * bn + c_m1 * bn.shift_argument(Rational(-1)) +
                c_m2 * bn.shift_argument(Rational(-2));
    UPoly lhs = bn * Rational(n);
    if (lhs != rhs)
        throw IdentityFailure("family B difference identity residual " + (lhs - rhs).str() +
                              " at n = " + std::to_string(n));
}

std::vector<LinearFunctional> functionals_B(const FamilyParamsB& params) {
    params.validate();
    if (params.M != 2) throw DorthoError("the functional pattern is stated at M = 2");
    const long N = params.N;
    RationalMatrix vs = matrix_Q_inverse(N, Rational(1), params.f, params.M);

    std::vector<LinearFunctional> funcs(3);
    for (long i = 0; i < 3; ++i) {
        funcs[static_cast<size_t>(i)].weights.resize(static_cast<size_t>(N) + 1);
        for (long x = 0; x <= N; ++x)
            funcs[static_cast<size_t>(i)].weights[static_cast<size_t>(x)] = vs.at(i, x);
    }

    std::vector<UPoly> fam = b_poly_recurrence(params, N);
    for (long i = 0; i < 3; ++i)
        for (long gamma = 0; 3 * gamma + i <= N; ++gamma) {
            const long boundary = 3 * gamma + i;
            for (long n = boundary; n <= N; ++n) {
                Rational moment =
                    funcs[static_cast<size_t>(i)].apply_moment(fam[static_cast<size_t>(n)], gamma);
                const bool expect_zero = n > boundary;
                if (expect_zero != moment.is_zero())
                    throw PatternViolation("family B moment pattern failed at (i,gamma,n) = (" +
                                           std::to_string(i) + "," + std::to_string(gamma) + "," +
                                           std::to_string(n) + ")");
            }
        }
    return funcs;
}

InverseRowDecomposition decompose_inverse_row_B(const FamilyParamsB& params, long n) {
    params.validate();
    if (n < 0 || n > params.N) throw IndexOutOfFamily("family B: n outside range");
    const long N = params.N, d = 2 * params.M - 1;
    RationalMatrix vs = matrix_Q_inverse(N, Rational(1), params.f, params.M);

    const long gamma = n / d, delta = n % d;
    InverseRowDecomposition dec;
    dec.degree_cap.assign(static_cast<size_t>(d), gamma);
    for (long i = delta + 1; i < d; ++i) dec.degree_cap[static_cast<size_t>(i)] = gamma - 1;

    long unknowns = 0;
    for (long cap : dec.degree_cap) unknowns += cap + 1;

    RationalMatrix sys(N + 1, unknowns);
    std::vector<Rational> rhs(static_cast<size_t>(N) + 1);
    for (long k = 0; k <= N; ++k) {
        long col = 0;
        for (long i = 0; i < d; ++i)
            for (long deg = 0; deg <= dec.degree_cap[static_cast<size_t>(i)]; ++deg)
                sys.at(k, col++) = pow(Rational(k), deg) * vs.at(i, k);
        rhs[static_cast<size_t>(k)] = vs.at(n, k);
    }
    std::vector<Rational> sol = solve_exact(sys, rhs);

    long col = 0;
    for (long i = 0; i < d; ++i) {
        const long cap = dec.degree_cap[static_cast<size_t>(i)];
        std::vector<Rational> coeffs;
        for (long deg = 0; deg <= cap; ++deg) coeffs.push_back(sol[static_cast<size_t>(col++)]);
        dec.y.emplace_back("k", std::move(coeffs));
        // At gamma = 0 the target row is itself basis row delta, so Y_i with
        // i < delta vanishes identically; that is structure, not an accident.
        const bool structural_zero = (gamma == 0 && i < delta);
        if (cap >= 0 && dec.y.back().degree() < cap && !structural_zero)
            dec.dropped.push_back(i);
    }
    return dec;
}

namespace {

using cd = std::complex<double>;

cd ipow(cd base, long e) {
    cd r(1.0, 0.0);
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

double rel_dev(cd x, cd y) {
    double scale = std::max({std::abs(x), std::abs(y), 1e-12});
    return std::abs(x - y) / scale;
}

} // namespace

GFReport b_generating_function_check(const FamilyParamsB& params, const Rational& a, cd eta) {
    params.validate();
    if (a.is_zero()) throw ParseError("generating function check: a must be nonzero");
    const long N = params.N, M = params.M;
    const Rational b = params.f / pow(a, M);

    std::vector<UPoly> fam = b_poly_recurrence(params, N);
    RationalMatrix phi = matrix_Q(N, a, b, M);
    const double ad = a.to_double(), bd = b.to_double();

    GFReport rep{0.0, 0.0};
    for (long k = 0; k <= N; ++k) {
        cd g1(0.0, 0.0);
        for (long n = 0; n <= N; ++n)
            g1 += fam[static_cast<size_t>(n)].evaluate(Rational(k)).to_double() *
                  ipow(eta / ad, n) / std::tgamma(static_cast<double>(n) + 1.0);

        const double cnk = binomial(N, k).get_d();
        cd ground = phi.at(k, 0).to_double() * std::sqrt(cnk);
        cd g2(0.0, 0.0);
        for (long n = 0; n <= N; ++n) {
            const double cn = binomial(N, n).get_d();
            cd unitary = phi.at(k, n).to_double() * std::sqrt(cnk / cn);
            g2 += std::sqrt(cn) * unitary * ipow(eta, n);
        }
        g2 /= ground;
        rep.dev12 = std::max(rep.dev12, rel_dev(g1, g2));

        // (iii) terminating mF0 closed form.
        const cd z = ((M % 2 == 0) ? 1.0 : -1.0) * ipow(static_cast<double>(M) * eta, M) * bd;
        cd g3(0.0, 0.0);
        for (long mu = 0; mu <= k; ++mu) {
            double fall = 1.0;   // (-k)_mu = (-1)^mu k (k-1) ... (k-mu+1)
            for (long i = 0; i < mu; ++i) fall *= static_cast<double>(k - i);
            double sgn = (mu % 2 == 0) ? 1.0 : -1.0;

            cd inner(0.0, 0.0), term(1.0, 0.0);
            const long smax = (N - mu) / M;
            for (long s = 0; s <= smax; ++s) {
                inner += term;
                cd factor(1.0, 0.0);
                for (long mp = 0; mp < M; ++mp)
                    factor *= (static_cast<double>(mu - N + mp) / M + static_cast<double>(s));
                term *= factor * z / static_cast<double>(s + 1);
            }
            g3 += ipow(-eta / ad, mu) / std::tgamma(static_cast<double>(mu) + 1.0) *
                  (sgn * fall) * inner;
        }
        rep.dev23 = std::max(rep.dev23, rel_dev(g2, g3));

        if (M == 1) {
            // At M = 1 the closed form factorizes into the binomial product.
            cd g4 = ipow(cd(1.0, 0.0) + bd * eta, N - k) *
                    ipow(cd(1.0, 0.0) + bd * eta + eta / ad, k);
            rep.dev23 = std::max(rep.dev23, rel_dev(g2, g4));
        }
    }
    return rep;
}

} // namespace dortho
