#include "dortho/afamily.hpp"

#include <cmath>
#include <string>

#include "dortho/combinatorics.hpp"
#include "dortho/errors.hpp"
#include "dortho/su2rep.hpp"

namespace dortho {

void FamilyParamsA::validate() const {
    if (q != 0 && q != 1) throw ParseError("family A: q must be 0 or 1");
    if (c.is_zero()) throw ParseError("family A: c must be nonzero");
    if (N < q) throw ParseError("family A: N must be at least q");
}

namespace {

// n = 2l + q as a polynomial in l.
UPoly n_of_l(long q) { return UPoly("l", {Rational(q), Rational(2)}); }

UPoly lin(const std::string& var, const Rational& a0, const Rational& a1) {
    return UPoly(var, {a0, a1});
}

} // namespace

Rational XiTable::value(long t, long n) const {
    const Rational nr(n), Nr(N);
    switch (t) {
        case 0: return Rational(2) * (Rational(2) * nr - Nr) *
                       (Rational(2) * nr * nr - Rational(2) * nr * Nr - Nr + Rational(1));
        case 1: return Rational(4) * (Rational(6) * nr * nr - Rational(6) * nr * (Nr + Rational(2)) +
                                      Nr * Nr + Rational(5) * Nr + Rational(9));
        case 2: return Rational(16) * (Rational(2) * nr - Nr - Rational(4));
        case 3: return Rational(16);
        default: throw DorthoError("xi index out of range");
    }
}

UPoly XiTable::value_poly(long t, long q) const {
    const UPoly n = n_of_l(q);
    const Rational Nr(N);
    const UPoly one = UPoly::constant("l", Rational(1));
    switch (t) {
        case 0: return (n * Rational(2) - one * Nr) *
                       (n * n * Rational(2) - n * (Rational(2) * Nr) - one * (Nr - Rational(1))) *
                       Rational(2);
        case 1: return (n * n * Rational(6) - n * (Rational(6) * (Nr + Rational(2))) +
                        one * (Nr * Nr + Rational(5) * Nr + Rational(9))) *
                       Rational(4);
        case 2: return (n * Rational(2) - one * (Nr + Rational(4))) * Rational(16);
        case 3: return one * Rational(16);
        default: throw DorthoError("xi index out of range");
    }
}

Rational SigmaTable::value(long t, long n) const {
    const Rational nr(n), Nr(N);
    switch (t) {
        case 0: return Rational(2) * (Rational(2) * nr - Nr) *
                       (Rational(1) + Rational(2) * nr * (nr - Nr) - Nr);
        case 1: return Rational(4) * (Rational(6) * nr * nr - Rational(6) * nr * (Nr + Rational(2)) +
                                      Nr * Nr - Rational(7) * Nr + Rational(9));
        case 2: return Rational(16) * (Rational(2) * nr - Nr + Rational(4));
        case 3: return Rational(16);
        default: throw DorthoError("sigma index out of range");
    }
}

std::vector<UPoly> a_poly_recurrence(const FamilyParamsA& params, long j_max) {
    params.validate();
    if (j_max < 0 || j_max > params.p())
        throw IndexOutOfFamily("family A: j_max " + std::to_string(j_max) +
                               " outside range 0.." + std::to_string(params.p()));
    const XiTable xi{params.N};
    const Rational& c = params.c;
    const UPoly ell = lin("l", Rational(0), Rational(1));

    std::vector<UPoly> a;
    a.push_back(UPoly::constant("l", Rational(1)));
    for (long j = 0; j < j_max; ++j) {
        const long n = 2 * j + params.q;
        UPoly next = (ell - UPoly::constant("l", Rational(j))) * a[static_cast<size_t>(j)];
        if (j >= 1)
            next += a[static_cast<size_t>(j - 1)] *
                    (c * pochhammer(Rational(-n), 2) * pochhammer(Rational(params.N - n + 1), 2));
        for (long t = 0; t <= 3; ++t) {
            if (j - t < 0) break;
            Rational coeff = c * pow(-c, t) * xi.value(t, n) *
                             pochhammer(Rational(-n), 2 * t) *
                             pochhammer(Rational(params.N - n + 1), 2 * t);
            next += a[static_cast<size_t>(j - t)] * coeff;
        }
        a.push_back(next);
    }
    return a;
}

UPoly a_poly_hypergeometric(const FamilyParamsA& params, long j) {
    params.validate();
    if (j < 0 || j > params.p())
        throw IndexOutOfFamily("family A: j outside range");
    const long n = 2 * j + params.q, N = params.N, q = params.q;
    const Rational& c = params.c;

    const Rational half(Integer(1), Integer(2));
    const Rational d1 = Rational(q) + half;
    const Rational d2 = Rational(Integer(q - N), Integer(2));
    const Rational d3 = Rational(Integer(q - N + 1), Integer(2));
    const Rational z = Rational(1) / (Rational(16) * c);

    UPoly series("l");
    Rational scalar(1);    // (-j)_m z^m / (m! (d1)_m (d2)_m (d3)_m), updated per term
    for (long m = 0; m <= j; ++m) {
        series += poly_pochhammer(lin("l", Rational(0), Rational(-1)), m) * scalar;
        if (m == j) break;
        Rational den = (d1 + Rational(m)) * (d2 + Rational(m)) * (d3 + Rational(m)) * Rational(m + 1);
        if (den.is_zero())
            throw ZeroDenominatorParameter("family A hypergeometric form hit a vanishing lower parameter");
        scalar *= (Rational(-j) + Rational(m)) * z / den;
    }

    Rational pref = pow(c, j) / Rational(factorial(j)) * Rational(factorial(N - q)) *
                    Rational(factorial(n)) / Rational(factorial(N - n));
    return series * pref;
}

UPoly a_poly_from_matrix_split(const FamilyParamsA& params, long j,
                               const Rational& a, const Rational& b) {
    params.validate();
    if (j < 0 || j > params.p()) throw IndexOutOfFamily("family A: j outside range");
    if (a.is_zero() || a * b != params.c)
        throw ParseError("family A matrix extraction: need a != 0 and a*b = c");

    const long n = 2 * j + params.q, q = params.q, p = params.p();
    RationalMatrix s = matrix_S(params.N, a, b);

    std::vector<Rational> values(static_cast<size_t>(p) + 1);
    for (long ell = 0; ell <= p; ++ell) {
        const long k = 2 * ell + q;
        const Rational& ground = s.at(k, q);
        if (ground.is_zero()) throw DorthoError("vanishing ground-state matrix entry");
        values[static_cast<size_t>(ell)] =
            pow(a, j) * Rational(factorial(n)) * s.at(k, n) / ground;
    }

    std::vector<std::pair<Rational, Rational>> pts;
    for (long ell = 0; ell <= j; ++ell)
        pts.emplace_back(Rational(ell), values[static_cast<size_t>(ell)]);
    UPoly poly = UPoly::interpolate("l", pts);

    if (poly.degree() != j)
        throw InterpolationDegreeMismatch("family A matrix extraction: degree " +
                                          std::to_string(poly.degree()) + " for j = " +
                                          std::to_string(j));
    for (long ell = j + 1; ell <= p; ++ell)
        if (poly.evaluate(Rational(ell)) != values[static_cast<size_t>(ell)])
            throw InterpolationDegreeMismatch(
                "family A matrix extraction: extra sample point off the interpolant");
    return poly;
}

UPoly a_poly_from_matrix(const FamilyParamsA& params, long j) {
    return a_poly_from_matrix_split(params, j, Rational(1), params.c);
}

RationalMatrix inverse_elements_A(const FamilyParamsA& params) {
    params.validate();
    const long N = params.N, q = params.q;
    const Rational a(1), b = params.c;

    RationalMatrix s = matrix_S(N, a, b);
    RationalMatrix chi = matrix_S_inverse(N, a, b);
    const RationalMatrix id = RationalMatrix::identity(N + 1);
    if (chi * s != id || s * chi != id)
        throw IdentityFailure("family A: S^-1 S != I");

    // Star reflection: chi_{n,k} C(N,n) = psi*_{N-k,N-n} C(N,k) with (a,b) -> (-a,-b).
    RationalMatrix star = matrix_S(N, -a, -b);
    for (long n = 0; n <= N; ++n)
        for (long k = 0; k <= N; ++k)
            if (chi.at(n, k) * Rational(binomial(N, n)) !=
                star.at(N - k, N - n) * Rational(binomial(N, k)))
                throw ReflectionMismatch("family A reflection law failed at (" +
                                         std::to_string(n) + "," + std::to_string(k) + ")");

    // Even N: closed form through the family itself.
    if (N % 2 == 0 && N >= 2 * q) {
        const long p = params.p();
        std::vector<UPoly> fam = a_poly_recurrence(params, p);
        for (long j = 0; j <= p; ++j)
            for (long ell = 0; ell <= p; ++ell) {
                const long n = 2 * j + q, k = 2 * ell + q;
                Rational sign = ((j - ell) % 2 == 0) ? Rational(1) : Rational(-1);
                Rational expected = sign * pow(a, j - ell) / Rational(factorial(p - ell)) *
                                    Rational(factorial(n)) / Rational(factorial(k)) *
                                    fam[static_cast<size_t>(p - j)].evaluate(Rational(p - ell));
                if (chi.at(n, k) != expected)
                    throw IdentityFailure("family A closed-form inverse failed at (" +
                                          std::to_string(n) + "," + std::to_string(k) + ")");
            }
    }

    // Inverse-side recurrence. The tabulated t=1 coefficient reads 6n(N+2),
    // which fails the identity already at n=1; the identity requires 6n(N-2),
    // used here. The remaining coefficients match the table.
    const SigmaTable sigma{N};
    auto sigma_corrected = [&](long t, long n) -> Rational {
        if (t != 1) return sigma.value(t, n);
        const Rational nr(n), Nr(N);
        return Rational(4) * (Rational(6) * nr * nr - Rational(6) * nr * (Nr - Rational(2)) +
                              Nr * Nr - Rational(7) * Nr + Rational(9));
    };
    auto chi_at = [&](long n, long k) -> Rational {
        if (n < 0 || n > N) return Rational(0);
        return chi.at(n, k);
    };
    for (long n = 0; n <= N; ++n)
        for (long k = 0; k <= N; ++k) {
            Rational lhs = Rational(k - n) * chi.at(n, k);
            Rational rhs = Rational(2) * a * Rational(n) * Rational(n - 1) * chi_at(n - 2, k) -
                           Rational(2) * b * Rational(N - n) * Rational(N - n - 1) * chi_at(n + 2, k);
            for (long t = 0; t <= 3; ++t) {
                if (n + 2 * t > N) break;
                Rational r_t(1);   // (N-n)(N-n-1)...(N-n-2t+1)
                for (long i = 0; i < 2 * t; ++i) r_t *= Rational(N - n - i);
                rhs -= Rational(2) * a * b * pow(-b, t) * sigma_corrected(t, n) * r_t *
                       chi_at(n + 2 * t, k);
            }
            if (lhs != rhs)
                throw IdentityFailure("family A inverse recurrence failed at (" +
                                      std::to_string(n) + "," + std::to_string(k) + ")");
        }

    return chi;
}

void biortho_poly_check(const FamilyParamsA& params) {
    params.validate();
    const long N = params.N, q = params.q, p = params.p();

    std::vector<UPoly> first = a_poly_recurrence(params, p);
    std::vector<UPoly> second;
    if (N % 2 == 0) {
        second = first;                      // even N pairs the class with itself
    } else {
        FamilyParamsA other{1 - q, params.c, N};
        second = a_poly_recurrence(other, other.p());   // interlaced classes
        if (other.p() != p) throw DorthoError("interlaced classes disagree on p");
    }

    for (long j = 0; j <= p; ++j)
        for (long jp = 0; jp <= p; ++jp) {
            Rational sum(0);
            for (long ell = 0; ell <= p; ++ell) {
                Rational w = Rational((ell % 2 == 0) ? 1 : -1) /
                             (Rational(factorial(ell)) * Rational(factorial(p - ell)));
                sum += w * first[static_cast<size_t>(j)].evaluate(Rational(ell)) *
                       second[static_cast<size_t>(p - jp)].evaluate(Rational(p - ell));
            }
            Rational expect = (j == jp) ? Rational((j % 2 == 0) ? 1 : -1) : Rational(0);
            if (sum != expect)
                throw IdentityFailure("family A biorthogonality failed at (j,j') = (" +
                                      std::to_string(j) + "," + std::to_string(jp) +
                                      "), sum " + sum.str());
        }
}

namespace {

// Omega_l = (2l+q+1)_2 (2l+q-N)_2 / (l+1), a genuine polynomial for q in {0,1}.
UPoly omega_poly(long q, long N) {
    UPoly num = lin("l", Rational(q + 1), Rational(2)) * lin("l", Rational(q + 2), Rational(2)) *
                lin("l", Rational(q - N), Rational(2)) * lin("l", Rational(q - N + 1), Rational(2));
    return num.divide_exact(lin("l", Rational(1), Rational(1)));
}

} // namespace

UPoly a_difference_operator(const FamilyParamsA& params, const UPoly& f) {
    params.validate();
    const XiTable xi{params.N};
    const UPoly ell = lin("l", Rational(0), Rational(1));
    const UPoly neg_ell = lin("l", Rational(0), Rational(-1));

    UPoly result = ell * (f - f.shift_argument(Rational(-1)));
    result += omega_poly(params.q, params.N) * f.shift_argument(Rational(1)) * params.c;
    for (long t = 0; t <= 3; ++t)
        result -= poly_pochhammer(neg_ell, t) * xi.value_poly(t, params.q) *
                  f.shift_argument(Rational(-t)) * params.c;
    return result;
}

void a_difference_apply(const FamilyParamsA& params, long j) {
    std::vector<UPoly> fam = a_poly_recurrence(params, j);
    UPoly lhs = a_difference_operator(params, fam[static_cast<size_t>(j)]);
    UPoly rhs = fam[static_cast<size_t>(j)] * Rational(j);
    if (lhs != rhs)
        throw IdentityFailure("family A difference equation residual " + (lhs - rhs).str() +
                              " at j = " + std::to_string(j));
}

UPoly a_forward_shift_operator(const FamilyParamsA& params, const UPoly& f) {
    params.validate();
    const XiTable xi{params.N};
    const UPoly neg_ell = lin("l", Rational(0), Rational(-1));

    UPoly result = omega_poly(params.q, params.N) * f.shift_argument(Rational(1));
    for (long t = 0; t <= 3; ++t)
        result -= poly_pochhammer(neg_ell, t) * xi.value_poly(t, params.q) *
                  f.shift_argument(Rational(-t));
    return result;
}

void a_forward_shift(const FamilyParamsA& params, long j) {
    std::vector<UPoly> fam = a_poly_recurrence(params, j);
    UPoly lhs = a_forward_shift_operator(params, fam[static_cast<size_t>(j)]);
    UPoly rhs("l");
    if (j >= 1) {
        Rational factor = pochhammer(Rational(-2 * j - params.q), 2) *
                          pochhammer(Rational(params.N - 2 * j - params.q + 1), 2);
        rhs = fam[static_cast<size_t>(j - 1)] * factor;
    }
    if (lhs != rhs)
        throw IdentityFailure("family A forward shift residual " + (lhs - rhs).str() +
                              " at j = " + std::to_string(j));
}

std::vector<LinearFunctional> functionals_A(const FamilyParamsA& params) {
    params.validate();
    const long N = params.N, q = params.q, p = params.p();
    if (N < 4 + q) throw IndexOutOfFamily("family A functionals need rows 2i+q <= N for i <= 2");

    RationalMatrix chi = matrix_S_inverse(N, Rational(1), params.c);

    std::vector<LinearFunctional> funcs(3);
    for (long i = 0; i < 3; ++i) {
        funcs[static_cast<size_t>(i)].weights.resize(static_cast<size_t>(p) + 1);
        for (long x = 0; x <= p; ++x)
            funcs[static_cast<size_t>(i)].weights[static_cast<size_t>(x)] =
                Rational(factorial(2 * x + q)) / Rational(factorial(x)) *
                chi.at(2 * i + q, 2 * x + q);
    }

    // Moment pattern: zero from j = 3*gamma + i + 1 on, nonzero at the boundary.
    std::vector<UPoly> fam = a_poly_recurrence(params, p);
    for (long i = 0; i < 3; ++i)
        for (long gamma = 0; 3 * gamma + i <= p; ++gamma) {
            const long boundary = 3 * gamma + i;
            for (long j = boundary; j <= p; ++j) {
                Rational moment =
                    funcs[static_cast<size_t>(i)].apply_moment(fam[static_cast<size_t>(j)], gamma);
                const bool expect_zero = j > boundary;
                if (expect_zero != moment.is_zero())
                    throw PatternViolation("family A moment pattern failed at (i,gamma,j) = (" +
                                           std::to_string(i) + "," + std::to_string(gamma) + "," +
                                           std::to_string(j) + ")");
            }
        }
    return funcs;
}

InverseRowDecomposition decompose_inverse_row_A(const FamilyParamsA& params, long j) {
    params.validate();
    if (j < 0 || j > params.p()) throw IndexOutOfFamily("family A: j outside range");
    const long N = params.N, q = params.q, p = params.p();
    RationalMatrix chi = matrix_S_inverse(N, Rational(1), params.c);

    const long gamma = j / 3, delta = j % 3;
    InverseRowDecomposition dec;
    dec.degree_cap = {gamma, gamma, gamma};
    for (long i = delta + 1; i < 3; ++i) dec.degree_cap[static_cast<size_t>(i)] = gamma - 1;

    long unknowns = 0;
    for (long cap : dec.degree_cap) unknowns += cap + 1;   // cap -1 contributes none

    RationalMatrix sys(p + 1, unknowns);
    std::vector<Rational> rhs(static_cast<size_t>(p) + 1);
    for (long ell = 0; ell <= p; ++ell) {
        long col = 0;
        for (long i = 0; i < 3; ++i)
            for (long d = 0; d <= dec.degree_cap[static_cast<size_t>(i)]; ++d)
                sys.at(ell, col++) = pow(Rational(ell), d) * chi.at(2 * i + q, 2 * ell + q);
        rhs[static_cast<size_t>(ell)] = chi.at(2 * j + q, 2 * ell + q);
    }
    std::vector<Rational> sol = solve_exact(sys, rhs);

    long col = 0;
    for (long i = 0; i < 3; ++i) {
        const long cap = dec.degree_cap[static_cast<size_t>(i)];
        std::vector<Rational> coeffs;
        for (long d = 0; d <= cap; ++d) coeffs.push_back(sol[static_cast<size_t>(col++)]);
        dec.y.emplace_back("l", std::move(coeffs));
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

cd phase_i(long e) {
    static const cd table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    long m = e % 4;
    if (m < 0) m += 4;
    return table[m];
}

double rel_dev(cd x, cd y) {
    double scale = std::max({std::abs(x), std::abs(y), 1e-12});
    return std::abs(x - y) / scale;
}

cd hermite_value(long n, cd z) {
    cd h0(1.0, 0.0);
    if (n == 0) return h0;
    cd h1 = 2.0 * z;
    for (long m = 1; m < n; ++m) {
        cd h2 = 2.0 * z * h1 - 2.0 * static_cast<double>(m) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

} // namespace

GFReport a_generating_function_check(const FamilyParamsA& params, const Rational& a, cd eta) {
    params.validate();
    if (a.is_zero()) throw ParseError("generating function check: a must be nonzero");
    const long N = params.N, q = params.q, p = params.p();
    const Rational b = params.c / a;

    std::vector<UPoly> fam = a_poly_recurrence(params, p);
    RationalMatrix s = matrix_S(N, a, b);

    const cd sqrt_a = std::sqrt(cd(a.to_double(), 0.0));
    const cd sqrt_b = std::sqrt(cd(b.to_double(), 0.0));
    const cd sqrt_c = std::sqrt(cd(params.c.to_double(), 0.0));

    GFReport rep{0.0, 0.0};
    for (long ell = 0; ell <= p; ++ell) {
        const long k = 2 * ell + q;

        // (i) defining sum over the family.
        cd g1(0.0, 0.0);
        for (long j = 0; j <= p; ++j) {
            const long n = 2 * j + q;
            g1 += fam[static_cast<size_t>(j)].evaluate(Rational(ell)).to_double() *
                  ipow(eta / sqrt_a, n) / std::tgamma(static_cast<double>(n) + 1.0);
        }

        // (ii) unitary coherent-state matrix element with its prefactor.
        const double cnk = binomial(N, k).get_d();
        cd psi_ground = s.at(k, q).to_double() * std::sqrt(cnk / binomial(N, q).get_d());
        // sqrt(a^-q ...) evaluated on the same branch of sqrt(a) as route (i)
        cd pref = ipow(cd(1.0, 0.0) / sqrt_a, q) *
                  std::sqrt(std::exp(std::lgamma(static_cast<double>(N - q) + 1.0) -
                                     std::lgamma(static_cast<double>(N) + 1.0)));
        cd g2(0.0, 0.0);
        for (long n = 0; n <= N; ++n) {
            const double cn = binomial(N, n).get_d();
            if (cn == 0.0) continue;
            cd psi = s.at(k, n).to_double() * std::sqrt(cnk / cn);
            g2 += std::sqrt(cn) * psi * ipow(eta, n);
        }
        g2 *= pref / psi_ground;

        rep.dev12 = std::max(rep.dev12, rel_dev(g1, g2));

        // (iii) Hermite-sum closed form; undefined at eta = 0.
        if (std::abs(eta) > 1e-14) {
            cd g3(0.0, 0.0);
            const cd herm_arg = cd(0.0, 1.0) / (2.0 * eta * sqrt_b);
            for (long m = 0; m <= std::min(ell, p); ++m) {
                double fall = 1.0;   // (-l)_m = (-1)^m l (l-1) ... (l-m+1)
                for (long i = 0; i < m; ++i) fall *= static_cast<double>(ell - i);
                double sgn = (m % 2 == 0) ? 1.0 : -1.0;
                g3 += ipow(cd(1.0, 0.0) / sqrt_c, 2 * m + q) /
                      std::tgamma(static_cast<double>(2 * m + q) + 1.0) * (sgn * fall) *
                      hermite_value(N - 2 * m - q, herm_arg);
            }
            g3 *= phase_i(N + q) * ipow(-eta * sqrt_b, N);
            rep.dev23 = std::max(rep.dev23, rel_dev(g2, g3));
        }
    }
    return rep;
}

} // namespace dortho
