#include "dortho/limits.hpp"

#include <cmath>

#include "dortho/afamily.hpp"
#include "dortho/combinatorics.hpp"
#include "dortho/errors.hpp"
#include "dortho/hyp.hpp"

namespace dortho {

UPoly meixner_monic(long n, const MeixnerParams& params) {
    if (n < 0) throw IndexOutOfFamily("meixner_monic: n must be nonnegative");
    if (params.d.is_zero() || params.d == Rational(1))
        throw ParseError("meixner_monic: d must avoid 0 and 1");
    const Rational one_d = Rational(1) - params.d;
    const UPoly x("x", {Rational(0), Rational(1)});

    UPoly prev = UPoly::constant("x", Rational(1));
    if (n == 0) return prev;
    UPoly cur = x - UPoly::constant("x", params.beta * params.d / one_d);
    for (long m = 1; m < n; ++m) {
        Rational diag = (Rational(m) + (Rational(m) + params.beta) * params.d) / one_d;
        Rational sub = Rational(m) * (Rational(m) + params.beta - Rational(1)) * params.d /
                       (one_d * one_d);
        UPoly next = (x - UPoly::constant("x", diag)) * cur - prev * sub;
        prev = cur;
        cur = next;
    }
    return cur;
}

Rational krawtchouk(long n, const Rational& x, const Rational& p, long N) {
    if (p.is_zero()) throw ParseError("krawtchouk: p must be nonzero");
    return hyp_terminating({Rational(-n), -x}, {Rational(-N)}, Rational(1) / p);
}

UPoly krawtchouk_poly(long n, const Rational& p, long N) {
    if (p.is_zero()) throw ParseError("krawtchouk: p must be nonzero");
    if (n < 0 || n > N) throw IndexOutOfFamily("krawtchouk: need 0 <= n <= N");
    UPoly series("x");
    Rational scalar(1);    // (-n)_m / ((-N)_m m! p^m)
    for (long m = 0; m <= n; ++m) {
        series += poly_pochhammer(UPoly("x", {Rational(0), Rational(-1)}), m) * scalar;
        if (m == n) break;
        scalar *= (Rational(-n) + Rational(m)) / ((Rational(-N) + Rational(m)) * Rational(m + 1) * p);
    }
    return series;
}

Rational hermite(long n, const Rational& x) {
    if (n < 0) throw IndexOutOfFamily("hermite: n must be nonnegative");
    Rational h0(1);
    if (n == 0) return h0;
    Rational h1 = Rational(2) * x;
    for (long m = 1; m < n; ++m) {
        Rational h2 = Rational(2) * x * h1 - Rational(2 * m) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

UPoly hermite_poly(long n) {
    if (n < 0) throw IndexOutOfFamily("hermite: n must be nonnegative");
    const UPoly x("x", {Rational(0), Rational(1)});
    UPoly h0 = UPoly::constant("x", Rational(1));
    if (n == 0) return h0;
    UPoly h1 = x * Rational(2);
    for (long m = 1; m < n; ++m) {
        UPoly h2 = x * h1 * Rational(2) - h0 * Rational(2 * m);
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

namespace {

void require_increasing(const std::vector<long>& ns) {
    if (ns.empty()) throw ParseError("contraction: need at least one N");
    for (size_t i = 1; i < ns.size(); ++i)
        if (ns[i] <= ns[i - 1]) throw ParseError("contraction: N list must be strictly increasing");
}

// Average decay order of dev ~ N^-order over consecutive pairs.
double fit_order(const std::vector<long>& ns, const std::vector<double>& devs) {
    double sum = 0.0;
    long count = 0;
    for (size_t i = 0; i + 1 < ns.size(); ++i) {
        if (devs[i] <= 0.0 || devs[i + 1] <= 0.0) continue;
        sum += std::log(devs[i] / devs[i + 1]) /
               std::log(static_cast<double>(ns[i + 1]) / static_cast<double>(ns[i]));
        ++count;
    }
    return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

Rational meixner_candidate(const Rational& c, int candidate) {
    if (candidate == 1) {
        if (c == Rational(4)) throw ParseError("contraction: candidate 1 degenerates at c = 4");
        return c / (c - Rational(4));
    }
    if (Rational(4) * c == Rational(1))
        throw ParseError("contraction: candidate 2 degenerates at c = 1/4");
    return Rational(4) * c / (Rational(4) * c - Rational(1));
}

} // namespace

std::vector<Rational> contract_A_deviations(long q, const Rational& c, long j,
                                            const std::vector<long>& Ns, int candidate) {
    require_increasing(Ns);
    if (candidate != 1 && candidate != 2) throw ParseError("contraction: candidate must be 1 or 2");
    const Rational d = meixner_candidate(c, candidate);
    const Rational half(Integer(1), Integer(2));
    UPoly target = meixner_monic(j, MeixnerParams{Rational(q) + half, d});

    std::vector<Rational> devs;
    for (long N : Ns) {
        FamilyParamsA params{q, c / Rational(Integer(N) * Integer(N)), N};
        if (j > params.p()) throw IndexOutOfFamily("contraction: j exceeds the family size");
        std::vector<UPoly> fam = a_poly_recurrence(params, j);
        Rational dev(0);
        for (long i = 0; i <= j; ++i) {
            Rational diff = abs(fam[static_cast<size_t>(j)].coeff(i) - target.coeff(i));
            if (dev < diff) dev = diff;
        }
        devs.push_back(dev);
    }
    return devs;
}

ContractionReport contract_A(long q, const Rational& c, long j, const std::vector<long>& Ns) {
    std::vector<Rational> dev1 = contract_A_deviations(q, c, j, Ns, 1);
    std::vector<Rational> dev2 = contract_A_deviations(q, c, j, Ns, 2);

    ContractionReport rep;
    rep.target = "meixner";
    rep.Ns = Ns;
    for (const Rational& r : dev1) rep.dev_candidate1.push_back(r.to_double());
    for (const Rational& r : dev2) rep.dev_candidate2.push_back(r.to_double());
    rep.winner = (dev2.back() < dev1.back()) ? "candidate2" : "candidate1";
    rep.order = fit_order(Ns, rep.winner == "candidate2" ? rep.dev_candidate2 : rep.dev_candidate1);
    return rep;
}

ContractionReport contract_A_matrix(long q, const Rational& c, long j, long ell,
                                    const std::vector<long>& Ns) {
    require_increasing(Ns);
    if (c.is_zero()) throw ParseError("contraction: c must be nonzero");
    const Rational half(Integer(1), Integer(2));
    const Rational beta = Rational(q) + half;
    Rational target = hyp_terminating({Rational(-j), Rational(-ell)}, {beta},
                                      Rational(1) / (Rational(4) * c));

    ContractionReport rep;
    rep.target = "meixner";
    rep.Ns = Ns;
    for (long N : Ns) {
        Rational value = hyp_terminating(
            {Rational(-j), Rational(-ell)},
            {beta, Rational(Integer(q - N), Integer(2)), Rational(Integer(q - N + 1), Integer(2))},
            Rational(Integer(N) * Integer(N)) / (Rational(16) * c));
        rep.dev_candidate1.push_back(abs(value - target).to_double());
    }
    rep.winner = "candidate1";
    rep.order = fit_order(Ns, rep.dev_candidate1);
    return rep;
}

namespace {

// Unitary matrix element <k| e^{aJ+} e^{bJ-^M} |n> on the N-irrep, in logs for
// stability at large N.
double phi_unitary(long k, long n, double a, double b, long M, long N) {
    auto lg = [](long v) { return std::lgamma(static_cast<double>(v) + 1.0); };
    const double log_abs_a = std::log(std::fabs(a));
    const double log_abs_b = std::log(std::fabs(b));

    double total = 0.0;
    long t_min = 0;
    if (n > k) t_min = (n - k + M - 1) / M;
    for (long t = t_min; M * t <= n; ++t) {
        const long s = k - n + M * t;
        double ln = static_cast<double>(s) * log_abs_a + static_cast<double>(t) * log_abs_b -
                    lg(s) - lg(t) + 0.5 * (lg(n) + lg(k)) - lg(n - M * t) + lg(N - n + M * t) -
                    0.5 * (lg(N - n) + lg(N - k));
        double sign = 1.0;
        if (a < 0 && s % 2 == 1) sign = -sign;
        if (b < 0 && t % 2 == 1) sign = -sign;
        total += sign * std::exp(ln);
    }
    return total;
}

// N -> infinity closed form of the contracted matrix element, n = M j + q.
double charlier_target(long k, long n, double a, double b, long M) {
    const long j = n / M, q = n % M;
    auto lg = [](long v) { return std::lgamma(static_cast<double>(v) + 1.0); };

    const double z = ((M % 2 == 0) ? -1.0 : 1.0) / (std::pow(a, static_cast<double>(M)) * b);
    double series = 0.0, term = 1.0;
    for (long m = 0; m <= j; ++m) {
        series += term;
        if (m == j) break;
        double num = static_cast<double>(-j + m);
        for (long mp = 0; mp < M; ++mp)
            num *= (static_cast<double>(q - k + mp) / M + static_cast<double>(m));
        double den = static_cast<double>(m + 1);
        for (long mp = 0; mp < M; ++mp) {
            if (mp == M - 1 - q) continue;
            den *= (static_cast<double>(q + mp + 1) / M + static_cast<double>(m));
        }
        term *= num * z / den;
    }

    double pref = std::pow(a, static_cast<double>(k - q)) * std::pow(b, static_cast<double>(j)) *
                  std::exp(0.5 * (lg(k) + lg(n)) - lg(j) - lg(k - q) - lg(q));
    return pref * series;
}

} // namespace

ContractionReport contract_B(long M, const Rational& a, const Rational& b, long j, long q,
                             long k, const std::vector<long>& Ns) {
    require_increasing(Ns);
    if (M < 1) throw ParseError("contraction: M must be at least 1");
    if (a.is_zero() || b.is_zero()) throw ParseError("contraction: a and b must be nonzero");
    if (q < 0 || q >= M) throw ParseError("contraction: q must lie in 0..M-1");
    if (k < q) throw ParseError("contraction: k must be at least q");
    const long n = M * j + q;
    if (n < 0 || n > Ns.front() || k > Ns.front())
        throw IndexOutOfFamily("contraction: n and k must fit the smallest N");

    const double target = charlier_target(k, n, a.to_double(), b.to_double(), M);
    if (target == 0.0) throw DorthoError("contraction: degenerate zero target");

    ContractionReport rep;
    rep.target = "charlier";
    rep.Ns = Ns;
    for (long N : Ns) {
        const double ad = a.to_double() / std::sqrt(static_cast<double>(N));
        const double bd = b.to_double() / std::pow(static_cast<double>(N), 0.5 * M);
        const double value = phi_unitary(k, n, ad, bd, M, N);
        rep.dev_candidate1.push_back(std::fabs(value / target - 1.0));
    }
    rep.winner = "candidate1";
    rep.order = fit_order(Ns, rep.dev_candidate1);
    return rep;
}

ContractionReport contract_gf_check(long q, const Rational& c, double eta,
                                    const std::vector<long>& Ns) {
    require_increasing(Ns);
    if (q != 0 && q != 1) throw ParseError("contraction: q must be 0 or 1");
    if (c.is_zero()) throw ParseError("contraction: c must be nonzero");
    const double cd = c.to_double();

    ContractionReport rep;
    rep.target = "gf";
    rep.Ns = Ns;
    for (long N : Ns) {
        FamilyParamsA params{q, c / Rational(Integer(N) * Integer(N)), N};
        const long p = params.p();
        std::vector<UPoly> fam = a_poly_recurrence(params, p);

        double dev_n = 0.0;
        for (long ell = 0; ell <= std::min<long>(2, p); ++ell) {
            double g = 0.0;
            for (long jj = 0; jj <= p; ++jj) {
                const long nn = 2 * jj + q;
                g += fam[static_cast<size_t>(jj)].evaluate(Rational(ell)).to_double() *
                     std::pow(eta, static_cast<double>(nn)) /
                     std::tgamma(static_cast<double>(nn) + 1.0);
            }
            // e^{c eta^2} eta^q 1F1[-l; q+1/2; -eta^2/4]
            double f11 = 0.0, term = 1.0;
            for (long m = 0; m <= ell; ++m) {
                f11 += term;
                term *= static_cast<double>(-ell + m) /
                        ((static_cast<double>(q) + 0.5 + static_cast<double>(m)) *
                         static_cast<double>(m + 1)) *
                        (-eta * eta / 4.0);
            }
            double target = std::exp(cd * eta * eta) *
                            std::pow(eta, static_cast<double>(q)) * f11;
            dev_n = std::max(dev_n, std::fabs(g - target) / std::max(std::fabs(target), 1e-12));
        }
        rep.dev_candidate1.push_back(dev_n);
    }
    rep.winner = "candidate1";
    rep.order = fit_order(Ns, rep.dev_candidate1);
    return rep;
}

} // namespace dortho
