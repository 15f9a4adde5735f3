#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dortho/rational.hpp"

namespace dortho {

// Dense univariate polynomial over Rational, coefficients ascending by degree.
// Carries a variable tag so that mixing polynomials in different variables is
// caught at runtime instead of silently producing nonsense.
class UPoly {
  public:
    explicit UPoly(std::string var = "x") : var_(std::move(var)) {}
    UPoly(std::string var, std::vector<Rational> coeffs);

    static UPoly constant(const std::string& var, const Rational& value);
    static UPoly monomial(const std::string& var, const Rational& coeff, long deg);

    // Newton divided-difference interpolation through the given points.
    static UPoly interpolate(const std::string& var,
                             const std::vector<std::pair<Rational, Rational>>& points);

    const std::string& var() const { return var_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    // Coefficient of x^i; zero beyond the stored range.
    Rational coeff(long i) const;
    Rational leading_coeff() const;

    Rational evaluate(const Rational& x) const;

    template <typename T>
    T evaluate_numeric(const T& x) const {
        T acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + T(it->to_double());
        return acc;
    }

    // P(x + s).
    UPoly shift_argument(const Rational& s) const;

    // Exact quotient by a divisor known to divide evenly; throws on remainder.
    UPoly divide_exact(const UPoly& divisor) const;

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Rational& s) const;

    friend UPoly operator+(UPoly a, const UPoly& b) { a += b; return a; }
    friend UPoly operator-(UPoly a, const UPoly& b) { a -= b; return a; }
    friend UPoly operator*(const Rational& s, const UPoly& p) { return p * s; }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        return a.c_ == b.c_;   // variable tags are bookkeeping, values decide equality
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    std::string str() const;

  private:
    void trim();
    // Resolve the variable tag for a binary op: constants adopt the other side.
    std::string merged_var(const UPoly& o) const;

    std::string var_;
    std::vector<Rational> c_;
};

// Rising factorial of a polynomial argument: (p)_m = p (p+1) ... (p+m-1).
UPoly poly_pochhammer(const UPoly& p, long m);

// The linear form alpha + beta*k, used to describe factors whose product
// appears inside exponential-operator arguments.
struct AffineForm {
    Rational alpha;
    Rational beta;

    Rational value(const Rational& k) const { return alpha + beta * k; }
};

// Result of testing whether prod_i (a_i(k) + y) splits as a k-part plus a pure
// series in y: separable means every coefficient of y^m, m >= 1, is constant
// in k; pi collects those constant coefficients as a polynomial in y with
// pi(0) = 0.
struct SeparabilityResult {
    bool separable = false;
    UPoly pi{"y"};
};

SeparabilityResult check_s_separable(const std::vector<AffineForm>& factors);

} // namespace dortho
