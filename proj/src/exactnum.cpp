#include "dortho/combinatorics.hpp"
#include "dortho/hyp.hpp"
#include "dortho/matrix.hpp"
#include "dortho/rational.hpp"
#include "dortho/upoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace dortho {

// ---------------------------------------------------------------- Rational

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw ParseError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();   // mpq_class does not canonicalize two-part constructions
}

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char ch) { return ch == ' ' || ch == '\t'; }),
            s.end());
    if (s.empty()) throw ParseError("empty rational literal");

    auto slash = s.find('/');
    std::string num_part = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den_part = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (num_part.empty() || den_part.empty() || den_part.find('/') != std::string::npos)
        throw ParseError("malformed rational literal: " + text);

    auto valid_int = [](const std::string& t) {
        size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!valid_int(num_part) || !valid_int(den_part))
        throw ParseError("malformed rational literal: " + text);

    Integer n, d;
    if (n.set_str(num_part, 10) != 0 || d.set_str(den_part, 10) != 0)
        throw ParseError("malformed rational literal: " + text);
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ParseError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

long Rational::to_long() const {
    if (!is_integer()) throw ParseError("to_long on non-integer rational " + str());
    if (!v_.get_num().fits_slong_p()) throw ParseError("integer too large for long: " + str());
    return v_.get_num().get_si();
}

std::string Rational::str() const {
    std::ostringstream os;
    os << v_.get_num();
    if (v_.get_den() != 1) os << '/' << v_.get_den();
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base.is_zero()) throw ParseError("zero base with negative exponent");
        return Rational(1) / pow(base, -exp);
    }
    Rational result(1), b = base;
    for (long e = exp; e > 0; e >>= 1) {
        if (e & 1) result *= b;
        if (e > 1) b *= b;
    }
    return result;
}

// ----------------------------------------------------------- combinatorics

Integer factorial(long n) {
    if (n < 0) throw ParseError("factorial of negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational pochhammer(const Rational& a, long k) {
    if (k < 0) throw ParseError("pochhammer with negative order");
    Rational r(1);
    for (long i = 0; i < k; ++i) r *= a + Rational(i);
    return r;
}

Rational falling_factorial(const Rational& a, long k) {
    if (k < 0) throw ParseError("falling factorial with negative order");
    Rational r(1);
    for (long i = 0; i < k; ++i) r *= a - Rational(i);
    return r;
}

// ------------------------------------------------------------------ UPoly

UPoly::UPoly(std::string var, std::vector<Rational> coeffs)
    : var_(std::move(var)), c_(std::move(coeffs)) {
    trim();
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const std::string& var, const Rational& value) {
    return UPoly(var, {value});
}

UPoly UPoly::monomial(const std::string& var, const Rational& coeff, long deg) {
    std::vector<Rational> c(static_cast<size_t>(deg) + 1);
    c.back() = coeff;
    return UPoly(var, std::move(c));
}

Rational UPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

Rational UPoly::leading_coeff() const {
    return c_.empty() ? Rational(0) : c_.back();
}

Rational UPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string UPoly::merged_var(const UPoly& o) const {
    if (degree() <= 0) return o.var_;
    if (o.degree() <= 0) return var_;
    if (var_ != o.var_)
        throw DorthoError("variable mismatch: " + var_ + " vs " + o.var_);
    return var_;
}

UPoly UPoly::operator-() const {
    UPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    var_ = merged_var(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    var_ = merged_var(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly UPoly::operator*(const UPoly& o) const {
    UPoly r(merged_var(o));
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

UPoly UPoly::operator*(const Rational& s) const {
    UPoly r(*this);
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
}

UPoly UPoly::shift_argument(const Rational& s) const {
    // Horner on the shifted variable: P(x+s) built from the top coefficient down.
    UPoly r(var_);
    UPoly lin(var_, {s, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * lin + UPoly::constant(var_, *it);
    return r;
}

UPoly UPoly::divide_exact(const UPoly& divisor) const {
    if (divisor.is_zero()) throw DorthoError("exact division by zero polynomial");
    UPoly rem(*this);
    std::vector<Rational> q(c_.size(), Rational(0));
    const Rational lead = divisor.leading_coeff();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        long shift = rem.degree() - divisor.degree();
        Rational factor = rem.leading_coeff() / lead;
        q[static_cast<size_t>(shift)] = factor;
        rem -= divisor * UPoly::monomial(var_, factor, shift);
    }
    if (!rem.is_zero())
        throw DorthoError("exact polynomial division left remainder " + rem.str());
    return UPoly(var_, std::move(q));
}

UPoly UPoly::interpolate(const std::string& var,
                         const std::vector<std::pair<Rational, Rational>>& points) {
    // Newton form: divided differences, then expand.
    const size_t n = points.size();
    if (n == 0) return UPoly(var);
    std::vector<Rational> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i) {
            Rational dx = points[i].first - points[i - level].first;
            if (dx.is_zero()) throw DorthoError("interpolation nodes repeat");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
            if (i == level) break;
        }
    UPoly r = UPoly::constant(var, dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        UPoly node(var, {-points[i].first, Rational(1)});
        r = r * node + UPoly::constant(var, dd[i]);
    }
    return r;
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& v = c_[static_cast<size_t>(i)];
        if (v.is_zero()) continue;
        if (!first) os << (v.sign() > 0 ? " + " : " - ");
        else if (v.sign() < 0) os << "-";
        first = false;
        Rational av = abs(v);
        if (i == 0 || av != Rational(1)) os << av.str();
        if (i > 0) {
            if (av != Rational(1)) os << "*";
            os << var_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UPoly poly_pochhammer(const UPoly& p, long m) {
    UPoly r = UPoly::constant(p.var(), Rational(1));
    for (long i = 0; i < m; ++i) r = r * (p + UPoly::constant(p.var(), Rational(i)));
    return r;
}

SeparabilityResult check_s_separable(const std::vector<AffineForm>& factors) {
    // Expand prod_i (alpha_i + beta_i k + y) as sum_m P_m(k) y^m, multiplying
    // one factor at a time: new[m] = old[m] * a_i(k) + old[m-1].
    std::vector<UPoly> by_y_power{UPoly::constant("k", Rational(1))};
    for (const auto& f : factors) {
        UPoly lin("k", {f.alpha, f.beta});
        std::vector<UPoly> next(by_y_power.size() + 1, UPoly("k"));
        for (size_t m = 0; m < by_y_power.size(); ++m) {
            next[m] += by_y_power[m] * lin;
            next[m + 1] += by_y_power[m];
        }
        by_y_power = std::move(next);
    }

    SeparabilityResult res;
    res.separable = true;
    std::vector<Rational> pi_coeffs(by_y_power.size(), Rational(0));
    for (size_t m = 1; m < by_y_power.size(); ++m) {
        if (by_y_power[m].degree() > 0) {
            res.separable = false;
            return res;
        }
        pi_coeffs[m] = by_y_power[m].coeff(0);
    }
    res.pi = UPoly("y", std::move(pi_coeffs));
    return res;
}

// -------------------------------------------------------------------- hyp

Rational hyp_terminating(const std::vector<Rational>& num,
                         const std::vector<Rational>& den,
                         const Rational& z) {
    if (num.empty() || !num[0].is_nonpositive_integer())
        throw DorthoError("hyp_terminating: first upper parameter must be a nonpositive integer");
    const long n = -num[0].to_long();

    for (const auto& d : den)
        if (d.is_integer() && d.sign() <= 0 && -d.to_long() <= n - 1)
            throw ZeroDenominatorParameter("lower parameter " + d.str() +
                                           " vanishes before truncation at order " +
                                           std::to_string(n));

    Rational sum(1), term(1);
    for (long m = 0; m < n; ++m) {
        for (const auto& a : num) term *= a + Rational(m);
        for (const auto& d : den) term /= d + Rational(m);
        term *= z / Rational(m + 1);
        sum += term;
        if (term.is_zero()) break;   // another upper parameter truncated earlier
    }
    return sum;
}

// ----------------------------------------------------------------- matrix

RationalMatrix RationalMatrix::identity(long n) {
    RationalMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DorthoError("matrix shape mismatch in +");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DorthoError("matrix shape mismatch in -");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw DorthoError("matrix shape mismatch in *");
    RationalMatrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (long j = 0; j < o.cols_; ++j) {
                const Rational& okj = o.at(k, j);
                if (!okj.is_zero()) r.at(i, j) += aik * okj;
            }
        }
    return r;
}

RationalMatrix RationalMatrix::operator*(const Rational& s) const {
    RationalMatrix r(*this);
    for (auto& v : r.a_) v *= s;
    return r;
}

RationalMatrix RationalMatrix::pow(long k) const {
    if (rows_ != cols_) throw DorthoError("matrix power of non-square matrix");
    RationalMatrix result = identity(rows_);
    for (long i = 0; i < k; ++i) result = result * (*this);
    return result;
}

std::vector<Rational> RationalMatrix::mat_vec(const std::vector<Rational>& v) const {
    if (static_cast<long>(v.size()) != cols_) throw DorthoError("matrix/vector shape mismatch");
    std::vector<Rational> r(static_cast<size_t>(rows_));
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

RationalMatrix exp_nilpotent(const RationalMatrix& x) {
    if (x.rows() != x.cols()) throw NotNilpotent("exp_nilpotent needs a square matrix");
    const long dim = x.rows();
    RationalMatrix sum = RationalMatrix::identity(dim);
    RationalMatrix term = RationalMatrix::identity(dim);
    for (long k = 1; k <= dim; ++k) {
        term = term * x;
        term = term * (Rational(1) / Rational(k));
        if (term.is_zero()) return sum;
        sum += term;
    }
    // x^dim must vanish for a genuinely nilpotent operator on dim dimensions.
    throw NotNilpotent("matrix power did not vanish by order " + std::to_string(dim));
}

std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b) {
    const long m = a.rows(), n = a.cols();
    if (static_cast<long>(b.size()) != m) throw DorthoError("solve_exact shape mismatch");

    RationalMatrix aug(m, n + 1);
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[static_cast<size_t>(i)];
    }

    long rank = 0;
    std::vector<long> pivot_col;
    for (long col = 0; col < n && rank < m; ++col) {
        long piv = -1;
        for (long i = rank; i < m; ++i)
            if (!aug.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (long j = col; j <= n; ++j) std::swap(aug.at(piv, j), aug.at(rank, j));
        Rational inv = Rational(1) / aug.at(rank, col);
        for (long j = col; j <= n; ++j) aug.at(rank, j) *= inv;
        for (long i = 0; i < m; ++i) {
            if (i == rank || aug.at(i, col).is_zero()) continue;
            Rational f = aug.at(i, col);
            for (long j = col; j <= n; ++j) aug.at(i, j) -= f * aug.at(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }

    for (long i = rank; i < m; ++i)
        if (!aug.at(i, n).is_zero())
            throw SingularSystem("inconsistent linear system");
    if (rank < n)
        throw SingularSystem("linear system does not determine a unique solution");

    std::vector<Rational> x(static_cast<size_t>(n));
    for (long r = 0; r < rank; ++r) x[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = aug.at(r, n);
    return x;
}

} // namespace dortho
