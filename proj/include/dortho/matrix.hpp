#pragma once

#include <vector>

#include "dortho/rational.hpp"

namespace dortho {

// Dense matrix over Rational; row-major storage.
class RationalMatrix {
  public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols)) {}

    static RationalMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Rational& at(long i, long j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
    const Rational& at(long i, long j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

    bool is_zero() const;
    RationalMatrix transpose() const;
    RationalMatrix pow(long k) const;

    RationalMatrix& operator+=(const RationalMatrix& o);
    RationalMatrix& operator-=(const RationalMatrix& o);
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator*(const Rational& s) const;

    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { a += b; return a; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { a -= b; return a; }
    friend RationalMatrix operator*(const Rational& s, const RationalMatrix& m) { return m * s; }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

    std::vector<Rational> mat_vec(const std::vector<Rational>& v) const;

  private:
    long rows_, cols_;
    std::vector<Rational> a_;
};

// exp(X) for nilpotent X, summed until the power vanishes. Throws NotNilpotent
// if X^(dim) is still nonzero.
RationalMatrix exp_nilpotent(const RationalMatrix& x);

// Solve A x = b exactly. The system may be rectangular; it must be consistent
// and determine x uniquely, otherwise SingularSystem is thrown.
std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b);

} // namespace dortho
