#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcx/errors.hpp"

namespace gcx::exactnum {

// Arbitrary-precision rational, always canonical: lowest terms, positive
// denominator, 0 == 0/1. mpq_class keeps arithmetic results canonical; the
// helpers below canonicalize raw numerator/denominator pairs.
using Rational = mpq_class;

Rational rat(long num, long den = 1);
Rational rat(const mpz_class& num, const mpz_class& den);

// Element of Q(i). The ground field for every invariant computation.
class GaussRational {
 public:
  GaussRational() : re_(0), im_(0) {}
  GaussRational(long v) : re_(v), im_(0) {}              // NOLINT(runtime/explicit)
  GaussRational(const Rational& re) : re_(re), im_(0) {} // NOLINT(runtime/explicit)
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussRational conj() const { return GaussRational(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }  // |z|^2
  GaussRational inverse() const;

  GaussRational operator-() const { return GaussRational(-re_, -im_); }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  // Canonical form "p/q+r/s*i"; pure parts collapse ("3", "-1/2", "i", "-2/3*i").
  std::string str() const;
  // Accepts the literal grammar: `p`, `p/q`, `i`, `p/q*i` and signed sums
  // thereof; whitespace-insensitive.
  static GaussRational parse(std::string_view text);

 private:
  Rational re_, im_;
};

GaussRational gauss(long re_num, long re_den = 1, long im_num = 0, long im_den = 1);

// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<std::vector<GaussRational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  GaussRational& at(int r, int c) { return a_[r * cols_ + c]; }
  const GaussRational& at(int r, int c) const { return a_[r * cols_ + c]; }
  std::vector<GaussRational> row(int r) const;

  Matrix transpose() const;
  Matrix conj() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const GaussRational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_, cols_;
  std::vector<GaussRational> a_;
};

struct RrefResult {
  Matrix reduced;
  int rank = 0;
  std::vector<int> pivot_cols;
};

// Unique reduced row echelon form over Q(i).
RrefResult rref(const Matrix& m);

// Coordinates of v over the rref basis of the span, or nullopt when v escapes.
std::optional<std::vector<GaussRational>> member(const Matrix& span,
                                                 const std::vector<GaussRational>& v);

bool span_equal(const Matrix& a, const Matrix& b);

// Unique solution of A x = b; nullopt when inconsistent or underdetermined.
std::optional<std::vector<GaussRational>> solve(const Matrix& a,
                                                const std::vector<GaussRational>& b);

// Throws on singular input.
Matrix inverse(const Matrix& m);

}  // namespace gcx::exactnum
