#include "gcx/exactnum.hpp"

#include <cctype>
#include <sstream>

namespace gcx::exactnum {

Rational rat(long num, long den) {
  if (den == 0) throw Error(ErrorKind::Precondition, "ZeroDenominator", "denominator is zero");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::Precondition, "ZeroDenominator", "denominator is zero");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

GaussRational gauss(long re_num, long re_den, long im_num, long im_den) {
  return GaussRational(rat(re_num, re_den), rat(im_num, im_den));
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::Precondition, "DivisionByZero", "inverse of zero");
  Rational n = norm();
  return GaussRational(re_ / n, -im_ / n);
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = re;
  im_ = im;
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  return *this *= o.inverse();
}

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

std::string GaussRational::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (re_ != 0) out = rational_str(re_);
  if (im_ != 0) {
    Rational a = abs(im_);
    std::string part = (a == 1) ? "i" : rational_str(a) + "*i";
    if (out.empty()) {
      out = (im_ < 0 ? "-" : "") + part;
    } else {
      out += (im_ < 0 ? "-" : "+") + part;
    }
  }
  return out;
}

namespace {

struct ScalarCursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start)
      throw Error(ErrorKind::Parse, "ScalarSyntax",
                  "expected digits in scalar literal '" + std::string(s) + "'");
    return mpz_class(std::string(s.substr(start, pos - start)));
  }
};

// term := 'i' | number ['*' 'i'] ; number := INT ['/' INT]
GaussRational scalar_term(ScalarCursor& c) {
  if (c.peek() == 'i') {
    c.eat('i');
    return GaussRational::i();
  }
  mpz_class num = c.integer();
  mpz_class den = 1;
  if (c.eat('/')) den = c.integer();
  Rational value = rat(num, den);
  if (c.eat('*')) {
    if (!c.eat('i'))
      throw Error(ErrorKind::Parse, "ScalarSyntax",
                  "expected 'i' after '*' in scalar literal '" + std::string(c.s) + "'");
    return GaussRational(Rational(0), value);
  }
  return GaussRational(value);
}

}  // namespace

GaussRational GaussRational::parse(std::string_view text) {
  ScalarCursor c{text};
  GaussRational total;
  bool negative = c.eat('-');
  if (!negative) c.eat('+');
  for (;;) {
    GaussRational t = scalar_term(c);
    total += negative ? -t : t;
    if (c.eof()) break;
    if (c.eat('+')) {
      negative = false;
    } else if (c.eat('-')) {
      negative = true;
    } else {
      throw Error(ErrorKind::Parse, "ScalarSyntax",
                  "unexpected character in scalar literal '" + std::string(text) + "'");
    }
  }
  return total;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int k = 0; k < n; ++k) m.at(k, k) = GaussRational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<GaussRational>>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size())
      throw dimension_mismatch("ragged rows in Matrix::from_rows");
    for (size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<GaussRational> Matrix::row(int r) const {
  std::vector<GaussRational> out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::conj() const {
  Matrix t(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(r, c) = at(r, c).conj();
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw dimension_mismatch("matrix product shape");
  Matrix m(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(r, k).is_zero()) continue;
      for (int c = 0; c < b.cols(); ++c) m.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw dimension_mismatch("matrix sum shape");
  Matrix m(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c) + b.at(r, c);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw dimension_mismatch("matrix diff shape");
  Matrix m(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c) - b.at(r, c);
  return m;
}

Matrix operator*(const GaussRational& s, const Matrix& a) {
  Matrix m(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m.at(r, c) = s * a.at(r, c);
  return m;
}

RrefResult rref(const Matrix& m) {
  RrefResult out;
  out.reduced = m;
  Matrix& a = out.reduced;
  int lead = 0;
  for (int col = 0; col < a.cols() && lead < a.rows(); ++col) {
    int pivot = -1;
    for (int r = lead; r < a.rows(); ++r) {
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int c = 0; c < a.cols(); ++c) std::swap(a.at(pivot, c), a.at(lead, c));
    GaussRational inv = a.at(lead, col).inverse();
    for (int c = 0; c < a.cols(); ++c) a.at(lead, c) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == lead || a.at(r, col).is_zero()) continue;
      GaussRational f = a.at(r, col);
      for (int c = 0; c < a.cols(); ++c) a.at(r, c) -= f * a.at(lead, c);
    }
    out.pivot_cols.push_back(col);
    ++lead;
  }
  out.rank = static_cast<int>(out.pivot_cols.size());
  return out;
}

std::optional<std::vector<GaussRational>> member(const Matrix& span,
                                                 const std::vector<GaussRational>& v) {
  if (span.cols() != static_cast<int>(v.size()))
    throw dimension_mismatch("member: vector length differs from span width");
  RrefResult r = rref(span);
  std::vector<GaussRational> coords(r.rank);
  std::vector<GaussRational> residual = v;
  for (int k = 0; k < r.rank; ++k) {
    GaussRational c = residual[r.pivot_cols[k]];
    coords[k] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j < span.cols(); ++j) residual[j] -= c * r.reduced.at(k, j);
  }
  for (const auto& x : residual)
    if (!x.is_zero()) return std::nullopt;
  return coords;
}

bool span_equal(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw dimension_mismatch("span_equal: ambient dimensions differ");
  RrefResult ra = rref(a), rb = rref(b);
  if (ra.rank != rb.rank) return false;
  for (int r = 0; r < ra.rank; ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (!(ra.reduced.at(r, c) == rb.reduced.at(r, c))) return false;
  return true;
}

std::optional<std::vector<GaussRational>> solve(const Matrix& a,
                                                const std::vector<GaussRational>& b) {
  if (a.rows() != static_cast<int>(b.size()))
    throw dimension_mismatch("solve: rhs length differs from row count");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  RrefResult red = rref(aug);
  for (int p : red.pivot_cols)
    if (p == a.cols()) return std::nullopt;  // inconsistent
  if (red.rank != a.cols()) return std::nullopt;  // underdetermined
  std::vector<GaussRational> x(a.cols());
  for (int k = 0; k < red.rank; ++k) x[red.pivot_cols[k]] = red.reduced.at(k, a.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw dimension_mismatch("inverse of non-square matrix");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = GaussRational(1);
  }
  RrefResult red = rref(aug);
  int left_pivots = 0;
  for (int p : red.pivot_cols)
    if (p < n) ++left_pivots;
  if (left_pivots != n)
    throw Error(ErrorKind::Precondition, "SingularMatrix", "matrix not invertible");
  Matrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = red.reduced.at(r, n + c);
  return inv;
}

}  // namespace gcx::exactnum
