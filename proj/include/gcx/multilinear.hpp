#pragma once

#include <string>
#include <vector>

#include "gcx/alternating.hpp"
#include "gcx/exactnum.hpp"

namespace gcx::multilinear {

using exactnum::GaussRational;
using exactnum::Matrix;

inline constexpr int kPrimal = 0;  // multivectors
inline constexpr int kDual = 1;    // forms

// Invariant k-form / k-vector on an n-dimensional space: sparse coefficients
// over strictly increasing basis index tuples.
using KForm = detail::Alt<GaussRational, kDual>;
using KVector = detail::Alt<GaussRational, kPrimal>;

KForm conj(const KForm& a);
KVector conj(const KVector& a);

std::vector<GaussRational> coords1(const KForm& a);    // degree-1 coefficients
std::vector<GaussRational> coords1(const KVector& a);
KForm form_from_coords(const std::vector<GaussRational>& c);
KVector vector_from_coords(const std::vector<GaussRational>& c);

inline KForm wedge(const KForm& a, const KForm& b) { return detail::wedge(a, b); }
inline KVector wedge(const KVector& a, const KVector& b) { return detail::wedge(a, b); }

// iota_X a, first-slot insertion: (iota_X theta)(Y) = theta(X, Y).
KForm contract(const KVector& x, const KForm& a);
// iota_alpha p, the dual version; pi_sharp(alpha) = contract(alpha, pi).
KVector contract(const KForm& alpha, const KVector& p);

GaussRational eval(const KForm& a, const std::vector<KVector>& xs);
GaussRational eval(const KVector& p, const std::vector<KForm>& alphas);

// Endomorphism of the primal space together with its dual-space transpose:
// (apply_dual(alpha))(X) = alpha(apply(X)).
class Endo {
 public:
  Endo() = default;
  explicit Endo(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw dimension_mismatch("Endo requires a square matrix");
  }
  static Endo zero(int n) { return Endo(Matrix(n, n)); }
  // X tensor alpha, the rank-1 map Y -> alpha(Y) X.
  static Endo rank_one(const KVector& x, const KForm& alpha);

  int dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

  KVector apply(const KVector& x) const;
  KForm apply_dual(const KForm& alpha) const;

  Endo operator+(const Endo& o) const { return Endo(m_ + o.m_); }
  Endo operator-(const Endo& o) const { return Endo(m_ - o.m_); }
  friend Endo operator*(const GaussRational& s, const Endo& e) { return Endo(s * e.m_); }
  friend bool operator==(const Endo& a, const Endo& b) { return a.m_ == b.m_; }
  bool is_zero() const { return m_.is_zero(); }

 private:
  Matrix m_;
};

}  // namespace gcx::multilinear
