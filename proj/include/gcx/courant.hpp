#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcx/liealg.hpp"

namespace gcx::courant {

using exactnum::GaussRational;
using exactnum::Matrix;
using liealg::AlgebraPtr;
using liealg::LieAlgebra;
using multilinear::KForm;
using multilinear::KVector;

// Invariant section X + alpha of (g + g*)_C. Coordinates are the 2n-vector
// (vector part, covector part) over the standard bases.
class GenVector {
 public:
  GenVector() = default;
  GenVector(AlgebraPtr alg, KVector vec, KForm cov);
  static GenVector from_vector(AlgebraPtr alg, KVector v);
  static GenVector from_covector(AlgebraPtr alg, KForm a);
  static GenVector from_coords(AlgebraPtr alg, const std::vector<GaussRational>& row);

  const AlgebraPtr& algebra() const { return alg_; }
  const KVector& vec() const { return vec_; }
  const KForm& cov() const { return cov_; }
  int ambient_dim() const { return alg_ ? alg_->dim() : 0; }

  bool is_zero() const { return vec_.is_zero() && cov_.is_zero(); }
  GenVector conj() const;
  std::vector<GaussRational> coords() const;
  std::string str() const;

  GenVector operator-() const;
  GenVector& operator+=(const GenVector& o);
  GenVector& operator-=(const GenVector& o);
  friend GenVector operator+(GenVector a, const GenVector& b) { return a += b; }
  friend GenVector operator-(GenVector a, const GenVector& b) { return a -= b; }
  friend GenVector operator*(const GaussRational& s, const GenVector& v);
  friend bool operator==(const GenVector& a, const GenVector& b) {
    return a.vec_ == b.vec_ && a.cov_ == b.cov_;
  }

 private:
  AlgebraPtr alg_;
  KVector vec_;
  KForm cov_;
};

void require_same_ambient(const GenVector& a, const GenVector& b);

// <X+a, Y+b> = (b(X) + a(Y)) / 2
GaussRational pairing(const GenVector& a, const GenVector& b);

// Invariant reduction of the Courant bracket: [X,Y] + i_X db - i_Y da.
GenVector courant_bracket(const GenVector& a, const GenVector& b);

KVector anchor(const GenVector& a);

// A finite list of generators with span semantics; comparisons go through the
// unique rref canonical form of the coordinate rows.
class SubbundleSpan {
 public:
  SubbundleSpan() = default;
  SubbundleSpan(AlgebraPtr alg, std::vector<GenVector> generators);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<GenVector>& generators() const { return gens_; }
  const Matrix& canonical_rows() const { return canon_; }
  int rank() const { return rank_; }
  bool generators_independent() const { return rank_ == static_cast<int>(gens_.size()); }

  // Canonical generators: one GenVector per rref row.
  std::vector<GenVector> canonical_generators() const;

  std::optional<std::vector<GaussRational>> coords_in_rref_basis(const GenVector& v) const;
  // Coordinates over the stored generator list (requires independence).
  std::optional<std::vector<GaussRational>> coords_in_generators(const GenVector& v) const;
  bool contains(const GenVector& v) const { return coords_in_rref_basis(v).has_value(); }

  SubbundleSpan conj() const;

  friend bool operator==(const SubbundleSpan& a, const SubbundleSpan& b);

 private:
  AlgebraPtr alg_;
  std::vector<GenVector> gens_;
  Matrix canon_;  // rref rows, rank_ of them nonzero
  int rank_ = 0;
};

bool span_equal(const SubbundleSpan& a, const SubbundleSpan& b);

bool is_isotropic(const SubbundleSpan& s);

struct ClosednessWitness {
  int i, j;            // generator pair, lexicographic order
  GenVector bracket;   // [[g_i, g_j]]
  GenVector escaping;  // component in the rref complement (nonzero)
};

struct ClosednessReport {
  bool closed = true;
  std::vector<ClosednessWitness> witnesses;
};

ClosednessReport closedness(const SubbundleSpan& s);

// Alternating k-tensor on a span, stored by values on increasing generator
// index tuples; evaluation on arbitrary span members expands through the
// generator coordinates (generators must be independent).
class AltTensor {
 public:
  AltTensor(int arity, SubbundleSpan span);
  static AltTensor scalar(SubbundleSpan span, GaussRational value);

  int arity() const { return arity_; }
  const SubbundleSpan& span() const { return span_; }
  const std::map<std::vector<int>, GaussRational>& values() const { return vals_; }
  bool is_zero() const { return vals_.empty(); }

  void set(std::vector<int> idx, const GaussRational& v);
  GaussRational value_at(std::vector<int> idx) const;  // handles permutations / repeats
  GaussRational eval(const std::vector<GenVector>& args) const;

  friend bool operator==(const AltTensor& a, const AltTensor& b) {
    return a.arity_ == b.arity_ && a.vals_ == b.vals_;
  }

 private:
  int arity_;
  SubbundleSpan span_;
  std::map<std::vector<int>, GaussRational> vals_;
};

// Lie algebroid differential of a closed span ("Dirac structure"):
// (d xi)(s0..sk) = sum_{i<j} (-1)^{i+j} xi([[si,sj]], s0,.. minus si,sj ..).
// ldual is the transversal isotropic complement used as a sanity gate.
AltTensor dirac_d(const SubbundleSpan& l, const SubbundleSpan& ldual, const AltTensor& xi);

// 1-tensor s -> <w, s> on a span.
AltTensor pairing_tensor(const SubbundleSpan& span, const GenVector& w);

// Degree-1 algebroid codifferential through the global pairing:
// (d_A w)(s0, s1) = -<w, [[s0, s1]]> for invariant sections s of A. The
// pairing extends past A, so this stays defined when A is not closed (the
// F-component computation for contact structures needs exactly that).
AltTensor dirac_d_pairing(const SubbundleSpan& a, const GenVector& w);

// Formal sums of decomposable wedges of generalized vectors.
struct Wedge2Term {
  GaussRational c;
  GenVector a, b;
};
struct Wedge3Term {
  GaussRational c;
  GenVector a, b, d;
};

struct BiVec {
  std::vector<Wedge2Term> terms;
  static BiVec decomposable(const GenVector& a, const GenVector& b) {
    return BiVec{{{GaussRational(1), a, b}}};
  }
  BiVec scaled(const GaussRational& s) const;
};

struct TriVec {
  std::vector<Wedge3Term> terms;
  // Canonical alternating coordinates over the ambient 2n basis.
  std::map<std::vector<int>, GaussRational> ambient_coords() const;
  bool is_zero() const { return ambient_coords().empty(); }
};

// Graded Leibniz extension of the Courant bracket to decomposable bivectors:
// [[a^b, c^d]] = [[a,c]]^b^d - [[a,d]]^b^c - [[b,c]]^a^d + [[b,d]]^a^c.
// When a carrier span is supplied it must be closed (NotClosed otherwise).
TriVec schouten(const BiVec& p, const BiVec& q,
                const SubbundleSpan* carrier = nullptr);

}  // namespace gcx::courant
