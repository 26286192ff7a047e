#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gcx/multilinear.hpp"

namespace gcx::liealg {

using exactnum::GaussRational;
using multilinear::KForm;
using multilinear::KVector;

struct JacobiViolation {
  int i, j, k;        // basis triple, i < j < k
  KVector residual;   // [[ei,ej],ek] + cyclic
};

// Finite-dimensional Lie algebra by structure constants. Brackets are stored
// for i < j only; antisymmetry comes from lookup. Jacobi is validated on
// construction unless explicitly deferred (negative tests need broken tables).
class LieAlgebra {
 public:
  enum class Validate { Check, Defer };

  LieAlgebra(int dim, std::map<std::pair<int, int>, KVector> brackets,
             Validate mode = Validate::Check, std::string vec_prefix = "X",
             std::string cov_prefix = "a");

  static LieAlgebra abelian(int dim);

  int dim() const { return dim_; }
  const std::string& vec_prefix() const { return vec_prefix_; }
  const std::string& cov_prefix() const { return cov_prefix_; }
  void set_prefixes(std::string vec, std::string cov) {
    vec_prefix_ = std::move(vec);
    cov_prefix_ = std::move(cov);
  }
  const std::map<std::pair<int, int>, KVector>& bracket_table() const { return brackets_; }

  KVector basis_vector(int i) const { return KVector::basis(dim_, i); }
  KForm basis_covector(int i) const { return KForm::basis(dim_, i); }

  KVector bracket(int i, int j) const;
  KVector bracket(const KVector& x, const KVector& y) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.brackets_ == b.brackets_;
  }

 private:
  int dim_;
  std::map<std::pair<int, int>, KVector> brackets_;
  std::string vec_prefix_, cov_prefix_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

// Every (i,j,k) where the Jacobi identity fails, with its residual.
std::vector<JacobiViolation> check_jacobi(const LieAlgebra& g);

// Chevalley-Eilenberg differential on invariant forms:
// (d a)(X0..Xk) = sum_{i<j} (-1)^{i+j} a([Xi,Xj], X0,.. minus Xi, Xj ..).
KForm ce_d(const LieAlgebra& g, const KForm& a);

// Cartan formula with d = ce_d; derivatives of invariant scalars vanish.
KForm lie_derivative(const LieAlgebra& g, const KVector& x, const KForm& a);

// Central extension by a closed 2-cocycle: [X,Y]' = [X,Y] + omega(X,Y) F with
// F the new central basis vector. Throws NonClosedCocycle when d omega != 0;
// the unchecked variant defers all validation for negative tests.
LieAlgebra central_extension(const LieAlgebra& h, const KForm& omega);
LieAlgebra central_extension_unchecked(const LieAlgebra& h, const KForm& omega);

}  // namespace gcx::liealg
