#pragma once

#include <map>
#include <memory>
#include <random>

#include "gcx/courant.hpp"

namespace gcx_test {

using gcx::exactnum::GaussRational;
using gcx::liealg::AlgebraPtr;
using gcx::liealg::LieAlgebra;
using gcx::multilinear::KForm;
using gcx::multilinear::KVector;

inline AlgebraPtr su2() {
  std::map<std::pair<int, int>, KVector> b;
  b[{0, 1}] = -KVector::basis(3, 2);
  b[{1, 2}] = -KVector::basis(3, 0);
  b[{0, 2}] = KVector::basis(3, 1);
  return std::make_shared<LieAlgebra>(3, std::move(b), LieAlgebra::Validate::Check, "X", "s");
}

inline AlgebraPtr h3() {
  std::map<std::pair<int, int>, KVector> b;
  b[{0, 1}] = -KVector::basis(3, 2);
  return std::make_shared<LieAlgebra>(3, std::move(b), LieAlgebra::Validate::Check, "X", "a");
}

inline AlgebraPtr kod4() {
  std::map<std::pair<int, int>, KVector> b;
  b[{0, 1}] = KVector::basis(4, 2);
  return std::make_shared<LieAlgebra>(4, std::move(b), LieAlgebra::Validate::Check, "e", "e");
}

inline AlgebraPtr kod5() {
  std::map<std::pair<int, int>, KVector> b;
  b[{0, 1}] = KVector::basis(5, 2);
  b[{0, 2}] = -KVector::basis(5, 4);
  b[{1, 3}] = KVector::basis(5, 4);
  return std::make_shared<LieAlgebra>(5, std::move(b), LieAlgebra::Validate::Check, "e", "e");
}

// X_i + alpha summands by index (0-based)
inline gcx::courant::GenVector gv(const AlgebraPtr& alg,
                                  std::vector<std::pair<int, GaussRational>> vec,
                                  std::vector<std::pair<int, GaussRational>> cov) {
  KVector v(alg->dim(), 1);
  KForm c(alg->dim(), 1);
  for (auto& [k, s] : vec) v.add_term({k}, s);
  for (auto& [k, s] : cov) c.add_term({k}, s);
  return gcx::courant::GenVector(alg, v, c);
}

inline GaussRational rnd_gauss(std::mt19937& rng, long bound = 5) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, 4);
  return GaussRational(gcx::exactnum::rat(num(rng), den(rng)),
                       gcx::exactnum::rat(num(rng), den(rng)));
}

inline gcx::courant::GenVector rnd_genvector(std::mt19937& rng, const AlgebraPtr& alg) {
  int n = alg->dim();
  std::vector<GaussRational> row(2 * n);
  for (auto& x : row) x = rnd_gauss(rng);
  return gcx::courant::GenVector::from_coords(alg, row);
}

}  // namespace gcx_test
