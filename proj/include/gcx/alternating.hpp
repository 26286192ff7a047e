#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "gcx/errors.hpp"

namespace gcx::detail {

// Sorts idx in place, returns the sign of the permutation, or 0 on repeats.
inline int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i) {
    for (size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

// Sparse alternating multilinear table: strictly increasing index tuples ->
// nonzero coefficients, determinant ("no factorial") conventions throughout.
// Variance distinguishes covariant (forms) from contravariant (multivectors);
// Coef is any commutative ring type with +, -, *, is_zero().
template <class Coef, int Variance>
class Alt {
 public:
  Alt() : dim_(0), degree_(0) {}
  Alt(int dim, int degree) : dim_(dim), degree_(degree) {
    if (degree < 0 || dim < 0) throw dimension_mismatch("negative degree or dimension");
  }

  static Alt basis(int dim, int index) {
    Alt a(dim, 1);
    a.add_term({index}, Coef(1));
    return a;
  }
  static Alt scalar(int dim, Coef value) {
    Alt a(dim, 0);
    a.add_term({}, std::move(value));
    return a;
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Coef>& terms() const { return terms_; }

  // Adds c * e_{idx}; idx may be unsorted, repeats contribute nothing.
  void add_term(std::vector<int> idx, const Coef& c) {
    if (static_cast<int>(idx.size()) != degree_)
      throw dimension_mismatch("term arity differs from degree");
    for (int k : idx)
      if (k < 0 || k >= dim_) throw dimension_mismatch("basis index out of range");
    if (c.is_zero()) return;
    int sign = sort_sign(idx);
    if (sign == 0) return;
    Coef& slot = terms_[idx];
    slot += (sign < 0) ? Coef(-c) : c;
    if (slot.is_zero()) terms_.erase(idx);
  }

  Coef coeff(const std::vector<int>& sorted_idx) const {
    auto it = terms_.find(sorted_idx);
    return it == terms_.end() ? Coef(0) : it->second;
  }

  Alt operator-() const {
    Alt out(dim_, degree_);
    for (const auto& [idx, c] : terms_) out.terms_[idx] = -c;
    return out;
  }

  Alt& operator+=(const Alt& o) {
    require_same_shape(o);
    for (const auto& [idx, c] : o.terms_) {
      Coef& slot = terms_[idx];
      slot += c;
      if (slot.is_zero()) terms_.erase(idx);
    }
    return *this;
  }
  Alt& operator-=(const Alt& o) { return *this += -o; }

  friend Alt operator+(Alt a, const Alt& b) { return a += b; }
  friend Alt operator-(Alt a, const Alt& b) { return a -= b; }
  friend Alt operator*(const Coef& s, const Alt& a) {
    Alt out(a.dim_, a.degree_);
    for (const auto& [idx, c] : a.terms_) out.add_term(idx, s * c);
    return out;
  }
  friend bool operator==(const Alt& a, const Alt& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using Out = decltype(f(std::declval<const Coef&>()));
    Alt<Out, Variance> out(dim_, degree_);
    for (const auto& [idx, c] : terms_) out.add_term(idx, f(c));
    return out;
  }

 private:
  void require_same_shape(const Alt& o) const {
    if (dim_ != o.dim_ || degree_ != o.degree_)
      throw dimension_mismatch("alternating tensors of different shape");
  }

  int dim_;
  int degree_;
  std::map<std::vector<int>, Coef> terms_;
};

// Wedge by shuffle merge. Degrees beyond the ambient dimension give zero.
template <class Coef, int V>
Alt<Coef, V> wedge(const Alt<Coef, V>& a, const Alt<Coef, V>& b) {
  if (a.dim() != b.dim()) throw dimension_mismatch("wedge: ambient dimensions differ");
  int deg = a.degree() + b.degree();
  if (deg > a.dim()) return Alt<Coef, V>(a.dim(), std::min(deg, a.dim()));
  Alt<Coef, V> out(a.dim(), deg);
  for (const auto& [s, cs] : a.terms())
    for (const auto& [t, ct] : b.terms()) {
      std::vector<int> idx = s;
      idx.insert(idx.end(), t.begin(), t.end());
      out.add_term(std::move(idx), cs * ct);
    }
  return out;
}

// First-slot interior product: x has one coefficient per basis direction of
// the opposite variance. (iota_X a)(...) = a(X, ...).
template <class Coef, int V>
Alt<Coef, V> contract_first(const std::vector<Coef>& x, const Alt<Coef, V>& a) {
  if (static_cast<int>(x.size()) != a.dim())
    throw dimension_mismatch("contract: argument length differs from ambient dimension");
  if (a.degree() < 1) throw dimension_mismatch("contract: degree must be at least 1");
  Alt<Coef, V> out(a.dim(), a.degree() - 1);
  for (const auto& [idx, c] : a.terms()) {
    for (size_t p = 0; p < idx.size(); ++p) {
      if (x[idx[p]].is_zero()) continue;
      std::vector<int> rest;
      rest.reserve(idx.size() - 1);
      for (size_t q = 0; q < idx.size(); ++q)
        if (q != p) rest.push_back(idx[q]);
      Coef term = x[idx[p]] * c;
      out.add_term(std::move(rest), (p % 2) ? Coef(-term) : term);
    }
  }
  return out;
}

// Fully antisymmetric evaluation on degree-many coefficient vectors.
template <class Coef, int V>
Coef eval_on(const Alt<Coef, V>& a, const std::vector<std::vector<Coef>>& args) {
  if (static_cast<int>(args.size()) != a.degree())
    throw dimension_mismatch("eval: argument count differs from degree");
  for (const auto& v : args)
    if (static_cast<int>(v.size()) != a.dim())
      throw dimension_mismatch("eval: argument length differs from ambient dimension");
  Coef total(0);
  for (const auto& [idx, c] : a.terms()) {
    // det M, M[r][col] = args[col][idx[r]]
    int k = static_cast<int>(idx.size());
    std::vector<int> perm(k);
    for (int q = 0; q < k; ++q) perm[q] = q;
    Coef det(0);
    // Leibniz expansion; degrees here are tiny (k <= 5).
    do {
      int sign = 1;
      for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y)
          if (perm[x] > perm[y]) sign = -sign;
      Coef prod(1);
      for (int r = 0; r < k; ++r) prod = prod * args[perm[r]][idx[r]];
      det += (sign < 0) ? Coef(-prod) : prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    total += c * det;
  }
  return total;
}

}  // namespace gcx::detail
