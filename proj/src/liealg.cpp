#include "gcx/liealg.hpp"

namespace gcx::liealg {

LieAlgebra::LieAlgebra(int dim, std::map<std::pair<int, int>, KVector> brackets, Validate mode,
                       std::string vec_prefix, std::string cov_prefix)
    : dim_(dim),
      brackets_(std::move(brackets)),
      vec_prefix_(std::move(vec_prefix)),
      cov_prefix_(std::move(cov_prefix)) {
  for (const auto& [ij, v] : brackets_) {
    auto [i, j] = ij;
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_ || i >= j)
      throw dimension_mismatch("bracket table key must have 0 <= i < j < dim");
    if (v.dim() != dim_ || v.degree() != 1)
      throw dimension_mismatch("bracket value must be a degree-1 vector of matching dimension");
  }
  if (mode == Validate::Check) {
    auto bad = check_jacobi(*this);
    if (!bad.empty())
      throw Error(ErrorKind::Validation, "JacobiFailure",
                  "structure constants violate the Jacobi identity at (" +
                      std::to_string(bad[0].i + 1) + "," + std::to_string(bad[0].j + 1) + "," +
                      std::to_string(bad[0].k + 1) + ")");
  }
}

LieAlgebra LieAlgebra::abelian(int dim) { return LieAlgebra(dim, {}); }

KVector LieAlgebra::bracket(int i, int j) const {
  if (i == j) return KVector(dim_, 1);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = brackets_.find({i, j});
  KVector v = (it == brackets_.end()) ? KVector(dim_, 1) : it->second;
  return flip ? -v : v;
}

KVector LieAlgebra::bracket(const KVector& x, const KVector& y) const {
  if (x.dim() != dim_ || y.dim() != dim_) throw dimension_mismatch("bracket: ambient mismatch");
  KVector out(dim_, 1);
  for (const auto& [ix, cx] : x.terms())
    for (const auto& [iy, cy] : y.terms()) {
      KVector b = bracket(ix[0], iy[0]);
      if (!b.is_zero()) out += (cx * cy) * b;
    }
  return out;
}

std::vector<JacobiViolation> check_jacobi(const LieAlgebra& g) {
  std::vector<JacobiViolation> out;
  int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        KVector ei = g.basis_vector(i), ej = g.basis_vector(j), ek = g.basis_vector(k);
        KVector res = g.bracket(g.bracket(ei, ej), ek) + g.bracket(g.bracket(ej, ek), ei) +
                      g.bracket(g.bracket(ek, ei), ej);
        if (!res.is_zero()) out.push_back({i, j, k, res});
      }
  return out;
}

KForm ce_d(const LieAlgebra& g, const KForm& a) {
  if (a.dim() != g.dim()) throw dimension_mismatch("ce_d: ambient mismatch");
  int n = g.dim();
  int k = a.degree();
  KForm out(n, k + 1);
  if (k + 1 > n) return out;
  // iterate over increasing (k+1)-tuples
  std::vector<int> t(k + 1);
  for (int q = 0; q <= k; ++q) t[q] = q;
  for (;;) {
    GaussRational value;
    for (int p = 0; p <= k; ++p)
      for (int q = p + 1; q <= k; ++q) {
        KVector b = g.bracket(t[p], t[q]);
        if (b.is_zero()) continue;
        std::vector<KVector> args;
        args.reserve(k);
        args.push_back(b);
        for (int r = 0; r <= k; ++r)
          if (r != p && r != q) args.push_back(g.basis_vector(t[r]));
        GaussRational term = multilinear::eval(a, args);
        value += ((p + q) % 2) ? -term : term;
      }
    out.add_term(t, value);
    // next combination
    int pos = k;
    while (pos >= 0 && t[pos] == n - 1 - (k - pos)) --pos;
    if (pos < 0) break;
    ++t[pos];
    for (int q = pos + 1; q <= k; ++q) t[q] = t[q - 1] + 1;
  }
  return out;
}

KForm lie_derivative(const LieAlgebra& g, const KVector& x, const KForm& a) {
  if (a.degree() == 0) return KForm(g.dim(), 0);  // invariant scalars are constant
  KForm from_d = multilinear::contract(x, ce_d(g, a));
  if (a.degree() >= 1) {
    KForm inner = multilinear::contract(x, a);
    if (inner.degree() == 0) return from_d;  // d of an invariant scalar vanishes
    return from_d + ce_d(g, inner);
  }
  return from_d;
}

namespace {

LieAlgebra extend(const LieAlgebra& h, const KForm& omega, LieAlgebra::Validate mode) {
  if (omega.dim() != h.dim() || omega.degree() != 2)
    throw dimension_mismatch("central_extension requires a 2-form on the base algebra");
  int n = h.dim();
  std::map<std::pair<int, int>, KVector> table;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      KVector b(n + 1, 1);
      KVector hb = h.bracket(i, j);
      for (const auto& [idx, c] : hb.terms()) b.add_term(idx, c);
      GaussRational w =
          multilinear::eval(omega, {h.basis_vector(i), h.basis_vector(j)});
      b.add_term({n}, w);
      if (!b.is_zero()) table[{i, j}] = b;
    }
  LieAlgebra g(n + 1, std::move(table), mode, h.vec_prefix(), h.cov_prefix());
  return g;
}

}  // namespace

LieAlgebra central_extension(const LieAlgebra& h, const KForm& omega) {
  if (!ce_d(h, omega).is_zero())
    throw Error(ErrorKind::Precondition, "NonClosedCocycle",
                "the 2-form is not closed; the extension would violate the Jacobi identity");
  return extend(h, omega, LieAlgebra::Validate::Check);
}

LieAlgebra central_extension_unchecked(const LieAlgebra& h, const KForm& omega) {
  return extend(h, omega, LieAlgebra::Validate::Defer);
}

}  // namespace gcx::liealg
