#include "gcx/multilinear.hpp"

namespace gcx::multilinear {

KForm conj(const KForm& a) {
  return a.map_coefficients([](const GaussRational& c) { return c.conj(); });
}

KVector conj(const KVector& a) {
  return a.map_coefficients([](const GaussRational& c) { return c.conj(); });
}

namespace {

template <class T>
std::vector<GaussRational> coords1_impl(const T& a) {
  if (a.degree() != 1) throw dimension_mismatch("coords1 requires degree 1");
  std::vector<GaussRational> out(a.dim());
  for (const auto& [idx, c] : a.terms()) out[idx[0]] = c;
  return out;
}

template <class T>
T from_coords_impl(const std::vector<GaussRational>& c) {
  T out(static_cast<int>(c.size()), 1);
  for (size_t k = 0; k < c.size(); ++k) out.add_term({static_cast<int>(k)}, c[k]);
  return out;
}

template <class T>
std::vector<std::vector<GaussRational>> coord_rows(const std::vector<T>& xs) {
  std::vector<std::vector<GaussRational>> rows;
  rows.reserve(xs.size());
  for (const auto& x : xs) rows.push_back(coords1_impl(x));
  return rows;
}

}  // namespace

std::vector<GaussRational> coords1(const KForm& a) { return coords1_impl(a); }
std::vector<GaussRational> coords1(const KVector& a) { return coords1_impl(a); }
KForm form_from_coords(const std::vector<GaussRational>& c) { return from_coords_impl<KForm>(c); }
KVector vector_from_coords(const std::vector<GaussRational>& c) {
  return from_coords_impl<KVector>(c);
}

KForm contract(const KVector& x, const KForm& a) {
  return detail::contract_first(coords1(x), a);
}

KVector contract(const KForm& alpha, const KVector& p) {
  return detail::contract_first(coords1(alpha), p);
}

GaussRational eval(const KForm& a, const std::vector<KVector>& xs) {
  return detail::eval_on(a, coord_rows(xs));
}

GaussRational eval(const KVector& p, const std::vector<KForm>& alphas) {
  return detail::eval_on(p, coord_rows(alphas));
}

Endo Endo::rank_one(const KVector& x, const KForm& alpha) {
  if (x.dim() != alpha.dim()) throw dimension_mismatch("rank_one: ambient dimensions differ");
  auto xc = coords1(x);
  auto ac = coords1(alpha);
  Matrix m(x.dim(), x.dim());
  for (int r = 0; r < x.dim(); ++r)
    for (int c = 0; c < x.dim(); ++c) m.at(r, c) = xc[r] * ac[c];
  return Endo(m);
}

KVector Endo::apply(const KVector& x) const {
  auto xc = coords1(x);
  if (static_cast<int>(xc.size()) != dim()) throw dimension_mismatch("Endo::apply dimension");
  std::vector<GaussRational> out(dim());
  for (int r = 0; r < dim(); ++r)
    for (int c = 0; c < dim(); ++c) out[r] += m_.at(r, c) * xc[c];
  return vector_from_coords(out);
}

KForm Endo::apply_dual(const KForm& alpha) const {
  auto ac = coords1(alpha);
  if (static_cast<int>(ac.size()) != dim()) throw dimension_mismatch("Endo::apply_dual dimension");
  std::vector<GaussRational> out(dim());
  for (int c = 0; c < dim(); ++c)
    for (int r = 0; r < dim(); ++r) out[c] += ac[r] * m_.at(r, c);
  return form_from_coords(out);
}

}  // namespace gcx::multilinear
