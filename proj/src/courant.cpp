#include "gcx/courant.hpp"

#include <functional>
#include <sstream>

namespace gcx::courant {

GenVector::GenVector(AlgebraPtr alg, KVector vec, KForm cov)
    : alg_(std::move(alg)), vec_(std::move(vec)), cov_(std::move(cov)) {
  if (!alg_) throw dimension_mismatch("GenVector requires an algebra");
  if (vec_.dim() != alg_->dim() || cov_.dim() != alg_->dim() || vec_.degree() != 1 ||
      cov_.degree() != 1)
    throw dimension_mismatch("GenVector parts must be degree-1 of the algebra dimension");
}

GenVector GenVector::from_vector(AlgebraPtr alg, KVector v) {
  KForm zero(alg->dim(), 1);
  return GenVector(std::move(alg), std::move(v), zero);
}

GenVector GenVector::from_covector(AlgebraPtr alg, KForm a) {
  KVector zero(alg->dim(), 1);
  return GenVector(std::move(alg), zero, std::move(a));
}

GenVector GenVector::from_coords(AlgebraPtr alg, const std::vector<GaussRational>& row) {
  int n = alg->dim();
  if (static_cast<int>(row.size()) != 2 * n)
    throw dimension_mismatch("GenVector::from_coords expects 2n coordinates");
  std::vector<GaussRational> v(row.begin(), row.begin() + n);
  std::vector<GaussRational> c(row.begin() + n, row.end());
  return GenVector(std::move(alg), multilinear::vector_from_coords(v),
                   multilinear::form_from_coords(c));
}

GenVector GenVector::conj() const {
  return GenVector(alg_, multilinear::conj(vec_), multilinear::conj(cov_));
}

std::vector<GaussRational> GenVector::coords() const {
  std::vector<GaussRational> out = multilinear::coords1(vec_);
  std::vector<GaussRational> c = multilinear::coords1(cov_);
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::string GenVector::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const GaussRational& c, const std::string& name) {
    std::string cs = c.str();
    bool bare = (cs == "1" || cs == "-1");
    auto wrap = [](const std::string& s) {
      bool compound = s.find('+') != std::string::npos || s.find('-', 1) != std::string::npos;
      return compound ? "(" + s + ")" : s;
    };
    std::string body = bare ? name : wrap(cs) + "*" + name;
    if (first) {
      os << (cs == "-1" ? "-" + name : body);
      first = false;
      return;
    }
    if (!cs.empty() && cs[0] == '-' && cs.find('+') == std::string::npos &&
        cs.find('-', 1) == std::string::npos) {
      if (cs == "-1")
        os << " - " << name;
      else
        os << " - " << cs.substr(1) << "*" << name;
    } else {
      os << " + " << body;
    }
  };
  for (const auto& [idx, c] : vec_.terms())
    emit(c, alg_->vec_prefix() + std::to_string(idx[0] + 1));
  for (const auto& [idx, c] : cov_.terms())
    emit(c, alg_->cov_prefix() + std::to_string(idx[0] + 1));
  if (first) os << "0";
  return os.str();
}

GenVector GenVector::operator-() const { return GenVector(alg_, -vec_, -cov_); }

GenVector& GenVector::operator+=(const GenVector& o) {
  require_same_ambient(*this, o);
  vec_ += o.vec_;
  cov_ += o.cov_;
  return *this;
}

GenVector& GenVector::operator-=(const GenVector& o) {
  require_same_ambient(*this, o);
  vec_ -= o.vec_;
  cov_ -= o.cov_;
  return *this;
}

GenVector operator*(const GaussRational& s, const GenVector& v) {
  return GenVector(v.alg_, s * v.vec_, s * v.cov_);
}

void require_same_ambient(const GenVector& a, const GenVector& b) {
  if (!a.algebra() || !b.algebra()) throw dimension_mismatch("GenVector without ambient algebra");
  if (a.algebra() != b.algebra() && !(*a.algebra() == *b.algebra()))
    throw dimension_mismatch("GenVector ambient algebras differ");
}

GaussRational pairing(const GenVector& a, const GenVector& b) {
  require_same_ambient(a, b);
  GaussRational s = multilinear::eval(b.cov(), {a.vec()}) + multilinear::eval(a.cov(), {b.vec()});
  return exactnum::gauss(1, 2) * s;
}

GenVector courant_bracket(const GenVector& a, const GenVector& b) {
  require_same_ambient(a, b);
  const LieAlgebra& g = *a.algebra();
  KVector v = g.bracket(a.vec(), b.vec());
  KForm c = multilinear::contract(a.vec(), liealg::ce_d(g, b.cov())) -
            multilinear::contract(b.vec(), liealg::ce_d(g, a.cov()));
  return GenVector(a.algebra(), v, c);
}

KVector anchor(const GenVector& a) { return a.vec(); }

SubbundleSpan::SubbundleSpan(AlgebraPtr alg, std::vector<GenVector> generators)
    : alg_(std::move(alg)), gens_(std::move(generators)) {
  if (!alg_) throw dimension_mismatch("SubbundleSpan requires an algebra");
  int n = alg_->dim();
  Matrix rows(static_cast<int>(gens_.size()), 2 * n);
  for (size_t r = 0; r < gens_.size(); ++r) {
    require_same_ambient(gens_[r], GenVector::from_vector(alg_, KVector(n, 1)));
    auto row = gens_[r].coords();
    for (int c = 0; c < 2 * n; ++c) rows.at(r, c) = row[c];
  }
  auto red = exactnum::rref(rows);
  canon_ = red.reduced;
  rank_ = red.rank;
}

std::vector<GenVector> SubbundleSpan::canonical_generators() const {
  std::vector<GenVector> out;
  out.reserve(rank_);
  for (int r = 0; r < rank_; ++r) out.push_back(GenVector::from_coords(alg_, canon_.row(r)));
  return out;
}

std::optional<std::vector<GaussRational>> SubbundleSpan::coords_in_rref_basis(
    const GenVector& v) const {
  Matrix top(rank_, canon_.cols());
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < canon_.cols(); ++c) top.at(r, c) = canon_.at(r, c);
  return exactnum::member(top, v.coords());
}

std::optional<std::vector<GaussRational>> SubbundleSpan::coords_in_generators(
    const GenVector& v) const {
  if (!generators_independent())
    throw Error(ErrorKind::Precondition, "DependentGenerators",
                "coordinates over a dependent generator list are not unique");
  // solve G^T x = v
  int n2 = canon_.cols();
  Matrix gt(n2, static_cast<int>(gens_.size()));
  for (size_t k = 0; k < gens_.size(); ++k) {
    auto row = gens_[k].coords();
    for (int c = 0; c < n2; ++c) gt.at(c, static_cast<int>(k)) = row[c];
  }
  return exactnum::solve(gt, v.coords());
}

SubbundleSpan SubbundleSpan::conj() const {
  std::vector<GenVector> g;
  g.reserve(gens_.size());
  for (const auto& v : gens_) g.push_back(v.conj());
  return SubbundleSpan(alg_, std::move(g));
}

bool operator==(const SubbundleSpan& a, const SubbundleSpan& b) { return span_equal(a, b); }

bool span_equal(const SubbundleSpan& a, const SubbundleSpan& b) {
  return exactnum::span_equal(a.canonical_rows(), b.canonical_rows());
}

bool is_isotropic(const SubbundleSpan& s) {
  const auto& g = s.generators();
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i; j < g.size(); ++j)
      if (!pairing(g[i], g[j]).is_zero()) return false;
  return true;
}

ClosednessReport closedness(const SubbundleSpan& s) {
  ClosednessReport report;
  const auto& g = s.generators();
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) {
      GenVector br = courant_bracket(g[i], g[j]);
      auto coords = s.coords_in_rref_basis(br);
      if (coords) continue;
      // residual after removing the span part: supported on non-pivot columns
      auto row = br.coords();
      const Matrix& canon = s.canonical_rows();
      auto red = exactnum::rref(canon);  // canon is already reduced; reuse pivots
      for (int k = 0; k < s.rank(); ++k) {
        GaussRational c = row[red.pivot_cols[k]];
        if (c.is_zero()) continue;
        for (int col = 0; col < canon.cols(); ++col) row[col] -= c * canon.at(k, col);
      }
      report.closed = false;
      report.witnesses.push_back({static_cast<int>(i), static_cast<int>(j), br,
                                  GenVector::from_coords(s.algebra(), row)});
    }
  return report;
}

AltTensor::AltTensor(int arity, SubbundleSpan span) : arity_(arity), span_(std::move(span)) {
  if (arity_ < 0) throw dimension_mismatch("AltTensor arity must be nonnegative");
}

AltTensor AltTensor::scalar(SubbundleSpan span, GaussRational value) {
  AltTensor t(0, std::move(span));
  t.set({}, value);
  return t;
}

void AltTensor::set(std::vector<int> idx, const GaussRational& v) {
  if (static_cast<int>(idx.size()) != arity_) throw dimension_mismatch("AltTensor::set arity");
  int sign = detail::sort_sign(idx);
  if (sign == 0) {
    if (!v.is_zero())
      throw Error(ErrorKind::Precondition, "RepeatedIndex",
                  "nonzero value on a repeated index tuple");
    return;
  }
  GaussRational value = (sign < 0) ? -v : v;
  if (value.is_zero())
    vals_.erase(idx);
  else
    vals_[idx] = value;
}

GaussRational AltTensor::value_at(std::vector<int> idx) const {
  int sign = detail::sort_sign(idx);
  if (sign == 0) return GaussRational(0);
  auto it = vals_.find(idx);
  if (it == vals_.end()) return GaussRational(0);
  return (sign < 0) ? -it->second : it->second;
}

GaussRational AltTensor::eval(const std::vector<GenVector>& args) const {
  if (static_cast<int>(args.size()) != arity_) throw dimension_mismatch("AltTensor::eval arity");
  std::vector<std::vector<GaussRational>> coords;
  coords.reserve(args.size());
  for (const auto& a : args) {
    auto c = span_.coords_in_generators(a);
    if (!c)
      throw Error(ErrorKind::Precondition, "OutsideSpan",
                  "AltTensor argument does not lie in the carrying span");
    coords.push_back(*c);
  }
  int m = static_cast<int>(span_.generators().size());
  GaussRational total;
  std::vector<int> idx(arity_);
  // expand multilinearly over generator indices
  std::function<void(int, GaussRational)> rec = [&](int slot, GaussRational acc) {
    if (slot == arity_) {
      GaussRational v = value_at(idx);
      if (!v.is_zero()) total += acc * v;
      return;
    }
    for (int k = 0; k < m; ++k) {
      if (coords[slot][k].is_zero()) continue;
      idx[slot] = k;
      rec(slot + 1, acc * coords[slot][k]);
    }
  };
  rec(0, GaussRational(1));
  return total;
}

AltTensor pairing_tensor(const SubbundleSpan& span, const GenVector& w) {
  AltTensor t(1, span);
  const auto& g = span.generators();
  for (size_t k = 0; k < g.size(); ++k) t.set({static_cast<int>(k)}, pairing(w, g[k]));
  return t;
}

AltTensor dirac_d_pairing(const SubbundleSpan& a, const GenVector& w) {
  AltTensor out(2, a);
  const auto& g = a.generators();
  int m = static_cast<int>(g.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      out.set({i, j}, -pairing(w, courant_bracket(g[i], g[j])));
  return out;
}

AltTensor dirac_d(const SubbundleSpan& l, const SubbundleSpan& ldual, const AltTensor& xi) {
  auto report = closedness(l);
  if (!report.closed)
    throw Error(ErrorKind::Precondition, "NotClosed",
                "dirac_d requires a span closed under the Courant bracket");
  if (!l.generators_independent())
    throw Error(ErrorKind::Precondition, "DependentGenerators",
                "dirac_d requires independent generators");
  if (!is_isotropic(ldual) || ldual.rank() + l.rank() != 2 * l.algebra()->dim())
    throw Error(ErrorKind::Precondition, "BadDualComplement",
                "dual span is not a transversal isotropic complement");
  int k = xi.arity();
  int m = static_cast<int>(l.generators().size());
  AltTensor out(k + 1, l);
  const auto& g = l.generators();
  std::vector<int> t(k + 1);
  if (k + 1 > m) return out;
  for (int q = 0; q <= k; ++q) t[q] = q;
  for (;;) {
    GaussRational value;
    for (int p = 0; p <= k; ++p)
      for (int q = p + 1; q <= k; ++q) {
        GenVector br = courant_bracket(g[t[p]], g[t[q]]);
        if (br.is_zero()) continue;
        std::vector<GenVector> args;
        args.push_back(br);
        for (int r = 0; r <= k; ++r)
          if (r != p && r != q) args.push_back(g[t[r]]);
        GaussRational term = xi.eval(args);
        value += ((p + q) % 2) ? -term : term;
      }
    out.set(t, value);
    int pos = k;
    while (pos >= 0 && t[pos] == m - 1 - (k - pos)) --pos;
    if (pos < 0) break;
    ++t[pos];
    for (int q = pos + 1; q <= k; ++q) t[q] = t[q - 1] + 1;
  }
  return out;
}

BiVec BiVec::scaled(const GaussRational& s) const {
  BiVec out;
  for (const auto& t : terms) out.terms.push_back({s * t.c, t.a, t.b});
  return out;
}

std::map<std::vector<int>, GaussRational> TriVec::ambient_coords() const {
  std::map<std::vector<int>, GaussRational> out;
  for (const auto& t : terms) {
    auto ca = t.a.coords(), cb = t.b.coords(), cd = t.d.coords();
    int n2 = static_cast<int>(ca.size());
    for (int x = 0; x < n2; ++x) {
      if (ca[x].is_zero()) continue;
      for (int y = 0; y < n2; ++y) {
        if (cb[y].is_zero() || y == x) continue;
        for (int z = 0; z < n2; ++z) {
          if (cd[z].is_zero() || z == x || z == y) continue;
          std::vector<int> idx{x, y, z};
          int sign = detail::sort_sign(idx);
          GaussRational v = t.c * ca[x] * cb[y] * cd[z];
          auto& slot = out[idx];
          slot += (sign < 0) ? -v : v;
          if (slot.is_zero()) out.erase(idx);
        }
      }
    }
  }
  return out;
}

TriVec schouten(const BiVec& p, const BiVec& q, const SubbundleSpan* carrier) {
  if (carrier) {
    auto report = closedness(*carrier);
    if (!report.closed)
      throw Error(ErrorKind::Precondition, "NotClosed",
                  "schouten carrier span is not closed under the Courant bracket");
    for (const auto& t : p.terms)
      if (!carrier->contains(t.a) || !carrier->contains(t.b))
        throw Error(ErrorKind::Precondition, "OutsideSpan",
                    "schouten operand escapes the carrier span");
    for (const auto& t : q.terms)
      if (!carrier->contains(t.a) || !carrier->contains(t.b))
        throw Error(ErrorKind::Precondition, "OutsideSpan",
                    "schouten operand escapes the carrier span");
  }
  TriVec out;
  for (const auto& s : p.terms)
    for (const auto& t : q.terms) {
      GaussRational c = s.c * t.c;
      if (c.is_zero()) continue;
      const GenVector &a = s.a, &b = s.b, &cc = t.a, &d = t.b;
      out.terms.push_back({c, courant_bracket(a, cc), b, d});
      out.terms.push_back({-c, courant_bracket(a, d), b, cc});
      out.terms.push_back({-c, courant_bracket(b, cc), a, d});
      out.terms.push_back({c, courant_bracket(b, d), a, cc});
    }
  return out;
}

}  // namespace gcx::courant
