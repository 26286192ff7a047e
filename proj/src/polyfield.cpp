#include "gcx/polyfield.hpp"

#include <sstream>

namespace gcx::polyfield {

namespace {

const GaussRational kOne(1);
const GaussRational kI = GaussRational::i();
const GaussRational kHalf = exactnum::gauss(1, 2);

void trim(std::vector<int>& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

Poly Poly::var(int v, int power) {
  Poly p;
  std::vector<int> e(v + 1, 0);
  e[v] = power;
  p.add(std::move(e), kOne);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

GaussRational Poly::constant_value() const {
  auto it = terms_.find({});
  return it == terms_.end() ? GaussRational(0) : it->second;
}

void Poly::add(std::vector<int> exponents, const GaussRational& c) {
  if (c.is_zero()) return;
  trim(exponents);
  auto& slot = terms_[exponents];
  slot += c;
  if (slot.is_zero()) terms_.erase(exponents);
}

Poly Poly::derivative(int v) const {
  Poly out;
  for (const auto& [e, c] : terms_) {
    if (v >= static_cast<int>(e.size()) || e[v] == 0) continue;
    std::vector<int> d = e;
    d[v] -= 1;
    out.add(std::move(d), GaussRational(e[v]) * c);
  }
  return out;
}

Poly Poly::conj() const {
  Poly out;
  for (const auto& [e, c] : terms_) out.add(e, c.conj());
  return out;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [e, c] : terms_) out.add(e, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(std::max(ea.size(), eb.size()), 0);
      for (size_t k = 0; k < ea.size(); ++k) e[k] += ea[k];
      for (size_t k = 0; k < eb.size(); ++k) e[k] += eb[k];
      out.add(std::move(e), ca * cb);
    }
  return out;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      os << "*" << (v < names.size() ? names[v] : "t" + std::to_string(v));
      if (e[v] > 1) os << "^" << e[v];
    }
  }
  return os.str();
}

namespace {

template <class T>
std::vector<Poly> coords1_impl(const T& a) {
  if (a.degree() != 1) throw dimension_mismatch("coords1 requires degree 1");
  std::vector<Poly> out(a.dim());
  for (const auto& [idx, c] : a.terms()) out[idx[0]] = c;
  return out;
}

template <class T>
T from_coords_impl(const std::vector<Poly>& c) {
  T out(static_cast<int>(c.size()), 1);
  for (size_t k = 0; k < c.size(); ++k) out.add_term({static_cast<int>(k)}, c[k]);
  return out;
}

}  // namespace

std::vector<Poly> coords1(const PolyForm& a) { return coords1_impl(a); }
std::vector<Poly> coords1(const PolyField& a) { return coords1_impl(a); }
PolyForm form_from_coords(const std::vector<Poly>& c) { return from_coords_impl<PolyForm>(c); }
PolyField field_from_coords(const std::vector<Poly>& c) {
  return from_coords_impl<PolyField>(c);
}

PolyForm contract(const PolyField& x, const PolyForm& a) {
  return detail::contract_first(coords1(x), a);
}

PolyField contract(const PolyForm& alpha, const PolyField& p) {
  return detail::contract_first(coords1(alpha), p);
}

Poly eval(const PolyForm& a, const std::vector<PolyField>& xs) {
  std::vector<std::vector<Poly>> rows;
  rows.reserve(xs.size());
  for (const auto& x : xs) rows.push_back(coords1(x));
  return detail::eval_on(a, rows);
}

Poly directional(const PolyField& x, const Poly& p) {
  Poly out;
  for (const auto& [idx, c] : x.terms()) out += c * p.derivative(idx[0]);
  return out;
}

PolyForm pf_d(const PolyForm& a) {
  int n = a.dim();
  PolyForm out(n, a.degree() + 1);
  if (a.degree() + 1 > n) return out;
  for (const auto& [idx, c] : a.terms()) {
    for (int v = 0; v < n; ++v) {
      Poly dc = c.derivative(v);
      if (dc.is_zero()) continue;
      std::vector<int> t;
      t.reserve(idx.size() + 1);
      t.push_back(v);
      t.insert(t.end(), idx.begin(), idx.end());
      out.add_term(std::move(t), dc);
    }
  }
  return out;
}

PolyField pf_bracket(const PolyField& x, const PolyField& y) {
  if (x.degree() != 1 || y.degree() != 1)
    throw dimension_mismatch("pf_bracket needs vector fields");
  auto xc = coords1(x), yc = coords1(y);
  int n = x.dim();
  std::vector<Poly> out(n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      out[k] += xc[j] * yc[k].derivative(j);
      out[k] -= yc[j] * xc[k].derivative(j);
    }
  }
  return field_from_coords(out);
}

namespace {

// d of a degree-0 form (plain polynomial): the gradient 1-form
PolyForm gradient(int dim, const Poly& p) {
  PolyForm g(dim, 1);
  for (int v = 0; v < dim; ++v) g.add_term({v}, p.derivative(v));
  return g;
}

}  // namespace

PolyForm pf_lie(const PolyField& x, const PolyForm& a) {
  if (a.degree() == 0) {
    PolyForm out(a.dim(), 0);
    out.add_term({}, directional(x, a.coeff({})));
    return out;
  }
  PolyForm inner = contract(x, a);
  PolyForm from_inner =
      (inner.degree() == 0) ? gradient(a.dim(), inner.coeff({})) : pf_d(inner);
  return contract(x, pf_d(a)) + from_inner;
}

GenPolySection GenPolySection::from_field(PolyField v) {
  PolyForm zero(v.dim(), 1);
  return {std::move(v), zero};
}

GenPolySection GenPolySection::from_form(PolyForm c) {
  PolyField zero(c.dim(), 1);
  return {zero, std::move(c)};
}

GenPolySection& GenPolySection::operator+=(const GenPolySection& o) {
  vec += o.vec;
  cov += o.cov;
  return *this;
}

GenPolySection operator*(const Poly& s, const GenPolySection& v) {
  return {s * v.vec, s * v.cov};
}

Poly pf_pairing(const GenPolySection& a, const GenPolySection& b) {
  Poly s = eval(b.cov, {a.vec}) + eval(a.cov, {b.vec});
  return Poly(kHalf) * s;
}

GenPolySection pf_courant(const GenPolySection& a, const GenPolySection& b) {
  PolyField vec = pf_bracket(a.vec, b.vec);
  PolyForm lie_part = pf_lie(a.vec, b.cov) - pf_lie(b.vec, a.cov);
  Poly scalar = eval(b.cov, {a.vec}) - eval(a.cov, {b.vec});
  return {vec, lie_part - Poly(kHalf) * gradient(a.vec.dim(), scalar)};
}

std::vector<std::string> chart_names(int n) {
  std::vector<std::string> names;
  for (int j = 1; j <= n; ++j) {
    names.push_back("x" + std::to_string(j));
    names.push_back("y" + std::to_string(j));
  }
  names.push_back("z");
  return names;
}

namespace {

// formal biform: sum of c * (a ^ b) acting on generalized section pairs
// through twice the pairing, so covectors act on vectors at full scale
struct BiFormTerm {
  GaussRational c;
  GenPolySection a, b;
};

Poly biform_eval(const std::vector<BiFormTerm>& w, const GenPolySection& u,
                 const GenPolySection& v) {
  Poly two(GaussRational(2));
  Poly out;
  for (const auto& t : w) {
    Poly au = two * pf_pairing(t.a, u), av = two * pf_pairing(t.a, v);
    Poly bu = two * pf_pairing(t.b, u), bv = two * pf_pairing(t.b, v);
    out += Poly(t.c) * (au * bv - av * bu);
  }
  return out;
}

}  // namespace

DarbouxReport darboux_model(int n) {
  if (n < 1)
    throw Error(ErrorKind::Precondition, "BadParams", "darboux model needs n >= 1");
  if (n > 3)
    throw Error(ErrorKind::Precondition, "BadParams", "chart dimension capped at n = 3");
  const int N = 2 * n + 1;
  const int zvar = 2 * n;
  DarbouxReport report;
  report.n = n;
  auto check = [&](const std::string& name, bool pass) {
    report.checks.push_back({name, pass});
  };

  // frame and coframe
  PolyForm eta(N, 1);
  eta.add_term({zvar}, Poly(1));
  for (int j = 0; j < n; ++j) eta.add_term({2 * j}, -Poly::var(2 * j + 1));

  PolyField f(N, 1);
  f.add_term({zvar}, Poly(1));

  std::vector<PolyField> X(n), Y(n);
  std::vector<PolyForm> dx(n), dy(n);
  for (int j = 0; j < n; ++j) {
    X[j] = PolyField(N, 1);
    X[j].add_term({2 * j}, Poly(1));
    X[j].add_term({zvar}, Poly::var(2 * j + 1));
    Y[j] = PolyField::basis(N, 2 * j + 1);
    dx[j] = PolyForm::basis(N, 2 * j);
    dy[j] = PolyForm::basis(N, 2 * j + 1);
  }

  // theta = d eta = sum dx_j ^ dy_j
  PolyForm theta = pf_d(eta);
  PolyForm theta_expected(N, 2);
  for (int j = 0; j < n; ++j) theta_expected += wedge(dx[j], dy[j]);
  check("theta = d eta = sum dx_j ^ dy_j", theta == theta_expected);
  check("eta(F) = 1", eval(eta, {f}) == Poly(1));
  check("iota_F d eta = 0", contract(f, theta).is_zero());

  // flat map values on the moving frame
  auto flat = [&](const PolyField& v) {
    return contract(v, theta) - eval(eta, {v}) * eta;
  };
  bool flat_ok = true;
  for (int j = 0; j < n; ++j) {
    flat_ok = flat_ok && flat(X[j]) == dy[j];
    flat_ok = flat_ok && flat(Y[j]) == -dx[j];
  }
  flat_ok = flat_ok && flat(f) == -eta;
  check("flat(X_j) = dy_j, flat(Y_j) = -dx_j, flat(F) = -eta", flat_ok);

  // pi = sum X_j ^ Y_j matches theta(flat^{-1}., flat^{-1}.) on the coframe
  PolyField pi(N, 2);
  for (int j = 0; j < n; ++j) pi += wedge(X[j], Y[j]);
  {
    std::vector<PolyForm> coframe;
    std::vector<PolyField> flat_inv;
    for (int j = 0; j < n; ++j) {
      coframe.push_back(dx[j]);
      flat_inv.push_back(-Y[j]);
      coframe.push_back(dy[j]);
      flat_inv.push_back(X[j]);
    }
    coframe.push_back(eta);
    flat_inv.push_back(-f);
    bool pi_ok = true;
    for (size_t a = 0; a < coframe.size() && pi_ok; ++a)
      for (size_t b = 0; b < coframe.size(); ++b) {
        std::vector<std::vector<Poly>> rows = {coords1(coframe[a]), coords1(coframe[b])};
        Poly lhs = detail::eval_on(pi, rows);
        Poly rhs = eval(theta, {flat_inv[a], flat_inv[b]});
        if (lhs != rhs) {
          pi_ok = false;
          break;
        }
      }
    check("pi = sum X_j ^ Y_j matches theta(flat^{-1}, flat^{-1})", pi_ok);
  }

  // Phi action with phi = 0: Phi(u) = pi_sharp(cov) + theta_flat(vec)
  auto phi_map = [&](const GenPolySection& u) {
    return GenPolySection(contract(u.cov, pi), contract(u.vec, theta));
  };
  auto vsec = [&](const PolyField& v) { return GenPolySection::from_field(v); };
  auto csec = [&](const PolyForm& c) { return GenPolySection::from_form(c); };
  bool phi_ok = true;
  for (int j = 0; j < n; ++j) {
    phi_ok = phi_ok && phi_map(vsec(X[j])) == csec(dy[j]);
    phi_ok = phi_ok && phi_map(vsec(Y[j])) == csec(-dx[j]);
    phi_ok = phi_ok && phi_map(csec(dx[j])) == vsec(Y[j]);
    phi_ok = phi_ok && phi_map(csec(dy[j])) == vsec(-X[j]);
  }
  phi_ok = phi_ok && phi_map(vsec(f)).is_zero() && phi_map(csec(eta)).is_zero();
  check("Phi action table on the moving frame", phi_ok);

  // E10 frame {X_j - i dy_j, Y_j + i dx_j}; E01 the conjugates
  std::vector<GenPolySection> e10, e01;
  Poly iP(kI);
  for (int j = 0; j < n; ++j) {
    e10.push_back(vsec(X[j]) - iP * csec(dy[j]));
    e10.push_back(vsec(Y[j]) + iP * csec(dx[j]));
    e01.push_back(vsec(X[j]) + iP * csec(dy[j]));
    e01.push_back(vsec(Y[j]) - iP * csec(dx[j]));
  }

  // full bracket table of L = {F} + E10 under the full Courant bracket
  bool table_ok = true;
  GenPolySection fsec = vsec(f);
  for (const auto& e : e10) table_ok = table_ok && pf_courant(fsec, e).is_zero();
  for (int a = 0; a < 2 * n; ++a)
    for (int b = a + 1; b < 2 * n; ++b) {
      GenPolySection br = pf_courant(e10[a], e10[b]);
      bool conjugate_pair = (a / 2 == b / 2);
      GenPolySection expected =
          conjugate_pair ? -fsec : GenPolySection(PolyField(N, 1), PolyForm(N, 1));
      table_ok = table_ok && br == expected;
    }
  check("L bracket table: [[F, e]] = 0, [[X_j - i dy_j, Y_j + i dx_j]] = -F", table_ok);

  bool lstar_ok = true;
  for (int j = 0; j < n; ++j) {
    lstar_ok = lstar_ok && pf_courant(e10[2 * j], csec(eta)) == csec(dy[j]);
    lstar_ok = lstar_ok && pf_courant(e10[2 * j + 1], csec(eta)) == csec(-dx[j]);
  }
  check("[[X_j - i dy_j, eta]] = dy_j and [[Y_j + i dx_j, eta]] = -dx_j", lstar_ok);

  // type decomposition of Q(u,v) = d eta(rho u, rho v)
  auto q = [&](const GenPolySection& u, const GenPolySection& v) {
    return eval(theta, {u.vec, v.vec});
  };
  auto project = [&](const GenPolySection& u, bool zero_one) {
    Poly etau = eval(eta, {u.vec});
    Poly alphaf = eval(u.cov, {f});
    GenPolySection u0 = u - etau * fsec - alphaf * csec(eta);
    GenPolySection img = phi_map(u0);
    Poly half(kHalf);
    return zero_one ? half * (u0 + iP * img) : half * (u0 - iP * img);
  };
  auto q20 = [&](const GenPolySection& u, const GenPolySection& v) {
    return q(project(u, true), project(v, true));
  };
  auto q11 = [&](const GenPolySection& u, const GenPolySection& v) {
    return q(project(u, true), project(v, false)) + q(project(u, false), project(v, true));
  };
  auto q02 = [&](const GenPolySection& u, const GenPolySection& v) {
    return q(project(u, false), project(v, false));
  };

  std::vector<BiFormTerm> w20, w02, w11;
  GaussRational quarter = exactnum::gauss(1, 4);
  for (int j = 0; j < n; ++j) {
    w20.push_back({quarter, csec(dx[j]) - iP * vsec(Y[j]), csec(dy[j]) + iP * vsec(X[j])});
    w02.push_back({quarter, csec(dx[j]) + iP * vsec(Y[j]), csec(dy[j]) - iP * vsec(X[j])});
    w11.push_back({kHalf, csec(dx[j]), csec(dy[j])});
    w11.push_back({kHalf, vsec(X[j]), vsec(Y[j])});
  }

  std::vector<GenPolySection> frame;
  for (int j = 0; j < n; ++j) {
    frame.push_back(vsec(X[j]));
    frame.push_back(vsec(Y[j]));
    frame.push_back(csec(dx[j]));
    frame.push_back(csec(dy[j]));
  }
  frame.push_back(fsec);
  frame.push_back(csec(eta));

  bool id20 = true, id11 = true, id02 = true, idsum = true;
  for (const auto& u : frame)
    for (const auto& v : frame) {
      Poly b20 = biform_eval(w20, u, v);
      Poly b11 = biform_eval(w11, u, v);
      Poly b02 = biform_eval(w02, u, v);
      if (q20(u, v) != b20) id20 = false;
      if (q11(u, v) != b11) id11 = false;
      if (q02(u, v) != b02) id02 = false;
      if (q(u, v) != b20 + b11 + b02) idsum = false;
    }
  check("(rho* d eta)^(2,0) = 1/4 sum (dx_j - i Y_j) ^ (dy_j + i X_j)", id20);
  check("(rho* d eta)^(1,1) = 1/2 (d eta + pi)", id11);
  check("(rho* d eta)^(0,2) = 1/4 sum (dx_j + i Y_j) ^ (dy_j - i X_j)", id02);
  check("type components sum to rho* d eta on the frame", idsum);

  // the (2,0) coefficient on an E01 pair is a nonzero constant, so the
  // closedness obstruction for L* vanishes nowhere on the chart
  Poly coeff = q20(e01[0], e01[1]);
  check("obstruction coefficient is a nonzero constant",
        coeff.is_constant() && !coeff.is_zero());
  report.obstruction_coefficient = -kHalf * coeff.constant_value();
  return report;
}

}  // namespace gcx::polyfield
