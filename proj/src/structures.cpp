#include "gcx/structures.hpp"

#include <array>

#include "gcx/liealg.hpp"

namespace gcx::structures {

namespace {

using exactnum::gauss;
using exactnum::RrefResult;

const GaussRational kOne(1);
const GaussRational kI = GaussRational::i();
const GaussRational kHalf = gauss(1, 2);

Matrix pi_sharp_matrix(const KVector& pi) {
  int n = pi.dim();
  Matrix m(n, n);
  for (int j = 0; j < n; ++j) {
    KVector img = multilinear::contract(KForm::basis(n, j), pi);
    auto c = multilinear::coords1(img);
    for (int r = 0; r < n; ++r) m.at(r, j) = c[r];
  }
  return m;
}

Matrix theta_flat_matrix(const KForm& theta) {
  int n = theta.dim();
  Matrix m(n, n);
  for (int j = 0; j < n; ++j) {
    KForm img = multilinear::contract(KVector::basis(n, j), theta);
    auto c = multilinear::coords1(img);
    for (int r = 0; r < n; ++r) m.at(r, j) = c[r];
  }
  return m;
}

Matrix block_map(const Matrix& phi, const Matrix& pi_sharp, const Matrix& theta_flat,
                 const Matrix& minus_phi_star) {
  int n = phi.rows();
  Matrix j(2 * n, 2 * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      j.at(r, c) = phi.at(r, c);
      j.at(r, n + c) = pi_sharp.at(r, c);
      j.at(n + r, c) = theta_flat.at(r, c);
      j.at(n + r, n + c) = minus_phi_star.at(r, c);
    }
  return j;
}

// Basis of { x : m x = 0 }.
std::vector<std::vector<GaussRational>> nullspace(const Matrix& m) {
  RrefResult red = exactnum::rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : red.pivot_cols) is_pivot[p] = true;
  std::vector<std::vector<GaussRational>> out;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaussRational> x(m.cols());
    x[free] = kOne;
    for (int k = 0; k < red.rank; ++k) x[red.pivot_cols[k]] = -red.reduced.at(k, free);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<GenVector> concat(std::vector<GenVector> a, const std::vector<GenVector>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

GaussRational q_form(const KForm& b, const GenVector& u, const GenVector& v) {
  return multilinear::eval(b, {courant::anchor(u), courant::anchor(v)});
}

}  // namespace

Matrix Gacs::big_phi() const {
  Matrix phi_m = phi.matrix();
  return block_map(phi_m, pi_sharp_matrix(pi), theta_flat_matrix(theta),
                   GaussRational(-1) * phi_m.transpose());
}

GenVector Gacs::apply_phi(const GenVector& v) const {
  KVector vec = phi.apply(v.vec()) + multilinear::contract(v.cov(), pi);
  KForm cov = multilinear::contract(v.vec(), theta) - phi.apply_dual(v.cov());
  return GenVector(v.algebra(), vec, cov);
}

GenVector Gacs::f_section() const { return GenVector::from_vector(algebra, F); }
GenVector Gacs::eta_section() const { return GenVector::from_covector(algebra, eta); }

std::vector<Violation> validate_gacs(const Gacs& j) {
  std::vector<Violation> out;
  const int n = j.algebra->dim();
  auto complain = [&](const std::string& rel, const std::string& detail) {
    out.push_back({rel, detail});
  };
  if (n % 2 == 0) complain("OddDimension", "algebra dimension must be odd");
  if (j.F.dim() != n || j.eta.dim() != n || j.pi.dim() != n || j.theta.dim() != n ||
      j.phi.dim() != n) {
    complain("Shape", "tensor dimensions disagree with the algebra");
    return out;
  }

  GaussRational etaF = multilinear::eval(j.eta, {j.F});
  if (etaF != kOne) complain("eta(F)=1", "eta(F) = " + etaF.str());

  Matrix phi_m = j.phi.matrix();
  Matrix pis = pi_sharp_matrix(j.pi);
  Matrix thf = theta_flat_matrix(j.theta);
  Matrix phi_t = phi_m.transpose();

  auto fc = multilinear::coords1(j.F);
  auto ec = multilinear::coords1(j.eta);

  // Relation 3 pieces
  if (!j.phi.apply(j.F).is_zero()) complain("Relation3", "phi(F) != 0");
  if (!multilinear::contract(j.F, j.theta).is_zero()) complain("Relation3", "iota_F theta != 0");
  if (!j.phi.apply_dual(j.eta).is_zero()) complain("Relation3", "eta o phi != 0");
  if (!multilinear::contract(j.eta, j.pi).is_zero()) complain("Relation3", "pi_sharp(eta) != 0");

  // Relation 1
  if (!(thf * phi_m == phi_t * thf))
    complain("Relation1", "theta_flat phi != phi* theta_flat");
  if (!(phi_m * pis == pis * phi_t)) complain("Relation1", "phi pi_sharp != pi_sharp phi*");

  // Relation 2
  Matrix f_otimes_eta(n, n), eta_otimes_f(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      f_otimes_eta.at(r, c) = fc[r] * ec[c];
      eta_otimes_f.at(r, c) = ec[r] * fc[c];
    }
  Matrix id = Matrix::identity(n);
  if (!(phi_m * phi_m + pis * thf == GaussRational(-1) * id + f_otimes_eta))
    complain("Relation2", "phi^2 + pi_sharp theta_flat != -I + F (x) eta");
  if (!(phi_t * phi_t + thf * pis == GaussRational(-1) * id + eta_otimes_f))
    complain("Relation2", "(phi*)^2 + theta_flat pi_sharp != -I + eta (x) F");

  // Assembled endomorphism identities
  Matrix big = j.big_phi();
  // skew-adjointness w.r.t. the symmetric pairing: Phi^T P + P Phi = 0 with
  // P = 1/2 [[0, I], [I, 0]]
  Matrix p(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    p.at(k, n + k) = kHalf;
    p.at(n + k, k) = kHalf;
  }
  if (!(big.transpose() * p + p * big).is_zero()) complain("SkewAdjoint", "Phi + Phi* != 0");

  Matrix fe(2 * n, 2 * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      fe.at(r, c) = f_otimes_eta.at(r, c);
      fe.at(n + r, n + c) = eta_otimes_f.at(r, c);
    }
  if (!(big * big == GaussRational(-1) * Matrix::identity(2 * n) + fe))
    complain("PhiSquared", "Phi^2 != -I + F (.) eta");

  return out;
}

EigenData eigenbundles(const Gacs& j) {
  const AlgebraPtr& alg = j.algebra;
  int n = alg->dim();

  // ker eta: vectors X with eta(X) = 0
  Matrix eta_row(1, n);
  auto ec = multilinear::coords1(j.eta);
  for (int c = 0; c < n; ++c) eta_row.at(0, c) = ec[c];
  auto ker_eta = nullspace(eta_row);
  // ker F: covectors a with a(F) = 0
  Matrix f_row(1, n);
  auto fc = multilinear::coords1(j.F);
  for (int c = 0; c < n; ++c) f_row.at(0, c) = fc[c];
  auto ker_f = nullspace(f_row);

  std::vector<GenVector> e10, e01;
  auto push = [&](const GenVector& e) {
    GenVector img = j.apply_phi(e);
    e10.push_back(e - kI * img);
    e01.push_back(e + kI * img);
  };
  for (const auto& x : ker_eta)
    push(GenVector::from_vector(alg, multilinear::vector_from_coords(x)));
  for (const auto& a : ker_f)
    push(GenVector::from_covector(alg, multilinear::form_from_coords(a)));

  EigenData data;
  data.E10 = SubbundleSpan(alg, e10);
  data.E01 = SubbundleSpan(alg, e01);
  if (data.E10.rank() != n - 1 || data.E01.rank() != n - 1)
    throw Error(ErrorKind::Precondition, "RankDefect",
                "eigenbundle rank is not dim-1; the quintuple violates Relation2");
  // canonical generator lists
  data.E10 = SubbundleSpan(alg, data.E10.canonical_generators());
  data.E01 = SubbundleSpan(alg, data.E01.canonical_generators());

  data.L_F = SubbundleSpan(alg, {j.f_section()});
  data.L_eta = SubbundleSpan(alg, {j.eta_section()});
  data.l_basis = concat({j.f_section()}, data.E10.generators());
  data.lstar_basis = concat({j.eta_section()}, data.E01.generators());
  data.L = SubbundleSpan(alg, data.l_basis);
  data.Lstar = SubbundleSpan(alg, data.lstar_basis);
  data.Lbar = SubbundleSpan(alg, concat({j.f_section()}, data.E01.generators()));
  data.Lbarstar = SubbundleSpan(alg, concat({j.eta_section()}, data.E10.generators()));
  return data;
}

std::string level_name(Level level) {
  switch (level) {
    case Level::Invalid: return "Invalid";
    case Level::AlmostOnly: return "AlmostOnly";
    case Level::GeneralizedContact: return "GeneralizedContact";
    case Level::StrongGeneralizedContact: return "StrongGeneralizedContact";
  }
  return "?";
}

TypeBlocks type_components(const Gacs& j, const KForm& b) {
  EigenData eig = eigenbundles(j);
  auto f = eig.E01.generators();
  auto e = eig.E10.generators();
  int m = static_cast<int>(f.size());
  TypeBlocks out{Matrix(m, m), Matrix(m, m), Matrix(m, m)};
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      out.block20.at(r, c) = q_form(b, f[r], f[c]);
      out.block11.at(r, c) = q_form(b, f[r], e[c]);
      out.block02.at(r, c) = q_form(b, e[r], e[c]);
    }
  return out;
}

Classification classify(const Gacs& j) {
  Classification cls;
  cls.violations = validate_gacs(j);
  if (!cls.violations.empty()) {
    cls.level = Level::Invalid;
    return cls;
  }
  EigenData eig = eigenbundles(j);
  cls.l_report = courant::closedness(eig.L);
  cls.lstar_report = courant::closedness(eig.Lstar);

  KForm deta = liealg::ce_d(*j.algebra, j.eta);
  TypeBlocks blocks = type_components(j, deta);
  bool type11 = blocks.block20.is_zero() && blocks.block02.is_zero();

  if (!cls.l_report.closed) {
    cls.level = Level::AlmostOnly;
  } else {
    // cross-check: given closed L, L* closes exactly when the (2,0) block of
    // d eta vanishes
    if (cls.lstar_report.closed != blocks.block20.is_zero())
      throw Error(ErrorKind::Internal, "ObstructionMismatch",
                  "closedness of L* disagrees with the (2,0) block of d eta");
    cls.level = cls.lstar_report.closed ? Level::StrongGeneralizedContact
                                        : Level::GeneralizedContact;
    cls.llstar_bialgebroid = type11;
    cls.obstruction_nonzero = !obstruction(j).is_zero();
  }

  // d eta restricted to ker eta
  Matrix eta_row(1, j.algebra->dim());
  auto ec = multilinear::coords1(j.eta);
  for (int c = 0; c < j.algebra->dim(); ++c) eta_row.at(0, c) = ec[c];
  auto ker = nullspace(eta_row);
  bool deta_on_ker_zero = true;
  for (size_t a = 0; a < ker.size(); ++a)
    for (size_t b = a + 1; b < ker.size(); ++b) {
      GaussRational v = multilinear::eval(deta, {multilinear::vector_from_coords(ker[a]),
                                                 multilinear::vector_from_coords(ker[b])});
      if (!v.is_zero()) deta_on_ker_zero = false;
    }
  cls.e_pair_bialgebroid = deta_on_ker_zero;
  return cls;
}

AltTensor obstruction(const Gacs& j) {
  EigenData eig = eigenbundles(j);
  auto l_report = courant::closedness(eig.L);
  if (!l_report.closed)
    throw Error(ErrorKind::Precondition, "LNotClosed",
                "the Nijenhuis obstruction formula requires closed L");

  SubbundleSpan lstar(j.algebra, eig.lstar_basis);
  int m = static_cast<int>(eig.lstar_basis.size());

  // packaged route: -1/2 F ^ (rho* d eta)^(2,0); in the [eta, f...] basis the
  // only surviving components sit on triples containing eta, with value
  // -1/2 d eta(rho f_i, rho f_j)
  KForm deta = liealg::ce_d(*j.algebra, j.eta);
  TypeBlocks blocks = type_components(j, deta);
  AltTensor packaged(3, lstar);
  for (int a = 1; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      packaged.set({0, a, b}, -kHalf * blocks.block20.at(a - 1, b - 1));

  // direct route: the cyclic pairing formula on every basis triple
  AltTensor direct(3, lstar);
  const auto& v = eig.lstar_basis;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c) {
        GaussRational s = courant::pairing(courant::courant_bracket(v[a], v[b]), v[c]) +
                          courant::pairing(courant::courant_bracket(v[b], v[c]), v[a]) +
                          courant::pairing(courant::courant_bracket(v[c], v[a]), v[b]);
        direct.set({a, b, c}, gauss(1, 3) * s);
      }

  if (!(packaged == direct))
    throw Error(ErrorKind::Internal, "ObstructionMismatch",
                "direct Nijenhuis evaluation disagrees with -1/2 F ^ (rho* d eta)^(2,0)");
  return direct;
}

namespace {

Matrix flat_matrix(const KForm& theta, const KForm& eta) {
  int n = theta.dim();
  auto ec = multilinear::coords1(eta);
  Matrix b(n, n);
  for (int jcol = 0; jcol < n; ++jcol) {
    KForm img = multilinear::contract(KVector::basis(n, jcol), theta);
    auto c = multilinear::coords1(img);
    GaussRational etaj = ec[jcol];
    for (int r = 0; r < n; ++r) b.at(r, jcol) = c[r] - etaj * ec[r];
  }
  return b;
}

KVector pi_from_flat(const KForm& theta, const Matrix& flat) {
  int n = theta.dim();
  Matrix inv = exactnum::inverse(flat);
  KVector pi(n, 2);
  for (int i = 0; i < n; ++i)
    for (int jc = i + 1; jc < n; ++jc) {
      std::vector<GaussRational> ci(n), cj(n);
      for (int r = 0; r < n; ++r) {
        ci[r] = inv.at(r, i);
        cj[r] = inv.at(r, jc);
      }
      GaussRational v = multilinear::eval(
          theta, {multilinear::vector_from_coords(ci), multilinear::vector_from_coords(cj)});
      pi.add_term({i, jc}, v);
    }
  return pi;
}

GaussRational volume_pairing(const AlgebraPtr& g, const KForm& eta, const KForm& theta) {
  int n2 = g->dim();
  int npairs = (n2 - 1) / 2;
  KForm top = eta;
  for (int k = 0; k < npairs; ++k) top = multilinear::wedge(top, theta);
  std::vector<KVector> basis;
  for (int k = 0; k < n2; ++k) basis.push_back(KVector::basis(n2, k));
  return multilinear::eval(top, basis);
}

Gacs finish_quintuple(const AlgebraPtr& g, const KVector& f, const KForm& eta, const KVector& pi,
                      const KForm& theta, const Endo& phi, const std::string& who) {
  Gacs j{g, f, eta, pi, theta, phi};
  auto violations = validate_gacs(j);
  if (!violations.empty())
    throw Error(ErrorKind::Internal, "ConstructorInvalid",
                who + " produced an invalid structure: " + violations[0].relation + " (" +
                    violations[0].detail + ")");
  return j;
}

}  // namespace

Gacs from_contact(const AlgebraPtr& g, const KForm& eta) {
  if (g->dim() % 2 == 0)
    throw Error(ErrorKind::Precondition, "NotContact", "contact forms need odd dimension");
  KForm theta = liealg::ce_d(*g, eta);
  if (volume_pairing(g, eta, theta).is_zero())
    throw Error(ErrorKind::Precondition, "NotContact",
                "eta ^ (d eta)^n vanishes on the basis volume");
  Matrix flat = flat_matrix(theta, eta);
  // F = flat^{-1}(-eta); for a contact form the flat map cannot be singular
  auto ec = multilinear::coords1(eta);
  std::vector<GaussRational> rhs(g->dim());
  for (int k = 0; k < g->dim(); ++k) rhs[k] = -ec[k];
  auto fcoords = exactnum::solve(flat, rhs);
  if (!fcoords)
    throw Error(ErrorKind::Internal, "SingularFlat", "flat map singular on a contact form");
  KVector f = multilinear::vector_from_coords(*fcoords);
  if (multilinear::eval(eta, {f}) != kOne || !multilinear::contract(f, theta).is_zero())
    throw Error(ErrorKind::Internal, "ReebFailure", "Reeb field equations not satisfied");
  KVector pi = pi_from_flat(theta, flat);
  return finish_quintuple(g, f, eta, pi, theta, Endo::zero(g->dim()), "from_contact");
}

CosymplecticResult from_cosymplectic(const AlgebraPtr& g, const KForm& eta, const KForm& theta) {
  if (g->dim() % 2 == 0)
    throw Error(ErrorKind::Precondition, "Degenerate",
                "almost cosymplectic pairs need odd dimension");
  if (volume_pairing(g, eta, theta).is_zero())
    throw Error(ErrorKind::Precondition, "Degenerate",
                "eta ^ theta^n vanishes on the basis volume");
  int n = g->dim();
  // F solves iota_F theta = 0, eta(F) = 1
  Matrix thf = theta_flat_matrix(theta);
  Matrix sys(n + 1, n);
  auto ec = multilinear::coords1(eta);
  for (int c = 0; c < n; ++c) sys.at(0, c) = ec[c];
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) sys.at(1 + r, c) = thf.at(r, c);
  std::vector<GaussRational> rhs(n + 1);
  rhs[0] = kOne;
  auto fcoords = exactnum::solve(sys, rhs);
  if (!fcoords)
    throw Error(ErrorKind::Precondition, "Degenerate", "no unique Reeb field for (eta, theta)");
  KVector f = multilinear::vector_from_coords(*fcoords);

  Matrix flat = flat_matrix(theta, eta);
  KVector pi = pi_from_flat(theta, flat);
  CosymplecticResult result{
      finish_quintuple(g, f, eta, pi, theta, Endo::zero(n), "from_cosymplectic"), true, {}};
  if (!liealg::ce_d(*g, eta).is_zero()) result.non_closed.push_back("eta");
  if (!liealg::ce_d(*g, theta).is_zero()) result.non_closed.push_back("theta");
  result.cosymplectic = result.non_closed.empty();
  return result;
}

Gacs from_almost_contact(const AlgebraPtr& g, const KVector& f, const KForm& eta,
                         const Endo& phi) {
  int n = g->dim();
  if (multilinear::eval(eta, {f}) != kOne)
    throw Error(ErrorKind::Precondition, "NotAlmostContact", "eta(F) != 1");
  // phi^2 = -I + F (x) eta
  auto fc = multilinear::coords1(f);
  auto ec = multilinear::coords1(eta);
  Matrix expected(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      expected.at(r, c) = fc[r] * ec[c] - (r == c ? kOne : GaussRational(0));
  if (!(phi.matrix() * phi.matrix() == expected))
    throw Error(ErrorKind::Precondition, "NotAlmostContact", "phi^2 != -I + F (x) eta");
  return finish_quintuple(g, f, eta, KVector(n, 2), KForm(n, 2), phi, "from_almost_contact");
}

NormalityReport is_normal(const AlgebraPtr& g, const KVector& f, const KForm& eta,
                          const Endo& phi) {
  NormalityReport report;
  int n = g->dim();
  KForm deta = liealg::ce_d(*g, eta);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      KVector x = g->basis_vector(a), y = g->basis_vector(b);
      KVector nphi = g->bracket(phi.apply(x), phi.apply(y)) +
                     phi.apply(phi.apply(g->bracket(x, y))) -
                     phi.apply(g->bracket(phi.apply(x), y) + g->bracket(x, phi.apply(y)));
      KVector residual = nphi + multilinear::eval(deta, {x, y}) * f;
      if (!residual.is_zero()) {
        report.normal = false;
        report.nijenhuis_residuals.push_back({{a, b}, residual});
      }
    }
  for (int a = 0; a < n; ++a) {
    KVector x = g->basis_vector(a);
    if (!(g->bracket(f, phi.apply(x)) - phi.apply(g->bracket(f, x))).is_zero()) {
      report.lie_f_phi_zero = false;
      report.normal = false;
    }
  }
  if (!liealg::lie_derivative(*g, f, eta).is_zero()) {
    report.lie_f_eta_zero = false;
    report.normal = false;
  }
  return report;
}

Matrix Gcs::big_j() const {
  Matrix phi_m = phi.matrix();
  return block_map(phi_m, pi_sharp_matrix(pi), theta_flat_matrix(theta),
                   GaussRational(-1) * phi_m.transpose());
}

std::vector<Violation> validate_gcs(const Gcs& j) {
  std::vector<Violation> out;
  int n = j.algebra->dim();
  if (n % 2 != 0) out.push_back({"EvenDimension", "generalized complex needs even dimension"});
  Matrix big = j.big_j();
  if (!(big * big == GaussRational(-1) * Matrix::identity(2 * n)))
    out.push_back({"JSquared", "J^2 != -I"});
  Matrix p(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    p.at(k, n + k) = kHalf;
    p.at(n + k, k) = kHalf;
  }
  if (!(big.transpose() * p + p * big).is_zero())
    out.push_back({"SkewAdjoint", "J + J* != 0"});
  return out;
}

SubbundleSpan minus_i_eigenspan(const Gcs& j) {
  int n2 = 2 * j.algebra->dim();
  Matrix m = j.big_j() + kI * Matrix::identity(n2);
  auto basis = nullspace(m);
  std::vector<GenVector> gens;
  for (const auto& row : basis) gens.push_back(GenVector::from_coords(j.algebra, row));
  return SubbundleSpan(j.algebra, gens);
}

IntegrabilityReport gcs_integrable(const Gcs& j) {
  auto violations = validate_gcs(j);
  if (!violations.empty())
    throw Error(ErrorKind::Validation, "InvalidGcs",
                violations[0].relation + ": " + violations[0].detail);
  auto span = minus_i_eigenspan(j);
  auto rep = courant::closedness(span);
  return {rep.closed, rep};
}

namespace {

AlgebraPtr make_kod4() {
  std::map<std::pair<int, int>, KVector> b;
  b[{0, 1}] = KVector::basis(4, 2);
  return std::make_shared<liealg::LieAlgebra>(4, std::move(b),
                                              liealg::LieAlgebra::Validate::Check, "e", "e");
}

}  // namespace

SubbundleSpan kodaira_row_span(const AlgebraPtr& kod4, const GaussRational& t1,
                               const GaussRational& t2, const GaussRational& t3,
                               const GaussRational& t4) {
  auto vec = [&](int k, GaussRational c) {
    std::vector<GaussRational> row(8);
    row[k] = c;
    return row;
  };
  auto add = [](std::vector<GaussRational> a, const std::vector<GaussRational>& b) {
    for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
  };
  auto scale = [](GaussRational s, std::vector<GaussRational> a) {
    for (auto& x : a) x = s * x;
    return a;
  };
  // ordered basis u1 = (e1 + i e2)/2, u2 = (e3 + i e4)/2 (vectors),
  // u3 = e1 + i e2, u4 = e3 + i e4 (covectors), then conjugates
  std::vector<std::vector<GaussRational>> u(9), ubar(9);
  u[1] = scale(kHalf, add(vec(0, kOne), vec(1, kI)));
  u[2] = scale(kHalf, add(vec(2, kOne), vec(3, kI)));
  u[3] = add(vec(4, kOne), vec(5, kI));
  u[4] = add(vec(6, kOne), vec(7, kI));
  for (int k = 1; k <= 4; ++k) {
    ubar[k] = u[k];
    for (auto& x : ubar[k]) x = x.conj();
  }
  std::vector<GenVector> rows;
  rows.push_back(GenVector::from_coords(kod4, add(u[1], add(scale(t3, ubar[1]), scale(t1, ubar[4])))));
  rows.push_back(GenVector::from_coords(
      kod4, add(u[2], add(scale(t2, ubar[2]), scale(-t1, ubar[3])))));
  rows.push_back(GenVector::from_coords(
      kod4, add(u[3], add(scale(t4, ubar[2]), scale(-t3, ubar[3])))));
  rows.push_back(GenVector::from_coords(
      kod4, add(u[4], add(scale(-t4, ubar[1]), scale(-t2, ubar[4])))));
  return SubbundleSpan(kod4, rows);
}

Gcs kodaira_family(const GaussRational& t1, const GaussRational& t2, const GaussRational& t3,
                   const GaussRational& t4) {
  AlgebraPtr kod4 = make_kod4();
  SubbundleSpan v = kodaira_row_span(kod4, t1, t2, t3, t4);
  if (!courant::is_isotropic(v))
    throw Error(ErrorKind::Precondition, "NonIsotropic",
                "the deformation rows are not isotropic at these parameters");
  SubbundleSpan vbar = v.conj();
  // transversality: rows and conjugate rows must span everything
  std::vector<GenVector> all = v.generators();
  for (const auto& g : vbar.generators()) all.push_back(g);
  SubbundleSpan whole(kod4, all);
  if (whole.rank() != 8)
    throw Error(ErrorKind::Precondition, "NonTransverse",
                "the deformation rows meet their conjugates at these parameters");

  // J = M diag(-i, +i) M^{-1} over the column basis [rows | conjugate rows]
  Matrix m(8, 8);
  for (int c = 0; c < 4; ++c) {
    auto col = v.generators()[c].coords();
    auto colbar = vbar.generators()[c].coords();
    for (int r = 0; r < 8; ++r) {
      m.at(r, c) = col[r];
      m.at(r, 4 + c) = colbar[r];
    }
  }
  Matrix d(8, 8);
  for (int k = 0; k < 4; ++k) {
    d.at(k, k) = -kI;
    d.at(4 + k, 4 + k) = kI;
  }
  Matrix big = m * d * exactnum::inverse(m);

  // unpack blocks
  Matrix phi_m(4, 4);
  KVector pi(4, 2);
  KForm theta(4, 2);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) phi_m.at(r, c) = big.at(r, c);
  for (int i = 0; i < 4; ++i)
    for (int jc = i + 1; jc < 4; ++jc) {
      pi.add_term({i, jc}, big.at(jc, 4 + i));        // pi(e^i, e^j) = B[j][i]
      theta.add_term({i, jc}, big.at(4 + jc, i));     // theta(e_i, e_j) = C[j][i]
    }
  Gcs out{kod4, pi, theta, Endo(phi_m)};
  if (!(out.big_j() == big))
    throw Error(ErrorKind::Internal, "BlockStructure",
                "reconstructed endomorphism is not of generalized complex block type");
  return out;
}

std::pair<AlgebraPtr, Gacs> lift_gcs(const AlgebraPtr& h, const KForm& omega, const Gcs& j) {
  auto integ = gcs_integrable(j);
  if (!integ.integrable)
    throw Error(ErrorKind::Precondition, "NotIntegrable",
                "the generalized complex structure is not integrable");
  AlgebraPtr g = std::make_shared<liealg::LieAlgebra>(liealg::central_extension(*h, omega));
  int n = h->dim();
  KVector f = KVector::basis(n + 1, n);
  KForm eta = KForm::basis(n + 1, n);
  KVector pi(n + 1, 2);
  for (const auto& [idx, c] : j.pi.terms()) pi.add_term(idx, c);
  KForm theta(n + 1, 2);
  for (const auto& [idx, c] : j.theta.terms()) theta.add_term(idx, c);
  Matrix phi_m(n + 1, n + 1);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) phi_m.at(r, c) = j.phi.matrix().at(r, c);
  Gacs lifted = finish_quintuple(g, f, eta, pi, theta, Endo(phi_m), "lift_gcs");
  return {g, lifted};
}

namespace {

struct McMachine {
  EigenData eig;
  SubbundleSpan l_span, lstar_span, e01_span;
  std::vector<GenVector> e10, e01;
  std::vector<GenVector> e10_dual;  // <f_i, dual_j> = delta_ij, dual in span E10

  explicit McMachine(const Gacs& j) : eig(eigenbundles(j)) {
    l_span = SubbundleSpan(j.algebra, eig.l_basis);
    lstar_span = SubbundleSpan(j.algebra, eig.lstar_basis);
    e10 = eig.E10.generators();
    e01 = eig.E01.generators();
    e01_span = SubbundleSpan(j.algebra, e01);
    int m = static_cast<int>(e10.size());
    Matrix gram(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) gram.at(r, c) = courant::pairing(e01[r], e10[c]);
    Matrix inv = exactnum::inverse(gram);
    for (int i = 0; i < m; ++i) {
      GenVector dual = inv.at(0, i) * e10[0];
      for (int a = 1; a < m; ++a) dual += inv.at(a, i) * e10[a];
      e10_dual.push_back(dual);
    }
  }
};

// coefficients of Gamma over the canonical f_i ^ f_j basis
std::map<std::vector<int>, GaussRational> gamma_coeffs(const McMachine& mm, const BiVec& gamma) {
  std::map<std::vector<int>, GaussRational> out;
  int m = static_cast<int>(mm.e01.size());
  for (const auto& term : gamma.terms) {
    auto ca = mm.e01_span.coords_in_generators(term.a);
    auto cb = mm.e01_span.coords_in_generators(term.b);
    if (!ca || !cb)
      throw Error(ErrorKind::Precondition, "OutsideSpan",
                  "deformation parameter is not a section of wedge^2 E01");
    for (int i = 0; i < m; ++i)
      for (int jc = i + 1; jc < m; ++jc) {
        GaussRational v = term.c * ((*ca)[i] * (*cb)[jc] - (*ca)[jc] * (*cb)[i]);
        if (v.is_zero()) continue;
        auto& slot = out[{i, jc}];
        slot += v;
        if (slot.is_zero()) out.erase({i, jc});
      }
  }
  return out;
}

}  // namespace

namespace {

// residual coordinates of d_E Gamma + 1/2 [[Gamma, Gamma]] over the wedge
// basis of the supplied E01 generator list (with the matching E10 duals)
std::map<std::vector<int>, GaussRational> mc_residual_coords(
    const Gacs& j, const std::vector<GenVector>& l_basis, const SubbundleSpan& l_span,
    const SubbundleSpan& lstar_span, const std::vector<GenVector>& e01,
    const std::vector<GenVector>& e10, const BiVec& gamma) {
  SubbundleSpan e01_span(j.algebra, e01);
  int m = static_cast<int>(e01.size());

  Matrix gram(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) gram.at(r, c) = courant::pairing(e01[r], e10[c]);
  Matrix inv = exactnum::inverse(gram);
  std::vector<GenVector> e10_dual;
  for (int i = 0; i < m; ++i) {
    GenVector dual = inv.at(0, i) * e10[0];
    for (int a = 1; a < m; ++a) dual += inv.at(a, i) * e10[a];
    e10_dual.push_back(dual);
  }

  std::map<std::vector<int>, GaussRational> coeffs;
  for (const auto& term : gamma.terms) {
    auto ca = e01_span.coords_in_generators(term.a);
    auto cb = e01_span.coords_in_generators(term.b);
    if (!ca || !cb)
      throw Error(ErrorKind::Precondition, "OutsideSpan",
                  "deformation parameter is not a section of wedge^2 E01");
    for (int i = 0; i < m; ++i)
      for (int jc = i + 1; jc < m; ++jc) {
        GaussRational v = term.c * ((*ca)[i] * (*cb)[jc] - (*ca)[jc] * (*cb)[i]);
        if (v.is_zero()) continue;
        auto& slot = coeffs[{i, jc}];
        slot += v;
        if (slot.is_zero()) coeffs.erase({i, jc});
      }
  }

  // Gamma as a 2-form on L through the scale-1 duality
  AltTensor xi(2, l_span);
  int lb = static_cast<int>(l_basis.size());
  for (int a = 0; a < lb; ++a)
    for (int b = a + 1; b < lb; ++b) {
      GaussRational v;
      for (const auto& [idx, c] : coeffs) {
        const GenVector& f1 = e01[idx[0]];
        const GenVector& f2 = e01[idx[1]];
        const GenVector& u = l_basis[a];
        const GenVector& w = l_basis[b];
        v += c * (courant::pairing(f1, u) * courant::pairing(f2, w) -
                  courant::pairing(f1, w) * courant::pairing(f2, u));
      }
      xi.set({a, b}, v);
    }
  AltTensor dxi = courant::dirac_d(l_span, lstar_span, xi);

  std::map<std::vector<int>, GaussRational> out;
  // d_E Gamma: evaluation on dual triples projects along the eta line
  for (int i = 0; i < m; ++i)
    for (int jc = i + 1; jc < m; ++jc)
      for (int k = jc + 1; k < m; ++k) {
        GaussRational v = dxi.eval({e10_dual[i], e10_dual[jc], e10_dual[k]});
        if (!v.is_zero()) out[{i, jc, k}] = v;
      }

  // + 1/2 [[Gamma, Gamma]] expanded over the f basis
  courant::TriVec br = courant::schouten(gamma, gamma, &e01_span);
  for (const auto& term : br.terms) {
    auto ca = e01_span.coords_in_generators(term.a);
    auto cb = e01_span.coords_in_generators(term.b);
    auto cd = e01_span.coords_in_generators(term.d);
    if (!ca || !cb || !cd)
      throw Error(ErrorKind::Internal, "OutsideSpan",
                  "Schouten bracket escaped E01 on a strong structure");
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        for (int z = 0; z < m; ++z) {
          if ((*ca)[x].is_zero() || (*cb)[y].is_zero() || (*cd)[z].is_zero()) continue;
          std::vector<int> idx{x, y, z};
          int sign = detail::sort_sign(idx);
          if (sign == 0) continue;
          GaussRational v = kHalf * term.c * (*ca)[x] * (*cb)[y] * (*cd)[z];
          if (sign < 0) v = -v;
          auto& slot = out[idx];
          slot += v;
          if (slot.is_zero()) out.erase(idx);
        }
  }
  return out;
}

// value of the wedge-coefficient tensor as a functional on generalized triples
GaussRational wedge_tensor_eval(const std::map<std::vector<int>, GaussRational>& coords,
                                const std::vector<GenVector>& basis, const GenVector& u,
                                const GenVector& v, const GenVector& w) {
  GaussRational total;
  for (const auto& [idx, c] : coords) {
    const GenVector &a = basis[idx[0]], &b = basis[idx[1]], &d = basis[idx[2]];
    std::array<std::array<GaussRational, 3>, 3> p;
    for (int col = 0; col < 3; ++col) {
      const GenVector& arg = col == 0 ? u : (col == 1 ? v : w);
      p[0][col] = courant::pairing(a, arg);
      p[1][col] = courant::pairing(b, arg);
      p[2][col] = courant::pairing(d, arg);
    }
    GaussRational det = p[0][0] * (p[1][1] * p[2][2] - p[1][2] * p[2][1]) -
                        p[0][1] * (p[1][0] * p[2][2] - p[1][2] * p[2][0]) +
                        p[0][2] * (p[1][0] * p[2][1] - p[1][1] * p[2][0]);
    total += c * det;
  }
  return total;
}

}  // namespace

McResidual mc_check(const Gacs& j, const DeformParam& gamma) {
  auto violations = validate_gacs(j);
  if (!violations.empty())
    throw Error(ErrorKind::Precondition, "NotStrong", "structure is not even valid");
  McMachine mm(j);
  if (!courant::closedness(mm.l_span).closed || !courant::closedness(mm.lstar_span).closed)
    throw Error(ErrorKind::Precondition, "NotStrong",
                "Maurer-Cartan deformation requires a strong structure");

  McResidual residual;
  residual.coords = mc_residual_coords(j, mm.eig.l_basis, mm.l_span, mm.lstar_span, mm.e01,
                                       mm.e10, gamma.gamma);

  // the projection along the eta line cannot depend on the chosen E01 basis:
  // recompute in a shuffled, recombined basis and compare as functionals
  int m = static_cast<int>(mm.e01.size());
  if (m >= 2) {
    std::vector<GenVector> f2(mm.e01.begin() + 1, mm.e01.end());
    f2.push_back(mm.e01[0] + mm.e01[1]);
    std::vector<GenVector> e2(mm.e10.begin() + 1, mm.e10.end());
    e2.push_back(mm.e10[0] + mm.e10[1]);
    std::vector<GenVector> l2 = {mm.eig.l_basis[0]};
    l2.insert(l2.end(), e2.begin(), e2.end());
    auto shuffled = mc_residual_coords(j, l2, SubbundleSpan(j.algebra, l2), mm.lstar_span, f2,
                                       e2, gamma.gamma);
    for (int i = 0; i < m; ++i)
      for (int jc = i + 1; jc < m; ++jc)
        for (int k = jc + 1; k < m; ++k) {
          GaussRational a = wedge_tensor_eval(residual.coords, mm.e01, mm.e10_dual[i],
                                              mm.e10_dual[jc], mm.e10_dual[k]);
          GaussRational b = wedge_tensor_eval(shuffled, f2, mm.e10_dual[i], mm.e10_dual[jc],
                                              mm.e10_dual[k]);
          if (a != b)
            throw Error(ErrorKind::Internal, "ProjectionBasisDependence",
                        "d_E projection disagrees across E01 bases");
        }
  }
  return residual;
}

SubbundleSpan deform_E(const Gacs& j, const DeformParam& gamma, const GaussRational& t) {
  DeformParam scaled{gamma.gamma.scaled(t)};
  if (!mc_check(j, scaled).is_zero())
    throw Error(ErrorKind::Precondition, "MCViolated",
                "t Gamma does not satisfy the Maurer-Cartan equation");
  EigenData eig = eigenbundles(j);
  std::vector<GenVector> graph;
  for (const auto& e : eig.E10.generators()) {
    GenVector image = GaussRational(0) * e;
    for (const auto& term : scaled.gamma.terms) {
      image += (term.c * courant::pairing(e, term.a)) * term.b;
      image -= (term.c * courant::pairing(e, term.b)) * term.a;
    }
    graph.push_back(e + image);
  }
  return SubbundleSpan(j.algebra, graph);
}

Gacs rescale(const Gacs& j, const GaussRational& f) {
  if (f.is_zero() || !f.is_real())
    throw Error(ErrorKind::Precondition, "BadRescale",
                "rescaling factor must be real and nonzero");
  return Gacs{j.algebra, f.inverse() * j.F, f * j.eta, j.pi, j.theta, j.phi};
}

}  // namespace gcx::structures
