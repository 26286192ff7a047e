#include "gcx/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace gcx::catalog {

using courant::courant_bracket;
using courant::GenVector;
using courant::SubbundleSpan;
using exactnum::gauss;
using liealg::LieAlgebra;
using multilinear::Endo;
using multilinear::KForm;
using multilinear::KVector;
using structures::Classification;
using structures::EigenData;
using structures::Gacs;
using structures::Gcs;
using structures::Level;

namespace {

const GaussRational kOne(1);
const GaussRational kI = GaussRational::i();

AlgebraPtr make(int dim, std::map<std::pair<int, int>, KVector> b, const char* vp,
                const char* cp) {
  return std::make_shared<LieAlgebra>(dim, std::move(b), LieAlgebra::Validate::Check, vp, cp);
}

GenVector gv(const AlgebraPtr& a, std::vector<std::pair<int, GaussRational>> vec,
             std::vector<std::pair<int, GaussRational>> cov) {
  KVector v(a->dim(), 1);
  KForm c(a->dim(), 1);
  for (auto& [k, s] : vec) v.add_term({k}, s);
  for (auto& [k, s] : cov) c.add_term({k}, s);
  return GenVector(a, v, c);
}

std::string span_str(const SubbundleSpan& s) {
  std::ostringstream os;
  os << "span{";
  const auto& g = s.generators();
  for (size_t k = 0; k < g.size(); ++k) {
    if (k) os << ", ";
    os << g[k].str();
  }
  os << "}";
  return os.str();
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

struct Runner {
  EntryResult result;

  explicit Runner(std::string entry) { result.entry = std::move(entry); }

  void expect(const std::string& name, Source prov, bool pass, std::string expected = "",
              std::string actual = "") {
    result.expectations.push_back({name, prov, pass, std::move(expected), std::move(actual)});
  }
  void expect_eq(const std::string& name, Source prov, const GenVector& got,
                 const GenVector& want) {
    expect(name, prov, got == want, want.str(), got.str());
  }
  void expect_span(const std::string& name, Source prov, const SubbundleSpan& got,
                   const SubbundleSpan& want) {
    expect(name, prov, span_equal(got, want), span_str(want), span_str(got));
  }
  void expect_level(const std::string& name, Source prov, Level got, Level want) {
    expect(name, prov, got == want, structures::level_name(want), structures::level_name(got));
  }
  void expect_flag(const std::string& name, Source prov, bool got, bool want) {
    expect(name, prov, got == want, bool_str(want), bool_str(got));
  }
};

GaussRational param_or(const Params& p, const std::string& key, const GaussRational& fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

void require_real(const GaussRational& v, const std::string& key) {
  if (!v.is_real())
    throw Error(ErrorKind::Precondition, "BadParams", "parameter " + key + " must be real");
}

}  // namespace

AlgebraPtr su2() {
  std::map<std::pair<int, int>, KVector> b;
  b[{0, 1}] = -KVector::basis(3, 2);
  b[{1, 2}] = -KVector::basis(3, 0);
  b[{0, 2}] = KVector::basis(3, 1);
  return make(3, std::move(b), "X", "s");
}

AlgebraPtr h3() {
  std::map<std::pair<int, int>, KVector> b;
  b[{0, 1}] = -KVector::basis(3, 2);
  return make(3, std::move(b), "X", "a");
}

AlgebraPtr kod4() {
  std::map<std::pair<int, int>, KVector> b;
  b[{0, 1}] = KVector::basis(4, 2);
  return make(4, std::move(b), "e", "e");
}

AlgebraPtr kod5() {
  std::map<std::pair<int, int>, KVector> b;
  b[{0, 1}] = KVector::basis(5, 2);
  b[{0, 2}] = -KVector::basis(5, 4);
  b[{1, 3}] = KVector::basis(5, 4);
  return make(5, std::move(b), "e", "e");
}

Gacs su2_normal_gacs() {
  Endo phi = Endo::rank_one(KVector::basis(3, 1), KForm::basis(3, 0)) -
             Endo::rank_one(KVector::basis(3, 0), KForm::basis(3, 1));
  return structures::from_almost_contact(su2(), KVector::basis(3, 2), KForm::basis(3, 2), phi);
}

Gacs su2_contact_gacs() { return structures::from_contact(su2(), KForm::basis(3, 2)); }

Gacs h3_cosymplectic_gacs(const GaussRational& a, const GaussRational& b) {
  require_real(a, "a");
  require_real(b, "b");
  KForm theta = multilinear::wedge(KForm::basis(3, 1), KForm::basis(3, 2)) +
                a * multilinear::wedge(KForm::basis(3, 0), KForm::basis(3, 1)) +
                b * multilinear::wedge(KForm::basis(3, 0), KForm::basis(3, 2));
  return structures::from_cosymplectic(h3(), KForm::basis(3, 0), theta).j;
}

Gacs h3_family_gacs(const GaussRational& r, const GaussRational& c, const GaussRational& s) {
  require_real(r, "r");
  require_real(c, "c");
  require_real(s, "s");
  if (c * c + s * s != kOne)
    throw Error(ErrorKind::Precondition, "BadParams", "(c, s) must satisfy c^2 + s^2 = 1");
  if (r == kOne || r == GaussRational(-1))
    throw Error(ErrorKind::Precondition, "BadParams",
                "r = +-1 is outside the family (1 - r^2 divides)");
  GaussRational denom = kOne - r * r;
  GaussRational u = GaussRational(2) * r * c / denom;
  GaussRational big_a = (r * r - GaussRational(2) * r * s + kOne) / denom;
  GaussRational big_b = (r * r + GaussRational(2) * r * s + kOne) / denom;
  Endo phi = u * (Endo::rank_one(KVector::basis(3, 1), KForm::basis(3, 1)) +
                  Endo::rank_one(KVector::basis(3, 2), KForm::basis(3, 2)));
  KForm theta = big_a * multilinear::wedge(KForm::basis(3, 1), KForm::basis(3, 2));
  KVector pi = big_b * multilinear::wedge(KVector::basis(3, 1), KVector::basis(3, 2));
  return Gacs{h3(), KVector::basis(3, 0), KForm::basis(3, 0), pi, theta, phi};
}

Gcs kod4_complex_gcs() {
  return structures::kodaira_family(GaussRational(0), GaussRational(0), GaussRational(0),
                                    GaussRational(0));
}

Gacs kod5_contact_gacs() { return structures::from_contact(kod5(), KForm::basis(5, 4)); }

Gacs kod5_lift_gacs() {
  KForm omega = -(multilinear::wedge(KForm::basis(4, 0), KForm::basis(4, 2)) -
                  multilinear::wedge(KForm::basis(4, 1), KForm::basis(4, 3)));
  return structures::lift_gcs(kod4(), omega, kod4_complex_gcs()).second;
}

structures::DeformParam h3_mc_gamma() {
  auto h = h3();
  GenVector f1 = gv(h, {{2, kI}}, {{1, kOne}});   // a2 + i X3
  GenVector f2 = gv(h, {{1, -kI}}, {{2, kOne}});  // a3 - i X2
  return structures::DeformParam{courant::BiVec::decomposable(f1, f2)};
}

namespace {

EntryResult run_su2_normal(const Params&) {
  Runner r("su2_normal");
  Gacs j = su2_normal_gacs();
  auto a = j.algebra;
  Classification c = structures::classify(j);
  r.expect_level("classify", Source::Reference, c.level, Level::StrongGeneralizedContact);
  r.expect_flag("llstar_bialgebroid", Source::Reference, c.llstar_bialgebroid, true);
  r.expect_flag("e_pair_bialgebroid", Source::Reference, c.e_pair_bialgebroid, false);

  EigenData eig = structures::eigenbundles(j);
  GenVector g1 = gv(a, {{0, kOne}, {1, -kI}}, {});  // X1 - i X2
  GenVector g2 = gv(a, {}, {{0, kOne}, {1, -kI}});  // s1 - i s2
  r.expect_span("E10", Source::Reference, eig.E10, SubbundleSpan(a, {g1, g2}));

  GenVector x3 = gv(a, {{2, kOne}}, {});
  GenVector s3 = gv(a, {}, {{2, kOne}});
  r.expect_eq("[[X3, X1 - i X2]]", Source::Reference, courant_bracket(x3, g1), -kI * g1);
  r.expect_eq("[[X3, s1 - i s2]]", Source::Reference, courant_bracket(x3, g2), -kI * g2);
  r.expect_eq("[[s3, X1 + i X2]]", Source::Reference, courant_bracket(s3, g1.conj()),
              kI * g2.conj());
  r.expect_eq("[[X1 - i X2, X1 + i X2]]", Source::Reference, courant_bracket(g1, g1.conj()),
              gv(a, {{2, GaussRational(-2) * kI}}, {}));
  return r.result;
}

EntryResult run_su2_contact(const Params&) {
  Runner r("su2_contact");
  Gacs j = su2_contact_gacs();
  auto a = j.algebra;
  Classification c = structures::classify(j);
  r.expect_level("classify", Source::Reference, c.level, Level::GeneralizedContact);
  r.expect_flag("obstruction_nonzero", Source::Reference, c.obstruction_nonzero, true);

  GenVector x3 = gv(a, {{2, kOne}}, {});
  GenVector e1 = gv(a, {{0, kOne}}, {{1, -kI}});
  GenVector e2 = gv(a, {{1, kOne}}, {{0, kI}});
  GenVector s3 = gv(a, {}, {{2, kOne}});
  r.expect_eq("[[X3, X1 - i s2]]", Source::Reference, courant_bracket(x3, e1), -e2);
  r.expect_eq("[[X1 - i s2, X2 + i s1]]", Source::Reference, courant_bracket(e1, e2), -x3);
  r.expect_eq("[[s3, X1 + i s2]]", Source::Reference, courant_bracket(s3, e1.conj()),
              gv(a, {}, {{1, -kOne}}));
  r.expect_eq("[[s3, X2 - i s1]]", Source::Reference, courant_bracket(s3, e2.conj()),
              gv(a, {}, {{0, kOne}}));

  courant::AltTensor nij = structures::obstruction(j);
  GaussRational got = nij.eval({e1.conj(), e2.conj(), s3});
  r.expect("nij(X1 + i s2, X2 - i s1, s3)", Source::Oracle, got == gauss(-1, 2), "-1/2",
           got.str());
  return r.result;
}

EntryResult run_h3_cosymplectic(const Params& p) {
  GaussRational a = param_or(p, "a", GaussRational(0));
  GaussRational b = param_or(p, "b", GaussRational(0));
  Runner r("h3_cosymplectic(a=" + a.str() + ",b=" + b.str() + ")");
  Gacs j = h3_cosymplectic_gacs(a, b);
  auto h = j.algebra;

  KVector f_expected = KVector::basis(3, 0) - b * KVector::basis(3, 1) + a * KVector::basis(3, 2);
  r.expect("F = X1 - b X2 + a X3", Source::Reference, j.F == f_expected);
  r.expect("pi = X2 ^ X3", Source::Reference,
           j.pi == multilinear::wedge(KVector::basis(3, 1), KVector::basis(3, 2)));

  Classification c = structures::classify(j);
  r.expect_level("classify", Source::Reference, c.level, Level::StrongGeneralizedContact);
  r.expect_flag("llstar_bialgebroid", Source::Reference, c.llstar_bialgebroid, true);
  r.expect_flag("e_pair_bialgebroid", Source::Reference, c.e_pair_bialgebroid, true);

  EigenData eig = structures::eigenbundles(j);
  bool lstar_zero = true;
  const auto& ls = eig.lstar_basis;
  for (size_t x = 0; x < ls.size(); ++x)
    for (size_t y = x + 1; y < ls.size(); ++y)
      if (!courant_bracket(ls[x], ls[y]).is_zero()) lstar_zero = false;
  r.expect("all L* brackets vanish", Source::Reference, lstar_zero, "0");

  GenVector gen2 = gv(h, {{1, kOne}}, {{2, -kI}, {0, kI * a}});
  GenVector gen3 = gv(h, {{2, kOne}}, {{1, kI}, {0, kI * b}});
  r.expect_eq("[[F, X2 - i a3 + i a a1]]", Source::Reference,
              courant_bracket(j.f_section(), gen2), -gen3);
  r.expect_span("L", Source::Reference, eig.L, SubbundleSpan(h, {j.f_section(), gen2, gen3}));
  return r.result;
}

EntryResult run_h3_family(const Params& p) {
  GaussRational rr = param_or(p, "r", gauss(1, 2));
  GaussRational c = param_or(p, "c", gauss(3, 5));
  GaussRational s = param_or(p, "s", gauss(4, 5));
  Runner r("h3_family(r=" + rr.str() + ",c=" + c.str() + ",s=" + s.str() + ")");
  Gacs j = h3_family_gacs(rr, c, s);
  auto h = j.algebra;
  r.expect("validate_gacs", Source::Oracle, structures::validate_gacs(j).empty(), "valid");

  Classification cls = structures::classify(j);
  r.expect_level("classify", Source::Reference, cls.level, Level::StrongGeneralizedContact);

  GaussRational rs = rr * s, rc = rr * c;
  GenVector l2 = gv(h, {{1, kOne + rs - kI * rc}}, {{2, rc - kI * (kOne - rs)}});
  GenVector l3 = gv(h, {{2, kOne + rs - kI * rc}}, {{1, -rc + kI * (kOne - rs)}});
  GenVector ls2 = gv(h, {{2, -rc + kI * (kOne + rs)}}, {{1, kOne - rs - kI * rc}});
  GenVector ls3 = gv(h, {{1, rc - kI * (kOne + rs)}}, {{2, kOne - rs - kI * rc}});
  GenVector x1 = gv(h, {{0, kOne}}, {});
  GenVector a1 = gv(h, {}, {{0, kOne}});

  EigenData eig = structures::eigenbundles(j);
  r.expect_span("L_t", Source::Reference, eig.L, SubbundleSpan(h, {x1, l2, l3}));
  r.expect_span("L_t*", Source::Reference, eig.Lstar, SubbundleSpan(h, {a1, ls2, ls3}));

  bool lstar_zero = true;
  for (const auto& u : {a1, ls2, ls3})
    for (const auto& v : {a1, ls2, ls3})
      if (!courant_bracket(u, v).is_zero()) lstar_zero = false;
  r.expect("all L_t* brackets vanish", Source::Reference, lstar_zero, "0");

  r.expect_eq("sole L_t bracket [[X1, gen2]] = -gen3", Source::Reference,
              courant_bracket(x1, l2), -l3);
  r.expect("[[X1, gen3]] = 0", Source::Reference, courant_bracket(x1, l3).is_zero(), "0");
  r.expect("[[gen2, gen3]] = 0", Source::Reference, courant_bracket(l2, l3).is_zero(), "0");
  return r.result;
}

EntryResult run_h3_family_limit(const Params&) {
  Runner r("h3_family_limit");
  KForm theta = -multilinear::wedge(KForm::basis(3, 1), KForm::basis(3, 2));
  auto res = structures::from_cosymplectic(h3(), KForm::basis(3, 0), theta);
  r.expect("cosymplectic pair", Source::Reference, res.cosymplectic, "true");
  Classification c = structures::classify(res.j);
  r.expect_level("classify", Source::Reference, c.level, Level::StrongGeneralizedContact);
  r.expect("F = X1", Source::Oracle, res.j.F == KVector::basis(3, 0), "X1");
  return r.result;
}

EntryResult run_h3_deformation(const Params& p) {
  GaussRational rr = param_or(p, "r", gauss(1, 2));
  GaussRational c = param_or(p, "c", gauss(3, 5));
  GaussRational s = param_or(p, "s", gauss(4, 5));
  Runner r("h3_deformation(r=" + rr.str() + ",c=" + c.str() + ",s=" + s.str() + ")");
  require_real(rr, "r");
  require_real(c, "c");
  require_real(s, "s");
  if (c * c + s * s != kOne)
    throw Error(ErrorKind::Precondition, "BadParams", "(c, s) must satisfy c^2 + s^2 = 1");
  Gacs base = h3_cosymplectic_gacs(GaussRational(0), GaussRational(0));
  structures::DeformParam gamma = h3_mc_gamma();
  GaussRational t = rr * (c + kI * s);

  structures::DeformParam scaled{gamma.gamma.scaled(t)};
  auto residual = structures::mc_check(base, scaled);
  r.expect("mc_check(t Gamma) = 0", Source::Reference, residual.is_zero(), "0");

  SubbundleSpan graph = structures::deform_E(base, gamma, t);
  Gacs jt = h3_family_gacs(rr, c, s);
  EigenData eig = structures::eigenbundles(jt);
  r.expect_span("deform_E(t Gamma) = E10 of J_t", Source::Reference, graph, eig.E10);

  SubbundleSpan at0 = structures::deform_E(base, gamma, GaussRational(0));
  r.expect_span("t = 0 recovers E10", Source::Reference, at0,
                structures::eigenbundles(base).E10);
  return r.result;
}

EntryResult run_kod4_complex(const Params&) {
  Runner r("kod4_complex");
  Gcs j = kod4_complex_gcs();
  r.expect("validate_gcs", Source::Reference, structures::validate_gcs(j).empty(), "valid");
  r.expect("J e1 = e2", Source::Reference,
           j.phi.apply(KVector::basis(4, 0)) == KVector::basis(4, 1), "e2");
  r.expect("J e3 = e4", Source::Reference,
           j.phi.apply(KVector::basis(4, 2)) == KVector::basis(4, 3), "e4");
  r.expect("integrable", Source::Reference, structures::gcs_integrable(j).integrable, "true");
  return r.result;
}

EntryResult run_kodaira_family(const Params& p) {
  GaussRational zero(0);
  GaussRational t1 = param_or(p, "t1", zero), t2 = param_or(p, "t2", zero),
                t3 = param_or(p, "t3", zero), t4 = param_or(p, "t4", zero);
  Runner r("kodaira_family(t1=" + t1.str() + ",t2=" + t2.str() + ",t3=" + t3.str() +
           ",t4=" + t4.str() + ")");
  Gcs j = structures::kodaira_family(t1, t2, t3, t4);
  r.expect("validate_gcs", Source::Reference, structures::validate_gcs(j).empty(), "valid");
  r.expect("integrable", Source::Reference, structures::gcs_integrable(j).integrable, "true");
  r.expect_span("eigenspan equals the deformation rows", Source::Reference,
                structures::minus_i_eigenspan(j),
                structures::kodaira_row_span(j.algebra, t1, t2, t3, t4));
  return r.result;
}

EntryResult run_kod5_contact(const Params&) {
  Runner r("kod5_J1");
  Gacs j = kod5_contact_gacs();
  r.expect("F = e5", Source::Reference, j.F == KVector::basis(5, 4), "e5");
  r.expect("theta = e1^e3 - e2^e4", Source::Reference,
           j.theta == multilinear::wedge(KForm::basis(5, 0), KForm::basis(5, 2)) -
                          multilinear::wedge(KForm::basis(5, 1), KForm::basis(5, 3)));
  r.expect("pi = e1^e3 - e2^e4", Source::Reference,
           j.pi == multilinear::wedge(KVector::basis(5, 0), KVector::basis(5, 2)) -
                       multilinear::wedge(KVector::basis(5, 1), KVector::basis(5, 3)));
  r.expect("phi = 0", Source::Reference, j.phi.is_zero(), "0");
  Classification c = structures::classify(j);
  r.expect_level("classify", Source::Reference, c.level, Level::GeneralizedContact);
  return r.result;
}

EntryResult run_kod5_lift(const Params&) {
  Runner r("kod5_J0");
  Gacs j = kod5_lift_gacs();
  Endo expected_phi = Endo::rank_one(KVector::basis(5, 1), KForm::basis(5, 0)) -
                      Endo::rank_one(KVector::basis(5, 0), KForm::basis(5, 1)) +
                      Endo::rank_one(KVector::basis(5, 3), KForm::basis(5, 2)) -
                      Endo::rank_one(KVector::basis(5, 2), KForm::basis(5, 3));
  r.expect("phi = e2(x)e1 - e1(x)e2 + e4(x)e3 - e3(x)e4", Source::Reference,
           j.phi == expected_phi);
  Classification c = structures::classify(j);
  r.expect_level("classify", Source::Reference, c.level, Level::GeneralizedContact);

  KForm deta = liealg::ce_d(*j.algebra, j.eta);
  structures::TypeBlocks blocks = structures::type_components(j, deta);
  r.expect("d eta type (2,0) + (0,2): (1,1) block zero", Source::Reference,
           blocks.block11.is_zero(), "0");
  r.expect("d eta type (2,0) + (0,2): (2,0) block nonzero", Source::Reference,
           !blocks.block20.is_zero(), "nonzero");

  auto rep = structures::is_normal(j.algebra, j.F, j.eta, j.phi);
  r.expect_flag("is_normal", Source::Reference, rep.normal, false);
  return r.result;
}

Params ps(std::initializer_list<std::pair<const char*, GaussRational>> kv) {
  Params p;
  for (auto& [k, v] : kv) p[k] = v;
  return p;
}

struct EntryDef {
  CatalogEntry entry;
  std::vector<Params> samples;  // used by "all"; empty means run once with {}
};

const std::vector<EntryDef>& defs() {
  static const std::vector<EntryDef> kDefs = [] {
    std::vector<EntryDef> d;
    d.push_back({{"su2_normal", "normal almost contact structure on su(2)", run_su2_normal},
                 {}});
    d.push_back({{"su2_contact", "contact structure eta = s3 on su(2)", run_su2_contact}, {}});
    d.push_back({{"h3_cosymplectic", "cosymplectic family (a, b) on the Heisenberg algebra",
                  run_h3_cosymplectic},
                 {ps({{"a", GaussRational(0)}, {"b", GaussRational(0)}}),
                  ps({{"a", GaussRational(1)}, {"b", GaussRational(0)}}),
                  ps({{"a", GaussRational(2)}, {"b", GaussRational(-3)}})}});
    d.push_back(
        {{"h3_family", "J_t family at t = r(c + i s)", run_h3_family},
         {ps({{"r", gauss(1, 2)}, {"c", gauss(3, 5)}, {"s", gauss(4, 5)}}),
          ps({{"r", GaussRational(2)}, {"c", gauss(5, 13)}, {"s", gauss(12, 13)}}),
          ps({{"r", gauss(1, 3)}, {"c", gauss(-3, 5)}, {"s", gauss(4, 5)}})}});
    d.push_back({{"h3_family_limit", "the r -> infinity cosymplectic end of the family",
                  run_h3_family_limit},
                 {}});
    d.push_back(
        {{"h3_deformation", "Maurer-Cartan deformation recovering the J_t family",
          run_h3_deformation},
         {ps({{"r", gauss(1, 2)}, {"c", gauss(3, 5)}, {"s", gauss(4, 5)}}),
          ps({{"r", GaussRational(2)}, {"c", gauss(5, 13)}, {"s", gauss(12, 13)}}),
          ps({{"r", gauss(1, 3)}, {"c", gauss(-3, 5)}, {"s", gauss(4, 5)}})}});
    d.push_back({{"kod4_complex", "classical complex structure on the Kodaira algebra",
                  run_kod4_complex},
                 {}});
    d.push_back(
        {{"kodaira_family", "generalized complex deformation family on the Kodaira algebra",
          run_kodaira_family},
         {ps({}),
          ps({{"t2", gauss(1, 3)}, {"t3", gauss(2, 5)}}),
          ps({{"t1", gauss(0, 1, 1, 2)}, {"t4", gauss(0, 1, 2, 1)}})}});
    d.push_back({{"kod5_J1", "contact structure from the connection form e5", run_kod5_contact},
                 {}});
    d.push_back({{"kod5_J0", "lift of the complex structure to the 5-dim extension",
                  run_kod5_lift},
                 {}});
    return d;
  }();
  return kDefs;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> kEntries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& d : defs()) out.push_back(d.entry);
    return out;
  }();
  return kEntries;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& d : defs()) names.push_back(d.entry.name);
  return names;
}

std::vector<EntryResult> catalog_run(const std::string& name, const Params& params) {
  std::vector<EntryResult> results;
  if (name == "all") {
    for (const auto& d : defs()) {
      if (d.samples.empty()) {
        results.push_back(d.entry.run(params));
      } else {
        for (const auto& sample : d.samples) results.push_back(d.entry.run(sample));
      }
    }
    std::sort(results.begin(), results.end(),
              [](const EntryResult& a, const EntryResult& b) { return a.entry < b.entry; });
    return results;
  }
  for (const auto& d : defs()) {
    if (d.entry.name != name) continue;
    if (params.empty() && !d.samples.empty()) {
      for (const auto& sample : d.samples) results.push_back(d.entry.run(sample));
    } else {
      results.push_back(d.entry.run(params));
    }
    return results;
  }
  throw Error(ErrorKind::Precondition, "UnknownEntry", "no catalog entry named '" + name + "'");
}

report::Node entry_report(const EntryResult& r) {
  report::Node node(r.entry, r.passed() ? "pass" : "FAIL");
  for (const auto& e : r.expectations) {
    std::string tag = e.source == Source::Reference
                          ? "reference"
                          : (e.source == Source::Oracle ? "oracle" : "definition");
    report::Node& c = node.put(e.name, e.pass ? "pass" : "FAIL");
    c.put("source", tag);
    if (!e.pass) {
      if (!e.expected.empty()) c.put("expected", e.expected);
      if (!e.actual.empty()) c.put("actual", e.actual);
    }
  }
  return node;
}

}  // namespace gcx::catalog
