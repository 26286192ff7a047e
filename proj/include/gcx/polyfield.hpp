#pragma once

#include <map>
#include <string>
#include <vector>

#include "gcx/alternating.hpp"
#include "gcx/exactnum.hpp"

namespace gcx::polyfield {

using exactnum::GaussRational;

// Sparse multivariate polynomial over Q(i). Exponent keys are stored with
// trailing zeros trimmed, so values are independent of any declared variable
// count; chart variables are ordered (x1, y1, ..., xn, yn, z).
class Poly {
 public:
  Poly() = default;
  Poly(int c) { add({}, GaussRational(c)); }                    // NOLINT(runtime/explicit)
  Poly(const GaussRational& c) { add({}, c); }                  // NOLINT(runtime/explicit)
  static Poly var(int v, int power = 1);

  const std::map<std::vector<int>, GaussRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussRational constant_value() const;  // the coefficient of 1

  void add(std::vector<int> exponents, const GaussRational& c);
  Poly derivative(int v) const;
  Poly conj() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o) { return *this += -o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::map<std::vector<int>, GaussRational> terms_;
};

using PolyForm = detail::Alt<Poly, 1>;    // polynomial-coefficient forms
using PolyField = detail::Alt<Poly, 0>;   // polynomial-coefficient multivectors

std::vector<Poly> coords1(const PolyForm& a);
std::vector<Poly> coords1(const PolyField& a);
PolyForm form_from_coords(const std::vector<Poly>& c);
PolyField field_from_coords(const std::vector<Poly>& c);

inline PolyForm wedge(const PolyForm& a, const PolyForm& b) { return detail::wedge(a, b); }
inline PolyField wedge(const PolyField& a, const PolyField& b) { return detail::wedge(a, b); }
PolyForm contract(const PolyField& x, const PolyForm& a);
PolyField contract(const PolyForm& alpha, const PolyField& p);
Poly eval(const PolyForm& a, const std::vector<PolyField>& xs);

// X(p) = sum_j X^j dp/dx_j
Poly directional(const PolyField& x, const Poly& p);

// Coordinate exterior derivative.
PolyForm pf_d(const PolyForm& a);

// Coordinate Lie bracket of vector fields.
PolyField pf_bracket(const PolyField& x, const PolyField& y);

// Cartan formula; degree-0 forms are plain polynomials handled by pf_d.
PolyForm pf_lie(const PolyField& x, const PolyForm& a);

// Generalized section X + alpha with polynomial coefficients.
struct GenPolySection {
  PolyField vec;
  PolyForm cov;

  GenPolySection() = default;
  GenPolySection(PolyField v, PolyForm c) : vec(std::move(v)), cov(std::move(c)) {}
  static GenPolySection from_field(PolyField v);
  static GenPolySection from_form(PolyForm c);

  bool is_zero() const { return vec.is_zero() && cov.is_zero(); }
  GenPolySection operator-() const { return {-vec, -cov}; }
  GenPolySection& operator+=(const GenPolySection& o);
  friend GenPolySection operator+(GenPolySection a, const GenPolySection& b) { return a += b; }
  friend GenPolySection operator-(GenPolySection a, const GenPolySection& b) {
    return a += -b;
  }
  friend GenPolySection operator*(const Poly& s, const GenPolySection& v);
  friend bool operator==(const GenPolySection& a, const GenPolySection& b) {
    return a.vec == b.vec && a.cov == b.cov;
  }
};

// <X + alpha, Y + beta> = (beta(X) + alpha(Y)) / 2
Poly pf_pairing(const GenPolySection& a, const GenPolySection& b);

// Full Courant bracket: [X,Y] + L_X beta - L_Y alpha - 1/2 d(i_X beta - i_Y alpha).
GenPolySection pf_courant(const GenPolySection& a, const GenPolySection& b);

struct DarbouxCheck {
  std::string name;
  bool pass;
};

struct DarbouxReport {
  int n;
  std::vector<DarbouxCheck> checks;
  // constant coefficient witnessing that the closedness obstruction for L*
  // never vanishes on the chart
  GaussRational obstruction_coefficient;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Builds the standard contact chart on R^{2n+1} and verifies the frame
// bracket table, the flat/bivector recipe, the endomorphism action and the
// type decomposition of the pulled-back d eta. Chart size is capped at n = 3.
DarbouxReport darboux_model(int n);

std::vector<std::string> chart_names(int n);

}  // namespace gcx::polyfield
