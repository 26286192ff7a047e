#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcx/courant.hpp"

namespace gcx::structures {

using courant::AltTensor;
using courant::BiVec;
using courant::ClosednessReport;
using courant::GenVector;
using courant::SubbundleSpan;
using exactnum::GaussRational;
using exactnum::Matrix;
using liealg::AlgebraPtr;
using multilinear::Endo;
using multilinear::KForm;
using multilinear::KVector;

// Invariant generalized almost contact quintuple (F, eta, pi, theta, phi) on
// an odd-dimensional Lie algebra. Phi is the block map (phi, pi_sharp;
// theta_flat, -phi*) acting on g + g*.
struct Gacs {
  AlgebraPtr algebra;
  KVector F;     // degree 1
  KForm eta;     // degree 1
  KVector pi;    // degree 2
  KForm theta;   // degree 2
  Endo phi;

  Matrix big_phi() const;                      // 2n x 2n
  GenVector apply_phi(const GenVector& v) const;
  GenVector f_section() const;
  GenVector eta_section() const;
};

struct Violation {
  std::string relation;  // e.g. "Relation2", "eta(F)=1"
  std::string detail;
};

// Checks odd dimension, eta(F) = 1, Phi(F) = 0, Phi(eta) = 0, Phi + Phi* = 0,
// Phi^2 = -I + F (.) eta, and the componentwise relations. Empty result means
// the quintuple is a valid structure.
std::vector<Violation> validate_gacs(const Gacs& j);

struct EigenData {
  SubbundleSpan L_F, L_eta;     // zero eigenbundle pieces
  SubbundleSpan E10, E01;       // +i and -i eigenbundles, rref-canonical generators
  SubbundleSpan L, Lbar;        // L_F + E10 and conjugate
  SubbundleSpan Lstar, Lbarstar;
  // Generator lists with fixed ordering used by tensors: L as [F, e...] and
  // L* as [eta, f...].
  std::vector<GenVector> l_basis;
  std::vector<GenVector> lstar_basis;
};

EigenData eigenbundles(const Gacs& j);

enum class Level { Invalid, AlmostOnly, GeneralizedContact, StrongGeneralizedContact };

std::string level_name(Level level);

struct Classification {
  Level level = Level::Invalid;
  bool llstar_bialgebroid = false;  // d eta is type (1,1), given closed L
  bool e_pair_bialgebroid = false;  // d eta vanishes on ker eta
  bool obstruction_nonzero = false;
  std::vector<Violation> violations;       // when Invalid
  ClosednessReport l_report, lstar_report;
};

Classification classify(const Gacs& j);

// Q(u,v) = B(rho u, rho v) restricted by eigenbundle type. block20 takes
// E01 x E01 arguments (the wedge^2 E10 component as a functional), block11 the
// mixed E01 x E10 block, block02 the E10 x E10 block. Matrices are indexed by
// the canonical generators of the respective spans.
struct TypeBlocks {
  Matrix block20, block11, block02;
};

TypeBlocks type_components(const Gacs& j, const KForm& b);

// Nijenhuis obstruction as an alternating 3-tensor on the L* basis
// [eta, f...]: computed once from the packaged form -1/2 F ^ (rho* d eta)^(2,0)
// and once from the direct cyclic-pairing formula on every basis triple; the
// two routes must agree exactly.
AltTensor obstruction(const Gacs& j);

// Classical constructors.
Gacs from_contact(const AlgebraPtr& g, const KForm& eta);

struct CosymplecticResult {
  Gacs j;
  bool cosymplectic;                        // both eta and theta closed
  std::vector<std::string> non_closed;      // names of the forms that fail
};
CosymplecticResult from_cosymplectic(const AlgebraPtr& g, const KForm& eta, const KForm& theta);

Gacs from_almost_contact(const AlgebraPtr& g, const KVector& f, const KForm& eta,
                         const Endo& phi);

struct NormalityReport {
  bool normal = true;
  // N_phi(ei,ej) + d eta(ei,ej) F for every violating pair
  std::vector<std::pair<std::pair<int, int>, KVector>> nijenhuis_residuals;
  bool lie_f_phi_zero = true;
  bool lie_f_eta_zero = true;
};
NormalityReport is_normal(const AlgebraPtr& g, const KVector& f, const KForm& eta,
                          const Endo& phi);

// Invariant generalized complex structure on an even-dimensional algebra,
// blockwise (phi, pi_sharp; theta_flat, -phi*).
struct Gcs {
  AlgebraPtr algebra;
  KVector pi;
  KForm theta;
  Endo phi;

  Matrix big_j() const;
};

std::vector<Violation> validate_gcs(const Gcs& j);
SubbundleSpan minus_i_eigenspan(const Gcs& j);

struct IntegrabilityReport {
  bool integrable;
  ClosednessReport report;
};
IntegrabilityReport gcs_integrable(const Gcs& j);

// Generalized complex structures on the Kodaira algebra whose (-i)-eigenspace
// is the row space of the deformation matrix over the ordered basis
// {(e1+ie2)/2, (e3+ie4)/2, e1+ie2 (dual), e3+ie4 (dual), conjugates}.
Gcs kodaira_family(const GaussRational& t1, const GaussRational& t2, const GaussRational& t3,
                   const GaussRational& t4);
SubbundleSpan kodaira_row_span(const AlgebraPtr& kod4, const GaussRational& t1,
                               const GaussRational& t2, const GaussRational& t3,
                               const GaussRational& t4);

// Central-extension lift: extends h by the symplectic cocycle omega, makes
// the new central vector the Reeb direction and grafts the blocks of j by
// zero. The lifted structure always has closed L.
std::pair<AlgebraPtr, Gacs> lift_gcs(const AlgebraPtr& h, const KForm& omega, const Gcs& j);

// Deformation parameter: a section of wedge^2 E01.
struct DeformParam {
  BiVec gamma;
};

// Coefficients of an element of wedge^3 E01 over the canonical generators.
struct McResidual {
  std::map<std::vector<int>, GaussRational> coords;
  bool is_zero() const { return coords.empty(); }
};

// d_E Gamma + 1/2 [[Gamma, Gamma]] for a strong structure; the differential
// goes through dirac_d on L followed by the projection along the eta line.
McResidual mc_check(const Gacs& j, const DeformParam& gamma);

// Graph deformation span { e + (t Gamma)#(e) : e canonical basis of E10 },
// with (f1 ^ f2)#(e) = <e,f1> f2 - <e,f2> f1 at pairing scale 1.
SubbundleSpan deform_E(const Gacs& j, const DeformParam& gamma, const GaussRational& t);

// eta -> f eta, F -> F / f for real nonzero f; Phi unchanged.
Gacs rescale(const Gacs& j, const GaussRational& f);

}  // namespace gcx::structures
