#pragma once

// Trumping (catalytic majorization) decisions and catalyst certificates.
//
// A pair x, y with equal totals is trumped (x ≺_T y) iff, for x zero-free and
// x↓ ≠ y↓,
//   A_nu(x) > A_nu(y) for nu < 1,  A_nu(x) < A_nu(y) for nu > 1,  sigma(x) > sigma(y).
// trumping_decision() evaluates these on a grid with asymptotic and adaptive
// refinement, and cross-checks the verdict against the f_r family and the
// sign of zeta(s)/(s(s+1)) on the real line.
//
// catalyst_certificate() turns a trumped pair on a geometric lattice q^k into
// an explicit catalyst: p(t) = f(t) prod_{k<r}(q^k - t), f*(1+t)^n = h with
// nonnegative coefficients, and the catalyst has entry q^j with multiplicity
// C(n, j). Every emitted certificate is re-checked exactly.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "catmaj/dirichlet.hpp"
#include "catmaj/majorization.hpp"
#include "catmaj/polynomial.hpp"
#include "catmaj/scalar.hpp"

namespace catmaj {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// ((1/d) sum x_i^nu)^(1/nu); geometric mean at 0, max/min at +-inf.
/// Computed in log space.
double power_mean(const RealVector& x, double nu);
/// -sum x_i log x_i, with 0 log 0 = 0.
double entropy(const RealVector& x);
/// The five-case f_r functional; +inf for r <= 0 when x has a zero.
double klimesh_f(const RealVector& x, double r);

enum class TrumpRelation { Majorized, TrumpedStrictly, NotTrumped, Boundary, Equal };

const char* to_string(TrumpRelation r);

struct GridConfig {
  double nu_min = -40.0;
  double nu_max = 40.0;
  int points = 201;
  /// Relative margin (divided by min(1, |1 - nu|)) below which neighbouring
  /// grid intervals are bisected.
  double refine_threshold = 1e-3;
  double refine_spacing = 1e-6;
  std::size_t refine_budget = 20000;
  /// Relative equality tolerance; any such point makes the verdict Boundary.
  double boundary_tolerance = 1e-10;
  /// Starting window for the Dirichlet positivity scan; grown until the
  /// tails are certified.
  double window = kDefaultPositivityWindow;
  bool run_dirichlet = true;
};

/// A strict inequality that fails (or holds only with equality).
struct InequalityCheck {
  std::string condition;  // "T1", "T2", "T3", "nu->+inf", "nu->-inf", "sum", "f_r"
  double parameter = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct GridRow {
  double nu;
  double a_x;
  double a_y;
  double f_x;
  double f_y;
};

struct TrumpingLimits {
  double a0_x = 0, a0_y = 0;
  double sigma_x = 0, sigma_y = 0;
  double max_x = 0, max_y = 0;
  double min_x = 0, min_y = 0;
  /// Net multiplicity sign of the largest/smallest value where x and y differ
  /// (+1: the value belongs to y).
  int top_sign = 0;
  int bottom_sign = 0;
};

struct TrumpingVerdict {
  TrumpRelation relation = TrumpRelation::NotTrumped;
  std::vector<InequalityCheck> failures;
  std::vector<InequalityCheck> boundaries;
  TrumpingLimits limits;
  std::vector<GridRow> grid;

  std::optional<TrumpRelation> klimesh;
  std::vector<InequalityCheck> klimesh_failures;
  std::optional<PositivityVerdict> dirichlet;
  std::optional<TrumpRelation> dirichlet_relation;
  /// Definite verdicts that contradict each other, in words.
  std::vector<std::string> disagreements;
};

template <Scalar T>
TrumpingVerdict trumping_decision(const std::vector<T>& x, const std::vector<T>& y,
                                  const GridConfig& grid = {});

// --- lattices and certificates ---------------------------------------------

struct RealSnap {
  RealVector x, y;
  std::vector<long> kx, ky;
  double max_rel_error = 0;
};

/// Each entry v > 1 becomes e^{alpha round(log v / alpha)}.
RealSnap snap_to_lattice(const RealVector& x, const RealVector& y, double alpha);

struct LatticeSnap {
  RationalVector x, y;
  std::vector<long> kx, ky;
  double max_rel_error = 0;
};

/// Each entry v > 0 becomes q^{round(log v / log q)}, exactly.
template <Scalar T>
LatticeSnap snap_to_lattice(const std::vector<T>& x, const std::vector<T>& y, const Rational& q);

inline constexpr long kMaxCertificateExponent = 1L << 16;
inline constexpr std::size_t kMaxExpandedCatalyst = 4096;

struct CatalystCertificate {
  Rational q;
  double alpha = 0;  // log q
  int r = 2;
  bool trivial = false;

  /// Common factor applied before snapping.
  Rational scale;
  double max_rel_error = 0;
  RationalVector snapped_x, snapped_y;
  std::vector<long> exponents_x, exponents_y;

  RationalPoly p;         // sum t^{ky} - sum t^{kx}
  RationalPoly divisor;   // prod_{k<r}(q^k - t)
  RationalPoly quotient;  // f
  RationalPoly zeta2;     // g = (1+t)^n
  RationalPoly product;   // h = f*g
  std::size_t polya_n = 0;

  /// Entry q^j with multiplicity C(n, j).
  WeightedVector<Rational> catalyst;
  /// Expanded catalyst when it has at most kMaxExpandedCatalyst entries.
  std::optional<RationalVector> catalyst_vector;

  bool product_identity = false;
  bool coefficients_nonnegative = false;
  bool witness_verified = false;
};

/// Errors: EqualVectors, NotTrumpedAfterSnap, DivisionNotExact,
/// PolyaSearchExhausted, ZeroEntry, LengthMismatch, InvalidArgument (q <= 1).
template <Scalar T>
CatalystCertificate catalyst_certificate(const std::vector<T>& x, const std::vector<T>& y, const Rational& q,
                                         std::size_t n_max = kDefaultPolyaMax, int r = 2);

/// Exact re-check of the three certificate invariants.
bool verify_certificate(const CatalystCertificate& cert);

}  // namespace catmaj
