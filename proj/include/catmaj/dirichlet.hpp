#pragma once

// Finite generalized Dirichlet polynomials zeta(s) = sum_n a_n e^{-lambda_n s}.
//
// A term is stored by its base b_n = e^{lambda_n} rather than by the exponent,
// so that vectors with rational entries produce exact bases, exact moments
// zeta(-k) = sum_n a_n b_n^k, and exact piecewise-polynomial profiles
//
//   mu_1(t) = sum_{b_n <= t} a_n,   mu_k(t) = int_1^t mu_{k-1}.
//
// With the moment conditions zeta(0) = ... = zeta(-(r-1)) = 0,
//
//   zeta(s) / prod_{k<r}(s+k) = int_1^inf mu_r(t) t^{-(s+r)} dt,
//
// so (-1)^r zeta(s)/prod(s+k) is completely monotone on (0, inf) exactly when
// (-1)^r mu_r >= 0. cm_test() decides that sign condition exactly for
// rational input (Sturm sequences on each piece).

#include <cstddef>
#include <optional>
#include <vector>

#include "catmaj/error.hpp"
#include "catmaj/polynomial.hpp"
#include "catmaj/scalar.hpp"

namespace catmaj {

/// Relative tolerance for merging float-regime exponents.
inline constexpr double kExponentMergeTolerance = 1e-12;
/// Scale-aware zero test for float-regime moments.
inline constexpr double kMomentTolerance = 1e-9;
inline constexpr double kDefaultPositivityWindow = 64.0;

template <Scalar T>
struct DirichletTerm {
  T base;   // e^{lambda}, >= 1
  T coeff;  // nonzero

  double lambda() const;
};

template <Scalar T>
class GDirichlet {
 public:
  GDirichlet() = default;
  /// Sorts by base, merges equal exponents, drops zero coefficients.
  /// Bases below 1 (negative exponents) are rejected.
  explicit GDirichlet(std::vector<DirichletTerm<T>> terms);

  const std::vector<DirichletTerm<T>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<DirichletTerm<T>> terms_;
};

/// Breakpoints b_0 < ... < b_{m-1}; pieces[j] holds the coefficients of the
/// piece on [b_j, b_{j+1}) in the local variable u = t - b_j. The function is
/// zero left of b_0 and the last piece extends to +inf.
template <Scalar T>
struct PiecewisePoly {
  std::vector<T> breakpoints;
  std::vector<std::vector<T>> pieces;

  bool empty() const { return breakpoints.empty(); }
  T operator()(const T& t) const;
  /// Value at b_j taken from the piece to the right.
  T value_at_breakpoint(std::size_t j) const;
  /// Value at b_j taken from the piece to the left (0 for j = 0).
  T left_limit_at_breakpoint(std::size_t j) const;
};

template <Scalar T>
struct CMReport {
  int r = 0;
  /// zeta(0), zeta(-1), ..., zeta(-(r-1)).
  std::vector<T> moment_values;
  bool moments_ok = false;
  bool sign_ok = false;
  bool is_cm = false;
  PiecewisePoly<T> mu_profile;
  /// Location t where (-1)^r mu_r(t) < 0.
  std::optional<double> first_violation;
};

struct PositivityVerdict {
  enum class Kind {
    PositiveEverywhere,
    ViolationAt,
    InconclusiveBeyondWindow,
    /// A cell inside the window could not be certified down to the minimum
    /// width (the function touches zero to working precision).
    Unresolved,
  };
  Kind kind = Kind::PositiveEverywhere;
  double at = 0.0;
  double window = 0.0;
  std::size_t cells = 0;
};

const char* to_string(PositivityVerdict::Kind kind);

template <Scalar T>
struct Rescaled {
  std::vector<T> x;
  std::vector<T> y;
  T factor;
};

/// Multiplies both vectors by (1 + delta)/min(all entries).
template <Scalar T>
Rescaled<T> rescale_into_domain(const std::vector<T>& x, const std::vector<T>& y);

/// zeta(s) = sum_i y_i^{-s} - sum_i x_i^{-s}; entries must exceed 1.
template <Scalar T>
GDirichlet<T> gd_from_pair(const std::vector<T>& x, const std::vector<T>& y);

/// d^order/ds^order zeta at s, with compensated summation.
template <Scalar T>
double gd_eval(const GDirichlet<T>& zeta, double s, int order = 0);

/// zeta(-k) = sum_n a_n b_n^k, exact for rational input.
template <Scalar T>
T gd_moment(const GDirichlet<T>& zeta, int k);

template <Scalar T>
GDirichlet<T> gd_mul(const GDirichlet<T>& p, const GDirichlet<T>& q);

template <Scalar T>
GDirichlet<T> gd_negate(const GDirichlet<T>& p);

/// mu_r as a piecewise polynomial with breakpoints at the bases.
template <Scalar T>
PiecewisePoly<T> mu_profile(const GDirichlet<T>& zeta, int r);

template <Scalar T>
CMReport<T> cm_test(const GDirichlet<T>& zeta, int r);

/// F(u) = 1/(r-1)! sum_n a_n (1 - b_n u)_+^{r-1}, breakpoints at u = 1/b_n.
/// Its Mellin transform is zeta(s)/prod_{k<r}(s+k); F(1/t) = mu_r(t) t^{1-r}.
template <Scalar T>
PiecewisePoly<T> spline_rep(const GDirichlet<T>& zeta, int r);

/// Limit of zeta(s)/prod_{j<r}(s+j) at s = -k: zeta'(-k)/prod_{j!=k}(j-k).
template <Scalar T>
double removable_limit(const GDirichlet<T>& zeta, int r, int k);

/// True when zeta(-k) vanishes for k < r (exactly, or within the scale-aware
/// float tolerance).
template <Scalar T>
bool moment_conditions_hold(const GDirichlet<T>& zeta, int r);

/// Sign certification of phi(s) = zeta(s)/prod_{k<r}(s+k) on the real line:
/// adaptive cells with term-wise derivative bounds on [-window, window] and
/// dominant-term analysis beyond. Throws MomentConditionFailed when zeta has
/// no zero at some -k, k < r.
template <Scalar T>
PositivityVerdict positivity_on_reals(const GDirichlet<T>& zeta, int r,
                                      double window = kDefaultPositivityWindow);

/// Smallest window (>= `start`, doubling) whose tails are certified by the
/// dominant-term bound.
template <Scalar T>
double certified_tail_window(const GDirichlet<T>& zeta, double start = kDefaultPositivityWindow);

}  // namespace catmaj
