#pragma once

// Exact univariate polynomial algebra over the rationals, and the order
// certificates built on it:
//
//  * the root-at-one quotient test: p has a root of multiplicity r at t=1
//    and p/(t-1)^r has nonnegative coefficients;
//  * the equivalent nested cumulative-sum test on the coefficient sequence;
//  * Pólya multipliers (1+x)^n that clear the negative coefficients of a
//    polynomial positive on the positive axis;
//  * finite differences and divided differences for r-convexity.
//
// Everything here is exact. Sturm sequences provide exact real-root
// counting for positivity checks.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "catmaj/error.hpp"
#include "catmaj/majorization.hpp"
#include "catmaj/scalar.hpp"

namespace catmaj {

class RationalPoly {
 public:
  RationalPoly() = default;
  /// coeffs[i] is the coefficient of t^i; trailing zeros are trimmed.
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<Rational> coeffs)
      : RationalPoly(std::vector<Rational>(coeffs)) {}

  static RationalPoly monomial(const Rational& c, std::size_t degree);
  /// (1 + t)^n
  static RationalPoly one_plus_t_pow(std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  /// Largest m with t^m dividing the polynomial (0 for the zero polynomial).
  std::size_t low_order() const;

  Rational operator()(const Rational& t) const;
  double eval(double t) const;
  RationalPoly derivative() const;
  /// p(t) / t^m for m <= low_order().
  RationalPoly shift_down(std::size_t m) const;

  bool has_nonnegative_coeffs() const;
  std::vector<std::size_t> negative_indices() const;

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator-(const RationalPoly& a);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& c, const RationalPoly& p);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, highest degree first: "t^10 + t^6 - 4t^5 + 2t^2".
  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  RationalPoly quotient;
  RationalPoly remainder;
};

DivMod divmod(const RationalPoly& a, const RationalPoly& b);
/// Monic greatest common divisor.
RationalPoly gcd(RationalPoly a, RationalPoly b);
/// p / gcd(p, p'): same distinct roots, all simple.
RationalPoly squarefree_part(const RationalPoly& p);

// --- Sturm sequences --------------------------------------------------------

class SturmSequence {
 public:
  explicit SturmSequence(const RationalPoly& p);
  int sign_changes_at(const Rational& t) const;
  int sign_changes_at_pos_inf() const;
  int sign_changes_at_neg_inf() const;
  /// Number of distinct real roots in (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const;
  /// Number of distinct real roots in (lo, +inf).
  int count_roots_above(const Rational& lo) const;

 private:
  std::vector<RationalPoly> chain_;
};

/// Upper bound on the absolute value of every real root (Cauchy).
Rational root_bound(const RationalPoly& p);

/// A point of [lo, hi] (hi absent means +inf) where p is strictly negative,
/// or nothing when p >= 0 on the whole interval. Exact.
std::optional<Rational> find_negative_point(const RationalPoly& p, const Rational& lo,
                                            const std::optional<Rational>& hi);

// --- majorization certificates ----------------------------------------------

/// Integer-lattice form of a pair: entries scaled by a common positive
/// factor so that all are integers.
struct LatticePair {
  std::vector<long> x;
  std::vector<long> y;
  Rational scale;
};

inline constexpr long kMaxLatticeExponent = 1L << 20;

LatticePair lattice_form(const RationalVector& x, const RationalVector& y);
LatticePair lattice_form(const RealVector& x, const RealVector& y);

/// sum_i t^{y_i} - sum_i t^{x_i} on the integer lattice of the pair.
RationalPoly poly_from_pair(const RationalVector& x, const RationalVector& y);
RationalPoly poly_from_pair(const RealVector& x, const RealVector& y);
RationalPoly poly_from_lattice(const LatticePair& pair);

struct QuotientCertificate {
  int r = 0;
  RationalPoly quotient;
  /// Remainder of each successive division by (t-1), first division first.
  std::vector<Rational> remainders;
  bool remainder_ok = false;
  std::vector<std::size_t> negative_indices;

  bool holds() const { return remainder_ok && negative_indices.empty(); }
  /// quotient*(t-1)^r + sum_k remainders[k]*(t-1)^k; equals the input.
  RationalPoly reconstruct() const;
};

/// Synthetic division by (t-1), r times.
QuotientCertificate divide_root_one(const RationalPoly& p, int r);

/// Cumulative sums iterated r times over indices 0..m.
std::vector<Rational> iterated_cumulative_sums(const std::vector<Rational>& coeffs, int r);

/// sum_n n^k a_n for k = 0..r-1.
std::vector<Rational> power_moments(const std::vector<Rational>& coeffs, int r);

/// Moment conditions plus (-1)^r mu_r >= 0 at every index.
bool nested_sum_test(const std::vector<Rational>& coeffs, int r);

// --- Pólya multipliers ------------------------------------------------------

struct PolyaCertificate {
  RationalPoly g;  // (1+x)^n
  RationalPoly h;  // f*g, all coefficients >= 0
  std::size_t n = 0;
};

inline constexpr std::size_t kDefaultPolyaMax = 512;

/// Least n <= n_max with f*(1+x)^n having nonnegative coefficients, or
/// nothing if the search is exhausted. Throws NotPositiveOnPositiveAxis when
/// f/x^m has a positive real root or is not positive at 0 and +inf.
std::optional<PolyaCertificate> polya_multiplier(const RationalPoly& f,
                                                 std::size_t n_max = kDefaultPolyaMax);

/// Index of the first negative coefficient of f*(1+x)^n, if any.
std::optional<std::size_t> polya_first_negative(const RationalPoly& f, std::size_t n);

// --- finite and divided differences -----------------------------------------

enum class DifferenceBoundary {
  ZeroExtended,  // chi_k = 0 for k < 0; check every index
  InteriorOnly,  // check only indices n >= r
};

/// Delta^r chi_n = sum_j (-1)^j C(r,j) chi_{n-j}, chi_k = 0 for k < 0.
template <Scalar T>
std::vector<T> finite_difference(const std::vector<T>& chi, int r);

template <Scalar T>
bool is_r_convex_sequence(const std::vector<T>& chi, int r,
                          DifferenceBoundary mode = DifferenceBoundary::ZeroExtended);

/// f[x_0, ..., x_n] by the quotient recurrence.
template <Scalar T>
T divided_difference(const std::vector<T>& nodes, const std::vector<T>& values);

}  // namespace catmaj
