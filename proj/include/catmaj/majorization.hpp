#pragma once

// Majorization on finite vectors: the partial-sum order, tensor products,
// and the direct catalysis witness check. Every certificate produced
// elsewhere in the library is ultimately re-checked through catalyzes().
//
// Vectors are homogeneous in scalar kind: either all Rational (exact, no
// tolerance anywhere) or all double (compared with kFloatTolerance after
// normalizing by the larger of the two totals).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "catmaj/error.hpp"
#include "catmaj/scalar.hpp"

namespace catmaj {

inline constexpr double kFloatTolerance = 1e-12;

enum class Relation { XMajorizedByY, YMajorizedByX, Equal, Incomparable };

const char* to_string(Relation r);

template <Scalar T>
struct PartialSums {
  std::vector<T> x;
  std::vector<T> y;
};

template <Scalar T>
struct OrderVerdict {
  Relation relation = Relation::Incomparable;
  PartialSums<T> witness;

  /// x ≺ y, including the Equal case.
  bool x_below_y() const {
    return relation == Relation::XMajorizedByY || relation == Relation::Equal;
  }
};

/// Run-length encoded vector: value repeated `multiplicity` times. Used for
/// catalysts whose expanded length would be impractical (2^n entries).
template <Scalar T>
struct WeightedEntry {
  T value;
  Integer multiplicity;
};

template <Scalar T>
using WeightedVector = std::vector<WeightedEntry<T>>;

namespace detail {

template <Scalar T>
void require_nonnegative(const std::vector<T>& v, const char* name) {
  if (v.empty()) throw Error(ErrorCode::EmptyVector, std::string(name) + " is empty");
  for (const auto& e : v)
    if (sign_of(e) < 0) throw Error(ErrorCode::NegativeEntry, std::string(name) + " has a negative entry");
}

template <Scalar T>
void require_same_length(const std::vector<T>& x, const std::vector<T>& y) {
  if (x.size() != y.size())
    throw Error(ErrorCode::LengthMismatch,
                "x has " + std::to_string(x.size()) + " entries, y has " + std::to_string(y.size()));
}

template <Scalar T>
T sum(const std::vector<T>& v) {
  T s = 0;
  for (const auto& e : v) s += e;
  return s;
}

/// a <= b in the regime of T; `scale` normalizes float comparisons.
template <Scalar T>
bool leq(const T& a, const T& b, double scale, double tol) {
  if constexpr (is_exact_v<T>) {
    (void)scale;
    (void)tol;
    return a <= b;
  } else {
    return a <= b + tol * scale;
  }
}

template <Scalar T>
bool near(const T& a, const T& b, double scale, double tol) {
  return leq(a, b, scale, tol) && leq(b, a, scale, tol);
}

}  // namespace detail

template <Scalar T>
std::vector<T> sort_desc(std::vector<T> v) {
  std::sort(v.begin(), v.end(), std::greater<T>());
  return v;
}

template <Scalar T>
std::vector<T> prefix_sums(const std::vector<T>& v) {
  std::vector<T> out;
  out.reserve(v.size());
  T running = 0;
  for (const auto& e : v) {
    running += e;
    out.push_back(running);
  }
  return out;
}

template <Scalar T>
OrderVerdict<T> majorizes(const std::vector<T>& x, const std::vector<T>& y,
                          double tol = kFloatTolerance) {
  detail::require_same_length(x, y);
  detail::require_nonnegative(x, "x");
  detail::require_nonnegative(y, "y");

  OrderVerdict<T> verdict;
  verdict.witness.x = prefix_sums(sort_desc(x));
  verdict.witness.y = prefix_sums(sort_desc(y));
  const auto& px = verdict.witness.x;
  const auto& py = verdict.witness.y;

  const double scale = std::max(to_double(px.back()), to_double(py.back()));
  const bool totals_equal = detail::near(px.back(), py.back(), scale, tol);

  bool x_le_y = totals_equal;
  bool y_le_x = totals_equal;
  for (std::size_t k = 0; k < px.size(); ++k) {
    if (!detail::leq(px[k], py[k], scale, tol)) x_le_y = false;
    if (!detail::leq(py[k], px[k], scale, tol)) y_le_x = false;
  }

  if (x_le_y && y_le_x)
    verdict.relation = Relation::Equal;
  else if (x_le_y)
    verdict.relation = Relation::XMajorizedByY;
  else if (y_le_x)
    verdict.relation = Relation::YMajorizedByX;
  else
    verdict.relation = Relation::Incomparable;
  return verdict;
}

/// Row-major Kronecker product: (a ⊗ b)[i*|b| + j] = a[i]*b[j].
template <Scalar T>
std::vector<T> tensor(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  out.reserve(a.size() * b.size());
  for (const auto& u : a)
    for (const auto& v : b) out.push_back(T(u * v));
  return out;
}

template <Scalar T>
bool catalyzes(const std::vector<T>& x, const std::vector<T>& y, const std::vector<T>& c,
               double tol = kFloatTolerance) {
  detail::require_same_length(x, y);
  if (c.empty()) throw Error(ErrorCode::EmptyVector, "catalyst is empty");
  for (const auto& e : c)
    if (sign_of(e) <= 0) throw Error(ErrorCode::NegativeEntry, "catalyst entries must be positive");
  return majorizes(tensor(x, c), tensor(y, c), tol).x_below_y();
}

/// Convex-order test over a finite family of convex functions: hinges
/// t -> max(t - theta, 0) at every entry value (plus `samples` extra evenly
/// spaced thresholds), together with +-identity and +-constants.
template <Scalar T>
bool convex_order_oracle(const std::vector<T>& x, const std::vector<T>& y, std::size_t samples = 0,
                         double tol = kFloatTolerance) {
  detail::require_same_length(x, y);
  std::vector<T> thresholds(x.begin(), x.end());
  thresholds.insert(thresholds.end(), y.begin(), y.end());
  const auto [lo, hi] = std::minmax_element(thresholds.begin(), thresholds.end());
  const T low = *lo;
  const T high = *hi;
  for (std::size_t i = 1; i <= samples; ++i)
    thresholds.push_back(T(low + (high - low) * T(static_cast<long>(i)) / T(static_cast<long>(samples + 1))));

  double scale = std::max(std::abs(to_double(detail::sum(x))), std::abs(to_double(detail::sum(y))));
  if (scale == 0.0) scale = 1.0;

  // +-identity; +-constants contribute d*c on both sides and always balance
  if (!detail::near(detail::sum(x), detail::sum(y), scale, tol)) return false;

  for (const auto& theta : thresholds) {
    T hx = 0, hy = 0;
    for (const auto& v : x)
      if (v > theta) hx += v - theta;
    for (const auto& v : y)
      if (v > theta) hy += v - theta;
    if (!detail::leq(hx, hy, scale, tol)) return false;
  }
  return true;
}

// --- weighted (run-length) forms -----------------------------------------

template <Scalar T>
WeightedVector<T> weighted(const std::vector<T>& v) {
  WeightedVector<T> out;
  for (const auto& e : v) out.push_back({e, Integer(1)});
  return out;
}

template <Scalar T>
std::vector<T> expand(const WeightedVector<T>& w) {
  std::vector<T> out;
  for (const auto& e : w)
    for (Integer k = 0; k < e.multiplicity; ++k) out.push_back(e.value);
  return out;
}

template <Scalar T>
WeightedVector<T> tensor(const WeightedVector<T>& a, const WeightedVector<T>& b) {
  WeightedVector<T> out;
  out.reserve(a.size() * b.size());
  for (const auto& u : a)
    for (const auto& v : b) out.push_back({T(u.value * v.value), Integer(u.multiplicity * v.multiplicity)});
  return out;
}

namespace detail {

template <Scalar T>
T scaled(const T& value, const Integer& count) {
  if constexpr (is_exact_v<T>)
    return value * Rational(count);
  else
    return value * count.get_d();
}

/// Prefix-sum function of a weighted vector sorted descending, sampled at
/// the requested cumulative counts (which must be sorted ascending).
template <Scalar T>
std::vector<T> weighted_prefix_at(const WeightedVector<T>& sorted, const std::vector<Integer>& at) {
  std::vector<T> out;
  out.reserve(at.size());
  std::size_t block = 0;
  Integer consumed = 0;
  T running = 0;
  for (const auto& k : at) {
    while (block < sorted.size() && consumed + sorted[block].multiplicity <= k) {
      running += scaled(sorted[block].value, sorted[block].multiplicity);
      consumed += sorted[block].multiplicity;
      ++block;
    }
    T partial = running;
    if (block < sorted.size() && k > consumed) partial += scaled(sorted[block].value, Integer(k - consumed));
    out.push_back(partial);
  }
  return out;
}

}  // namespace detail

/// x ≺ y for run-length encoded vectors. Both prefix-sum functions are
/// piecewise linear in the count with kinks at block boundaries, so the
/// comparison only needs the union of those boundaries.
template <Scalar T>
bool weighted_majorized(WeightedVector<T> x, WeightedVector<T> y, double tol = kFloatTolerance) {
  auto by_value_desc = [](const WeightedEntry<T>& a, const WeightedEntry<T>& b) { return a.value > b.value; };
  std::sort(x.begin(), x.end(), by_value_desc);
  std::sort(y.begin(), y.end(), by_value_desc);

  std::vector<Integer> kinks;
  Integer total_x = 0, total_y = 0;
  for (const auto& e : x) {
    if (sign_of(e.value) < 0) throw Error(ErrorCode::NegativeEntry, "x has a negative entry");
    total_x += e.multiplicity;
    kinks.push_back(total_x);
  }
  for (const auto& e : y) {
    if (sign_of(e.value) < 0) throw Error(ErrorCode::NegativeEntry, "y has a negative entry");
    total_y += e.multiplicity;
    kinks.push_back(total_y);
  }
  if (total_x != total_y) throw Error(ErrorCode::LengthMismatch, "weighted vectors differ in length");
  std::sort(kinks.begin(), kinks.end());
  kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());

  const auto px = detail::weighted_prefix_at(x, kinks);
  const auto py = detail::weighted_prefix_at(y, kinks);
  const double scale = std::max(to_double(px.back()), to_double(py.back()));
  if (!detail::near(px.back(), py.back(), scale, tol)) return false;
  for (std::size_t i = 0; i < px.size(); ++i)
    if (!detail::leq(px[i], py[i], scale, tol)) return false;
  return true;
}

template <Scalar T>
bool catalyzes(const std::vector<T>& x, const std::vector<T>& y, const WeightedVector<T>& c,
               double tol = kFloatTolerance) {
  detail::require_same_length(x, y);
  if (c.empty()) throw Error(ErrorCode::EmptyVector, "catalyst is empty");
  for (const auto& e : c)
    if (sign_of(e.value) <= 0 || e.multiplicity <= 0)
      throw Error(ErrorCode::NegativeEntry, "catalyst entries must be positive");
  return weighted_majorized(tensor(weighted(x), c), tensor(weighted(y), c), tol);
}

}  // namespace catmaj
