#include "catmaj/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace catmaj {

namespace {

template <Scalar T>
T power(const T& b, int k) {
  if constexpr (is_exact_v<T>)
    return rational_pow(b, static_cast<unsigned long>(k));
  else
    return std::pow(b, k);
}

template <Scalar T>
T abs_value(const T& v) {
  if constexpr (is_exact_v<T>)
    return abs(v);
  else
    return std::abs(v);
}

template <Scalar T>
T horner(const std::vector<T>& c, const T& u) {
  T v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * u + c[i];
  return v;
}

template <Scalar T>
bool same_exponent(const T& a, const T& b) {
  if constexpr (is_exact_v<T>)
    return a == b;
  else
    return std::abs(std::log(a) - std::log(b)) <= kExponentMergeTolerance;
}

template <Scalar T>
T integer_scalar(long v) {
  return T(v);
}

void require_order(int r) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "order r must be at least 1");
}

template <Scalar T>
double abs_coeff_sum(const GDirichlet<T>& zeta) {
  double s = 0;
  for (const auto& t : zeta.terms()) s += std::abs(to_double(t.coeff));
  return s;
}

template <Scalar T>
double max_base(const GDirichlet<T>& zeta) {
  return zeta.empty() ? 1.0 : to_double(zeta.terms().back().base);
}

}  // namespace

template <Scalar T>
double DirichletTerm<T>::lambda() const {
  return log_of(base);
}

template <Scalar T>
GDirichlet<T>::GDirichlet(std::vector<DirichletTerm<T>> terms) {
  for (const auto& t : terms)
    if (!(t.base >= 1)) throw Error(ErrorCode::InvalidArgument, "Dirichlet bases must be at least 1");
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.base < b.base; });
  for (auto& t : terms) {
    if (!terms_.empty() && same_exponent(terms_.back().base, t.base))
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const auto& t) { return sign_of(t.coeff) == 0; });
}

template <Scalar T>
T PiecewisePoly<T>::operator()(const T& t) const {
  if (breakpoints.empty() || t < breakpoints.front()) return T(0);
  const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t);
  const std::size_t j = static_cast<std::size_t>(it - breakpoints.begin()) - 1;
  return horner(pieces[j], T(t - breakpoints[j]));
}

template <Scalar T>
T PiecewisePoly<T>::value_at_breakpoint(std::size_t j) const {
  return pieces.at(j).empty() ? T(0) : pieces[j][0];
}

template <Scalar T>
T PiecewisePoly<T>::left_limit_at_breakpoint(std::size_t j) const {
  if (j == 0) return T(0);
  return horner(pieces.at(j - 1), T(breakpoints.at(j) - breakpoints[j - 1]));
}

const char* to_string(PositivityVerdict::Kind kind) {
  switch (kind) {
    case PositivityVerdict::Kind::PositiveEverywhere: return "PositiveEverywhere";
    case PositivityVerdict::Kind::ViolationAt: return "ViolationAt";
    case PositivityVerdict::Kind::InconclusiveBeyondWindow: return "InconclusiveBeyondWindow";
    case PositivityVerdict::Kind::Unresolved: return "Unresolved";
  }
  return "?";
}

template <Scalar T>
Rescaled<T> rescale_into_domain(const std::vector<T>& x, const std::vector<T>& y) {
  if (x.empty() || y.empty()) throw Error(ErrorCode::EmptyVector, "empty vector");
  T lowest = x.front();
  for (const auto* v : {&x, &y})
    for (const auto& e : *v) {
      if (sign_of(e) < 0) throw Error(ErrorCode::NegativeEntry, "negative entry");
      if (sign_of(e) == 0) throw Error(ErrorCode::ZeroEntry, "zero entry; the Dirichlet form needs positive entries");
      if (e < lowest) lowest = e;
    }
  Rescaled<T> out;
  if constexpr (is_exact_v<T>)
    out.factor = Rational(11, 10) / lowest;
  else
    out.factor = 1.1 / lowest;
  for (const auto& e : x) out.x.push_back(T(e * out.factor));
  for (const auto& e : y) out.y.push_back(T(e * out.factor));
  return out;
}

template <Scalar T>
GDirichlet<T> gd_from_pair(const std::vector<T>& x, const std::vector<T>& y) {
  std::vector<DirichletTerm<T>> terms;
  for (const auto& e : y) {
    if (!(e > 1)) throw Error(ErrorCode::EntriesNotAboveOne, "y has an entry not above 1");
    terms.push_back({e, T(1)});
  }
  for (const auto& e : x) {
    if (!(e > 1)) throw Error(ErrorCode::EntriesNotAboveOne, "x has an entry not above 1");
    terms.push_back({e, T(-1)});
  }
  return GDirichlet<T>(std::move(terms));
}

template <Scalar T>
double gd_eval(const GDirichlet<T>& zeta, double s, int order) {
  CompensatedSum acc;
  for (const auto& t : zeta.terms()) {
    const double lam = t.lambda();
    acc.add(to_double(t.coeff) * std::pow(-lam, order) * std::exp(-lam * s));
  }
  return acc.value();
}

template <Scalar T>
T gd_moment(const GDirichlet<T>& zeta, int k) {
  if constexpr (is_exact_v<T>) {
    Rational acc = 0;
    for (const auto& t : zeta.terms()) acc += t.coeff * power(t.base, k);
    return acc;
  } else {
    CompensatedSum acc;
    for (const auto& t : zeta.terms()) acc.add(t.coeff * power(t.base, k));
    return acc.value();
  }
}

template <Scalar T>
GDirichlet<T> gd_mul(const GDirichlet<T>& p, const GDirichlet<T>& q) {
  std::vector<DirichletTerm<T>> terms;
  terms.reserve(p.size() * q.size());
  for (const auto& a : p.terms())
    for (const auto& b : q.terms()) terms.push_back({T(a.base * b.base), T(a.coeff * b.coeff)});
  return GDirichlet<T>(std::move(terms));
}

template <Scalar T>
GDirichlet<T> gd_negate(const GDirichlet<T>& p) {
  std::vector<DirichletTerm<T>> terms;
  for (const auto& t : p.terms()) terms.push_back({t.base, T(-t.coeff)});
  return GDirichlet<T>(std::move(terms));
}

template <Scalar T>
PiecewisePoly<T> mu_profile(const GDirichlet<T>& zeta, int r) {
  require_order(r);
  PiecewisePoly<T> out;
  if (zeta.empty()) return out;
  const auto& terms = zeta.terms();
  const std::size_t m = terms.size();
  for (const auto& t : terms) out.breakpoints.push_back(t.base);

  std::vector<std::vector<T>> pieces(m);
  T running = 0;
  for (std::size_t j = 0; j < m; ++j) {
    running += terms[j].coeff;
    pieces[j] = {running};
  }
  for (int k = 2; k <= r; ++k) {
    std::vector<std::vector<T>> next(m);
    T start = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const auto& c = pieces[j];
      std::vector<T> n(c.size() + 1);
      n[0] = start;
      for (std::size_t i = 0; i < c.size(); ++i) n[i + 1] = c[i] / integer_scalar<T>(static_cast<long>(i + 1));
      if (j + 1 < m) start = horner(n, T(out.breakpoints[j + 1] - out.breakpoints[j]));
      next[j] = std::move(n);
    }
    pieces = std::move(next);
  }
  out.pieces = std::move(pieces);
  return out;
}

template <Scalar T>
bool moment_conditions_hold(const GDirichlet<T>& zeta, int r) {
  const double mass = abs_coeff_sum(zeta);
  const double bmax = max_base(zeta);
  for (int k = 0; k < r; ++k) {
    const T m = gd_moment(zeta, k);
    if constexpr (is_exact_v<T>) {
      if (m != 0) return false;
    } else {
      if (std::abs(m) > kMomentTolerance * mass * std::pow(bmax, k)) return false;
    }
  }
  return true;
}

template <Scalar T>
CMReport<T> cm_test(const GDirichlet<T>& zeta, int r) {
  require_order(r);
  CMReport<T> report;
  report.r = r;
  for (int k = 0; k < r; ++k) report.moment_values.push_back(gd_moment(zeta, k));
  report.moments_ok = moment_conditions_hold(zeta, r);
  report.mu_profile = mu_profile(zeta, r);

  const auto& prof = report.mu_profile;
  const Rational sign = (r % 2 == 0) ? 1 : -1;
  Rational slack = 0;
  if constexpr (!is_exact_v<T>)
    slack = kMomentTolerance * abs_coeff_sum(zeta) * std::pow(max_base(zeta), r - 1);

  report.sign_ok = true;
  const std::size_t m = prof.breakpoints.size();
  for (std::size_t j = 0; j < m; ++j) {
    const bool last = j + 1 == m;
    // beyond the last base mu_r is identically zero once the moments vanish;
    // in floating point only rounding residue remains there
    if (last && !is_exact_v<T> && report.moments_ok) break;
    std::vector<Rational> coeffs;
    for (const auto& c : prof.pieces[j]) coeffs.push_back(sign * Rational(c));
    if (!coeffs.empty()) coeffs[0] += slack;
    std::optional<Rational> hi;
    if (!last) hi = Rational(prof.breakpoints[j + 1]) - Rational(prof.breakpoints[j]);
    const auto neg = find_negative_point(RationalPoly(std::move(coeffs)), Rational(0), hi);
    if (neg) {
      report.sign_ok = false;
      report.first_violation = to_double(prof.breakpoints[j]) + to_double(*neg);
      break;
    }
  }
  report.is_cm = report.moments_ok && report.sign_ok;
  return report;
}

template <Scalar T>
PiecewisePoly<T> spline_rep(const GDirichlet<T>& zeta, int r) {
  require_order(r);
  PiecewisePoly<T> out;
  if (zeta.empty()) return out;
  const auto& terms = zeta.terms();
  const std::size_t m = terms.size();
  const int deg = r - 1;

  T factorial = 1;
  for (int i = 2; i <= deg; ++i) factorial *= integer_scalar<T>(i);
  std::vector<T> binom(deg + 1);
  binom[0] = 1;
  for (int i = 1; i <= deg; ++i) binom[i] = binom[i - 1] * integer_scalar<T>(deg - i + 1) / integer_scalar<T>(i);

  // breakpoint 0, then 1/b for the bases in decreasing order; at breakpoint
  // j >= 1 only terms with index below m - j are still active
  out.breakpoints.push_back(T(0));
  for (std::size_t i = m; i-- > 0;) out.breakpoints.push_back(T(T(1) / terms[i].base));
  for (std::size_t j = 0; j <= m; ++j) {
    const T& beta = out.breakpoints[j];
    const std::size_t active = j == 0 ? m : m - j;
    std::vector<T> piece(deg + 1, T(0));
    for (std::size_t n = 0; n < active; ++n) {
      const T& b = terms[n].base;
      const T w = T(1) - b * beta;
      for (int i = 0; i <= deg; ++i)
        piece[i] += terms[n].coeff * binom[i] * power(w, deg - i) * power(T(-b), i) / factorial;
    }
    out.pieces.push_back(std::move(piece));
  }
  return out;
}

template <Scalar T>
double removable_limit(const GDirichlet<T>& zeta, int r, int k) {
  require_order(r);
  if (k < 0 || k >= r) throw Error(ErrorCode::InvalidArgument, "removable point index out of range");
  double denom = 1;
  for (int j = 0; j < r; ++j)
    if (j != k) denom *= static_cast<double>(j - k);
  return gd_eval(zeta, -static_cast<double>(k), 1) / denom;
}

// --- positivity on the real line -------------------------------------------

namespace {

constexpr double kMinCellHalfWidth = 1e-10;
constexpr double kTailMargin = 1e-6;
constexpr double kMaxTailWindow = 1e6;
constexpr std::size_t kCellBudget = 4'000'000;

// Sign analysis for phi(s) = zeta(s)/prod_{k<r}(s+k). Values of zeta are
// computed in the scaled form e^{cs} zeta(s) = sum a e^{(c-lambda)s}, with c
// the smallest exponent for s >= 0 and the largest for s < 0, so that no
// term overflows.
class PositivityScan {
 public:
  PositivityScan(std::vector<double> lambdas, std::vector<double> coeffs, int r)
      : lam_(std::move(lambdas)), a_(std::move(coeffs)), r_(r) {}

  double shift_for(double s) const { return s >= 0 ? lam_.front() : lam_.back(); }

  /// d^order/ds^order of e^{cs} zeta(s) at s.
  double scaled(double s, double c, int order) const {
    CompensatedSum acc;
    for (std::size_t i = 0; i < lam_.size(); ++i) {
      const double beta = c - lam_[i];
      acc.add(a_[i] * std::pow(beta, order) * std::exp(beta * s));
    }
    return acc.value();
  }

  double rounding(double s, double c, int order) const {
    double mag = 0;
    for (std::size_t i = 0; i < lam_.size(); ++i) {
      const double beta = c - lam_[i];
      mag += std::abs(a_[i] * std::pow(beta, order) * std::exp(beta * s)) * (1.0 + std::abs(beta * s));
    }
    return 64.0 * std::numeric_limits<double>::epsilon() * mag;
  }

  /// Bound on |d^order/ds^order e^{cs} zeta(s)| over [s0, s1].
  double derivative_bound(double s0, double s1, double c, int order) const {
    double bound = 0;
    for (std::size_t i = 0; i < lam_.size(); ++i) {
      const double beta = c - lam_[i];
      bound += std::abs(a_[i]) * std::pow(std::abs(beta), order) * std::max(std::exp(beta * s0), std::exp(beta * s1));
    }
    return bound;
  }

  int denominator_sign(double s) const {
    int sign = 1;
    for (int k = 0; k < r_; ++k)
      if (s + k < 0) sign = -sign;
    return sign;
  }

  /// Sign of phi on the tail beyond `window` (+1 right, -1 left), or 0 when
  /// the dominant term does not yet dominate.
  int tail_sign(double window, int side) const {
    const std::size_t n = lam_.size();
    const std::size_t dom = side > 0 ? 0 : n - 1;
    double rest = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (i != dom) rest += std::abs(a_[i]) * std::exp(-std::abs(lam_[i] - lam_[dom]) * window);
    if (!(rest < std::abs(a_[dom]) * (1.0 - kTailMargin))) return 0;
    const int zeta_sign = a_[dom] > 0 ? 1 : -1;
    return side > 0 ? zeta_sign : zeta_sign * ((r_ % 2 == 0) ? 1 : -1);
  }

  PositivityVerdict run(double window) {
    using Kind = PositivityVerdict::Kind;
    PositivityVerdict v;
    v.window = window;

    bool tails_ok = true;
    for (int side : {+1, -1}) {
      const int sign = tail_sign(window, side);
      if (sign < 0) {
        v.kind = Kind::ViolationAt;
        v.at = side * window;
        return v;
      }
      if (sign == 0) tails_ok = false;
    }

    struct Cell {
      double lo, hi;
    };
    std::vector<Cell> cells;
    const double left_edge = -(r_ - 1) - 0.5;
    auto add_side = [&](double from, double to) {
      const double dir = to > from ? 1.0 : -1.0;
      double len = 1.0;
      double at = from;
      while ((to - at) * dir > 0) {
        double next = at + dir * len;
        if ((next - to) * dir > 0) next = to;
        cells.push_back({std::min(at, next), std::max(at, next)});
        at = next;
        if (std::abs(at) > 8.5) len *= 2;
      }
    };
    if (window > 0.5) add_side(0.5, window);
    if (-window < left_edge) add_side(left_edge, -window);

    bool unresolved = false;
    double unresolved_at = 0;

    // removable points -k, narrowed around the point until the derivative
    // of the numerator has a certified sign
    for (int k = 0; k < r_; ++k) {
      const double center = -static_cast<double>(k);
      const int outer_sign = (k % 2 == 0) ? 1 : -1;  // sign of prod_{j!=k}(j-k)
      double w = 0.5;
      for (;;) {
        ++v.cells;
        const double c = shift_for(center);
        const double d1 = scaled(center, c, 1);
        const double err = rounding(center, c, 1);
        if (std::abs(d1) > err && d1 * outer_sign < 0) {
          v.kind = Kind::ViolationAt;
          v.at = center;
          return v;
        }
        if (std::abs(d1) > err + derivative_bound(center - w, center + w, c, 2) * w) break;
        if (w < kMinCellHalfWidth) {
          if (!unresolved) unresolved_at = center;
          unresolved = true;
          break;
        }
        cells.push_back({center - w, center - w / 2});
        cells.push_back({center + w / 2, center + w});
        w /= 2;
      }
    }

    while (!cells.empty()) {
      const Cell cell = cells.back();
      cells.pop_back();
      if (++v.cells > kCellBudget) {
        v.kind = Kind::Unresolved;
        v.at = cell.lo;
        return v;
      }
      const double mid = 0.5 * (cell.lo + cell.hi);
      const double half = 0.5 * (cell.hi - cell.lo);
      const double c = shift_for(mid);
      const double val = scaled(mid, c, 0);
      const double err = rounding(mid, c, 0);
      const int dsign = denominator_sign(mid);
      if (std::abs(val) > err && val * dsign < 0) {
        v.kind = Kind::ViolationAt;
        v.at = mid;
        return v;
      }
      if (std::abs(val) > err + derivative_bound(cell.lo, cell.hi, c, 1) * half) continue;
      if (half < kMinCellHalfWidth) {
        if (!unresolved) unresolved_at = mid;
        unresolved = true;
        continue;
      }
      cells.push_back({mid, cell.hi});
      cells.push_back({cell.lo, mid});
    }

    if (unresolved) {
      v.kind = Kind::Unresolved;
      v.at = unresolved_at;
    } else if (!tails_ok) {
      v.kind = Kind::InconclusiveBeyondWindow;
    } else {
      v.kind = Kind::PositiveEverywhere;
    }
    return v;
  }

 private:
  std::vector<double> lam_;
  std::vector<double> a_;
  int r_;
};

template <Scalar T>
PositivityScan make_scan(const GDirichlet<T>& zeta, int r) {
  std::vector<double> lam, a;
  for (const auto& t : zeta.terms()) {
    lam.push_back(t.lambda());
    a.push_back(to_double(t.coeff));
  }
  return PositivityScan(std::move(lam), std::move(a), r);
}

}  // namespace

template <Scalar T>
PositivityVerdict positivity_on_reals(const GDirichlet<T>& zeta, int r, double window) {
  require_order(r);
  if (!(window > 0)) throw Error(ErrorCode::InvalidArgument, "window must be positive");
  if (zeta.empty()) return {PositivityVerdict::Kind::ViolationAt, 0.0, window, 0};
  if (!moment_conditions_hold(zeta, r))
    throw Error(ErrorCode::MomentConditionFailed, "zeta(-k) does not vanish for some k < " + std::to_string(r));
  return make_scan(zeta, r).run(window);
}

template <Scalar T>
double certified_tail_window(const GDirichlet<T>& zeta, double start) {
  if (zeta.empty()) return start;
  const auto scan = make_scan(zeta, 2);
  double w = start;
  while (w < kMaxTailWindow) {
    if (scan.tail_sign(w, +1) != 0 && scan.tail_sign(w, -1) != 0) return w;
    w *= 2;
  }
  return kMaxTailWindow;
}

#define CATMAJ_INSTANTIATE(T)                                                                  \
  template struct DirichletTerm<T>;                                                            \
  template class GDirichlet<T>;                                                                \
  template struct PiecewisePoly<T>;                                                            \
  template Rescaled<T> rescale_into_domain(const std::vector<T>&, const std::vector<T>&);      \
  template GDirichlet<T> gd_from_pair(const std::vector<T>&, const std::vector<T>&);           \
  template double gd_eval(const GDirichlet<T>&, double, int);                                  \
  template T gd_moment(const GDirichlet<T>&, int);                                             \
  template GDirichlet<T> gd_mul(const GDirichlet<T>&, const GDirichlet<T>&);                   \
  template GDirichlet<T> gd_negate(const GDirichlet<T>&);                                      \
  template PiecewisePoly<T> mu_profile(const GDirichlet<T>&, int);                             \
  template CMReport<T> cm_test(const GDirichlet<T>&, int);                                     \
  template PiecewisePoly<T> spline_rep(const GDirichlet<T>&, int);                             \
  template double removable_limit(const GDirichlet<T>&, int, int);                             \
  template bool moment_conditions_hold(const GDirichlet<T>&, int);                             \
  template PositivityVerdict positivity_on_reals(const GDirichlet<T>&, int, double);           \
  template double certified_tail_window(const GDirichlet<T>&, double);

CATMAJ_INSTANTIATE(Rational)
CATMAJ_INSTANTIATE(double)

#undef CATMAJ_INSTANTIATE

}  // namespace catmaj
