#include "catmaj/trumping.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace catmaj {

// --- scalar functionals -----------------------------------------------------

namespace {

void require_entries(const RealVector& x) {
  if (x.empty()) throw Error(ErrorCode::EmptyVector, "empty vector");
  for (double v : x)
    if (!(v >= 0)) throw Error(ErrorCode::NegativeEntry, "negative entry");
}

bool has_zero(const RealVector& x) {
  return std::any_of(x.begin(), x.end(), [](double v) { return v == 0.0; });
}

/// log sum_i exp(nu log x_i) over the positive entries; -inf when none.
double log_power_sum(const RealVector& x, double nu) {
  double top = -kInfinity;
  for (double v : x)
    if (v > 0) top = std::max(top, nu * std::log(v));
  if (top == -kInfinity) return top;
  CompensatedSum acc;
  for (double v : x)
    if (v > 0) acc.add(std::exp(nu * std::log(v) - top));
  return top + std::log(acc.value());
}

}  // namespace

double power_mean(const RealVector& x, double nu) {
  require_entries(x);
  if (nu == kInfinity) return *std::max_element(x.begin(), x.end());
  if (nu == -kInfinity) return *std::min_element(x.begin(), x.end());
  if (nu <= 0 && has_zero(x))
    throw Error(ErrorCode::ZeroEntryWithNonpositiveNu, "power mean of order <= 0 with a zero entry");
  const double d = static_cast<double>(x.size());
  if (nu == 0) {
    CompensatedSum acc;
    for (double v : x) acc.add(std::log(v));
    return std::exp(acc.value() / d);
  }
  const double lps = log_power_sum(x, nu);
  if (lps == -kInfinity) return 0.0;
  return std::exp((lps - std::log(d)) / nu);
}

double entropy(const RealVector& x) {
  require_entries(x);
  CompensatedSum acc;
  for (double v : x)
    if (v > 0) acc.add(-v * std::log(v));
  return acc.value();
}

double klimesh_f(const RealVector& x, double r) {
  require_entries(x);
  if (r <= 0 && has_zero(x)) return kInfinity;
  if (r == 1) {
    CompensatedSum acc;
    for (double v : x)
      if (v > 0) acc.add(v * std::log(v));
    return acc.value();
  }
  if (r == 0) {
    CompensatedSum acc;
    for (double v : x) acc.add(-std::log(v));
    return acc.value();
  }
  const double lps = log_power_sum(x, r);
  return (r > 0 && r < 1) ? -lps : lps;
}

const char* to_string(TrumpRelation r) {
  switch (r) {
    case TrumpRelation::Majorized: return "Majorized";
    case TrumpRelation::TrumpedStrictly: return "TrumpedStrictly";
    case TrumpRelation::NotTrumped: return "NotTrumped";
    case TrumpRelation::Boundary: return "Boundary";
    case TrumpRelation::Equal: return "Equal";
  }
  return "?";
}

// --- trumping decision ------------------------------------------------------

namespace {

template <Scalar T>
bool values_equal(const T& a, const T& b) {
  if constexpr (is_exact_v<T>)
    return a == b;
  else
    return std::abs(a - b) <= kFloatTolerance * std::max(std::abs(a), std::abs(b));
}

/// Signs of the net multiplicity (y minus x) at the largest and smallest
/// values where the two multisets differ.
template <Scalar T>
std::pair<int, int> extreme_net_signs(const std::vector<T>& x, const std::vector<T>& y) {
  std::vector<std::pair<T, int>> all;
  for (const auto& v : x) all.emplace_back(v, -1);
  for (const auto& v : y) all.emplace_back(v, +1);
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<int> nets;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    int net = 0;
    while (j < all.size() && values_equal(all[j].first, all[i].first)) net += all[j++].second;
    if (net != 0) nets.push_back(net > 0 ? 1 : -1);
    i = j;
  }
  if (nets.empty()) return {0, 0};
  return {nets.back(), nets.front()};
}

struct Evaluation {
  GridRow row;
  double turgut_margin;  // relative, positive when the strict inequality holds
  double klimesh_margin;
  InequalityCheck turgut;
  InequalityCheck klimesh;
};

class GridEvaluator {
 public:
  GridEvaluator(RealVector x, RealVector y) : x_(std::move(x)), y_(std::move(y)), y_zero_(has_zero(y_)) {}

  Evaluation at(double nu) const {
    Evaluation e;
    e.row.nu = nu;
    e.row.a_x = power_mean(x_, nu);
    e.row.a_y = (nu <= 0 && y_zero_) ? 0.0 : power_mean(y_, nu);
    e.row.f_x = klimesh_f(x_, nu);
    e.row.f_y = klimesh_f(y_, nu);

    const double scale = std::max(e.row.a_x, e.row.a_y);
    const double diff = nu < 1 ? e.row.a_x - e.row.a_y : e.row.a_y - e.row.a_x;
    e.turgut_margin = scale > 0 ? diff / scale : 0.0;
    e.turgut = {nu < 1 ? "T1" : "T2", nu, e.row.a_x, e.row.a_y};

    e.klimesh_margin = relative_gap(e.row.f_x, e.row.f_y);
    e.klimesh = {"f_r", nu, e.row.f_x, e.row.f_y};
    return e;
  }

  /// (b - a)/max(|a|, |b|) with +inf handled.
  static double relative_gap(double a, double b) {
    if (a == b) return 0.0;
    if (b == kInfinity) return 1.0;
    if (a == kInfinity) return -1.0;
    const double scale = std::max(std::abs(a), std::abs(b));
    return (b - a) / scale;
  }

  const RealVector& x() const { return x_; }
  const RealVector& y() const { return y_; }

 private:
  RealVector x_, y_;
  bool y_zero_;
};

int definite(TrumpRelation r) {
  switch (r) {
    case TrumpRelation::Majorized:
    case TrumpRelation::TrumpedStrictly: return 1;
    case TrumpRelation::NotTrumped: return -1;
    default: return 0;
  }
}

TrumpRelation classify(bool failed, bool boundary, bool majorized) {
  if (failed) return TrumpRelation::NotTrumped;
  if (boundary) return TrumpRelation::Boundary;
  return majorized ? TrumpRelation::Majorized : TrumpRelation::TrumpedStrictly;
}

}  // namespace

template <Scalar T>
TrumpingVerdict trumping_decision(const std::vector<T>& x, const std::vector<T>& y, const GridConfig& grid) {
  detail::require_same_length(x, y);
  detail::require_nonnegative(x, "x");
  detail::require_nonnegative(y, "y");
  for (const auto& v : x)
    if (sign_of(v) == 0) throw Error(ErrorCode::XHasZeroEntry, "x has a zero entry");
  if (grid.points < 2 || !(grid.nu_min < grid.nu_max))
    throw Error(ErrorCode::InvalidArgument, "grid needs at least two points on a nonempty interval");

  TrumpingVerdict verdict;
  const T sx = detail::sum(x);
  const T sy = detail::sum(y);
  RealVector px, py;
  for (const auto& v : x) px.push_back(to_double(T(v / sx)));
  for (const auto& v : y) py.push_back(to_double(T(v / sx)));

  auto& lim = verdict.limits;
  lim.a0_x = power_mean(px, 0);
  lim.a0_y = has_zero(py) ? 0.0 : power_mean(py, 0);
  lim.sigma_x = entropy(px);
  lim.sigma_y = entropy(py);
  lim.max_x = power_mean(px, kInfinity);
  lim.max_y = power_mean(py, kInfinity);
  lim.min_x = power_mean(px, -kInfinity);
  lim.min_y = power_mean(py, -kInfinity);
  std::tie(lim.top_sign, lim.bottom_sign) = extreme_net_signs(x, y);

  const GridEvaluator eval(px, py);
  std::vector<Evaluation> evals;
  for (int i = 0; i < grid.points; ++i) {
    const double nu = grid.nu_min + (grid.nu_max - grid.nu_min) * i / (grid.points - 1);
    if (std::abs(nu - 1.0) < 1e-12) continue;
    evals.push_back(eval.at(nu));
  }

  // bisect between neighbours whose normalized margin is small; the margin
  // of the power means vanishes linearly at nu = 1, hence the normalization
  std::size_t budget = grid.refine_budget;
  auto score = [](const Evaluation& e) {
    return e.turgut_margin / std::min(1.0, std::abs(1.0 - e.row.nu));
  };
  std::function<void(const Evaluation&, const Evaluation&)> refine = [&](const Evaluation& a, const Evaluation& b) {
    if (b.row.nu - a.row.nu <= grid.refine_spacing || budget == 0) return;
    if (std::min(score(a), score(b)) >= grid.refine_threshold) return;
    double mid = 0.5 * (a.row.nu + b.row.nu);
    if (mid == 1.0) mid += 0.25 * (b.row.nu - a.row.nu);
    --budget;
    const Evaluation m = eval.at(mid);
    evals.push_back(m);
    refine(a, m);
    refine(m, b);
  };
  const std::size_t coarse = evals.size();
  for (std::size_t i = 0; i + 1 < coarse; ++i) {
    const Evaluation a = evals[i], b = evals[i + 1];
    refine(a, b);
  }
  std::sort(evals.begin(), evals.end(), [](const auto& a, const auto& b) { return a.row.nu < b.row.nu; });

  bool turgut_fail = false, turgut_boundary = false;
  bool klimesh_fail = false, klimesh_boundary = false;
  const double tol = grid.boundary_tolerance;
  for (const auto& e : evals) {
    verdict.grid.push_back(e.row);
    if (e.turgut_margin < -tol) {
      turgut_fail = true;
      verdict.failures.push_back(e.turgut);
    } else if (e.turgut_margin <= tol) {
      turgut_boundary = true;
      verdict.boundaries.push_back(e.turgut);
    }
    if (e.klimesh_margin < -tol) {
      klimesh_fail = true;
      verdict.klimesh_failures.push_back(e.klimesh);
    } else if (e.klimesh_margin <= tol) {
      klimesh_boundary = true;
    }
  }

  // nu = 1: entropy for the power means, x ln x for the f_r family
  const double sigma_margin = GridEvaluator::relative_gap(lim.sigma_y, lim.sigma_x);
  const InequalityCheck t3{"T3", 1.0, lim.sigma_x, lim.sigma_y};
  if (sigma_margin < -tol) {
    turgut_fail = true;
    verdict.failures.push_back(t3);
  } else if (sigma_margin <= tol) {
    turgut_boundary = true;
    verdict.boundaries.push_back(t3);
  }
  const double f1x = klimesh_f(px, 1), f1y = klimesh_f(py, 1);
  const double f1_margin = GridEvaluator::relative_gap(f1x, f1y);
  if (f1_margin < -tol) {
    klimesh_fail = true;
    verdict.klimesh_failures.push_back({"f_r", 1.0, f1x, f1y});
  } else if (f1_margin <= tol) {
    klimesh_boundary = true;
  }

  // nu -> +-inf: the largest (smallest) value where x and y differ decides
  if (lim.top_sign < 0) {
    turgut_fail = klimesh_fail = true;
    verdict.failures.push_back({"nu->+inf", kInfinity, lim.max_x, lim.max_y});
    verdict.klimesh_failures.push_back({"nu->+inf", kInfinity, lim.max_x, lim.max_y});
  }
  if (lim.bottom_sign < 0) {
    turgut_fail = klimesh_fail = true;
    verdict.failures.push_back({"nu->-inf", -kInfinity, lim.min_x, lim.min_y});
    verdict.klimesh_failures.push_back({"nu->-inf", -kInfinity, lim.min_x, lim.min_y});
  }

  bool sums_equal;
  if constexpr (is_exact_v<T>)
    sums_equal = sx == sy;
  else
    sums_equal = std::abs(sx - sy) <= kFloatTolerance * std::max(sx, sy);
  if (!sums_equal) {
    verdict.failures.insert(verdict.failures.begin(), InequalityCheck{"sum", 0.0, to_double(sx), to_double(sy)});
    verdict.relation = TrumpRelation::NotTrumped;
    verdict.klimesh = TrumpRelation::NotTrumped;
    return verdict;
  }

  const auto order = majorizes(x, y);
  if (order.relation == Relation::Equal) {
    verdict.relation = TrumpRelation::Equal;
    verdict.failures.clear();
    verdict.boundaries.clear();
    verdict.klimesh_failures.clear();
    return verdict;
  }
  const bool majorized = order.relation == Relation::XMajorizedByY;

  const TrumpRelation turgut = classify(turgut_fail, turgut_boundary, majorized);
  verdict.klimesh = classify(klimesh_fail, klimesh_boundary, majorized);
  verdict.relation = majorized ? TrumpRelation::Majorized : turgut;
  if (majorized && turgut == TrumpRelation::NotTrumped)
    verdict.disagreements.push_back("x is majorized by y but a power-mean inequality fails");

  if (grid.run_dirichlet && !has_zero(py)) {
    try {
      const auto rescaled = rescale_into_domain(x, y);
      const auto zeta = gd_from_pair(rescaled.x, rescaled.y);
      const double window = std::max(grid.window, certified_tail_window(zeta, grid.window));
      const PositivityVerdict pv = positivity_on_reals(zeta, 2, window);
      verdict.dirichlet = pv;
      switch (pv.kind) {
        case PositivityVerdict::Kind::PositiveEverywhere:
          verdict.dirichlet_relation = majorized ? TrumpRelation::Majorized : TrumpRelation::TrumpedStrictly;
          break;
        case PositivityVerdict::Kind::ViolationAt: verdict.dirichlet_relation = TrumpRelation::NotTrumped; break;
        default: verdict.dirichlet_relation = TrumpRelation::Boundary; break;
      }
    } catch (const Error& e) {
      verdict.disagreements.push_back(std::string("dirichlet check failed: ") + e.what());
    }
  }

  const int t = definite(turgut);
  if (verdict.klimesh && t * definite(*verdict.klimesh) < 0)
    verdict.disagreements.push_back(std::string("power means say ") + to_string(turgut) + ", f_r family says " +
                                    to_string(*verdict.klimesh));
  if (verdict.dirichlet_relation && t * definite(*verdict.dirichlet_relation) < 0)
    verdict.disagreements.push_back(std::string("power means say ") + to_string(turgut) +
                                    ", zeta(s)/(s(s+1)) sign says " + to_string(*verdict.dirichlet_relation));
  return verdict;
}

// --- lattices ---------------------------------------------------------------

RealSnap snap_to_lattice(const RealVector& x, const RealVector& y, double alpha) {
  if (!(alpha > 0)) throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  RealSnap out;
  auto snap = [&](const RealVector& v, RealVector& dst, std::vector<long>& k, const char* name) {
    for (double e : v) {
      if (!(e > 1)) throw Error(ErrorCode::EntriesNotAboveOne, std::string(name) + " has an entry not above 1");
      const long n = std::lround(std::log(e) / alpha);
      const double s = std::exp(alpha * static_cast<double>(n));
      k.push_back(n);
      dst.push_back(s);
      out.max_rel_error = std::max(out.max_rel_error, std::abs(s - e) / e);
    }
  };
  snap(x, out.x, out.kx, "x");
  snap(y, out.y, out.ky, "y");
  return out;
}

namespace {

Rational pow_signed(const Rational& q, long k) {
  if (k >= 0) return rational_pow(q, static_cast<unsigned long>(k));
  return 1 / rational_pow(q, static_cast<unsigned long>(-k));
}

/// round(log v / log q) decided exactly: q^{2k-1} <= v^2 < q^{2k+1}.
long lattice_exponent(const Rational& v, const Rational& q) {
  long k = std::lround(log_of(v) / log_of(q));
  const Rational v2 = v * v;
  while (v2 >= pow_signed(q, 2 * k + 1)) ++k;
  while (v2 < pow_signed(q, 2 * k - 1)) --k;
  return k;
}

}  // namespace

template <Scalar T>
LatticeSnap snap_to_lattice(const std::vector<T>& x, const std::vector<T>& y, const Rational& q) {
  if (q <= 1) throw Error(ErrorCode::InvalidArgument, "lattice ratio q must exceed 1");
  LatticeSnap out;
  auto snap = [&](const std::vector<T>& v, RationalVector& dst, std::vector<long>& k) {
    for (const auto& e : v) {
      const Rational value(e);
      if (sgn(value) <= 0) throw Error(ErrorCode::ZeroEntry, "lattice snapping needs positive entries");
      const long n = lattice_exponent(value, q);
      Rational s = pow_signed(q, n);
      out.max_rel_error = std::max(out.max_rel_error, to_double(Rational(abs(s - value) / value)));
      k.push_back(n);
      dst.push_back(std::move(s));
    }
  };
  snap(x, out.x, out.kx);
  snap(y, out.y, out.ky);
  return out;
}

// --- catalyst certificates --------------------------------------------------

namespace {

RationalPoly poly_from_exponents(const std::vector<long>& kx, const std::vector<long>& ky) {
  long top = 0;
  for (long k : kx) top = std::max(top, k);
  for (long k : ky) top = std::max(top, k);
  std::vector<Rational> c(static_cast<std::size_t>(top) + 1, Rational(0));
  for (long k : ky) c[static_cast<std::size_t>(k)] += 1;
  for (long k : kx) c[static_cast<std::size_t>(k)] -= 1;
  return RationalPoly(std::move(c));
}

RationalPoly lattice_divisor(const Rational& q, int r) {
  RationalPoly d{Rational(1)};
  for (int k = 0; k < r; ++k) d = d * RationalPoly{rational_pow(q, static_cast<unsigned long>(k)), Rational(-1)};
  return d;
}

WeightedVector<Rational> binomial_catalyst(const Rational& q, std::size_t n) {
  WeightedVector<Rational> c;
  Integer binom = 1;
  for (std::size_t j = 0; j <= n; ++j) {
    c.push_back({rational_pow(q, j), binom});
    binom = binom * Integer(static_cast<unsigned long>(n - j)) / Integer(static_cast<unsigned long>(j + 1));
  }
  return c;
}

GDirichlet<Rational> catalyst_zeta(const WeightedVector<Rational>& c) {
  std::vector<DirichletTerm<Rational>> terms;
  for (const auto& e : c) terms.push_back({e.value, Rational(e.multiplicity)});
  return GDirichlet<Rational>(std::move(terms));
}

bool witness_holds(const CatalystCertificate& cert) {
  if (cert.r == 2 || cert.trivial) {
    if (!catalyzes(cert.snapped_x, cert.snapped_y, cert.catalyst)) return false;
    if (cert.catalyst_vector && !catalyzes(cert.snapped_x, cert.snapped_y, *cert.catalyst_vector)) return false;
    return true;
  }
  // zeta*zeta2/prod(s+k) completely monotone; cm_test carries the (-1)^r sign
  auto product = gd_mul(gd_from_pair(cert.snapped_x, cert.snapped_y), catalyst_zeta(cert.catalyst));
  if (cert.r % 2 != 0) product = gd_negate(product);
  return cm_test(product, cert.r).is_cm;
}

CatalystCertificate trivial_certificate(CatalystCertificate cert, RationalVector x, RationalVector y) {
  cert.trivial = true;
  cert.snapped_x = std::move(x);
  cert.snapped_y = std::move(y);
  cert.zeta2 = RationalPoly{Rational(1)};
  cert.polya_n = 0;
  cert.catalyst = {{Rational(1), Integer(1)}};
  cert.catalyst_vector = RationalVector{Rational(1)};
  cert.product_identity = true;
  cert.coefficients_nonnegative = true;
  cert.witness_verified = witness_holds(cert);
  if (!cert.witness_verified) throw std::logic_error("trivial catalyst failed its witness check");
  return cert;
}

}  // namespace

bool verify_certificate(const CatalystCertificate& cert) {
  if (cert.trivial) return witness_holds(cert);
  if (cert.p != poly_from_exponents(cert.exponents_x, cert.exponents_y)) return false;
  if (cert.divisor != lattice_divisor(cert.q, cert.r)) return false;
  if (cert.quotient * cert.divisor != cert.p) return false;
  if (cert.quotient * cert.zeta2 != cert.product) return false;
  if (cert.zeta2 != RationalPoly::one_plus_t_pow(cert.polya_n)) return false;
  if (!cert.zeta2.has_nonnegative_coeffs() || !cert.product.has_nonnegative_coeffs()) return false;
  for (std::size_t i = 0; i < cert.snapped_x.size(); ++i)
    if (cert.snapped_x[i] != pow_signed(cert.q, cert.exponents_x[i])) return false;
  for (std::size_t i = 0; i < cert.snapped_y.size(); ++i)
    if (cert.snapped_y[i] != pow_signed(cert.q, cert.exponents_y[i])) return false;
  return witness_holds(cert);
}

template <Scalar T>
CatalystCertificate catalyst_certificate(const std::vector<T>& x, const std::vector<T>& y, const Rational& q,
                                         std::size_t n_max, int r) {
  detail::require_same_length(x, y);
  detail::require_nonnegative(x, "x");
  detail::require_nonnegative(y, "y");
  if (q <= 1) throw Error(ErrorCode::InvalidArgument, "lattice ratio q must exceed 1");
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "order r must be at least 1");
  RationalVector X, Y;
  for (const auto& v : x) X.emplace_back(v);
  for (const auto& v : y) Y.emplace_back(v);
  for (const auto* v : {&X, &Y})
    for (const auto& e : *v)
      if (sgn(e) == 0) throw Error(ErrorCode::ZeroEntry, "certificates need positive entries");

  CatalystCertificate cert;
  cert.q = q;
  cert.alpha = log_of(q);
  cert.r = r;
  cert.scale = 1;

  const auto order = majorizes(X, Y);
  if (order.relation == Relation::Equal) throw Error(ErrorCode::EqualVectors, "x and y are rearrangements");
  if (r == 2 && order.relation == Relation::XMajorizedByY) return trivial_certificate(cert, X, Y);

  Rational lowest = X.front();
  for (const auto* v : {&X, &Y})
    for (const auto& e : *v) lowest = std::min(lowest, e);
  cert.scale = q / lowest;
  for (auto& e : X) e *= cert.scale;
  for (auto& e : Y) e *= cert.scale;

  LatticeSnap snap = snap_to_lattice(X, Y, q);
  cert.max_rel_error = snap.max_rel_error;
  for (const auto* k : {&snap.kx, &snap.ky})
    for (long e : *k)
      if (e > kMaxCertificateExponent)
        throw Error(ErrorCode::InvalidArgument, "lattice exponent " + std::to_string(e) + " too large; use a larger q");
  cert.snapped_x = snap.x;
  cert.snapped_y = snap.y;
  cert.exponents_x = snap.kx;
  cert.exponents_y = snap.ky;

  const auto snapped_order = majorizes(snap.x, snap.y);
  if (snapped_order.relation == Relation::Equal)
    throw Error(ErrorCode::EqualVectors, "x and y coincide after snapping to the lattice");
  if (r == 2 && snapped_order.relation == Relation::XMajorizedByY)
    return trivial_certificate(cert, snap.x, snap.y);

  cert.p = poly_from_exponents(snap.kx, snap.ky);
  cert.divisor = lattice_divisor(q, r);
  const DivMod dm = divmod(cert.p, cert.divisor);
  if (!dm.remainder.is_zero())
    throw Error(ErrorCode::DivisionNotExact,
                "zeta(-k) does not vanish on the lattice for some k < " + std::to_string(r));
  cert.quotient = dm.quotient;

  if (r == 2) {
    GridConfig cfg;
    cfg.run_dirichlet = false;
    const TrumpingVerdict tv = trumping_decision(snap.x, snap.y, cfg);
    if (tv.relation == TrumpRelation::NotTrumped)
      throw Error(ErrorCode::NotTrumpedAfterSnap, "the snapped pair is not trumped");
  }

  std::optional<PolyaCertificate> polya;
  try {
    polya = polya_multiplier(cert.quotient, n_max);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPositiveOnPositiveAxis) throw;
    throw Error(ErrorCode::NotTrumpedAfterSnap,
                std::string("zeta(s)/prod(s+k) is not positive on the real line: ") + e.what());
  }
  if (!polya) {
    const auto idx = polya_first_negative(cert.quotient, n_max);
    throw Error(ErrorCode::PolyaSearchExhausted,
                "no multiplier (1+t)^n with n <= " + std::to_string(n_max) +
                    (idx ? "; first negative coefficient at degree " + std::to_string(*idx) : std::string()));
  }
  cert.zeta2 = polya->g;
  cert.product = polya->h;
  cert.polya_n = polya->n;
  cert.catalyst = binomial_catalyst(q, cert.polya_n);
  if (cert.polya_n < 63 && (std::size_t{1} << cert.polya_n) <= kMaxExpandedCatalyst)
    cert.catalyst_vector = expand(cert.catalyst);

  cert.product_identity = cert.quotient * cert.divisor == cert.p && cert.quotient * cert.zeta2 == cert.product;
  cert.coefficients_nonnegative = cert.zeta2.has_nonnegative_coeffs() && cert.product.has_nonnegative_coeffs();
  cert.witness_verified = witness_holds(cert);
  if (!cert.product_identity || !cert.coefficients_nonnegative || !cert.witness_verified)
    throw std::logic_error("catalyst certificate failed its own invariants");
  return cert;
}

template TrumpingVerdict trumping_decision(const std::vector<Rational>&, const std::vector<Rational>&,
                                           const GridConfig&);
template TrumpingVerdict trumping_decision(const std::vector<double>&, const std::vector<double>&, const GridConfig&);
template LatticeSnap snap_to_lattice(const std::vector<Rational>&, const std::vector<Rational>&, const Rational&);
template LatticeSnap snap_to_lattice(const std::vector<double>&, const std::vector<double>&, const Rational&);
template CatalystCertificate catalyst_certificate(const std::vector<Rational>&, const std::vector<Rational>&,
                                                  const Rational&, std::size_t, int);
template CatalystCertificate catalyst_certificate(const std::vector<double>&, const std::vector<double>&,
                                                  const Rational&, std::size_t, int);

}  // namespace catmaj
