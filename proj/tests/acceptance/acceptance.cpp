// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "catmaj/dirichlet.hpp"
#include "catmaj/instance.hpp"
#include "catmaj/majorization.hpp"
#include "catmaj/polynomial.hpp"
#include "catmaj/report.hpp"
#include "catmaj/trumping.hpp"
#include "support/oracles.hpp"

#ifndef CATMAJ_FIXTURE_DIR
#error "CATMAJ_FIXTURE_DIR must be defined"
#endif

using namespace catmaj;
using oracle::Q;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (problems.size() < 5) problems.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

RationalVector ints(std::initializer_list<long> v) {
  RationalVector out;
  for (long e : v) out.emplace_back(e);
  return out;
}

std::string show(const std::vector<long>& v) {
  std::string s;
  for (long e : v) s += (s.empty() ? "" : " ") + std::to_string(e);
  return s;
}

std::string show(const RationalVector& v) { return format_vector(v); }

RationalVector normalized(const RationalVector& v) {
  Rational s = 0;
  for (const auto& e : v) s += e;
  RationalVector out;
  for (const auto& e : v) out.push_back(e / s);
  return out;
}

int definite(TrumpRelation r) {
  switch (r) {
    case TrumpRelation::NotTrumped: return -1;
    case TrumpRelation::Boundary: return 0;
    default: return 1;
  }
}

// --- 1 ----------------------------------------------------------------------

Outcome worked_example() {
  Outcome o;
  const auto start = Clock::now();
  const RationalPoly p = poly_from_pair(ints({5, 5, 5, 5}), ints({2, 2, 6, 10}));
  const QuotientCertificate cert = divide_root_one(p, 2);
  const double elapsed = ms_since(start);

  const std::vector<Q> want_p{0, 0, 2, 0, 0, -4, 1, 0, 0, 0, 1};
  const std::vector<Q> want_q{0, 0, 2, 4, 6, 4, 3, 2, 1};
  o.require(p.coeffs() == want_p, "p coefficients");
  o.require(p.coeffs() == oracle::exponent_poly({5, 5, 5, 5}, {2, 2, 6, 10}), "p against exponent oracle");
  o.require(p.to_string() == "t^10 + t^6 - 4t^5 + 2t^2", "p text: " + p.to_string());
  o.require(cert.quotient.coeffs() == want_q, "quotient coefficients");
  o.require(cert.quotient.to_string() == "t^8 + 2t^7 + 3t^6 + 4t^5 + 6t^4 + 4t^3 + 2t^2",
            "quotient text: " + cert.quotient.to_string());
  o.require(cert.remainder_ok && cert.remainders == std::vector<Rational>{0, 0}, "remainder");
  o.require(oracle::poly_mul(want_q, {1, -2, 1}) == want_p, "quotient times (t-1)^2");
  o.require(cert.holds(), "certificate");
  o.require(elapsed < 10.0, "runtime");
  std::ostringstream d;
  d << "p = " << p.to_string() << ", quotient = " << cert.quotient.to_string() << ", " << elapsed << " ms";
  o.detail = d.str();
  return o;
}

// --- 2 ----------------------------------------------------------------------

Outcome moments() {
  Outcome o;
  const auto zq = gd_from_pair(ints({5, 5, 5, 5}), ints({2, 2, 6, 10}));
  o.require(gd_moment(zq, 0) == 0 && gd_moment(zq, 1) == 0, "exact moments");
  const auto zd = gd_from_pair(RealVector{5, 5, 5, 5}, RealVector{2, 2, 6, 10});
  const double m0 = gd_moment(zd, 0), m1 = gd_moment(zd, 1);
  o.require(std::abs(m0) < 1e-12 && std::abs(m1) < 1e-12, "float moments");
  o.require(std::abs(gd_eval(zd, 0.0)) < 1e-12 && std::abs(gd_eval(zd, -1.0)) < 1e-12, "float evaluation");

  // mu_2(t) = sum_n a_n (t - b_n)_+ with a = +2 at 2, -4 at 5, +1 at 6, +1 at 10
  auto hand = [](const Rational& t) {
    const std::vector<std::pair<long, long>> terms{{2, 2}, {5, -4}, {6, 1}, {10, 1}};
    Rational v = 0;
    for (auto [b, a] : terms)
      if (t > b) v += a * (t - b);
    return v;
  };
  const auto report = cm_test(zq, 2);
  const auto& prof = report.mu_profile;
  std::vector<Rational> values;
  const std::vector<Rational> want{0, 6, 4, 0};
  o.require(prof.breakpoints == ints({2, 5, 6, 10}), "breakpoints");
  for (std::size_t j = 0; j < prof.breakpoints.size(); ++j) {
    values.push_back(prof.value_at_breakpoint(j));
    o.require(prof(prof.breakpoints[j]) == hand(prof.breakpoints[j]), "hand computation at breakpoint");
  }
  o.require(values == want, "mu_2 breakpoint values");
  for (int i = 0; i <= 60; ++i) {
    Rational t(i, 4);
    t.canonicalize();
    o.require(prof(t) == hand(t), "profile between breakpoints");
  }
  o.require(report.is_cm, "complete monotonicity");
  std::ostringstream d;
  d << "zeta(0) = " << to_string(gd_moment(zq, 0)) << ", zeta(-1) = " << to_string(gd_moment(zq, 1))
    << " exact; float |zeta(0)|, |zeta(-1)| = " << std::abs(m0) << ", " << std::abs(m1) << "; mu_2 = "
    << show(values);
  o.detail = d.str();
  return o;
}

// --- 3 ----------------------------------------------------------------------

Outcome five_way() {
  Outcome o;
  oracle::Gen g(20261015);
  int pairs = 0, majorized = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const auto d = static_cast<std::size_t>(g.integer(1, 8));
    auto [xi, yi] = oracle::equal_sum_pair(g, d, 1, 30);
    if (trial % 4 == 0) {
      // an independent y with the same total
      yi = g.integers(d, 1, 30);
      long sx = 0, sy = 0;
      for (auto e : xi) sx += e;
      for (auto e : yi) sy += e;
      yi[0] += sx - sy;
      if (yi[0] < 1 || yi[0] > 30) continue;
    }
    const auto x = oracle::to_q(xi), y = oracle::to_q(yi);

    const bool a = majorizes(x, y).x_below_y();
    const RationalPoly p = poly_from_pair(x, y);
    const bool b = p.is_zero() || divide_root_one(p, 2).holds();
    const bool c = nested_sum_test(p.coeffs(), 2);
    const auto scaled = rescale_into_domain(x, y);
    const auto zeta = gd_from_pair(scaled.x, scaled.y);
    const bool dmu = zeta.empty() || cm_test(zeta, 2).is_cm;
    const bool e = oracle::majorized_by_hinges(x, y);
    const bool s = oracle::majorized_by_subsets(x, y);

    ++pairs;
    majorized += e;
    const bool agree = a == e && b == e && c == e && dmu == e && s == e;
    o.require(agree, "x = " + show(xi) + ", y = " + show(yi));
  }
  o.require(pairs >= 1000, "fewer than 1000 pairs");
  std::ostringstream d;
  d << pairs << " pairs (" << majorized << " majorized), " << (o.pass ? 0 : 1) << "+ disagreements";
  if (o.pass) d.str(std::to_string(pairs) + " pairs (" + std::to_string(majorized) + " majorized), 0 disagreements");
  o.detail = d.str();
  return o;
}

// --- 4 ----------------------------------------------------------------------

using IntSeq = std::vector<Integer>;

IntSeq cumulative(IntSeq v, int r) {
  for (int k = 0; k < r; ++k)
    for (std::size_t i = 1; i < v.size(); ++i) v[i] += v[i - 1];
  return v;
}

bool r_convex(IntSeq v, int r) {
  for (int k = 0; k < r; ++k) {
    if (v.size() < 2) return true;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
    v.pop_back();
  }
  for (const auto& e : v)
    if (e < 0) return false;
  return true;
}

Integer pairing(const std::vector<Rational>& a, const IntSeq& chi) {
  Rational s = 0;
  for (std::size_t n = 0; n < a.size(); ++n) s += a[n] * chi[n];
  return Integer(s);
}

// The cone of r-convex sequences on 0..N is generated by +-n^k (k < r) and
// the r-fold cumulative sums of unit vectors.
std::vector<IntSeq> extreme_rays(std::size_t len, int r) {
  std::vector<IntSeq> rays;
  for (int k = 0; k < r; ++k) {
    IntSeq up(len), down(len);
    for (std::size_t n = 0; n < len; ++n) {
      Integer v;
      mpz_ui_pow_ui(v.get_mpz_t(), n, static_cast<unsigned long>(k));
      up[n] = v;
      down[n] = -v;
    }
    rays.push_back(up);
    rays.push_back(down);
  }
  for (std::size_t m = 0; m < len; ++m) {
    IntSeq delta(len, 0);
    delta[m] = 1;
    rays.push_back(cumulative(delta, r));
  }
  return rays;
}

Outcome duality() {
  Outcome o;
  oracle::Gen g(4242);
  int vectors = 0, certified = 0, sampled_misses = 0, sequences = 0;
  for (int r = 1; r <= 4; ++r) {
    for (int trial = 0; trial < 500; ++trial) {
      const auto len = static_cast<std::size_t>(g.integer(r + 1, 13));
      std::vector<Q> a;
      const int kind = trial % 4;
      if (kind == 3) {
        for (std::size_t n = 0; n < len; ++n) a.emplace_back(g.integer(-5, 5));
      } else {
        std::vector<Q> q;
        for (std::size_t n = 0; n + r < len; ++n) q.emplace_back(kind == 0 ? g.integer(0, 6) : g.integer(-2, 6));
        std::vector<Q> base{1};
        for (int k = 0; k < r; ++k) base = oracle::poly_mul(base, {-1, 1});
        a = oracle::poly_mul(q, base);
        if (kind == 2 && !a.empty()) a[static_cast<std::size_t>(g.integer(0, static_cast<long>(a.size()) - 1))] += 1;
      }
      a.resize(len, Q(0));
      ++vectors;

      const bool nested = nested_sum_test(a, r);
      certified += nested;

      bool rays_nonneg = true;
      for (const auto& chi : extreme_rays(len, r)) rays_nonneg = rays_nonneg && pairing(a, chi) >= 0;

      bool sampled_nonneg = true;
      for (int s = 0; s < 200; ++s) {
        IntSeq base(len);
        for (auto& e : base) e = g.integer(0, 3) == 0 ? g.integer(0, 9) : 0;
        IntSeq chi = cumulative(base, r);
        for (int k = 0; k < r; ++k) {
          const long coef = g.integer(-10, 10);
          for (std::size_t n = 0; n < len; ++n) {
            Integer v;
            mpz_ui_pow_ui(v.get_mpz_t(), n, static_cast<unsigned long>(k));
            chi[n] += coef * v;
          }
        }
        o.require(r_convex(chi, r), "generated sequence is not r-convex");
        ++sequences;
        sampled_nonneg = sampled_nonneg && pairing(a, chi) >= 0;
      }
      // certificate => inequality on every sampled sequence
      o.require(!nested || sampled_nonneg, "certified vector fails on a sampled sequence (r = " + std::to_string(r) + ")");
      // exact both ways against the generators of the cone
      o.require(nested == rays_nonneg, "nested_sum_test disagrees with the extreme rays (r = " + std::to_string(r) + ")");
      if (!nested && sampled_nonneg) ++sampled_misses;
    }
  }
  std::ostringstream d;
  d << vectors << " coefficient vectors (r = 1..4, " << certified << " certified), " << sequences
    << " sampled r-convex sequences; 0 false negatives against the extreme rays; " << sampled_misses
    << " non-certified vectors not refuted by the random sample alone";
  o.detail = d.str();
  return o;
}

// --- 5 ----------------------------------------------------------------------

Outcome trumping_agreement() {
  Outcome o;
  oracle::Gen g(555);
  int pairs = 0, strict = 0, confirmed = 0, boundary = 0, equal = 0;
  const auto check = [&](const RationalVector& x, const RationalVector& y) {
    GridConfig cfg;
    const auto v = trumping_decision(x, y, cfg);
    ++pairs;
    const std::string where = "x = " + show(x) + ", y = " + show(y);
    o.require(v.disagreements.empty(), where + ": " + (v.disagreements.empty() ? "" : v.disagreements.front()));
    if (v.relation == TrumpRelation::Equal) {
      o.require(sort_desc(x) == sort_desc(y), where + ": Equal for distinct vectors");
      ++equal;
      return;
    }
    o.require(v.klimesh.has_value() && v.dirichlet_relation.has_value(), where + ": missing verdict");
    if (!v.klimesh || !v.dirichlet_relation) return;
    const int t = definite(v.relation), k = definite(*v.klimesh), z = definite(*v.dirichlet_relation);
    o.require(t * k >= 0 && t * z >= 0 && k * z >= 0, where + ": verdicts disagree");
    boundary += t == 0 || k == 0 || z == 0;
    std::optional<std::vector<Q>> catalyst;
    for (const Q& q : {Q(2), Q(3, 2), Q(4, 3), Q(3)})
      if (!catalyst) catalyst = oracle::lattice_catalyst(x, y, q);
    if (catalyst) o.require(v.relation != TrumpRelation::NotTrumped, where + ": catalyst exists but NotTrumped");
    if (v.relation == TrumpRelation::TrumpedStrictly) {
      ++strict;
      if (catalyst) {
        o.require(catalyzes(x, y, *catalyst), where + ": catalyst rejected");
        ++confirmed;
      }
    }
  };
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = static_cast<std::size_t>(g.integer(2, 6));
    auto [xi, yi] = oracle::equal_sum_pair(g, d, 1, 20);
    check(normalized(oracle::to_q(xi)), normalized(oracle::to_q(yi)));
  }
  // x = (a, a, b, b), y = (p, q, q, s): the shape of the classic catalysis instance
  for (long a = 2; a <= 8; ++a)
    for (long b = 1; b < a; ++b)
      for (long q = 1; q <= 8; ++q)
        for (long p = q + 1; p <= 2 * (a + b); ++p) {
          const long rest = 2 * (a + b) - p - 2 * q;
          if (rest < 1 || rest >= q || p <= a) continue;
          check(normalized(ints({a, a, b, b})), normalized(ints({p, q, q, rest})));
        }
  o.require(pairs >= 200, "fewer than 200 pairs");
  o.require(confirmed > 0, "no catalyst confirmations");
  std::ostringstream d;
  d << pairs << " zero-free pairs, " << strict << " strictly trumped, " << confirmed
    << " confirmed by a brute-force lattice catalyst (q = 2, 3/2, 4/3, 3), " << boundary << " with a Boundary verdict, " << equal
    << " rearrangements";
  o.detail = d.str();
  return o;
}

// --- 6 ----------------------------------------------------------------------

Outcome catalysis_witness() {
  Outcome o;
  const auto start = Clock::now();
  const RealVector x{0.4, 0.4, 0.1, 0.1}, y{0.5, 0.25, 0.25, 0}, c{0.6, 0.4};
  const bool works = catalyzes(x, y, c);
  const auto plain = majorizes(x, y).relation;
  const double elapsed = ms_since(start);
  o.require(works, "catalyzes is false");
  o.require(plain == Relation::Incomparable, std::string("majorizes gives ") + to_string(plain));

  const RationalVector qx{Rational(2, 5), Rational(2, 5), Rational(1, 10), Rational(1, 10)};
  const RationalVector qy{Rational(1, 2), Rational(1, 4), Rational(1, 4), Rational(0)};
  const RationalVector qc{Rational(3, 5), Rational(2, 5)};
  const auto tv = majorizes(tensor(qx, qc), tensor(qy, qc));
  RationalVector want_y, want_x;
  for (const char* s : {"3/10", "1/2", "13/20", "4/5", "9/10", "1", "1", "1"}) want_y.push_back(parse_rational(s));
  for (const char* s : {"6/25", "12/25", "16/25", "4/5", "43/50", "23/25", "24/25", "1"})
    want_x.push_back(parse_rational(s));
  o.require(tv.witness.x == want_x && tv.witness.y == want_y, "tensor prefix sums");
  o.require(oracle::majorized_by_hinges(oracle::kron(qx, qc), oracle::kron(qy, qc)), "hinge oracle with catalyst");
  o.require(!oracle::majorized_by_hinges(qx, qy) && !oracle::majorized_by_hinges(qy, qx), "hinge oracle without");
  o.require(elapsed < 10.0, "runtime");
  std::ostringstream d;
  d << "catalyzes = true, majorizes = Incomparable, prefix sums of x(x)c: " << show(tv.witness.x) << "; "
    << elapsed << " ms";
  o.detail = d.str();
  return o;
}

// --- 7 ----------------------------------------------------------------------

bool lattice_instance(const Instance& inst, const Rational& q) {
  if (inst.x.size() != inst.y.size() || inst.x.empty()) return false;
  Rational low = inst.x.front();
  for (const auto* v : {&inst.x, &inst.y})
    for (const auto& e : *v) {
      if (e <= 0) return false;
      low = std::min(low, e);
    }
  for (const auto* v : {&inst.x, &inst.y})
    for (const auto& e : *v) {
      Rational ratio = e / low;
      while (ratio > 1 && ratio / q >= 1) ratio /= q;
      if (ratio != 1) return false;
    }
  return true;
}

Outcome certificates() {
  Outcome o;
  const Rational q = 2;
  int found = 0;
  std::size_t worst_n = 0;
  const auto start = Clock::now();
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(CATMAJ_FIXTURE_DIR)) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    Instance inst;
    try {
      inst = load_instance(path.string());
    } catch (const Error&) {
      continue;
    }
    if (!lattice_instance(inst, q) || oracle::majorized_by_hinges(inst.x, inst.y) ||
        !oracle::lattice_catalyst(inst.x, inst.y, q))
      continue;
    ++found;
    const std::string name = path.filename().string();
    const auto run = run_certify(inst, {});
    o.require(run.exit_code == exit_code::kHolds, name + ": certify exit " + std::to_string(run.exit_code));
    const auto cert = catalyst_certificate(inst.x, inst.y, q);
    worst_n = std::max(worst_n, cert.polya_n);
    o.require(cert.polya_n <= 512, name + ": n > 512");
    o.require(cert.p.coeffs() == oracle::exponent_poly(cert.exponents_x, cert.exponents_y), name + ": p");
    o.require(oracle::poly_mul(cert.quotient.coeffs(), {2, -3, 1}) == cert.p.coeffs(), name + ": division");
    o.require(cert.zeta2.coeffs() == oracle::binomial_row(cert.polya_n), name + ": multiplier");
    o.require(oracle::poly_mul(cert.quotient.coeffs(), cert.zeta2.coeffs()) == cert.product.coeffs(),
              name + ": product identity");
    bool nonneg = true;
    for (const auto& e : cert.product.coeffs()) nonneg = nonneg && e >= 0;
    o.require(nonneg, name + ": negative coefficient");
    RationalVector catalyst;
    for (std::size_t j = 0; j <= cert.polya_n; ++j) {
      const Rational v = rational_pow(q, static_cast<unsigned long>(j));
      for (Q m = oracle::binomial_row(cert.polya_n)[j]; m > 0; m -= 1) catalyst.push_back(v);
    }
    o.require(catalyzes(cert.snapped_x, cert.snapped_y, catalyst), name + ": catalyzes");
    o.require(oracle::majorized_by_hinges(oracle::kron(cert.snapped_x, catalyst), oracle::kron(cert.snapped_y, catalyst)),
              name + ": hinge oracle");
  }
  const double elapsed = ms_since(start);
  o.require(found >= 3, "fewer than 3 fixtures");
  o.require(elapsed < 60000.0, "runtime");
  std::ostringstream d;
  d << found << " trumped lattice fixtures certified, largest Polya n = " << worst_n << ", " << elapsed << " ms";
  o.detail = d.str();
  return o;
}

// --- 8 ----------------------------------------------------------------------

Outcome limits() {
  Outcome o;
  oracle::Gen g(808);
  int pairs = 0;
  double worst = 0;
  while (pairs < 100) {
    const auto d = static_cast<std::size_t>(g.integer(2, 6));
    auto [xi, yi] = oracle::equal_sum_pair(g, d, 1, 40);
    const auto x = normalized(oracle::to_q(xi)), y = normalized(oracle::to_q(yi));
    if (sort_desc(x) == sort_desc(y)) continue;
    ++pairs;
    const auto scaled = rescale_into_domain(x, y);
    const auto zeta = gd_from_pair(scaled.x, scaled.y);
    const double c = to_double(scaled.factor);

    long double f0x = 0, f0y = 0, sx = 0, sy = 0;
    for (const auto& e : x) {
      const long double v = to_double(e);
      f0x -= std::log(v);
      sx -= v * std::log(v);
    }
    for (const auto& e : y) {
      const long double v = to_double(e);
      f0y -= std::log(v);
      sy -= v * std::log(v);
    }
    const double want0 = static_cast<double>(f0y - f0x), want1 = static_cast<double>(sx - sy);
    const double got0 = removable_limit(zeta, 2, 0), got1 = removable_limit(zeta, 2, 1) / c;
    const double e0 = std::abs(got0 - want0) / std::abs(want0), e1 = std::abs(got1 - want1) / std::abs(want1);
    worst = std::max({worst, e0, e1});
    o.require(e0 < 1e-9 && e1 < 1e-9, "x = " + show(x) + ", y = " + show(y));
  }
  std::ostringstream d;
  d << pairs << " pairs, worst relative error " << worst;
  o.detail = d.str();
  return o;
}

// --- 9 ----------------------------------------------------------------------

std::vector<Q> positive_quadratic(oracle::Gen& g) {
  // a t^2 - b t + c with b^2 < 4ac
  const Q a = g.rational(1, 9, 5), c = g.rational(1, 9, 5);
  const double bound = 2 * std::sqrt(to_double(a * c));
  Q b(static_cast<long>(std::floor(g.real(-0.5, 0.97) * bound * 1000)), 1000);
  b.canonicalize();
  if (b * b >= 4 * a * c) b = 0;
  return {c, -b, a};
}

Outcome polya() {
  Outcome o;
  oracle::Gen g(909);
  std::size_t worst = 0;
  int count = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Q> f = positive_quadratic(g);
    if (trial % 2 == 1) f = oracle::poly_mul(f, positive_quadratic(g));
    const auto cert = polya_multiplier(RationalPoly(f), kDefaultPolyaMax);
    ++count;
    o.require(cert.has_value(), "no multiplier for trial " + std::to_string(trial));
    if (!cert) continue;
    worst = std::max(worst, cert->n);
    const auto h = oracle::poly_mul(f, oracle::binomial_row(cert->n));
    o.require(cert->h.coeffs() == h, "identity f (1+x)^n = h");
    bool nonneg = true;
    for (const auto& e : h) nonneg = nonneg && e >= 0;
    o.require(nonneg, "negative coefficient in h");
    if (cert->n > 0) {
      bool earlier_negative = false;
      for (const auto& e : oracle::poly_mul(f, oracle::binomial_row(cert->n - 1))) earlier_negative |= e < 0;
      o.require(earlier_negative, "n is not minimal");
    }
  }
  const auto basic = polya_multiplier(RationalPoly({1, -1, 1}), kDefaultPolyaMax);
  o.require(basic && basic->n == 1 && basic->h == RationalPoly({1, 0, 0, 1}), "x^2 - x + 1");
  std::ostringstream d;
  d << count << " quadratics/quartics, largest n = " << worst << "; x^2 - x + 1 gives n = "
    << (basic ? std::to_string(basic->n) : "none") << ", h = " << (basic ? basic->h.to_string('x') : "none");
  o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"worked example quotient", worked_example},
      {"moment checks and mu_2", moments},
      {"five-way majorization equivalence", five_way},
      {"r-convex duality", duality},
      {"trumping agreement", trumping_agreement},
      {"catalysis witness", catalysis_witness},
      {"certificate pipeline on fixtures", certificates},
      {"limit identities", limits},
      {"Polya multipliers", polya},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("criterion %d (%s): %s - %s\n", index, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    for (const auto& p : o.problems) std::printf("    %s\n", p.c_str());
  }
  return failures == 0 ? 0 : 1;
}
