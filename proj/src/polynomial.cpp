#include "catmaj/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace catmaj {

// --- RationalPoly -----------------------------------------------------------

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::one_plus_t_pow(std::size_t n) {
  std::vector<Rational> v(n + 1);
  Integer binom = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    v[k] = Rational(binom);
    binom = binom * static_cast<unsigned long>(n - k) / static_cast<unsigned long>(k + 1);
  }
  return RationalPoly(std::move(v));
}

std::size_t RationalPoly::low_order() const {
  std::size_t m = 0;
  while (m < coeffs_.size() && coeffs_[m] == 0) ++m;
  return coeffs_.empty() ? 0 : m;
}

Rational RationalPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double RationalPoly::eval(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + to_double(*it);
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::shift_down(std::size_t m) const {
  if (m > coeffs_.size()) return {};
  return RationalPoly(std::vector<Rational>(coeffs_.begin() + static_cast<long>(m), coeffs_.end()));
}

bool RationalPoly::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c >= 0; });
}

std::vector<std::size_t> RationalPoly::negative_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] < 0) out.push_back(i);
  return out;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RationalPoly operator-(const RationalPoly& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& c : v) c = -c;
  return RationalPoly(std::move(v));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(v));
}

RationalPoly operator*(const Rational& c, const RationalPoly& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& e : v) e *= c;
  return RationalPoly(std::move(v));
}

std::string RationalPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    const bool integral = mag.get_den() == 1;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << (integral ? mag.get_str() : "(" + mag.get_str() + ")");
    out << var;
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

// --- division, gcd ----------------------------------------------------------

DivMod divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const auto& den = b.coeffs();
  const std::size_t db = den.size() - 1;
  if (rem.size() < den.size()) return {RationalPoly(), a};
  std::vector<Rational> quo(rem.size() - db);
  const Rational lead = den.back();
  for (std::size_t i = quo.size(); i-- > 0;) {
    Rational q = rem[i + db] / lead;
    quo[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * den[j];
  }
  rem.resize(db);
  return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
}

namespace {

RationalPoly make_monic(const RationalPoly& p) {
  if (p.is_zero()) return p;
  return Rational(1 / p.leading()) * p;
}

/// Clears denominators and content so Sturm/gcd chains keep small numbers.
RationalPoly primitive(const RationalPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    Integer n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  return factor * p;
}

}  // namespace

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = primitive(divmod(a, b).remainder);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.degree() <= 0) return p;
  RationalPoly g = gcd(p, p.derivative());
  return primitive(divmod(p, g).quotient);
}

// --- Sturm ------------------------------------------------------------------

SturmSequence::SturmSequence(const RationalPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm sequence of the zero polynomial");
  chain_.push_back(primitive(squarefree_part(p)));
  if (chain_.back().degree() >= 1) chain_.push_back(primitive(chain_.back().derivative()));
  while (chain_.back().degree() >= 1) {
    RationalPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).remainder;
    if (r.is_zero()) break;
    chain_.push_back(primitive(-r));
  }
}

namespace {

int count_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int SturmSequence::sign_changes_at(const Rational& t) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sgn(p(t)));
  return count_changes(signs);
}

int SturmSequence::sign_changes_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sgn(p.leading()));
  return count_changes(signs);
}

int SturmSequence::sign_changes_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sgn(p.leading()) * (p.degree() % 2 == 0 ? 1 : -1));
  return count_changes(signs);
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  return sign_changes_at(lo) - sign_changes_at(hi);
}

int SturmSequence::count_roots_above(const Rational& lo) const {
  return sign_changes_at(lo) - sign_changes_at_pos_inf();
}

Rational root_bound(const RationalPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational worst = 0;
  const Rational lead = abs(p.leading());
  for (long i = 0; i < p.degree(); ++i) {
    Rational ratio = abs(p.coeff(static_cast<std::size_t>(i))) / lead;
    if (ratio > worst) worst = ratio;
  }
  return Rational(1 + worst);
}

namespace {

/// Sign of p just to the right (dir=+1) or left (dir=-1) of a root t.
int side_sign(const RationalPoly& p, const Rational& t, int dir) {
  RationalPoly d = p;
  for (int order = 0; !d.is_zero(); ++order) {
    int s = sgn(d(t));
    if (s != 0) return (dir < 0 && order % 2 == 1) ? -s : s;
    d = d.derivative();
  }
  return 0;
}

void isolate(const RationalPoly& s, const SturmSequence& sturm, const Rational& a, const Rational& b,
             int count, std::vector<Rational>& endpoints) {
  if (count <= 0) return;
  if (count == 1) {
    endpoints.push_back(a);
    endpoints.push_back(b);
    return;
  }
  static const int kSplits[][2] = {{1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 5}, {3, 7}, {4, 7}, {5, 11}};
  Rational mid;
  for (const auto& f : kSplits) {
    mid = a + (b - a) * Rational(f[0], f[1]);
    if (s(mid) != 0) break;
  }
  isolate(s, sturm, a, mid, sturm.count_roots(a, mid), endpoints);
  isolate(s, sturm, mid, b, sturm.count_roots(mid, b), endpoints);
}

}  // namespace

std::optional<Rational> find_negative_point(const RationalPoly& p, const Rational& lo,
                                            const std::optional<Rational>& hi) {
  if (p.is_zero()) return std::nullopt;
  if (hi && *hi < lo) throw Error(ErrorCode::InvalidArgument, "empty interval");
  if (p.degree() == 0) {
    if (p.leading() < 0) return lo;
    return std::nullopt;
  }

  Rational top;
  if (hi) {
    top = *hi;
  } else {
    Rational bound = root_bound(p);
    top = (bound > lo ? bound : lo) + 1;
    // beyond every root the sign is that of the leading coefficient
    if (p.leading() < 0) return top;
  }

  if (p(lo) < 0) return lo;
  if (p(top) < 0) return top;
  if (lo == top) return std::nullopt;

  const RationalPoly s = squarefree_part(p);
  const SturmSequence sturm(s);
  std::vector<Rational> endpoints;
  isolate(s, sturm, lo, top, sturm.count_roots(lo, top), endpoints);
  for (const auto& t : endpoints)
    if (p(t) < 0) return t;

  auto walk_in = [&](const Rational& from, int dir) {
    Rational w = (top - lo) / 2;
    for (;;) {
      Rational t = from + w * dir;
      if (p(t) < 0) return t;
      w /= 2;
    }
  };
  if (p(lo) == 0 && side_sign(p, lo, +1) < 0) return walk_in(lo, +1);
  if (hi && p(top) == 0 && side_sign(p, top, -1) < 0) return walk_in(top, -1);
  return std::nullopt;
}

// --- lattice forms ----------------------------------------------------------

LatticePair lattice_form(const RationalVector& x, const RationalVector& y) {
  detail::require_same_length(x, y);
  detail::require_nonnegative(x, "x");
  detail::require_nonnegative(y, "y");

  Integer den_lcm = 1;
  for (const auto* v : {&x, &y})
    for (const auto& e : *v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), e.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto* v : {&x, &y})
    for (const auto& e : *v) {
      Integer n = e.get_num() * (den_lcm / e.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
  if (num_gcd == 0) num_gcd = 1;

  LatticePair out;
  out.scale = Rational(den_lcm, num_gcd);
  out.scale.canonicalize();
  auto convert = [&](const RationalVector& v, std::vector<long>& dst) {
    for (const auto& e : v) {
      Rational scaled = e * out.scale;
      if (scaled.get_den() != 1) throw Error(ErrorCode::NonIntegerEntries, "entry off the lattice");
      if (scaled > kMaxLatticeExponent)
        throw Error(ErrorCode::NonIntegerEntries,
                    "lattice exponent " + scaled.get_str() + " exceeds " + std::to_string(kMaxLatticeExponent));
      dst.push_back(scaled.get_num().get_si());
    }
  };
  convert(x, out.x);
  convert(y, out.y);
  return out;
}

LatticePair lattice_form(const RealVector& x, const RealVector& y) {
  auto exact = [](const RealVector& v) {
    RationalVector out;
    for (double e : v) {
      if (!std::isfinite(e) || std::floor(e) != e)
        throw Error(ErrorCode::NonIntegerEntries, "entry " + format_real(e) + " is not an integer");
      out.emplace_back(e);
    }
    return out;
  };
  return lattice_form(exact(x), exact(y));
}

RationalPoly poly_from_lattice(const LatticePair& pair) {
  long top = 0;
  for (long e : pair.x) top = std::max(top, e);
  for (long e : pair.y) top = std::max(top, e);
  std::vector<Rational> c(static_cast<std::size_t>(top) + 1);
  for (long e : pair.y) c[static_cast<std::size_t>(e)] += 1;
  for (long e : pair.x) c[static_cast<std::size_t>(e)] -= 1;
  return RationalPoly(std::move(c));
}

RationalPoly poly_from_pair(const RationalVector& x, const RationalVector& y) {
  return poly_from_lattice(lattice_form(x, y));
}

RationalPoly poly_from_pair(const RealVector& x, const RealVector& y) {
  return poly_from_lattice(lattice_form(x, y));
}

// --- quotient certificate ---------------------------------------------------

QuotientCertificate divide_root_one(const RationalPoly& p, int r) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root-at-one test needs a nonzero polynomial");
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "order r must be >= 1");

  QuotientCertificate cert;
  cert.r = r;
  std::vector<Rational> cur = p.coeffs();
  for (int step = 0; step < r; ++step) {
    if (cur.empty()) {
      cert.remainders.emplace_back(0);
      continue;
    }
    // synthetic division by (t - 1)
    std::vector<Rational> quo(cur.size() - 1);
    Rational carry = 0;
    for (std::size_t i = cur.size(); i-- > 1;) {
      carry += cur[i];
      quo[i - 1] = carry;
    }
    cert.remainders.push_back(Rational(carry + cur[0]));
    cur = std::move(quo);
  }
  cert.quotient = RationalPoly(std::move(cur));
  cert.remainder_ok = std::all_of(cert.remainders.begin(), cert.remainders.end(),
                                  [](const Rational& v) { return v == 0; });
  cert.negative_indices = cert.quotient.negative_indices();
  return cert;
}

RationalPoly QuotientCertificate::reconstruct() const {
  const RationalPoly t_minus_one{Rational(-1), Rational(1)};
  RationalPoly acc = quotient;
  for (std::size_t k = remainders.size(); k-- > 0;) acc = acc * t_minus_one + RationalPoly{remainders[k]};
  return acc;
}

// --- nested sums ------------------------------------------------------------

std::vector<Rational> iterated_cumulative_sums(const std::vector<Rational>& coeffs, int r) {
  std::vector<Rational> mu = coeffs;
  for (int k = 0; k < r; ++k) {
    Rational running = 0;
    for (auto& v : mu) {
      running += v;
      v = running;
    }
  }
  return mu;
}

std::vector<Rational> power_moments(const std::vector<Rational>& coeffs, int r) {
  std::vector<Rational> moments(static_cast<std::size_t>(std::max(r, 0)));
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    Rational power = 1;  // n^0 = 1, including n = 0
    for (int k = 0; k < r; ++k) {
      moments[static_cast<std::size_t>(k)] += power * coeffs[n];
      power *= static_cast<long>(n);
    }
  }
  return moments;
}

bool nested_sum_test(const std::vector<Rational>& coeffs, int r) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "order r must be >= 1");
  for (const auto& m : power_moments(coeffs, r))
    if (m != 0) return false;
  const int sign = (r % 2 == 0) ? 1 : -1;
  for (const auto& v : iterated_cumulative_sums(coeffs, r))
    if (sign * sgn(v) < 0) return false;
  return true;
}

// --- Pólya ------------------------------------------------------------------

namespace {

/// Integer coefficients proportional (by a positive factor) to f.
std::vector<Integer> integer_image(const RationalPoly& f) {
  Integer den_lcm = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(Integer(c.get_num() * (den_lcm / c.get_den())));
  return out;
}

void times_one_plus_x(std::vector<Integer>& h) {
  h.push_back(0);
  for (std::size_t i = h.size() - 1; i > 0; --i) h[i] += h[i - 1];
}

std::optional<std::size_t> first_negative(const std::vector<Integer>& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] < 0) return i;
  return std::nullopt;
}

void require_positive_on_axis(const RationalPoly& reduced) {
  if (reduced.coeff(0) <= 0)
    throw Error(ErrorCode::NotPositiveOnPositiveAxis, "not positive at 0 after removing powers of x");
  if (reduced.leading() <= 0)
    throw Error(ErrorCode::NotPositiveOnPositiveAxis, "negative leading coefficient");
  if (reduced.degree() >= 1 && SturmSequence(reduced).count_roots_above(Rational(0)) > 0)
    throw Error(ErrorCode::NotPositiveOnPositiveAxis, "has a positive real root");
}

}  // namespace

std::optional<PolyaCertificate> polya_multiplier(const RationalPoly& f, std::size_t n_max) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Pólya multiplier of the zero polynomial");
  const RationalPoly reduced = f.shift_down(f.low_order());
  require_positive_on_axis(reduced);

  std::vector<Integer> h = integer_image(reduced);
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (!first_negative(h)) {
      PolyaCertificate cert;
      cert.n = n;
      cert.g = RationalPoly::one_plus_t_pow(n);
      cert.h = f * cert.g;
      return cert;
    }
    if (n < n_max) times_one_plus_x(h);
  }
  return std::nullopt;
}

std::optional<std::size_t> polya_first_negative(const RationalPoly& f, std::size_t n) {
  std::vector<Integer> h = integer_image(f);
  for (std::size_t k = 0; k < n; ++k) times_one_plus_x(h);
  return first_negative(h);
}

// --- differences ------------------------------------------------------------

namespace {

std::vector<long> signed_binomials(int r) {
  std::vector<long> c(static_cast<std::size_t>(r) + 1);
  long b = 1;
  for (int j = 0; j <= r; ++j) {
    c[static_cast<std::size_t>(j)] = (j % 2 == 0) ? b : -b;
    b = b * (r - j) / (j + 1);
  }
  return c;
}

}  // namespace

template <Scalar T>
std::vector<T> finite_difference(const std::vector<T>& chi, int r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "order r must be >= 0");
  const auto c = signed_binomials(r);
  std::vector<T> out(chi.size());
  for (std::size_t n = 0; n < chi.size(); ++n) {
    T acc = 0;
    for (int j = 0; j <= r && static_cast<std::size_t>(j) <= n; ++j)
      acc += T(static_cast<double>(c[static_cast<std::size_t>(j)])) * chi[n - static_cast<std::size_t>(j)];
    out[n] = acc;
  }
  return out;
}

template <Scalar T>
bool is_r_convex_sequence(const std::vector<T>& chi, int r, DifferenceBoundary mode) {
  if (chi.empty()) throw Error(ErrorCode::EmptyVector, "sequence is empty");
  const auto diff = finite_difference(chi, r);
  double scale = 0.0;
  for (const auto& v : chi) scale = std::max(scale, std::abs(to_double(v)));
  const std::size_t start = mode == DifferenceBoundary::InteriorOnly ? static_cast<std::size_t>(r) : 0;
  for (std::size_t n = start; n < diff.size(); ++n) {
    if constexpr (is_exact_v<T>) {
      if (diff[n] < 0) return false;
    } else {
      if (diff[n] < -kFloatTolerance * scale * std::ldexp(1.0, r)) return false;
    }
  }
  return true;
}

template <Scalar T>
T divided_difference(const std::vector<T>& nodes, const std::vector<T>& values) {
  if (nodes.size() != values.size())
    throw Error(ErrorCode::LengthMismatch, "nodes and values differ in length");
  if (nodes.empty()) throw Error(ErrorCode::EmptyVector, "no nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j]) throw Error(ErrorCode::DuplicateNodes, "nodes must be pairwise distinct");

  std::vector<T> table = values;
  for (std::size_t level = 1; level < nodes.size(); ++level)
    for (std::size_t i = 0; i + level < nodes.size(); ++i)
      table[i] = T((table[i + 1] - table[i]) / (nodes[i + level] - nodes[i]));
  return table[0];
}

template std::vector<Rational> finite_difference(const std::vector<Rational>&, int);
template std::vector<double> finite_difference(const std::vector<double>&, int);
template bool is_r_convex_sequence(const std::vector<Rational>&, int, DifferenceBoundary);
template bool is_r_convex_sequence(const std::vector<double>&, int, DifferenceBoundary);
template Rational divided_difference(const std::vector<Rational>&, const std::vector<Rational>&);
template double divided_difference(const std::vector<double>&, const std::vector<double>&);

}  // namespace catmaj
