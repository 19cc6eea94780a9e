#pragma once

// Independent reference implementations used by the tests. None of these
// call into the library's decision procedures.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;

/// Largest sum over any k-element subset, by enumerating subsets.
template <typename T>
std::vector<T> subset_maxima(const std::vector<T>& v) {
  const std::size_t d = v.size();
  std::vector<T> best(d + 1, T(0));
  std::vector<bool> seen(d + 1, false);
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    T s = 0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (mask & (1u << i)) {
        s += v[i];
        ++k;
      }
    if (!seen[k] || s > best[k]) best[k] = s;
    seen[k] = true;
  }
  return best;
}

/// x ≺ y for d <= 16 via subset maxima (exact for rationals).
inline bool majorized_by_subsets(const std::vector<Q>& x, const std::vector<Q>& y) {
  const auto mx = subset_maxima(x);
  const auto my = subset_maxima(y);
  if (mx.back() != my.back()) return false;
  for (std::size_t k = 1; k < mx.size(); ++k)
    if (mx[k] > my[k]) return false;
  return true;
}

/// x ≺ y via hinge sums at every entry value.
template <typename T>
bool majorized_by_hinges(const std::vector<T>& x, const std::vector<T>& y, double tol = 0) {
  auto sum = [](const std::vector<T>& v) {
    T s = 0;
    for (const auto& e : v) s += e;
    return s;
  };
  const T sx = sum(x), sy = sum(y);
  auto le = [&](const T& a, const T& b) {
    if constexpr (std::is_same_v<T, double>)
      return a <= b + tol * std::max(std::abs(sx), std::abs(sy));
    else
      return a <= b;
  };
  if (!le(sx, sy) || !le(sy, sx)) return false;
  std::vector<T> thetas(x);
  thetas.insert(thetas.end(), y.begin(), y.end());
  for (const auto& th : thetas) {
    T hx = 0, hy = 0;
    for (const auto& v : x)
      if (v > th) hx += v - th;
    for (const auto& v : y)
      if (v > th) hy += v - th;
    if (!le(hx, hy)) return false;
  }
  return true;
}

template <typename T>
std::vector<T> kron(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  for (const auto& u : a)
    for (const auto& v : b) out.push_back(u * v);
  return out;
}

/// Coefficient convolution, low-to-high.
inline std::vector<Q> poly_mul(const std::vector<Q>& a, const std::vector<Q>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Q> out(a.size() + b.size() - 1, Q(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// Binomial row C(n, 0..n).
inline std::vector<Q> binomial_row(std::size_t n) {
  std::vector<Q> row{Q(1)};
  for (std::size_t k = 0; k < n; ++k) row = poly_mul(row, {Q(1), Q(1)});
  return row;
}

/// sum_i t^{y_i} - sum_i t^{x_i} for nonnegative integer entries.
inline std::vector<Q> exponent_poly(const std::vector<long>& x, const std::vector<long>& y) {
  long top = 0;
  for (auto v : x) top = std::max(top, v);
  for (auto v : y) top = std::max(top, v);
  std::vector<Q> out(top + 1, Q(0));
  for (auto v : y) out[v] += 1;
  for (auto v : x) out[v] -= 1;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// ((1/d) sum x^nu)^(1/nu), direct formula.
inline double power_mean(const std::vector<double>& x, double nu) {
  if (nu == 0) {
    double s = 0;
    for (double v : x) s += std::log(v);
    return std::exp(s / x.size());
  }
  double s = 0;
  for (double v : x) s += std::pow(v, nu);
  return std::pow(s / x.size(), 1.0 / nu);
}

inline double shannon(const std::vector<double>& x) {
  double s = 0;
  for (double v : x)
    if (v > 0) s -= v * std::log(v);
  return s;
}

/// Search for a catalyst (q^a, q^b) or (q^a, q^b, q^c) with exponents in
/// [0, max_exp], checked by hinge sums in exact arithmetic.
inline std::optional<std::vector<Q>> lattice_catalyst(const std::vector<Q>& x, const std::vector<Q>& y,
                                                      const Q& q = 2, int max_exp = 6) {
  std::vector<Q> powers{Q(1)};
  for (int i = 1; i <= max_exp; ++i) powers.push_back(powers.back() * q);
  for (int a = 0; a <= max_exp; ++a)
    for (int b = a; b <= max_exp; ++b) {
      const std::vector<Q> c{powers[a], powers[b]};
      if (majorized_by_hinges(kron(x, c), kron(y, c))) return c;
    }
  for (int a = 0; a <= max_exp; ++a)
    for (int b = a; b <= max_exp; ++b)
      for (int e = b; e <= max_exp; ++e) {
        const std::vector<Q> c{powers[a], powers[b], powers[e]};
        if (majorized_by_hinges(kron(x, c), kron(y, c))) return c;
      }
  return std::nullopt;
}

/// Deterministic generator shared by the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Q rational(long lo, long hi, long den_max) {
    Q v(integer(lo * den_max, hi * den_max), integer(1, den_max));
    v.canonicalize();
    return v;
  }
  std::vector<long> integers(std::size_t d, long lo, long hi) {
    std::vector<long> v(d);
    for (auto& e : v) e = integer(lo, hi);
    return v;
  }
  template <typename C>
  void shuffle(C& c) {
    std::shuffle(c.begin(), c.end(), rng_);
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// A random integer pair with equal sums: y is x after random transfers
/// that keep every entry inside [lo, hi].
inline std::pair<std::vector<long>, std::vector<long>> equal_sum_pair(Gen& g, std::size_t d, long lo, long hi) {
  auto x = g.integers(d, lo, hi);
  auto y = x;
  const long moves = g.integer(1, 3 * static_cast<long>(d));
  for (long m = 0; m < moves; ++m) {
    const auto i = static_cast<std::size_t>(g.integer(0, d - 1));
    const auto j = static_cast<std::size_t>(g.integer(0, d - 1));
    const long amount = g.integer(1, 4);
    if (i == j || y[i] - amount < lo || y[j] + amount > hi) continue;
    y[i] -= amount;
    y[j] += amount;
  }
  g.shuffle(y);
  return {x, y};
}

inline std::vector<Q> to_q(const std::vector<long>& v) {
  std::vector<Q> out;
  for (auto e : v) out.emplace_back(e);
  return out;
}

inline std::vector<double> to_d(const std::vector<long>& v) {
  std::vector<double> out;
  for (auto e : v) out.push_back(static_cast<double>(e));
  return out;
}

}  // namespace oracle
