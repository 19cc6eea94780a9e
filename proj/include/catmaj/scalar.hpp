#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace catmaj {

/// Exact rational scalar. All certificate arithmetic runs on this type.
using Rational = mpq_class;
using Integer = mpz_class;

using RationalVector = std::vector<Rational>;
using RealVector = std::vector<double>;

template <typename T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <typename T>
concept Scalar = std::is_same_v<T, Rational> || std::is_same_v<T, double>;

inline double to_double(double v) { return v; }
/// Nearest double (GMP's own conversion truncates).
double to_double(const Rational& v);

inline int sign_of(double v) { return (v > 0) - (v < 0); }
inline int sign_of(const Rational& v) { return sgn(v); }

/// Parses "p/q", integers and decimals ("0.25", "1e-3") exactly.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" or "p".
std::string to_string(const Rational& v);

/// Shortest round-trip decimal form of a double.
std::string format_real(double v);

RealVector to_real(const RationalVector& v);

/// Natural logarithm of a positive value, robust to huge numerators and
/// denominators.
double log_of(const Rational& v);
inline double log_of(double v) { return std::log(v); }

/// base^k, exact.
Rational rational_pow(const Rational& base, unsigned long k);

/// Kahan-Babuska (Neumaier) compensated accumulator.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace catmaj
