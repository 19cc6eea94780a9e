#include "catmaj/error.hpp"
#include "catmaj/scalar.hpp"

#include <charconv>
#include <cctype>

namespace catmaj {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptyVector: return "EmptyVector";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::MixedScalarKind: return "MixedScalarKind";
    case ErrorCode::NonIntegerEntries: return "NonIntegerEntries";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotPositiveOnPositiveAxis: return "NotPositiveOnPositiveAxis";
    case ErrorCode::DuplicateNodes: return "DuplicateNodes";
    case ErrorCode::EntriesNotAboveOne: return "EntriesNotAboveOne";
    case ErrorCode::ZeroEntry: return "ZeroEntry";
    case ErrorCode::MomentConditionFailed: return "MomentConditionFailed";
    case ErrorCode::ZeroEntryWithNonpositiveNu: return "ZeroEntryWithNonpositiveNu";
    case ErrorCode::XHasZeroEntry: return "XHasZeroEntry";
    case ErrorCode::NotTrumpedAfterSnap: return "NotTrumpedAfterSnap";
    case ErrorCode::DivisionNotExact: return "DivisionNotExact";
    case ErrorCode::PolyaSearchExhausted: return "PolyaSearchExhausted";
    case ErrorCode::EqualVectors: return "EqualVectors";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer pow10(long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw fail();

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    Integer d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    value = Rational(Integer(std::string(num), 10), d);
    value.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_part = s.substr(e + 1);
      s = s.substr(0, e);
      bool exp_negative = false;
      if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
        exp_negative = exp_part.front() == '-';
        exp_part.remove_prefix(1);
      }
      if (!all_digits(exp_part) || exp_part.size() > 6) throw fail();
      exponent = std::stol(std::string(exp_part));
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      auto int_part = s.substr(0, dot);
      auto frac_part = s.substr(dot + 1);
      if ((int_part.empty() && frac_part.empty()) ||
          (!int_part.empty() && !all_digits(int_part)) ||
          (!frac_part.empty() && !all_digits(frac_part)))
        throw fail();
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    } else {
      if (!all_digits(s)) throw fail();
      digits = std::string(s);
    }
    Integer mantissa(digits, 10);
    if (exponent >= 0)
      value = Rational(mantissa * pow10(exponent));
    else
      value = Rational(mantissa, pow10(-exponent));
    value.canonicalize();
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& v) { return v.get_str(); }

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

double to_double(const Rational& v) {
  const double d = v.get_d();
  if (!std::isfinite(d) || Rational(d) == v) return d;
  const double away = std::nextafter(d, sgn(v) > 0 ? HUGE_VAL : -HUGE_VAL);
  if (!std::isfinite(away)) return d;
  return abs(Rational(away) - v) < abs(v - Rational(d)) ? away : d;
}

RealVector to_real(const RationalVector& v) {
  RealVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(to_double(e));
  return out;
}

Rational rational_pow(const Rational& base, unsigned long k) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  return Rational(num, den);
}

double log_of(const Rational& v) {
  if (sgn(v) <= 0) throw Error(ErrorCode::InvalidArgument, "logarithm of a nonpositive value");
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, v.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, v.get_den_mpz_t());
  return std::log(mn / md) + static_cast<double>(en - ed) * std::log(2.0);
}

}  // namespace catmaj
