#pragma once

// Instance files: one labeled vector per line.
//
//   # comment
//   regime: exact        (optional; "exact" or "float")
//   x: 5 5 5 5
//   y: 2 2 6 10
//   c: 1 1               (optional catalyst)
//
// Entries are integers, fractions "p/q" or decimals; commas count as
// whitespace. Without a regime line, any decimal selects the float regime and
// any fraction the exact one; both together is a MixedScalarKind error.

#include <optional>
#include <string>
#include <string_view>

#include "catmaj/scalar.hpp"

namespace catmaj {

enum class Regime { Exact, Float };

const char* to_string(Regime r);

struct Instance {
  Regime regime = Regime::Exact;
  /// Values as written, exactly (decimals included).
  RationalVector x, y;
  std::optional<RationalVector> c;

  RealVector real_x() const { return to_real(x); }
  RealVector real_y() const { return to_real(y); }
  std::optional<RealVector> real_c() const {
    return c ? std::optional<RealVector>(to_real(*c)) : std::nullopt;
  }
};

/// Throws ParseError ("line L, column C: ...") or MixedScalarKind.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);
/// Inline vectors as given on the command line.
Instance inline_instance(const std::string& x, const std::string& y, const std::optional<std::string>& c,
                         const std::optional<Regime>& regime = std::nullopt);

std::string format_vector(const RationalVector& v);

}  // namespace catmaj
