#include "catmaj/instance.hpp"

#include <fstream>
#include <sstream>

#include "catmaj/error.hpp"

namespace catmaj {

const char* to_string(Regime r) { return r == Regime::Exact ? "exact" : "float"; }

namespace {

enum class TokenKind { Integer, Fraction, Decimal };

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

TokenKind kind_of(const std::string& t) {
  if (t.find('/') != std::string::npos) return TokenKind::Fraction;
  if (t.find_first_of(".eE") != std::string::npos) return TokenKind::Decimal;
  return TokenKind::Integer;
}

std::vector<Token> split(std::string_view body, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ',')) ++i;
    if (i >= body.size()) break;
    const std::size_t start = i;
    while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i])) && body[i] != ',') ++i;
    out.push_back({std::string(body.substr(start, i - start)), offset + start + 1});
  }
  return out;
}

Error parse_error(std::size_t line, std::size_t column, const std::string& what) {
  return Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

struct Builder {
  std::optional<Regime> declared;
  bool saw_fraction = false;
  bool saw_decimal = false;
  std::optional<RationalVector> x, y, c;

  RationalVector vector_from(const std::vector<Token>& tokens, std::size_t line, std::size_t label_column) {
    if (tokens.empty()) throw parse_error(line, label_column, "vector has no entries");
    RationalVector v;
    for (const auto& t : tokens) {
      try {
        v.push_back(parse_rational(t.text));
      } catch (const Error&) {
        throw parse_error(line, t.column, "not a number: '" + t.text + "'");
      }
      switch (kind_of(t.text)) {
        case TokenKind::Fraction: saw_fraction = true; break;
        case TokenKind::Decimal: saw_decimal = true; break;
        case TokenKind::Integer: break;
      }
    }
    return v;
  }

  Instance finish() {
    if (!x) throw Error(ErrorCode::ParseError, "missing vector 'x'");
    if (!y) throw Error(ErrorCode::ParseError, "missing vector 'y'");
    Instance inst;
    if (declared) {
      if (*declared == Regime::Float && saw_fraction)
        throw Error(ErrorCode::MixedScalarKind, "fractions are exact values but the regime is float");
      inst.regime = *declared;
    } else {
      if (saw_fraction && saw_decimal)
        throw Error(ErrorCode::MixedScalarKind, "fractions and decimals mixed; add a 'regime:' line");
      inst.regime = saw_decimal ? Regime::Float : Regime::Exact;
    }
    inst.x = std::move(*x);
    inst.y = std::move(*y);
    inst.c = std::move(c);
    return inst;
  }
};

Regime parse_regime(const std::string& word, std::size_t line, std::size_t column) {
  if (word == "exact") return Regime::Exact;
  if (word == "float") return Regime::Float;
  throw parse_error(line, column, "regime must be 'exact' or 'float', got '" + word + "'");
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Builder b;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
    if (first == line.size()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw parse_error(line_no, first + 1, "expected 'label: values'");
    std::string label(line.substr(first, colon - first));
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) label.pop_back();
    const auto tokens = split(line.substr(colon + 1), colon + 1);

    if (label == "regime") {
      if (b.declared) throw parse_error(line_no, first + 1, "duplicate 'regime'");
      if (tokens.size() != 1) throw parse_error(line_no, colon + 2, "expected one word after 'regime:'");
      b.declared = parse_regime(tokens[0].text, line_no, tokens[0].column);
    } else if (label == "x" || label == "y" || label == "c") {
      auto& slot = label == "x" ? b.x : label == "y" ? b.y : b.c;
      if (slot) throw parse_error(line_no, first + 1, "duplicate '" + label + "'");
      slot = b.vector_from(tokens, line_no, first + 1);
    } else {
      throw parse_error(line_no, first + 1, "unknown label '" + label + "'");
    }
    if (end == text.size()) break;
  }
  return b.finish();
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

Instance inline_instance(const std::string& x, const std::string& y, const std::optional<std::string>& c,
                         const std::optional<Regime>& regime) {
  std::string text;
  if (regime) text += std::string("regime: ") + to_string(*regime) + "\n";
  text += "x: " + x + "\ny: " + y + "\n";
  if (c) text += "c: " + *c + "\n";
  return parse_instance(text);
}

std::string format_vector(const RationalVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += to_string(v[i]);
  }
  return out;
}

}  // namespace catmaj
