#include "catmaj/report.hpp"

#include <sstream>

#include "catmaj/majorization.hpp"
#include "catmaj/trumping.hpp"

namespace catmaj {

namespace {

Json num(double v) {
  if (std::isfinite(v)) return v;
  return format_real(v);
}

template <Scalar T>
Json scalar_json(const T& v) {
  if constexpr (is_exact_v<T>)
    return to_string(v);
  else
    return num(v);
}

template <Scalar T>
std::string scalar_text(const T& v) {
  if constexpr (is_exact_v<T>)
    return to_string(v);
  else
    return format_real(v);
}

template <Scalar T>
Json vector_json(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(scalar_json(e));
  return a;
}

template <Scalar T>
std::string vector_text(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + scalar_text(v[i]);
  return out;
}

Json poly_json(const RationalPoly& p) {
  Json j;
  j["text"] = p.to_string();
  j["coefficients"] = vector_json(p.coeffs());
  return j;
}

template <Scalar T>
Json profile_json(const PiecewisePoly<T>& prof) {
  Json a = Json::array();
  for (std::size_t j = 0; j < prof.breakpoints.size(); ++j) {
    Json row;
    row["at"] = scalar_json(prof.breakpoints[j]);
    row["value"] = scalar_json(prof.value_at_breakpoint(j));
    row["left_limit"] = scalar_json(prof.left_limit_at_breakpoint(j));
    row["local_coefficients"] = vector_json(prof.pieces[j]);
    a.push_back(row);
  }
  return a;
}

template <Scalar T>
void profile_text(std::ostringstream& out, const PiecewisePoly<T>& prof, const char* var) {
  for (std::size_t j = 0; j < prof.breakpoints.size(); ++j)
    out << "    " << var << " = " << scalar_text(prof.breakpoints[j]) << ": " << scalar_text(prof.value_at_breakpoint(j))
        << "\n";
}

const char* holds(bool b) { return b ? "holds" : "fails"; }

void echo_inputs(Json& j, std::ostringstream& text, const std::string& command, const Instance& inst) {
  const bool exact = inst.regime == Regime::Exact;
  auto as_json = [&](const RationalVector& v) { return exact ? vector_json(v) : vector_json(to_real(v)); };
  auto as_text = [&](const RationalVector& v) { return exact ? format_vector(v) : vector_text(to_real(v)); };
  j["command"] = command;
  j["regime"] = to_string(inst.regime);
  j["x"] = as_json(inst.x);
  j["y"] = as_json(inst.y);
  if (inst.c) j["c"] = as_json(*inst.c);
  text << command << " (" << to_string(inst.regime) << ")\n";
  text << "x: " << as_text(inst.x) << "\n";
  text << "y: " << as_text(inst.y) << "\n";
  if (inst.c) text << "c: " << as_text(*inst.c) << "\n";
}

bool has_zero_entry(const Instance& inst) {
  for (const auto* v : {&inst.x, &inst.y})
    for (const auto& e : *v)
      if (sgn(e) == 0) return true;
  return false;
}

bool all_above_one(const RationalVector& x, const RationalVector& y) {
  for (const auto* v : {&x, &y})
    for (const auto& e : *v)
      if (e <= 1) return false;
  return true;
}

/// zeta for the pair in the instance's regime, rescaled into (1, inf) when
/// needed; the factor is reported.
template <Scalar T>
GDirichlet<T> zeta_for(const Instance& inst, Json& j, std::ostringstream& text) {
  std::vector<T> x, y;
  if constexpr (is_exact_v<T>) {
    x = inst.x;
    y = inst.y;
  } else {
    x = inst.real_x();
    y = inst.real_y();
  }
  if (all_above_one(inst.x, inst.y)) return gd_from_pair(x, y);
  const auto scaled = rescale_into_domain(x, y);
  j["rescale_factor"] = scalar_json(scaled.factor);
  text << "  rescaled by " << scalar_text(scaled.factor) << " into (1, inf)\n";
  return gd_from_pair(scaled.x, scaled.y);
}

template <Scalar T>
bool cm_section(const Instance& inst, int r, Json& j, std::ostringstream& text, bool with_spline) {
  Json sec;
  text << "mu_" << r << " test (r=" << r << "):\n";
  const auto zeta = zeta_for<T>(inst, sec, text);
  const auto rep = cm_test(zeta, r);
  sec["moment_values"] = vector_json(rep.moment_values);
  sec["moments_ok"] = rep.moments_ok;
  sec["sign_ok"] = rep.sign_ok;
  sec["is_cm"] = rep.is_cm;
  if (rep.first_violation) sec["first_violation"] = num(*rep.first_violation);
  sec["mu_profile"] = profile_json(rep.mu_profile);
  const std::string range = r == 1 ? std::string("0") : "0..-" + std::to_string(r - 1);
  text << "  moments zeta(" << range << "): " << vector_text(rep.moment_values) << " ("
       << (rep.moments_ok ? "vanish" : "do not vanish") << ")\n";
  text << "  (-1)^r mu_" << r << " >= 0: " << (rep.sign_ok ? "yes" : "no");
  if (rep.first_violation) text << " (violated at t = " << format_real(*rep.first_violation) << ")";
  text << "\n  completely monotone: " << (rep.is_cm ? "yes" : "no") << "\n";
  text << "  mu_" << r << " at breakpoints:\n";
  profile_text(text, rep.mu_profile, "t");
  if (with_spline) {
    const auto spline = spline_rep(zeta, r);
    sec["spline"] = profile_json(spline);
    text << "  truncated-power spline at breakpoints:\n";
    profile_text(text, spline, "u");
  }
  j["mu_test"] = sec;
  return rep.is_cm;
}

struct LatticeOutcome {
  bool computed = false;
  bool quotient_holds = false;
  bool nested_holds = false;
};

LatticeOutcome lattice_section(const Instance& inst, int r, Json& j, std::ostringstream& text) {
  LatticeOutcome out;
  Json sec;
  RationalPoly p;
  try {
    p = poly_from_lattice(lattice_form(inst.x, inst.y));
  } catch (const Error& e) {
    sec["skipped"] = e.what();
    j["quotient_test"] = sec;
    text << "root-at-one quotient (r=" << r << "): skipped (" << e.what() << ")\n";
    return out;
  }
  out.computed = true;
  sec["p"] = poly_json(p);
  text << "root-at-one quotient (r=" << r << "):\n";
  text << "  p(t) = " << p.to_string() << "\n";
  if (p.is_zero()) {
    out.quotient_holds = out.nested_holds = true;
    sec["r"] = r;
    sec["quotient"] = poly_json(p);
    sec["remainder_ok"] = true;
    sec["negative_indices"] = Json::array();
    sec["holds"] = true;
    text << "  zero polynomial: the vectors are rearrangements\n";
  } else {
    const auto cert = divide_root_one(p, r);
    out.quotient_holds = cert.holds();
    out.nested_holds = nested_sum_test(p.coeffs(), r);
    sec["r"] = r;
    sec["quotient"] = poly_json(cert.quotient);
    sec["remainders"] = vector_json(cert.remainders);
    sec["remainder_ok"] = cert.remainder_ok;
    sec["negative_indices"] = cert.negative_indices;
    sec["holds"] = out.quotient_holds;
    text << "  quotient = " << cert.quotient.to_string() << "\n";
    text << "  remainder zero: " << (cert.remainder_ok ? "yes" : "no") << "\n";
    if (!cert.negative_indices.empty()) {
      text << "  negative coefficients at degrees:";
      for (auto i : cert.negative_indices) text << " " << i;
      text << "\n";
    }
    text << "  verdict: " << holds(out.quotient_holds) << "\n";
  }
  j["quotient_test"] = sec;
  j["nested_sum_test"] = {{"r", r}, {"holds", out.nested_holds}};
  text << "nested cumulative sums (r=" << r << "): " << holds(out.nested_holds) << "\n";
  return out;
}

}  // namespace

// --- majorize ---------------------------------------------------------------

CommandResult run_majorize(const Instance& inst, const RunOptions& opt) {
  CommandResult res;
  Json& j = res.report;
  std::ostringstream text;
  echo_inputs(j, text, "majorize", inst);
  const double tol = opt.tolerance.value_or(kFloatTolerance);

  Relation relation;
  bool hinge;
  if (inst.regime == Regime::Exact) {
    const auto v = majorizes(inst.x, inst.y);
    relation = v.relation;
    hinge = convex_order_oracle(inst.x, inst.y);
    j["partial_sums"] = {{"relation", to_string(v.relation)},
                         {"prefix_x", vector_json(v.witness.x)},
                         {"prefix_y", vector_json(v.witness.y)}};
    text << "partial sums: " << to_string(v.relation) << "\n";
    text << "  prefix x: " << vector_text(v.witness.x) << "\n  prefix y: " << vector_text(v.witness.y) << "\n";
  } else {
    const auto x = inst.real_x(), y = inst.real_y();
    const auto v = majorizes(x, y, tol);
    relation = v.relation;
    hinge = convex_order_oracle(x, y, 0, tol);
    j["partial_sums"] = {{"relation", to_string(v.relation)},
                         {"prefix_x", vector_json(v.witness.x)},
                         {"prefix_y", vector_json(v.witness.y)},
                         {"tolerance", tol}};
    text << "partial sums: " << to_string(v.relation) << "\n";
    text << "  prefix x: " << vector_text(v.witness.x) << "\n  prefix y: " << vector_text(v.witness.y) << "\n";
  }
  const bool below = relation == Relation::XMajorizedByY || relation == Relation::Equal;
  j["hinge_oracle"] = {{"holds", hinge}};
  text << "hinge-function oracle: " << holds(hinge) << "\n";

  std::vector<std::pair<std::string, bool>> verdicts{{"partial_sums", below}, {"hinge_oracle", hinge}};
  const auto lat = lattice_section(inst, 2, j, text);
  if (lat.computed) {
    verdicts.emplace_back("quotient_test", lat.quotient_holds);
    verdicts.emplace_back("nested_sum_test", lat.nested_holds);
  }
  if (has_zero_entry(inst)) {
    j["mu_test"] = {{"skipped", "zero entry"}};
    text << "mu_2 test: skipped (zero entry)\n";
  } else if (relation == Relation::Equal) {
    j["mu_test"] = {{"is_cm", true}, {"note", "zeta is identically zero"}};
    verdicts.emplace_back("mu_test", true);
    text << "mu_2 test: zeta is identically zero\n";
  } else {
    const bool cm = inst.regime == Regime::Exact ? cm_section<Rational>(inst, 2, j, text, false)
                                                  : cm_section<double>(inst, 2, j, text, false);
    verdicts.emplace_back("mu_test", cm);
  }

  Json disagreements = Json::array();
  for (const auto& [name, v] : verdicts)
    if (v != below) disagreements.push_back(name + " says " + (v ? "x is majorized by y" : "x is not majorized by y"));
  j["disagreements"] = disagreements;
  j["verdict"] = to_string(relation);
  text << "verdict: " << to_string(relation) << "\n";
  if (!disagreements.empty()) {
    text << "DISAGREEMENT:\n";
    for (const auto& d : disagreements) text << "  " << d.get<std::string>() << "\n";
    res.exit_code = exit_code::kInconclusive;
  } else {
    res.exit_code = below ? exit_code::kHolds : exit_code::kRefuted;
  }
  res.text = text.str();
  return res;
}

// --- trump ------------------------------------------------------------------

namespace {

Json checks_json(const std::vector<InequalityCheck>& v) {
  Json a = Json::array();
  for (const auto& c : v)
    a.push_back({{"condition", c.condition}, {"parameter", num(c.parameter)}, {"lhs", num(c.lhs)}, {"rhs", num(c.rhs)}});
  return a;
}

void checks_text(std::ostringstream& out, const std::vector<InequalityCheck>& v, const char* title) {
  if (v.empty()) return;
  out << title << " (" << v.size() << "):\n";
  const std::size_t shown = std::min<std::size_t>(v.size(), 8);
  for (std::size_t i = 0; i < shown; ++i)
    out << "  " << v[i].condition << " at " << format_real(v[i].parameter) << ": " << format_real(v[i].lhs) << " vs "
        << format_real(v[i].rhs) << "\n";
  if (shown < v.size()) out << "  ...\n";
}

std::string grid_csv(const std::vector<GridRow>& rows) {
  std::string csv = "nu,A_nu_x,A_nu_y,f_nu_x,f_nu_y\n";
  for (const auto& r : rows)
    csv += format_real(r.nu) + "," + format_real(r.a_x) + "," + format_real(r.a_y) + "," + format_real(r.f_x) + "," +
           format_real(r.f_y) + "\n";
  return csv;
}

Json grid_json(const std::vector<GridRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows)
    a.push_back({{"nu", num(r.nu)}, {"A_nu_x", num(r.a_x)}, {"A_nu_y", num(r.a_y)}, {"f_nu_x", num(r.f_x)},
                 {"f_nu_y", num(r.f_y)}});
  return a;
}

}  // namespace

CommandResult run_trump(const Instance& inst, const RunOptions& opt) {
  CommandResult res;
  Json& j = res.report;
  std::ostringstream text;
  echo_inputs(j, text, "trump", inst);

  GridConfig cfg;
  cfg.window = opt.window;
  if (opt.tolerance) cfg.boundary_tolerance = *opt.tolerance;
  TrumpingVerdict v;
  std::optional<bool> witness;
  if (inst.regime == Regime::Exact) {
    v = trumping_decision(inst.x, inst.y, cfg);
    if (inst.c) witness = catalyzes(inst.x, inst.y, *inst.c);
  } else {
    v = trumping_decision(inst.real_x(), inst.real_y(), cfg);
    if (inst.c) witness = catalyzes(inst.real_x(), inst.real_y(), *inst.real_c());
  }
  auto disagreements = v.disagreements;
  if (witness && *witness && v.relation == TrumpRelation::NotTrumped)
    disagreements.push_back("the given catalyst works but the power-mean test says NotTrumped");

  j["relation"] = to_string(v.relation);
  j["failures"] = checks_json(v.failures);
  j["boundaries"] = checks_json(v.boundaries);
  const auto& L = v.limits;
  j["limits"] = {{"A_0", {num(L.a0_x), num(L.a0_y)}},
                 {"sigma", {num(L.sigma_x), num(L.sigma_y)}},
                 {"A_+inf", {num(L.max_x), num(L.max_y)}},
                 {"A_-inf", {num(L.min_x), num(L.min_y)}},
                 {"largest_differing_value_from", L.top_sign > 0 ? "y" : L.top_sign < 0 ? "x" : "none"},
                 {"smallest_differing_value_from", L.bottom_sign > 0 ? "y" : L.bottom_sign < 0 ? "x" : "none"}};
  if (v.klimesh) j["f_r_family"] = {{"relation", to_string(*v.klimesh)}, {"failures", checks_json(v.klimesh_failures)}};
  if (v.dirichlet) {
    j["dirichlet"] = {{"verdict", to_string(v.dirichlet->kind)},
                      {"at", num(v.dirichlet->at)},
                      {"window", num(v.dirichlet->window)},
                      {"cells", v.dirichlet->cells},
                      {"relation", to_string(*v.dirichlet_relation)}};
  }
  if (witness) j["catalyst_witness"] = *witness;
  j["disagreements"] = disagreements;
  j["grid"] = grid_json(v.grid);

  text << "relation: " << to_string(v.relation) << "\n";
  checks_text(text, v.failures, "failed inequalities");
  checks_text(text, v.boundaries, "equalities within tolerance");
  text << "A_0: " << format_real(L.a0_x) << " vs " << format_real(L.a0_y) << "\n";
  text << "sigma: " << format_real(L.sigma_x) << " vs " << format_real(L.sigma_y) << "\n";
  text << "max: " << format_real(L.max_x) << " vs " << format_real(L.max_y) << "\n";
  text << "min: " << format_real(L.min_x) << " vs " << format_real(L.min_y) << "\n";
  if (v.klimesh) text << "f_r family: " << to_string(*v.klimesh) << "\n";
  if (v.dirichlet)
    text << "zeta(s)/(s(s+1)) on the real line: " << to_string(v.dirichlet->kind) << " (window "
         << format_real(v.dirichlet->window) << ", " << v.dirichlet->cells << " cells)\n";
  if (witness) text << "given catalyst: " << (*witness ? "works" : "does not work") << "\n";
  text << "grid points: " << v.grid.size() << "\n";
  for (const auto& d : disagreements) text << "DISAGREEMENT: " << d << "\n";

  switch (v.relation) {
    case TrumpRelation::Majorized:
    case TrumpRelation::TrumpedStrictly:
    case TrumpRelation::Equal: res.exit_code = exit_code::kHolds; break;
    case TrumpRelation::NotTrumped: res.exit_code = exit_code::kRefuted; break;
    case TrumpRelation::Boundary: res.exit_code = exit_code::kInconclusive; break;
  }
  if (!disagreements.empty()) res.exit_code = exit_code::kInconclusive;
  res.csv = grid_csv(v.grid);
  res.text = text.str();
  return res;
}

// --- certify ----------------------------------------------------------------

CommandResult run_certify(const Instance& inst, const RunOptions& opt) {
  CommandResult res;
  Json& j = res.report;
  std::ostringstream text;
  echo_inputs(j, text, "certify", inst);
  j["q"] = to_string(opt.q);
  j["n_max"] = opt.n_max;
  j["r"] = opt.r;
  text << "q = " << to_string(opt.q) << ", r = " << opt.r << ", n_max = " << opt.n_max << "\n";

  CatalystCertificate cert;
  try {
    cert = inst.regime == Regime::Exact ? catalyst_certificate(inst.x, inst.y, opt.q, opt.n_max, opt.r)
                                        : catalyst_certificate(inst.real_x(), inst.real_y(), opt.q, opt.n_max, opt.r);
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::NotTrumpedAfterSnap:
      case ErrorCode::DivisionNotExact: res.exit_code = exit_code::kRefuted; break;
      case ErrorCode::PolyaSearchExhausted:
      case ErrorCode::EqualVectors: res.exit_code = exit_code::kInconclusive; break;
      default: throw;
    }
    j["certificate"] = nullptr;
    j["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    text << "no certificate: " << e.what() << "\n";
    res.text = text.str();
    return res;
  }

  Json c;
  c["trivial"] = cert.trivial;
  c["alpha"] = cert.alpha;
  c["scale"] = to_string(cert.scale);
  c["max_rel_error"] = cert.max_rel_error;
  c["snapped_x"] = vector_json(cert.snapped_x);
  c["snapped_y"] = vector_json(cert.snapped_y);
  if (!cert.trivial) {
    c["exponents_x"] = cert.exponents_x;
    c["exponents_y"] = cert.exponents_y;
    c["p"] = poly_json(cert.p);
    c["divisor"] = poly_json(cert.divisor);
    c["quotient"] = poly_json(cert.quotient);
  }
  c["zeta2"] = poly_json(cert.zeta2);
  if (!cert.trivial) c["product"] = poly_json(cert.product);
  c["polya_n"] = cert.polya_n;
  Json cat = Json::array();
  for (const auto& e : cert.catalyst) cat.push_back({{"value", to_string(e.value)}, {"multiplicity", e.multiplicity.get_str()}});
  c["catalyst"] = cat;
  if (cert.catalyst_vector) c["catalyst_vector"] = vector_json(*cert.catalyst_vector);
  c["checks"] = {{"product_identity", cert.product_identity},
                 {"coefficients_nonnegative", cert.coefficients_nonnegative},
                 {"witness_verified", cert.witness_verified}};
  j["certificate"] = c;

  text << (cert.trivial ? "trivial certificate (x is majorized by y)\n" : "catalyst certificate\n");
  text << "  scale: " << to_string(cert.scale) << ", max relative snap error: " << format_real(cert.max_rel_error) << "\n";
  text << "  snapped x: " << format_vector(cert.snapped_x) << "\n";
  text << "  snapped y: " << format_vector(cert.snapped_y) << "\n";
  if (!cert.trivial) {
    text << "  p(t) = " << cert.p.to_string() << "\n";
    text << "  divisor = " << cert.divisor.to_string() << "\n";
    text << "  f(t) = " << cert.quotient.to_string() << "\n";
    text << "  g(t) = " << cert.zeta2.to_string() << "\n";
    text << "  h(t) = " << cert.product.to_string() << "\n";
  }
  text << "  Polya n: " << cert.polya_n << "\n";
  text << "  catalyst (value x multiplicity):";
  for (const auto& e : cert.catalyst) text << " " << to_string(e.value) << "x" << e.multiplicity.get_str();
  text << "\n";
  if (cert.catalyst_vector) text << "  catalyst vector: " << format_vector(*cert.catalyst_vector) << "\n";
  text << "  product identity: " << holds(cert.product_identity) << "\n";
  text << "  nonnegative coefficients: " << holds(cert.coefficients_nonnegative) << "\n";
  text << "  witness re-check: " << holds(cert.witness_verified) << "\n";
  res.exit_code = exit_code::kHolds;
  res.text = text.str();
  return res;
}

// --- rconvex ----------------------------------------------------------------

CommandResult run_rconvex(const Instance& inst, const RunOptions& opt) {
  if (opt.r < 1) throw Error(ErrorCode::InvalidArgument, "--r must be at least 1");
  CommandResult res;
  Json& j = res.report;
  std::ostringstream text;
  echo_inputs(j, text, "rconvex", inst);
  detail::require_same_length(inst.x, inst.y);
  detail::require_nonnegative(inst.x, "x");
  detail::require_nonnegative(inst.y, "y");
  j["r"] = opt.r;

  const auto lat = lattice_section(inst, opt.r, j, text);
  std::optional<bool> cm;
  if (has_zero_entry(inst)) {
    j["mu_test"] = {{"skipped", "zero entry"}};
    text << "mu_" << opt.r << " test: skipped (zero entry)\n";
  } else {
    cm = inst.regime == Regime::Exact ? cm_section<Rational>(inst, opt.r, j, text, true)
                                      : cm_section<double>(inst, opt.r, j, text, true);
  }

  std::vector<bool> verdicts;
  if (lat.computed) verdicts.push_back(lat.quotient_holds);
  if (lat.computed) verdicts.push_back(lat.nested_holds);
  if (cm) verdicts.push_back(*cm);
  if (verdicts.empty()) throw Error(ErrorCode::InvalidArgument, "no r-convex procedure applies to this instance");
  const bool all_true = std::all_of(verdicts.begin(), verdicts.end(), [](bool b) { return b; });
  const bool all_false = std::none_of(verdicts.begin(), verdicts.end(), [](bool b) { return b; });
  const char* verdict = all_true ? "holds" : all_false ? "fails" : "procedures disagree";
  j["verdict"] = verdict;
  text << "verdict: " << verdict << "\n";
  res.exit_code = all_true ? exit_code::kHolds : all_false ? exit_code::kRefuted : exit_code::kInconclusive;
  res.text = text.str();
  return res;
}

// --- grid -------------------------------------------------------------------

CommandResult run_grid(const Instance& inst, const RunOptions&) {
  CommandResult res;
  Json& j = res.report;
  std::ostringstream text;
  echo_inputs(j, text, "grid", inst);
  detail::require_same_length(inst.x, inst.y);
  detail::require_nonnegative(inst.x, "x");
  detail::require_nonnegative(inst.y, "y");

  Rational total = 0;
  for (const auto& e : inst.x) total += e;
  if (sgn(total) == 0) throw Error(ErrorCode::InvalidArgument, "x sums to zero");
  RealVector px, py;
  for (const auto& e : inst.x) px.push_back(to_double(Rational(e / total)));
  for (const auto& e : inst.y) py.push_back(to_double(Rational(e / total)));
  auto mean = [](const RealVector& v, double nu) {
    const bool zero = std::any_of(v.begin(), v.end(), [](double e) { return e == 0.0; });
    return (nu <= 0 && zero) ? 0.0 : power_mean(v, nu);
  };

  const GridConfig cfg;
  std::vector<GridRow> rows;
  for (int i = 0; i < cfg.points; ++i) {
    const double nu = cfg.nu_min + (cfg.nu_max - cfg.nu_min) * i / (cfg.points - 1);
    rows.push_back({nu, mean(px, nu), mean(py, nu), klimesh_f(px, nu), klimesh_f(py, nu)});
  }
  j["normalized_by"] = to_string(total);
  j["grid"] = grid_json(rows);
  text << "normalized by sum(x) = " << to_string(total) << "\n";
  text << "nu A_nu_x A_nu_y f_nu_x f_nu_y\n";
  for (const auto& r : rows)
    text << format_real(r.nu) << " " << format_real(r.a_x) << " " << format_real(r.a_y) << " " << format_real(r.f_x)
         << " " << format_real(r.f_y) << "\n";
  res.csv = grid_csv(rows);
  res.text = text.str();
  return res;
}

std::string render(const CommandResult& result, Format format, std::optional<double> timing_ms) {
  switch (format) {
    case Format::Csv:
      if (!result.csv) throw Error(ErrorCode::InvalidArgument, "csv output is available for trump and grid only");
      return *result.csv;
    case Format::Structured: {
      Json j = result.report;
      j["exit_code"] = result.exit_code;
      if (timing_ms) j["timing_ms"] = *timing_ms;
      return j.dump(2) + "\n";
    }
    case Format::Text:
    default: {
      std::string out = result.text;
      if (timing_ms) out += "timing: " + format_real(*timing_ms) + " ms\n";
      return out;
    }
  }
}

}  // namespace catmaj
