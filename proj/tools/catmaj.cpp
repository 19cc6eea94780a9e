// catmaj: majorization, trumping and r-convex order decisions from the
// command line.

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "catmaj/error.hpp"
#include "catmaj/instance.hpp"
#include "catmaj/report.hpp"

namespace {

struct Inputs {
  std::string input;
  std::string x, y, c;
  int r = 2;
  std::string q = "2";
  std::size_t n_max = catmaj::kDefaultPolyaMax;
  double window = catmaj::kDefaultPositivityWindow;
  catmaj::Format format = catmaj::Format::Text;
  std::optional<double> tolerance;
};

void add_common(CLI::App* sub, Inputs& in) {
  auto* input = sub->add_option("--input", in.input, "Instance file");
  auto* x = sub->add_option("--x", in.x, "Inline x, e.g. \"5 5 5 5\"");
  auto* y = sub->add_option("--y", in.y, "Inline y");
  sub->add_option("--c", in.c, "Inline catalyst");
  input->excludes(x)->excludes(y);
  x->needs(y);
  y->needs(x);
  sub->add_option("--r", in.r, "Order r (certify, rconvex)")->check(CLI::Range(1, 64));
  sub->add_option("--q", in.q, "Lattice ratio q > 1 (certify)");
  sub->add_option("--nmax", in.n_max, "Largest Polya exponent tried (certify)");
  sub->add_option("--window", in.window, "Starting window of the positivity scan (trump)")
      ->check(CLI::PositiveNumber);
  const std::map<std::string, catmaj::Format> formats{
      {"text", catmaj::Format::Text}, {"structured", catmaj::Format::Structured}, {"csv", catmaj::Format::Csv}};
  sub->add_option("--format", in.format, "text | structured | csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_option("--tolerance", in.tolerance, "Float comparison tolerance")->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majorization, trumping and r-convex order decisions with exact certificates"};
  app.require_subcommand(1);
  Inputs in;
  using Runner = catmaj::CommandResult (*)(const catmaj::Instance&, const catmaj::RunOptions&);
  const std::map<std::string, std::pair<Runner, std::string>> commands{
      {"majorize", {catmaj::run_majorize, "Decide x ≺ y with all cross-checking procedures"}},
      {"trump", {catmaj::run_trump, "Decide whether x is trumped by y"}},
      {"certify", {catmaj::run_certify, "Build and verify an explicit catalyst on a q-lattice"}},
      {"rconvex", {catmaj::run_rconvex, "Order-r quotient and mu_r tests"}},
      {"grid", {catmaj::run_grid, "Power means and f_nu on the default nu grid"}},
  };
  for (const auto& [name, cmd] : commands) add_common(app.add_subcommand(name, cmd.second), in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : catmaj::exit_code::kInputError;
  }

  const auto* sub = app.get_subcommands().front();
  const Runner run = commands.at(sub->get_name()).first;
  try {
    if (in.input.empty() && in.x.empty())
      throw catmaj::Error(catmaj::ErrorCode::InvalidArgument, "give --input PATH or --x and --y");
    const auto start = std::chrono::steady_clock::now();
    auto inst = in.input.empty()
                    ? catmaj::inline_instance(in.x, in.y, in.c.empty() ? std::nullopt : std::optional(in.c))
                    : catmaj::load_instance(in.input);
    if (!in.input.empty() && !in.c.empty()) inst.c = catmaj::parse_instance("x: 1\ny: 1\nc: " + in.c).c;
    catmaj::RunOptions opt;
    opt.r = in.r;
    opt.q = catmaj::parse_rational(in.q);
    opt.n_max = in.n_max;
    opt.window = in.window;
    opt.tolerance = in.tolerance;
    const auto result = run(inst, opt);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << catmaj::render(result, in.format, ms);
    return result.exit_code;
  } catch (const catmaj::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return catmaj::exit_code::kInputError;
}
