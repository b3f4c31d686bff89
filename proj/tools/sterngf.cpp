// Command-line front end.
//
// Exit codes: 0 ok, 1 usage, 2 closure limit exceeded, 3 no generating
// function found by guess, 4 invalid spec file, 5 brute-force size limit.

#include "sterngf/sterngf.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace sterngf;

enum Exit { kOk = 0, kUsage = 1, kLimit = 2, kGuessFailed = 3, kInvalidSpec = 4, kResource = 5 };

struct Common {
  std::string path;
  std::vector<unsigned> alpha;
};

struct Loaded {
  SpecFile file;
  TargetAlpha alpha;
};

Loaded load(const Common& c) {
  SpecFile f = load_spec_file(c.path);
  std::optional<TargetAlpha> a = f.alpha;
  if (!c.alpha.empty()) a.emplace(c.alpha);
  if (!a) throw InvalidSpecError("no alpha: add \"alpha\" to the spec file or pass --alpha");
  return {std::move(f), *a};
}

std::optional<StateSystem> closed_system(const Loaded& l, std::size_t limit) {
  BuildResult r = build_system(l.file.spec, l.alpha, {limit, default_dead_horizon()});
  if (!r.closed()) {
    std::cerr << json_out::report(r.report) << "\n";
    return std::nullopt;
  }
  return std::move(r.system);
}

void add_common(CLI::App* cmd, Common& c, bool with_alpha = true) {
  cmd->add_option("spec", c.path, "spec file (JSON)")->required();
  if (with_alpha) cmd->add_option("--alpha", c.alpha, "correlation pattern, overrides the file, e.g. 1,1,1")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational generating functions of correlation sums of Stern-like arrays"};
  app.require_subcommand(1);

  Common c;
  std::size_t limit = 5000, n = 0, guard = kDefaultGuard, max_coefficients = kDefaultMaxCoefficients;
  std::optional<std::size_t> max_deg;
  std::string method = "auto", out_path;
  bool pretty = false, digits_only = false;
  double margin = kDefaultPvMargin;

  auto* gf = app.add_subcommand("gf", "generating function via state closure");
  add_common(gf, c);
  gf->add_option("--limit", limit, "maximum number of states")->capture_default_str();
  gf->add_option("--method", method, "auto, eliminate or fit")
      ->check(CLI::IsMember({"auto", "eliminate", "fit"}))
      ->capture_default_str();
  gf->add_flag("--pretty", pretty, "add a human-readable rendering");

  auto* mat = app.add_subcommand("matrix", "transfer matrix M and initial vector v");
  add_common(mat, c);
  mat->add_option("--limit", limit, "maximum number of states")->capture_default_str();
  mat->add_option("--out", out_path, "write the matrix JSON to this file");

  auto* terms = app.add_subcommand("terms", "u(0..N) by iterating the transfer matrix");
  add_common(terms, c);
  terms->add_option("-n", n, "last index N")->required();
  terms->add_option("--limit", limit, "maximum number of states")->capture_default_str();
  terms->add_flag("--digits-only", digits_only, "print decimal digit counts instead of values");

  auto* oracle = app.add_subcommand("oracle", "u(0..N) by brute-force expansion of the product");
  add_common(oracle, c);
  oracle->add_option("-n", n, "last index N")->required();
  oracle->add_option("--max-coefficients", max_coefficients, "largest row of coefficients held in memory")
      ->capture_default_str();

  auto* guess = app.add_subcommand("guess", "fit a generating function to brute-force terms");
  add_common(guess, c);
  guess->add_option("-n", n, "last index N")->required();
  guess->add_option("--max-deg", max_deg, "largest recurrence order to try (default: all the data allows)");
  guess->add_option("--guard", guard, "extra terms a fit must reproduce")->capture_default_str();
  guess->add_option("--max-coefficients", max_coefficients, "largest row of coefficients held in memory")
      ->capture_default_str();

  auto* pv = app.add_subcommand("pv", "Pisot-Vijayaraghavan classification of the sequence");
  add_common(pv, c, false);
  pv->add_option("--margin", margin, "distance to the unit circle treated as undecided")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (pv->parsed()) {
      SpecFile f = load_spec_file(c.path);
      std::cout << json_out::pv(pv_classify(f.spec.seq(), margin)) << "\n";
      return kOk;
    }

    Loaded l = load(c);

    if (gf->parsed()) {
      auto sys = closed_system(l, limit);
      if (!sys) return kLimit;
      const SolveMethod requested = method == "eliminate" ? SolveMethod::Eliminate
                                    : method == "fit"     ? SolveMethod::Fit
                                                          : SolveMethod::Auto;
      const SolveMethod used = resolve_method(*sys, requested);
      RationalGF g = solve_gf(*sys, used);
      std::cout << json_out::gf(g, {{"dim", std::to_string(sys->dim())}, {"method", json_out::quote(to_string(used))}},
                                pretty)
                << "\n";
      return kOk;
    }

    if (mat->parsed()) {
      auto sys = closed_system(l, limit);
      if (!sys) return kLimit;
      const std::string body = json_out::matrix(*sys);
      if (out_path.empty()) {
        std::cout << body << "\n";
      } else {
        std::ofstream out(out_path);
        if (!(out << body << "\n")) {
          std::cerr << "cannot write " << out_path << "\n";
          return kUsage;
        }
        std::cout << "{\"dim\":" << sys->dim() << ",\"out\":" << json_out::quote(out_path) << "}\n";
      }
      return kOk;
    }

    if (terms->parsed()) {
      auto sys = closed_system(l, limit);
      if (!sys) return kLimit;
      auto values = stream_terms(*sys, n);
      if (digits_only) {
        std::vector<std::size_t> digits;
        for (const auto& v : values) digits.push_back(decimal_digits(v));
        std::cout << json_out::integers(digits) << "\n";
      } else {
        std::cout << json_out::integers(values) << "\n";
      }
      return kOk;
    }

    if (oracle->parsed()) {
      std::cout << json_out::integers(u_alpha_terms(l.file.spec, l.alpha, n, max_coefficients)) << "\n";
      return kOk;
    }

    if (guess->parsed()) {
      const std::size_t order = max_deg.value_or(max_feasible_order(n, guard));
      auto g = guess_gf(l.file.spec, l.alpha, n, order, guard, max_coefficients);
      if (!g) {
        std::cerr << "guess: no generating function with recurrence order <= " << order << " fits u(0.." << n
                  << ") with guard " << guard << "\n";
        return kGuessFailed;
      }
      std::cout << json_out::gf(*g, {{"method", "\"guess\""}, {"terms", std::to_string(n + 1)}}, false) << "\n";
      return kOk;
    }
  } catch (const InvalidSpecError& e) {
    std::cerr << "invalid spec: " << e.what() << "\n";
    return kInvalidSpec;
  } catch (const InsufficientTermsError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
