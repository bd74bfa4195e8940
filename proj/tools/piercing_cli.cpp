// Command-line front end: every subcommand reads or generates an instance,
// runs one construction and prints a JSON report on stdout.
//
// Exit status: 0 success, 1 verification failure, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "piercing/error.hpp"
#include "piercing/io.hpp"
#include "piercing/svg.hpp"

using namespace piercing;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;

template <class T>
T load_as(const std::string& path, const char* kind) {
  Instance inst = load_instance(path);
  if (auto* p = std::get_if<T>(&inst)) return std::move(*p);
  throw Error(ErrorCode::Parse, "'" + path + "' is not a " + kind + " instance");
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Parse, "cannot write '" + path + "'");
  out << text;
}

Axis parse_axis(const std::string& s) {
  if (s == "x" || s == "X") return Axis::X;
  if (s == "y" || s == "Y") return Axis::Y;
  throw Error(ErrorCode::Parse, "axis must be x or y");
}

StabLine stab_of(const PlaneLine& line) { return StabLine{line.slope, line.intercept}; }

// One stress case: piercing, certificate exclusivity on both axes, the 3x3
// construction and the fractional oracle where they apply.
Json stress_case(std::uint64_t seed, std::int64_t nmax) {
  SplitMix64 rng(seed);
  GenConfig cfg;
  cfg.n = static_cast<std::size_t>(rng.uniform(1, nmax));
  cfg.m = static_cast<std::size_t>(rng.uniform(1, nmax));
  cfg.seed = rng.next();
  const GridInstance inst = random_grid(cfg);

  Json row = {{"seed", seed}, {"n", cfg.n}, {"m", cfg.m}};
  std::vector<std::string> problems;
  try {
    const PiercingResult r = find_piercing_line(inst);
    row["axis"] = std::string(to_string(r.axis));
    if (!line_pierces(inst, r.line).all()) problems.push_back("line misses a set");
  } catch (const Error& e) {
    problems.push_back(e.what());
  }
  std::size_t certs = 0;
  for (Axis axis : {Axis::X, Axis::Y}) {
    if (solve_axis(inst, axis)) continue;
    const DualCertificate cert = extract_dual_certificate(inst, axis);
    if (!verify_dual_certificate(inst, cert)) problems.push_back("certificate fails to verify");
    ++certs;
  }
  row["certificates"] = certs;
  if (cfg.n == 3 && cfg.m == 3) {
    const Lemma33Trace t = lemma33_pierce(inst);
    row["lemma33_axis"] = std::string(to_string(t.axis));
    if (!t.report.all()) problems.push_back("3x3 construction misses a set");
  }
  if (cfg.n >= 3 && cfg.m >= 3) {
    const FracResult f = fractional_transversal(inst);
    row["frac_count"] = f.count;
    if (oracle_best_plane_line(inst, f.axis, f.line.plane_value).count != f.count) {
      problems.push_back("fractional count differs from the oracle");
    }
  }
  row["problems"] = problems;
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact line transversals for grids of vertical polygons"};
  app.require_subcommand(1);

  GenConfig gen_cfg;
  std::string kind = "grid";
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Generate a random instance file");
  gen->add_option("--kind", kind, "grid or highdim")->check(CLI::IsMember({"grid", "highdim"}));
  gen->add_option("-n", gen_cfg.n, "Number of x-planes (grid)");
  gen->add_option("-m", gen_cfg.m, "Number of y-planes (grid)");
  gen->add_option("-d", gen_cfg.d, "Dimension (highdim)");
  gen->add_option("--seed", gen_cfg.seed, "64-bit seed");
  gen->add_option("--den", gen_cfg.denominator_bound, "Denominator bound D");
  gen->add_option("--num", gen_cfg.numerator_bound, "Numerator magnitude bound M");
  gen->add_option("-o,--out", out_path, "Output file (stdout if omitted)");

  std::string path;
  std::string svg_path;
  std::string axis_name;
  auto* pierce = app.add_subcommand("pierce", "Find a piercing line of a grid instance");
  pierce->add_option("instance", path)->required();
  auto* dual = app.add_subcommand("dual", "Infeasibility certificate of one axis system");
  dual->add_option("instance", path)->required();
  dual->add_option("--axis", axis_name)->required()->check(CLI::IsMember({"x", "y", "X", "Y"}));
  auto* lemma33 = app.add_subcommand("lemma33", "Central-plane construction for a 3x3 grid");
  lemma33->add_option("instance", path)->required();
  lemma33->add_option("--svg", svg_path, "Draw the chosen plane");
  auto* frac = app.add_subcommand("frac", "Line stabbing a constant fraction of the opposite family");
  frac->add_option("instance", path)->required();
  frac->add_option("--svg", svg_path, "Draw the chosen plane");
  auto* highdim = app.add_subcommand("highdim", "Piercing line for a high-dimensional instance");
  highdim->add_option("instance", path)->required();

  std::size_t iters = 100;
  std::uint64_t base_seed = 1;
  bool zero_u2 = false;
  bool zero_v2 = false;
  bool full = false;
  std::size_t fuzz_n = 0;
  auto* fuzz = app.add_subcommand("fuzz", "Refute random combined-system multipliers");
  fuzz->add_option("--iters", iters);
  fuzz->add_option("--seed", base_seed);
  fuzz->add_option("-n", fuzz_n, "Fixed n = m (default cycles through 3, 4, 5)");
  fuzz->add_flag("--zero-u2", zero_u2);
  fuzz->add_flag("--zero-v2", zero_v2);
  fuzz->add_flag("--full", full, "Print every sample and ledger");

  auto* regress = app.add_subcommand("regress-counterexample", "Check the non-parallel counterexample scene");

  std::int64_t nmax = 8;
  auto* stress = app.add_subcommand("stress", "Randomized end-to-end checks over many grids");
  stress->add_option("--iters", iters);
  stress->add_option("--nmax", nmax)->check(CLI::Range(1, 64));
  stress->add_option("--seed", base_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*gen) {
      gen_cfg.validate();
      const Json doc = kind == "grid" ? to_json(random_grid(gen_cfg)) : to_json(random_highdim(gen_cfg));
      if (out_path.empty()) {
        emit(doc);
      } else {
        save_json(out_path, doc);
      }
    } else if (*pierce) {
      emit(to_json(find_piercing_line(load_as<GridInstance>(path, "grid"))));
    } else if (*dual) {
      const GridInstance inst = load_as<GridInstance>(path, "grid");
      const DualCertificate cert = extract_dual_certificate(inst, parse_axis(axis_name));
      Json doc = to_json(cert);
      doc["verified"] = verify_dual_certificate(inst, cert);
      emit(doc);
      if (!doc["verified"].get<bool>()) return kVerificationFailure;
    } else if (*lemma33) {
      const Lemma33Trace t = lemma33_pierce(load_as<GridInstance>(path, "grid"));
      emit(to_json(t));
      if (!svg_path.empty()) {
        write_text(svg_path, plane_svg(plane_sections(t.instance, t.axis, t.line.plane_value), stab_of(t.line),
                                       "3x3 construction, plane " + std::string(to_string(t.axis)) + " = " +
                                           to_string(t.line.plane_value)));
      }
    } else if (*frac) {
      const GridInstance inst = load_as<GridInstance>(path, "grid");
      const FracResult r = fractional_transversal(inst);
      emit(to_json(r));
      if (!svg_path.empty()) {
        write_text(svg_path, plane_svg(plane_sections(inst, r.axis, r.line.plane_value), stab_of(r.line),
                                       "best stabbing line, plane " + std::string(to_string(r.axis)) + " = " +
                                           to_string(r.line.plane_value)));
      }
    } else if (*highdim) {
      emit(to_json(highdim_pierce(load_as<HighDimInstance>(path, "highdim"))));
    } else if (*fuzz) {
      std::vector<std::size_t> sizes = fuzz_n ? std::vector<std::size_t>{fuzz_n} : std::vector<std::size_t>{3, 4, 5};
      const auto reports = parallel_map(iters, [&](std::size_t k) {
        GenConfig cfg;
        cfg.n = cfg.m = sizes[k % sizes.size()];
        cfg.seed = derive_seed(base_seed, k);
        return fuzz_combined(cfg, FuzzOptions{zero_u2, zero_v2});
      });
      std::map<std::string, std::size_t> branches;
      Json samples = Json::array();
      for (const FuzzReport& r : reports) {
        ++branches[std::string(to_string(r.ledger.branch))];
        if (full) samples.push_back(to_json(r));
      }
      Json doc = {{"iters", iters}, {"base_seed", base_seed}, {"violations", reports.size()}, {"branches", branches}};
      if (full) doc["samples"] = samples;
      emit(doc);
    } else if (*regress) {
      const CounterexampleReport r = regress_counterexample();
      emit(to_json(r));
      if (!r.holds()) return kVerificationFailure;
    } else if (*stress) {
      const auto rows = parallel_map(iters, [&](std::size_t k) { return stress_case(derive_seed(base_seed, k), nmax); });
      std::size_t failed = 0;
      Json failures = Json::array();
      for (const Json& row : rows) {
        if (!row["problems"].empty()) {
          ++failed;
          failures.push_back(row);
        }
      }
      emit({{"iters", iters}, {"nmax", nmax}, {"base_seed", base_seed}, {"failed", failed}, {"failures", failures}});
      if (failed) return kVerificationFailure;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == ErrorCode::TheoremViolation ? kVerificationFailure : kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kOk;
}
