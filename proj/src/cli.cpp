#include "nonext/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nonext/axioms.hpp"
#include "nonext/entropy.hpp"
#include "nonext/error.hpp"
#include "nonext/format.hpp"
#include "nonext/io.hpp"
#include "nonext/weierstrass.hpp"

namespace nonext::cli {
namespace {

struct Globals {
  bool json = false;
  std::uint64_t seed = 42;
  int digits = 15;
};

// Raised for bad input after CLI11 parsing succeeded.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x, const Globals& g) { return format_digits(x, g.digits); }

io::Json parse_inline_json(const std::string& text, const std::string& what) {
  try {
    return io::Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(what + ": malformed JSON: " + e.what());
  }
}

EntropyFamily load_family(const std::string& path) {
  return io::family_from_json(io::read_json_file(path));
}

// Writes to the file at `path`, or to `fallback` when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write output file '" + path + "'");
  file << text;
}

// Runs `parse` (mapping failures to exit 2) and then `evaluate` (mapping
// library errors to exit 3).
int staged(std::ostream& err, const std::function<void()>& parse, const std::function<int()>& evaluate) {
  try {
    parse();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  try {
    return evaluate();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "evaluation error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kEvaluationError;
  } catch (const std::exception& e) {
    err << "evaluation error: " << e.what() << "\n";
    return kEvaluationError;
  }
}

struct EvalArgs {
  std::string family;
  double q = 0.0;
  std::string dist;
  std::string dist_file;
  std::string mode = "generalized";
  bool normalize = false;
};

int cmd_eval(const EvalArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  std::optional<EntropyFamily> family;
  std::optional<Distribution> dist;
  return staged(
      err,
      [&] {
        if (!(a.q > 0.0)) throw InputError("--q must be positive");
        family = load_family(a.family);
        if (a.dist.empty() == a.dist_file.empty()) throw InputError("give exactly one of --dist or --dist-file");
        const io::Json j = a.dist.empty() ? io::read_json_file(a.dist_file) : parse_inline_json(a.dist, "--dist");
        dist = io::distribution_from_json(j, a.normalize ? NormalizeMode::normalize : NormalizeMode::strict);
      },
      [&] {
        const EntropyValue v = a.mode == "suyari" ? suyari_entropy(*dist, *family, a.q)
                                                  : generalized_entropy(*dist, *family, a.q);
        if (g.json) {
          io::Json j;
          j["q"] = a.q;
          j["value"] = v.value;
          j["family"] = io::family_to_json(*family);
          out << j.dump() << "\n";
        } else {
          out << num(v.value, g) << "\n";
        }
        return kSuccess;
      });
}

struct InfoArgs {
  std::string family;
  double q = 0.0;
  double p = 0.0;
};

int cmd_info_content(const InfoArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  std::optional<EntropyFamily> family;
  return staged(
      err,
      [&] {
        if (!(a.q > 0.0)) throw InputError("--q must be positive");
        if (!(a.p > 0.0 && a.p <= 1.0)) throw InputError("--p must lie in (0, 1]");
        family = load_family(a.family);
      },
      [&] {
        const double v = information_content(*family, a.q, a.p);
        if (g.json) {
          io::Json j;
          j["q"] = a.q;
          j["p"] = a.p;
          j["value"] = v;
          j["family"] = io::family_to_json(*family);
          out << j.dump() << "\n";
        } else {
          out << num(v, g) << "\n";
        }
        return kSuccess;
      });
}

struct AxiomArgs {
  std::string family;
  std::vector<double> q;
  std::vector<std::size_t> dims;
  std::size_t samples = 0;
  std::size_t refinements = 0;
  std::vector<double> probe_points;
  std::string out;
};

int cmd_axioms(const AxiomArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  std::optional<EntropyFamily> family;
  CheckConfig config;
  return staged(
      err,
      [&] {
        family = load_family(a.family);
        if (!a.q.empty()) config.q_grid = a.q;
        if (!a.dims.empty()) config.dims = a.dims;
        if (a.samples > 0) config.samples = a.samples;
        if (a.refinements > 0) config.refinements = a.refinements;
        if (!a.probe_points.empty()) config.probe_points = a.probe_points;
        config.seed = g.seed;
        for (double q : config.q_grid)
          if (!(q > 0.0)) throw InputError("--q values must be positive");
        for (double x : config.probe_points)
          if (!(x > 0.0)) throw InputError("--probe-point values must be positive");
        for (std::size_t n : config.dims)
          if (n == 0) throw InputError("--dims values must be >= 1");
      },
      [&] {
        const AxiomReport report = run_full_report(*family, config);
        const std::string text = io::dump(io::report_to_json(report));
        if (!a.out.empty()) emit(a.out, text, out);
        if (g.json && a.out.empty()) {
          out << text;
        } else {
          out << "family: " << report.family.id() << "\n";
          char line[160];
          std::snprintf(line, sizeof line, "%-24s %-15s %-14s %s\n", "check", "verdict", "max_residual", "threshold");
          out << line;
          for (const auto& c : report.checks) {
            const std::string verdict =
                c.verdict == Verdict::pass ? "PASS" : c.verdict == Verdict::fail ? "FAIL" : "N/A";
            std::snprintf(line, sizeof line, "%-24s %-15s %-14s %s\n", c.name.c_str(), verdict.c_str(),
                          std::isnan(c.max_residual) ? "-" : format_digits(c.max_residual, 6).c_str(),
                          format_digits(c.threshold, 6).c_str());
            out << line;
          }
          out << "classification: " << report.classification << "\n";
        }
        return report.any_failed() ? kCheckFailed : kSuccess;
      });
}

struct CounterexampleArgs {
  double a = 0.5;
  std::uint64_t b = 13;
  double k = 1.0;
  double eps = 1e-12;
  int depth = 8;
  double off1 = 1.3;
  std::string out;
};

int cmd_counterexample(const CounterexampleArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  std::optional<WeierstrassParams> params;
  return staged(
      err,
      [&] {
        params = WeierstrassParams::make(a.a, a.b, a.eps);
        if (!(a.k > 0.0)) throw InputError("--k must be positive");
        if (a.depth < 2) throw InputError("--depth must be >= 2");
        if (!(a.off1 > 0.0) || a.off1 == 1.0) throw InputError("--off1 must be positive and != 1");
      },
      [&] {
        const auto phi = [&](double q) { return eval_phi_counterexample(*params, a.k, q); };
        const double base = static_cast<double>(params->b());
        const ProbeResult off = difference_quotient_probe(phi, a.off1, base, a.depth);
        std::ostringstream csv;
        csv << "m,scale,quotient_at_1,quotient_at_off1\n";
        double last_at_1 = 0.0;
        for (const auto& s : off.scales) {
          const double q = 1.0 + s.scale;
          last_at_1 = phi(q) / (q - 1.0);
          csv << s.m << "," << num(s.scale, g) << "," << num(last_at_1, g) << "," << num(s.quotient, g) << "\n";
        }
        emit(a.out, csv.str(), out);
        std::ostream& summary = a.out.empty() ? err : out;
        if (g.json) {
          io::Json j;
          j["phi_prime_at_1_estimate"] = last_at_1;
          j["target"] = 1.0 / a.k;
          j["off1_point"] = a.off1;
          j["off1_spread"] = off.spread;
          j["off1_spread_threshold"] = kOffOneSpreadThreshold;
          summary << j.dump() << "\n";
        } else {
          summary << "phi'(1) \xE2\x89\x88 " << num(last_at_1, g) << " (target " << num(1.0 / a.k, g) << ")\n";
          summary << "off-1 spread at q=" << num(a.off1, g) << ": " << num(off.spread, g)
                  << " (threshold " << num(kOffOneSpreadThreshold, g) << ", "
                  << (off.spread > kOffOneSpreadThreshold ? "not converging" : "below threshold") << ")\n";
        }
        return kSuccess;
      });
}

struct WeierstrassArgs {
  double a = 0.5;
  std::uint64_t b = 13;
  double eps = 1e-12;
  std::vector<double> x;
  std::string range;
  std::string out;
};

std::vector<double> parse_range(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    std::istringstream is(item);
    is.imbue(std::locale::classic());
    double v = 0.0;
    if (!(is >> v) || !is.eof()) throw InputError("--range must be start:stop:step");
    parts.push_back(v);
  }
  if (parts.size() != 3) throw InputError("--range must be start:stop:step");
  const double start = parts[0], stop = parts[1], step = parts[2];
  if (!(step > 0.0) || stop < start) throw InputError("--range needs step > 0 and stop >= start");
  const auto n = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
  if (n > 100'000'000) throw InputError("--range produces too many points");
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(n) + 1);
  for (long long i = 0; i <= n; ++i) xs.push_back(start + static_cast<double>(i) * step);
  return xs;
}

int cmd_weierstrass(const WeierstrassArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  std::optional<WeierstrassParams> params;
  std::vector<double> xs;
  return staged(
      err,
      [&] {
        params = WeierstrassParams::make(a.a, a.b, a.eps);
        xs = a.x;
        if (!a.range.empty()) {
          auto r = parse_range(a.range);
          xs.insert(xs.end(), r.begin(), r.end());
        }
        if (xs.empty()) throw InputError("give --x and/or --range");
      },
      [&] {
        std::ostringstream csv;
        csv << "x,W\n";
        for (double x : xs) csv << num(x, g) << "," << num(eval_W(*params, x), g) << "\n";
        emit(a.out, csv.str(), out);
        return kSuccess;
      });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"nonextensive entropy toolkit: entropies, axiom reports, Weierstrass counterexample", "nonext"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Emit JSON instead of plain text");
  app.add_option("--seed", g.seed, "Random seed for sampled checks");
  app.add_option("--digits", g.digits, "Significant digits for printed numbers")->check(CLI::Range(1, 17));

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate the entropy of a distribution");
  eval_cmd->add_option("--family", eval.family, "Family spec JSON file")->required();
  eval_cmd->add_option("--q", eval.q, "Deformation parameter q > 0")->required();
  eval_cmd->add_option("--dist", eval.dist, "Inline JSON array, e.g. \"[0.5,0.5]\"");
  eval_cmd->add_option("--dist-file", eval.dist_file, "JSON file holding the distribution array");
  eval_cmd->add_option("--mode", eval.mode, "generalized (1 - sum p^(1-alpha))/phi or suyari (1 - sum p^q)/phi")
      ->check(CLI::IsMember({"generalized", "suyari"}));
  eval_cmd->add_flag("--normalize", eval.normalize, "Divide the input by its sum instead of requiring sum 1");

  InfoArgs info;
  auto* info_cmd = app.add_subcommand("info-content", "Evaluate the pseudoadditive information content I_q(p)");
  info_cmd->add_option("--family", info.family, "Family spec JSON file")->required();
  info_cmd->add_option("--q", info.q, "Deformation parameter q > 0")->required();
  info_cmd->add_option("--p", info.p, "Probability in (0, 1]")->required();

  AxiomArgs axioms;
  auto* axioms_cmd = app.add_subcommand("axioms", "Run every axiom check and write a JSON report");
  axioms_cmd->add_option("--family", axioms.family, "Family spec JSON file")->required();
  axioms_cmd->add_option("--q", axioms.q, "Comma-separated q grid")->delimiter(',');
  axioms_cmd->add_option("--dims", axioms.dims, "Comma-separated simplex dimensions")->delimiter(',');
  axioms_cmd->add_option("--samples", axioms.samples, "Samples per (q, n)");
  axioms_cmd->add_option("--refinements", axioms.refinements, "Random refinements for additivity checks");
  axioms_cmd->add_option("--probe-point", axioms.probe_points, "Points for the derivative-limit probe")->delimiter(',');
  axioms_cmd->add_option("--out", axioms.out, "Report JSON path");

  CounterexampleArgs cex;
  auto* cex_cmd = app.add_subcommand("counterexample", "Difference quotients of the Weierstrass-based phi");
  cex_cmd->add_option("--a", cex.a, "Weierstrass a in (0, 1)");
  cex_cmd->add_option("--b", cex.b, "Weierstrass b, odd integer");
  cex_cmd->add_option("--k", cex.k, "Entropy constant k > 0");
  cex_cmd->add_option("--eps", cex.eps, "Series truncation tolerance");
  cex_cmd->add_option("--depth", cex.depth, "Number of scales b^-m");
  cex_cmd->add_option("--off1", cex.off1, "Probe point away from q = 1");
  cex_cmd->add_option("--out", cex.out, "CSV path (stdout if omitted)");

  WeierstrassArgs w;
  auto* w_cmd = app.add_subcommand("weierstrass", "Tabulate the Weierstrass function");
  w_cmd->add_option("--a", w.a, "Weierstrass a in (0, 1)");
  w_cmd->add_option("--b", w.b, "Weierstrass b, odd integer");
  w_cmd->add_option("--eps", w.eps, "Series truncation tolerance");
  w_cmd->add_option("--x", w.x, "Comma-separated x values")->delimiter(',');
  w_cmd->add_option("--range", w.range, "start:stop:step");
  w_cmd->add_option("--out", w.out, "CSV path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  if (*eval_cmd) return cmd_eval(eval, g, out, err);
  if (*info_cmd) return cmd_info_content(info, g, out, err);
  if (*axioms_cmd) return cmd_axioms(axioms, g, out, err);
  if (*cex_cmd) return cmd_counterexample(cex, g, out, err);
  if (*w_cmd) return cmd_weierstrass(w, g, out, err);
  return kInputError;
}

}  // namespace nonext::cli
