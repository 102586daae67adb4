#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nonext/deformation.hpp"
#include "nonext/simplex.hpp"

namespace nonext {

enum class Verdict { pass, fail, not_applicable };
std::string_view to_string(Verdict v);

/// One retained input of a check, enough to replay it.
struct Witness {
  double q;
  double residual;
  std::vector<std::vector<double>> input;
  std::string note;
};

struct CheckRecord {
  std::string name;
  std::vector<double> q_values;
  std::size_t sample_count = 0;
  /// NaN when the check could not be evaluated (verdict not_applicable).
  double max_residual = 0.0;
  double threshold = 0.0;
  Verdict verdict = Verdict::pass;
  /// Up to three worst-residual inputs, largest first.
  std::vector<Witness> witnesses;
  /// Informational numbers that do not enter the verdict.
  std::vector<std::pair<std::string, double>> metrics;
  std::string diagnostic;
};

struct Thresholds {
  double identity = 1e-10;         // algebraic identities (maximality, additivity, pseudoadditivity)
  double expandability = 1e-12;
  double limit = 1e-4;             // shannon_limit, relative to 1 + S_1
  double alpha_phi = 1e-6;
  double phi_derivative = 1e-4;
  double convexity = 1e-9;
  double continuity_ratio = 0.5;   // max jump on refined grid / max jump on coarse grid
  double probe = 1e-4;             // derivative_limit_probe spread and agreement
};

/// Decimal exponents j of the steps h = 10^-j used by a limit check.
struct ScaleRange {
  int first;
  int last;
};

struct CheckConfig {
  std::vector<double> q_grid{0.5, 0.9, 1.0, 1.1, 2.0, 3.0};
  std::vector<std::size_t> dims{2, 3, 5};
  std::size_t samples = 200;
  std::size_t refinements = 200;
  std::size_t max_rows = 4;
  std::size_t max_m = 4;
  std::uint64_t seed = 42;
  std::size_t convexity_grid = 32;
  std::size_t sign_grid = 400;
  double sign_upper = 4.0;
  std::vector<double> probe_points{1.3};
  int probe_scales = 6;
  ScaleRange shannon_limit_scales{2, 6};
  ScaleRange ratio_scales{3, 8};
  ScaleRange derivative_scales{3, 8};
  Thresholds thresholds{};
};

enum class AdditivityMode { suyari, generalized };

// Per-instance residuals; the checks below aggregate these.

/// S_q(d) - S_q(uniform_n) using the generalized entropy.
double maximality_residual(const EntropyFamily& f, double q, const Distribution& d);

/// |LHS - RHS| of the chain rule with weights p_i^q (suyari) or
/// p_i^{1-alpha(q)} (generalized). Zero-marginal rows are skipped when the
/// weight exponent is positive.
double additivity_residual(const EntropyFamily& f, double q, const Refinement& r,
                           AdditivityMode mode);

/// |I(p1 p2) - compose(I(p1), I(p2))| / (1 + |I(p1 p2)|).
double pseudoadditivity_residual(const EntropyFamily& f, double q, double p1, double p2);

/// Convergence residual of a sequence of deviations |x_j - L| ordered by
/// shrinking step: the final deviation if the sequence never increases, else
/// the largest deviation from the first increase onward.
double limit_residual(const std::vector<double>& deviations);

CheckRecord check_continuity(const EntropyFamily& f, const std::vector<double>& q_grid,
                             const std::vector<Distribution>& dists, double ratio_threshold = 0.5);

CheckRecord check_maximality(const EntropyFamily& f, const std::vector<double>& q_grid,
                             const std::vector<std::size_t>& n_set, std::size_t samples,
                             std::uint64_t seed, double threshold = 1e-10);

/// Pass/fail at q = 1 only; differences at the other grid values are
/// reported as metrics.
CheckRecord check_expandability(const EntropyFamily& f, const std::vector<Distribution>& dists,
                                const std::vector<double>& info_q_grid = {},
                                double threshold = 1e-12);

CheckRecord check_generalized_additivity(const EntropyFamily& f, const std::vector<double>& q_grid,
                                         const std::vector<Refinement>& refinements,
                                         AdditivityMode mode, double threshold = 1e-10);

CheckRecord check_pseudoadditivity(const EntropyFamily& f, const std::vector<double>& q_grid,
                                   std::size_t samples, std::uint64_t seed,
                                   double threshold = 1e-10);

CheckRecord check_shannon_limit(const EntropyFamily& f, const std::vector<Distribution>& dists,
                                ScaleRange scales = {2, 6}, double threshold = 1e-4);

CheckRecord check_sign_condition(const EntropyFamily& f, std::size_t grid_size = 400,
                                 double upper = 4.0);

CheckRecord check_alpha_phi_limit(const EntropyFamily& f, ScaleRange scales = {3, 8},
                                  double threshold = 1e-6);

CheckRecord check_phi_derivative_at_1(const std::function<double(double)>& phi, double k,
                                      ScaleRange scales = {3, 8}, double threshold = 1e-4);

/// alpha in (-inf, 0] where phi > 0 and alpha in [0, 1] where phi < 0.
/// Grid points with |q - 1| below the crossover are skipped.
CheckRecord check_constraint_region(const EntropyFamily& f, const std::vector<double>& q_grid);

/// Second divided differences of I_q over a geometric p grid on [1e-3, 1].
/// The record carries the per-q agreement with check_constraint_region.
CheckRecord check_convexity_of_I(const EntropyFamily& f, const std::vector<double>& q_grid,
                                 std::size_t grid_size = 32, double threshold = 1e-9);

/// Per-q verdicts (true = complies) of the two checks above, over the q != 1
/// points of the grid, in grid order.
std::vector<bool> constraint_region_by_q(const EntropyFamily& f, const std::vector<double>& q_grid);
std::vector<bool> convexity_by_q(const EntropyFamily& f, const std::vector<double>& q_grid,
                                 std::size_t grid_size = 32, double threshold = 1e-9);

/// Compares the symmetric derivative estimate at x0 with the limits of the
/// derivative estimates at x0 +- delta as delta shrinks. Lemma-style
/// behaviour: pass when both limits exist and agree with the estimate at x0;
/// not_applicable when the one-sided estimates do not settle (no derivative
/// near x0); fail when they settle on a different value.
CheckRecord derivative_limit_probe(const std::function<double(double)>& g, double x0,
                                   int scales = 6, double threshold = 1e-4);

struct AxiomReport {
  EntropyFamily family;
  CheckConfig config;
  std::vector<CheckRecord> checks;
  /// "valid", "valid under condition (iii')" or "invalid".
  std::string classification;

  bool any_failed() const;
  const CheckRecord* find(std::string_view name) const;
};

/// Runs every check. Random streams are derived from (config.seed, check
/// name), so the report does not depend on execution order.
AxiomReport run_full_report(const EntropyFamily& f, const CheckConfig& config = {});

}  // namespace nonext
