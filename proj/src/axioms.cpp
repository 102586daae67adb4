#include "nonext/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <string>
#include <variant>

#include "nonext/entropy.hpp"
#include "nonext/error.hpp"
#include "nonext/format.hpp"
#include "nonext/random.hpp"

namespace nonext {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kMaxWitnesses = 3;

class WitnessSet {
 public:
  void offer(Witness w) {
    if (std::isnan(w.residual)) return;
    auto pos = std::find_if(kept_.begin(), kept_.end(),
                            [&](const Witness& k) { return w.residual > k.residual; });
    kept_.insert(pos, std::move(w));
    if (kept_.size() > kMaxWitnesses) kept_.pop_back();
  }
  // Cheap test before building a witness.
  bool wants(double residual) const {
    return kept_.size() < kMaxWitnesses || residual > kept_.back().residual;
  }
  std::vector<Witness> take() { return std::move(kept_); }

 private:
  std::vector<Witness> kept_;
};

// Tracks residuals, witnesses and evaluation errors for one check.
struct Accumulator {
  double max_residual = 0.0;
  std::size_t samples = 0;
  std::size_t errors = 0;
  std::string first_error;
  WitnessSet witnesses;

  void record_error(const std::exception& e) {
    if (errors++ == 0) first_error = e.what();
  }

  template <class MakeInput>
  void add(double residual, double q, MakeInput&& make_input, std::string note = {}) {
    ++samples;
    if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
    max_residual = std::max(max_residual, residual);
    if (witnesses.wants(residual)) witnesses.offer({q, residual, make_input(), std::move(note)});
  }

  CheckRecord finish(std::string name, std::vector<double> q_values, double threshold) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.q_values = std::move(q_values);
    rec.sample_count = samples;
    rec.threshold = threshold;
    rec.witnesses = witnesses.take();
    rec.max_residual = max_residual;
    if (max_residual > threshold) {
      rec.verdict = Verdict::fail;
      if (errors > 0)
        rec.diagnostic = std::to_string(errors) + " evaluation(s) failed, first: " + first_error;
    } else if (errors > 0 || samples == 0) {
      rec.verdict = Verdict::not_applicable;
      rec.metrics.emplace_back("max_residual_evaluated", max_residual);
      rec.max_residual = kNaN;
      rec.diagnostic = errors > 0 ? std::to_string(errors) + " evaluation(s) failed, first: " + first_error
                                  : "no evaluable inputs";
    } else {
      rec.verdict = Verdict::pass;
    }
    return rec;
  }
};

std::vector<std::vector<double>> as_input(const Distribution& d) {
  return {std::vector<double>(d.probs().begin(), d.probs().end())};
}

bool near_one(double q) { return std::abs(q - 1.0) < kShannonCrossover; }

double pow10(int j) { return std::pow(10.0, -j); }

std::vector<double> limit_q_values(ScaleRange s) {
  std::vector<double> qs;
  for (int j = s.first; j <= s.last; ++j) {
    qs.push_back(1.0 + pow10(j));
    qs.push_back(1.0 - pow10(j));
  }
  return qs;
}

double max_jump(const std::function<double(double)>& fn, double lo, double hi, int n) {
  double prev = fn(lo);
  double jump = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double cur = fn(lo + (hi - lo) * i / n);
    jump = std::max(jump, std::abs(cur - prev));
    prev = cur;
  }
  return jump;
}

double refinement_ratio(const std::function<double(double)>& fn, double lo, double hi, int coarse,
                        int factor) {
  const double c = max_jump(fn, lo, hi, coarse);
  const double fine = max_jump(fn, lo, hi, coarse * factor);
  if (c == 0.0) return fine == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return fine / c;
}

// Violation of alpha in (-inf,0] (phi > 0) or alpha in [0,1] (phi < 0).
double region_violation(const EntropyFamily& f, double q) {
  const double phi = f.phi(q);
  const double alpha = f.alpha(q);
  if (phi > 0.0) return std::max(alpha, 0.0);
  if (phi < 0.0) return std::max({-alpha, alpha - 1.0, 0.0});
  return 1.0;  // phi must not vanish away from q = 1
}

double min_second_difference(const EntropyFamily& f, double q, std::size_t grid_size,
                             std::vector<double>* worst_points = nullptr) {
  std::vector<double> p(grid_size), value(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid_size - 1);
    p[i] = std::pow(10.0, -3.0 * (1.0 - t));
    value[i] = information_content(f, q, p[i]);
  }
  p.back() = 1.0;
  value.back() = information_content(f, q, 1.0);
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < grid_size; ++i) {
    const double left = (value[i] - value[i - 1]) / (p[i] - p[i - 1]);
    const double right = (value[i + 1] - value[i]) / (p[i + 1] - p[i]);
    // 2 f[x0,x1,x2] approximates I''.
    const double dd = 2.0 * (right - left) / (p[i + 1] - p[i - 1]);
    if (dd < lowest) {
      lowest = dd;
      if (worst_points) *worst_points = {p[i - 1], p[i], p[i + 1]};
    }
  }
  return lowest;
}

std::vector<double> without_one(const std::vector<double>& q_grid) {
  std::vector<double> out;
  for (double q : q_grid)
    if (!near_one(q)) out.push_back(q);
  return out;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "unknown";
}

double maximality_residual(const EntropyFamily& f, double q, const Distribution& d) {
  return generalized_entropy_value(d, f, q) -
         generalized_entropy_value(Distribution::uniform(d.size()), f, q);
}

double additivity_residual(const EntropyFamily& f, double q, const Refinement& r,
                           AdditivityMode mode) {
  const bool suyari = mode == AdditivityMode::suyari;
  auto entropy = [&](const Distribution& d) {
    return suyari ? suyari_entropy_value(d, f, q) : generalized_entropy_value(d, f, q);
  };
  // Inside the crossover band the entropies are Shannon's, whose chain rule
  // weights are p_i.
  const double shift = near_one(q) ? 0.0 : (suyari ? suyari_shift(q) : generalized_shift(f, q));
  const double lhs = entropy(r.flatten());
  double rhs = entropy(r.marginals());
  for (std::size_t i = 0; i < r.row_count(); ++i) {
    const double pi = r.marginal(i);
    const double w = entropy_weight(pi, shift);
    if (pi == 0.0) continue;
    rhs += w * entropy(r.conditional(i));
  }
  return std::abs(lhs - rhs);
}

double pseudoadditivity_residual(const EntropyFamily& f, double q, double p1, double p2) {
  const double joint = information_content(f, q, p1 * p2);
  const double composed =
      pseudoadditive_compose(f, q, information_content(f, q, p1), information_content(f, q, p2));
  return std::abs(joint - composed) / (1.0 + std::abs(joint));
}

double limit_residual(const std::vector<double>& deviations) {
  if (deviations.empty()) return kNaN;
  for (std::size_t j = 1; j < deviations.size(); ++j) {
    if (deviations[j] > deviations[j - 1])
      return *std::max_element(deviations.begin() + static_cast<std::ptrdiff_t>(j), deviations.end());
  }
  return deviations.back();
}

CheckRecord check_continuity(const EntropyFamily& f, const std::vector<double>& q_grid,
                             const std::vector<Distribution>& dists, double ratio_threshold) {
  Accumulator acc;
  double lo = *std::min_element(q_grid.begin(), q_grid.end());
  double hi = *std::max_element(q_grid.begin(), q_grid.end());
  if (hi - lo < 1e-3) {
    lo = std::max(lo - 0.25, lo / 2);
    hi += 0.25;
  }
  for (const auto& d : dists) {
    try {
      const double r = refinement_ratio(
          [&](double q) { return generalized_entropy_value(d, f, q); }, lo, hi, 64, 256);
      acc.add(r, kNaN, [&] { return as_input(d); }, "q-direction");
    } catch (const Error& e) {
      acc.record_error(e);
    }
    const Distribution uniform = Distribution::uniform(d.size());
    for (double q : q_grid) {
      try {
        auto along = [&](double t) {
          std::vector<double> mix(d.size());
          for (std::size_t i = 0; i < d.size(); ++i) mix[i] = (1.0 - t) * d[i] + t * uniform[i];
          return generalized_entropy_value(Distribution::make(mix, NormalizeMode::normalize), f, q);
        };
        const double r = refinement_ratio(along, 0.0, 1.0, 16, 64);
        acc.add(r, q, [&] { return as_input(d); }, "p-direction toward uniform");
      } catch (const Error& e) {
        acc.record_error(e);
      }
    }
  }
  auto rec = acc.finish("continuity_probe", q_grid, ratio_threshold);
  rec.metrics.emplace_back("q_range_low", lo);
  rec.metrics.emplace_back("q_range_high", hi);
  if (rec.diagnostic.empty())
    rec.diagnostic = "heuristic: ratio of max adjacent jump on the refined grid to the coarse grid";
  return rec;
}

CheckRecord check_maximality(const EntropyFamily& f, const std::vector<double>& q_grid,
                             const std::vector<std::size_t>& n_set, std::size_t samples,
                             std::uint64_t seed, double threshold) {
  Accumulator acc;
  for (std::size_t n : n_set) {
    const auto dists = sample_simplex(n, samples, derive_seed(seed, "n=" + std::to_string(n)));
    for (double q : q_grid) {
      double at_uniform = 0.0;
      try {
        at_uniform = generalized_entropy_value(Distribution::uniform(n), f, q);
      } catch (const Error& e) {
        acc.record_error(e);
        continue;
      }
      for (const auto& d : dists) {
        try {
          const double r = generalized_entropy_value(d, f, q) - at_uniform;
          acc.add(r, q, [&] { return as_input(d); });
        } catch (const Error& e) {
          acc.record_error(e);
        }
      }
    }
  }
  return acc.finish("maximality", q_grid, threshold);
}

CheckRecord check_expandability(const EntropyFamily& f, const std::vector<Distribution>& dists,
                                const std::vector<double>& info_q_grid, double threshold) {
  Accumulator acc;
  for (const auto& d : dists) {
    try {
      const double r = std::abs(generalized_entropy_value(d.expanded(), f, 1.0) -
                                generalized_entropy_value(d, f, 1.0));
      acc.add(r, 1.0, [&] { return as_input(d); });
    } catch (const Error& e) {
      acc.record_error(e);
    }
  }
  auto rec = acc.finish("expandability", {1.0}, threshold);
  for (double q : without_one(info_q_grid)) {
    double worst = 0.0;
    try {
      for (const auto& d : dists)
        worst = std::max(worst, std::abs(generalized_entropy_value(d.expanded(), f, q) -
                                         generalized_entropy_value(d, f, q)));
    } catch (const Error&) {
      worst = kNaN;
    }
    rec.metrics.emplace_back("informational_max_difference_q=" + format_shortest(q), worst);
  }
  return rec;
}

CheckRecord check_generalized_additivity(const EntropyFamily& f, const std::vector<double>& q_grid,
                                         const std::vector<Refinement>& refinements,
                                         AdditivityMode mode, double threshold) {
  Accumulator acc;
  for (double q : q_grid) {
    for (const auto& r : refinements) {
      try {
        acc.add(additivity_residual(f, q, r, mode), q, [&] { return r.rows(); });
      } catch (const Error& e) {
        acc.record_error(e);
      }
    }
  }
  return acc.finish(mode == AdditivityMode::suyari ? "shannon_additivity" : "generalized_additivity",
                    q_grid, threshold);
}

CheckRecord check_pseudoadditivity(const EntropyFamily& f, const std::vector<double>& q_grid,
                                   std::size_t samples, std::uint64_t seed, double threshold) {
  Accumulator acc;
  Rng rng(seed);
  for (double q : q_grid) {
    for (std::size_t s = 0; s < samples; ++s) {
      const double p1 = rng.uniform_open_closed();
      const double p2 = rng.uniform_open_closed();
      try {
        acc.add(pseudoadditivity_residual(f, q, p1, p2), q,
                [&] { return std::vector<std::vector<double>>{{p1, p2}}; });
      } catch (const Error& e) {
        acc.record_error(e);
      }
    }
  }
  return acc.finish("pseudoadditivity", q_grid, threshold);
}

CheckRecord check_shannon_limit(const EntropyFamily& f, const std::vector<Distribution>& dists,
                                ScaleRange scales, double threshold) {
  Accumulator acc;
  double final_gap = 0.0;
  for (const auto& d : dists) {
    const double s1 = shannon_entropy_value(d, f.k());
    for (double side : {1.0, -1.0}) {
      try {
        std::vector<double> gaps;
        for (int j = scales.first; j <= scales.last; ++j)
          gaps.push_back(std::abs(generalized_entropy_value(d, f, 1.0 + side * pow10(j)) - s1) /
                         (1.0 + s1));
        final_gap = std::max(final_gap, gaps.back());
        acc.add(limit_residual(gaps), 1.0 + side * pow10(scales.last), [&] { return as_input(d); },
                side > 0 ? "q -> 1+" : "q -> 1-");
      } catch (const Error& e) {
        acc.record_error(e);
      }
    }
  }
  auto rec = acc.finish("shannon_limit", limit_q_values(scales), threshold);
  rec.metrics.emplace_back("max_final_relative_gap", final_gap);
  return rec;
}

CheckRecord check_sign_condition(const EntropyFamily& f, std::size_t grid_size, double upper) {
  std::vector<double> qs;
  for (std::size_t i = 1; i <= grid_size; ++i) {
    const double q = upper * static_cast<double>(i) / static_cast<double>(grid_size);
    if (q != 1.0) qs.push_back(q);
  }
  for (int j = 1; j <= 8; ++j) {
    qs.push_back(1.0 + pow10(j));
    qs.push_back(1.0 - pow10(j));
  }
  std::sort(qs.begin(), qs.end());
  Accumulator acc;
  double violations = 0.0;
  for (double q : qs) {
    try {
      const double phi = f.phi(q);
      const bool ok = (q > 1.0 && phi > 0.0) || (q < 1.0 && phi < 0.0);
      ++acc.samples;
      if (!ok) {
        violations += 1.0;
        acc.witnesses.offer({q, 1.0, {{phi}}, "sign(phi) != sign(q - 1)"});
      }
    } catch (const Error& e) {
      acc.record_error(e);
    }
  }
  acc.max_residual = violations;
  auto rec = acc.finish("sign_condition", std::move(qs), 0.0);
  rec.diagnostic = rec.diagnostic.empty() ? "residual counts grid points violating the sign rule"
                                          : rec.diagnostic;
  return rec;
}

CheckRecord check_alpha_phi_limit(const EntropyFamily& f, ScaleRange scales, double threshold) {
  Accumulator acc;
  for (double side : {1.0, -1.0}) {
    try {
      std::vector<double> devs;
      std::vector<double> ratios;
      for (int j = scales.first; j <= scales.last; ++j) {
        const double q = 1.0 + side * pow10(j);
        const double phi = f.phi(q);
        if (phi == 0.0) throw Error(ErrorCode::PhiVanishes, "phi(" + format_shortest(q) + ") = 0");
        ratios.push_back(f.alpha(q) / phi);
        devs.push_back(std::abs(ratios.back() + f.k()));
      }
      acc.add(limit_residual(devs), 1.0 + side * pow10(scales.last),
              [&] { return std::vector<std::vector<double>>{ratios}; },
              side > 0 ? "alpha/phi at q = 1 + 10^-j" : "alpha/phi at q = 1 - 10^-j");
    } catch (const Error& e) {
      acc.record_error(e);
    }
  }
  return acc.finish("alpha_phi_limit", limit_q_values(scales), threshold);
}

CheckRecord check_phi_derivative_at_1(const std::function<double(double)>& phi, double k,
                                      ScaleRange scales, double threshold) {
  Accumulator acc;
  CheckRecord rec;
  std::vector<std::pair<std::string, double>> metrics;
  try {
    const double phi1 = phi(1.0);
    for (double side : {1.0, -1.0}) {
      std::vector<double> quotients;
      std::vector<double> devs;
      for (int j = scales.first; j <= scales.last; ++j) {
        const double q = 1.0 + side * pow10(j);
        quotients.push_back((phi(q) - phi1) / (q - 1.0));
        devs.push_back(std::abs(quotients.back() - 1.0 / k));
      }
      metrics.emplace_back(side > 0 ? "right_quotient_final" : "left_quotient_final", quotients.back());
      acc.add(limit_residual(devs), 1.0 + side * pow10(scales.last),
              [&] { return std::vector<std::vector<double>>{quotients}; },
              side > 0 ? "(phi(q) - phi(1))/(q - 1), q -> 1+" : "(phi(q) - phi(1))/(q - 1), q -> 1-");
    }
  } catch (const Error& e) {
    acc.record_error(e);
  }
  rec = acc.finish("phi_derivative_at_1", limit_q_values(scales), threshold);
  rec.metrics.emplace_back("target", 1.0 / k);
  for (auto& m : metrics) rec.metrics.push_back(std::move(m));
  return rec;
}

std::vector<bool> constraint_region_by_q(const EntropyFamily& f, const std::vector<double>& q_grid) {
  std::vector<bool> out;
  for (double q : without_one(q_grid)) out.push_back(region_violation(f, q) <= 0.0);
  return out;
}

std::vector<bool> convexity_by_q(const EntropyFamily& f, const std::vector<double>& q_grid,
                                 std::size_t grid_size, double threshold) {
  std::vector<bool> out;
  for (double q : without_one(q_grid)) out.push_back(min_second_difference(f, q, grid_size) >= -threshold);
  return out;
}

CheckRecord check_constraint_region(const EntropyFamily& f, const std::vector<double>& q_grid) {
  Accumulator acc;
  const auto qs = without_one(q_grid);
  for (double q : qs) {
    try {
      const double v = region_violation(f, q);
      acc.add(v, q, [&] { return std::vector<std::vector<double>>{{f.phi(q), f.alpha(q)}}; },
              "input = [phi(q), alpha(q)]");
    } catch (const Error& e) {
      acc.record_error(e);
    }
  }
  return acc.finish("constraint_region", qs, 0.0);
}

CheckRecord check_convexity_of_I(const EntropyFamily& f, const std::vector<double>& q_grid,
                                 std::size_t grid_size, double threshold) {
  if (grid_size < 8) throw Error(ErrorCode::InvalidParameter, "convexity grid needs >= 8 points");
  Accumulator acc;
  double lowest = std::numeric_limits<double>::infinity();
  std::size_t agree = 0;
  std::size_t compared = 0;
  std::string disagreements;
  for (double q : q_grid) {
    try {
      std::vector<double> pts;
      const double dd = min_second_difference(f, q, grid_size, &pts);
      lowest = std::min(lowest, dd);
      acc.add(std::max(0.0, -dd), q, [&] { return std::vector<std::vector<double>>{pts}; },
              "input = p triple with the most negative second difference");
      if (!near_one(q)) {
        ++compared;
        const bool convex = dd >= -threshold;
        const bool in_region = region_violation(f, q) <= 0.0;
        if (convex == in_region) {
          ++agree;
        } else {
          disagreements += (disagreements.empty() ? "" : ", ") + format_shortest(q);
        }
      }
    } catch (const Error& e) {
      acc.record_error(e);
    }
  }
  auto rec = acc.finish("convexity_of_I", q_grid, threshold);
  rec.metrics.emplace_back("min_second_difference", lowest);
  rec.metrics.emplace_back("constraint_agreement", compared == agree ? 1.0 : 0.0);
  if (!disagreements.empty())
    rec.diagnostic += (rec.diagnostic.empty() ? "" : "; ") +
                      std::string("disagrees with constraint_region at q = ") + disagreements;
  return rec;
}

CheckRecord derivative_limit_probe(const std::function<double(double)>& g, double x0, int scales,
                                   double threshold) {
  if (scales < 2) throw Error(ErrorCode::InvalidParameter, "probe needs at least 2 scales");
  auto central = [&](double x, double h) {
    const double hi = x + h;
    const double lo = x - h;
    return (g(hi) - g(lo)) / (hi - lo);
  };
  CheckRecord rec;
  rec.name = "derivative_limit_probe";
  rec.q_values = {x0};
  rec.threshold = threshold;
  try {
    double at_x0 = 0.0;
    std::vector<double> right, left;
    for (int j = 2; j <= scales + 1; ++j) {
      const double delta = pow10(j);
      at_x0 = central(x0, delta);
      // Derivative estimates at x0 +- delta use a step well inside (x0, x0 + delta).
      right.push_back(central(x0 + delta, delta / 100.0));
      left.push_back(central(x0 - delta, delta / 100.0));
    }
    rec.sample_count = right.size() + left.size() + static_cast<std::size_t>(scales);
    const std::size_t tail = std::max<std::size_t>(2, static_cast<std::size_t>((scales + 1) / 2));
    auto spread = [&](const std::vector<double>& v) {
      const auto [lo, hi] = std::minmax_element(v.end() - static_cast<std::ptrdiff_t>(tail), v.end());
      return (*hi - *lo) / (1.0 + std::abs(v.back()));
    };
    const double spread_r = spread(right);
    const double spread_l = spread(left);
    const double miss_r = std::abs(right.back() - at_x0) / (1.0 + std::abs(at_x0));
    const double miss_l = std::abs(left.back() - at_x0) / (1.0 + std::abs(at_x0));
    const bool settled = spread_r <= threshold && spread_l <= threshold;
    rec.max_residual = std::max({spread_r, spread_l, miss_r, miss_l});
    rec.metrics = {{"derivative_estimate_at_x0", at_x0},
                   {"right_limit_estimate", right.back()},
                   {"left_limit_estimate", left.back()},
                   {"right_spread", spread_r},
                   {"left_spread", spread_l}};
    if (!settled) {
      rec.verdict = Verdict::not_applicable;
      rec.diagnostic = "derivative estimates near x0 = " + format_shortest(x0) +
                       " do not converge; the derivative-limit argument does not apply here";
    } else if (rec.max_residual > threshold) {
      rec.verdict = Verdict::fail;
      rec.diagnostic = "one-sided derivative limits differ from the derivative at x0";
    } else {
      rec.verdict = Verdict::pass;
    }
    if (rec.verdict != Verdict::pass)
      rec.witnesses.push_back({x0, rec.max_residual, {right, left},
                               "rows: derivative estimates at x0 + 10^-j and x0 - 10^-j"});
  } catch (const Error& e) {
    rec.verdict = Verdict::not_applicable;
    rec.max_residual = kNaN;
    rec.diagnostic = e.what();
  }
  return rec;
}

bool AxiomReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.verdict == Verdict::fail; });
}

const CheckRecord* AxiomReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

CheckRecord merge_probes(std::vector<CheckRecord> probes) {
  CheckRecord out = probes.front();
  for (std::size_t i = 1; i < probes.size(); ++i) {
    const auto& p = probes[i];
    out.q_values.insert(out.q_values.end(), p.q_values.begin(), p.q_values.end());
    out.sample_count += p.sample_count;
    out.max_residual = (std::isnan(out.max_residual) || std::isnan(p.max_residual))
                           ? kNaN
                           : std::max(out.max_residual, p.max_residual);
    auto rank = [](Verdict v) { return v == Verdict::fail ? 2 : v == Verdict::not_applicable ? 1 : 0; };
    if (rank(p.verdict) > rank(out.verdict)) out.verdict = p.verdict;
    out.witnesses.insert(out.witnesses.end(), p.witnesses.begin(), p.witnesses.end());
    for (const auto& m : p.metrics)
      out.metrics.emplace_back(m.first + "@" + format_shortest(p.q_values.front()), m.second);
    if (!p.diagnostic.empty())
      out.diagnostic += (out.diagnostic.empty() ? "" : "; ") + p.diagnostic;
  }
  std::stable_sort(out.witnesses.begin(), out.witnesses.end(),
                   [](const Witness& a, const Witness& b) { return a.residual > b.residual; });
  if (out.witnesses.size() > kMaxWitnesses) out.witnesses.resize(kMaxWitnesses);
  return out;
}

std::vector<Distribution> sample_dims(const CheckConfig& c, std::string_view stream,
                                      std::size_t per_dim) {
  std::vector<Distribution> out;
  for (std::size_t n : c.dims) {
    auto part = sample_simplex(n, per_dim,
                               derive_seed(c.seed, std::string(stream) + "/n=" + std::to_string(n)));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Checks named in out_of_scope do not apply to the family and never make the
// classification inconclusive.
std::string classify(const std::vector<CheckRecord>& checks, const std::vector<std::string>& out_of_scope) {
  bool probe_na = false;
  bool other_na = false;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::fail) return "invalid";
    if (c.verdict != Verdict::not_applicable) continue;
    if (std::find(out_of_scope.begin(), out_of_scope.end(), c.name) != out_of_scope.end()) continue;
    (c.name == "derivative_limit_probe" ? probe_na : other_na) = true;
  }
  if (other_na) return "inconclusive";
  return probe_na ? "valid under condition (iii')" : "valid";
}

}  // namespace

AxiomReport run_full_report(const EntropyFamily& f, const CheckConfig& c) {
  if (c.q_grid.empty() || c.dims.empty())
    throw Error(ErrorCode::InvalidParameter, "config needs a nonempty q grid and dimension set");
  for (double q : c.q_grid)
    if (!(q > 0.0)) throw Error(ErrorCode::InvalidParameter, "q grid values must be positive");
  for (std::size_t n : c.dims)
    if (n == 0) throw Error(ErrorCode::InvalidParameter, "dimensions must be >= 1");
  const Thresholds& t = c.thresholds;

  std::vector<Refinement> refinements;
  for (std::size_t rows = 1; rows <= c.max_rows; ++rows) {
    const std::size_t share = c.refinements / c.max_rows + (rows <= c.refinements % c.max_rows ? 1 : 0);
    auto part = sample_refinement(rows, c.max_m, share,
                                  derive_seed(c.seed, "additivity/rows=" + std::to_string(rows)));
    refinements.insert(refinements.end(), part.begin(), part.end());
  }
  const auto phi = [&f](double q) { return f.phi(q); };
  const bool one_minus_q = std::holds_alternative<deform::OneMinusQ>(f.alpha_function().kind());

  using Task = std::function<CheckRecord()>;
  std::vector<Task> tasks{
      [&] { return check_continuity(f, c.q_grid, sample_dims(c, "continuity_probe", 2), t.continuity_ratio); },
      [&] { return check_maximality(f, c.q_grid, c.dims, c.samples, derive_seed(c.seed, "maximality"), t.identity); },
      [&] { return check_expandability(f, sample_dims(c, "expandability", c.samples), c.q_grid, t.expandability); },
      [&] { return check_generalized_additivity(f, c.q_grid, refinements, AdditivityMode::suyari, t.identity); },
      [&] { return check_generalized_additivity(f, c.q_grid, refinements, AdditivityMode::generalized, t.identity); },
      [&] { return check_pseudoadditivity(f, c.q_grid, c.samples, derive_seed(c.seed, "pseudoadditivity"), t.identity); },
      [&] { return check_shannon_limit(f, sample_dims(c, "shannon_limit", c.samples), c.shannon_limit_scales, t.limit); },
      [&] { return check_sign_condition(f, c.sign_grid, c.sign_upper); },
      [&] {
        if (one_minus_q) return check_phi_derivative_at_1(phi, f.k(), c.derivative_scales, t.phi_derivative);
        CheckRecord skip;
        skip.name = "phi_derivative_at_1";
        skip.q_values = limit_q_values(c.derivative_scales);
        skip.verdict = Verdict::not_applicable;
        skip.max_residual = kNaN;
        skip.threshold = t.phi_derivative;
        skip.diagnostic = "applies only when alpha(q) = 1 - q; see alpha_phi_limit";
        return skip;
      },
      [&] { return check_alpha_phi_limit(f, c.ratio_scales, t.alpha_phi); },
      [&] { return check_constraint_region(f, c.q_grid); },
      [&] { return check_convexity_of_I(f, c.q_grid, c.convexity_grid, t.convexity); },
      [&] {
        std::vector<CheckRecord> probes;
        for (double x0 : c.probe_points) probes.push_back(derivative_limit_probe(phi, x0, c.probe_scales, t.probe));
        if (probes.empty()) {
          CheckRecord none;
          none.name = "derivative_limit_probe";
          none.verdict = Verdict::not_applicable;
          none.max_residual = kNaN;
          none.threshold = t.probe;
          none.diagnostic = "no probe points configured";
          return none;
        }
        return merge_probes(std::move(probes));
      },
  };

  std::vector<std::future<CheckRecord>> running;
  running.reserve(tasks.size());
  for (auto& task : tasks) running.push_back(std::async(std::launch::async, task));

  AxiomReport report{f, c, {}, {}};
  for (auto& r : running) report.checks.push_back(r.get());
  std::vector<std::string> out_of_scope;
  if (!one_minus_q) out_of_scope.push_back("phi_derivative_at_1");
  report.classification = classify(report.checks, out_of_scope);
  return report;
}

}  // namespace nonext
