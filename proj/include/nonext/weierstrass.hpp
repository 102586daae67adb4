#pragma once

#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

namespace nonext {

/// Weierstrass's sufficient condition for nowhere differentiability: ab > 1 + 3pi/2.
inline constexpr double kWeierstrassProductBound = 1.0 + 1.5 * std::numbers::pi;

/// Parameters of W(x) = sum_k a^k cos(b^k pi x), truncated after `term_count()`
/// terms so that the discarded tail a^{K+1}/(1-a) is at most eps.
class WeierstrassParams {
 public:
  /// Throws InvalidParameter unless 0 < a < 1, b is odd and >= 3,
  /// ab > 1 + 3pi/2 and eps > 0.
  static WeierstrassParams make(double a, std::uint64_t b, double eps = 1e-12);

  double a() const noexcept { return a_; }
  std::uint64_t b() const noexcept { return b_; }
  double eps() const noexcept { return eps_; }

  /// Index K of the last retained term; the series is summed over k = 0..K.
  int last_term() const noexcept { return last_term_; }
  int term_count() const noexcept { return last_term_ + 1; }

  /// W(0) = 1/(1-a), the sup of |W|.
  double peak() const noexcept { return 1.0 / (1.0 - a_); }

 private:
  WeierstrassParams(double a, std::uint64_t b, double eps, int last_term)
      : a_(a), b_(b), eps_(eps), last_term_(last_term) {}

  double a_;
  std::uint64_t b_;
  double eps_;
  int last_term_;
};

/// Truncated Weierstrass sum at x, within eps of the full series.
double eval_W(const WeierstrassParams& p, double x);

/// phi(q) = (q-1)/k * (W(q-1) + 2 W(0)) / (3 W(0)); exactly zero at q = 1.
double eval_phi_counterexample(const WeierstrassParams& p, double k, double q);

struct ProbeScale {
  int m;
  double scale;
  double quotient;
};

struct ProbeResult {
  std::vector<ProbeScale> scales;
  /// max - min of the quotients over the last depth/2 scales.
  double spread;
};

/// Forward difference quotients (f(x+h_m) - f(x)) / h_m for h_m = base^{-m},
/// m = 1..depth. The denominator is the representable step (x+h_m) - x.
ProbeResult difference_quotient_probe(const std::function<double(double)>& f, double x,
                                      double base, int depth);

/// difference_quotient_probe applied to W with base b.
ProbeResult nondifferentiability_probe(const WeierstrassParams& p, double x, int depth);

}  // namespace nonext
