#include "nonext/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nonext/error.hpp"

namespace nonext {
namespace {

// cos(pi t) for t in [0, 2), folded onto [0, 1/4] so that exact grid points
// (t = 0, 1/2, 1, 3/2) produce exact results.
double cos_pi(double t) {
  if (t > 1.0) t = 2.0 - t;
  double sign = 1.0;
  if (t > 0.5) {
    t = 1.0 - t;
    sign = -1.0;
  }
  if (t <= 0.25) return sign * std::cos(std::numbers::pi * t);
  return sign * std::sin(std::numbers::pi * (0.5 - t));
}

// Load-bearing argument reduction.
//
// b^k grows past 2^53 after a dozen terms (13^41 ~ 5e45 for the default
// parameters), so forming b^k * pi * x in double precision gives meaningless
// phases. cos(b^k pi x) only depends on t_k = b^k x mod 2, and the iteration
// t_{k+1} = b t_k mod 2 can be carried out exactly: a finite double is
// x = m / 2^s with integer m, so
//
//   b^k x mod 2 = (m b^k mod 2^{s+1}) / 2^s.
//
// The residue is held in 64-bit limbs masked to s+1 bits and advanced by one
// multiplication by b per term. Only the final conversion of t_k to double
// rounds, so every phase is correct to half an ulp of a number in [0, 2).
class PhaseSequence {
 public:
  explicit PhaseSequence(double x, std::uint64_t b) : b_(b) {
    x = std::abs(x);
    if (x == 0.0) {
      constant_ = 0.0;
      return;
    }
    int exponent = 0;
    const double frac = std::frexp(x, &exponent);
    auto mantissa = static_cast<std::uint64_t>(std::ldexp(frac, 53));
    long shift = 53 - exponent;  // x = mantissa * 2^-shift
    while (shift > 0 && (mantissa & 1u) == 0) {
      mantissa >>= 1;
      --shift;
    }
    if (shift < 0) {
      constant_ = 0.0;  // x is an even integer
      return;
    }
    if (shift == 0) {
      constant_ = static_cast<double>(mantissa & 1u);  // odd b keeps parity
      return;
    }
    shift_ = shift;
    const std::size_t bits = static_cast<std::size_t>(shift) + 1;
    limbs_.assign((bits + 63) / 64, 0);
    top_mask_ = (bits % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (bits % 64)) - 1);
    limbs_[0] = mantissa;
    mask();
  }

  // t_k for the current k, then advance to k+1.
  double next() {
    if (limbs_.empty()) return constant_;
    const double t = value();
    multiply_by_b();
    return t;
  }

 private:
  void mask() { limbs_.back() &= top_mask_; }

  // limb * b + carry as a 128-bit quantity from 32-bit halves (b < 2^32).
  void multiply_by_b() {
    constexpr std::uint64_t kLow32 = 0xffffffffULL;
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      const std::uint64_t lo = (limb & kLow32) * b_;
      const std::uint64_t hi = (limb >> 32) * b_;
      std::uint64_t low = lo + (hi << 32);
      std::uint64_t high = (hi >> 32) + (low < lo ? 1 : 0);
      const std::uint64_t with_carry = low + carry;
      high += with_carry < low ? 1 : 0;
      limb = with_carry;
      carry = high;
    }
    mask();
  }

  double value() const {
    long double t = 0.0L;
    // The top two limbs carry all bits that survive rounding to double.
    const std::size_t n = limbs_.size();
    const std::size_t lo = n >= 3 ? n - 3 : 0;
    for (std::size_t i = n; i-- > lo;)
      t += std::ldexp(static_cast<long double>(limbs_[i]), static_cast<int>(64 * i) - static_cast<int>(shift_));
    return static_cast<double>(t);
  }

  std::uint64_t b_;
  std::vector<std::uint64_t> limbs_;
  std::uint64_t top_mask_ = 0;
  long shift_ = 0;
  double constant_ = 0.0;
};

}  // namespace

WeierstrassParams WeierstrassParams::make(double a, std::uint64_t b, double eps) {
  if (!(a > 0.0 && a < 1.0))
    throw Error(ErrorCode::InvalidParameter, "weierstrass: a must lie in (0, 1)");
  if (b < 3 || b % 2 == 0)
    throw Error(ErrorCode::InvalidParameter, "weierstrass: b must be an odd integer >= 3");
  if (b >= (std::uint64_t{1} << 32))
    throw Error(ErrorCode::InvalidParameter, "weierstrass: b must be below 2^32");
  if (!(a * static_cast<double>(b) > kWeierstrassProductBound))
    throw Error(ErrorCode::InvalidParameter,
                "weierstrass: parameters violate ab > 1 + 3*pi/2 (ab = " +
                    std::to_string(a * static_cast<double>(b)) + ", bound = " +
                    std::to_string(kWeierstrassProductBound) + ")");
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw Error(ErrorCode::InvalidParameter, "weierstrass: eps must be positive");

  constexpr int kMaxTerms = 10'000'000;
  int last = 0;
  while (std::pow(a, last + 1) / (1.0 - a) > eps) {
    if (++last > kMaxTerms)
      throw Error(ErrorCode::InvalidParameter, "weierstrass: eps too small for a");
  }
  return WeierstrassParams(a, b, eps, last);
}

double eval_W(const WeierstrassParams& p, double x) {
  if (!std::isfinite(x)) return std::nan("");
  PhaseSequence phase(x, p.b());
  double sum = 0.0;
  double weight = 1.0;
  for (int k = 0; k <= p.last_term(); ++k) {
    sum += weight * cos_pi(phase.next());
    weight *= p.a();
  }
  return sum;
}

double eval_phi_counterexample(const WeierstrassParams& p, double k, double q) {
  const double peak = p.peak();
  const double factor = (eval_W(p, q - 1.0) + 2.0 * peak) / (3.0 * peak);
  return factor * ((q - 1.0) / k);
}

ProbeResult difference_quotient_probe(const std::function<double(double)>& f, double x,
                                      double base, int depth) {
  if (depth < 2) throw Error(ErrorCode::InvalidParameter, "probe depth must be >= 2");
  if (!(base > 1.0)) throw Error(ErrorCode::InvalidParameter, "probe base must exceed 1");
  ProbeResult result;
  const double fx = f(x);
  for (int m = 1; m <= depth; ++m) {
    const double h = std::pow(base, -m);
    const double xh = x + h;
    result.scales.push_back({m, h, (f(xh) - fx) / (xh - x)});
  }
  const auto tail = result.scales.end() - depth / 2;
  const auto [lo, hi] = std::minmax_element(
      tail, result.scales.end(),
      [](const ProbeScale& l, const ProbeScale& r) { return l.quotient < r.quotient; });
  result.spread = hi->quotient - lo->quotient;
  return result;
}

ProbeResult nondifferentiability_probe(const WeierstrassParams& p, double x, int depth) {
  return difference_quotient_probe([&p](double t) { return eval_W(p, t); }, x,
                                   static_cast<double>(p.b()), depth);
}

}  // namespace nonext
