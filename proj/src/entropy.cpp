#include "nonext/entropy.hpp"

#include <cmath>

#include "nonext/error.hpp"
#include "nonext/format.hpp"

namespace nonext {
namespace {

void require_positive_q(double q) {
  if (!(q > 0.0) || !std::isfinite(q))
    throw Error(ErrorCode::DomainError, "q must be a finite positive number");
}

bool near_one(double q) { return std::abs(q - 1.0) < kShannonCrossover; }

double phi_nonzero(const EntropyFamily& f, double q) {
  const double phi = f.phi(q);
  if (phi == 0.0)
    throw Error(ErrorCode::PhiVanishes, "phi(" + format_shortest(q) + ") = 0 at q != 1");
  return phi;
}

void check_zero_entry(double shift) {
  if (!(1.0 + shift > 0.0))
    throw Error(ErrorCode::ZeroWithNonpositiveExponent,
                "zero probability with entropy exponent " + format_shortest(1.0 + shift) + " <= 0");
}

// 1 - sum p^{1+shift} written as -sum p expm1(shift ln p). Equal for a
// normalized distribution, and free of cancellation as shift -> 0.
double deformed_numerator(const Distribution& d, double shift) {
  double sum = 0.0;
  for (double p : d.probs()) {
    if (p == 0.0) {
      check_zero_entry(shift);
      continue;
    }
    sum -= p * std::expm1(shift * std::log(p));
  }
  return sum;
}

double deformed_entropy(const Distribution& d, const EntropyFamily& f, double q, double shift) {
  if (near_one(q)) return shannon_entropy_value(d, f.k());
  const double phi = phi_nonzero(f, q);
  return deformed_numerator(d, shift) / phi;
}

double alpha_nonzero(const EntropyFamily& f, double q) {
  const double alpha = f.alpha(q);
  if (alpha == 0.0)
    throw Error(ErrorCode::FamilyInvalid,
                "alpha(" + format_shortest(q) + ") = 0 at q != 1; family is degenerate");
  return alpha;
}

}  // namespace

EntropyValue EntropyValue::checked(double raw, double q, std::string family_id) {
  if (std::isnan(raw)) throw Error(ErrorCode::DomainError, "entropy evaluated to NaN");
  if (raw < -kNegativeTolerance)
    throw Error(ErrorCode::NegativeEntropy,
                "entropy " + format_shortest(raw) + " is negative; family violates its constraints");
  return EntropyValue{raw < 0.0 ? 0.0 : raw, q, std::move(family_id)};
}

double shannon_entropy_value(const Distribution& d, double k) {
  double sum = 0.0;
  for (double p : d.probs())
    if (p > 0.0) sum -= p * std::log(p);
  return k * sum;
}

EntropyValue shannon_entropy(const Distribution& d, double k) {
  if (!(k > 0.0)) throw Error(ErrorCode::NonPositiveK, "k must be positive");
  return EntropyValue::checked(shannon_entropy_value(d, k), 1.0, "shannon;k=" + format_shortest(k));
}

double suyari_entropy_value(const Distribution& d, const EntropyFamily& f, double q) {
  require_positive_q(q);
  return deformed_entropy(d, f, q, suyari_shift(q));
}

EntropyValue suyari_entropy(const Distribution& d, const EntropyFamily& f, double q) {
  return EntropyValue::checked(suyari_entropy_value(d, f, q), q, f.id());
}

double generalized_shift(const EntropyFamily& f, double q) { return -f.alpha(q); }

double generalized_entropy_value(const Distribution& d, const EntropyFamily& f, double q) {
  require_positive_q(q);
  if (near_one(q)) return shannon_entropy_value(d, f.k());
  return deformed_entropy(d, f, q, -alpha_nonzero(f, q));
}

EntropyValue generalized_entropy(const Distribution& d, const EntropyFamily& f, double q) {
  return EntropyValue::checked(generalized_entropy_value(d, f, q), q, f.id());
}

double information_content(const EntropyFamily& f, double q, double p) {
  require_positive_q(q);
  if (!(p > 0.0 && p <= 1.0))
    throw Error(ErrorCode::DomainError, "information content needs p in (0, 1], got " + format_shortest(p));
  if (near_one(q)) return -f.k() * std::log(p);
  const double alpha = alpha_nonzero(f, q);
  return std::expm1(alpha * std::log(p)) / phi_nonzero(f, q);
}

double pseudoadditive_compose(const EntropyFamily& f, double q, double i1, double i2) {
  require_positive_q(q);
  const double phi = near_one(q) ? 0.0 : f.phi(q);
  return i1 + i2 + phi * i1 * i2;
}

double entropy_weight(double p, double shift) {
  if (p == 0.0) {
    check_zero_entry(shift);
    return 0.0;
  }
  return std::pow(p, 1.0 + shift);
}

double trace_expectation_value(const Distribution& d, const EntropyFamily& f, double q) {
  require_positive_q(q);
  const double shift = near_one(q) ? 0.0 : -alpha_nonzero(f, q);
  double sum = 0.0;
  for (double p : d.probs()) {
    const double w = entropy_weight(p, shift);
    if (w == 0.0) continue;
    sum += w * information_content(f, q, p);
  }
  return sum;
}

EntropyValue trace_expectation(const Distribution& d, const EntropyFamily& f, double q) {
  return EntropyValue::checked(trace_expectation_value(d, f, q), q, f.id());
}

}  // namespace nonext
