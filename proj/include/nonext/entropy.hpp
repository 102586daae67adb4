#pragma once

#include <string>

#include "nonext/deformation.hpp"
#include "nonext/simplex.hpp"

namespace nonext {

/// Below this |q - 1| every entropy evaluates to its q = 1 limit
/// -k sum p ln p, and information content to -k ln p.
inline constexpr double kShannonCrossover = 1e-9;

/// Values in [-kNegativeTolerance, 0) are rounding and clamp to 0.
inline constexpr double kNegativeTolerance = 1e-12;

struct EntropyValue {
  double value;
  double q;
  std::string family_id;

  /// Clamps tiny negatives; throws NegativeEntropy below -kNegativeTolerance.
  static EntropyValue checked(double raw, double q, std::string family_id);
};

/// -k sum p ln p with 0 ln 0 = 0.
double shannon_entropy_value(const Distribution& d, double k);
EntropyValue shannon_entropy(const Distribution& d, double k);

// The *_value functions return the raw (unclamped) number and are what the
// axiom checks use, since invalid families legitimately produce negative
// values there. The EntropyValue overloads enforce the nonnegative codomain.

/// (1 - sum p^q) / phi(q).
double suyari_entropy_value(const Distribution& d, const EntropyFamily& f, double q);
EntropyValue suyari_entropy(const Distribution& d, const EntropyFamily& f, double q);

/// (1 - sum p^{1 - alpha(q)}) / phi(q). For alpha = 1 - q this takes the same
/// path with the same exponent as suyari_entropy.
double generalized_entropy_value(const Distribution& d, const EntropyFamily& f, double q);
EntropyValue generalized_entropy(const Distribution& d, const EntropyFamily& f, double q);

/// (p^{alpha(q)} - 1) / phi(q) for p in (0, 1]; -k ln p at q = 1.
double information_content(const EntropyFamily& f, double q, double p);

/// i1 + i2 + phi(q) i1 i2. phi is taken as 0 inside the crossover band so the
/// composition matches information_content there.
double pseudoadditive_compose(const EntropyFamily& f, double q, double i1, double i2);

/// sum p^{1 - alpha(q)} I_q(p), the trace-form expectation of I_q.
double trace_expectation_value(const Distribution& d, const EntropyFamily& f, double q);
EntropyValue trace_expectation(const Distribution& d, const EntropyFamily& f, double q);

/// Exponent offset e - 1 of the entropy weight p^e: q - 1 for the Suyari
/// class and -alpha(q) for the generalized class. The two agree bit for bit
/// when alpha(q) = 1 - q because IEEE rounding is symmetric under negation.
inline double suyari_shift(double q) { return q - 1.0; }
double generalized_shift(const EntropyFamily& f, double q);

/// p^{1 + shift}, with 0^e = 0 for e > 0. Throws ZeroWithNonpositiveExponent
/// for p = 0 and e <= 0.
double entropy_weight(double p, double shift);

}  // namespace nonext
