#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "nonext/weierstrass.hpp"

namespace nonext {

namespace deform {

struct QMinusOne {};   // q - 1
struct OneMinusQ {};   // 1 - q
/// (q - 1) |q - 1|^{gamma - 1}
struct PowerPhi {
  double gamma;
};
/// (1 - q) |q - 1|^{gamma - 1}
struct PowerAlpha {
  double gamma;
};
/// Constant value; only useful for building deliberately invalid families.
struct Constant {
  double value;
};
/// (q - 1) (W(q-1) + 2 W(0)) / (3 W(0)). The 1/k factor is applied by the family.
struct WeierstrassPhi {
  WeierstrassParams params;
};
/// Linear interpolation over a strictly increasing q grid; no extrapolation.
struct Tabulated {
  std::vector<std::pair<double, double>> points;
};

}  // namespace deform

/// One deformation function of q > 0 drawn from a closed set of kinds.
/// Any kind may fill either the phi or the alpha slot of a family; the kind
/// names only record the conventional role.
class DeformationFunction {
 public:
  using Kind = std::variant<deform::QMinusOne, deform::OneMinusQ, deform::PowerPhi,
                            deform::PowerAlpha, deform::Constant, deform::WeierstrassPhi,
                            deform::Tabulated>;

  static DeformationFunction tsallis_phi() { return DeformationFunction(deform::QMinusOne{}); }
  static DeformationFunction negated_phi() { return DeformationFunction(deform::OneMinusQ{}); }
  static DeformationFunction one_minus_q_alpha() { return DeformationFunction(deform::OneMinusQ{}, "one_minus_q_alpha"); }
  static DeformationFunction power_phi(double gamma);
  static DeformationFunction power_alpha(double gamma);
  static DeformationFunction constant(double value);
  static DeformationFunction weierstrass_phi(const WeierstrassParams& params) {
    return DeformationFunction(deform::WeierstrassPhi{params});
  }
  static DeformationFunction tabulated(std::vector<std::pair<double, double>> points);

  /// Throws DomainError for q <= 0 and OutOfTableRange outside a table's grid.
  double operator()(double q) const;

  /// Schema kind name ("tsallis_phi", "power_alpha", ...).
  std::string_view kind_name() const noexcept { return name_; }
  const Kind& kind() const noexcept { return kind_; }

  /// Kind plus parameters, e.g. "power_alpha(gamma=2)".
  std::string describe() const;

 private:
  explicit DeformationFunction(Kind kind, std::string_view name = {});

  Kind kind_;
  std::string name_;
};

enum class FamilyValidation {
  /// Require phi(1) = 0 and alpha(1) = 0 (within 1e-12).
  strict,
  /// Only structural checks; used to construct counterexample families that
  /// the axiom checks are expected to reject.
  permissive,
};

/// The pair (phi, alpha) and unit constant k. phi(q) evaluates the stored
/// function divided by k, so tsallis_phi with k gives (q - 1)/k.
class EntropyFamily {
 public:
  static EntropyFamily make(DeformationFunction phi, DeformationFunction alpha, double k,
                            FamilyValidation validation = FamilyValidation::strict);

  double phi(double q) const { return phi_(q) / k_; }
  double alpha(double q) const { return alpha_(q); }
  double k() const noexcept { return k_; }

  const DeformationFunction& phi_function() const noexcept { return phi_; }
  const DeformationFunction& alpha_function() const noexcept { return alpha_; }
  FamilyValidation validation() const noexcept { return validation_; }

  /// Stable textual identifier, e.g. "phi=tsallis_phi;alpha=one_minus_q_alpha;k=1".
  const std::string& id() const noexcept { return id_; }

 private:
  EntropyFamily(DeformationFunction phi, DeformationFunction alpha, double k,
                FamilyValidation validation);

  DeformationFunction phi_;
  DeformationFunction alpha_;
  double k_;
  FamilyValidation validation_;
  std::string id_;
};

inline double eval_phi(const EntropyFamily& f, double q) { return f.phi(q); }
inline double eval_alpha(const EntropyFamily& f, double q) { return f.alpha(q); }

/// phi(q) = (q - 1)/k, alpha(q) = 1 - q. Throws NonPositiveK for k <= 0.
EntropyFamily tsallis_family(double k);

/// phi(q) = (q - 1)|q - 1|^{gamma-1}/k, alpha(q) = (1 - q)|q - 1|^{gamma-1}.
EntropyFamily power_family(double gamma, double k);

/// Weierstrass phi with alpha(q) = 1 - q.
EntropyFamily weierstrass_family(const WeierstrassParams& params, double k);

}  // namespace nonext
