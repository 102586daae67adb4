#include "nonext/deformation.hpp"

#include <algorithm>
#include <cmath>

#include "nonext/error.hpp"
#include "nonext/format.hpp"

namespace nonext {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double power_term(double q, double gamma) {
  const double d = std::abs(q - 1.0);
  if (gamma == 1.0) return 1.0;
  return std::pow(d, gamma - 1.0);
}

double interpolate(const std::vector<std::pair<double, double>>& pts, double q) {
  if (q < pts.front().first || q > pts.back().first)
    throw Error(ErrorCode::OutOfTableRange,
                "q = " + format_shortest(q) + " outside table range [" +
                    format_shortest(pts.front().first) + ", " + format_shortest(pts.back().first) + "]");
  auto hi = std::lower_bound(pts.begin(), pts.end(), q,
                             [](const auto& p, double v) { return p.first < v; });
  if (hi->first == q) return hi->second;
  auto lo = hi - 1;
  const double t = (q - lo->first) / (hi->first - lo->first);
  return lo->second + t * (hi->second - lo->second);
}

std::string default_name(const DeformationFunction::Kind& kind) {
  return std::visit(overloaded{
                        [](const deform::QMinusOne&) { return std::string("tsallis_phi"); },
                        [](const deform::OneMinusQ&) { return std::string("negated_phi"); },
                        [](const deform::PowerPhi&) { return std::string("power_phi"); },
                        [](const deform::PowerAlpha&) { return std::string("power_alpha"); },
                        [](const deform::Constant&) { return std::string("constant"); },
                        [](const deform::WeierstrassPhi&) { return std::string("weierstrass_phi"); },
                        [](const deform::Tabulated&) { return std::string("tabulated"); },
                    },
                    kind);
}

}  // namespace

DeformationFunction::DeformationFunction(Kind kind, std::string_view name)
    : kind_(std::move(kind)), name_(name.empty() ? default_name(kind_) : std::string(name)) {}

DeformationFunction DeformationFunction::power_phi(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw Error(ErrorCode::InvalidParameter, "power_phi: gamma must be positive");
  return DeformationFunction(deform::PowerPhi{gamma});
}

DeformationFunction DeformationFunction::power_alpha(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw Error(ErrorCode::InvalidParameter, "power_alpha: gamma must be positive");
  return DeformationFunction(deform::PowerAlpha{gamma});
}

DeformationFunction DeformationFunction::constant(double value) {
  if (!std::isfinite(value))
    throw Error(ErrorCode::InvalidParameter, "constant: value must be finite");
  return DeformationFunction(deform::Constant{value});
}

DeformationFunction DeformationFunction::tabulated(std::vector<std::pair<double, double>> points) {
  if (points.size() < 2)
    throw Error(ErrorCode::InvalidTable, "tabulated: need at least 2 points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].first) || !std::isfinite(points[i].second))
      throw Error(ErrorCode::InvalidTable, "tabulated: point " + std::to_string(i) + " is not finite");
    if (i > 0 && !(points[i].first > points[i - 1].first))
      throw Error(ErrorCode::InvalidTable, "tabulated: q grid must be strictly increasing");
  }
  return DeformationFunction(deform::Tabulated{std::move(points)});
}

double DeformationFunction::operator()(double q) const {
  if (!(q > 0.0) || !std::isfinite(q))
    throw Error(ErrorCode::DomainError, "deformation functions require finite q > 0");
  return std::visit(
      overloaded{
          [q](const deform::QMinusOne&) { return q - 1.0; },
          [q](const deform::OneMinusQ&) { return 1.0 - q; },
          [q](const deform::PowerPhi& f) { return (q - 1.0) * power_term(q, f.gamma); },
          [q](const deform::PowerAlpha& f) { return (1.0 - q) * power_term(q, f.gamma); },
          [](const deform::Constant& f) { return f.value; },
          [q](const deform::WeierstrassPhi& f) { return eval_phi_counterexample(f.params, 1.0, q); },
          [q](const deform::Tabulated& f) { return interpolate(f.points, q); },
      },
      kind_);
}

std::string DeformationFunction::describe() const {
  return std::visit(
      overloaded{
          [this](const deform::QMinusOne&) { return name_; },
          [this](const deform::OneMinusQ&) { return name_; },
          [this](const deform::PowerPhi& f) { return name_ + "(gamma=" + format_shortest(f.gamma) + ")"; },
          [this](const deform::PowerAlpha& f) { return name_ + "(gamma=" + format_shortest(f.gamma) + ")"; },
          [this](const deform::Constant& f) { return name_ + "(value=" + format_shortest(f.value) + ")"; },
          [this](const deform::WeierstrassPhi& f) {
            return name_ + "(a=" + format_shortest(f.params.a()) + ",b=" + std::to_string(f.params.b()) +
                   ",eps=" + format_shortest(f.params.eps()) + ")";
          },
          [this](const deform::Tabulated& f) {
            return name_ + "(points=" + std::to_string(f.points.size()) + ")";
          },
      },
      kind_);
}

EntropyFamily::EntropyFamily(DeformationFunction phi, DeformationFunction alpha, double k,
                             FamilyValidation validation)
    : phi_(std::move(phi)), alpha_(std::move(alpha)), k_(k), validation_(validation) {
  id_ = "phi=" + phi_.describe() + ";alpha=" + alpha_.describe() + ";k=" + format_shortest(k_);
}

EntropyFamily EntropyFamily::make(DeformationFunction phi, DeformationFunction alpha, double k,
                                  FamilyValidation validation) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw Error(ErrorCode::NonPositiveK, "k must be a positive finite number");
  EntropyFamily family(std::move(phi), std::move(alpha), k, validation);
  if (validation == FamilyValidation::strict) {
    // Every supported kind is defined at q = 1, so evaluate directly.
    constexpr double kTol = 1e-12;
    const double phi1 = family.phi(1.0);
    const double alpha1 = family.alpha(1.0);
    if (std::abs(phi1) > kTol)
      throw Error(ErrorCode::FamilyInvalid, "phi(1) = " + format_shortest(phi1) + ", expected 0");
    if (std::abs(alpha1) > kTol)
      throw Error(ErrorCode::FamilyInvalid, "alpha(1) = " + format_shortest(alpha1) + ", expected 0");
  }
  return family;
}

EntropyFamily tsallis_family(double k) {
  return EntropyFamily::make(DeformationFunction::tsallis_phi(),
                             DeformationFunction::one_minus_q_alpha(), k);
}

EntropyFamily power_family(double gamma, double k) {
  return EntropyFamily::make(DeformationFunction::power_phi(gamma),
                             DeformationFunction::power_alpha(gamma), k);
}

EntropyFamily weierstrass_family(const WeierstrassParams& params, double k) {
  return EntropyFamily::make(DeformationFunction::weierstrass_phi(params),
                             DeformationFunction::one_minus_q_alpha(), k);
}

}  // namespace nonext
