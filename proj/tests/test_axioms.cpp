#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "nonext/axioms.hpp"
#include "nonext/entropy.hpp"
#include "nonext/io.hpp"

using namespace nonext;

namespace {

Distribution dist(std::vector<double> v) { return make_distribution(v, NormalizeMode::strict); }

EntropyFamily constant_alpha() {
  return EntropyFamily::make(DeformationFunction::tsallis_phi(), DeformationFunction::constant(0.5), 1.0,
                             FamilyValidation::permissive);
}

EntropyFamily weierstrass() { return weierstrass_family(WeierstrassParams::make(0.5, 13), 1.0); }

std::vector<double> grid50() {
  std::vector<double> qs;
  for (int i = 0; i < 50; ++i) qs.push_back(0.1 + 3.9 * i / 49.0);
  return qs;
}

const std::vector<double> kQs{0.5, 0.9, 1.0, 1.1, 2.0, 3.0};

}  // namespace

TEST_CASE("limit_residual") {
  CHECK(limit_residual({0.1, 0.01, 0.001}) == 0.001);
  CHECK(limit_residual({0.1, 0.01, 0.02, 0.005}) == 0.02);
  CHECK(limit_residual({0.0, 0.0}) == 0.0);
}

TEST_CASE("maximality") {
  const auto t = tsallis_family(1.0);
  CHECK(maximality_residual(t, 2.0, Distribution::uniform(2)) == 0.0);
  CHECK(maximality_residual(t, 2.0, dist({0.9, 0.1})) == doctest::Approx(0.18 - 0.5).epsilon(1e-14));
  CHECK(check_maximality(t, kQs, {2, 3, 5}, 100, 3).verdict == Verdict::pass);

  const auto r = check_maximality(constant_alpha(), {2.0}, {2}, 100, 3);
  CHECK(r.verdict == Verdict::fail);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses[0].q == 2.0);
  CHECK(r.witnesses[0].residual > 0.0);
  CHECK(r.witnesses.size() <= 3);
}

TEST_CASE("expandability") {
  const auto t = tsallis_family(1.0);
  auto r = check_expandability(t, {dist({0.5, 0.5}), dist({1.0})}, {2.0});
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.max_residual == 0.0);
  bool have_info = false;
  for (const auto& [name, value] : r.metrics)
    if (name.find("2") != std::string::npos) {
      have_info = true;
      CHECK(value == 0.0);
    }
  CHECK(have_info);
}

TEST_CASE("additivity residuals") {
  const auto t = tsallis_family(1.0);
  const auto r = Refinement::make({{0.5}, {0.25, 0.25}});
  CHECK(additivity_residual(t, 2.0, r, AdditivityMode::suyari) == 0.0);
  CHECK(additivity_residual(t, 2.0, r, AdditivityMode::generalized) == 0.0);
  CHECK(suyari_entropy_value(r.flatten(), t, 2.0) == 0.625);

  const auto single = Refinement::make({{0.2}, {0.3}, {0.5}});
  for (double q : kQs) CHECK(additivity_residual(constant_alpha(), q, single, AdditivityMode::generalized) == 0.0);

  for (const auto& ref : sample_refinement(3, 4, 50, 17)) CHECK(additivity_residual(t, 1.0, ref, AdditivityMode::suyari) <= 1e-12);

  const auto zero_row = Refinement::make({{0.0, 0.0}, {0.6, 0.4}});
  CHECK(additivity_residual(t, 2.0, zero_row, AdditivityMode::suyari) <= 1e-15);
}

TEST_CASE("additivity modes agree when alpha = 1 - q") {
  const auto refs = sample_refinement(3, 4, 100, 21);
  for (double k : {1.0, 2.0}) {
    const auto t = tsallis_family(k);
    const auto a = check_generalized_additivity(t, kQs, refs, AdditivityMode::suyari);
    const auto b = check_generalized_additivity(t, kQs, refs, AdditivityMode::generalized);
    CHECK(a.verdict == Verdict::pass);
    CHECK(a.max_residual == b.max_residual);
    CHECK(a.name == "shannon_additivity");
    CHECK(b.name == "generalized_additivity");
  }
}

TEST_CASE("pseudoadditivity residuals") {
  const auto t = tsallis_family(1.0);
  for (double q : kQs) CHECK(pseudoadditivity_residual(t, q, 1.0, 0.3) == 0.0);
  CHECK(pseudoadditivity_residual(t, 2.0, 0.5, 0.5) == 0.0);
  CHECK(pseudoadditivity_residual(t, 1.0, 0.3, 0.7) <= 1e-12);
  CHECK(check_pseudoadditivity(t, kQs, 500, 8).verdict == Verdict::pass);
}

TEST_CASE("shannon limit") {
  const auto t = tsallis_family(1.0);
  const double s1 = shannon_entropy_value(dist({0.5, 0.5}), 1.0);
  CHECK(std::abs(generalized_entropy_value(dist({0.5, 0.5}), t, 1.0001) - s1) <= 1e-4);
  CHECK(check_shannon_limit(t, {dist({0.5, 0.5})}).verdict == Verdict::pass);
  const auto degenerate = check_shannon_limit(t, {dist({1.0})});
  CHECK(degenerate.verdict == Verdict::pass);
  CHECK(degenerate.max_residual == 0.0);
  CHECK(check_shannon_limit(constant_alpha(), {dist({0.5, 0.5})}).verdict == Verdict::fail);
}

TEST_CASE("shannon limit gaps shrink for the weierstrass family" * doctest::should_fail()) {
  CHECK(check_shannon_limit(weierstrass(), {dist({0.5, 0.5})}).verdict == Verdict::pass);
}

TEST_CASE("sign condition") {
  CHECK(check_sign_condition(tsallis_family(1.0)).verdict == Verdict::pass);
  CHECK(check_sign_condition(weierstrass()).verdict == Verdict::pass);
  const auto neg = EntropyFamily::make(DeformationFunction::negated_phi(), DeformationFunction::one_minus_q_alpha(), 1.0);
  CHECK(check_sign_condition(neg).verdict == Verdict::fail);
}

TEST_CASE("alpha / phi limit") {
  const auto r1 = check_alpha_phi_limit(tsallis_family(1.0));
  CHECK(r1.verdict == Verdict::pass);
  CHECK(r1.max_residual == 0.0);
  const auto r2 = check_alpha_phi_limit(tsallis_family(2.0));
  CHECK(r2.verdict == Verdict::pass);
  CHECK(r2.max_residual == 0.0);
}

TEST_CASE("alpha / phi limit for the weierstrass family" * doctest::should_fail()) {
  CHECK(check_alpha_phi_limit(weierstrass()).verdict == Verdict::pass);
}

TEST_CASE("phi derivative at 1") {
  const auto lin = check_phi_derivative_at_1([](double q) { return q - 1.0; }, 1.0);
  CHECK(lin.verdict == Verdict::pass);
  CHECK(lin.max_residual == 0.0);
  const auto sq = check_phi_derivative_at_1([](double q) { return (q - 1.0) * (q - 1.0); }, 1.0);
  CHECK(sq.verdict == Verdict::fail);
  CHECK(sq.max_residual == doctest::Approx(1.0).epsilon(1e-6));
  const auto t2 = tsallis_family(2.0);
  CHECK(check_phi_derivative_at_1([&](double q) { return t2.phi(q); }, 2.0).verdict == Verdict::pass);
}

TEST_CASE("phi derivative at 1 for the weierstrass family" * doctest::should_fail()) {
  const auto w = weierstrass();
  CHECK(check_phi_derivative_at_1([&](double q) { return w.phi(q); }, 1.0).verdict == Verdict::pass);
}

TEST_CASE("constraint region") {
  const auto t = tsallis_family(1.0);
  CHECK(check_constraint_region(t, {2.0}).verdict == Verdict::pass);
  CHECK(check_constraint_region(t, {0.5}).verdict == Verdict::pass);
  const auto bad = check_constraint_region(constant_alpha(), {2.0});
  CHECK(bad.verdict == Verdict::fail);
  CHECK(bad.max_residual == 0.5);
}

TEST_CASE("convexity of I") {
  const auto t = tsallis_family(1.0);
  CHECK(check_convexity_of_I(t, {2.0}).verdict == Verdict::pass);
  CHECK(check_convexity_of_I(t, {1.0}).verdict == Verdict::pass);
  CHECK(check_convexity_of_I(constant_alpha(), {2.0}).verdict == Verdict::fail);
}

TEST_CASE("constraint region and convexity agree") {
  const auto grid = grid50();
  const std::vector<EntropyFamily> fams{tsallis_family(1.0), tsallis_family(2.0), power_family(2.0, 1.0),
                                        constant_alpha(), weierstrass()};
  for (const auto& f : fams) {
    CAPTURE(f.id());
    CHECK(constraint_region_by_q(f, grid) == convexity_by_q(f, grid));
    CHECK(check_constraint_region(f, grid).verdict == check_convexity_of_I(f, grid).verdict);
  }
}

TEST_CASE("derivative limit probe") {
  const auto lin = derivative_limit_probe([](double q) { return q - 1.0; }, 1.0);
  CHECK(lin.verdict == Verdict::pass);
  const auto kink = derivative_limit_probe([](double q) { return (q - 1.0) * std::abs(q - 1.0); }, 1.0);
  CHECK(kink.verdict == Verdict::pass);
  const auto w = weierstrass();
  const auto off = derivative_limit_probe([&](double q) { return w.phi(q); }, 1.3);
  CHECK(off.verdict == Verdict::not_applicable);
  CHECK_FALSE(off.diagnostic.empty());
  const auto jump = derivative_limit_probe([](double q) { return q < 1.0 ? q : 2.0 * q; }, 1.0);
  CHECK(jump.verdict != Verdict::pass);
}

TEST_CASE("continuity probe") {
  const std::vector<Distribution> ds{dist({0.5, 0.5}), dist({0.2, 0.3, 0.5})};
  CHECK(check_continuity(tsallis_family(1.0), kQs, ds).verdict == Verdict::pass);
  CHECK(check_continuity(weierstrass(), kQs, ds).verdict == Verdict::pass);
  CHECK(check_continuity(constant_alpha(), kQs, ds).verdict == Verdict::fail);
}

TEST_CASE("full report classifications") {
  CheckConfig c;
  c.samples = 60;
  c.refinements = 60;

  const auto t = run_full_report(tsallis_family(1.0), c);
  for (const auto& r : t.checks) {
    CAPTURE(r.name);
    CHECK(r.verdict == Verdict::pass);
  }
  CHECK(t.classification == "valid");
  CHECK(t.checks.size() == 13);

  const auto bad = run_full_report(constant_alpha(), c);
  CHECK(bad.find("constraint_region")->verdict == Verdict::fail);
  CHECK(bad.find("convexity_of_I")->verdict == Verdict::fail);
  CHECK(bad.find("maximality")->verdict == Verdict::fail);
  CHECK_FALSE(bad.find("maximality")->witnesses.empty());
  CHECK(bad.classification == "invalid");

  const auto pw = run_full_report(power_family(2.0, 1.0), c);
  CHECK(pw.find("phi_derivative_at_1")->verdict == Verdict::not_applicable);
  CHECK(pw.classification == "valid");

  const auto w = run_full_report(weierstrass(), c);
  CHECK(w.find("sign_condition")->verdict == Verdict::pass);
  CHECK(w.find("constraint_region")->verdict == Verdict::pass);
  CHECK(w.find("derivative_limit_probe")->verdict == Verdict::not_applicable);
}

TEST_CASE("weierstrass report passes every check but the probe" * doctest::should_fail()) {
  CheckConfig c;
  c.samples = 60;
  c.refinements = 60;
  const auto w = run_full_report(weierstrass(), c);
  for (const auto& r : w.checks) {
    if (r.name == "derivative_limit_probe") continue;
    CAPTURE(r.name);
    CHECK(r.verdict == Verdict::pass);
  }
  CHECK(w.classification == "valid under condition (iii')");
}

TEST_CASE("reports are deterministic") {
  CheckConfig c;
  c.samples = 40;
  c.refinements = 40;
  c.seed = 1234;
  const auto a = io::dump(io::report_to_json(run_full_report(tsallis_family(2.0), c)));
  const auto b = io::dump(io::report_to_json(run_full_report(tsallis_family(2.0), c)));
  CHECK(a == b);
  c.seed = 1235;
  CHECK(a != io::dump(io::report_to_json(run_full_report(tsallis_family(2.0), c))));
}
