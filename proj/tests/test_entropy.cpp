#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>
#include <vector>

#include "nonext/entropy.hpp"
#include "nonext/error.hpp"

using namespace nonext;

namespace {

Distribution dist(std::vector<double> v) { return make_distribution(v, NormalizeMode::strict); }

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

const std::vector<double> kQs{0.5, 0.9, 1.0, 1.1, 2.0, 3.0};

std::vector<Distribution> samples() {
  std::vector<Distribution> out;
  std::uint64_t seed = 11;
  for (std::size_t n : {2, 3, 5}) {
    auto part = sample_simplex(n, 100, seed++);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

EntropyFamily constant_alpha() {
  return EntropyFamily::make(DeformationFunction::tsallis_phi(), DeformationFunction::constant(0.5), 1.0,
                             FamilyValidation::permissive);
}

}  // namespace

TEST_CASE("shannon_entropy") {
  CHECK(shannon_entropy(dist({1.0}), 1.0).value == 0.0);
  CHECK(shannon_entropy(dist({0.5, 0.5}), 1.0).value == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
  CHECK(shannon_entropy(dist({0.25, 0.25, 0.25, 0.25}), 1.0).value ==
        doctest::Approx(2 * std::numbers::ln2).epsilon(1e-15));
  CHECK(shannon_entropy(dist({0.5, 0.5, 0.0}), 2.0).value == doctest::Approx(2 * std::numbers::ln2).epsilon(1e-15));
}

TEST_CASE("suyari_entropy") {
  const auto t = tsallis_family(1.0);
  CHECK(std::abs(suyari_entropy(dist({0.5, 0.5}), t, 2.0).value - 0.5) <= 1e-15);
  CHECK(std::abs(suyari_entropy(dist({0.5, 0.25, 0.25}), t, 2.0).value - 0.625) <= 1e-15);
  for (double q : kQs) CHECK(suyari_entropy(dist({1.0}), t, q).value == 0.0);
  CHECK(suyari_entropy(dist({0.5, 0.5}), t, 2.0).family_id == t.id());
}

TEST_CASE("generalized_entropy") {
  const auto t = tsallis_family(1.0);
  CHECK(std::abs(generalized_entropy(dist({0.5, 0.5}), t, 2.0).value - 0.5) <= 1e-15);
  const double want = (1.0 - std::sqrt(2.0)) / -0.5;
  CHECK(std::abs(generalized_entropy(dist({0.5, 0.5}), t, 0.5).value - want) <= 1e-15);
  const auto p = power_family(2.0, 1.0);
  for (double q : kQs) {
    CHECK(generalized_entropy(dist({1.0}), t, q).value == 0.0);
    CHECK(generalized_entropy(dist({0.0, 1.0}), p, q).value == 0.0);
  }
}

TEST_CASE("generalized_entropy errors") {
  const auto zero_alpha = EntropyFamily::make(DeformationFunction::tsallis_phi(), DeformationFunction::constant(0.0),
                                              1.0, FamilyValidation::permissive);
  CHECK_THROWS_AS(generalized_entropy(dist({0.5, 0.5}), zero_alpha, 2.0), Error);
  // alpha = 0.5 at q = 2: (1 - sum sqrt(p)) / 1 < 0.
  CHECK(generalized_entropy_value(dist({0.9, 0.1}), constant_alpha(), 2.0) < -0.2);
  try {
    generalized_entropy(dist({0.9, 0.1}), constant_alpha(), 2.0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeEntropy);
  }
  // alpha(q) = 1 - q >= 1 gives exponent <= 0 on a zero entry.
  try {
    generalized_entropy_value(dist({0.0, 1.0}), EntropyFamily::make(DeformationFunction::tsallis_phi(),
                                                                    DeformationFunction::constant(1.5), 1.0,
                                                                    FamilyValidation::permissive),
                              2.0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroWithNonpositiveExponent);
  }
}

TEST_CASE("clamp of tiny negatives") {
  CHECK(EntropyValue::checked(-1e-13, 2.0, "x").value == 0.0);
  CHECK(EntropyValue::checked(0.25, 2.0, "x").value == 0.25);
  CHECK_THROWS_AS(EntropyValue::checked(-1e-9, 2.0, "x"), Error);
  CHECK_THROWS_AS(EntropyValue::checked(NAN, 2.0, "x"), Error);
}

TEST_CASE("information_content") {
  const auto t = tsallis_family(1.0);
  for (double q : kQs) CHECK(information_content(t, q, 1.0) == 0.0);
  CHECK(information_content(t, 2.0, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(information_content(t, 1.0, std::exp(-1.0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(information_content(tsallis_family(3.0), 1.0, std::exp(-1.0)) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK_THROWS_AS(information_content(t, 2.0, 0.0), Error);
  CHECK_THROWS_AS(information_content(t, 2.0, 1.5), Error);
}

TEST_CASE("pseudoadditive_compose") {
  const auto t = tsallis_family(1.0);
  CHECK(pseudoadditive_compose(t, 2.0, 0.0, 0.7) == 0.7);
  CHECK(pseudoadditive_compose(t, 2.0, 1.0, 1.0) == 3.0);
  CHECK(information_content(t, 2.0, 0.25) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(pseudoadditive_compose(t, 1.0, 2.0, 3.0) == 5.0);
}

TEST_CASE("trace_expectation") {
  const auto t = tsallis_family(1.0);
  CHECK(trace_expectation(dist({1.0}), t, 2.0).value == 0.0);
  CHECK(trace_expectation(dist({0.5, 0.5}), t, 2.0).value == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(trace_expectation(dist({0.5, 0.25, 0.25}), t, 2.0).value == doctest::Approx(0.625).epsilon(1e-15));
}

TEST_CASE("reduction identity is bitwise") {
  for (double k : {1.0, 2.0}) {
    const auto t = tsallis_family(k);
    for (const auto& d : samples()) {
      for (double q : {0.5, 0.9, 0.999, 1.0, 1.0 + 1e-10, 1.001, 1.1, 2.0, 3.0, 7.5}) {
        CHECK(same_bits(generalized_entropy_value(d, t, q), suyari_entropy_value(d, t, q)));
      }
    }
  }
}

TEST_CASE("expectation identity") {
  const std::vector<EntropyFamily> fams{tsallis_family(1.0), tsallis_family(2.0), power_family(2.0, 1.0),
                                        weierstrass_family(WeierstrassParams::make(0.5, 13), 1.0)};
  for (const auto& f : fams) {
    for (const auto& d : samples()) {
      for (double q : kQs) {
        const double g = generalized_entropy_value(d, f, q);
        const double e = trace_expectation_value(d, f, q);
        CHECK(std::abs(g - e) <= 1e-12 * std::max(1.0, std::abs(g)));
      }
    }
  }
}

TEST_CASE("shannon limit is linear for tsallis") {
  const auto t = tsallis_family(1.0);
  for (const auto& d : samples()) {
    const double s1 = shannon_entropy_value(d, 1.0);
    for (double sgn : {1.0, -1.0}) {
      const double c = std::abs(generalized_entropy_value(d, t, 1.0 + sgn * 1e-3) - s1) / 1e-3;
      for (int j = 3; j <= 6; ++j) {
        const double h = std::pow(10.0, -j);
        CHECK(std::abs(generalized_entropy_value(d, t, 1.0 + sgn * h) - s1) <= 1.01 * c * h + 1e-13);
      }
    }
  }
}

TEST_CASE("near-one evaluation keeps its digits") {
  // Sum p^q is evaluated through expm1; the series oracle is
  // S_q = S_1 - (q-1)/2 sum p ln^2 p + O((q-1)^2).
  const Distribution d = dist({0.5, 0.3, 0.2});
  const auto t = tsallis_family(1.0);
  double s1 = 0.0, s2 = 0.0;
  for (double p : d.probs()) {
    s1 -= p * std::log(p);
    s2 += p * std::log(p) * std::log(p);
  }
  for (double h : {1e-6, 1e-7, 1e-8}) {
    const double q = 1.0 + h;
    const double want = s1 - (q - 1.0) / 2.0 * s2;
    CHECK(std::abs(generalized_entropy_value(d, t, q) - want) <= 1e-12);
  }
  CHECK(generalized_entropy_value(d, t, 1.0 + 1e-10) == shannon_entropy_value(d, 1.0));
}

TEST_CASE("pseudoadditivity closure") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto t = tsallis_family(1.0);
  for (int i = 0; i < 1000; ++i) {
    const double p1 = 1.0 - u(gen), p2 = 1.0 - u(gen);
    for (double q : kQs) {
      const double lhs = information_content(t, q, p1 * p2);
      const double rhs = pseudoadditive_compose(t, q, information_content(t, q, p1), information_content(t, q, p2));
      CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(lhs)));
    }
  }
}

TEST_CASE("certainty and nonnegativity") {
  const std::vector<EntropyFamily> valid{tsallis_family(1.0), power_family(2.0, 1.0)};
  for (const auto& f : valid) {
    for (double q : kQs) {
      CHECK(generalized_entropy_value(dist({0.0, 0.0, 1.0}), f, q) == 0.0);
      for (const auto& d : samples()) CHECK(generalized_entropy(d, f, q).value >= 0.0);
    }
  }
}

TEST_CASE("entropy_weight") {
  CHECK(entropy_weight(0.0, 1.0) == 0.0);
  CHECK(entropy_weight(0.25, 1.0) == 0.0625);
  CHECK_THROWS_AS(entropy_weight(0.0, -1.0), Error);
  CHECK(generalized_shift(tsallis_family(1.0), 2.5) == suyari_shift(2.5));
}
