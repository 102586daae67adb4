#include "nonext/simplex.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "nonext/error.hpp"
#include "nonext/random.hpp"

namespace nonext {
namespace {

void validate_entries(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::EmptyInput, "distribution must have at least one entry");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]))
      throw Error(ErrorCode::NonFinite, "entry " + std::to_string(i) + " is not finite");
    if (values[i] < 0.0)
      throw Error(ErrorCode::NegativeEntry, "entry " + std::to_string(i) + " is negative");
  }
}

double checked_sum(std::span<const double> values, NormalizeMode mode) {
  const double sum = std::accumulate(values.begin(), values.end(), 0.0);
  if (mode == NormalizeMode::strict) {
    if (std::abs(sum - 1.0) > kNormalizationTolerance)
      throw Error(ErrorCode::NotNormalized,
                  "entries sum to " + std::to_string(sum) + ", expected 1");
  } else if (sum == 0.0) {
    throw Error(ErrorCode::ZeroSum, "cannot normalize an all-zero vector");
  }
  return sum;
}

std::vector<double> dirichlet(Rng& rng, std::size_t n) {
  std::vector<double> x(n);
  double total = 0.0;
  for (auto& v : x) {
    v = rng.exponential();
    total += v;
  }
  for (auto& v : x) v /= total;
  return x;
}

}  // namespace

Distribution Distribution::make(std::span<const double> values, NormalizeMode mode) {
  validate_entries(values);
  const double sum = checked_sum(values, mode);
  std::vector<double> probs(values.begin(), values.end());
  for (auto& p : probs) p /= sum;
  return Distribution(std::move(probs));
}

Distribution make_distribution(std::span<const double> values, NormalizeMode mode) {
  return Distribution::make(values, mode);
}

Distribution Distribution::expanded() const {
  std::vector<double> probs = probs_;
  probs.push_back(0.0);
  return Distribution(std::move(probs));
}

Distribution Distribution::uniform(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::EmptyInput, "uniform distribution needs n >= 1");
  return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Refinement Refinement::make(std::vector<std::vector<double>> rows, NormalizeMode mode) {
  if (rows.empty()) throw Error(ErrorCode::EmptyInput, "refinement must have at least one row");
  std::vector<double> flat;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty())
      throw Error(ErrorCode::EmptyInput, "refinement row " + std::to_string(i) + " is empty");
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  validate_entries(flat);
  const double sum = checked_sum(flat, mode);
  for (auto& row : rows)
    for (auto& p : row) p /= sum;
  return Refinement(std::move(rows));
}

Distribution Refinement::flatten() const {
  std::vector<double> flat;
  for (const auto& row : rows_) flat.insert(flat.end(), row.begin(), row.end());
  return Distribution::make(flat, NormalizeMode::strict);
}

double Refinement::marginal(std::size_t i) const {
  if (i >= rows_.size())
    throw Error(ErrorCode::IndexOutOfRange, "row index " + std::to_string(i) + " out of range");
  return std::accumulate(rows_[i].begin(), rows_[i].end(), 0.0);
}

Distribution Refinement::marginals() const {
  std::vector<double> m(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) m[i] = marginal(i);
  return Distribution::make(m, NormalizeMode::strict);
}

Distribution Refinement::conditional(std::size_t i) const {
  const double pi = marginal(i);
  if (pi == 0.0)
    throw Error(ErrorCode::ZeroMarginal,
                "row " + std::to_string(i) + " has zero marginal; p(j|i) is undefined");
  std::vector<double> c(rows_[i]);
  for (auto& v : c) v /= pi;
  return Distribution::make(c, NormalizeMode::normalize);
}

std::vector<Distribution> sample_simplex(std::size_t n, std::size_t count, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::InvalidParameter, "simplex dimension must be >= 1");
  Rng rng(seed);
  std::vector<Distribution> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) out.push_back(Distribution::make(dirichlet(rng, n)));
  return out;
}

std::vector<Refinement> sample_refinement(std::size_t n, std::size_t max_m, std::size_t count,
                                          std::uint64_t seed) {
  if (n == 0 || max_m == 0)
    throw Error(ErrorCode::InvalidParameter, "refinement needs n >= 1 and max_m >= 1");
  Rng rng(seed);
  std::vector<Refinement> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<std::size_t> lengths(n);
    std::size_t cells = 0;
    for (auto& m : lengths) {
      m = static_cast<std::size_t>(rng.integer(1, max_m));
      cells += m;
    }
    const std::vector<double> flat = dirichlet(rng, cells);
    std::vector<std::vector<double>> rows(n);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
      rows[i].assign(flat.begin() + static_cast<std::ptrdiff_t>(pos),
                     flat.begin() + static_cast<std::ptrdiff_t>(pos + lengths[i]));
      pos += lengths[i];
    }
    out.push_back(Refinement::make(std::move(rows)));
  }
  return out;
}

}  // namespace nonext
