#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nonext {

/// Absolute tolerance on |sum - 1| accepted by strict construction.
inline constexpr double kNormalizationTolerance = 1e-12;

enum class NormalizeMode { strict, normalize };

/// A point of the probability simplex. Entries are nonnegative and, after
/// construction, have been divided by their sum.
class Distribution {
 public:
  static Distribution make(std::span<const double> values,
                           NormalizeMode mode = NormalizeMode::strict);

  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  /// Copy of this distribution with one zero-probability outcome appended.
  Distribution expanded() const;

  static Distribution uniform(std::size_t n);

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  explicit Distribution(std::vector<double> probs) : probs_(std::move(probs)) {}
  std::vector<double> probs_;
};

Distribution make_distribution(std::span<const double> values, NormalizeMode mode);

/// Joint probabilities p_ij of a split of outcome i into m_i sub-outcomes.
/// Zero rows are legal; conditional() on such a row is an error.
class Refinement {
 public:
  static Refinement make(std::vector<std::vector<double>> rows,
                         NormalizeMode mode = NormalizeMode::strict);

  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }

  Distribution flatten() const;
  Distribution marginals() const;
  Distribution conditional(std::size_t i) const;

  /// Sum of row i, without building a Distribution.
  double marginal(std::size_t i) const;

  friend bool operator==(const Refinement&, const Refinement&) = default;

 private:
  explicit Refinement(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {}
  std::vector<std::vector<double>> rows_;
};

inline Distribution marginals(const Refinement& r) { return r.marginals(); }
inline Distribution conditional(const Refinement& r, std::size_t i) { return r.conditional(i); }

/// Flat-Dirichlet samples of the n-simplex (normalized exponential spacings).
std::vector<Distribution> sample_simplex(std::size_t n, std::size_t count, std::uint64_t seed);

/// Random refinements with n rows, row lengths uniform on {1..max_m} and cells
/// drawn from the flat Dirichlet on the flattened simplex.
std::vector<Refinement> sample_refinement(std::size_t n, std::size_t max_m, std::size_t count,
                                          std::uint64_t seed);

}  // namespace nonext
