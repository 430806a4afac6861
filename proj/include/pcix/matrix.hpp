#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pcix {

inline constexpr std::size_t kMinOrder = 2;
inline constexpr std::size_t kMaxOrder = 64;
inline constexpr double kDefaultConsistencyTol = 1e-9;
inline constexpr double kDefaultReciprocityTol = 1e-9;

/// One upper-triangle judgment, 1-based: stimulus `i` is `value` times stimulus `j` (i < j).
struct UpperEntry {
  std::size_t i;
  std::size_t j;
  double value;
};

/// Positive reciprocal pairwise comparison matrix.
///
/// Only the upper triangle is ever taken from the caller; the diagonal is 1 and
/// the lower triangle holds exact reciprocals. Indices are 0-based.
class PCMatrix {
 public:
  /// All-ones (trivially consistent) matrix of order n.
  explicit PCMatrix(std::size_t n);

  /// Row-major full grid. Rejects non-square or ragged input, nonpositive or
  /// non-finite entries, a diagonal away from 1, and any a_ij * a_ji off 1 by
  /// more than `rel_tol`. Exact reciprocals are re-imposed from the upper triangle.
  static PCMatrix from_full(const std::vector<std::vector<double>>& grid,
                            double rel_tol = kDefaultReciprocityTol);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  /// Sets a_ij (i != j) and its reciprocal a_ji.
  void set(std::size_t i, std::size_t j, double value);
  /// Copy with a_ij and a_ji replaced.
  PCMatrix with(std::size_t i, std::size_t j, double value) const;

  std::vector<std::vector<double>> rows() const;
  std::span<const double> data() const noexcept { return data_; }

  friend bool operator==(const PCMatrix&, const PCMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

/// Builds a matrix from its strict upper triangle (1-based pairs). Every pair
/// i < j up to the largest index must appear exactly once.
PCMatrix make_matrix(std::span<const UpperEntry> upper);

/// Index triple i < j < k (0-based) with values (x, y, z) = (a_ij, a_ik, a_jk).
/// The triad is consistent when y = x * z.
struct Triad {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  double x = 1.0;
  double y = 1.0;
  double z = 1.0;

  friend bool operator==(const Triad&, const Triad&) = default;
};

Triad triad_at(const PCMatrix& m, std::size_t i, std::size_t j, std::size_t k);

/// All C(n,3) triads in lexicographic (i, j, k) order.
std::vector<Triad> triads(const PCMatrix& m);

/// Calls fn(i, j, k) for every i < j < k in lexicographic order.
template <typename Fn>
void for_each_triple(std::size_t n, Fn&& fn) {
  for (std::size_t i = 0; i + 2 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) fn(i, j, k);
}

/// |a_ik - a_ij * a_jk| <= tol * a_ik for every i < j < k.
bool is_consistent(const PCMatrix& m, double tol = kDefaultConsistencyTol);

/// Positive priority vector normalized to sum 1.
class WeightVector {
 public:
  /// Normalizes `raw`; throws ValidationError unless every element is positive and finite.
  explicit WeightVector(std::vector<double> raw);

  std::size_t size() const noexcept { return s_.size(); }
  double operator[](std::size_t i) const noexcept { return s_[i]; }
  const std::vector<double>& values() const noexcept { return s_; }

 private:
  std::vector<double> s_;
};

/// Row geometric means, normalized. Exact for consistent matrices.
WeightVector geometric_mean_weights(const PCMatrix& m);

/// Quotient matrix s_i / s_j.
PCMatrix consistent_approx(const WeightVector& s);

/// Relative approximation error |1 - approx / v|. Throws ValidationError for v == 0.
double approx_error(double v, double v_approx);

}  // namespace pcix
