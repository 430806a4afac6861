#include "pcix/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "pcix/error.hpp"

namespace pcix {
namespace {

void check_order(std::size_t n) {
  if (n < kMinOrder || n > kMaxOrder) {
    std::ostringstream os;
    os << "matrix order " << n << " outside supported range [" << kMinOrder << ", " << kMaxOrder
       << "]";
    throw ValidationError(os.str());
  }
}

void check_entry(double v, std::size_t i, std::size_t j) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream os;
    os << "entry (" << i + 1 << "," << j + 1 << ") must be positive and finite, got " << v;
    throw ValidationError(os.str());
  }
}

}  // namespace

PCMatrix::PCMatrix(std::size_t n) : n_(n), data_(n * n, 1.0) { check_order(n); }

PCMatrix PCMatrix::from_full(const std::vector<std::vector<double>>& grid, double rel_tol) {
  const std::size_t n = grid.size();
  check_order(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (grid[i].size() != n) {
      std::ostringstream os;
      os << "row " << i + 1 << " has " << grid[i].size() << " entries, expected " << n;
      throw ValidationError(os.str());
    }
    for (std::size_t j = 0; j < n; ++j) check_entry(grid[i][j], i, j);
  }
  PCMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(grid[i][i] - 1.0) > rel_tol) {
      std::ostringstream os;
      os << "diagonal entry (" << i + 1 << "," << i + 1 << ") is " << grid[i][i] << ", expected 1";
      throw ValidationError(os.str());
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(grid[i][j] * grid[j][i] - 1.0) > rel_tol) {
        std::ostringstream os;
        os.precision(12);
        os << "reciprocity violated at (" << i + 1 << "," << j + 1 << "): " << grid[i][j] << " * "
           << grid[j][i] << " != 1";
        throw ValidationError(os.str());
      }
      m.set(i, j, grid[i][j]);
    }
  }
  return m;
}

void PCMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i >= n_ || j >= n_ || i == j) throw ValidationError("set: index out of range or on diagonal");
  check_entry(value, i, j);
  data_[i * n_ + j] = value;
  data_[j * n_ + i] = 1.0 / value;
}

PCMatrix PCMatrix::with(std::size_t i, std::size_t j, double value) const {
  PCMatrix copy = *this;
  copy.set(i, j, value);
  return copy;
}

std::vector<std::vector<double>> PCMatrix::rows() const {
  std::vector<std::vector<double>> out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    out[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  return out;
}

PCMatrix make_matrix(std::span<const UpperEntry> upper) {
  std::size_t n = 0;
  for (const auto& e : upper) {
    if (e.i < 1 || e.j <= e.i) {
      std::ostringstream os;
      os << "pair (" << e.i << "," << e.j << ") must satisfy 1 <= i < j";
      throw ValidationError(os.str());
    }
    n = std::max(n, e.j);
  }
  check_order(n);

  PCMatrix m(n);
  std::vector<bool> seen(n * n, false);
  for (const auto& e : upper) {
    const std::size_t i = e.i - 1, j = e.j - 1;
    if (seen[i * n + j]) {
      std::ostringstream os;
      os << "duplicate pair (" << e.i << "," << e.j << ")";
      throw ValidationError(os.str());
    }
    seen[i * n + j] = true;
    m.set(i, j, e.value);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!seen[i * n + j]) {
        std::ostringstream os;
        os << "missing pair (" << i + 1 << "," << j + 1 << ")";
        throw ValidationError(os.str());
      }
  return m;
}

Triad triad_at(const PCMatrix& m, std::size_t i, std::size_t j, std::size_t k) {
  return Triad{i, j, k, m(i, j), m(i, k), m(j, k)};
}

std::vector<Triad> triads(const PCMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Triad> out;
  out.reserve(n * (n - 1) * (n - 2) / 6);
  for_each_triple(n, [&](std::size_t i, std::size_t j, std::size_t k) {
    out.push_back(triad_at(m, i, j, k));
  });
  return out;
}

bool is_consistent(const PCMatrix& m, double tol) {
  bool ok = true;
  for_each_triple(m.size(), [&](std::size_t i, std::size_t j, std::size_t k) {
    if (ok && std::abs(m(i, k) - m(i, j) * m(j, k)) > tol * m(i, k)) ok = false;
  });
  return ok;
}

WeightVector::WeightVector(std::vector<double> raw) : s_(std::move(raw)) {
  if (s_.empty()) throw ValidationError("weight vector is empty");
  for (double v : s_)
    if (!(v > 0.0) || !std::isfinite(v))
      throw ValidationError("weights must be positive and finite");
  const double total = std::accumulate(s_.begin(), s_.end(), 0.0);
  for (double& v : s_) v /= total;
}

WeightVector geometric_mean_weights(const PCMatrix& m) {
  const std::size_t n = m.size();
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    double log_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) log_sum += std::log(m(i, j));
    s[i] = std::exp(log_sum / static_cast<double>(n));
  }
  return WeightVector(std::move(s));
}

PCMatrix consistent_approx(const WeightVector& s) {
  PCMatrix m(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) m.set(i, j, s[i] / s[j]);
  return m;
}

double approx_error(double v, double v_approx) {
  if (v == 0.0) throw ValidationError("approximation error undefined for v = 0");
  return std::abs(1.0 - v_approx / v);
}

}  // namespace pcix
