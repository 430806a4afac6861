#pragma once

#include <cstddef>
#include <cstdint>
#include <cmath>
#include <random>

#include "pcix/matrix.hpp"

namespace pcix {

/// Seeded generator whose draws do not depend on the standard library's
/// distribution implementations, so a seed means the same matrices everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, bound).
  std::size_t index(std::size_t bound) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(bound));
  }
  /// exp(U[-log_spread, log_spread]).
  double log_uniform(double log_spread) { return std::exp(uniform(-log_spread, log_spread)); }

 private:
  std::mt19937_64 engine_;
};

/// Independent log-uniform upper entries on [1/spread, spread], reciprocal fill.
PCMatrix random_reciprocal(std::size_t n, Rng& rng, double spread = 5.0);

/// Quotient matrix of random log-uniform weights on [1/spread, spread].
PCMatrix random_consistent(std::size_t n, Rng& rng, double spread = 5.0);

}  // namespace pcix
