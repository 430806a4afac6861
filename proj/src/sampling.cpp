#include "pcix/sampling.hpp"

#include <cmath>
#include <vector>

namespace pcix {

PCMatrix random_reciprocal(std::size_t n, Rng& rng, double spread) {
  const double log_spread = std::log(spread);
  PCMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, rng.log_uniform(log_spread));
  return m;
}

PCMatrix random_consistent(std::size_t n, Rng& rng, double spread) {
  const double log_spread = std::log(spread);
  std::vector<double> s(n);
  for (double& v : s) v = rng.log_uniform(log_spread);
  return consistent_approx(WeightVector(std::move(s)));
}

}  // namespace pcix
