#include "pcix/report.hpp"

namespace pcix {

IndicatorReport analyze(const PCMatrix& m, const RITable& ri, const PowerOptions& opts) {
  IndicatorReport r;
  r.n = m.size();
  if (r.n >= 3) {
    r.worst = kii(m);
    r.chain = chain_ii(m);
  }
  r.lambda_max = power_iteration(m, opts).lambda_max;
  r.ci = saaty_ci(r.lambda_max, r.n);
  if (ri.contains(static_cast<int>(r.n))) r.cr = saaty_cr(r.ci, r.n, ri);
  r.weights = geometric_mean_weights(m).values();
  r.consistent = is_consistent(m);
  return r;
}

}  // namespace pcix
