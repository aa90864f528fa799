#pragma once

#include <cstdint>
#include <vector>

#include "replic/seedstream.hpp"

namespace replic {

/// Standard normal draw via the AS241 inverse-CDF applied to a 53-bit
/// uniform. No Box-Muller state, so draws map 1:1 onto stream counters.
double normal_draw(SeedStream& rng);

/// Inverse standard normal CDF (Wichura's PPND16).
double normal_quantile(double p);

/// Binomial(n, p) count. Exact (inversion / BTRS) while n*min(p,1-p) is
/// small enough for double-exact counting; for astronomically large budgets
/// it switches to the central-limit draw, whose total-variation error is
/// O(1/sqrt(np)) and far below any grid width used in this library. Counts
/// are returned as doubles because simulated budgets can exceed 2^53.
double binomial_draw(SeedStream& rng, double n, double p);

/// Multinomial counts of n i.i.d. draws over the given masses (need not be
/// normalized). This is the sufficient statistic of the sample, so any
/// permutation-invariant estimator fed these counts behaves exactly as if it
/// had streamed n individual draws.
std::vector<double> multinomial_draw(SeedStream& rng, double n,
                                     const std::vector<double>& masses);

/// Mean and variance of |2*B/n - 1| for B ~ Binomial(n, p); exact pmf sum
/// for small n, folded-normal closed form otherwise. Drives the batched
/// inner loop of the subcube influence estimator.
struct FoldedMoments {
  double mean;
  double var;
};
FoldedMoments abs_bias_moments(double inner, double p);

}  // namespace replic
