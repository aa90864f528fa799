#include "replic/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace replic {

namespace {

// Wichura (1988), algorithm AS241 PPND16. Pure arithmetic, so the draw
// sequence is reproducible independent of libm's erf.
double ppnd16(double p) {
  double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    double r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                 6.7265770927008700853e4) *
                    r +
                4.5921953931549871457e4) *
                   r +
               1.3731693765509461125e4) *
                  r +
              1.9715909503065514427e3) *
                 r +
             1.3314166789178437745e2) *
                r +
            3.3871328727963666080e0) /
           (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                 3.9307895800092710610e4) *
                    r +
                2.1213794301586595867e4) *
                   r +
               5.3941960214247511077e3) *
                  r +
              6.8718700749205790830e2) *
                 r +
             4.2313330701600911252e1) *
                r +
            1.0);
  }
  double r = (q < 0) ? p : 1.0 - p;
  if (r <= 0) return q < 0 ? -38.5 : 38.5;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) *
                    r +
                2.41780725177450611770e-1) *
                   r +
               1.27045825245236838258e0) *
                  r +
              3.64784832476320460504e0) *
                 r +
             5.76949722146069140550e0) *
                r +
            4.63033784615654529590e0) *
               r +
           1.42343711074968357734e0) /
          (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) *
                    r +
                1.51986665636164571966e-2) *
                   r +
               1.48103976427480074590e-1) *
                  r +
              6.89767334985100004550e-1) *
                 r +
             1.67638483018380384940e0) *
                r +
            2.05319162663775882187e0) *
               r +
           1.0);
  } else {
    r -= 5.0;
    val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) *
                    r +
                1.24266094738807843860e-3) *
                   r +
               2.65321895265761230930e-2) *
                  r +
              2.96560571828504891230e-1) *
                 r +
             1.78482653991729133580e0) *
                r +
            5.46378491116411436990e0) *
               r +
           6.65790464350110377720e0) /
          (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) *
                    r +
                1.84631831751005468180e-5) *
                   r +
               7.86869131145613259100e-4) *
                  r +
              1.48753612908506148525e-2) *
                 r +
             1.36929880922735805310e-1) *
                r +
            5.99832206555887937690e-1) *
               r +
           1.0);
  }
  return q < 0 ? -val : val;
}

// Exact inversion sampler for small np.
double binomial_inversion(SeedStream& rng, double n, double p) {
  double q = 1.0 - p;
  double s = p / q;
  double f0 = std::pow(q, n);
  for (int attempt = 0; attempt < 128; ++attempt) {
    double u = rng.uniform_unit();
    double f = f0;
    double k = 0;
    while (u > f && k < n) {
      u -= f;
      k += 1;
      f *= s * (n - k + 1) / k;
    }
    if (u <= f || k >= n) return k;
  }
  return std::floor(n * p);  // unreachable in practice
}

// Hormann's BTRS transformed-rejection sampler; exact for moderate np.
double binomial_btrs(SeedStream& rng, double n, double p) {
  const double spq = std::sqrt(n * p * (1 - p));
  const double b = 1.15 + 2.53 * spq;
  const double a = -0.0873 + 0.0248 * b + 0.01 * p;
  const double c = n * p + 0.5;
  const double v_r = 0.92 - 4.2 / b;
  const double alpha = (2.83 + 5.1 / b) * spq;
  const double lpq = std::log(p / (1 - p));
  const double m = std::floor((n + 1) * p);
  const double h = std::lgamma(m + 1) + std::lgamma(n - m + 1);
  for (;;) {
    double u = rng.uniform_unit() - 0.5;
    double v = rng.uniform_unit();
    double us = 0.5 - std::fabs(u);
    double k = std::floor((2 * a / us + b) * u + c);
    if (k < 0 || k > n) continue;
    if (us >= 0.07 && v <= v_r) return k;
    v = std::log(v * alpha / (a / (us * us) + b));
    double ub = h - std::lgamma(k + 1) - std::lgamma(n - k + 1) +
                (k - m) * lpq;
    if (v <= ub) return k;
  }
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("normal_quantile: p outside (0,1)");
  return ppnd16(p);
}

double normal_draw(SeedStream& rng) {
  // uniform_unit is in [0,1); shift into (0,1).
  double u = (static_cast<double>(rng.next_u64() >> 11) + 0.5) * 0x1.0p-53;
  return ppnd16(u);
}

double binomial_draw(SeedStream& rng, double n, double p) {
  if (n < 0 || p < 0.0 || p > 1.0)
    throw std::invalid_argument("binomial_draw: bad parameters");
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;
  if (p > 0.5) return n - binomial_draw(rng, n, 1.0 - p);

  double np = n * p;
  if (n <= 9.0e15) {
    if (np < 20.0) return binomial_inversion(rng, n, p);
    return binomial_btrs(rng, n, p);
  }
  // Budgets beyond exact-integer doubles: central-limit draw.
  double sd = std::sqrt(np * (1.0 - p));
  double k = std::floor(np + sd * normal_draw(rng) + 0.5);
  return std::clamp(k, 0.0, n);
}

std::vector<double> multinomial_draw(SeedStream& rng, double n,
                                     const std::vector<double>& masses) {
  double total = 0;
  for (double m : masses) {
    if (m < 0) throw std::invalid_argument("multinomial_draw: negative mass");
    total += m;
  }
  if (total <= 0) throw std::invalid_argument("multinomial_draw: zero mass");
  std::vector<double> counts(masses.size(), 0.0);
  double rem_n = n;
  double rem_mass = total;
  for (size_t i = 0; i + 1 < masses.size() && rem_n > 0; ++i) {
    if (masses[i] <= 0) continue;
    double p = std::min(1.0, masses[i] / rem_mass);
    double c = (p >= 1.0) ? rem_n : binomial_draw(rng, rem_n, p);
    counts[i] = c;
    rem_n -= c;
    rem_mass -= masses[i];
  }
  if (!masses.empty()) counts[masses.size() - 1] = std::max(0.0, rem_n);
  return counts;
}

FoldedMoments abs_bias_moments(double inner, double p) {
  // |2B/inner - 1| for B ~ Bin(inner, p).
  if (inner <= 2048) {
    // Exact pmf walk.
    double q = 1.0 - p;
    int n = static_cast<int>(inner);
    double logp = std::log(std::max(p, 1e-300));
    double logq = std::log(std::max(q, 1e-300));
    double m1 = 0, m2 = 0;
    for (int k = 0; k <= n; ++k) {
      double lw = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                  std::lgamma(n - k + 1.0) + k * logp + (n - k) * logq;
      double w = std::exp(lw);
      double v = std::fabs(2.0 * k / inner - 1.0);
      m1 += w * v;
      m2 += w * v * v;
    }
    return {m1, std::max(0.0, m2 - m1 * m1)};
  }
  // Folded-normal closed form on the CLT approximation of 2B/inner - 1.
  double mu = 2.0 * p - 1.0;
  double sd = 2.0 * std::sqrt(p * (1.0 - p) / inner);
  if (sd == 0) return {std::fabs(mu), 0.0};
  double z = mu / sd;
  double phi = std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
  double mean = sd * 2.0 * phi + mu * (1.0 - 2.0 * normal_cdf(-z));
  double second = mu * mu + sd * sd;
  return {mean, std::max(0.0, second - mean * mean)};
}

}  // namespace replic
