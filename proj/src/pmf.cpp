#include "replic/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "replic/errors.hpp"

namespace replic {

Restriction::Restriction(std::vector<std::pair<int, int>> fixed)
    : fixed_(std::move(fixed)) {
  std::sort(fixed_.begin(), fixed_.end());
  for (size_t i = 0; i + 1 < fixed_.size(); ++i)
    if (fixed_[i].first == fixed_[i + 1].first)
      throw std::invalid_argument("Restriction: duplicate coordinate");
}

Restriction Restriction::with(int coord, int value) const {
  auto f = fixed_;
  f.emplace_back(coord, value);
  return Restriction(std::move(f));
}

bool Restriction::fixes(int coord) const {
  for (auto& [c, v] : fixed_)
    if (c == coord) return true;
  return false;
}

int Restriction::value_of(int coord) const {
  for (auto& [c, v] : fixed_)
    if (c == coord) return v;
  return -1;
}

bool Restriction::consistent(const BitVector& x) const {
  for (auto& [c, v] : fixed_)
    if (x.bit(c) != v) return false;
  return true;
}

BitVector Restriction::apply(const BitVector& x) const {
  BitVector y = x;
  for (auto& [c, v] : fixed_) y.set(c, v);
  return y;
}

std::string Restriction::label() const {
  if (fixed_.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < fixed_.size(); ++i) {
    if (i) s.push_back('.');
    s += "x" + std::to_string(fixed_[i].first) + "=" +
         std::to_string(fixed_[i].second);
  }
  return s;
}

BoolPmf::BoolPmf(int d, std::vector<double> pmf) : d_(d), pmf_(std::move(pmf)) {
  if (d < 0 || d > 24) throw parameter_error("BoolPmf: dimension out of range");
  if (pmf_.size() != (size_t{1} << d))
    throw parameter_error("BoolPmf: pmf size != 2^d");
  double sum = 0;
  for (double p : pmf_) {
    if (!(p >= 0)) throw data_error("BoolPmf: negative or NaN mass");
    sum += p;
  }
  if (std::fabs(sum - 1.0) > 1e-9)
    throw data_error("BoolPmf: masses do not sum to 1");
}

BoolPmf BoolPmf::uniform(int d) {
  return BoolPmf(d, std::vector<double>(size_t{1} << d,
                                        1.0 / static_cast<double>(1u << d)));
}

BoolPmf BoolPmf::product(const std::vector<double>& p_one) {
  int d = static_cast<int>(p_one.size());
  std::vector<double> pmf(size_t{1} << d, 1.0);
  for (uint32_t cell = 0; cell < (1u << d); ++cell)
    for (int i = 0; i < d; ++i)
      pmf[cell] *= ((cell >> i) & 1u) ? p_one[i] : 1.0 - p_one[i];
  return BoolPmf(d, std::move(pmf));
}

BoolPmf BoolPmf::point_mass(const BitVector& x) {
  std::vector<double> pmf(size_t{1} << x.size(), 0.0);
  pmf[x.as_index()] = 1.0;
  return BoolPmf(x.size(), std::move(pmf));
}

double BoolPmf::scaled(uint32_t cell) const {
  return std::ldexp(pmf_[cell], d_);
}

double BoolPmf::restriction_mass(const Restriction& pi) const {
  double m = 0;
  for (uint32_t cell = 0; cell < cells(); ++cell)
    if (pi.consistent(BitVector::from_index(cell, d_))) m += pmf_[cell];
  return m;
}

bool BoolPmf::is_monotone() const {
  for (uint32_t cell = 0; cell < cells(); ++cell)
    for (int i = 0; i < d_; ++i)
      if (!((cell >> i) & 1u) && pmf_[cell] > pmf_[cell | (1u << i)] + 1e-15)
        return false;
  return true;
}

BoolPmf BoolPmf::conditional(const Restriction& pi) const {
  std::vector<double> pmf(pmf_.size(), 0.0);
  double m = restriction_mass(pi);
  if (m <= 0) throw data_error("conditional: restriction has zero mass");
  for (uint32_t cell = 0; cell < cells(); ++cell)
    if (pi.consistent(BitVector::from_index(cell, d_)))
      pmf[cell] = pmf_[cell] / m;
  return BoolPmf(d_, std::move(pmf));
}

BoolPmf BoolPmf::conditional_rerandomized(const Restriction& pi) const {
  BoolPmf cond = conditional(pi);
  std::vector<double> pmf(pmf_.size(), 0.0);
  double scale = std::ldexp(1.0, -pi.size());
  for (uint32_t cell = 0; cell < cells(); ++cell) {
    BitVector x = BitVector::from_index(cell, d_);
    pmf[cell] = scale * cond.mass(pi.apply(x));
  }
  return BoolPmf(d_, std::move(pmf));
}

double BoolPmf::tv(const BoolPmf& other) const {
  if (other.d_ != d_) throw parameter_error("tv: dimension mismatch");
  double s = 0;
  for (uint32_t cell = 0; cell < cells(); ++cell)
    s += std::fabs(pmf_[cell] - other.pmf_[cell]);
  return 0.5 * s;
}

}  // namespace replic
