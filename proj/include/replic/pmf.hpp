#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "replic/bits.hpp"

namespace replic {

/// Partial assignment of coordinates, kept sorted by coordinate index so the
/// textual label is a canonical memoization / stream-derivation key.
class Restriction {
 public:
  Restriction() = default;
  explicit Restriction(std::vector<std::pair<int, int>> fixed);

  Restriction with(int coord, int value) const;

  bool fixes(int coord) const;
  int value_of(int coord) const;  // -1 if free
  int size() const { return static_cast<int>(fixed_.size()); }
  const std::vector<std::pair<int, int>>& fixed() const { return fixed_; }

  bool consistent(const BitVector& x) const;
  /// Overwrites the fixed coordinates of x.
  BitVector apply(const BitVector& x) const;

  /// Canonical label, e.g. "x2=1.x5=0"; empty restriction -> "-".
  std::string label() const;

  bool operator==(const Restriction& o) const = default;

 private:
  std::vector<std::pair<int, int>> fixed_;
};

/// Explicit pmf over {0,1}^d, cell index = little-endian bit packing.
/// The enumerable workhorse behind exact error evaluation, influence
/// oracles, and sufficient-statistic sampling. d is capped at 24.
class BoolPmf {
 public:
  BoolPmf() = default;
  BoolPmf(int d, std::vector<double> pmf);

  static BoolPmf uniform(int d);
  static BoolPmf product(const std::vector<double>& p_one);
  static BoolPmf point_mass(const BitVector& x);

  int dim() const { return d_; }
  uint32_t cells() const { return static_cast<uint32_t>(pmf_.size()); }
  double mass(uint32_t cell) const { return pmf_[cell]; }
  double mass(const BitVector& x) const { return pmf_[x.as_index()]; }
  const std::vector<double>& masses() const { return pmf_; }

  /// Scaled pmf f_D(x) = 2^d * D(x).
  double scaled(uint32_t cell) const;

  double restriction_mass(const Restriction& pi) const;
  bool is_monotone() const;

  /// Conditional pmf given the restriction (zero off the subcube).
  BoolPmf conditional(const Restriction& pi) const;
  /// Conditional on the subcube, then the restricted coordinates
  /// re-randomized uniformly.
  BoolPmf conditional_rerandomized(const Restriction& pi) const;

  double tv(const BoolPmf& other) const;

 private:
  int d_ = 0;
  std::vector<double> pmf_;
};

}  // namespace replic
