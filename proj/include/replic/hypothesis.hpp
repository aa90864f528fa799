#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "replic/bits.hpp"
#include "replic/seedstream.hpp"

namespace replic {

class Hypothesis;
class DecisionTreeDistribution;

/// h(x) = 0 everywhere. Canonical form "ALLZERO".
struct AllZeroH {};

/// h(x) = 1 everywhere.
struct ConstOneH {};

/// h(x) = b + sum_{i: w_i = 1} x_i over GF(2).
struct AffineParityH {
  BitVector w;
  int b = 0;
};

/// h(x) = 1 iff x equals the stored point.
struct PointFunctionH {
  BitVector p;
};

/// Threshold hypothesis of the one-way-sequence learner: 0 below the index
/// threshold, the anchored chain value at and above it.
struct OwsThresholdH {
  int d = 0;
  int k = 0;
  uint32_t istar = 1;   // in [2^k]
  BitVector sigma_star;  // length d-k
  int bstar = 0;
};

/// Pseudorandom guess keyed by a shared-randomness stream: identical across
/// executions that share the seed, uniform-looking over inputs.
struct KeyedGuessH {
  SeedStream key;
};

/// Tree-routed hypothesis produced by the lifting algorithm: route x to a
/// leaf of the tree, then apply that leaf's hypothesis.
struct LiftedH {
  std::shared_ptr<const DecisionTreeDistribution> tree;
  /// (canonical leaf restriction label, hypothesis), sorted by label.
  std::vector<std::pair<std::string, Hypothesis>> leaves;
};

/// Canonical, serializable, structurally comparable predictor over {0,1}^d.
/// Replicability certification compares serializations byte-for-byte, so
/// serialize() must be a pure function of the hypothesis content.
class Hypothesis {
 public:
  using Variant = std::variant<AllZeroH, ConstOneH, AffineParityH,
                               PointFunctionH, OwsThresholdH, KeyedGuessH,
                               LiftedH>;

  Hypothesis() : v_(AllZeroH{}) {}
  Hypothesis(Variant v) : v_(std::move(v)) {}

  static Hypothesis all_zero() { return Hypothesis(AllZeroH{}); }
  static Hypothesis const_one() { return Hypothesis(ConstOneH{}); }
  static Hypothesis affine_parity(BitVector w, int b) {
    return Hypothesis(AffineParityH{std::move(w), b});
  }
  static Hypothesis point_function(BitVector p) {
    return Hypothesis(PointFunctionH{std::move(p)});
  }

  int evaluate(const BitVector& x) const;
  std::string serialize() const;

  const Variant& variant() const { return v_; }
  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }

  bool operator==(const Hypothesis& o) const {
    return serialize() == o.serialize();
  }

 private:
  Variant v_;
};

}  // namespace replic
