#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "replic/bits.hpp"

namespace replic {

/// Which randomness channel a stream belongs to. The shared channel is the
/// random string r of the replicability definition and is reused across the
/// two executions of a trial pair; the data channel simulates fresh i.i.d.
/// sample draws and is never shared.
enum class Channel { shared, data };

/// Deterministic, forkable randomness stream.
///
/// A stream is identified by (root_seed, path, channel). The draw key is a
/// SHA-256 chain over the path labels, and draws come from a counter-mode
/// generator (the splitmix64 finalizer) under that key, so two streams with
/// equal identity produce bit-identical draws on any platform. derive() forks
/// a child without touching the parent's counter; sibling streams with
/// distinct labels are statistically independent.
///
/// Streams are value types. Move one between threads freely, but do not draw
/// from a single instance concurrently; derive a child per worker instead.
class SeedStream {
 public:
  explicit SeedStream(uint64_t root_seed, Channel channel = Channel::shared);

  /// Forks a child stream. Repeated calls with the same label return
  /// identical streams. The label is length-prefixed into the key hash, so
  /// distinct label sequences never collide structurally.
  SeedStream derive(std::string_view label) const;

  /// Next 64 uniform bits; advances the counter by one.
  uint64_t next_u64();

  /// Uniform double in [0,1) with the full 53-bit mantissa construction.
  double uniform_unit();

  /// Uniform integer in [0, n).
  uint64_t below(uint64_t n);

  /// n fresh uniform bits.
  BitVector random_bits(int n);

  /// Pseudorandom function keyed by the stream identity; does not advance
  /// the counter. Realizes the shared-randomness "random guess" hypothesis.
  int keyed_bit(const BitVector& x) const;

  uint64_t root_seed() const { return root_seed_; }
  const std::vector<std::string>& path() const { return path_; }
  uint64_t counter() const { return counter_; }
  Channel channel() const { return channel_; }

  /// Short stable fingerprint of the key, for serializing keyed hypotheses.
  std::string key_fingerprint() const;

 private:
  uint64_t root_seed_ = 0;
  std::vector<std::string> path_;
  uint64_t counter_ = 0;
  Channel channel_ = Channel::shared;
  std::array<uint64_t, 4> key_{};
};

}  // namespace replic
