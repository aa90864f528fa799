#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace replic {

/// Packed bit string of fixed length. Bit i lives in word i/64 at position
/// i%64. Used for points of {0,1}^d, GF(2) row vectors, and hash-chain
/// strings.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int n);
  BitVector(int n, std::initializer_list<int> ones);

  int size() const { return n_; }
  int bit(int i) const;
  void set(int i, int v);
  void flip(int i);

  /// XOR, the GF(2) addition.
  BitVector& operator^=(const BitVector& o);
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  /// Parity of the AND, i.e. the GF(2) inner product.
  int dot(const BitVector& o) const;

  int popcount() const;
  bool any() const;
  bool operator==(const BitVector& o) const = default;

  /// Index of the highest set bit, or -1.
  int highest_bit() const;

  /// Interprets the bits as a little-endian integer (requires n <= 32).
  uint32_t as_index() const;
  static BitVector from_index(uint32_t v, int n);

  /// Canonical lowercase hex of the LSB-first byte packing.
  std::string hex() const;
  static BitVector from_hex(const std::string& h, int n);

  std::string to_string01() const;

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace replic
