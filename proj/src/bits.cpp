#include "replic/bits.hpp"

#include <bit>
#include <stdexcept>

namespace replic {

BitVector::BitVector(int n) : n_(n), words_((n + 63) / 64, 0) {}

BitVector::BitVector(int n, std::initializer_list<int> ones) : BitVector(n) {
  for (int i : ones) set(i, 1);
}

int BitVector::bit(int i) const {
  return static_cast<int>((words_[i >> 6] >> (i & 63)) & 1u);
}

void BitVector::set(int i, int v) {
  uint64_t mask = uint64_t{1} << (i & 63);
  if (v)
    words_[i >> 6] |= mask;
  else
    words_[i >> 6] &= ~mask;
}

void BitVector::flip(int i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.n_ != n_) throw std::invalid_argument("BitVector dimension mismatch");
  for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  return *this;
}

int BitVector::dot(const BitVector& o) const {
  if (o.n_ != n_) throw std::invalid_argument("BitVector dimension mismatch");
  uint64_t acc = 0;
  for (size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
  return std::popcount(acc) & 1;
}

int BitVector::popcount() const {
  int c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool BitVector::any() const {
  for (uint64_t w : words_)
    if (w) return true;
  return false;
}

int BitVector::highest_bit() const {
  for (int w = static_cast<int>(words_.size()) - 1; w >= 0; --w)
    if (words_[w]) return w * 64 + 63 - std::countl_zero(words_[w]);
  return -1;
}

uint32_t BitVector::as_index() const {
  if (n_ > 32) throw std::invalid_argument("BitVector too wide for as_index");
  return words_.empty() ? 0u : static_cast<uint32_t>(words_[0]);
}

BitVector BitVector::from_index(uint32_t v, int n) {
  BitVector b(n);
  if (!b.words_.empty()) b.words_[0] = v;
  return b;
}

std::string BitVector::hex() const {
  static const char* digits = "0123456789abcdef";
  int nbytes = (n_ + 7) / 8;
  std::string out;
  out.reserve(2 * nbytes);
  for (int j = 0; j < nbytes; ++j) {
    uint8_t byte = static_cast<uint8_t>(words_[j >> 3] >> ((j & 7) * 8));
    out.push_back(digits[byte >> 4]);
    out.push_back(digits[byte & 15]);
  }
  return out;
}

BitVector BitVector::from_hex(const std::string& h, int n) {
  auto nibble = [](char c) -> uint64_t {
    if (c >= '0' && c <= '9') return static_cast<uint64_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<uint64_t>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<uint64_t>(c - 'A' + 10);
    throw std::invalid_argument("bad hex digit");
  };
  BitVector b(n);
  int nbytes = (n + 7) / 8;
  if (static_cast<int>(h.size()) != 2 * nbytes)
    throw std::invalid_argument("hex length does not match dimension");
  for (int j = 0; j < nbytes; ++j) {
    uint64_t byte = (nibble(h[2 * j]) << 4) | nibble(h[2 * j + 1]);
    b.words_[j >> 3] |= byte << ((j & 7) * 8);
  }
  return b;
}

std::string BitVector::to_string01() const {
  std::string s(n_, '0');
  for (int i = 0; i < n_; ++i)
    if (bit(i)) s[i] = '1';
  return s;
}

}  // namespace replic
