#include "replic/seedstream.hpp"

#include <stdexcept>

#include "replic/detail/sha256.hpp"

namespace replic {

namespace {

constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ull;

uint64_t splitmix_mix(uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

void append_u64_le(std::vector<uint8_t>& buf, uint64_t v) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

std::array<uint64_t, 4> digest_to_words(const std::array<uint8_t, 32>& d) {
  std::array<uint64_t, 4> w{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 8; ++j)
      w[i] |= uint64_t{d[8 * i + j]} << (8 * j);
  return w;
}

}  // namespace

SeedStream::SeedStream(uint64_t root_seed, Channel channel)
    : root_seed_(root_seed), channel_(channel) {
  std::vector<uint8_t> buf;
  const char* tag = "replic-root";
  buf.insert(buf.end(), tag, tag + 11);
  append_u64_le(buf, root_seed);
  buf.push_back(channel == Channel::shared ? 0 : 1);
  key_ = digest_to_words(detail::sha256(buf.data(), buf.size()));
}

SeedStream SeedStream::derive(std::string_view label) const {
  if (label.empty()) throw std::invalid_argument("derive: empty label");
  SeedStream child = *this;
  child.counter_ = 0;
  child.path_.push_back(std::string(label));
  std::vector<uint8_t> buf;
  for (uint64_t w : key_) append_u64_le(buf, w);
  append_u64_le(buf, label.size());
  buf.insert(buf.end(), label.begin(), label.end());
  child.key_ = digest_to_words(detail::sha256(buf.data(), buf.size()));
  return child;
}

uint64_t SeedStream::next_u64() {
  ++counter_;
  return splitmix_mix(key_[0] + kGolden * counter_) ^ key_[1];
}

double SeedStream::uniform_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

uint64_t SeedStream::below(uint64_t n) {
  if (n == 0) throw std::invalid_argument("below: n == 0");
  // Rejection from the top to stay unbiased.
  uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % n;
  uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % n;
}

BitVector SeedStream::random_bits(int n) {
  if (n < 0) throw std::invalid_argument("random_bits: n < 0");
  BitVector out(n);
  for (int i = 0; i < n; i += 64) {
    uint64_t w = next_u64();
    for (int j = i; j < n && j < i + 64; ++j)
      out.set(j, static_cast<int>((w >> (j - i)) & 1u));
  }
  return out;
}

int SeedStream::keyed_bit(const BitVector& x) const {
  std::vector<uint8_t> buf;
  for (uint64_t w : key_) append_u64_le(buf, w);
  buf.push_back('p');
  buf.push_back('f');
  append_u64_le(buf, static_cast<uint64_t>(x.size()));
  for (uint64_t w : x.words()) append_u64_le(buf, w);
  return detail::sha256(buf.data(), buf.size())[0] & 1;
}

std::string SeedStream::key_fingerprint() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  uint64_t fp = key_[0] ^ key_[2];
  for (int i = 15; i >= 0; --i) s.push_back(digits[(fp >> (4 * i)) & 15]);
  return s;
}

}  // namespace replic
