#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace replic::detail {

/// FIPS 180-4 SHA-256 over a byte buffer. Self-contained so the seed
/// derivation and the hash-chain construction do not pull in a crypto
/// library; only determinism and collision behavior matter here, not
/// cryptographic strength (which is out of contract).
std::array<uint8_t, 32> sha256(const uint8_t* data, size_t len);

inline std::array<uint8_t, 32> sha256(const std::vector<uint8_t>& v) {
  return sha256(v.data(), v.size());
}
inline std::array<uint8_t, 32> sha256(const std::string& s) {
  return sha256(reinterpret_cast<const uint8_t*>(s.data()), s.size());
}

std::string hex_digest(const std::array<uint8_t, 32>& d);

}  // namespace replic::detail
