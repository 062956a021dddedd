/* Copyright (c) the psdmm authors.
 * This source code is licensed under the Apache 2.0 license found in the
 * LICENSE file in the root directory of this source tree.
 */
#include "psdmm/rng.hpp"

#include <stdexcept>

namespace psdmm {

std::uint64_t Rng::mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
  // Rejection sampling: 2^64 mod bound values are discarded from the low end
  // so every residue class is hit equally often.
  const std::uint64_t cutoff = (-bound) % bound;  // == 2^64 mod bound
  std::uint64_t x = next();
  while (x < cutoff) x = next();
  return (x - cutoff) % bound;
}

static std::uint64_t hash_name(std::string_view name) {
  // FNV-1a
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

Rng Rng::stream(std::string_view name) const {
  return Rng(mix(root_ ^ hash_name(name)));
}

Rng Rng::substream(std::uint64_t index) const {
  return Rng(mix(root_ + 0x632be59bd9b4e019ULL * (index + 1)));
}

}  // namespace psdmm
