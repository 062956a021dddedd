/* Copyright (c) the psdmm authors.
 * This source code is licensed under the Apache 2.0 license found in the
 * LICENSE file in the root directory of this source tree.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "psdmm/errors.hpp"
#include "psdmm/rng.hpp"

namespace psdmm {

/// Prime modulus of the working field F_q. Primality is checked once at
/// construction (deterministic Miller-Rabin), so downstream arithmetic can
/// assume a field. Requires 3 <= q < 2^63.
class Modulus {
 public:
  explicit Modulus(std::uint64_t q);

  std::uint64_t value() const { return q_; }

  bool operator==(const Modulus& o) const { return q_ == o.q_; }
  bool operator!=(const Modulus& o) const { return q_ != o.q_; }

  // Arithmetic on canonical residues in [0, q).
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    if (s >= q_) s -= q_;
    return s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + q_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (q_ == kMersenne61) {
      __uint128_t z = static_cast<__uint128_t>(a) * b;
      std::uint64_t lo = static_cast<std::uint64_t>(z) & kMersenne61;
      std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
      std::uint64_t s = lo + hi;  // < 2q, one conditional subtract suffices
      if (s >= kMersenne61) s -= kMersenne61;
      return s;
    }
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % q_);
  }
  std::uint64_t reduce(std::uint64_t a) const { return a % q_; }

  static constexpr std::uint64_t kMersenne61 = (1ULL << 61) - 1;

  /// Default production modulus, 2^61 - 1.
  static const Modulus& mersenne61();

 private:
  std::uint64_t q_;
};

/// Deterministic primality test for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// An element of F_q in canonical form, tagged with its modulus so that
/// cross-field arithmetic is rejected instead of silently mixing moduli.
struct FieldElement {
  std::uint64_t value = 0;    // always in [0, modulus)
  std::uint64_t modulus = 0;  // the q this value lives under

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value == b.value && a.modulus == b.modulus;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }
};

FieldElement make_element(std::uint64_t v, const Modulus& mod);

FieldElement operator+(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a, FieldElement b);
FieldElement operator*(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a);

/// Multiplicative inverse. Throws ZeroInverse on a = 0.
FieldElement fp_inv(FieldElement a);

/// a^e by square-and-multiply, with 0^0 = 1.
FieldElement fp_pow(FieldElement a, std::uint64_t e);

/// `count` pairwise-distinct elements of F_q \ {0}, uniform over ordered
/// tuples and deterministic under the rng seed. Throws FieldTooSmall when
/// count > q - 1.
std::vector<FieldElement> sample_distinct_points(std::size_t count, Rng& rng,
                                                 const Modulus& mod);

}  // namespace psdmm
