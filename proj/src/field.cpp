/* Copyright (c) the psdmm authors.
 * This source code is licensed under the Apache 2.0 license found in the
 * LICENSE file in the root directory of this source tree.
 */
#include "psdmm/field.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace psdmm {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Modulus::Modulus(std::uint64_t q) : q_(q) {
  if (q < 3) throw InvalidModulus("modulus must be at least 3");
  if (q >= (1ULL << 63)) throw InvalidModulus("modulus must fit in 63 bits");
  if (!is_prime_u64(q)) throw InvalidModulus("modulus is not prime");
}

const Modulus& Modulus::mersenne61() {
  static const Modulus m(kMersenne61);
  return m;
}

FieldElement make_element(std::uint64_t v, const Modulus& mod) {
  return FieldElement{mod.reduce(v), mod.value()};
}

static void check_same_modulus(const FieldElement& a, const FieldElement& b) {
  if (a.modulus != b.modulus)
    throw ModulusMismatch("field elements from different moduli");
}

FieldElement operator+(FieldElement a, FieldElement b) {
  check_same_modulus(a, b);
  std::uint64_t s = a.value + b.value;
  if (s >= a.modulus) s -= a.modulus;
  return FieldElement{s, a.modulus};
}

FieldElement operator-(FieldElement a, FieldElement b) {
  check_same_modulus(a, b);
  return FieldElement{
      a.value >= b.value ? a.value - b.value : a.value + a.modulus - b.value,
      a.modulus};
}

FieldElement operator-(FieldElement a) {
  return FieldElement{a.value == 0 ? 0 : a.modulus - a.value, a.modulus};
}

FieldElement operator*(FieldElement a, FieldElement b) {
  check_same_modulus(a, b);
  if (a.modulus == Modulus::kMersenne61) {
    __uint128_t z = static_cast<__uint128_t>(a.value) * b.value;
    std::uint64_t lo = static_cast<std::uint64_t>(z) & Modulus::kMersenne61;
    std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
    std::uint64_t s = lo + hi;
    if (s >= Modulus::kMersenne61) s -= Modulus::kMersenne61;
    return FieldElement{s, a.modulus};
  }
  return FieldElement{mulmod_u64(a.value, b.value, a.modulus), a.modulus};
}

FieldElement fp_pow(FieldElement a, std::uint64_t e) {
  FieldElement r{1 % a.modulus, a.modulus};
  while (e) {
    if (e & 1) r = r * a;
    a = a * a;
    e >>= 1;
  }
  return r;
}

FieldElement fp_inv(FieldElement a) {
  if (a.value == 0) throw ZeroInverse("inverse of zero");
  return fp_pow(a, a.modulus - 2);  // Fermat; modulus is prime
}

std::vector<FieldElement> sample_distinct_points(std::size_t count, Rng& rng,
                                                 const Modulus& mod) {
  const std::uint64_t q = mod.value();
  if (count > q - 1)
    throw FieldTooSmall("cannot sample " + std::to_string(count) +
                        " distinct nonzero points from a field of size " +
                        std::to_string(q));
  std::vector<FieldElement> out;
  out.reserve(count);
  if (count * 2 >= q - 1) {
    // Dense case (small fields): partial Fisher-Yates over all of F_q \ {0}.
    std::vector<std::uint64_t> pool(q - 1);
    std::iota(pool.begin(), pool.end(), 1);
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
      std::swap(pool[i], pool[j]);
      out.push_back(FieldElement{pool[i], q});
    }
  } else {
    std::unordered_set<std::uint64_t> seen;
    while (out.size() < count) {
      std::uint64_t v = 1 + rng.below(q - 1);
      if (seen.insert(v).second) out.push_back(FieldElement{v, q});
    }
  }
  return out;
}

}  // namespace psdmm
