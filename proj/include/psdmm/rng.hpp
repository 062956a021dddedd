/* Copyright (c) the psdmm authors.
 * This source code is licensed under the Apache 2.0 license found in the
 * LICENSE file in the root directory of this source tree.
 */
#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace psdmm {

/// Deterministic random source with named sub-streams.
///
/// Experiments derive one stream per purpose (library contents, the mask
/// matrix, evaluation points, decoy matrices, completion order) from a single
/// root seed, so a run is a pure function of that seed and streams can be
/// consumed in any order without perturbing each other. Built on
/// std::mt19937_64, whose output sequence is fixed by the standard, so results
/// are reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : root_(seed), gen_(mix(seed)) {}

  /// Next raw 64-bit word.
  std::uint64_t next() { return gen_(); }

  /// Unbiased uniform draw from [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound);

  /// Independent stream derived from the root seed and a label. Derivation
  /// depends only on (root seed, name), never on how much this stream has
  /// already been consumed.
  Rng stream(std::string_view name) const;

  /// Independent stream derived from the root seed and an index. Used for
  /// per-sample randomness in audit loops.
  Rng substream(std::uint64_t index) const;

  std::uint64_t root_seed() const { return root_; }

  static std::uint64_t mix(std::uint64_t x);  // splitmix64 finalizer

 private:
  std::uint64_t root_;
  std::mt19937_64 gen_;
};

}  // namespace psdmm
