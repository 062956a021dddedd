/* Copyright (c) the psdmm authors.
 * This source code is licensed under the Apache 2.0 license found in the
 * LICENSE file in the root directory of this source tree.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace psdmm {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidModulus : Error {
  using Error::Error;
};
struct ModulusMismatch : Error {
  using Error::Error;
};
struct ZeroInverse : Error {
  using Error::Error;
};
struct FieldTooSmall : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct IndivisibleDimensions : Error {
  using Error::Error;
};
struct RaggedBlocks : Error {
  using Error::Error;
};
struct DuplicatePoints : Error {
  using Error::Error;
};
struct CountMismatch : Error {
  using Error::Error;
};
struct SingularSystem : Error {
  using Error::Error;
};
struct NotEnoughResponses : Error {
  using Error::Error;
};
struct NonMdsExponents : Error {
  using Error::Error;
};
struct ConfigInvalid : Error {
  using Error::Error;
};
struct ParseFailure : Error {
  using Error::Error;
};

}  // namespace psdmm
