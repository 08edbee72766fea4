#pragma once

#include <stdexcept>
#include <string>

namespace cdo {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidVertexError : Error { using Error::Error; };
struct NoSuchColorError : Error { using Error::Error; };
struct NoSuchColorInComponentError : Error { using Error::Error; };
struct NoSuchColorInTreeError : Error { using Error::Error; };
struct InvalidKError : Error { using Error::Error; };
struct EmptyInputError : Error { using Error::Error; };
struct InvalidRangeError : Error { using Error::Error; };
struct NotATreeError : Error { using Error::Error; };
struct KeyNotFoundError : Error { using Error::Error; };
struct InvalidDistortionError : Error { using Error::Error; };
struct RetryBudgetExceededError : Error { using Error::Error; };
struct InvalidBaseError : Error { using Error::Error; };
struct ContractViolationError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct VariantError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };

}  // namespace cdo
