#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace orlicz_lab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConstructionError : Error { using Error::Error; };
struct NonFiniteNearPoint : Error { using Error::Error; };
struct PrecisionLoss : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct HullDegenerate : Error { using Error::Error; };
struct InvalidProfile : Error { using Error::Error; };
struct PMinusNotGreaterThanOne : Error { using Error::Error; };
struct GridNotClosed : Error { using Error::Error; };
struct AtomMismatch : Error { using Error::Error; };
struct SupportNotCovered : Error { using Error::Error; };

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
      : Error(what), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

struct UnknownFunction : ParseError { using ParseError::ParseError; };

}  // namespace orlicz_lab
