#pragma once

#include <stdexcept>
#include <string>

namespace wonderful {

/// Base class of every error raised by the library. `kind()` is a stable
/// machine-readable name used in CLI output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define WONDERFUL_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  }

WONDERFUL_DEFINE_ERROR(InadmissibleRank);
WONDERFUL_DEFINE_ERROR(ParseError);
WONDERFUL_DEFINE_ERROR(RankMismatch);
WONDERFUL_DEFINE_ERROR(IndexOutOfRange);
WONDERFUL_DEFINE_ERROR(ArithmeticOverflow);
WONDERFUL_DEFINE_ERROR(NotIntegral);
WONDERFUL_DEFINE_ERROR(GroupTooLarge);
WONDERFUL_DEFINE_ERROR(NotDominant);
WONDERFUL_DEFINE_ERROR(NotIndivisible);
WONDERFUL_DEFINE_ERROR(NoShortRoot);
WONDERFUL_DEFINE_ERROR(EmptyProduct);
WONDERFUL_DEFINE_ERROR(NotAmple);
WONDERFUL_DEFINE_ERROR(UnknownTable);
WONDERFUL_DEFINE_ERROR(InvariantViolation);

#undef WONDERFUL_DEFINE_ERROR

}  // namespace wonderful
