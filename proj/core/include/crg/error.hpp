#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crg {

enum class Errc {
  RingMismatch,
  AlphaSquared,
  DivisionByZero,
  AlphaNotInvertible,
  DimensionMismatch,
  RankDeficient,
  ZeroDirection,
  EmptySubspace,
  InvalidParameters,
  TooLarge,
  UnknownGroup,
  NotRankOne,
  ConstantNotAdmissible,
  NotAMember,
  ExpectedPositiveGroup,
  CounterexampleRejected,
  ParseError,
  Internal,
};

std::string_view errc_name(Errc code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

#define CRG_CHECK(cond, code, msg)                  \
  do {                                              \
    if (!(cond)) throw ::crg::Error((code), (msg)); \
  } while (0)

}  // namespace crg
