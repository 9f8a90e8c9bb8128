#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace phalanx {

// Base of all domain errors. `name()` is the stable machine-readable code
// surfaced by the CLI; what() carries the human detail.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define PHALANX_ERROR(NAME)                        \
  struct NAME : Error {                            \
    explicit NAME(const std::string& w)            \
        : Error(#NAME, w) {}                       \
  }

PHALANX_ERROR(RatioOutOfRange);
PHALANX_ERROR(AngleOutOfRange);
PHALANX_ERROR(NonUnitDirection);
PHALANX_ERROR(InvalidControls);
PHALANX_ERROR(DepthCapExceeded);
PHALANX_ERROR(SizeCapExceeded);
PHALANX_ERROR(BadLength);
PHALANX_ERROR(NotGraspable);
PHALANX_ERROR(MixedSpecs);
PHALANX_ERROR(InvalidHandSpec);
PHALANX_ERROR(BadInput);

#undef PHALANX_ERROR

}  // namespace phalanx
