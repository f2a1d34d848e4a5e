#pragma once

#include <stdexcept>
#include <string>

namespace kmbranch {

// Domain errors carry a stable name so the CLI and bindings can report them
// uniformly; what() holds the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& msg)
      : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define KMBRANCH_ERROR(E)                                       \
  class E : public Error {                                      \
   public:                                                      \
    explicit E(const std::string& msg) : Error(#E, msg) {}      \
  }

KMBRANCH_ERROR(NotGCM);
KMBRANCH_ERROR(NotAffine);
KMBRANCH_ERROR(IndexOutOfRange);
KMBRANCH_ERROR(NotCoprime);
KMBRANCH_ERROR(NonPositive);
KMBRANCH_ERROR(NotInTitsCone);
KMBRANCH_ERROR(NotStrictlyDominant);
KMBRANCH_ERROR(TwistedUnsupported);
KMBRANCH_ERROR(NotDominantIntegral);
KMBRANCH_ERROR(CutoffUnstable);
KMBRANCH_ERROR(LevelMismatch);
KMBRANCH_ERROR(NotDominant);
KMBRANCH_ERROR(DominantInput);
KMBRANCH_ERROR(InconsistentTruncation);
KMBRANCH_ERROR(IoFailure);
KMBRANCH_ERROR(InternalError);

#undef KMBRANCH_ERROR

}  // namespace kmbranch
