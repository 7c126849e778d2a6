#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace codp {

// Base of all domain-level failures. `code` is the stable machine-readable
// tag that the CLI reproduces in structured error objects.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

#define CODP_DEFINE_ERROR(Name)                         \
  class Name : public DomainError {                     \
  public:                                               \
    explicit Name(const std::string& what)              \
        : DomainError(#Name, what) {}                   \
  }

CODP_DEFINE_ERROR(InvalidPoset);
CODP_DEFINE_ERROR(InvalidAntichain);
CODP_DEFINE_ERROR(ElementNotInPoset);
CODP_DEFINE_ERROR(CarrierTooLarge);
CODP_DEFINE_ERROR(NotMonotone);
CODP_DEFINE_ERROR(ObjectMismatch);
CODP_DEFINE_ERROR(MonadMismatch);
CODP_DEFINE_ERROR(InvalidUncertain);
CODP_DEFINE_ERROR(UnboundName);
CODP_DEFINE_ERROR(LoopFactorMissing);
CODP_DEFINE_ERROR(ObjectiveMonadMismatch);
CODP_DEFINE_ERROR(NoFeasibleParameter);
CODP_DEFINE_ERROR(ZeroEvidence);
CODP_DEFINE_ERROR(NoFeasibleTheta);
CODP_DEFINE_ERROR(InvalidObservation);
CODP_DEFINE_ERROR(ParseError);

#undef CODP_DEFINE_ERROR

}  // namespace codp
