#ifndef VMTS_ERRORS_HPP_
#define VMTS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace vmts {

enum class KernelErrorCode {
  DomainMismatch,
  Identity,
  NotEnabled,
  NoChange,
  UnknownClass,
  UnknownAgent,
};

const char* to_string(KernelErrorCode code);

// Raised by kernel operations on precondition violations (firing a
// non-enabled transaction, a no-op volition change, willing a class outside
// the protocol universe, ...).
class KernelError : public std::runtime_error {
 public:
  KernelError(KernelErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  KernelErrorCode code() const { return code_; }

 private:
  KernelErrorCode code_;
};

}  // namespace vmts

#endif  // VMTS_ERRORS_HPP_
