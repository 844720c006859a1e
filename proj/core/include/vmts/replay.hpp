#ifndef VMTS_REPLAY_HPP_
#define VMTS_REPLAY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "vmts/protocol.hpp"
#include "vmts/trace.hpp"

namespace vmts {

struct StepFailure {
  std::size_t index = 0;
  KernelErrorCode code = KernelErrorCode::NotEnabled;
  std::string reason;
};

struct ReplayOutcome {
  // configs[i] is the configuration before steps[i]; configs.back() is final.
  std::vector<Configuration> configs;
  std::optional<StepFailure> failure;

  bool ok() const { return !failure.has_value(); }
  const Configuration& final_config() const { return configs.back(); }
};

// Applies the trace's steps from its initial configuration via the kernel
// operations. Stops at the first inapplicable step, identifying it. Volitional
// containment (every volition inside the instance universe) is asserted at
// every configuration along the way.
ReplayOutcome replay(const Trace& trace, const ProtocolInstance& instance);

class ReplayError : public std::runtime_error {
 public:
  ReplayError(StepFailure failure, const std::string& message)
      : std::runtime_error(message), failure_(std::move(failure)) {}
  const StepFailure& failure() const { return failure_; }

 private:
  StepFailure failure_;
};

// replay() that throws ReplayError instead of reporting.
std::vector<Configuration> replay_or_throw(const Trace& trace,
                                           const ProtocolInstance& instance);

}  // namespace vmts

#endif  // VMTS_REPLAY_HPP_
