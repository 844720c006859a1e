#ifndef VMTS_LIVENESS_HPP_
#define VMTS_LIVENESS_HPP_

#include <optional>

#include "vmts/replay.hpp"

namespace vmts {

enum class Semantics { Terminal, Lasso };

const char* to_string(Semantics s);

struct LivenessVerdict {
  bool correct = false;
  ClassKeySet pending;
  // For an incorrect run, a position from which a pending class stays enabled
  // through the rest of the run.
  std::optional<std::size_t> witness_index;

  bool operator==(const LivenessVerdict&) const = default;
};

// Finite-run correctness: a finite run is correct iff no class is enabled in
// its final configuration (the one-configuration suffix makes any terminally
// enabled class a standing obligation). Requires a loopless trace; throws
// ReplayError if the trace does not replay.
LivenessVerdict check_terminal(const Trace& trace, const ProtocolInstance& instance);

class NotALassoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Correctness of the infinite run represented by a lasso trace. The loop
// segment must replay for one further iteration (fire steps re-resolved by
// class against regenerated transactions) with per-position volitions and
// enabled-class sets matching the first iteration; this subsumes exact
// configuration equality and admits loops whose machine states drift
// uniformly, such as date-advancing loops. A class is pending iff it is
// enabled at every configuration of the loop and no member of it fires in the
// loop; intermittently enabled classes carry no obligation. Throws
// ReplayError or NotALassoError.
LivenessVerdict check_lasso(const Trace& trace, const ProtocolInstance& instance);

// Dispatches on trace.loop_start.
LivenessVerdict check_run(const Trace& trace, const ProtocolInstance& instance);

}  // namespace vmts

#endif  // VMTS_LIVENESS_HPP_
