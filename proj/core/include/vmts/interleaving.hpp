#ifndef VMTS_INTERLEAVING_HPP_
#define VMTS_INTERLEAVING_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "vmts/trace.hpp"

namespace vmts {

// One entry per combined step: which source trace the step is drawn from.
enum class Side : char { Left = 'L', Right = 'R' };

using InterleavingSchedule = std::vector<Side>;

std::string schedule_string(const InterleavingSchedule& schedule);

class InterleaveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Combines two loopless traces over disjoint agent sets into one trace over
// the union, drawing steps per the schedule. The schedule must contain
// exactly each side's step count (ScheduleMismatch otherwise).
Trace interleave(const Trace& left, const Trace& right,
                 const InterleavingSchedule& schedule);

// All schedules with `lefts` L-entries and `rights` R-entries, in
// lexicographic order (L before R).
std::vector<InterleavingSchedule> all_schedules(std::size_t lefts, std::size_t rights);

}  // namespace vmts

#endif  // VMTS_INTERLEAVING_HPP_
