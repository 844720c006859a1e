#include "vmts/interleaving.hpp"

#include "vmts/kernel.hpp"

namespace vmts {

std::string schedule_string(const InterleavingSchedule& schedule) {
  std::string out;
  out.reserve(schedule.size());
  for (Side s : schedule) out.push_back(static_cast<char>(s));
  return out;
}

Trace interleave(const Trace& left, const Trace& right,
                 const InterleavingSchedule& schedule) {
  if (left.loop_start || right.loop_start) {
    throw InterleaveError("interleave expects loopless traces");
  }
  std::size_t lefts = 0;
  for (Side s : schedule) {
    if (s == Side::Left) ++lefts;
  }
  if (schedule.size() != left.steps.size() + right.steps.size() ||
      lefts != left.steps.size()) {
    throw InterleaveError("ScheduleMismatch: schedule does not cover both traces");
  }
  Trace out;
  out.initial = merge_configurations(left.initial, right.initial);
  out.steps.reserve(schedule.size());
  std::size_t i = 0;
  std::size_t j = 0;
  for (Side s : schedule) {
    if (s == Side::Left) {
      out.steps.push_back(left.steps[i++]);
    } else {
      out.steps.push_back(right.steps[j++]);
    }
  }
  return out;
}

namespace {

void schedules_rec(std::size_t lefts, std::size_t rights, InterleavingSchedule& prefix,
                   std::vector<InterleavingSchedule>& out) {
  if (lefts == 0 && rights == 0) {
    out.push_back(prefix);
    return;
  }
  if (lefts > 0) {
    prefix.push_back(Side::Left);
    schedules_rec(lefts - 1, rights, prefix, out);
    prefix.pop_back();
  }
  if (rights > 0) {
    prefix.push_back(Side::Right);
    schedules_rec(lefts, rights - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<InterleavingSchedule> all_schedules(std::size_t lefts, std::size_t rights) {
  std::vector<InterleavingSchedule> out;
  InterleavingSchedule prefix;
  schedules_rec(lefts, rights, prefix, out);
  return out;
}

}  // namespace vmts
