#ifndef VMTS_TRACE_HPP_
#define VMTS_TRACE_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "vmts/configuration.hpp"
#include "vmts/transaction.hpp"

namespace vmts {

struct ChangeVolitionStep {
  AgentId agent;
  ClassKeySet new_volition;

  bool operator==(const ChangeVolitionStep&) const = default;
  auto operator<=>(const ChangeVolitionStep&) const = default;
};

struct FireStep {
  GuardedTransaction gt;

  bool operator==(const FireStep&) const = default;
  auto operator<=>(const FireStep&) const = default;
};

using Step = std::variant<ChangeVolitionStep, FireStep>;

// A finite run script: initial configuration, steps, and an optional lasso
// loop start. The loop segment steps[loop_start..] stands for an infinite
// repetition of itself; see check_lasso for the validity conditions.
struct Trace {
  Configuration initial;
  std::vector<Step> steps;
  std::optional<std::size_t> loop_start;

  std::size_t prefix_length() const {
    return loop_start ? *loop_start : steps.size();
  }
  std::size_t loop_length() const {
    return loop_start ? steps.size() - *loop_start : 0;
  }

  bool operator==(const Trace&) const = default;
};

}  // namespace vmts

#endif  // VMTS_TRACE_HPP_
