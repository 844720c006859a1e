#ifndef VMTS_TOOLS_REPORT_HPP_
#define VMTS_TOOLS_REPORT_HPP_

#include <string>

#include "scenario.hpp"
#include "vmts/checkers.hpp"

namespace vmts::cli {

Json json_of_machine_state(const MachineState& s);
Json json_of_configuration_states(const Configuration& c);
Json json_of_volitions(const Configuration& c);
Json json_of_keys(const ClassKeySet& keys);
Json json_of_step(const Step& step, const ProtocolInstance& instance);
Json json_of_trace(const Trace& trace, const ProtocolInstance& instance);
Json json_of_agents(const AgentSet& agents);

// Flat deterministic text rendering of a report object.
std::string text_of_report(const Json& report);

// Final serialization: pretty JSON or text, newline-terminated.
std::string serialize_report(const Json& report, const std::string& format);

}  // namespace vmts::cli

#endif  // VMTS_TOOLS_REPORT_HPP_
