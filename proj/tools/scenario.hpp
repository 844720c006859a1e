#ifndef VMTS_TOOLS_SCENARIO_HPP_
#define VMTS_TOOLS_SCENARIO_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vmts/protocol.hpp"
#include "vmts/social.hpp"
#include "vmts/trace.hpp"

namespace vmts::cli {

using Json = nlohmann::ordered_json;

enum class ProtocolKind { Sg, Csg, Gcb, Toychain };

const char* to_string(ProtocolKind kind);

// Scenario ingestion fails with this; the CLI maps it to exit 3.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Scenario {
  ProtocolKind protocol = ProtocolKind::Sg;
  AgentSet agents;
  sg::ParentMap parents;  // csg only
  AgentSet bootnodes;     // toychain only
  GenerationBounds bounds;
  std::optional<std::pair<AgentSet, AgentSet>> groups;
  std::vector<Json> steps;  // validated scripted steps, kept verbatim
  std::optional<std::size_t> loop_start;
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

ProtocolSpec scenario_protocol(const Scenario& scenario);
ProtocolInstance scenario_instance(const Scenario& scenario);

// Resolves the class named by a scripted class-spec against a configuration.
// A "redeem" spec resolves to the key of the single-for-single swap class it
// is a guarded variant of.
ClassKey resolve_class_spec(const Scenario& scenario, const Json& spec,
                            const Configuration& c);

// Guard variants of a scripted fire step against a configuration, filtered by
// an optional "by" field. Throws KernelError when the transaction cannot be
// built there (bonds not held, no chain extension, ...).
std::vector<GuardedTransaction> resolve_fire(const Scenario& scenario, const Json& step,
                                             const Configuration& c);

// Resolution + replay of the scripted steps.
struct ScriptReplay {
  Trace trace;  // resolved steps; loop_start copied from the scenario
  std::vector<Configuration> configs;
  // Class fired at each applied step; nullopt for change-volition steps.
  std::vector<std::optional<ClassKey>> fired;
  std::optional<std::size_t> failed_index;
  std::string failure_reason;

  bool ok() const { return !failed_index.has_value(); }
};

ScriptReplay replay_script(const Scenario& scenario, const ProtocolInstance& instance);

}  // namespace vmts::cli

#endif  // VMTS_TOOLS_SCENARIO_HPP_
