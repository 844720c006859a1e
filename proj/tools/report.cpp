#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace vmts::cli {

Json json_of_machine_state(const MachineState& s) {
  Json out;
  if (const auto* social = std::get_if<sg::SgState>(&s)) {
    Json friends = Json::array();
    for (const auto& f : social->friends) friends.push_back(f.name());
    out["friends"] = std::move(friends);
    return out;
  }
  if (const auto* bonds = std::get_if<gcb::GcbState>(&s)) {
    out["date"] = bonds->local_date;
    Json holdings = Json::array();
    for (const auto& [bond, count] : bonds->holdings.entries()) {
      holdings.push_back(Json::array({bond.issuer.name(), bond.maturity, count}));
    }
    out["holdings"] = std::move(holdings);
    return out;
  }
  const auto& chain = std::get<toychain::ChainState>(s);
  out["chain"] = chain.chain;
  out["bootnode"] = chain.is_bootnode;
  return out;
}

Json json_of_configuration_states(const Configuration& c) {
  Json out = Json::object();
  for (const auto& [p, state] : c.agents()) {
    out[p.name()] = json_of_machine_state(state.machine);
  }
  return out;
}

Json json_of_volitions(const Configuration& c) {
  Json out = Json::object();
  for (const auto& [p, state] : c.agents()) {
    Json keys = Json::array();
    for (const auto& k : state.volition) keys.push_back(k.label());
    out[p.name()] = std::move(keys);
  }
  return out;
}

Json json_of_keys(const ClassKeySet& keys) {
  Json out = Json::array();
  for (const auto& k : keys) out.push_back(k.label());
  return out;
}

Json json_of_agents(const AgentSet& agents) {
  Json out = Json::array();
  for (const auto& p : agents) out.push_back(p.name());
  return out;
}

Json json_of_step(const Step& step, const ProtocolInstance& instance) {
  Json out;
  if (const auto* cv = std::get_if<ChangeVolitionStep>(&step)) {
    out["kind"] = "will";
    out["agent"] = cv->agent.name();
    Json keys = Json::array();
    for (const auto& k : cv->new_volition) keys.push_back(k.label());
    out["volition"] = std::move(keys);
    return out;
  }
  const auto& f = std::get<FireStep>(step);
  out["kind"] = "fire";
  out["class"] = instance.class_key_of(f.gt.txn).label();
  Json participants = Json::array();
  for (const auto& [p, s] : f.gt.txn.pre) participants.push_back(p.name());
  out["participants"] = std::move(participants);
  Json guard = Json::array();
  for (const auto& g : f.gt.guard) guard.push_back(g.name());
  out["guard"] = std::move(guard);
  return out;
}

Json json_of_trace(const Trace& trace, const ProtocolInstance& instance) {
  Json out;
  Json steps = Json::array();
  for (const auto& step : trace.steps) steps.push_back(json_of_step(step, instance));
  out["steps"] = std::move(steps);
  if (trace.loop_start) {
    out["loop_start"] = *trace.loop_start;
  } else {
    out["loop_start"] = nullptr;
  }
  return out;
}

namespace {

void text_lines(const Json& value, const std::string& prefix, std::ostringstream& os) {
  if (value.is_object()) {
    if (value.empty()) {
      os << prefix << ": {}\n";
      return;
    }
    for (const auto& [key, child] : value.items()) {
      text_lines(child, prefix.empty() ? key : prefix + "." + key, os);
    }
    return;
  }
  if (value.is_array()) {
    const bool scalars = std::all_of(value.begin(), value.end(), [](const Json& v) {
      return v.is_primitive();
    });
    if (scalars) {
      os << prefix << ":";
      for (const auto& v : value) {
        os << ' ';
        if (v.is_string()) {
          os << v.get<std::string>();
        } else {
          os << v.dump();
        }
      }
      os << '\n';
      return;
    }
    std::size_t index = 0;
    for (const auto& child : value) {
      text_lines(child, prefix + "[" + std::to_string(index++) + "]", os);
    }
    return;
  }
  os << prefix << ": ";
  if (value.is_string()) {
    os << value.get<std::string>();
  } else {
    os << value.dump();
  }
  os << '\n';
}

}  // namespace

std::string text_of_report(const Json& report) {
  std::ostringstream os;
  text_lines(report, "", os);
  return os.str();
}

std::string serialize_report(const Json& report, const std::string& format) {
  if (format == "text") return text_of_report(report);
  return report.dump(2) + "\n";
}

}  // namespace vmts::cli
