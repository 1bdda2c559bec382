#include "snc/scenario_json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace snc {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) known = true;
    if (!known)
      throw std::invalid_argument("scenario: unknown key '" + item.key() + "' in " + where);
  }
}

IncrementModel parse_model(const json& obj, ProcessRole role, const std::string& where) {
  if (!obj.is_object()) throw std::invalid_argument("scenario: " + where + " must be an object");
  const std::string type = obj.value("type", "");
  if (type == "poisson" || type == "deterministic") {
    reject_unknown_keys(obj, {"type", "rate"}, where);
    if (!obj.contains("rate")) throw std::invalid_argument("scenario: " + where + " needs a rate");
    const double rate = obj.at("rate").get<double>();
    return type == "poisson" ? IncrementModel::poisson(rate, role)
                             : IncrementModel::deterministic(rate, role);
  }
  if (type == "bernoulli") {
    reject_unknown_keys(obj, {"type", "prob", "size"}, where);
    if (!obj.contains("prob") || !obj.contains("size"))
      throw std::invalid_argument("scenario: " + where + " needs prob and size");
    return IncrementModel::bernoulli(obj.at("prob").get<double>(), obj.at("size").get<double>(),
                                     role);
  }
  throw std::invalid_argument("scenario: " + where +
                              " type must be poisson, deterministic or bernoulli");
}

json model_to_json(const IncrementModel& m) {
  json out;
  out["type"] = to_string(m.kind);
  if (m.kind == ModelKind::Bernoulli) {
    out["prob"] = m.prob;
    out["size"] = m.size;
  } else {
    out["rate"] = m.rate;
  }
  return out;
}

}  // namespace

ScenarioFile parse_scenario_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("scenario: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("scenario: document must be a JSON object");
  reject_unknown_keys(doc, {"arrival", "services", "sim"}, "document");
  if (!doc.contains("arrival") || !doc.contains("services"))
    throw std::invalid_argument("scenario: arrival and services are required");
  if (!doc.at("services").is_array() || doc.at("services").empty())
    throw std::invalid_argument("scenario: services must be a non-empty array");

  ScenarioFile out;
  IncrementModel arrival = parse_model(doc.at("arrival"), ProcessRole::Arrival, "arrival");
  std::vector<IncrementModel> services;
  for (std::size_t i = 0; i < doc.at("services").size(); ++i)
    services.push_back(parse_model(doc.at("services")[i], ProcessRole::Service,
                                   "services[" + std::to_string(i) + "]"));
  out.scenario = TandemScenario::make(std::move(arrival), std::move(services));

  if (doc.contains("sim")) {
    const json& sim = doc.at("sim");
    if (!sim.is_object()) throw std::invalid_argument("scenario: sim must be an object");
    reject_unknown_keys(sim, {"horizon", "replications", "seed", "warmup"}, "sim");
    out.has_sim = true;
    out.sim.horizon = sim.value("horizon", out.sim.horizon);
    out.sim.replications = sim.value("replications", out.sim.replications);
    out.sim.seed = sim.value("seed", out.sim.seed);
    out.sim.warmup = sim.value("warmup", out.sim.warmup);
    if (out.sim.horizon < 1) throw std::invalid_argument("scenario: sim.horizon must be >= 1");
    if (out.sim.replications < 1)
      throw std::invalid_argument("scenario: sim.replications must be >= 1");
  }
  return out;
}

ScenarioFile load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("scenario: cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_json(buffer.str());
}

std::string scenario_to_json(const ScenarioFile& file) {
  json doc;
  doc["arrival"] = model_to_json(file.scenario.arrival);
  doc["services"] = json::array();
  for (const auto& s : file.scenario.services) doc["services"].push_back(model_to_json(s));
  if (file.has_sim) {
    doc["sim"] = {{"horizon", file.sim.horizon},
                  {"replications", file.sim.replications},
                  {"seed", file.sim.seed},
                  {"warmup", file.sim.warmup}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace snc
