// Copyright 2026 The qcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qcat/experiments.h"

namespace qcat {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {
    "version",  "name",    "topology",   "p",          "q",
    "xi",       "phi1",    "phi2",       "pump_T",     "c_weights",
    "sender",   "receiver", "t_max",     "trials",     "seed",
    "observables", "initial", "allow_noncausal"};

ObservableKind observable_from_name(const std::string& name) {
  if (name == "fidelity") return ObservableKind::fidelity;
  if (name == "mean_position") return ObservableKind::mean_position;
  if (name == "conductivity") return ObservableKind::conductivity;
  if (name == "diagnostics") return ObservableKind::diagnostics;
  throw std::invalid_argument("config: unknown observable '" + name + "'");
}

json config_to_json_obj(const ExperimentConfig& c) {
  json j;
  j["version"] = kConfigSchemaVersion;
  j["name"] = c.name;
  j["topology"] = {
      {"n_sites", c.topology.n_sites},
      {"boundary", c.topology.is_ring() ? "ring" : "chain"},
  };
  j["p"] = c.p;
  j["q"] = c.q;
  j["xi"] = c.xi;
  j["phi1"] = c.phi1;
  j["phi2"] = c.phi2;
  j["pump_T"] = c.pump_T;
  j["c_weights"] = c.c_weights;
  j["sender"] = c.sender;
  if (c.receiver.has_value()) {
    j["receiver"] = *c.receiver;
  } else {
    j["receiver"] = nullptr;
  }
  j["t_max"] = c.t_max;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  json obs = json::array();
  for (ObservableKind kind : c.observables) obs.push_back(observable_name(kind));
  j["observables"] = obs;
  j["initial"] =
      c.initial == InitialState::haar ? "haar" : "single_excitation";
  j["allow_noncausal"] = c.allow_noncausal;
  return j;
}

ExperimentConfig config_from_json_obj(const json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("config: expected a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (kKnownKeys.find(key) == kKnownKeys.end()) {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  if (!j.contains("version") || !j["version"].is_number_integer() ||
      j["version"].get<int>() != kConfigSchemaVersion) {
    throw std::invalid_argument(
        "config: missing or unsupported schema version (expected " +
        std::to_string(kConfigSchemaVersion) + ")");
  }

  ExperimentConfig c;
  if (j.contains("name")) c.name = j["name"].get<std::string>();

  if (!j.contains("topology")) {
    throw std::invalid_argument("config: missing 'topology'");
  }
  const json& t = j["topology"];
  for (const auto& [key, value] : t.items()) {
    (void)value;
    if (key != "n_sites" && key != "boundary") {
      throw std::invalid_argument("config: unknown topology key '" + key +
                                  "'");
    }
  }
  const std::size_t n = t.at("n_sites").get<std::size_t>();
  const std::string boundary = t.at("boundary").get<std::string>();
  if (boundary == "ring") {
    c.topology = Topology::ring(n);
  } else if (boundary == "chain") {
    c.topology = Topology::chain(n);
  } else {
    throw std::invalid_argument("config: boundary must be 'chain' or 'ring'");
  }

  auto get_double = [&](const char* key, double fallback) {
    return j.contains(key) ? j[key].get<double>() : fallback;
  };
  c.p = get_double("p", c.p);
  c.q = get_double("q", c.q);
  c.xi = get_double("xi", c.xi);
  c.phi1 = get_double("phi1", c.phi1);
  c.phi2 = get_double("phi2", c.phi2);
  c.pump_T = get_double("pump_T", c.pump_T);
  if (j.contains("c_weights")) {
    const auto weights = j["c_weights"].get<std::vector<double>>();
    if (weights.size() != 3) {
      throw std::invalid_argument("config: c_weights needs 3 entries");
    }
    std::copy(weights.begin(), weights.end(), c.c_weights.begin());
  }
  if (j.contains("sender")) c.sender = j["sender"].get<std::size_t>();
  if (j.contains("receiver") && !j["receiver"].is_null()) {
    c.receiver = j["receiver"].get<std::size_t>();
  }
  if (j.contains("t_max")) c.t_max = j["t_max"].get<std::size_t>();
  if (j.contains("trials")) c.trials = j["trials"].get<std::size_t>();
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("observables")) {
    c.observables.clear();
    for (const json& o : j["observables"]) {
      c.observables.push_back(observable_from_name(o.get<std::string>()));
    }
  }
  if (j.contains("initial")) {
    const std::string initial = j["initial"].get<std::string>();
    if (initial == "haar") {
      c.initial = InitialState::haar;
    } else if (initial == "single_excitation" || initial == "ses") {
      c.initial = InitialState::single_excitation;
    } else {
      throw std::invalid_argument(
          "config: initial must be 'haar' or 'single_excitation'");
    }
  }
  if (j.contains("allow_noncausal")) {
    c.allow_noncausal = j["allow_noncausal"].get<bool>();
  }
  c.validate();
  return c;
}

}  // namespace

std::string config_to_json(const ExperimentConfig& config) {
  return config_to_json_obj(config).dump(2);
}

ExperimentConfig config_from_json(const std::string& text) {
  return config_from_json_obj(json::parse(text));
}

ExperimentConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + file.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json(buf.str());
}

std::vector<ExperimentConfig> load_sweep(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw std::runtime_error("cannot open sweep file: " + file.string());
  }
  const json j = json::parse(in);
  std::vector<ExperimentConfig> configs;
  if (j.is_array()) {
    for (const json& item : j) configs.push_back(config_from_json_obj(item));
  } else if (j.is_object() && j.contains("configs")) {
    for (const auto& [key, value] : j.items()) {
      (void)value;
      if (key != "configs" && key != "version") {
        throw std::invalid_argument("sweep: unknown key '" + key + "'");
      }
    }
    if (j.contains("version") &&
        j["version"].get<int>() != kConfigSchemaVersion) {
      throw std::invalid_argument("sweep: unsupported schema version");
    }
    for (const json& item : j["configs"]) {
      configs.push_back(config_from_json_obj(item));
    }
  } else {
    throw std::invalid_argument(
        "sweep: expected an array of configs or {\"configs\": [...]}");
  }
  if (configs.empty()) {
    throw std::invalid_argument("sweep: no configs given");
  }
  return configs;
}

}  // namespace qcat
