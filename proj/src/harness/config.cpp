// Copyright 2026 The sptprobe Authors
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

#include "sptprobe/harness/config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <stdexcept>

#include "sptprobe/noise/channels.hpp"

namespace sptprobe::harness {
namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument("config: " + what); }

void check_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(where + " must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!ok.count(key)) fail("unknown key '" + key + "' in " + where);
  }
}

template <class T>
T get(const Json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(where + "." + key + ": " + e.what());
  }
}

unsigned get_unsigned(const Json& obj, const char* key, const std::string& where) {
  const Json& v = obj.at(key);
  if (!v.is_number_unsigned()) fail(where + "." + key + " must be a non-negative integer");
  return v.get<unsigned>();
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return Json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("'" + path + "': " + e.what());
  }
}

ChannelSpec parse_channel_spec(const Json& doc, const std::string& where) {
  check_keys(doc, where, {"channel", "p"});
  ChannelSpec spec;
  spec.kind = parse_channel_kind(get<std::string>(doc, "channel", where));
  if (doc.contains("p")) spec.p = get<double>(doc, "p", where);
  if (spec.kind != ChannelKind::none && !(spec.p >= 0.0 && spec.p <= 1.0)) {
    fail(where + ".p must lie in [0, 1]");
  }
  return spec;
}

ReadoutBias parse_readout(const Json& doc, const std::string& where) {
  check_keys(doc, where, {"epsilon", "variant"});
  ReadoutBias bias;
  if (doc.contains("epsilon")) bias.epsilon = get<double>(doc, "epsilon", where);
  if (doc.contains("variant")) bias.variant = parse_bias_variant(get<std::string>(doc, "variant", where));
  try {
    bias.validate();
  } catch (const std::invalid_argument& e) {
    fail(where + ": " + e.what());
  }
  return bias;
}

Json channel_json(const ChannelSpec& s) {
  Json j;
  j["channel"] = to_string(s.kind);
  j["p"] = s.p;
  return j;
}

std::vector<double> parse_alpha_grid(const Json& doc) {
  if (doc.is_array()) return doc.get<std::vector<double>>();
  check_keys(doc, "teleport.alpha", {"start", "stop", "points"});
  const double start = get<double>(doc, "start", "teleport.alpha");
  const double stop = get<double>(doc, "stop", "teleport.alpha");
  const unsigned n = get_unsigned(doc, "points", "teleport.alpha");
  std::vector<double> out;
  for (unsigned i = 0; i < n; ++i) out.push_back(n == 1 ? start : start + (stop - start) * i / (n - 1));
  return out;
}

Complex parse_character(const Json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2) return {v[0].get<double>(), v[1].get<double>()};
  fail("characters must be numbers or [re, im] pairs");
}

}  // namespace

const char* to_string(Experiment e) {
  switch (e) {
    case Experiment::entropy: return "entropy";
    case Experiment::resolved: return "resolved";
    case Experiment::teleport: return "teleport";
    case Experiment::classify: return "classify-noise";
    case Experiment::oracle: return "oracle";
  }
  return "?";
}

Experiment parse_experiment(std::string_view text) {
  for (Experiment e : {Experiment::entropy, Experiment::resolved, Experiment::teleport,
                       Experiment::classify, Experiment::oracle}) {
    if (text == to_string(e)) return e;
  }
  fail("unknown experiment '" + std::string(text) + "'");
}

const char* to_string(BetaMode m) { return m == BetaMode::plus ? "plus" : "minus"; }

BetaMode parse_beta_mode(std::string_view text) {
  if (text == "plus") return BetaMode::plus;
  if (text == "minus") return BetaMode::minus;
  fail("beta mode must be 'plus' or 'minus'");
}

std::vector<double> TeleportSweep::default_grid() {
  std::vector<double> g(21);
  for (int i = 0; i <= 20; ++i) g[static_cast<std::size_t>(i)] = std::numbers::pi * i / 20.0;
  return g;
}

std::string ClassifyEntry::label() const {
  return kind == Kind::readout_bias ? "readout_bias" : to_string(channel.kind);
}

double ClassifyEntry::parameter() const {
  return kind == Kind::readout_bias ? bias.epsilon : channel.p;
}

std::vector<ClassifyEntry> default_classify_entries() {
  std::vector<ClassifyEntry> out(3);
  out[0].channel = {ChannelKind::dephasing, 0.1};
  out[1].channel = {ChannelKind::lowering_depolarizing, 0.1};
  out[2].kind = ClassifyEntry::Kind::readout_bias;
  out[2].bias = ReadoutBias{0.07};
  return out;
}

void ExperimentConfig::validate() const {
  if (L < 2) fail("L must be >= 2");
  if (boundary == Boundary::periodic && (L < 4 || L % 2)) fail("periodic chains need even L >= 4");
  if (runs == 0) fail("runs must be >= 1");
  const bool sampled = experiment == Experiment::entropy || experiment == Experiment::resolved ||
                       experiment == Experiment::teleport;
  if (sampled && shots < 100) fail("shots must be >= 100");
  const bool mixed = noise.has_gate_noise();
  switch (experiment) {
    case Experiment::entropy:
    case Experiment::resolved:
      if (2 * L > (mixed ? kDefaultMaxMixedQubits : kDefaultMaxQubits)) {
        fail("two copies of L=" + std::to_string(L) + " exceed the " +
             (mixed ? std::string("density-matrix") : std::string("state-vector")) + " limit");
      }
      if (experiment == Experiment::resolved && boundary != Boundary::open) {
        fail("the resolved experiment supports open chains only");
      }
      break;
    case Experiment::teleport:
      if (teleport.alphas.empty()) fail("teleport alpha grid is empty");
      if (teleport.modes.empty()) fail("teleport beta modes are empty");
      if (teleport.kind == TeleportKind::none && teleport.alphas.size() > 1) {
        fail("kind 'none' ignores the angles; use a single grid point");
      }
      break;
    case Experiment::classify:
      if (classify.empty()) fail("classify.channels is empty");
      if (state != StatePrep::cluster) fail("classify-noise needs the cluster state");
      [[fallthrough]];
    case Experiment::oracle:
      if (L > kDefaultMaxMixedQubits) fail("L exceeds the density-matrix limit");
      break;
  }
  if (max_moment < 1) fail("oracle.max_moment must be >= 1");
  if (symmetry) {
    if (symmetry->l_a < 1 || symmetry->l_a > L) fail("symmetry.L_A must lie in 1..L");
    for (const auto& op : symmetry->operators) {
      if (op.n_sites() != symmetry->l_a) fail("symmetry operators must act on L_A sites");
    }
    symmetry->action();  // throws on an invalid representation
  }
}

AbelianGroup parse_group(const Json& doc) {
  if (doc.is_string()) {
    // "Z4", "Z2xZ2", ...
    const std::string name = doc.get<std::string>();
    std::optional<AbelianGroup> g;
    std::size_t pos = 0;
    while (pos < name.size()) {
      if (name[pos] != 'Z') fail("group name '" + name + "' must look like Z2xZ2");
      std::size_t end = name.find('x', pos);
      if (end == std::string::npos) end = name.size();
      const std::string digits = name.substr(pos + 1, end - pos - 1);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        fail("group name '" + name + "' must look like Z2xZ2");
      }
      const auto factor = AbelianGroup::cyclic(static_cast<unsigned>(std::stoul(digits)));
      g = g ? AbelianGroup::product(*g, factor) : factor;
      pos = end + (end < name.size() ? 1 : 0);
    }
    if (!g) fail("empty group name");
    return *g;
  }
  check_keys(doc, "symmetry.group", {"labels", "multiplication", "characters"});
  const auto labels = get<std::vector<std::string>>(doc, "labels", "symmetry.group");
  const auto mult = get<std::vector<std::vector<unsigned>>>(doc, "multiplication", "symmetry.group");
  std::vector<std::vector<Complex>> chars;
  for (const auto& row : doc.at("characters")) {
    std::vector<Complex> r;
    for (const auto& v : row) r.push_back(parse_character(v));
    chars.push_back(std::move(r));
  }
  return AbelianGroup(labels, mult, chars);
}

NoiseModel parse_noise(const Json& doc) {
  if (doc.is_string() && doc.get<std::string>() == "none") return {};
  check_keys(doc, "noise", {"one_qubit", "multi_qubit", "readout"});
  ChannelSpec one, multi;
  ReadoutBias readout;
  if (doc.contains("one_qubit")) one = parse_channel_spec(doc.at("one_qubit"), "noise.one_qubit");
  if (doc.contains("multi_qubit")) {
    multi = parse_channel_spec(doc.at("multi_qubit"), "noise.multi_qubit");
  }
  if (doc.contains("readout")) readout = parse_readout(doc.at("readout"), "noise.readout");
  return NoiseModel(one, multi, readout);
}

NoiseModel load_noise(const std::string& path) {
  if (path == "none") return {};
  return parse_noise(read_json(path));
}

Json to_json(const NoiseModel& noise) {
  Json j;
  j["one_qubit"] = channel_json(noise.one_qubit_spec());
  j["multi_qubit"] = channel_json(noise.multi_qubit_spec());
  j["readout"] = {{"epsilon", noise.readout().epsilon},
                  {"variant", to_string(noise.readout().variant)}};
  return j;
}

ExperimentConfig parse_config(const Json& doc, const std::string& base_dir) {
  check_keys(doc, "config", {"experiment", "L", "boundary", "state", "shots", "runs", "seed",
                             "noise", "teleport", "oracle", "classify", "symmetry"});
  ExperimentConfig cfg;
  if (doc.contains("experiment")) cfg.experiment = parse_experiment(get<std::string>(doc, "experiment", "config"));
  if (doc.contains("L")) cfg.L = get_unsigned(doc, "L", "config");
  if (doc.contains("boundary")) cfg.boundary = parse_boundary(get<std::string>(doc, "boundary", "config"));
  if (doc.contains("state")) cfg.state = parse_state_prep(get<std::string>(doc, "state", "config"));
  if (doc.contains("shots")) cfg.shots = get_unsigned(doc, "shots", "config");
  if (doc.contains("runs")) cfg.runs = get_unsigned(doc, "runs", "config");
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) fail("seed must be a non-negative integer");
    cfg.seed = doc.at("seed").get<std::uint64_t>();
  }
  if (doc.contains("noise")) {
    const Json& n = doc.at("noise");
    if (n.is_string() && n.get<std::string>() != "none") {
      const std::filesystem::path p(n.get<std::string>());
      cfg.noise = load_noise((p.is_absolute() ? p : std::filesystem::path(base_dir) / p).string());
    } else {
      cfg.noise = parse_noise(n);
    }
  }
  if (doc.contains("teleport")) {
    const Json& t = doc.at("teleport");
    check_keys(t, "teleport", {"alpha", "beta", "kind", "angle_sign"});
    if (t.contains("alpha")) cfg.teleport.alphas = parse_alpha_grid(t.at("alpha"));
    if (t.contains("beta")) {
      cfg.teleport.modes.clear();
      for (const auto& m : t.at("beta")) cfg.teleport.modes.push_back(parse_beta_mode(m.get<std::string>()));
    }
    if (t.contains("kind")) cfg.teleport.kind = parse_teleport_kind(get<std::string>(t, "kind", "teleport"));
    if (t.contains("angle_sign")) {
      cfg.teleport.angle_sign = get<double>(t, "angle_sign", "teleport");
      if (cfg.teleport.angle_sign != 1.0 && cfg.teleport.angle_sign != -1.0) {
        fail("teleport.angle_sign must be 1 or -1");
      }
    }
  }
  if (doc.contains("oracle")) {
    const Json& o = doc.at("oracle");
    check_keys(o, "oracle", {"max_moment", "degeneracy_tol"});
    if (o.contains("max_moment")) cfg.max_moment = get_unsigned(o, "max_moment", "oracle");
    if (o.contains("degeneracy_tol")) cfg.degeneracy_tol = get<double>(o, "degeneracy_tol", "oracle");
  }
  if (doc.contains("classify")) {
    const Json& c = doc.at("classify");
    check_keys(c, "classify", {"tolerance", "channels"});
    if (c.contains("tolerance")) cfg.commutator_tol = get<double>(c, "tolerance", "classify");
    if (c.contains("channels")) {
      cfg.classify.clear();
      for (const auto& e : c.at("channels")) {
        ClassifyEntry entry;
        if (e.contains("readout_bias")) {
          check_keys(e, "classify.channels[]", {"readout_bias", "variant"});
          entry.kind = ClassifyEntry::Kind::readout_bias;
          Json r = {{"epsilon", e.at("readout_bias")}};
          if (e.contains("variant")) r["variant"] = e.at("variant");
          entry.bias = parse_readout(r, "classify.channels[]");
        } else {
          entry.channel = parse_channel_spec(e, "classify.channels[]");
        }
        cfg.classify.push_back(entry);
      }
    }
  }
  if (doc.contains("symmetry")) {
    const Json& s = doc.at("symmetry");
    check_keys(s, "symmetry", {"group", "L_A", "operators"});
    SymmetrySpec spec;
    spec.group = parse_group(s.at("group"));
    spec.l_a = get_unsigned(s, "L_A", "symmetry");
    for (const auto& op : s.at("operators")) spec.operators.push_back(PauliString::parse(op.get<std::string>()));
    cfg.symmetry = std::move(spec);
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_config(read_json(path), dir.empty() ? "." : dir.string());
}

Json to_json(const ExperimentConfig& cfg) {
  Json j;
  j["experiment"] = to_string(cfg.experiment);
  j["L"] = cfg.L;
  j["boundary"] = to_string(cfg.boundary);
  j["state"] = to_string(cfg.state);
  j["shots"] = cfg.shots;
  j["runs"] = cfg.runs;
  j["seed"] = cfg.seed;
  j["noise"] = to_json(cfg.noise);
  Json t;
  t["alpha"] = cfg.teleport.alphas;
  t["beta"] = Json::array();
  for (BetaMode m : cfg.teleport.modes) t["beta"].push_back(to_string(m));
  t["kind"] = to_string(cfg.teleport.kind);
  t["angle_sign"] = cfg.teleport.angle_sign;
  j["teleport"] = t;
  j["oracle"] = {{"max_moment", cfg.max_moment}, {"degeneracy_tol", cfg.degeneracy_tol}};
  Json channels = Json::array();
  for (const auto& e : cfg.classify) {
    if (e.kind == ClassifyEntry::Kind::readout_bias) {
      channels.push_back({{"readout_bias", e.bias.epsilon}, {"variant", to_string(e.bias.variant)}});
    } else {
      channels.push_back(channel_json(e.channel));
    }
  }
  j["classify"] = {{"tolerance", cfg.commutator_tol}, {"channels", channels}};
  if (cfg.symmetry) {
    const auto& g = cfg.symmetry->group;
    Json chars = Json::array();
    for (const auto& row : g.character_table()) {
      Json r = Json::array();
      for (const Complex& c : row) r.push_back({c.real(), c.imag()});
      chars.push_back(r);
    }
    Json mult = Json::array();
    for (unsigned a = 0; a < g.order(); ++a) {
      Json r = Json::array();
      for (unsigned b = 0; b < g.order(); ++b) r.push_back(g.multiply(a, b));
      mult.push_back(r);
    }
    Json ops = Json::array();
    for (const auto& p : cfg.symmetry->operators) ops.push_back(p.str());
    j["symmetry"] = {{"group", {{"labels", g.labels()}, {"multiplication", mult}, {"characters", chars}}},
                     {"L_A", cfg.symmetry->l_a},
                     {"operators", ops}};
  }
  return j;
}

}  // namespace sptprobe::harness
