#include "virpos/experiment.hpp"

#include <cstdio>
#include <fstream>

#include "virpos/errors.hpp"

namespace virpos {

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["n_list"] = n_list;
  j["r"] = r;
  if (k) j["k"] = *k;
  if (i) j["i"] = *i;
  j["trials"] = trials;
  j["count"] = count;
  j["seed"] = seed;
  j["connected_only"] = connected_only;
  j["method"] = method;
  j["steps"] = steps;
  j["exact_bits"] = exact_bits;
  j["max_precision_bits"] = max_precision_bits;
  j["fail_on_violation"] = fail_on_violation;
  j["also_m_conjecture"] = also_m_conjecture;
  j["checkpoint_every"] = checkpoint_every;
  j["block_size"] = block_size;
  j["threads"] = threads;
  j["out"] = out;
  j["inputs"] = inputs;
  j["resume"] = resume;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.apply_overrides(j);
  return c;
}

void ExperimentConfig::apply_overrides(const nlohmann::json& j) {
  auto set = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
  };
  set("command", command);
  set("n_list", n_list);
  set("r", r);
  if (j.contains("k")) k = j.at("k").get<int>();
  if (j.contains("i")) i = j.at("i").get<int>();
  set("trials", trials);
  set("count", count);
  set("seed", seed);
  set("connected_only", connected_only);
  set("method", method);
  set("steps", steps);
  set("exact_bits", exact_bits);
  set("max_precision_bits", max_precision_bits);
  set("fail_on_violation", fail_on_violation);
  set("also_m_conjecture", also_m_conjecture);
  set("checkpoint_every", checkpoint_every);
  set("block_size", block_size);
  set("threads", threads);
  set("out", out);
  set("inputs", inputs);
  set("resume", resume);
  if (j.contains("stop_after_items"))
    stop_after_items = j.at("stop_after_items").get<long>();
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t ExperimentConfig::semantic_hash() const {
  nlohmann::json j = to_json();
  j.erase("resume");
  // threads affect scheduling, never results
  j.erase("threads");
  return fnv1a64(j.dump());  // nlohmann dumps objects with sorted keys
}

std::string ExperimentConfig::semantic_hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(semantic_hash()));
  return buf;
}

ResultStore::ResultStore(std::string path, std::string config_hash_hex)
    : path_(std::move(path)), config_hash_(std::move(config_hash_hex)) {}

void ResultStore::load() {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
    if (rec.is_discarded())
      throw ParseError("bad JSON record in result store", lineno);
    if (rec.value("key", "") == "__meta__") {
      std::string stored = rec.value("config_hash", "");
      if (stored != config_hash_)
        throw Error("result store " + path_ + " was written by a different config (" +
                    stored + " vs " + config_hash_ + "); refusing to resume");
      meta_written_ = true;
      continue;
    }
    records_[rec.at("key").get<std::string>()] = rec.at("payload");
  }
}

const nlohmann::json* ResultStore::get(const std::string& key) const {
  auto it = records_.find(key);
  return it == records_.end() ? nullptr : &it->second;
}

void ResultStore::append(const std::string& key, nlohmann::json payload) {
  if (records_.count(key)) return;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error("cannot open result store " + path_);
  if (!meta_written_) {
    nlohmann::json meta;
    meta["key"] = "__meta__";
    meta["config_hash"] = config_hash_;
    out << meta.dump() << '\n';
    meta_written_ = true;
  }
  nlohmann::json rec;
  rec["key"] = key;
  rec["payload"] = payload;
  out << rec.dump() << '\n';
  out.flush();
  records_[key] = std::move(rec["payload"]);
}

std::vector<std::string> ResultStore::sorted_keys() const {
  std::vector<std::string> keys;
  keys.reserve(records_.size());
  for (const auto& [k, v] : records_) keys.push_back(k);
  return keys;  // std::map is already sorted
}

}  // namespace virpos
