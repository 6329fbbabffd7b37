#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace virpos {

// Everything a run needs, fully serializable. A stored config re-run with
// the same seed reproduces the result records byte for byte.
struct ExperimentConfig {
  std::string command;  // gen | enumerate | check | sweep | scaling | bound

  std::vector<int> n_list;
  int r = 0;
  std::optional<int> k;
  std::optional<int> i;
  long trials = 1000;
  long count = 1;
  std::uint64_t seed = 0;
  bool connected_only = false;
  std::string method = "config";  // gen: config | switch
  long steps = 0;                 // switch-chain steps (0 = 20*n*r)

  std::uint64_t exact_bits = std::uint64_t{1} << 26;
  int max_precision_bits = 8192;

  bool fail_on_violation = false;
  bool also_m_conjecture = false;

  long checkpoint_every = 500;  // enumerate
  long block_size = 100;        // sweep trial blocks
  int threads = 1;

  std::string out;
  std::vector<std::string> inputs;

  // not part of the experiment identity
  bool resume = false;
  std::optional<long> stop_after_items;  // test hook: simulate interruption

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);

  // Merge: file config first, flags override (only explicitly-set flags).
  void apply_overrides(const nlohmann::json& flags);

  // FNV-1a over the canonical serialization, excluding resume/stop_after.
  std::uint64_t semantic_hash() const;
  std::string semantic_hash_hex() const;
};

// Append-only JSONL record log with key-based resume. Records carry the
// config hash; loading filters on it so a store cannot silently mix
// experiments.
class ResultStore {
 public:
  ResultStore(std::string path, std::string config_hash_hex);

  // Reads existing records (if the file exists) keyed by record key.
  // Throws if a meta record carries a different config hash.
  void load();

  bool has(const std::string& key) const { return records_.count(key) > 0; }
  const nlohmann::json* get(const std::string& key) const;
  std::size_t size() const { return records_.size(); }

  // Appends and flushes one record; no-op if the key already exists.
  void append(const std::string& key, nlohmann::json payload);

  // Keys in sorted order (final emission order).
  std::vector<std::string> sorted_keys() const;

  const std::string& path() const { return path_; }

 private:
  void open_for_append();

  std::string path_;
  std::string config_hash_;
  std::map<std::string, nlohmann::json> records_;
  bool meta_written_ = false;
};

std::uint64_t fnv1a64(const std::string& data);

}  // namespace virpos
