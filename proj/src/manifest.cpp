#include <fstream>

#include <json.hpp>

#include "pixhash/harness.hpp"
#include "pixhash/version.hpp"

namespace pixhash {

using ordered_json = nlohmann::ordered_json;

std::string RunManifest::to_json() const {
  ordered_json j;
  j["seed"] = seed;
  j["k_neighbours"] = k_neighbours;
  j["algorithms"] = algorithms;
  j["modifications"] = modifications;
  j["corpus_digest"] = corpus_digest;
  j["parameter_overrides"] = parameter_overrides;
  j["emulation_flags"] = emulation_flags;
  j["tool_version"] = tool_version.empty() ? std::string(kToolVersion) : tool_version;
  return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("manifest: ") + e.what());
  }
  RunManifest m;
  try {
    m.seed = j.at("seed").get<std::uint64_t>();
    m.k_neighbours = j.at("k_neighbours").get<int>();
    m.algorithms = j.at("algorithms").get<std::vector<std::string>>();
    m.modifications = j.at("modifications").get<std::vector<std::string>>();
    m.corpus_digest = j.at("corpus_digest").get<std::string>();
    m.parameter_overrides = j.at("parameter_overrides").get<std::map<std::string, std::string>>();
    m.emulation_flags = j.at("emulation_flags").get<std::map<std::string, bool>>();
    m.tool_version = j.at("tool_version").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("manifest: ") + e.what());
  }
  return m;
}

void RunManifest::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw UnreadablePath("cannot write " + path.string());
  out << to_json();
}

RunManifest RunManifest::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UnreadablePath("cannot read " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_json(text);
}

}  // namespace pixhash
