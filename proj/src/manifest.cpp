#include "seqlab/manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include "seqlab/error.hpp"

namespace seqlab {

std::string iso8601_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json manifest_json(const RunManifest& m) {
  nlohmann::json doc;
  doc["tool"] = "seqlab";
  doc["version"] = kToolVersion;
  doc["subcommand"] = m.subcommand;
  doc["parameters"] = m.parameters;
  doc["started"] = m.started;
  doc["finished"] = m.finished;
  doc["input_checkpoint"] =
      m.input_checkpoint.empty() ? nlohmann::json(nullptr) : nlohmann::json(m.input_checkpoint);
  doc["outputs"] = m.outputs;
  return doc;
}

void write_manifest_sidecar(const RunManifest& m, const std::string& artifact_path) {
  const std::string path = artifact_path + ".manifest.json";
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail(ErrorCode::invalid_argument, "cannot write manifest: " + path);
  out << manifest_json(m).dump(2) << '\n';
}

}  // namespace seqlab
