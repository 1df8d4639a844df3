#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace seqlab {

inline constexpr const char* kToolVersion = "0.1.0";

// Provenance for every emitted artifact: JSON payloads embed it, file
// outputs get a `<path>.manifest.json` sidecar.
struct RunManifest {
  std::string subcommand;
  std::map<std::string, std::string> parameters;
  std::string started;   // ISO 8601 UTC
  std::string finished;
  std::string input_checkpoint;  // empty when none
  std::vector<std::string> outputs;
};

std::string iso8601_now();
nlohmann::json manifest_json(const RunManifest& m);
void write_manifest_sidecar(const RunManifest& m, const std::string& artifact_path);

}  // namespace seqlab
