#pragma once

#include <string>

#include <json.hpp>

namespace gael::cli {

/// Machine-readable outcome of one CLI command. Everything except
/// duration_ms is a deterministic function of the inputs, so re-running an
/// identical invocation yields a byte-identical results payload.
struct RunReport {
  std::string command;
  nlohmann::json graph;       // id and basic counts
  nlohmann::json parameters;
  nlohmann::json results;
  double duration_ms = 0.0;
  int exit_code = 0;          // 0 ok, 1 a verification failed
  bool use_csv = false;
  std::string csv;

  nlohmann::json to_json() const {
    nlohmann::json doc;
    doc["command"] = command;
    doc["graph"] = graph;
    doc["parameters"] = parameters;
    doc["results"] = results;
    doc["duration_ms"] = duration_ms;
    return doc;
  }

  std::string render() const { return use_csv ? csv : to_json().dump(2) + "\n"; }
};

}  // namespace gael::cli
