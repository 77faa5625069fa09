#pragma once

#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "graphfol/graphsolver.hpp"
#include "graphfol/oracle.hpp"

namespace graphfol {

// On-disk description of a graph manifold. Piece, torus and edge indices are
// 1-based in the file and 0-based in memory.
struct Manifest {
  GraphManifold manifold;
  std::set<int> K;
  std::optional<Mode> mode;
  std::optional<int> exhaustive;  // denominator bound for the oracle search
};

// Schema errors are collected and thrown together as one InputError, each
// prefixed with the line of the offending value.
Manifest parse_manifest(const std::string& text);
Manifest load_manifest(const std::string& path);

nlohmann::json manifest_json(const Manifest& m);
std::string serialize_manifest(const Manifest& m);

Mode parse_mode(const std::string& s);

nlohmann::json slope_json(const Slope& s);
nlohmann::json decision_json(const Decision& d);
nlohmann::json classification_json(const ClassificationReport& r);
nlohmann::json oracle_json(const OracleResult& r);

}  // namespace graphfol
