#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "abel/blowup.hpp"
#include "abel/quasistability.hpp"

namespace abel {

/// On-disk form of Abel data. Vertex labels are 1-based; rationals are
/// strings so they survive JSON untouched.
struct AbelDataDocument {
  std::string name;
  std::vector<std::vector<std::int64_t>> matrix;
  int v = 1;
  Multidegree q;
  Polarization e;
};

/// Schema check plus every graph and degree validation. Throws Error.
AbelDataDocument parse_document(const nlohmann::json& j);
AbelDataDocument parse_document_text(const std::string& text);
AbelDataDocument load_document(const std::filesystem::path& path);

/// Canonical form: sorted keys, canonical rational strings, matrix rebuilt
/// from the graph.
nlohmann::json to_json(const AbelDataDocument& doc);

AbelData to_abel_data(const AbelDataDocument& doc);
AbelDataDocument make_document(const std::string& name, const AbelData& data);

/// A sequence file is a JSON list of steps, each a pair of 1-based vertex lists:
///   [ [[1],[1]], [[4],[4]] ]
BlowupSequence parse_sequence(const nlohmann::json& j, int vertex_count);
BlowupSequence load_sequence(const std::filesystem::path& path, int vertex_count);
nlohmann::json to_json(const BlowupSequence& s);

}  // namespace abel
