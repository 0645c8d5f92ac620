#include "abel/document.hpp"

#include <fstream>
#include <sstream>

#include "abel/errors.hpp"

namespace abel {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object()) throw Error(ErrorKind::BadDocument, "document must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorKind::BadDocument, std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_integer(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorKind::BadDocument, std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadDocument, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw Error(ErrorKind::BadDocument, ex.what());
  }
}

}  // namespace

AbelDataDocument parse_document(const nlohmann::json& j) {
  AbelDataDocument doc;
  const auto& name = field(j, "name");
  if (!name.is_string()) throw Error(ErrorKind::BadDocument, "name must be a string");
  doc.name = name.get<std::string>();

  const auto& matrix = field(j, "matrix");
  if (!matrix.is_array()) throw Error(ErrorKind::BadDocument, "matrix must be a list of rows");
  for (const auto& row : matrix) {
    if (!row.is_array()) throw Error(ErrorKind::BadDocument, "matrix rows must be lists");
    auto& out = doc.matrix.emplace_back();
    for (const auto& entry : row) out.push_back(as_integer(entry, "matrix entry"));
  }
  doc.v = static_cast<int>(as_integer(field(j, "v"), "v"));

  const auto& q = field(j, "q");
  if (!q.is_array()) throw Error(ErrorKind::BadDocument, "q must be a list");
  for (const auto& x : q) doc.q.push_back(as_integer(x, "q entry"));

  const auto& e = field(j, "e");
  if (!e.is_array()) throw Error(ErrorKind::BadDocument, "e must be a list");
  for (const auto& x : e) {
    if (!x.is_string()) throw Error(ErrorKind::BadDocument, "e entries must be rational strings like \"-1/2\"");
    doc.e.push_back(parse_rational(x.get<std::string>()));
  }

  // run the graph and degree checks now so a loaded document is always usable
  (void)to_abel_data(doc);
  return doc;
}

AbelDataDocument parse_document_text(const std::string& text) { return parse_document(parse_json(text)); }

AbelDataDocument load_document(const std::filesystem::path& path) { return parse_document_text(read_file(path)); }

nlohmann::json to_json(const AbelDataDocument& doc) {
  const auto data = to_abel_data(doc);
  nlohmann::json j;
  j["name"] = doc.name;
  j["matrix"] = data.graph().intersection_matrix();
  j["v"] = doc.v;
  j["q"] = doc.q;
  auto& e = j["e"] = nlohmann::json::array();
  for (const auto& x : doc.e) e.push_back(to_string(x));
  return j;
}

AbelData to_abel_data(const AbelDataDocument& doc) {
  auto graph = DualGraph::from_intersection_matrix(doc.matrix);
  const int p = graph.vertex_count();
  if (doc.v < 1 || doc.v > p) {
    throw Error(ErrorKind::BadIndex, "v = " + std::to_string(doc.v) + " outside 1.." + std::to_string(p));
  }
  if (doc.q.size() != static_cast<std::size_t>(p) || doc.e.size() != static_cast<std::size_t>(p)) {
    throw Error(ErrorKind::BadDocument, "q and e need one entry per vertex");
  }
  return AbelData(std::move(graph), doc.e, doc.q, doc.v - 1);
}

AbelDataDocument make_document(const std::string& name, const AbelData& data) {
  return {name, data.graph().intersection_matrix(), data.v() + 1, data.q(), data.e()};
}

BlowupSequence parse_sequence(const nlohmann::json& j, int vertex_count) {
  if (!j.is_array()) throw Error(ErrorKind::BadDocument, "sequence must be a list of steps");
  std::vector<BlowupStep> steps;
  for (const auto& step : j) {
    if (!step.is_array() || step.size() != 2) {
      throw Error(ErrorKind::BadDocument, "each step must be a pair of vertex lists");
    }
    VertexSet sides[2];
    for (int side = 0; side < 2; ++side) {
      if (!step[side].is_array()) throw Error(ErrorKind::BadDocument, "each step must be a pair of vertex lists");
      std::vector<int> labels;
      for (const auto& x : step[side]) labels.push_back(static_cast<int>(as_integer(x, "vertex label")));
      sides[side] = VertexSet::from_labels(labels, vertex_count);
    }
    steps.push_back({sides[0], sides[1]});
  }
  return BlowupSequence(vertex_count, std::move(steps));
}

BlowupSequence load_sequence(const std::filesystem::path& path, int vertex_count) {
  return parse_sequence(parse_json(read_file(path)), vertex_count);
}

nlohmann::json to_json(const BlowupSequence& s) {
  auto out = nlohmann::json::array();
  for (const auto& step : s.steps()) out.push_back({step.first.labels(), step.second.labels()});
  return out;
}

}  // namespace abel
