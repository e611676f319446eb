#include "simplicia/store.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "simplicia/errors.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/invariants.hpp"

namespace simplicia {

using nlohmann::json;

const std::vector<std::string>& known_properties() {
  static const std::vector<std::string> keys{"f_vector", "flags", "homology", "orientation", "homology_mod_2",
                                             "homology_mod_3"};
  return keys;
}

json compute_property(const Complex& c, const std::string& key) {
  if (key == "f_vector") f_vector(c);
  else if (key == "flags") structural_flags(c);
  else if (key == "homology") homology(c);
  else if (key == "orientation") orientability(c);
  else if (key.rfind("homology_mod_", 0) == 0) {
    const std::string p = key.substr(13);
    if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidArgument("unknown property '" + key + "'");
    homology_mod_p(c, static_cast<std::uint32_t>(std::stoul(p)));
  } else {
    throw InvalidArgument("unknown property '" + key + "'");
  }
  return *c.cache().get(key);
}

json to_json_document(const Complex& c, const std::optional<std::vector<Move>>& move_log) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = c.name();
  json labels = json::array();
  for (const auto& l : c.labels()) labels.push_back(label_to_json(l));
  j["labels"] = std::move(labels);
  j["facets"] = c.facets();
  json props = json::object();
  for (const auto& [k, v] : c.cache().snapshot()) props[k] = v;
  j["cached_properties"] = std::move(props);
  if (move_log) j["move_log"] = *move_log;
  return j;
}

std::string dump_document(const Complex& c, const std::optional<std::vector<Move>>& move_log) {
  json j = to_json_document(c, move_log);
  std::ostringstream out;
  auto rows = [&](const json& arr) {
    out << "[";
    for (std::size_t i = 0; i < arr.size(); ++i) out << (i ? ",\n    " : "\n    ") << arr[i].dump();
    out << (arr.empty() ? "]" : "\n  ]");
  };
  out << "{\n";
  out << "  \"schema_version\": " << j["schema_version"].dump() << ",\n";
  out << "  \"name\": " << j["name"].dump() << ",\n";
  out << "  \"labels\": " << j["labels"].dump() << ",\n";
  out << "  \"facets\": ";
  rows(j["facets"]);
  out << ",\n  \"cached_properties\": {";
  bool first = true;
  for (const auto& [k, v] : j["cached_properties"].items()) {
    out << (first ? "\n    " : ",\n    ") << json(k).dump() << ": " << v.dump();
    first = false;
  }
  out << (first ? "}" : "\n  }");
  if (j.contains("move_log")) {
    out << ",\n  \"move_log\": ";
    rows(j["move_log"]);
  }
  out << "\n}\n";
  return out.str();
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where, what); }

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(key, "missing field");
  return *it;
}

std::vector<Face> parse_facets(const json& arr, int n) {
  if (!arr.is_array()) fail("facets", "expected an array");
  std::vector<Face> facets;
  facets.reserve(arr.size());
  std::vector<char> seen(n + 1, 0);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "facets[" + std::to_string(i) + "]";
    const json& f = arr[i];
    if (!f.is_array() || f.empty()) fail(where, "expected a nonempty array");
    Face face;
    for (std::size_t t = 0; t < f.size(); ++t) {
      if (!f[t].is_number_integer()) fail(where + "[" + std::to_string(t) + "]", "expected an integer");
      const auto v = f[t].get<std::int64_t>();
      if (v < 1 || v > n) fail(where + "[" + std::to_string(t) + "]", "vertex out of range 1.." + std::to_string(n));
      if (!face.empty() && v <= face.back()) fail(where, "vertices not strictly increasing");
      face.push_back(static_cast<Vertex>(v));
      seen[v] = 1;
    }
    if (!facets.empty() && !(facets.back() < face)) fail(where, "facets not sorted or duplicated");
    facets.push_back(std::move(face));
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) fail("facets", "vertex " + std::to_string(v) + " does not occur");
  // Maximality only needs checking between facets of different sizes.
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t k = 0; k < facets.size(); ++k)
      if (facets[i].size() < facets[k].size() && is_subface(facets[i], facets[k]))
        fail("facets[" + std::to_string(i) + "]", "not maximal");
  return facets;
}

}  // namespace

Document from_json_document(const json& j, bool strict) {
  if (!j.is_object()) fail("", "document must be a JSON object");
  const json& version = field(j, "schema_version");
  if (!version.is_number_integer()) fail("schema_version", "expected an integer");
  if (version.get<int>() != kSchemaVersion) throw SchemaVersionError(version.get<int>(), kSchemaVersion);
  for (const auto& [k, v] : j.items()) {
    static const std::vector<std::string> allowed{"schema_version", "name", "labels", "facets",
                                                  "cached_properties", "move_log"};
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) fail(k, "unknown field");
  }
  const json& name = field(j, "name");
  if (!name.is_string()) fail("name", "expected a string");
  const json& labels_j = field(j, "labels");
  if (!labels_j.is_array()) fail("labels", "expected an array");
  std::vector<Label> labels;
  for (std::size_t i = 0; i < labels_j.size(); ++i) {
    const json& l = labels_j[i];
    if (!l.is_number_integer() && !l.is_string()) fail("labels[" + std::to_string(i) + "]", "expected integer or string");
    labels.push_back(label_from_json(l));
  }
  auto facets = parse_facets(field(j, "facets"), static_cast<int>(labels.size()));
  const json& props = field(j, "cached_properties");
  if (!props.is_object()) fail("cached_properties", "expected an object");

  Document doc{Complex(std::move(facets), std::move(labels), name.get<std::string>()), std::nullopt};
  for (const auto& [k, v] : props.items()) {
    if (strict) {
      Complex fresh(doc.complex.facets(), doc.complex.labels());
      json recomputed;
      try {
        recomputed = compute_property(fresh, k);
      } catch (const InvalidArgument& e) {
        fail("cached_properties." + k, e.what());
      }
      if (recomputed != v) throw CacheMismatch("cached property '" + k + "' differs from its recomputation");
    }
    doc.complex.cache().publish(k, v);
  }
  if (auto it = j.find("move_log"); it != j.end()) {
    if (!it->is_array()) fail("move_log", "expected an array");
    std::vector<Move> log;
    for (std::size_t i = 0; i < it->size(); ++i) {
      try {
        log.push_back((*it)[i].get<Move>());
      } catch (const json::exception& e) {
        fail("move_log[" + std::to_string(i) + "]", e.what());
      } catch (const InvalidArgument& e) {
        fail("move_log[" + std::to_string(i) + "]", e.what());
      }
    }
    doc.move_log = std::move(log);
  }
  return doc;
}

Document parse_document(const std::string& text, bool strict) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line number.
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    fail("line " + std::to_string(line), e.what());
  }
  return from_json_document(j, strict);
}

void save(const Complex& c, const std::filesystem::path& path, const std::optional<std::vector<Move>>& move_log) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << dump_document(c, move_log);
  if (!out) throw Error("write failed for " + path.string());
}

Document load(const std::filesystem::path& path, bool strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str(), strict);
  } catch (const ParseError& e) {
    throw ParseError(path.string(), e.what());
  }
}

}  // namespace simplicia
