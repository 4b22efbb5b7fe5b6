#include "dowker/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "dowker/errors.hpp"

namespace dowker {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, e.what());
  }
}

std::vector<std::string> string_array(const ordered_json& j, const char* what) {
  if (!j.is_array()) fail(errc::parse_error, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) fail(errc::parse_error, std::string(what) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string relation_to_json(const Relation& r) {
  ordered_json j;
  j["x"] = r.x_labels();
  j["y"] = r.y_labels();
  auto& pairs = j["pairs"] = ordered_json::array();
  for (const auto& [x, y] : r.pairs()) pairs.push_back(ordered_json::array({x, y}));
  return j.dump(2) + "\n";
}

Relation relation_from_json(const std::string& text) {
  ordered_json j = parse_json(text);
  if (!j.is_object()) fail(errc::parse_error, "relation must be a JSON object");
  for (const char* key : {"x", "y", "pairs"})
    if (!j.contains(key)) fail(errc::parse_error, std::string("missing field \"") + key + "\"");
  std::vector<Label> xs = string_array(j["x"], "\"x\"");
  std::vector<Label> ys = string_array(j["y"], "\"y\"");
  std::vector<LabelPair> pairs;
  if (!j["pairs"].is_array()) fail(errc::parse_error, "\"pairs\" must be an array");
  for (const auto& p : j["pairs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      fail(errc::parse_error, "each pair must be a 2-element string array");
    pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return Relation::make(std::move(xs), std::move(ys), std::move(pairs));
}

std::string relation_to_csv(const Relation& r) {
  std::string out = "x,y\n";
  for (const auto& [x, y] : r.pairs()) out += x + "," + y + "\n";
  return out;
}

Relation relation_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<Label> xs, ys;
  std::vector<LabelPair> pairs;
  auto chomp = [](std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
  };
  if (!std::getline(in, line)) fail(errc::parse_error, "empty input, expected header \"x,y\"");
  ++lineno;
  chomp(line);
  if (line != "x,y") fail(errc::parse_error, "line 1: header must be exactly \"x,y\"");
  while (std::getline(in, line)) {
    ++lineno;
    chomp(line);
    if (line.empty()) continue;
    std::size_t comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      fail(errc::parse_error,
           "line " + std::to_string(lineno) + ": expected exactly one comma");
    Label x = line.substr(0, comma);
    Label y = line.substr(comma + 1);
    if (x.empty() || y.empty())
      fail(errc::parse_error, "line " + std::to_string(lineno) + ": empty label");
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    if (std::find(ys.begin(), ys.end(), y) == ys.end()) ys.push_back(y);
    pairs.emplace_back(std::move(x), std::move(y));
  }
  return Relation::make(std::move(xs), std::move(ys), std::move(pairs));
}

std::string complex_to_json(const SimplicialComplex& K) {
  ordered_json j;
  std::vector<Vertex> vs = K.vertex_set();
  std::sort(vs.begin(), vs.end());
  j["vertices"] = vs;
  auto& facets = j["facets"] = ordered_json::array();
  for (const auto& f : K.facets()) facets.push_back(f.vertices());
  return j.dump(2) + "\n";
}

std::string complex_to_dot(const SimplicialComplex& K) {
  std::string out = "graph complex {\n";
  std::vector<Vertex> vs = K.vertex_set();
  std::sort(vs.begin(), vs.end());
  for (const auto& v : vs) out += "  " + quote_dot(v) + ";\n";
  for (const auto& e : K.k_simplices(1))
    out += "  " + quote_dot(e.vertices()[0]) + " -- " + quote_dot(e.vertices()[1]) + ";\n";
  out += "}\n";
  return out;
}

std::string concepts_to_json(const std::vector<FormalConcept>& cs) {
  ordered_json j = ordered_json::array();
  for (const auto& c : cs) {
    ordered_json e;
    e["extent"] = c.extent;
    e["intent"] = c.intent;
    j.push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string homology_to_json(const HomologyResult& h) {
  ordered_json j;
  j["reduced"] = h.reduced;
  auto& groups = j["groups"] = ordered_json::array();
  for (const auto& g : h.groups) {
    ordered_json e;
    e["dim"] = g.dim;
    e["betti"] = g.betti;
    auto& tor = e["torsion"] = ordered_json::array();
    for (const auto& t : g.torsion) {
      if (!t.fits_slong_p()) fail(errc::too_large, "torsion coefficient exceeds JSON range");
      tor.push_back(static_cast<long long>(t.get_si()));
    }
    groups.push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

}  // namespace dowker
