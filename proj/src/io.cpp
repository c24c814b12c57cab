#include "virtgraph/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <json.hpp>
#include <sstream>

namespace vg {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw VgfError(where + ": " + what); }

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

std::string line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

SpatialDiagram parse_vgf(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(line_col(text, e.byte), "malformed JSON");
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");
  for (auto& [key, val] : doc.items())
    if (key != "vertices" && key != "edges" && key != "vertex_signs" && key != "edge_twists" && key != "crossings")
      fail(key, "unknown field");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) fail("vertices", "missing list");
  if (!doc.contains("edges") || !doc["edges"].is_array()) fail("edges", "missing list");

  const json& jv = doc["vertices"];
  const json& je = doc["edges"];
  int n = 2 * static_cast<int>(je.size());
  std::vector<int> seen_v(n, -1), seen_e(n, -1);
  std::vector<std::vector<int>> rot;
  int isolated = 0;
  std::vector<int> vertex_slot;  // vertex index in the file -> rotation index or -(iso+1)
  for (std::size_t v = 0; v < jv.size(); ++v) {
    std::string w = "vertices[" + std::to_string(v) + "]";
    if (!jv[v].is_array()) fail(w, "expected a list of half-edge ids");
    if (jv[v].empty()) {
      vertex_slot.push_back(-(++isolated));
      continue;
    }
    std::vector<int> r;
    for (std::size_t k = 0; k < jv[v].size(); ++k) {
      std::string wk = w + "[" + std::to_string(k) + "]";
      int h = as_int(jv[v][k], wk);
      if (h < 0 || h >= n) fail(wk, "half-edge " + std::to_string(h) + " out of range 0.." + std::to_string(n - 1));
      if (seen_v[h] >= 0) fail(wk, "duplicate half-edge id " + std::to_string(h));
      seen_v[h] = static_cast<int>(v);
      r.push_back(h);
    }
    vertex_slot.push_back(static_cast<int>(rot.size()));
    rot.push_back(r);
  }
  std::vector<std::array<int, 2>> edges;
  for (std::size_t e = 0; e < je.size(); ++e) {
    std::string w = "edges[" + std::to_string(e) + "]";
    if (!je[e].is_array() || je[e].size() != 2) fail(w, "expected a pair of half-edge ids");
    std::array<int, 2> p{};
    for (int k = 0; k < 2; ++k) {
      std::string wk = w + "[" + std::to_string(k) + "]";
      int h = as_int(je[e][k], wk);
      if (h < 0 || h >= n) fail(wk, "half-edge " + std::to_string(h) + " out of range 0.." + std::to_string(n - 1));
      if (seen_e[h] >= 0) fail(wk, "duplicate half-edge id " + std::to_string(h));
      seen_e[h] = static_cast<int>(e);
      p[k] = h;
    }
    edges.push_back(p);
  }
  for (int h = 0; h < n; ++h) {
    if (seen_v[h] < 0) fail("vertices", "half-edge " + std::to_string(h) + " is on no vertex");
  }

  CombMap m;
  try {
    m = make_map(rot, edges, isolated);
  } catch (const MapError& e) {
    fail("document", e.what());
  }
  // make_map keeps half-edge ids, so vertex orbits are found through any member
  auto vof = vertex_of_halfedge(m);
  int nv_rot = static_cast<int>(rot.size());
  auto vertex_index = [&](int file_v, const std::string& w) {
    if (file_v < 0 || file_v >= static_cast<int>(vertex_slot.size())) fail(w, "vertex index out of range");
    int s = vertex_slot[file_v];
    return s >= 0 ? vof[rot[s][0]] : nv_rot + (-s - 1);
  };

  if (doc.contains("edge_twists")) {
    const json& jt = doc["edge_twists"];
    if (!jt.is_array()) fail("edge_twists", "expected a list of edge indices");
    m.twist.assign(n, 0);
    for (std::size_t k = 0; k < jt.size(); ++k) {
      std::string w = "edge_twists[" + std::to_string(k) + "]";
      int e = as_int(jt[k], w);
      if (e < 0 || e >= static_cast<int>(edges.size())) fail(w, "edge index out of range");
      m.twist[edges[e][0]] = m.twist[edges[e][1]] = 1;
    }
    if (!m.any_twist()) m.twist.clear();
  }
  if (doc.contains("vertex_signs")) {
    const json& js = doc["vertex_signs"];
    if (!js.is_object()) fail("vertex_signs", "expected an object {\"index\": sign}");
    m = with_parity_signs(m);
    for (auto& [key, val] : js.items()) {
      std::string w = "vertex_signs[" + key + "]";
      int fv = 0;
      try {
        std::size_t used = 0;
        fv = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail(w, "key is not a vertex index");
      }
      int s = as_int(val, w);
      if (s != 1 && s != -1) fail(w, "sign must be 1 or -1");
      m = set_vertex_sign(m, vertex_index(fv, w), s);
    }
  }
  SpatialDiagram d;
  d.base = m;
  if (doc.contains("crossings")) {
    const json& jc = doc["crossings"];
    if (!jc.is_array()) fail("crossings", "expected a list");
    for (std::size_t k = 0; k < jc.size(); ++k) {
      std::string w = "crossings[" + std::to_string(k) + "]";
      const json& c = jc[k];
      if (!c.is_object() || !c.contains("vertex") || !c.contains("over")) fail(w, "expected {vertex, over}");
      int fv = as_int(c["vertex"], w + ".vertex");
      if (!c["over"].is_array() || c["over"].size() != 2) fail(w + ".over", "expected two half-edge ids");
      int a = as_int(c["over"][0], w + ".over[0]"), b = as_int(c["over"][1], w + ".over[1]");
      for (int h : {a, b})
        if (h < 0 || h >= n || seen_v[h] != fv) fail(w + ".over", "half-edge " + std::to_string(h) + " is not at vertex " + std::to_string(fv));
      d.crossings.push_back({{a, b}});
    }
    auto problems = validate(d);
    if (!problems.empty()) fail("crossings", problems.front());
  }
  return d;
}

SpatialDiagram read_vgf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw VgfError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_vgf(ss.str());
  } catch (const VgfError& e) {
    throw VgfError(path + ": " + e.what());
  }
}

std::string serialize_vgf(const SpatialDiagram& d) {
  const CombMap& m = d.base;
  auto orbits = vertex_orbits(m);
  auto vof = vertex_of_halfedge(m);
  auto el = edge_list(m);
  std::ostringstream os;
  auto list = [&](const std::vector<int>& xs) {
    os << "[";
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
    os << "]";
  };
  os << "{\n  \"vertices\": [";
  for (std::size_t v = 0; v < orbits.size(); ++v) {
    os << (v ? ",\n    " : "\n    ");
    list(orbits[v]);
  }
  os << (orbits.empty() ? "]" : "\n  ]");
  os << ",\n  \"edges\": [";
  for (std::size_t e = 0; e < el.size(); ++e) {
    os << (e ? ", " : "");
    list({el[e][0], el[e][1]});
  }
  os << "]";
  if (m.any_twist()) {
    std::vector<int> tw;
    for (std::size_t e = 0; e < el.size(); ++e)
      if (m.twisted(el[e][0])) tw.push_back(static_cast<int>(e));
    os << ",\n  \"edge_twists\": ";
    list(tw);
  }
  bool iso_signed = std::any_of(m.iso.begin(), m.iso.end(), [](signed char s) { return s != 1; });
  if (m.has_signs() || iso_signed) {
    os << ",\n  \"vertex_signs\": {";
    for (std::size_t v = 0; v < orbits.size(); ++v)
      os << (v ? ", " : "") << "\"" << v << "\": " << vertex_sign(m, static_cast<int>(v));
    os << "}";
  }
  if (!d.crossings.empty()) {
    std::vector<std::pair<int, std::array<int, 2>>> cs;
    for (auto& c : d.crossings) {
      auto o = c.over;
      if (o[0] > o[1]) std::swap(o[0], o[1]);
      cs.push_back({vof[o[0]], o});
    }
    std::sort(cs.begin(), cs.end());
    os << ",\n  \"crossings\": [";
    for (std::size_t i = 0; i < cs.size(); ++i)
      os << (i ? ", " : "") << "{\"vertex\": " << cs[i].first << ", \"over\": [" << cs[i].second[0] << ", "
         << cs[i].second[1] << "]}";
    os << "]";
  }
  os << "\n}\n";
  return os.str();
}

std::string serialize_vgf(const CombMap& m) {
  SpatialDiagram d;
  d.base = m;
  return serialize_vgf(d);
}

std::string input_hash(const SpatialDiagram& d) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : serialize_vgf(d)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace vg
