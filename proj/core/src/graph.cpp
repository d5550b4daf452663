#include "gael/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gael {

namespace {

using nlohmann::json;

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Unbiased uniform draw in [0, n) with a fixed algorithm, so seeded graphs
// are identical across platforms and standard-library versions.
std::uint64_t uniform_below(std::uint64_t& state, std::uint64_t n) {
  const std::uint64_t limit = ~0ull - (~0ull % n);
  std::uint64_t v;
  do {
    v = splitmix64(state);
  } while (v > limit);
  return v % n;
}

}  // namespace

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges,
             std::optional<std::vector<std::string>> x)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  validate_and_index(std::move(x));
}

void Graph::validate_and_index(std::optional<std::vector<std::string>> x) {
  std::set<std::string> vnames;
  for (const auto& v : vertices_) {
    if (v.empty()) throw std::invalid_argument("graph: empty vertex name");
    if (!vnames.insert(v).second)
      throw std::invalid_argument("graph: duplicate vertex name '" + v + "'");
  }
  std::set<std::string> enames;
  edge_source_.clear();
  edge_range_.clear();
  out_edges_.assign(vertices_.size(), {});
  int eid = 0;
  for (const auto& e : edges_) {
    if (e.name.empty()) throw std::invalid_argument("graph: empty edge name");
    if (!enames.insert(e.name).second)
      throw std::invalid_argument("graph: duplicate edge name '" + e.name + "'");
    const int s = vertex_index(e.source);
    const int r = vertex_index(e.range);
    if (s < 0) throw std::invalid_argument("graph: unknown vertex '" + e.source + "'");
    if (r < 0) throw std::invalid_argument("graph: unknown vertex '" + e.range + "'");
    edge_source_.push_back(s);
    edge_range_.push_back(r);
    out_edges_[s].push_back(eid++);
  }

  x_explicit_ = x.has_value();
  x_indices_.clear();
  if (x_explicit_) {
    std::set<int> seen;
    for (const auto& name : *x) {
      const int i = vertex_index(name);
      if (i < 0) throw std::invalid_argument("graph: X member '" + name + "' is not a vertex");
      if (out_edges_[i].empty())
        throw std::invalid_argument("graph: X member '" + name + "' is not a regular vertex");
      if (!seen.insert(i).second)
        throw std::invalid_argument("graph: duplicate X member '" + name + "'");
      x_indices_.push_back(i);
    }
    std::sort(x_indices_.begin(), x_indices_.end());
  } else {
    x_indices_ = regular_indices();
  }
}

int Graph::vertex_index(std::string_view name) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<std::string> Graph::x_names() const {
  std::vector<std::string> out;
  out.reserve(x_indices_.size());
  for (int i : x_indices_) out.push_back(vertices_[i]);
  return out;
}

VertexClasses Graph::classify() const {
  VertexClasses c;
  std::vector<bool> receives(vertices_.size(), false);
  for (int r : edge_range_) receives[r] = true;
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (out_edges_[i].empty())
      c.sinks.push_back(vertices_[i]);
    else
      c.regular.push_back(vertices_[i]);
    if (!receives[i]) c.sources.push_back(vertices_[i]);
  }
  return c;
}

std::vector<int> Graph::regular_indices() const {
  std::vector<int> out;
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (!out_edges_[i].empty()) out.push_back(static_cast<int>(i));
  return out;
}

ExactMatrix Graph::adjacency() const {
  ExactMatrix a(vertex_count(), vertex_count());
  for (int e = 0; e < edge_count(); ++e) a.at(edge_source_[e], edge_range_[e]) += 1;
  return a;
}

Graph Graph::parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("graph: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("graph: document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "vertices" && key != "edges" && key != "X")
      throw std::invalid_argument("graph: unknown field '" + key + "'");
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw std::invalid_argument("graph: missing or invalid 'vertices'");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw std::invalid_argument("graph: missing or invalid 'edges'");

  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw std::invalid_argument("graph: vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
        !e[2].is_string())
      throw std::invalid_argument("graph: each edge must be a [name, source, range] triple");
    edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>()});
  }
  std::optional<std::vector<std::string>> x;
  if (doc.contains("X")) {
    if (!doc["X"].is_array()) throw std::invalid_argument("graph: 'X' must be an array");
    x.emplace();
    for (const auto& v : doc["X"]) {
      if (!v.is_string()) throw std::invalid_argument("graph: X members must be strings");
      x->push_back(v.get<std::string>());
    }
  }
  return Graph(std::move(vertices), std::move(edges), std::move(x));
}

Graph Graph::parse_edge_list(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  auto intern = [&vertices](const std::string& name) {
    if (std::find(vertices.begin(), vertices.end(), name) == vertices.end())
      vertices.push_back(name);
  };

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int auto_name = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string src, arrow, dst, name;
    if (!(ls >> src)) continue;  // blank line
    if (!(ls >> arrow >> dst) || arrow != "->")
      throw std::invalid_argument("graph: edge list line " + std::to_string(lineno) +
                                  ": expected 'src -> dst [name]'");
    if (!(ls >> name)) name = "e" + std::to_string(++auto_name);
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("graph: edge list line " + std::to_string(lineno) +
                                  ": trailing tokens");
    intern(src);
    intern(dst);
    edges.push_back({name, src, dst});
  }
  return Graph(std::move(vertices), std::move(edges), std::nullopt);
}

Graph Graph::random(int n_vertices, int n_edges, std::uint64_t seed) {
  if (n_vertices < 1) throw std::invalid_argument("random graph: need at least one vertex");
  if (n_edges < 0) throw std::invalid_argument("random graph: negative edge count");
  std::uint64_t state = seed;
  std::vector<std::string> vertices;
  for (int i = 1; i <= n_vertices; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  for (int i = 1; i <= n_edges; ++i) {
    const auto s = uniform_below(state, static_cast<std::uint64_t>(n_vertices));
    const auto r = uniform_below(state, static_cast<std::uint64_t>(n_vertices));
    edges.push_back({"e" + std::to_string(i), vertices[s], vertices[r]});
  }
  return Graph(std::move(vertices), std::move(edges), std::nullopt);
}

std::string Graph::to_json() const {
  json doc;
  doc["vertices"] = vertices_;
  json es = json::array();
  for (const auto& e : edges_) es.push_back(json::array({e.name, e.source, e.range}));
  doc["edges"] = es;
  if (x_explicit_) doc["X"] = x_names();
  return doc.dump();
}

std::string Graph::id() const {
  // FNV-1a over the canonical serialization.
  const std::string doc = to_json();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : doc) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "g%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace gael
