#include "p2c/formats.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace p2c {

using nlohmann::json;

namespace {

// Bit order of the edge triangle: columns j = 1..n-1, rows i = 0..j-1, six
// bits per printable byte, each byte offset by 63.
constexpr int kG6Offset = 63;

std::string strip(const std::string& text) {
  std::string s = text;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(ErrorKind::ParseError, "malformed JSON");
  return j;
}

int require_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    raise(ErrorKind::ParseError, std::string(what) + " must be an integer");
  return j.get<int>();
}

std::pair<int, std::vector<std::pair<int, int>>> parse_edge_list(
    const std::string& text) {
  json j = parse_json_text(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    raise(ErrorKind::ParseError, "expected {\"n\": ..., \"edges\": [...]}");
  int n = require_int(j["n"], "n");
  if (n < 0) raise(ErrorKind::ParseError, "n must be non-negative");
  if (!j["edges"].is_array())
    raise(ErrorKind::ParseError, "edges must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& item : j["edges"]) {
    if (!item.is_array() || item.size() != 2)
      raise(ErrorKind::ParseError, "each edge must be a pair [u, v]");
    int u = require_int(item[0], "edge endpoint");
    int v = require_int(item[1], "edge endpoint");
    if (u < 1 || u > n || v < 1 || v > n)
      raise(ErrorKind::ParseError, "edge endpoint out of range 1..n");
    edges.emplace_back(u, v);
  }
  return {n, std::move(edges)};
}

}  // namespace

SimpleGraph parse_graph6(const std::string& text) {
  std::string s = strip(text);
  if (s.empty()) raise(ErrorKind::ParseError, "empty graph6 string");

  std::size_t pos = 0;
  long long n = 0;
  if (s[0] != '~') {
    n = s[0] - kG6Offset;
    pos = 1;
  } else {
    if (s.size() >= 2 && s[1] == '~')
      raise(ErrorKind::ParseError, "graph6 orders beyond 258047 unsupported");
    if (s.size() < 4) raise(ErrorKind::ParseError, "truncated graph6 header");
    n = 0;
    for (int k = 1; k <= 3; ++k) {
      int b = s[k] - kG6Offset;
      if (b < 0 || b > 63) raise(ErrorKind::ParseError, "bad graph6 header");
      n = (n << 6) | b;
    }
    pos = 4;
  }
  if (n < 0 || (pos == 1 && n > 62))
    raise(ErrorKind::ParseError, "bad graph6 order");

  long long bits = n * (n - 1) / 2;
  long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != bytes)
    raise(ErrorKind::ParseError, "graph6 body has wrong length");

  SimpleGraph g(static_cast<int>(n));
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int b = s[pos + bit / 6] - kG6Offset;
      if (b < 0 || b > 63) raise(ErrorKind::ParseError, "bad graph6 byte");
      if ((b >> (5 - bit % 6)) & 1)
        g.add_edge(VertexId{i + 1}, VertexId{j + 1});
    }
  return g;
}

std::string write_graph6(const SimpleGraph& g) {
  const auto verts = g.vertices();
  const long long n = static_cast<long long>(verts.size());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Offset));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
    out.push_back(static_cast<char>((n & 63) + kG6Offset));
  } else {
    raise(ErrorKind::InstanceTooLarge, "graph6 writer supports n <= 258047");
  }

  long long bits = n * (n - 1) / 2;
  std::string body((bits + 5) / 6, 0);
  long long bit = 0;
  for (long long j = 1; j < n; ++j)
    for (long long i = 0; i < j; ++i, ++bit)
      if (g.has_edge(verts[i], verts[j])) body[bit / 6] |= 1 << (5 - bit % 6);
  for (char& c : body) c = static_cast<char>(c + kG6Offset);
  return out + body;
}

SimpleGraph parse_simple_json(const std::string& text) {
  auto [n, edges] = parse_edge_list(text);
  SimpleGraph g(n);
  for (auto [u, v] : edges) {
    if (u == v)
      raise(ErrorKind::ParseError, "self-loop not allowed in a simple graph");
    if (g.has_edge(VertexId{u}, VertexId{v}))
      raise(ErrorKind::ParseError, "repeated edge in a simple graph");
    g.add_edge(VertexId{u}, VertexId{v});
  }
  return g;
}

std::string write_simple_json(const SimpleGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u.value, v.value});
  json j{{"n", g.order()}, {"edges", edges}};
  return j.dump();
}

MultiGraph parse_multi_json(const std::string& text) {
  auto [n, edges] = parse_edge_list(text);
  MultiGraph g(n);
  for (auto [u, v] : edges) g.add_edge(VertexId{u}, VertexId{v});
  return g;
}

std::string write_multi_json(const MultiGraph& g) {
  json edges = json::array();
  for (EdgeId e : g.edge_ids()) {
    auto [u, v] = g.endpoints(e);
    edges.push_back({u.value, v.value});
  }
  json j{{"n", g.order()}, {"edges", edges}};
  return j.dump();
}

Isomorphism parse_isomorphism_json(const std::string& text) {
  json j = parse_json_text(text);
  if (!j.is_object())
    raise(ErrorKind::ParseError, "isomorphism must be a JSON object");
  Isomorphism phi;
  for (const auto& [key, val] : j.items()) {
    int x = 0;
    try {
      x = std::stoi(key);
    } catch (...) {
      raise(ErrorKind::ParseError, "isomorphism key is not a vertex id");
    }
    phi[VertexId{x}] = VertexId{require_int(val, "isomorphism image")};
  }
  return phi;
}

std::string write_isomorphism_json(const Isomorphism& phi) {
  json j = json::object();
  for (const auto& [x, y] : phi) j[std::to_string(x.value)] = y.value;
  return j.dump();
}

std::vector<VertexId> parse_vertex_sequence_json(const std::string& text) {
  json j = parse_json_text(text);
  if (!j.is_array())
    raise(ErrorKind::ParseError, "vertex sequence must be a JSON array");
  std::vector<VertexId> out;
  for (const auto& item : j)
    out.push_back(VertexId{require_int(item, "vertex id")});
  return out;
}

std::string write_vertex_sequence_json(const std::vector<VertexId>& order) {
  json j = json::array();
  for (VertexId v : order) j.push_back(v.value);
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::ParseError, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorKind::ParseError, "cannot write file: " + path);
  out << content;
}

}  // namespace p2c
