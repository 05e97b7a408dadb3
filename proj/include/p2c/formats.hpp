#pragma once

#include <string>
#include <vector>

#include "p2c/graph.hpp"

namespace p2c {

// graph6 encoding of a simple graph. Vertices map to 1-based ids: byte
// position k in the triangle corresponds to VertexId{k+1}. Writing uses the
// ascending vertex order of the graph, so ids themselves are not preserved
// across a round trip, only the labeled structure on 1..n.
SimpleGraph parse_graph6(const std::string& text);
std::string write_graph6(const SimpleGraph& g);

// JSON edge lists: {"n": <int>, "edges": [[u, v], ...]} with 1-based
// vertices. For simple graphs self-loops and repeated pairs are parse errors.
// For multigraphs repeated pairs are parallel edges, [u, u] is a self-loop,
// and EdgeIds are assigned 0..m-1 in file order; that assignment is the
// replay contract, so serialization emits edges in exactly id order.
SimpleGraph parse_simple_json(const std::string& text);
std::string write_simple_json(const SimpleGraph& g);

MultiGraph parse_multi_json(const std::string& text);
std::string write_multi_json(const MultiGraph& g);

// Solution files. An isomorphism is a JSON object {"1": 4, ...}; a cycle is
// a JSON array of vertex ids in visiting order.
Isomorphism parse_isomorphism_json(const std::string& text);
std::string write_isomorphism_json(const Isomorphism& phi);

std::vector<VertexId> parse_vertex_sequence_json(const std::string& text);
std::string write_vertex_sequence_json(const std::vector<VertexId>& order);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace p2c
