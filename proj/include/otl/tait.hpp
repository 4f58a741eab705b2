#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "otl/thompson.hpp"

namespace otl {

struct TaitEdge {
  int u = 0;
  int v = 0;
  int sign = 1;  // +1 upper, -1 lower
  int id = 0;
  friend bool operator==(const TaitEdge&, const TaitEdge&) = default;
};

// End of edge e at endpoint side 0 (u) or 1 (v), packed as 2*e + side.
inline int edge_end(int e, int side) { return 2 * e + side; }

// Signed plane multigraph. `rotation[x]` lists the edge ends at x counterclockwise, starting
// from the east point of the vertex. Graphs built from tree pairs have all vertices on a line,
// + edges above it and - edges below it.
struct SignedTaitGraph {
  int n = 0;
  std::vector<TaitEdge> edges;
  std::vector<std::vector<int>> rotation;
  std::optional<std::vector<int>> coloring;  // +1 / -1 per vertex
};

// Builds the line embedding; throws NonLaminar if arcs of one sign cross.
SignedTaitGraph line_graph(int n, std::vector<TaitEdge> edges);
bool is_laminar(const std::vector<TaitEdge>& edges, int sign);

SignedTaitGraph tait_graph(const PlaneTree& top, const PlaneTree& bottom);
SignedTaitGraph tait_graph(const GroupElement& g);

bool is_bipartite(const SignedTaitGraph& g);
bool is_connected(const SignedTaitGraph& g);
SignedTaitGraph canonical_coloring(const SignedTaitGraph& g);
// Number of faces of the embedding, summed over connected pieces.
int face_count(const SignedTaitGraph& g);
// Euler check V - E + F = 1 + (#connected pieces).
bool is_plane_embedding(const SignedTaitGraph& g);

struct ReideMove {
  std::string kind;  // "I", "IIa", "IIb"
  std::vector<int> vertices;
  std::vector<int> edge_ids;
};

struct ReideResult {
  SignedTaitGraph graph;
  std::vector<ReideMove> log;
};

ReideResult reide_moves(const SignedTaitGraph& g);

std::string to_dot(const SignedTaitGraph& g);
std::string to_svg(const SignedTaitGraph& g);
nlohmann::json graph_to_json(const SignedTaitGraph& g);
SignedTaitGraph graph_from_json(const nlohmann::json& j);

}  // namespace otl
