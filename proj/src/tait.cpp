#include "otl/tait.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "otl/error.hpp"

namespace otl {

namespace {

void inorder_edges(const PlaneTree& t, int offset, int sign, std::vector<TaitEdge>& out) {
  if (t.is_leaf()) return;
  const int left = t.child(0).leaf_count();
  inorder_edges(t.child(0), offset, sign, out);
  out.push_back({offset, offset + left, sign, 0});
  inorder_edges(t.child(1), offset + left, sign, out);
}

int other_end(int h) { return h ^ 1; }
int end_vertex(const SignedTaitGraph& g, int h) {
  const auto& e = g.edges[static_cast<std::size_t>(h / 2)];
  return (h & 1) ? e.v : e.u;
}

// Successor of edge end h in the rotation at its vertex.
std::vector<int> rotation_successor(const SignedTaitGraph& g) {
  std::vector<int> next(2 * g.edges.size(), -1);
  for (const auto& rot : g.rotation)
    for (std::size_t k = 0; k < rot.size(); ++k)
      next[static_cast<std::size_t>(rot[k])] = rot[(k + 1) % rot.size()];
  return next;
}

// Face orbits of edge ends: h -> successor(other_end(h)).
std::vector<int> face_of_ends(const SignedTaitGraph& g, int& faces) {
  const auto next = rotation_successor(g);
  std::vector<int> face(next.size(), -1);
  faces = 0;
  for (std::size_t h0 = 0; h0 < next.size(); ++h0) {
    if (face[h0] >= 0) continue;
    int h = static_cast<int>(h0);
    while (face[static_cast<std::size_t>(h)] < 0) {
      face[static_cast<std::size_t>(h)] = faces;
      h = next[static_cast<std::size_t>(other_end(h))];
    }
    ++faces;
  }
  return face;
}

int component_count(const SignedTaitGraph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int comps = g.n;
  for (const auto& e : g.edges) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --comps;
    }
  }
  return comps;
}

std::vector<std::vector<int>> line_rotation(int n, const std::vector<TaitEdge>& edges) {
  struct Item {
    int w, id, end;
  };
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    std::vector<Item> top_right, top_left, bot_left, bot_right;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto& ed = edges[e];
      for (int side = 0; side < 2; ++side) {
        const int at = side ? ed.v : ed.u;
        if (at != x) continue;
        const int w = side ? ed.u : ed.v;
        Item it{w, ed.id, edge_end(static_cast<int>(e), side)};
        const bool right = w > x;
        if (ed.sign > 0) (right ? top_right : top_left).push_back(it);
        else (right ? bot_right : bot_left).push_back(it);
      }
    }
    // Counterclockwise from east: top side right to left, then bottom side left to right.
    // Nearer endpoints are inner; among parallel edges the lower id is outer.
    std::sort(top_right.begin(), top_right.end(), [](const Item& a, const Item& b) {
      return a.w != b.w ? a.w < b.w : a.id > b.id;
    });
    std::sort(top_left.begin(), top_left.end(), [](const Item& a, const Item& b) {
      return a.w != b.w ? a.w < b.w : a.id < b.id;
    });
    std::sort(bot_left.begin(), bot_left.end(), [](const Item& a, const Item& b) {
      return a.w != b.w ? a.w > b.w : a.id > b.id;
    });
    std::sort(bot_right.begin(), bot_right.end(), [](const Item& a, const Item& b) {
      return a.w != b.w ? a.w > b.w : a.id < b.id;
    });
    auto& r = rot[static_cast<std::size_t>(x)];
    for (auto* part : {&top_right, &top_left, &bot_left, &bot_right})
      for (const auto& it : *part) r.push_back(it.end);
  }
  return rot;
}

}  // namespace

bool is_laminar(const std::vector<TaitEdge>& edges, int sign) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].sign != sign) continue;
    const int a = std::min(edges[i].u, edges[i].v), b = std::max(edges[i].u, edges[i].v);
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[j].sign != sign) continue;
      const int c = std::min(edges[j].u, edges[j].v), d = std::max(edges[j].u, edges[j].v);
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  }
  return true;
}

SignedTaitGraph line_graph(int n, std::vector<TaitEdge> edges) {
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw Error(ErrorKind::OutOfRange, "edge endpoint out of range");
    if (e.u == e.v) throw Error(ErrorKind::NonLaminar, "self-loop on the vertex line");
    if (e.sign != 1 && e.sign != -1) throw Error(ErrorKind::Parse, "edge sign must be +1 or -1");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  if (!is_laminar(edges, 1) || !is_laminar(edges, -1)) throw Error(ErrorKind::NonLaminar, "arcs of one sign cross");
  SignedTaitGraph g;
  g.n = n;
  g.rotation = line_rotation(n, edges);
  g.edges = std::move(edges);
  return g;
}

SignedTaitGraph tait_graph(const PlaneTree& top, const PlaneTree& bottom) {
  if (top.arity() != 2 || bottom.arity() != 2) throw Error(ErrorKind::ArityMismatch, "Tait graphs need binary trees");
  if (top.leaf_count() != bottom.leaf_count()) throw Error(ErrorKind::OutOfRange, "tree pair leaf counts differ");
  std::vector<TaitEdge> edges;
  inorder_edges(top, 0, 1, edges);
  inorder_edges(bottom, 0, -1, edges);
  for (std::size_t k = 0; k < edges.size(); ++k) edges[k].id = static_cast<int>(k);
  return line_graph(top.leaf_count(), std::move(edges));
}

SignedTaitGraph tait_graph(const GroupElement& g) { return tait_graph(g.top(), g.bottom()); }

namespace {

// 2-coloring by BFS per component, first vertex of each component gets +1; empty if odd cycle.
std::vector<int> two_color(const SignedTaitGraph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
  for (const auto& e : g.edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> color(static_cast<std::size_t>(g.n), 0);
  for (int s = 0; s < g.n; ++s) {
    if (color[static_cast<std::size_t>(s)]) continue;
    color[static_cast<std::size_t>(s)] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (!color[static_cast<std::size_t>(y)]) {
          color[static_cast<std::size_t>(y)] = -color[static_cast<std::size_t>(x)];
          q.push(y);
        } else if (color[static_cast<std::size_t>(y)] == color[static_cast<std::size_t>(x)]) {
          return {};
        }
      }
    }
  }
  return color;
}

}  // namespace

bool is_bipartite(const SignedTaitGraph& g) { return g.n == 0 || !two_color(g).empty(); }

bool is_connected(const SignedTaitGraph& g) { return g.n <= 1 || component_count(g) == 1; }

SignedTaitGraph canonical_coloring(const SignedTaitGraph& g) {
  auto color = two_color(g);
  if (g.n > 0 && color.empty()) throw Error(ErrorKind::NotBipartite, "Tait graph has an odd cycle");
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "Tait graph is disconnected");
  SignedTaitGraph out = g;
  out.coloring = std::move(color);
  return out;
}

int face_count(const SignedTaitGraph& g) {
  int faces = 0;
  face_of_ends(g, faces);
  for (int x = 0; x < g.n; ++x)
    if (g.rotation[static_cast<std::size_t>(x)].empty()) ++faces;
  return faces;
}

bool is_plane_embedding(const SignedTaitGraph& g) {
  if (static_cast<int>(g.rotation.size()) != g.n) return false;
  std::vector<int> seen(2 * g.edges.size(), 0);
  for (int x = 0; x < g.n; ++x)
    for (int h : g.rotation[static_cast<std::size_t>(x)]) {
      if (h < 0 || h >= static_cast<int>(seen.size()) || seen[static_cast<std::size_t>(h)]++ || end_vertex(g, h) != x)
        return false;
    }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
  const int v = g.n, e = static_cast<int>(g.edges.size());
  return v - e + face_count(g) == 2 * component_count(g);
}

namespace {

// Drops dead vertices and edges, renumbering in order.
SignedTaitGraph compact(const SignedTaitGraph& g, const std::vector<bool>& vertex_alive,
                        const std::vector<bool>& edge_alive) {
  std::vector<int> vmap(static_cast<std::size_t>(g.n), -1), emap(g.edges.size(), -1);
  SignedTaitGraph out;
  for (int x = 0; x < g.n; ++x)
    if (vertex_alive[static_cast<std::size_t>(x)]) vmap[static_cast<std::size_t>(x)] = out.n++;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!edge_alive[e]) continue;
    emap[e] = static_cast<int>(out.edges.size());
    TaitEdge ed = g.edges[e];
    ed.u = vmap[static_cast<std::size_t>(ed.u)];
    ed.v = vmap[static_cast<std::size_t>(ed.v)];
    out.edges.push_back(ed);
  }
  out.rotation.resize(static_cast<std::size_t>(out.n));
  for (int x = 0; x < g.n; ++x) {
    if (!vertex_alive[static_cast<std::size_t>(x)]) continue;
    auto& r = out.rotation[static_cast<std::size_t>(vmap[static_cast<std::size_t>(x)])];
    for (int h : g.rotation[static_cast<std::size_t>(x)]) {
      const int e = emap[static_cast<std::size_t>(h / 2)];
      if (e >= 0) r.push_back(edge_end(e, h & 1));
    }
  }
  // Keep u < v with matching end sides.
  for (std::size_t e = 0; e < out.edges.size(); ++e) {
    auto& ed = out.edges[e];
    if (ed.u <= ed.v) continue;
    std::swap(ed.u, ed.v);
    for (auto& r : out.rotation)
      for (int& h : r)
        if (h / 2 == static_cast<int>(e)) h ^= 1;
  }
  if (g.coloring) {
    std::vector<int> c;
    for (int x = 0; x < g.n; ++x)
      if (vertex_alive[static_cast<std::size_t>(x)]) c.push_back((*g.coloring)[static_cast<std::size_t>(x)]);
    out.coloring = std::move(c);
  }
  return out;
}

void remove_end(std::vector<int>& rot, int h) { rot.erase(std::remove(rot.begin(), rot.end(), h), rot.end()); }

}  // namespace

ReideResult reide_moves(const SignedTaitGraph& input) {
  ReideResult res;
  SignedTaitGraph g = input;
  for (;;) {
    const std::size_t ne = g.edges.size();
    std::vector<bool> valive(static_cast<std::size_t>(g.n), true), ealive(ne, true);
    bool moved = false;

    // (I) 1-valent vertex.
    for (int x = 0; x < g.n && !moved; ++x) {
      const auto& r = g.rotation[static_cast<std::size_t>(x)];
      if (r.size() != 1) continue;
      const int e = r[0] / 2;
      const auto& ed = g.edges[static_cast<std::size_t>(e)];
      if (ed.u == ed.v) continue;
      const int y = ed.u == x ? ed.v : ed.u;
      remove_end(g.rotation[static_cast<std::size_t>(y)], r[0] ^ 1);
      valive[static_cast<std::size_t>(x)] = false;
      ealive[static_cast<std::size_t>(e)] = false;
      res.log.push_back({"I", {x, y}, {ed.id}});
      moved = true;
    }

    // (IIa) 2-valent vertex with opposite signs; skipped when contraction would create a loop.
    for (int x = 0; x < g.n && !moved; ++x) {
      const auto& r = g.rotation[static_cast<std::size_t>(x)];
      if (r.size() != 2) continue;
      const int e1 = r[0] / 2, e2 = r[1] / 2;
      if (e1 == e2) continue;
      const auto& a = g.edges[static_cast<std::size_t>(e1)];
      const auto& b = g.edges[static_cast<std::size_t>(e2)];
      if (a.sign == b.sign || a.u == a.v || b.u == b.v) continue;
      const int u = a.u == x ? a.v : a.u;
      const int w = b.u == x ? b.v : b.u;
      if (u == w) continue;
      bool adjacent = false;
      for (const auto& ed : g.edges) adjacent = adjacent || (ed.u == std::min(u, w) && ed.v == std::max(u, w));
      if (adjacent) continue;
      const int hu = r[0] ^ 1, hw = r[1] ^ 1;  // ends at u and w
      const int keep = std::min(u, w), drop = std::max(u, w);
      auto rotate_after = [](const std::vector<int>& rot, int h) {
        std::vector<int> out;
        const auto it = std::find(rot.begin(), rot.end(), h);
        const std::size_t k = static_cast<std::size_t>(it - rot.begin());
        for (std::size_t j = 1; j < rot.size(); ++j) out.push_back(rot[(k + j) % rot.size()]);
        return out;
      };
      std::vector<int> merged = rotate_after(g.rotation[static_cast<std::size_t>(u)], hu);
      const auto tail = rotate_after(g.rotation[static_cast<std::size_t>(w)], hw);
      merged.insert(merged.end(), tail.begin(), tail.end());
      for (auto& ed : g.edges) {
        if (ed.u == drop) ed.u = keep;
        if (ed.v == drop) ed.v = keep;
      }
      g.rotation[static_cast<std::size_t>(keep)] = std::move(merged);
      g.rotation[static_cast<std::size_t>(drop)].clear();
      g.rotation[static_cast<std::size_t>(x)].clear();
      valive[static_cast<std::size_t>(x)] = false;
      valive[static_cast<std::size_t>(drop)] = false;
      ealive[static_cast<std::size_t>(e1)] = false;
      ealive[static_cast<std::size_t>(e2)] = false;
      res.log.push_back({"IIa", {x, u, w}, {a.id, b.id}});
      moved = true;
    }

    // (IIb) opposite-sign parallel pair bounding a face.
    if (!moved) {
      int faces = 0;
      const auto face = face_of_ends(g, faces);
      std::vector<std::vector<int>> members(static_cast<std::size_t>(faces));
      for (std::size_t h = 0; h < face.size(); ++h) members[static_cast<std::size_t>(face[h])].push_back(static_cast<int>(h));
      for (const auto& m : members) {
        if (m.size() != 2) continue;
        const int e1 = m[0] / 2, e2 = m[1] / 2;
        if (e1 == e2) continue;
        const auto& a = g.edges[static_cast<std::size_t>(e1)];
        const auto& b = g.edges[static_cast<std::size_t>(e2)];
        if (a.sign == b.sign || a.u == a.v || std::minmax(a.u, a.v) != std::minmax(b.u, b.v)) continue;
        for (int h : {edge_end(e1, 0), edge_end(e1, 1), edge_end(e2, 0), edge_end(e2, 1)})
          remove_end(g.rotation[static_cast<std::size_t>(end_vertex(g, h))], h);
        ealive[static_cast<std::size_t>(e1)] = false;
        ealive[static_cast<std::size_t>(e2)] = false;
        res.log.push_back({"IIb", {a.u, a.v}, {a.id, b.id}});
        moved = true;
        break;
      }
    }

    if (!moved) break;
    g = compact(g, valive, ealive);
  }
  res.graph = std::move(g);
  return res;
}

std::string to_dot(const SignedTaitGraph& g) {
  std::ostringstream out;
  out << "graph Gamma {\n";
  for (int x = 0; x < g.n; ++x) {
    out << "  v" << x << " [label=\"" << x;
    if (g.coloring) out << ((*g.coloring)[static_cast<std::size_t>(x)] > 0 ? " +" : " -");
    out << "\"";
    if (g.coloring) out << ", color=\"" << ((*g.coloring)[static_cast<std::size_t>(x)] > 0 ? "+" : "-") << "\"";
    out << "];\n";
  }
  for (const auto& e : g.edges)
    out << "  v" << e.u << " -- v" << e.v << " [label=\"" << (e.sign > 0 ? "+" : "-") << "\", id=" << e.id << "];\n";
  out << "}\n";
  return out.str();
}

std::string to_svg(const SignedTaitGraph& g) {
  const int step = 40, margin = 30;
  const int width = 2 * margin + step * std::max(0, g.n - 1);
  int tallest = 1;
  for (const auto& e : g.edges) tallest = std::max(tallest, e.v - e.u);
  const int half = step * tallest / 2 + 10;
  const int height = 2 * half + 2 * margin;
  const int line = margin + half;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  for (const auto& e : g.edges) {
    const int x1 = margin + step * e.u, x2 = margin + step * e.v;
    const int r = (x2 - x1) / 2;
    out << "  <path d=\"M " << x1 << ' ' << line << " A " << r << ' ' << r << " 0 0 " << (e.sign > 0 ? 1 : 0) << ' '
        << x2 << ' ' << line << "\" fill=\"none\" stroke=\"" << (e.sign > 0 ? "#b22222" : "#1f4e9c")
        << "\" stroke-width=\"2\"/>\n";
  }
  for (int x = 0; x < g.n; ++x) {
    const char* fill = "#ffffff";
    if (g.coloring) fill = (*g.coloring)[static_cast<std::size_t>(x)] > 0 ? "#f4c542" : "#7fb3d5";
    out << "  <circle cx=\"" << margin + step * x << "\" cy=\"" << line << "\" r=\"8\" fill=\"" << fill
        << "\" stroke=\"#000000\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

nlohmann::json graph_to_json(const SignedTaitGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges) edges.push_back({e.u, e.v, e.sign});
  nlohmann::json j{{"n", g.n}, {"edges", edges}};
  if (g.coloring) {
    nlohmann::json c = nlohmann::json::array();
    for (int s : *g.coloring) c.push_back(s > 0 ? "+" : "-");
    j["coloring"] = c;
  }
  if (g.rotation != line_rotation(g.n, g.edges)) j["rotation"] = g.rotation;
  return j;
}

SignedTaitGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw Error(ErrorKind::Parse, "graph JSON needs \"n\" and \"edges\"");
  std::vector<TaitEdge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw Error(ErrorKind::Parse, "edge must be [u,v,sign]");
    edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), static_cast<int>(edges.size())});
  }
  const int n = j.at("n").get<int>();
  SignedTaitGraph g;
  if (j.contains("rotation")) {
    g.n = n;
    g.edges = std::move(edges);
    g.rotation = j.at("rotation").get<std::vector<std::vector<int>>>();
    if (!is_plane_embedding(g)) throw Error(ErrorKind::NonLaminar, "rotation is not a plane embedding");
  } else {
    g = line_graph(n, std::move(edges));
  }
  if (j.contains("coloring")) {
    std::vector<int> c;
    for (const auto& s : j.at("coloring")) c.push_back(s.get<std::string>() == "+" ? 1 : -1);
    if (static_cast<int>(c.size()) != g.n) throw Error(ErrorKind::Parse, "coloring size differs from n");
    g.coloring = std::move(c);
  }
  return g;
}

}  // namespace otl
