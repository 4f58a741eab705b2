#include "otl/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

#include "otl/error.hpp"
#include "otl/invariants.hpp"

namespace otl {

bool LinkDiagram::is_out(int d) const {
  const int s = dart_slot(d);
  return s == 2 || s == (crossings[dart_crossing(d)].over_in + 2) % 4;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

int cw(int d) { return (d & ~3) | ((d + 3) & 3); }

// New slot j of crossing c takes old slot perm[j].
void permute_slots(LinkDiagram& dg, int c, const std::array<int, 4>& perm, int new_over_in) {
  std::array<int, 4> inv{};
  for (int j = 0; j < 4; ++j) inv[perm[j]] = j;
  Crossing& x = dg.crossings[c];
  std::array<int, 4> m{};
  for (int j = 0; j < 4; ++j) m[j] = x.mate[perm[j]];
  x.mate = m;
  x.over_in = new_over_in;
  for (int j = 0; j < 4; ++j) {
    int o = x.mate[j];
    if (dart_crossing(o) == c) o = dart(c, inv[dart_slot(o)]);
    x.mate[j] = o;
  }
  for (int j = 0; j < 4; ++j) {
    const int o = x.mate[j];
    dg.crossings[dart_crossing(o)].mate[dart_slot(o)] = dart(c, j);
  }
}

// Removes dead crossings by joining opposite ends of every strand through them. Darts listed in
// `skip` are ignored (already disconnected). Returns the number of closed loops that vanish.
int eliminate(LinkDiagram& dg, const std::vector<char>& dead, const std::vector<int>& skip = {}) {
  const int n = dg.crossing_count();
  std::vector<char> visited(4 * n, 0);
  for (int d : skip) visited[d] = 1;
  std::vector<std::pair<int, int>> rewired;
  for (int c = 0; c < n; ++c) {
    if (dead[c]) continue;
    for (int s = 0; s < 4; ++s) {
      const int d = dart(c, s);
      int cur = dg.mate(d);
      if (!dead[dart_crossing(cur)]) continue;
      for (int guard = 0;; ++guard) {
        if (guard > 4 * n) throw Error(ErrorKind::Internal, "eliminate: runaway strand");
        visited[cur] = visited[through(cur)] = 1;
        const int nxt = dg.mate(through(cur));
        if (!dead[dart_crossing(nxt)]) {
          rewired.emplace_back(d, nxt);
          break;
        }
        cur = nxt;
      }
    }
  }
  for (auto [d, o] : rewired) dg.crossings[dart_crossing(d)].mate[dart_slot(d)] = o;
  int loops = 0;
  for (int c = 0; c < n; ++c) {
    if (!dead[c]) continue;
    for (int s = 0; s < 4; ++s) {
      const int start = dart(c, s);
      if (visited[start]) continue;
      int cur = start;
      do {
        visited[cur] = visited[through(cur)] = 1;
        cur = dg.mate(through(cur));
      } while (cur != start && !visited[cur]);
      ++loops;
    }
  }
  // Compact.
  std::vector<int> idx(n, -1);
  int k = 0;
  for (int c = 0; c < n; ++c)
    if (!dead[c]) idx[c] = k++;
  std::vector<Crossing> out;
  out.reserve(k);
  for (int c = 0; c < n; ++c) {
    if (dead[c]) continue;
    Crossing x = dg.crossings[c];
    for (int& m : x.mate) m = dart(idx[dart_crossing(m)], dart_slot(m));
    out.push_back(x);
  }
  dg.crossings = std::move(out);
  dg.loops += loops;
  return loops;
}

std::vector<int> incoming_of_component(const LinkDiagram& dg, int start_out) {
  std::vector<int> seq;
  int d = start_out;
  do {
    const int in = dg.mate(d);
    seq.push_back(in);
    d = through(in);
  } while (d != start_out);
  return seq;
}

}  // namespace

LinkDiagram orient_raw(const std::vector<RawCrossing>& raw, int loops, const std::vector<int>& out_hint,
                       bool oriented) {
  const int n = static_cast<int>(raw.size());
  auto mate = [&](int d) { return raw[dart_crossing(d)].mate[dart_slot(d)]; };
  for (int d = 0; d < 4 * n; ++d) {
    const int m = mate(d);
    if (m < 0 || m >= 4 * n || m == d || mate(m) != d) throw Error(ErrorKind::InvalidDiagram, "arc ends are not paired");
  }
  std::vector<int> dir(4 * n, -1);
  auto propagate = [&](int d0, int v0) {
    std::vector<std::pair<int, int>> stack{{d0, v0}};
    while (!stack.empty()) {
      auto [d, v] = stack.back();
      stack.pop_back();
      if (dir[d] >= 0) {
        if (dir[d] != v) throw Error(ErrorKind::InvalidDiagram, "orientation hints are inconsistent");
        continue;
      }
      dir[d] = v;
      stack.emplace_back(mate(d), 1 - v);
      stack.emplace_back(through(d), 1 - v);
    }
  };
  for (int d = 0; d < 4 * n; ++d)
    if (d < static_cast<int>(out_hint.size()) && out_hint[d] >= 0) propagate(d, out_hint[d]);
  for (int d = 0; d < 4 * n; ++d)
    if (dir[d] < 0) propagate(d, 0);

  LinkDiagram dg;
  dg.loops = loops;
  dg.oriented = oriented;
  dg.crossings.resize(n);
  std::vector<int> shift(n);
  for (int c = 0; c < n; ++c) {
    const int under0 = raw[c].over_parity == 1 ? 0 : 1;
    shift[c] = dir[dart(c, under0)] == 0 ? under0 : under0 + 2;
  }
  auto relabel = [&](int d) {
    const int c = dart_crossing(d);
    return dart(c, (dart_slot(d) - shift[c] + 4) % 4);
  };
  for (int c = 0; c < n; ++c) {
    Crossing& x = dg.crossings[c];
    for (int s = 0; s < 4; ++s) x.mate[(s - shift[c] + 4) % 4] = relabel(raw[c].mate[s]);
    const int o = (raw[c].over_parity == 1 ? 1 : 0);
    const int over_in_old = dir[dart(c, o)] == 0 ? o : o + 2;
    x.over_in = (over_in_old - shift[c] + 4) % 4;
    x.origin = raw[c].origin;
    x.origin_sign = raw[c].origin_sign;
  }
  return dg;
}

LinkDiagram build_diagram(const SignedTaitGraph& g) {
  if (!is_plane_embedding(g)) throw Error(ErrorKind::NonLaminar, "graph embedding is not planar");
  const int ne = static_cast<int>(g.edges.size());
  // slot_of[e][side][ab]: ab = 0 for the counterclockwise-first band end at that vertex.
  std::vector<std::array<std::array<int, 2>, 2>> slot_of(ne);
  std::vector<RawCrossing> raw(ne);
  for (int e = 0; e < ne; ++e) {
    const auto& ed = g.edges[e];
    if (ed.sign > 0) {
      // counterclockwise: u.b, u.a, w.b, w.a; over strand joins u.a and w.a
      slot_of[e][0] = {1, 0};
      slot_of[e][1] = {3, 2};
    } else {
      // counterclockwise: u.a, w.b, w.a, u.b; over strand joins u.b and w.b
      slot_of[e][0] = {0, 3};
      slot_of[e][1] = {2, 1};
    }
    raw[e].over_parity = 1;
    raw[e].origin = ed.id;
    raw[e].origin_sign = ed.sign;
  }
  auto end_dart = [&](int h, int ab) { return dart(h / 2, slot_of[h / 2][h & 1][ab]); };
  std::vector<int> hint(4 * ne, -1);
  int loops = 0;
  for (int x = 0; x < g.n; ++x) {
    const auto& r = g.rotation[x];
    if (r.empty()) {
      ++loops;
      continue;
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
      const int from = end_dart(r[i], 1), to = end_dart(r[(i + 1) % r.size()], 0);
      raw[dart_crossing(from)].mate[dart_slot(from)] = to;
      raw[dart_crossing(to)].mate[dart_slot(to)] = from;
      if (g.coloring) {
        const bool ccw = (*g.coloring)[x] > 0;
        hint[from] = ccw ? 1 : 0;
        hint[to] = ccw ? 0 : 1;
      }
    }
  }
  return orient_raw(raw, loops, hint, g.coloring.has_value());
}

LinkDiagram orient(const LinkDiagram& d, const SignedTaitGraph& colored) {
  if (!colored.coloring) throw Error(ErrorKind::MissingColoring, "graph has no coloring");
  if (d.crossing_count() != static_cast<int>(colored.edges.size()))
    throw Error(ErrorKind::InvalidDiagram, "diagram was not built from this graph");
  return build_diagram(colored);
}

LinkDiagram diagram_of(const GroupElement& g) { return build_diagram(canonical_coloring(tait_graph(g))); }

std::vector<int> crossing_signs(const LinkDiagram& d) {
  if (!d.oriented) throw Error(ErrorKind::Unoriented, "crossing signs need an oriented diagram");
  std::vector<int> s(d.crossing_count());
  for (int c = 0; c < d.crossing_count(); ++c) s[c] = d.sign(c);
  return s;
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (int c = 0; c < d.crossing_count(); ++c) w += d.sign(c);
  return w;
}

int negative_crossings(const LinkDiagram& d) {
  int k = 0;
  for (int c = 0; c < d.crossing_count(); ++c) k += d.sign(c) < 0;
  return k;
}

std::vector<std::vector<int>> component_traversals(const LinkDiagram& d) {
  const int n = d.crossing_count();
  std::vector<char> seen(4 * n, 0);
  std::vector<std::vector<int>> out;
  for (int c = 0; c < n; ++c) {
    const int under_out = dart(c, 2);
    const int over_out = dart(c, (d.crossings[c].over_in + 2) % 4);
    for (int start : {under_out, over_out}) {
      if (seen[start]) continue;
      auto seq = incoming_of_component(d, start);
      for (int in : seq) seen[in] = seen[through(in)] = 1;
      out.push_back(std::move(seq));
    }
  }
  return out;
}

int components(const LinkDiagram& d) { return static_cast<int>(component_traversals(d).size()) + d.loops; }

std::vector<int> face_of_darts(const LinkDiagram& d, int& faces) {
  const int n = d.crossing_count();
  std::vector<int> face(4 * n, -1);
  faces = 0;
  for (int d0 = 0; d0 < 4 * n; ++d0) {
    if (face[d0] >= 0) continue;
    int x = d0;
    while (face[x] < 0) {
      face[x] = faces;
      x = cw(d.mate(x));
    }
    ++faces;
  }
  return face;
}

void validate(const LinkDiagram& d) {
  const int n = d.crossing_count();
  UnionFind uf(std::max(n, 1));
  for (int x = 0; x < 4 * n; ++x) {
    const int m = d.mate(x);
    if (m < 0 || m >= 4 * n || m == x || d.mate(m) != x) throw Error(ErrorKind::InvalidDiagram, "mates are not an involution");
    if (d.is_out(x) == d.is_out(m)) throw Error(ErrorKind::InvalidDiagram, "arc orientation is inconsistent");
    uf.unite(dart_crossing(x), dart_crossing(m));
  }
  for (int c = 0; c < n; ++c)
    if (d.crossings[c].over_in != 1 && d.crossings[c].over_in != 3) throw Error(ErrorKind::InvalidDiagram, "bad over slot");
  int pieces = 0;
  for (int c = 0; c < n; ++c) pieces += uf.find(c) == c;
  int faces = 0;
  face_of_darts(d, faces);
  if (faces != n + 2 * pieces) throw Error(ErrorKind::InvalidDiagram, "diagram is not planar");
  if (d.loops < 0) throw Error(ErrorKind::InvalidDiagram, "negative loop count");
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  LinkDiagram out = a;
  const int off = 4 * a.crossing_count();
  for (Crossing x : b.crossings) {
    for (int& m : x.mate) m += off;
    out.crossings.push_back(x);
  }
  out.loops += b.loops;
  out.oriented = a.oriented && b.oriented;
  return out;
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (int c = 0; c < out.crossing_count(); ++c) {
    const int o = out.crossings[c].over_in;
    permute_slots(out, c, {o, (o + 1) % 4, (o + 2) % 4, (o + 3) % 4}, o == 1 ? 3 : 1);
  }
  return out;
}

LinkDiagram reverse(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (int c = 0; c < out.crossing_count(); ++c) permute_slots(out, c, {2, 3, 0, 1}, out.crossings[c].over_in);
  return out;
}

bool apply_r2(LinkDiagram& d, int c1, int c2) {
  if (c1 == c2) return false;
  int faces = 0;
  const auto face = face_of_darts(d, faces);
  for (int s = 0; s < 4; ++s) {
    const int d1 = dart(c1, s);
    const int e1 = d.mate(d1);
    if (dart_crossing(e1) != c2) continue;
    const int d2 = cw(e1);
    const int e2 = d.mate(d2);
    if (cw(e2) != d1 || face[d1] != face[d2]) continue;
    if (is_over_slot(dart_slot(d1)) != is_over_slot(dart_slot(e1))) continue;
    std::vector<char> dead(d.crossing_count(), 0);
    dead[c1] = dead[c2] = 1;
    eliminate(d, dead);
    return true;
  }
  return false;
}

bool is_nugatory(const LinkDiagram& d, int c) {
  int faces = 0;
  const auto face = face_of_darts(d, faces);
  return face[dart(c, 0)] == face[dart(c, 2)] || face[dart(c, 1)] == face[dart(c, 3)];
}

bool apply_nugatory(LinkDiagram& d, int c, bool* was_curl) {
  int faces = 0;
  const auto face = face_of_darts(d, faces);
  int s = -1;
  if (face[dart(c, 0)] == face[dart(c, 2)]) s = 0;
  else if (face[dart(c, 1)] == face[dart(c, 3)]) s = 1;
  if (s < 0) return false;
  // Crossings hanging off slots (a, a+1) without passing through c; empty result on leak.
  auto side = [&](int a, bool& ok) {
    std::vector<int> found;
    std::vector<char> seen(d.crossing_count(), 0);
    seen[c] = 1;
    std::queue<int> q;
    ok = true;
    for (int t : {a, (a + 1) % 4}) {
      const int m = d.mate(dart(c, t));
      if (dart_crossing(m) == c) {
        if (dart_slot(m) != a && dart_slot(m) != (a + 1) % 4) ok = false;
        continue;
      }
      if (!seen[dart_crossing(m)]) {
        seen[dart_crossing(m)] = 1;
        q.push(dart_crossing(m));
      }
    }
    while (!q.empty() && ok) {
      const int x = q.front();
      q.pop();
      found.push_back(x);
      for (int t = 0; t < 4; ++t) {
        const int m = d.mate(dart(x, t));
        const int y = dart_crossing(m);
        if (y == c) {
          if (dart_slot(m) != a && dart_slot(m) != (a + 1) % 4) ok = false;
          continue;
        }
        if (!seen[y]) {
          seen[y] = 1;
          q.push(y);
        }
      }
    }
    return found;
  };
  bool ok1 = false, ok2 = false;
  auto p1 = side(s + 1, ok1);
  auto p2 = side((s + 3) % 4, ok2);
  if (!ok1 && !ok2) return false;
  const auto& flip = (ok1 && (!ok2 || p1.size() <= p2.size())) ? p1 : p2;
  if (was_curl) *was_curl = flip.empty();
  for (int x : flip) {
    const int o = d.crossings[x].over_in;
    permute_slots(d, x, {o, (o + 3) % 4, (o + 2) % 4, (o + 1) % 4}, o);
  }
  std::vector<char> dead(d.crossing_count(), 0);
  dead[c] = 1;
  eliminate(d, dead);
  return true;
}

std::vector<std::vector<int>> bridges(const LinkDiagram& d) {
  std::vector<std::vector<int>> out;
  for (const auto& seq : component_traversals(d)) {
    const int len = static_cast<int>(seq.size());
    auto over = [&](int k) { return is_over_slot(dart_slot(seq[((k % len) + len) % len])); };
    int start = 0;
    while (start < len && over(start) == over(start - 1)) ++start;
    if (start == len) {
      out.push_back(seq);
      continue;
    }
    std::vector<int> run;
    for (int k = 0; k < len; ++k) {
      const int i = start + k;
      if (k > 0 && over(i) != over(i - 1)) {
        out.push_back(run);
        run.clear();
      }
      run.push_back(seq[i % len]);
    }
    out.push_back(run);
  }
  return out;
}

bool apply_detour(LinkDiagram& d, const DetourRequest& req, int* route_length) {
  const auto& piece = req.piece;
  const int m = static_cast<int>(piece.size());
  if (m == 0) return false;
  const bool over = is_over_slot(dart_slot(piece[0]));
  for (int j = 0; j < m; ++j) {
    if (d.is_out(piece[j]) || is_over_slot(dart_slot(piece[j])) != over) return false;
    if (j + 1 < m && d.mate(through(piece[j])) != piece[j + 1]) return false;
  }
  std::vector<char> in_piece(d.crossing_count(), 0);
  for (int in : piece) {
    if (in_piece[dart_crossing(in)]) return false;
    in_piece[dart_crossing(in)] = 1;
  }
  const int in1 = piece.front(), outm = through(piece.back());
  const int a_ext = d.mate(in1), b_ext = d.mate(outm);
  if (a_ext == outm) return false;
  const int max_route = req.max_route >= 0 ? req.max_route : m - 1;

  int faces = 0;
  const auto face = face_of_darts(d, faces);
  UnionFind uf(faces);
  for (int in : piece) {
    const int c = dart_crossing(in), s = dart_slot(in);
    uf.unite(face[dart(c, (s + 3) % 4)], face[dart(c, s)]);
    uf.unite(face[dart(c, (s + 1) % 4)], face[dart(c, (s + 2) % 4)]);
  }
  const int start = uf.find(face[in1]), goal = uf.find(face[outm]);

  std::vector<char> excluded(4 * d.crossing_count(), 0);
  excluded[a_ext] = excluded[outm] = 1;
  for (int j = 0; j + 1 < m; ++j) excluded[through(piece[j])] = 1;
  struct DualEdge {
    int to, arc, l2r, sign;
  };
  std::vector<std::vector<DualEdge>> adj(faces);
  for (int t = 0; t < 4 * d.crossing_count(); ++t) {
    if (!d.is_out(t) || excluded[t]) continue;
    const int l = uf.find(face[t]), r = uf.find(face[d.mate(t)]);
    if (l == r) continue;
    adj[l].push_back({r, t, 1, over ? 1 : -1});
    adj[r].push_back({l, t, 0, over ? -1 : 1});
  }

  // Layered BFS over (class, negatives used).
  const int neg_cap = req.max_route_negative >= 0 ? req.max_route_negative : max_route;
  const int width = neg_cap + 1;
  std::vector<int> dist(faces * width, -1), prev_state(faces * width, -1);
  std::vector<DualEdge> prev_edge(faces * width);
  std::queue<int> q;
  dist[start * width] = 0;
  q.push(start * width);
  int found = -1;
  while (!q.empty()) {
    const int st = q.front();
    q.pop();
    const int cls = st / width, neg = st % width;
    if (cls == goal) {
      found = st;
      break;
    }
    if (dist[st] >= max_route) continue;
    for (const auto& e : adj[cls]) {
      const int nn = neg + (e.sign < 0);
      if (nn > neg_cap) continue;
      const int ns = e.to * width + nn;
      if (dist[ns] >= 0) continue;
      dist[ns] = dist[st] + 1;
      prev_state[ns] = st;
      prev_edge[ns] = e;
      q.push(ns);
    }
  }
  if (found < 0) return false;
  std::vector<DualEdge> route;
  for (int st = found; prev_state[st] >= 0; st = prev_state[st]) route.push_back(prev_edge[st]);
  std::reverse(route.begin(), route.end());
  const int p = static_cast<int>(route.size());
  if (route_length) *route_length = p;

  const int base = d.crossing_count();
  auto set_mate = [&](int a, int b) {
    d.crossings[dart_crossing(a)].mate[dart_slot(a)] = b;
    d.crossings[dart_crossing(b)].mate[dart_slot(b)] = a;
  };
  std::vector<int> r_in(p), r_out(p);
  for (int k = 0; k < p; ++k) {
    const auto& e = route[k];
    const int t = e.arc, h = d.mate(t);
    Crossing x;
    int a_in, a_out;
    if (over && e.l2r) {
      a_in = 0, r_out[k] = 1, a_out = 2, r_in[k] = 3, x.over_in = 3;
    } else if (!over && e.l2r) {
      r_in[k] = 0, a_in = 1, r_out[k] = 2, a_out = 3, x.over_in = 1;
    } else if (over) {
      a_in = 0, r_in[k] = 1, a_out = 2, r_out[k] = 3, x.over_in = 1;
    } else {
      r_in[k] = 0, a_out = 1, r_out[k] = 2, a_in = 3, x.over_in = 3;
    }
    const int c = base + k;
    d.crossings.push_back(x);
    r_in[k] = dart(c, r_in[k]);
    r_out[k] = dart(c, r_out[k]);
    set_mate(t, dart(c, a_in));
    set_mate(dart(c, a_out), h);
  }
  for (int k = 0; k + 1 < p; ++k) set_mate(r_out[k], r_in[k + 1]);
  if (p == 0) {
    set_mate(a_ext, b_ext);
  } else {
    set_mate(a_ext, r_in[0]);
    set_mate(r_out[p - 1], b_ext);
  }
  std::vector<char> dead(d.crossing_count(), 0);
  std::vector<int> skip;
  for (int in : piece) {
    dead[dart_crossing(in)] = 1;
    skip.push_back(in);
    skip.push_back(through(in));
  }
  eliminate(d, dead, skip);
  return true;
}

namespace {

bool find_r2(LinkDiagram& d) {
  int faces = 0;
  const auto face = face_of_darts(d, faces);
  std::vector<int> size(faces, 0);
  for (int f : face) ++size[f];
  for (int x = 0; x < 4 * d.crossing_count(); ++x) {
    if (size[face[x]] != 2) continue;
    const int c1 = dart_crossing(x), c2 = dart_crossing(d.mate(x));
    if (c1 != c2 && apply_r2(d, c1, c2)) return true;
  }
  return false;
}

bool find_detour(LinkDiagram& d, int max_piece, MoveRecord& rec) {
  for (const auto& run : bridges(d)) {
    const int len = static_cast<int>(run.size());
    const bool closed = d.mate(through(run.back())) == run.front();
    for (int i = 0; i < len; ++i) {
      for (int k = 2; k <= std::min(max_piece, len - (closed ? 1 : 0)); ++k) {
        if (!closed && i + k > len) break;
        DetourRequest req;
        for (int j = 0; j < k; ++j) req.piece.push_back(run[(i + j) % len]);
        int p = 0;
        if (apply_detour(d, req, &p)) {
          rec.removed = k;
          rec.added = p;
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

LinkDiagram simplify(const LinkDiagram& input, std::vector<MoveRecord>* log, const SimplifyOptions& opt) {
  LinkDiagram d = input;
  LaurentPoly reference;
  if (opt.verify) reference = jones_any(d);
  for (;;) {
    MoveRecord rec;
    if (find_r2(d)) {
      rec = {"R2", 2, 0};
    } else {
      bool moved = false;
      for (int c = 0; c < d.crossing_count() && !moved; ++c) {
        bool curl = false;
        if (apply_nugatory(d, c, &curl)) {
          rec = {curl ? "R1" : "nugatory", 1, 0};
          moved = true;
        }
      }
      if (!moved && opt.detours && find_detour(d, opt.max_piece, rec)) {
        rec.kind = "detour";
        moved = true;
      }
      if (!moved) break;
    }
    if (log) log->push_back(rec);
    if (opt.verify) {
      validate(d);
      if (jones_any(d) != reference) throw Error(ErrorKind::Internal, "move " + rec.kind + " changed the Jones polynomial");
    }
  }
  return d;
}

std::pair<LinkDiagram, int> strip_trivial(const LinkDiagram& d) {
  LinkDiagram s = simplify(d);
  const int removed = s.loops;
  s.loops = 0;
  return {s, removed};
}

PDCode to_pd(const LinkDiagram& d) {
  PDCode pd;
  pd.loops = d.loops;
  const int n = d.crossing_count();
  std::vector<int> label(4 * n, 0);  // by outgoing dart
  int next = 1;
  for (const auto& seq : component_traversals(d))
    for (int in : seq) label[d.mate(in)] = next++;
  auto arc = [&](int x) { return d.is_out(x) ? label[x] : label[d.mate(x)]; };
  for (int c = 0; c < n; ++c) {
    std::array<int, 4> row{arc(dart(c, 0)), arc(dart(c, 1)), arc(dart(c, 2)), arc(dart(c, 3))};
    if (!d.oriented && row[2] < row[0]) row = {row[2], row[3], row[0], row[1]};
    pd.x.push_back(row);
  }
  return pd;
}

std::string print_pd(const PDCode& pd) {
  std::ostringstream out;
  out << "PD[";
  for (std::size_t k = 0; k < pd.x.size(); ++k) {
    if (k) out << ", ";
    const auto& r = pd.x[k];
    out << "X[" << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << ']';
  }
  out << "] loops=" << pd.loops;
  return out.str();
}

PDCode parse_pd(std::string_view text) {
  PDCode pd;
  std::string s(text);
  std::size_t pos = s.find("PD[");
  if (pos == std::string::npos) throw Error(ErrorKind::Parse, "PD code must start with PD[");
  pos += 3;
  auto skip = [&] {
    while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == ',')) ++pos;
  };
  auto number = [&] {
    skip();
    std::size_t q = pos;
    if (q < s.size() && s[q] == '-') ++q;
    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
    if (q == pos) throw Error(ErrorKind::Parse, "expected a number at offset " + std::to_string(pos));
    const int v = std::stoi(s.substr(pos, q - pos));
    pos = q;
    return v;
  };
  for (;;) {
    skip();
    if (pos >= s.size()) throw Error(ErrorKind::Parse, "unterminated PD code");
    if (s[pos] == ']') {
      ++pos;
      break;
    }
    if (s.compare(pos, 2, "X[") != 0) throw Error(ErrorKind::Parse, "expected X[ at offset " + std::to_string(pos));
    pos += 2;
    std::array<int, 4> row{};
    for (int& v : row) v = number();
    skip();
    if (pos >= s.size() || s[pos] != ']') throw Error(ErrorKind::Parse, "crossing must have four labels");
    ++pos;
    pd.x.push_back(row);
  }
  const std::size_t lp = s.find("loops", pos);
  if (lp != std::string::npos) {
    pos = s.find('=', lp);
    if (pos == std::string::npos) throw Error(ErrorKind::Parse, "expected loops=k");
    ++pos;
    pd.loops = number();
  }
  return pd;
}

LinkDiagram from_pd(const PDCode& pd) {
  const int n = static_cast<int>(pd.x.size());
  std::vector<RawCrossing> raw(n);
  std::vector<std::vector<int>> where;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      const int l = pd.x[c][s];
      if (l < 1 || l > 2 * n) throw Error(ErrorKind::Parse, "PD label out of range 1..2c");
      if (static_cast<int>(where.size()) < l + 1) where.resize(l + 1);
      where[l].push_back(dart(c, s));
    }
  for (int l = 1; l <= 2 * n; ++l) {
    if (l >= static_cast<int>(where.size()) || where[l].size() != 2)
      throw Error(ErrorKind::Parse, "PD label " + std::to_string(l) + " must appear exactly twice");
    const int a = where[l][0], b = where[l][1];
    raw[dart_crossing(a)].mate[dart_slot(a)] = b;
    raw[dart_crossing(b)].mate[dart_slot(b)] = a;
  }
  std::vector<int> hint(4 * n, -1);
  for (int c = 0; c < n; ++c) {
    raw[c].over_parity = 1;
    hint[dart(c, 0)] = 0;
    hint[dart(c, 2)] = 1;
  }
  LinkDiagram d = orient_raw(raw, pd.loops, hint, true);
  validate(d);
  return d;
}

std::string to_gauss(const LinkDiagram& d) {
  std::ostringstream out;
  bool first_comp = true;
  for (const auto& seq : component_traversals(d)) {
    if (!first_comp) out << " | ";
    first_comp = false;
    bool first = true;
    for (int in : seq) {
      if (!first) out << ' ';
      first = false;
      const int c = dart_crossing(in);
      out << (is_over_slot(dart_slot(in)) ? 'O' : 'U') << c + 1 << (d.sign(c) > 0 ? '+' : '-');
    }
  }
  return out.str();
}

nlohmann::json diagram_to_json(const LinkDiagram& d) {
  nlohmann::json signs = nlohmann::json::array();
  for (int c = 0; c < d.crossing_count(); ++c) signs.push_back(d.sign(c));
  return nlohmann::json{{"crossings", d.crossing_count()},
                        {"loops", d.loops},
                        {"components", components(d)},
                        {"oriented", d.oriented},
                        {"writhe", writhe(d)},
                        {"signs", signs},
                        {"pd", print_pd(to_pd(d))}};
}

}  // namespace otl
