#include "otl/invariants.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <type_traits>
#include <unordered_map>

#include "otl/error.hpp"

namespace otl {

namespace {

// Checked machine coefficients for the sweep; overflow aborts the pass and it is rerun with BigInt.
struct Overflow {};

inline void add_to(__int128& a, const __int128& b) {
  if (__builtin_add_overflow(a, b, &a)) throw Overflow{};
}
inline void add_to(BigInt& a, const BigInt& b) { a += b; }

template <class Coef>
struct Poly {
  int low = 0;
  std::vector<Coef> c;

  void add(const Poly& o, int shift) {
    if (o.c.empty()) return;
    const int olow = o.low + shift;
    if (c.empty()) {
      low = olow;
      c = o.c;
      return;
    }
    const int lo = std::min(low, olow);
    const int hi = std::max(low + static_cast<int>(c.size()), olow + static_cast<int>(o.c.size()));
    if (lo < low) c.insert(c.begin(), static_cast<std::size_t>(low - lo), Coef(0));
    low = lo;
    if (static_cast<int>(c.size()) < hi - lo) c.resize(static_cast<std::size_t>(hi - lo), Coef(0));
    for (std::size_t k = 0; k < o.c.size(); ++k) add_to(c[static_cast<std::size_t>(olow - lo) + k], o.c[k]);
  }

  // Multiply by -A^2 - A^-2.
  Poly times_loop() const {
    Poly r;
    if (c.empty()) return r;
    r.low = low - 2;
    r.c.assign(c.size() + 4, Coef(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      add_to(r.c[k], Coef(-c[k]));
      add_to(r.c[k + 4], Coef(-c[k]));
    }
    return r;
  }
};

// Largest frontier when crossings are added in `order`.
int order_width(const LinkDiagram& d, const std::vector<int>& order) {
  std::vector<char> done(static_cast<std::size_t>(d.crossing_count()), 0);
  int width = 0, best = 0;
  for (int c : order) {
    for (int s = 0; s < 4; ++s) {
      const int m = d.mate(dart(c, s));
      const int mc = dart_crossing(m);
      if (mc == c) continue;
      width += done[static_cast<std::size_t>(mc)] ? -1 : 1;
    }
    done[static_cast<std::size_t>(c)] = 1;
    best = std::max(best, width);
  }
  return best;
}

std::vector<int> greedy_order(const LinkDiagram& d, int start) {
  const int n = d.crossing_count();
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  int next = start;
  while (static_cast<int>(order.size()) < n) {
    if (next < 0) {
      // Prefer crossings that close the most frontier strands, then open the fewest.
      int best_score = -100;
      for (int c = 0; c < n; ++c) {
        if (done[static_cast<std::size_t>(c)]) continue;
        int closes = 0, opens = 0;
        for (int s = 0; s < 4; ++s) {
          const int mc = dart_crossing(d.mate(dart(c, s)));
          if (mc == c) continue;
          if (done[static_cast<std::size_t>(mc)]) ++closes;
          else ++opens;
        }
        const int score = closes == 0 ? -50 - opens : 2 * closes - opens;
        if (score > best_score) {
          best_score = score;
          next = c;
        }
      }
    }
    done[static_cast<std::size_t>(next)] = 1;
    order.push_back(next);
    next = -1;
  }
  return order;
}

template <class Coef>
Poly<Coef> sweep(const LinkDiagram& d, const std::vector<int>& order) {
  const int n = d.crossing_count();
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<int> pos(static_cast<std::size_t>(4 * n), -1);  // frontier position of an open dart
  std::vector<int> frontier;
  using Key = std::string;
  std::unordered_map<Key, Poly<Coef>> states;
  Poly<Coef> one;
  one.c.push_back(Coef(1));
  states.emplace(Key(), one);

  std::vector<int> link1, link2, newpos;
  for (int c : order) {
    const int w = static_cast<int>(frontier.size());
    // Arc links among the four new darts and the old frontier, independent of the state.
    std::vector<std::pair<int, int>> arcs;
    std::vector<char> closed(static_cast<std::size_t>(w), 0);
    std::vector<int> opened;
    for (int s = 0; s < 4; ++s) {
      const int m = d.mate(dart(c, s));
      const int mc = dart_crossing(m);
      if (mc == c) {
        if (dart_slot(m) > s) arcs.emplace_back(w + s, w + dart_slot(m));
      } else if (done[static_cast<std::size_t>(mc)]) {
        const int p = pos[static_cast<std::size_t>(m)];
        arcs.emplace_back(w + s, p);
        closed[static_cast<std::size_t>(p)] = 1;
      } else {
        opened.push_back(s);
      }
    }
    // New frontier: surviving old darts in order, then the opened darts.
    std::vector<int> nf;
    newpos.assign(static_cast<std::size_t>(w + 4), -1);
    for (int i = 0; i < w; ++i)
      if (!closed[static_cast<std::size_t>(i)]) {
        newpos[static_cast<std::size_t>(i)] = static_cast<int>(nf.size());
        nf.push_back(frontier[static_cast<std::size_t>(i)]);
      }
    for (int s : opened) {
      newpos[static_cast<std::size_t>(w + s)] = static_cast<int>(nf.size());
      nf.push_back(dart(c, s));
    }

    std::unordered_map<Key, Poly<Coef>> next;
    next.reserve(states.size() * 2);
    const int total = w + 4;
    for (const auto& [key, poly] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        link1.assign(static_cast<std::size_t>(total), -1);
        link2.assign(static_cast<std::size_t>(total), -1);
        auto join = [&](int a, int b) {
          (link1[static_cast<std::size_t>(a)] < 0 ? link1[static_cast<std::size_t>(a)]
                                                  : link2[static_cast<std::size_t>(a)]) = b;
          (link1[static_cast<std::size_t>(b)] < 0 ? link1[static_cast<std::size_t>(b)]
                                                  : link2[static_cast<std::size_t>(b)]) = a;
        };
        for (int i = 0; i < w; ++i)
          if (static_cast<unsigned char>(key[static_cast<std::size_t>(i)]) > i) join(i, static_cast<unsigned char>(key[static_cast<std::size_t>(i)]));
        // A joins slots (0,1),(2,3); B joins (0,3),(1,2).
        if (smoothing == 0) {
          join(w + 0, w + 1);
          join(w + 2, w + 3);
        } else {
          join(w + 0, w + 3);
          join(w + 1, w + 2);
        }
        for (auto [a, b] : arcs) join(a, b);

        Key nk(nf.size(), 0);
        std::vector<char> seen(static_cast<std::size_t>(total), 0);
        // Every node has at most two links; open ends have one, so components are paths or cycles.
        auto step = [&](int cur, int prev) {
          const int a = link1[static_cast<std::size_t>(cur)];
          return a != prev ? a : link2[static_cast<std::size_t>(cur)];
        };
        for (int i = 0; i < total; ++i) {
          if (newpos[static_cast<std::size_t>(i)] < 0 || seen[static_cast<std::size_t>(i)]) continue;
          int prev = -1, cur = i;
          for (;;) {
            seen[static_cast<std::size_t>(cur)] = 1;
            const int nxt = step(cur, prev);
            if (nxt < 0) break;
            prev = cur;
            cur = nxt;
          }
          const int p = newpos[static_cast<std::size_t>(i)], q = newpos[static_cast<std::size_t>(cur)];
          nk[static_cast<std::size_t>(p)] = static_cast<char>(q);
          nk[static_cast<std::size_t>(q)] = static_cast<char>(p);
        }
        int loops = 0;
        for (int i = 0; i < total; ++i) {
          if (seen[static_cast<std::size_t>(i)]) continue;
          ++loops;
          int prev = -1, cur = i;
          do {
            seen[static_cast<std::size_t>(cur)] = 1;
            const int nxt = step(cur, prev);
            prev = cur;
            cur = nxt;
          } while (cur != i);
        }
        Poly<Coef> term = poly;
        for (int k = 0; k < loops; ++k) term = term.times_loop();
        next[nk].add(term, smoothing == 0 ? 1 : -1);
      }
    }
    states = std::move(next);
    for (int i = 0; i < w; ++i)
      if (closed[static_cast<std::size_t>(i)]) pos[static_cast<std::size_t>(frontier[static_cast<std::size_t>(i)])] = -1;
    frontier = std::move(nf);
    for (int i = 0; i < static_cast<int>(frontier.size()); ++i) pos[static_cast<std::size_t>(frontier[static_cast<std::size_t>(i)])] = i;
    done[static_cast<std::size_t>(c)] = 1;
  }
  if (states.size() != 1 || !states.begin()->first.empty())
    throw Error(ErrorKind::Internal, "bracket sweep ended with open strands");
  return states.begin()->second;
}

template <class Coef>
LaurentPoly to_laurent(const Poly<Coef>& p) {
  std::vector<BigInt> c;
  c.reserve(p.c.size());
  for (const auto& x : p.c) {
    if constexpr (std::is_same_v<Coef, BigInt>) {
      c.push_back(x);
    } else {
      // Split the 128-bit value into two 64-bit halves.
      const bool neg = x < 0;
      unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
      BigInt v = static_cast<unsigned long long>(u >> 64);
      v <<= 64;
      v += static_cast<unsigned long long>(u & ~0ULL);
      c.push_back(neg ? BigInt(-v) : v);
    }
  }
  return LaurentPoly::from_coefficients(p.low, std::move(c));
}

}  // namespace

LaurentPoly loop_value() { return LaurentPoly(-1, 2) + LaurentPoly(-1, -2); }

std::vector<int> sweep_order(const LinkDiagram& d, int* width) {
  const int n = d.crossing_count();
  std::vector<int> best;
  int best_width = 1 << 30;
  const int starts = std::min(n, 64);
  for (int s = 0; s < starts; ++s) {
    auto order = greedy_order(d, s * n / std::max(starts, 1));
    const int w = order_width(d, order);
    if (w < best_width) {
      best_width = w;
      best = std::move(order);
    }
  }
  if (width) *width = n ? best_width : 0;
  return best;
}

LaurentPoly bracket(const LinkDiagram& d, const BracketOptions& opt) {
  if (d.crossing_count() == 0) return d.loops == 0 ? LaurentPoly(1) : loop_value().pow(d.loops - 1);
  LaurentPoly result;
  {
    int width = 0;
    const auto order = sweep_order(d, &width);
    if (width > opt.width_cap || width > 250)
      throw Error(ErrorKind::BudgetExceeded,
                  "bracket sweep needs " + std::to_string(width) + " open strands (cap " +
                      std::to_string(opt.width_cap) + ")");
    LaurentPoly raw;
    try {
      raw = to_laurent(sweep<__int128>(d, order));
    } catch (const Overflow&) {
      raw = to_laurent(sweep<BigInt>(d, order));
    }
    // The sweep counts every closed loop; normalize so a single circle is 1.
    result = raw.divided_by(loop_value());
  }
  return result * loop_value().pow(d.loops);
}

LaurentPoly bracket_naive(const LinkDiagram& d) {
  const int n = d.crossing_count();
  if (n > 24) throw Error(ErrorKind::BudgetExceeded, "naive state sum limited to 24 crossings");
  // count[a][l]: states with a A-smoothings and l loops.
  std::vector<std::vector<BigInt>> count(static_cast<std::size_t>(n + 1),
                                         std::vector<BigInt>(static_cast<std::size_t>(2 * n + 2)));
  std::vector<int> parent(static_cast<std::size_t>(4 * n));
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      for (int s = 0; s < 4; ++s) unite(dart(c, s), d.mate(dart(c, s)));
      if (mask >> c & 1) {
        ++a_count;
        unite(dart(c, 0), dart(c, 1));
        unite(dart(c, 2), dart(c, 3));
      } else {
        unite(dart(c, 0), dart(c, 3));
        unite(dart(c, 1), dart(c, 2));
      }
    }
    int loops = 0;
    for (int x = 0; x < 4 * n; ++x)
      if (find(x) == x) ++loops;
    count[static_cast<std::size_t>(a_count)][static_cast<std::size_t>(loops)] += 1;
  }
  LaurentPoly total;
  const LaurentPoly delta = loop_value();
  for (int a = 0; a <= n; ++a)
    for (int l = 1; l <= 2 * n + 1; ++l) {
      const BigInt& k = count[static_cast<std::size_t>(a)][static_cast<std::size_t>(l)];
      if (k != 0) total += LaurentPoly(k, 2 * a - n) * delta.pow(l - 1);
    }
  if (n == 0) return d.loops == 0 ? LaurentPoly(1) : delta.pow(d.loops - 1);
  return total * delta.pow(d.loops);
}

LaurentPoly jones_any(const LinkDiagram& d, const BracketOptions& opt) {
  int w = 0;
  for (int c = 0; c < d.crossing_count(); ++c) w += d.sign(c);
  LaurentPoly b = bracket(d, opt).shifted(-3 * w);
  return (w % 2 != 0) ? -b : b;
}

LaurentPoly jones(const LinkDiagram& d, const BracketOptions& opt) {
  if (!d.oriented) throw Error(ErrorKind::Unoriented, "Jones polynomial needs an oriented diagram");
  return jones_any(d, opt);
}

namespace {

// Exponent of t for A^e, as a reduced fraction p/q.
std::pair<int, int> t_exponent(int e) {
  int p = -e, q = 4;
  const int g = std::gcd(p < 0 ? -p : p, q);
  return {p / g, q / g};
}

}  // namespace

std::string to_t_string(const LaurentPoly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  // Increasing A exponent is decreasing t exponent.
  for (int e = poly.low(); e <= poly.high(); ++e) {
    BigInt c = poly.coeff(e);
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    const auto [p, q] = t_exponent(e);
    if (c != 1 || p == 0) out += c.str();
    if (p == 0) continue;
    out += "t";
    if (q == 1) {
      if (p != 1) out += "^" + std::to_string(p);
    } else {
      out += "^(" + std::to_string(p) + "/" + std::to_string(q) + ")";
    }
  }
  return out;
}

nlohmann::json to_t_json(const LaurentPoly& poly) {
  nlohmann::json terms = nlohmann::json::object();
  for (int e = poly.low(); !poly.is_zero() && e <= poly.high(); ++e) {
    const BigInt c = poly.coeff(e);
    if (c == 0) continue;
    const auto [p, q] = t_exponent(e);
    const std::string key = q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q);
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      terms[key] = static_cast<long long>(c);
    else
      terms[key] = c.str();
  }
  return nlohmann::json{{"t", terms}};
}

bool equal_up_to_unknots(const LinkDiagram& d1, const LinkDiagram& d2) {
  if (!d1.oriented || !d2.oriented)
    throw Error(ErrorKind::Unoriented, "comparison needs oriented diagrams");
  auto [s1, drop1] = strip_trivial(d1);
  auto [s2, drop2] = strip_trivial(d2);
  (void)drop1;
  (void)drop2;
  const int c1 = components(s1), c2 = components(s2);
  const LaurentPoly j1 = jones(s1), j2 = jones(s2);
  if (c1 == c2) return j1 == j2;
  // Split unknots the simplifier could not separate still contribute one loop factor each.
  if (c1 > c2) return j1 == j2 * loop_value().pow(c1 - c2);
  return j2 == j1 * loop_value().pow(c2 - c1);
}

}  // namespace otl
