// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference implementations used to check the library. They
// work on raw bit masks and edge lists and share no algorithm with it.

#ifndef FORGE_TESTS_ORACLES_H_
#define FORGE_TESTS_ORACLES_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "forge/graph.h"
#include "forge/matroid.h"

namespace oracle {

using Mask = std::uint32_t;
using Family = std::vector<Mask>;

inline bool Has(Mask m, int i) { return (m >> i) & 1u; }

inline Family Sorted(Family f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

inline Family Masks(const std::vector<forge::ElementSet>& sets) {
  Family out;
  for (forge::ElementSet s : sets) out.push_back(s.bits());
  return Sorted(out);
}

inline Family Minimal(const Family& f) {
  Family out;
  for (Mask x : f) {
    bool minimal = x != 0;
    for (Mask y : f) {
      if (y != x && y != 0 && (y & ~x) == 0) minimal = false;
    }
    if (minimal) out.push_back(x);
  }
  return Sorted(out);
}

struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // indexed by edge id
};

inline Graph FromMultigraph(const forge::Multigraph& g) {
  Graph out;
  out.vertices = g.vertex_count();
  for (const forge::GraphEdge& e : g.edges())
    out.edges.push_back({e.tail, e.head});
  return out;
}

// Simple cycles by depth-first search over paths returning to the start.
inline Family Cycles(const Graph& g) {
  std::set<Mask> found;
  const int m = static_cast<int>(g.edges.size());
  std::vector<bool> on_path(g.vertices, false);
  std::function<void(int, int, Mask)> walk = [&](int start, int at, Mask used) {
    for (int e = 0; e < m; ++e) {
      if (Has(used, e)) continue;
      auto [a, b] = g.edges[e];
      if (a != at && b != at) continue;
      const int next = a == at ? b : a;
      if (next == start) {
        found.insert(used | (1u << e));
      } else if (!on_path[next]) {
        on_path[next] = true;
        walk(start, next, used | (1u << e));
        on_path[next] = false;
      }
    }
  };
  for (int v = 0; v < g.vertices; ++v) {
    on_path[v] = true;
    walk(v, v, 0);
    on_path[v] = false;
  }
  return Family(found.begin(), found.end());
}

inline bool ConnectedWithin(const Graph& g, const std::vector<int>& vertices) {
  if (vertices.empty()) return false;
  std::set<int> inside(vertices.begin(), vertices.end());
  std::set<int> seen{vertices[0]};
  std::vector<int> stack{vertices[0]};
  while (!stack.empty()) {
    const int at = stack.back();
    stack.pop_back();
    for (auto [a, b] : g.edges) {
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        if (x == at && inside.count(y) && !seen.count(y)) {
          seen.insert(y);
          stack.push_back(y);
        }
      }
    }
  }
  return seen.size() == inside.size();
}

// Bonds: edge sets between S and C - S with both sides connected, for every
// component C and every proper S holding the least vertex of C.
inline Family Bonds(const Graph& g) {
  std::vector<int> component(g.vertices, -1);
  int count = 0;
  for (int v = 0; v < g.vertices; ++v) {
    if (component[v] >= 0) continue;
    std::vector<int> stack{v};
    component[v] = count;
    while (!stack.empty()) {
      const int at = stack.back();
      stack.pop_back();
      for (auto [a, b] : g.edges) {
        const int next = a == at ? b : (b == at ? a : -1);
        if (next >= 0 && component[next] < 0) {
          component[next] = count;
          stack.push_back(next);
        }
      }
    }
    ++count;
  }
  Family out;
  for (int c = 0; c < count; ++c) {
    std::vector<int> members;
    for (int v = 0; v < g.vertices; ++v) {
      if (component[v] == c) members.push_back(v);
    }
    const int k = static_cast<int>(members.size());
    for (Mask s = 1; s < (1u << k) - 1; s += 2) {
      std::vector<int> side;
      std::vector<int> rest;
      for (int i = 0; i < k; ++i)
        (Has(s, i) ? side : rest).push_back(members[i]);
      if (!ConnectedWithin(g, side) || !ConnectedWithin(g, rest)) continue;
      Mask cut = 0;
      for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        auto [a, b] = g.edges[e];
        const bool a_in = std::count(side.begin(), side.end(), a) > 0;
        const bool b_in = std::count(side.begin(), side.end(), b) > 0;
        if (a_in != b_in) cut |= 1u << e;
      }
      out.push_back(cut);
    }
  }
  return Sorted(out);
}

// Everything below reads a matroid only through its list of circuits.
struct Matroid {
  int n = 0;
  Family circuits;
};

inline Matroid FromLibrary(const forge::Matroid& m) {
  return {m.size(), Masks(m.circuits())};
}

inline bool Independent(const Matroid& m, Mask x) {
  for (Mask c : m.circuits) {
    if ((c & ~x) == 0) return false;
  }
  return true;
}

inline int Rank(const Matroid& m, Mask x) {
  int best = 0;
  for (Mask y = x;; y = (y - 1) & x) {
    if (Independent(m, y)) best = std::max(best, std::popcount(y));
    if (y == 0) break;
  }
  return best;
}

inline Family Bases(const Matroid& m) {
  const Mask all = m.n == 32 ? ~0u : (1u << m.n) - 1;
  const int r = Rank(m, all);
  Family out;
  for (Mask x = 0; x <= all; ++x) {
    if (std::popcount(x) == r && Independent(m, x)) out.push_back(x);
    if (x == all) break;
  }
  return out;
}

// Minimal sets meeting every base.
inline Family Cocircuits(const Matroid& m) {
  const Family bases = Bases(m);
  const Mask all = (1u << m.n) - 1;
  Family meets;
  for (Mask x = 1; x <= all; ++x) {
    bool ok = true;
    for (Mask b : bases) ok = ok && (x & b) != 0;
    if (ok) meets.push_back(x);
  }
  return Minimal(meets);
}

// Circuits of m / contract \ remove, still indexed by the original ids.
inline Family MinorCircuits(const Matroid& m, Mask contract, Mask remove) {
  Family shrunk;
  for (Mask c : m.circuits) {
    // A contracted loop leaves nothing behind and acts as a deletion.
    if ((c & remove) == 0 && (c & ~contract) != 0) {
      shrunk.push_back(c & ~contract);
    }
  }
  return Minimal(shrunk);
}

inline Mask FundamentalCircuit(const Matroid& m, Mask base, int x) {
  for (Mask c : m.circuits) {
    if (Has(c, x) && (c & ~(base | (1u << x))) == 0) return c;
  }
  return 0;
}

inline Mask FundamentalCocircuit(const Matroid& m, Mask base, int y) {
  const Mask all = (1u << m.n) - 1;
  for (Mask b : Cocircuits(m)) {
    if (Has(b, y) && (b & ~((all & ~base) | (1u << y))) == 0) return b;
  }
  return 0;
}

// Backtracking search for a bijection carrying circuits onto circuits.
inline bool Isomorphic(const Matroid& a, const Matroid& b) {
  if (a.n != b.n || a.circuits.size() != b.circuits.size()) return false;
  std::vector<int> profile_a(a.n + 1, 0);
  std::vector<int> profile_b(b.n + 1, 0);
  for (Mask c : a.circuits) ++profile_a[std::popcount(c)];
  for (Mask c : b.circuits) ++profile_b[std::popcount(c)];
  if (profile_a != profile_b) return false;
  const std::set<Mask> target(b.circuits.begin(), b.circuits.end());
  std::vector<int> image(a.n, -1);
  std::vector<bool> taken(b.n, false);
  std::function<bool(int)> assign = [&](int i) {
    // Circuits whose largest element was just placed must land on circuits.
    for (Mask c : a.circuits) {
      if (static_cast<int>(std::bit_width(c)) != i) continue;
      Mask mapped = 0;
      for (int j = 0; j < a.n; ++j) {
        if (Has(c, j)) mapped |= 1u << image[j];
      }
      if (!target.count(mapped)) return false;
    }
    if (i == a.n) return true;
    for (int j = 0; j < b.n; ++j) {
      if (taken[j]) continue;
      taken[j] = true;
      image[i] = j;
      if (assign(i + 1)) return true;
      taken[j] = false;
    }
    image[i] = -1;
    return false;
  };
  return assign(0);
}

// Whether some minor of m is isomorphic to one of `excluded`.
inline bool HasMinorIn(const Matroid& m, const std::vector<Matroid>& excluded) {
  const Mask all = (1u << m.n) - 1;
  for (Mask keep = 0; keep <= all; ++keep) {
    const int size = std::popcount(keep);
    const bool wanted =
        std::any_of(excluded.begin(), excluded.end(),
                    [&](const Matroid& x) { return x.n == size; });
    if (wanted) {
      const Mask gone = all & ~keep;
      // Each removed element is contracted or deleted.
      for (Mask contract = gone;; contract = (contract - 1) & gone) {
        const Family circuits = MinorCircuits(m, contract, gone & ~contract);
        // Compress the kept elements to 0..size-1.
        Matroid small{size, {}};
        for (Mask c : circuits) {
          Mask packed = 0;
          int bit = 0;
          for (int i = 0; i < m.n; ++i) {
            if (!Has(keep, i)) continue;
            if (Has(c, i)) packed |= 1u << bit;
            ++bit;
          }
          small.circuits.push_back(packed);
        }
        small.circuits = Sorted(small.circuits);
        for (const Matroid& x : excluded) {
          if (Isomorphic(small, x)) return true;
        }
        if (contract == 0) break;
      }
    }
    if (keep == all) break;
  }
  return false;
}

// Tree path from u to v along `forest` edges, as edge ids in walking order.
inline std::optional<std::vector<int>> TreePath(const Graph& g, Mask forest,
                                                int u, int v) {
  std::vector<int> path;
  std::vector<bool> seen(g.vertices, false);
  std::function<bool(int)> go = [&](int at) {
    if (at == v) return true;
    seen[at] = true;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      if (!Has(forest, e)) continue;
      auto [a, b] = g.edges[e];
      if (a != at && b != at) continue;
      const int next = a == at ? b : a;
      if (seen[next]) continue;
      path.push_back(e);
      if (go(next)) return true;
      path.pop_back();
    }
    return false;
  };
  if (!go(u)) return std::nullopt;
  return path;
}

// The edges of a cycle in walking order, starting at the tail of its least
// edge and crossing that edge first.
inline std::vector<int> CycleWalk(const Graph& g, Mask cycle) {
  const int first = std::countr_zero(cycle);
  std::vector<int> walk{first};
  int at = g.edges[first].second;
  Mask left = cycle & ~(1u << first);
  while (left != 0) {
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      if (!Has(left, e)) continue;
      auto [a, b] = g.edges[e];
      if (a != at && b != at) continue;
      walk.push_back(e);
      at = a == at ? b : a;
      left &= ~(1u << e);
      break;
    }
  }
  return walk;
}

// Whether two sequences are the same circle up to rotation and reflection.
inline bool SameCircle(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  const int n = static_cast<int>(a.size());
  for (int flip = 0; flip < 2; ++flip) {
    for (int shift = 0; shift < n; ++shift) {
      bool same = true;
      for (int i = 0; i < n && same; ++i) {
        const int j = flip ? (shift - i + n) % n : (shift + i) % n;
        same = a[i] == b[j];
      }
      if (same) return true;
    }
  }
  return n == 0;
}

// Whether m is 3-connected: no separation (X, E - X) with
// r(X) + r(E - X) - r(E) < k while both sides have at least k elements,
// for k = 1, 2.
inline bool ThreeConnected(const Matroid& m) {
  const Mask all = (1u << m.n) - 1;
  const int r = Rank(m, all);
  for (Mask x = 1; x < all; ++x) {
    const int small = std::min(std::popcount(x), m.n - std::popcount(x));
    const int lambda = Rank(m, x) + Rank(m, all & ~x) - r;
    if (lambda < std::min(small, 2)) return false;
  }
  return true;
}

// Lexicographically least base of m/o, comparing ascending id lists.
inline Mask LexLeastBaseOfContraction(const Matroid& m, Mask o) {
  const Matroid mo{m.n, MinorCircuits(m, o, 0)};
  std::vector<int> best;
  Mask best_mask = 0;
  bool found = false;
  for (Mask b : Bases(mo)) {
    const Mask s = b & ~o;
    std::vector<int> ids;
    for (int i = 0; i < m.n; ++i) {
      if (Has(s, i)) ids.push_back(i);
    }
    if (!found || ids < best) {
      best = ids;
      best_mask = s;
      found = true;
    }
  }
  return best_mask;
}

// E - s - o - loops(m/s) with s = LexLeastBaseOfContraction(m, o).
inline Mask Bridges(const Matroid& m, Mask o) {
  const Mask s = LexLeastBaseOfContraction(m, o);
  Mask loops = 0;
  for (Mask c : MinorCircuits(m, s, 0)) {
    if (std::popcount(c) == 1) loops |= c;
  }
  const Mask all = (1u << m.n) - 1;
  return all & ~s & ~o & ~loops;
}

// Whether the ends of edge x fall in different pieces of `cycle` once its
// edges e and f are cut.
inline bool CycleSplits(const Graph& g, Mask cycle, int e, int f, int x) {
  std::vector<int> parent(g.vertices);
  for (int v = 0; v < g.vertices; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  for (int y = 0; y < static_cast<int>(g.edges.size()); ++y) {
    if (!Has(cycle, y) || y == e || y == f) continue;
    parent[find(g.edges[y].first)] = find(g.edges[y].second);
  }
  return find(g.edges[x].first) != find(g.edges[x].second);
}

}  // namespace oracle

#endif  // FORGE_TESTS_ORACLES_H_
