#include "specirr/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace specirr {

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw input_error("edge endpoint out of range");
  if (u == v) throw input_error("loops are not allowed");
  adj[u] |= 1ull << v;
  adj[v] |= 1ull << u;
}

long Graph::edge_count() const {
  long twice = 0;
  for (int v = 0; v < n; ++v) twice += degree(v);
  return twice / 2;
}

// ====================== constructors ======================

static Graph blank(int n, const char* what) {
  if (n < 1 || n > max_vertices)
    throw input_error(std::string(what) + ": vertex count out of range");
  Graph g;
  g.n = n;
  return g;
}

Graph make_kite(KiteParams p) {
  if (p.r < 1 || p.s < 2) throw input_error("make_kite: need r >= 1, s >= 2");
  Graph g = blank(p.r + p.s - 1, "make_kite");
  for (int i = 0; i + 1 < p.r; ++i) g.add_edge(i, i + 1);
  for (int i = p.r - 1; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) g.add_edge(i, j);
  return g;
}

Graph make_pineapple(int clique, int pendants) {
  if (clique < 2 || pendants < 0)
    throw input_error("make_pineapple: need clique >= 2, pendants >= 0");
  Graph g = blank(clique + pendants, "make_pineapple");
  for (int i = 0; i < clique; ++i)
    for (int j = i + 1; j < clique; ++j) g.add_edge(i, j);
  for (int i = clique; i < g.n; ++i) g.add_edge(0, i);
  return g;
}

Graph make_path(int n) {
  Graph g = blank(n, "make_path");
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_complete(int n) {
  Graph g = blank(n, "make_complete");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw input_error("make_cycle: need n >= 3");
  Graph g = blank(n, "make_cycle");
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph make_star(int leaves) {
  if (leaves < 0) throw input_error("make_star: need leaves >= 0");
  Graph g = blank(leaves + 1, "make_star");
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

// ====================== structure ======================

bool is_connected(const Graph& g) {
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.adj[v];
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  return std::popcount(seen) == g.n;
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
  if ((int)perm.size() != g.n) throw input_error("permute: size mismatch");
  std::uint64_t hit = 0;
  for (int p : perm) {
    if (p < 0 || p >= g.n || (hit >> p) & 1)
      throw input_error("permute: not a permutation");
    hit |= 1ull << p;
  }
  Graph h;
  h.n = g.n;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
  return h;
}

std::string canonical_code(const Graph& g) {
  if (g.n > 10) throw input_error("canonical_code: n > 10");
  const int n = g.n;
  const int nbits = n * (n - 1) / 2;
  // column-major upper triangle: column j holds bits (i, j) for i < j
  std::vector<std::uint8_t> best(nbits, 2);  // 2 acts as +infinity
  std::vector<std::uint8_t> cur(nbits);
  std::vector<int> pos(n);  // pos[new index] = old index
  std::uint64_t used = 0;

  auto dfs = [&](auto&& self, int j, bool tied) -> void {
    if (j == n) {
      // The tied flags of enclosing levels can be stale once best has been
      // replaced somewhere below them, so never assign unconditionally.
      if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(),
                                       best.end()))
        best = cur;
      return;
    }
    const int base = j * (j - 1) / 2;
    for (int old = 0; old < n; ++old) {
      if ((used >> old) & 1) continue;
      bool worse = false, still_tied = tied;
      for (int i = 0; i < j; ++i) {
        std::uint8_t b = g.has_edge(pos[i], old);
        cur[base + i] = b;
        if (still_tied) {
          if (b > best[base + i]) {
            worse = true;
            break;
          }
          if (b < best[base + i]) still_tied = false;
        }
      }
      if (worse) continue;
      pos[j] = old;
      used |= 1ull << old;
      self(self, j + 1, still_tied);
      used &= ~(1ull << old);
    }
  };
  dfs(dfs, 0, true);

  std::string out((nbits + 7) / 8, '\0');
  for (int b = 0; b < nbits; ++b)
    if (best[b]) out[b / 8] |= char(0x80 >> (b % 8));
  return out;
}

// ====================== graph6 ======================

std::string graph6_encode(const Graph& g) {
  std::string out;
  if (g.n <= 62) {
    out.push_back(char(g.n + 63));
  } else {
    out.push_back(126);
    out.push_back(char(((g.n >> 12) & 63) + 63));
    out.push_back(char(((g.n >> 6) & 63) + 63));
    out.push_back(char((g.n & 63) + 63));
  }
  int acc = 0, nb = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | int(g.has_edge(i, j));
      if (++nb == 6) {
        out.push_back(char(acc + 63));
        acc = 0;
        nb = 0;
      }
    }
  if (nb) out.push_back(char((acc << (6 - nb)) + 63));
  return out;
}

Graph graph6_decode(std::string_view s) {
  using gk = graph6_error::kind;
  if (s.empty()) throw graph6_error(gk::bad_length, "graph6: empty string");
  auto val = [&](std::size_t i) -> int {
    unsigned char c = s[i];
    if (c < 63 || c > 126)
      throw graph6_error(gk::bad_byte, "graph6: byte out of range");
    return c - 63;
  };
  std::size_t pos = 0;
  long n;
  if (val(0) == 63) {  // '~' introduces a multi-byte vertex count
    if (s.size() >= 2 && s[1] == 126)
      throw graph6_error(gk::bad_length, "graph6: vertex count out of range");
    if (s.size() < 4) throw graph6_error(gk::bad_length, "graph6: truncated");
    n = long(val(1)) << 12 | long(val(2)) << 6 | long(val(3));
    pos = 4;
  } else {
    n = val(0);
    pos = 1;
  }
  if (n < 1 || n > max_vertices)
    throw graph6_error(gk::bad_length, "graph6: vertex count out of range");
  const long nbits = n * (n - 1) / 2;
  const std::size_t body = std::size_t((nbits + 5) / 6);
  if (s.size() < pos + body)
    throw graph6_error(gk::bad_length, "graph6: truncated");
  if (s.size() > pos + body)
    throw graph6_error(gk::trailing_garbage, "graph6: trailing characters");
  Graph g;
  g.n = int(n);
  long b = 0;
  for (std::size_t c = 0; c < body; ++c) {
    int v = val(pos + c);
    for (int k = 5; k >= 0; --k, ++b) {
      int bit = (v >> k) & 1;
      if (b >= nbits) {
        if (bit)
          throw graph6_error(gk::trailing_garbage,
                             "graph6: nonzero padding bits");
        continue;
      }
      if (bit) {
        // invert column-major position b -> (i, j)
        long j = 1;
        long col = b;
        while (col >= j) col -= j, ++j;
        g.add_edge(int(col), int(j));
      }
    }
  }
  return g;
}

// ====================== edge-list text ======================

Graph parse_edge_list(std::istream& in) {
  long n, m;
  if (!(in >> n >> m)) throw input_error("edge list: bad header");
  if (n < 1 || n > max_vertices)
    throw input_error("edge list: vertex count out of range");
  if (m < 0) throw input_error("edge list: negative edge count");
  Graph g;
  g.n = int(n);
  for (long e = 0; e < m; ++e) {
    long u, v;
    if (!(in >> u >> v)) throw input_error("edge list: truncated");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw input_error("edge list: endpoint out of range");
    g.add_edge(int(u), int(v));
  }
  std::string extra;
  if (in >> extra) throw input_error("edge list: trailing tokens");
  return g;
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.n << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
}

}  // namespace specirr
