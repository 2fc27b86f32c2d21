#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "specirr/errors.hpp"

namespace specirr {

inline constexpr int max_vertices = 64;

// Undirected simple graph on at most 64 vertices. One adjacency row is a
// single 64-bit word, which keeps connectivity checks and the power-iteration
// inner loop branch-light. Values are immutable after construction by
// convention; every operation on them is pure.
struct Graph {
  int n = 0;
  std::array<std::uint64_t, max_vertices> adj{};

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  int degree(int v) const { return std::popcount(adj[v]); }
  void add_edge(int u, int v);  // rejects loops and out-of-range endpoints
  long edge_count() const;
};

// r path vertices, clique of size s, one shared vertex: n = r + s - 1.
struct KiteParams {
  int r = 0;  // path vertex count, r >= 1
  int s = 0;  // clique size, s >= 2
};

// ====================== constructors ======================
// Kite P_r.K_s: vertices 0..r-1 form the path (vertex 0 has degree 1),
// vertex r-1 is the attachment, vertices r-1..r+s-2 form the clique.
Graph make_kite(KiteParams p);
// K_clique with `pendants` extra degree-1 vertices hanging off clique vertex 0.
Graph make_pineapple(int clique, int pendants);
Graph make_path(int n);
Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_star(int leaves);  // K_{1,leaves}, center at index 0

// ====================== structure ======================
bool is_connected(const Graph& g);

// Relabel: vertex v of g becomes vertex perm[v] of the result.
Graph permute(const Graph& g, const std::vector<int>& perm);

// Lexicographically minimal upper-triangle bit-string over all vertex
// permutations (column-major order, packed MSB-first). Equal strings iff
// isomorphic. Factorial backtracking with prefix pruning, so n <= 10.
std::string canonical_code(const Graph& g);

// ====================== serialization ======================
// Standard graph6 text. Encoding uses the short form for n <= 62 and the
// 4-byte long form for 63..64; decoding accepts both. Nonzero padding bits
// count as trailing garbage.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view s);

// Edge-list text: header line "n <edge count>", then one "u v" pair per line,
// 0-indexed.
Graph parse_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace specirr
