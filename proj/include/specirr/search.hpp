#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "specirr/graph.hpp"
#include "specirr/spectral.hpp"

namespace specirr {

struct ScanStats {
  std::uint64_t visited = 0;    // edge masks examined / input lines read
  std::uint64_t connected = 0;  // graphs handed to the consumer
  std::uint64_t malformed = 0;  // ingest only: diagnostic lines
};

// Audit of the shortest-path structure between the extreme eigenvector
// entries: k vertices on a BFS shortest path from the min-entry vertex x_1 to
// the max-entry vertex x_k (lowest index wins ties, lowest-index
// predecessors), plus how that path and its complement C sit inside g.
struct StructureReport {
  int k = 1;
  int c_size = 0;             // n - k
  bool lambda_gt_nk = false;  // lambda1 > n - k
  int pendant_prefix_len = 0; // longest i with x_1..x_i a pendant path
  bool xk_dominates = false;  // x_k adjacent to every off-path vertex
  int deg_xk2 = 0;            // degree of x_{k-2}, 0 when k < 3
  int deg_xk1 = 0;            // degree of x_{k-1}, 0 when k < 2
  bool nbhd_sum_ok = false;   // subset sums over N(x_k) land in (|U|-1, |U|]
  // reported only, never asserted: deg(x_{k-1}) vs 11|C|/sqrt(log n)
  double xk1_degree_bound = 0;
  bool xk1_below_bound = true;
  std::vector<int> path;      // the BFS path, x_1 first, x_k last
};

struct TieEntry {
  std::string g6;
  double log_gamma = 0;
};

struct SearchResult {
  int n = 0;
  Graph best;
  double log_gamma = 0;
  std::optional<KiteParams> kite;  // present iff best is a kite
  StructureReport audit;
  std::uint64_t graphs_scanned = 0;
  // Candidates whose log gamma sits within the tie window of the winner
  // (1e-9, ten times the certified solver-induced log-gamma error), one per
  // isomorphism class. More than one entry means the winner was chosen by
  // smallest canonical code and the result is flagged ambiguous.
  std::vector<TieEntry> near_ties;
  bool tie_ambiguous = false;
  std::uint64_t residual_violations = 0;  // solves that missed the tolerance
};

// Visit every labeled simple graph on n vertices (edge-set bitmask order) and
// feed the connected ones to the consumer. With threads > 1 the mask range is
// split into contiguous chunks and the consumer runs concurrently, so it must
// be thread-safe. 3 <= n <= 8.
ScanStats scan_labeled(int n, const std::function<void(const Graph&)>& consumer,
                       int threads = 1);

// One graph6 line per graph; malformed or disconnected lines are reported to
// `diagnostics` with their line number and skipped, processing continues.
ScanStats ingest_graph6(std::istream& in,
                        const std::function<void(const Graph&)>& consumer,
                        std::ostream* diagnostics = nullptr);

// gamma-maximizer over all connected labeled graphs on n vertices. The scan
// is seeded with every kite decomposition of n and prunes by the sound bound
// gamma <= ub^diam, ub = max over edges of sqrt(d_u d_v) >= lambda1, so a
// pruned graph can be neither winner nor near-tie.
SearchResult find_extremal(int n, double tol = 1e-12, int threads = 1);

// Same reduction over a graph6 stream (external catalogs, n <= 64).
SearchResult find_extremal(std::istream& graph6_stream, double tol = 1e-12);

// (r, s) iff g is isomorphic to P_r.K_s. Complete graphs decompose as (1, n)
// and paths P_m as (m-1, 2); a single vertex has no r >= 1, s >= 2 form.
std::optional<KiteParams> is_kite(const Graph& g);

// sd must be the certified eigenpair of g (re-verified; stale data errors).
// Subset sums are exhaustive when deg(x_k) <= 15, else 1000 seeded samples.
StructureReport structure_check(const Graph& g, const SpectralData& sd,
                                std::uint64_t seed = 12345);

struct KiteOptRow {
  int s = 0;
  long long r = 0;
  double log_gamma = 0;
};
struct KiteOptResult {
  long long best_r = 0;
  int best_s = 0;
  double log_gamma = 0;
  std::vector<KiteOptRow> table;  // one row per s in 3..n-1
};
// Best kite decomposition r + s - 1 = n over r >= 2, s >= 3, all log-space;
// ties go to the smaller s. n >= 5.
KiteOptResult kite_optimize(long long n, double tol = 1e-12);

struct PerturbationReport {
  double delta1 = 0;       // relative lambda1 change from adding the edge
  double delta2 = 0;       // relative change of the tracked entry
  double gamma_before = 0; // log gamma
  double gamma_after = 0;  // log gamma
  bool increase_condition = false;  // delta1 > 4 delta2 / n
  bool decrease_condition = false;  // delta1 e^(2 delta1 lambda1 log n) < delta2/(3n)
  bool observed_increase = false;   // log gamma went up
};
// Adds edge (u, v) to connected g (must be absent), solves before and after
// with both eigenvectors max-normalized, and reports measured deltas next to
// the directional condition flags. No asymptotic claim is asserted.
PerturbationReport perturb_analysis(const Graph& g, int u, int v, int tracked,
                                    double n_for_condition,
                                    double tol = 1e-12);

}  // namespace specirr
