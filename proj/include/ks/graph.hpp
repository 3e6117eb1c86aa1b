#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ks/verify.hpp"

namespace ks {

using Edge = std::pair<std::int32_t, std::int32_t>;  // normalized: first < second

// Undirected simple graph on vertices 0..vertex_count-1 with a sorted,
// duplicate-free edge list.
struct Graph {
  std::int32_t vertex_count = 0;
  std::vector<Edge> edges;

  // Normalizes (orders endpoints, sorts, dedupes) and validates: loops and
  // out-of-range endpoints are rejected.
  static Graph from_edges(std::int32_t n, std::vector<Edge> raw);

  bool has_edge(std::int32_t a, std::int32_t b) const;
  std::vector<std::vector<std::int32_t>> adjacency() const;
  std::vector<int> degrees() const;

  bool operator==(const Graph&) const = default;
};

// The n-cycle plus all chords at circular distance k. Requires 1 < k < n-1.
Graph chordal_ring(std::int64_t n, std::int64_t k);

// The fixed edge labeling used for line-graph comparisons:
// index i in [0, n) is the ring edge {i, i+1 mod n}; index n+i is the chord
// {i, i+k mod n}. Valid whenever all 2n edges are distinct (always true for
// odd n with 1 < k < n-1).
std::vector<Edge> chordal_ring_edge_labels(std::int64_t n, std::int64_t k);

struct LineGraphResult {
  Graph graph;                      // vertex j = labeled_edges[j]
  std::vector<Edge> vertex_labels;  // the defining edge order
};

// Line graph with vertices in the given edge order; two vertices are adjacent
// iff the underlying edges share an endpoint.
LineGraphResult line_graph_on_labels(std::int32_t base_vertex_count,
                                     const std::vector<Edge>& labeled_edges);

// Line graph of g with vertices in g's sorted edge order.
LineGraphResult line_graph(const Graph& g);

// Vertices are the vector indices; an edge joins two vectors iff they share
// at least one basis.
Graph comembership_graph(std::size_t n_vectors, const BasisList& bases);

template <class Real>
Graph comembership_graph(const KSInstance<Real>& inst) {
  return comembership_graph(inst.vectors.size(), to_basis_lists(inst.bases));
}

bool is_automorphism(const Graph& g, const std::vector<std::int32_t>& perm);

// Full automorphism group by backtracking; capped at 24 vertices.
std::vector<std::vector<std::int32_t>> automorphism_group_brute(const Graph& g);

std::size_t vertex_orbit_size(std::int32_t start,
                              const std::vector<std::vector<std::int32_t>>& generators);
std::size_t edge_orbit_size(Edge start,
                            const std::vector<std::vector<std::int32_t>>& generators);
int count_edge_orbits(const Graph& g,
                      const std::vector<std::vector<std::int32_t>>& automorphisms);

struct EdgeTransitivityResult {
  bool edge_transitive = false;
  bool used_brute_force = false;
  // constructive witnesses (<shift, multiplier> generators):
  bool multiplier_applicable = false;   // gcd(k, n) = 1 and k^2 = 1 (mod n)
  bool multiplier_is_automorphism = false;
  bool multiplier_swaps_edge_types = false;  // ring edges <-> chords
  std::size_t edge_orbit = 0;           // orbit of {0,1} under the generators used
  std::size_t automorphism_count = 0;   // brute-force mode only
};

// Constructive mode: cyclic shifts act within each edge type, and when
// k^2 = 1 (mod n) the multiplier map a -> k*a exchanges the two types, so the
// orbit of {0,1} under <shift, multiplier> is checked to cover every edge.
// When the multiplier is not applicable, falls back to the brute-force orbit
// computation (n <= 24; throws beyond).
EdgeTransitivityResult check_edge_transitivity(std::int64_t n, std::int64_t k);

struct VertexTransitivityResult {
  bool vertex_transitive = false;
  std::size_t orbit = 0;
  bool lifted_shift_is_automorphism = false;
  bool lifted_multiplier_is_automorphism = false;
};

// Lifts the chordal-ring automorphisms to the 2n line-graph vertices
// (vector indices): shift maps a_i -> a_{i+1}, b_i -> b_{i+1}; the multiplier
// maps a_i -> b_{r*i}, b_i -> a_{r*i}. Checks both preserve G and that the
// orbit of vertex 0 covers all 2n vertices.
VertexTransitivityResult check_comembership_vertex_transitivity(std::int64_t n,
                                                                std::int64_t r,
                                                                const Graph& g);

// Brute-force vertex transitivity for small graphs (n <= 24).
bool is_vertex_transitive_brute(const Graph& g);

}  // namespace ks
