#include "ks/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace ks {

Graph Graph::from_edges(std::int32_t n, std::vector<Edge> raw) {
  for (auto& [a, b] : raw) {
    if (a == b) throw std::invalid_argument("graph: loop edge");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("graph: endpoint out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return Graph{n, std::move(raw)};
}

bool Graph::has_edge(std::int32_t a, std::int32_t b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), Edge{a, b});
}

std::vector<std::vector<std::int32_t>> Graph::adjacency() const {
  std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(vertex_count));
  for (const auto& [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(vertex_count), 0);
  for (const auto& [a, b] : edges) {
    ++deg[static_cast<std::size_t>(a)];
    ++deg[static_cast<std::size_t>(b)];
  }
  return deg;
}

Graph chordal_ring(std::int64_t n, std::int64_t k) {
  if (!(1 < k && k < n - 1))
    throw std::invalid_argument("chordal_ring: need 1 < k < n-1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(2 * n));
  for (std::int64_t a = 0; a < n; ++a) {
    edges.emplace_back(static_cast<std::int32_t>(a), static_cast<std::int32_t>((a + 1) % n));
    edges.emplace_back(static_cast<std::int32_t>(a), static_cast<std::int32_t>((a + k) % n));
  }
  return Graph::from_edges(static_cast<std::int32_t>(n), std::move(edges));
}

std::vector<Edge> chordal_ring_edge_labels(std::int64_t n, std::int64_t k) {
  if (!(1 < k && k < n - 1))
    throw std::invalid_argument("chordal_ring: need 1 < k < n-1");
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(2 * n));
  for (std::int64_t a = 0; a < n; ++a)
    out.emplace_back(static_cast<std::int32_t>(a), static_cast<std::int32_t>((a + 1) % n));
  for (std::int64_t a = 0; a < n; ++a)
    out.emplace_back(static_cast<std::int32_t>(a), static_cast<std::int32_t>((a + k) % n));
  return out;
}

LineGraphResult line_graph_on_labels(std::int32_t base_vertex_count,
                                     const std::vector<Edge>& labeled_edges) {
  // bucket edge ids by endpoint; edges sharing a bucket become cliques
  std::vector<std::vector<std::int32_t>> incident(
      static_cast<std::size_t>(base_vertex_count));
  for (std::size_t j = 0; j < labeled_edges.size(); ++j) {
    const auto& [a, b] = labeled_edges[j];
    if (a < 0 || b < 0 || a >= base_vertex_count || b >= base_vertex_count || a == b)
      throw std::invalid_argument("line_graph: bad edge");
    incident[static_cast<std::size_t>(a)].push_back(static_cast<std::int32_t>(j));
    incident[static_cast<std::size_t>(b)].push_back(static_cast<std::int32_t>(j));
  }
  std::vector<Edge> out;
  for (const auto& bucket : incident)
    for (std::size_t s = 0; s < bucket.size(); ++s)
      for (std::size_t t = s + 1; t < bucket.size(); ++t)
        out.emplace_back(bucket[s], bucket[t]);
  LineGraphResult r;
  r.graph = Graph::from_edges(static_cast<std::int32_t>(labeled_edges.size()),
                              std::move(out));
  r.vertex_labels = labeled_edges;
  return r;
}

LineGraphResult line_graph(const Graph& g) {
  return line_graph_on_labels(g.vertex_count, g.edges);
}

Graph comembership_graph(std::size_t n_vectors, const BasisList& bases) {
  std::vector<Edge> edges;
  for (const auto& basis : bases)
    for (std::size_t s = 0; s < basis.size(); ++s)
      for (std::size_t t = s + 1; t < basis.size(); ++t) {
        if (basis[s] < 0 || basis[t] < 0 ||
            static_cast<std::size_t>(basis[s]) >= n_vectors ||
            static_cast<std::size_t>(basis[t]) >= n_vectors)
          throw std::invalid_argument("comembership_graph: index out of range");
        edges.emplace_back(basis[s], basis[t]);
      }
  return Graph::from_edges(static_cast<std::int32_t>(n_vectors), std::move(edges));
}

bool is_automorphism(const Graph& g, const std::vector<std::int32_t>& perm) {
  const auto n = static_cast<std::size_t>(g.vertex_count);
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (const std::int32_t p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)])
      return false;
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (const auto& [a, b] : g.edges)
    if (!g.has_edge(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]))
      return false;
  return true;
}

namespace {

// Backtracking over degree-compatible vertex maps with incremental
// adjacency-consistency checks against all previously mapped vertices.
void search_automorphisms(const Graph& g,
                          const std::vector<std::vector<std::int32_t>>& adj,
                          const std::vector<int>& deg,
                          std::vector<std::int32_t>& map, std::vector<bool>& used,
                          std::size_t v,
                          std::vector<std::vector<std::int32_t>>& out) {
  const auto n = static_cast<std::size_t>(g.vertex_count);
  if (v == n) {
    out.push_back(map);
    return;
  }
  for (std::int32_t w = 0; w < g.vertex_count; ++w) {
    if (used[static_cast<std::size_t>(w)] || deg[v] != deg[static_cast<std::size_t>(w)])
      continue;
    bool ok = true;
    for (std::size_t u = 0; u < v && ok; ++u) {
      const bool e1 = std::binary_search(adj[v].begin(), adj[v].end(),
                                         static_cast<std::int32_t>(u));
      const bool e2 = g.has_edge(w, map[u]);
      ok = (e1 == e2);
    }
    if (!ok) continue;
    map[v] = w;
    used[static_cast<std::size_t>(w)] = true;
    search_automorphisms(g, adj, deg, map, used, v + 1, out);
    used[static_cast<std::size_t>(w)] = false;
  }
}

}  // namespace

std::vector<std::vector<std::int32_t>> automorphism_group_brute(const Graph& g) {
  if (g.vertex_count > 24)
    throw std::invalid_argument("brute-force automorphism search capped at 24 vertices");
  const auto adj = g.adjacency();
  const auto deg = g.degrees();
  std::vector<std::int32_t> map(static_cast<std::size_t>(g.vertex_count), -1);
  std::vector<bool> used(static_cast<std::size_t>(g.vertex_count), false);
  std::vector<std::vector<std::int32_t>> out;
  search_automorphisms(g, adj, deg, map, used, 0, out);
  return out;
}

std::size_t vertex_orbit_size(std::int32_t start,
                              const std::vector<std::vector<std::int32_t>>& generators) {
  if (generators.empty()) return 1;
  const std::size_t n = generators.front().size();
  std::vector<bool> in_orbit(n, false);
  std::queue<std::int32_t> work;
  in_orbit[static_cast<std::size_t>(start)] = true;
  work.push(start);
  std::size_t count = 1;
  while (!work.empty()) {
    const std::int32_t v = work.front();
    work.pop();
    for (const auto& gen : generators) {
      const std::int32_t img = gen[static_cast<std::size_t>(v)];
      if (!in_orbit[static_cast<std::size_t>(img)]) {
        in_orbit[static_cast<std::size_t>(img)] = true;
        ++count;
        work.push(img);
      }
    }
  }
  return count;
}

std::size_t edge_orbit_size(Edge start,
                            const std::vector<std::vector<std::int32_t>>& generators) {
  std::set<Edge> orbit;
  if (start.first > start.second) std::swap(start.first, start.second);
  std::queue<Edge> work;
  orbit.insert(start);
  work.push(start);
  while (!work.empty()) {
    const auto [a, b] = work.front();
    work.pop();
    for (const auto& gen : generators) {
      Edge img{gen[static_cast<std::size_t>(a)], gen[static_cast<std::size_t>(b)]};
      if (img.first > img.second) std::swap(img.first, img.second);
      if (orbit.insert(img).second) work.push(img);
    }
  }
  return orbit.size();
}

int count_edge_orbits(const Graph& g,
                      const std::vector<std::vector<std::int32_t>>& automorphisms) {
  std::set<Edge> remaining(g.edges.begin(), g.edges.end());
  int orbits = 0;
  while (!remaining.empty()) {
    ++orbits;
    // close the orbit of the smallest remaining edge and remove it
    std::set<Edge> orbit;
    std::queue<Edge> work;
    orbit.insert(*remaining.begin());
    work.push(*remaining.begin());
    while (!work.empty()) {
      const auto [a, b] = work.front();
      work.pop();
      for (const auto& gen : automorphisms) {
        Edge img{gen[static_cast<std::size_t>(a)], gen[static_cast<std::size_t>(b)]};
        if (img.first > img.second) std::swap(img.first, img.second);
        if (orbit.insert(img).second) work.push(img);
      }
    }
    for (const Edge& e : orbit) remaining.erase(e);
  }
  return orbits;
}

EdgeTransitivityResult check_edge_transitivity(std::int64_t n, std::int64_t k) {
  const Graph g = chordal_ring(n, k);
  EdgeTransitivityResult res;

  std::vector<std::int32_t> shift(static_cast<std::size_t>(n));
  for (std::int64_t a = 0; a < n; ++a)
    shift[static_cast<std::size_t>(a)] = static_cast<std::int32_t>((a + 1) % n);

  res.multiplier_applicable = (std::gcd(n, k) == 1) && ((k * k) % n == 1);
  if (res.multiplier_applicable) {
    std::vector<std::int32_t> mult(static_cast<std::size_t>(n));
    for (std::int64_t a = 0; a < n; ++a)
      mult[static_cast<std::size_t>(a)] = static_cast<std::int32_t>((a * k) % n);
    res.multiplier_is_automorphism = is_automorphism(g, mult);

    // the multiplier must send every ring edge to a chord and every chord to
    // a ring edge; classify by circular endpoint distance
    const auto dist = [n](std::int64_t u, std::int64_t v) {
      const std::int64_t d = ((u - v) % n + n) % n;
      return std::min(d, n - d);
    };
    res.multiplier_swaps_edge_types = true;
    for (std::int64_t a = 0; a < n && res.multiplier_swaps_edge_types; ++a) {
      const std::int64_t ring_img = dist((a + 1) * k % n, a * k % n);
      const std::int64_t chord_img = dist((a + k) * k % n, a * k % n);
      if (ring_img != std::min(k, n - k) || chord_img != 1)
        res.multiplier_swaps_edge_types = false;
    }

    if (res.multiplier_is_automorphism && res.multiplier_swaps_edge_types &&
        is_automorphism(g, shift)) {
      res.edge_orbit = edge_orbit_size({0, 1}, {shift, mult});
      res.edge_transitive = (res.edge_orbit == g.edges.size());
      return res;
    }
  }

  res.used_brute_force = true;
  const auto autos = automorphism_group_brute(g);  // throws for n > 24
  res.automorphism_count = autos.size();
  res.edge_orbit = edge_orbit_size(g.edges.front(), autos);
  res.edge_transitive = (res.edge_orbit == g.edges.size());
  return res;
}

VertexTransitivityResult check_comembership_vertex_transitivity(std::int64_t n,
                                                                std::int64_t r,
                                                                const Graph& g) {
  if (g.vertex_count != 2 * n)
    throw std::invalid_argument("vertex transitivity check: graph must have 2n vertices");
  VertexTransitivityResult res;

  // vertex v < n is the ring edge {v, v+1} (vector M^v a);
  // vertex n+v is the chord {v, v+r} (vector M^v b)
  std::vector<std::int32_t> shift(static_cast<std::size_t>(2 * n));
  std::vector<std::int32_t> mult(static_cast<std::size_t>(2 * n));
  for (std::int64_t v = 0; v < n; ++v) {
    shift[static_cast<std::size_t>(v)] = static_cast<std::int32_t>((v + 1) % n);
    shift[static_cast<std::size_t>(n + v)] = static_cast<std::int32_t>(n + (v + 1) % n);
    mult[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(n + (v * r) % n);
    mult[static_cast<std::size_t>(n + v)] = static_cast<std::int32_t>((v * r) % n);
  }
  res.lifted_shift_is_automorphism = is_automorphism(g, shift);
  res.lifted_multiplier_is_automorphism = is_automorphism(g, mult);
  if (res.lifted_shift_is_automorphism && res.lifted_multiplier_is_automorphism) {
    res.orbit = vertex_orbit_size(0, {shift, mult});
    res.vertex_transitive = (res.orbit == static_cast<std::size_t>(2 * n));
  }
  return res;
}

bool is_vertex_transitive_brute(const Graph& g) {
  const auto autos = automorphism_group_brute(g);
  return vertex_orbit_size(0, autos) == static_cast<std::size_t>(g.vertex_count);
}

}  // namespace ks
