#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ks/verify.hpp"

namespace ks {

struct ColoringResult {
  bool satisfiable = false;
  // present iff satisfiable: 0/1 per vector, exactly one 1 in every basis
  std::optional<std::vector<std::uint8_t>> assignment;
  std::uint64_t nodes_explored = 0;  // decision nodes (branch points)
};

// Exhaustive backtracking over {0,1} assignments with the per-basis
// "exactly one is 1" constraint. Purely combinatorial: ignores the geometry,
// which is what makes it an independent corroboration of the parity argument.
// UNSAT is certified by full exhaustion of the search tree.
//
// Variables are ordered by descending basis-membership degree; propagation
// forces the last undecided member of a 1-less basis to 1 and the remaining
// members of a satisfied basis to 0.
ColoringResult brute_force_coloring_search(std::size_t n_vectors, const BasisList& bases);

// Witness check: exactly one marked vector in every basis.
bool coloring_satisfies(const std::vector<std::uint8_t>& assignment, const BasisList& bases);

}  // namespace ks
