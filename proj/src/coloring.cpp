#include "ks/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace ks {

namespace {

constexpr std::int8_t kUnset = -1;

struct SearchState {
  std::vector<std::vector<std::int32_t>> member_of;  // vector -> basis ids
  const BasisList* bases = nullptr;
  std::vector<std::int8_t> assign;
  std::vector<std::int32_t> ones;       // per basis: count of 1s
  std::vector<std::int32_t> undecided;  // per basis: count of unassigned
  std::vector<std::int32_t> trail;      // assigned vectors, in order
  std::uint64_t nodes = 0;

  // Assigns v := val and runs exactly-one propagation: a basis holding a 1
  // zeroes its undecided members; a 1-less basis with a single undecided
  // member forces it to 1. Counter updates for an assignment are applied for
  // ALL of its bases before any violation check can abort, so rewind() is an
  // exact inverse even after a contradiction.
  bool assign_and_propagate(std::int32_t v, std::uint8_t val) {
    std::vector<std::pair<std::int32_t, std::uint8_t>> pending{{v, val}};
    while (!pending.empty()) {
      const auto [u, uval] = pending.back();
      pending.pop_back();
      const auto ui = static_cast<std::size_t>(u);
      if (assign[ui] != kUnset) {
        if (assign[ui] != static_cast<std::int8_t>(uval)) return false;
        continue;
      }
      assign[ui] = static_cast<std::int8_t>(uval);
      trail.push_back(u);
      for (const std::int32_t bi : member_of[ui]) {
        const auto b = static_cast<std::size_t>(bi);
        if (uval == 1) ++ones[b];
        --undecided[b];
      }
      for (const std::int32_t bi : member_of[ui]) {
        const auto b = static_cast<std::size_t>(bi);
        if (ones[b] > 1) return false;
        if (ones[b] == 0 && undecided[b] == 0) return false;
        if (ones[b] == 1) {
          for (const std::int32_t w : (*bases)[b])
            if (assign[static_cast<std::size_t>(w)] == kUnset)
              pending.emplace_back(w, std::uint8_t{0});
        } else if (undecided[b] == 1) {
          for (const std::int32_t w : (*bases)[b])
            if (assign[static_cast<std::size_t>(w)] == kUnset)
              pending.emplace_back(w, std::uint8_t{1});
        }
      }
    }
    return true;
  }

  void rewind(std::size_t mark) {
    while (trail.size() > mark) {
      const auto v = static_cast<std::size_t>(trail.back());
      trail.pop_back();
      for (const std::int32_t bi : member_of[v]) {
        if (assign[v] == 1) --ones[static_cast<std::size_t>(bi)];
        ++undecided[static_cast<std::size_t>(bi)];
      }
      assign[v] = kUnset;
    }
  }

  bool dfs(const std::vector<std::int32_t>& order, std::size_t pos) {
    while (pos < order.size() && assign[static_cast<std::size_t>(order[pos])] != kUnset)
      ++pos;
    if (pos == order.size()) return true;
    const std::int32_t v = order[pos];
    for (const std::uint8_t val : {std::uint8_t{1}, std::uint8_t{0}}) {
      ++nodes;
      const std::size_t mark = trail.size();
      if (assign_and_propagate(v, val) && dfs(order, pos + 1)) return true;
      rewind(mark);
    }
    return false;
  }
};

}  // namespace

bool coloring_satisfies(const std::vector<std::uint8_t>& assignment, const BasisList& bases) {
  for (const auto& basis : bases) {
    int marked = 0;
    for (const std::int32_t v : basis) {
      if (v < 0 || static_cast<std::size_t>(v) >= assignment.size()) return false;
      if (assignment[static_cast<std::size_t>(v)] > 1) return false;
      marked += assignment[static_cast<std::size_t>(v)];
    }
    if (marked != 1) return false;
  }
  return true;
}

ColoringResult brute_force_coloring_search(std::size_t n_vectors, const BasisList& bases) {
  SearchState st;
  st.bases = &bases;
  st.member_of.assign(n_vectors, {});
  for (std::size_t bi = 0; bi < bases.size(); ++bi) {
    if (bases[bi].empty())
      throw InputError(InputErrorKind::bad_basis_size,
                       "basis " + std::to_string(bi) + " is empty");
    for (std::size_t s = 0; s < bases[bi].size(); ++s) {
      const std::int32_t v = bases[bi][s];
      if (v < 0 || static_cast<std::size_t>(v) >= n_vectors)
        throw InputError(InputErrorKind::index_out_of_range,
                         "basis " + std::to_string(bi) + " references vector " +
                             std::to_string(v));
      for (std::size_t t = 0; t < s; ++t)
        if (bases[bi][t] == v)
          throw InputError(InputErrorKind::duplicate_index,
                           "basis " + std::to_string(bi) + " lists vector " +
                               std::to_string(v) + " twice");
      st.member_of[static_cast<std::size_t>(v)].push_back(static_cast<std::int32_t>(bi));
    }
  }

  st.assign.assign(n_vectors, kUnset);
  st.ones.assign(bases.size(), 0);
  st.undecided.assign(bases.size(), 0);
  for (std::size_t bi = 0; bi < bases.size(); ++bi)
    st.undecided[bi] = static_cast<std::int32_t>(bases[bi].size());

  std::vector<std::int32_t> order(n_vectors);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&st](std::int32_t a, std::int32_t b) {
    return st.member_of[static_cast<std::size_t>(a)].size() >
           st.member_of[static_cast<std::size_t>(b)].size();
  });

  ColoringResult result;
  result.satisfiable = st.dfs(order, 0);
  result.nodes_explored = st.nodes;
  if (result.satisfiable) {
    std::vector<std::uint8_t> a(n_vectors, 0);
    // vectors outside every basis stay 0
    for (std::size_t i = 0; i < n_vectors; ++i)
      if (st.assign[i] == 1) a[i] = 1;
    result.assignment = std::move(a);
  }
  return result;
}

}  // namespace ks
