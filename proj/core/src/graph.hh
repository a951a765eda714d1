#pragma once

#include <cstdint>
#include <vector>

namespace omega::detail
{
  using adjacency = std::vector<std::vector<std::uint32_t>>;

  struct scc_decomposition
  {
    /// component[v] is the SCC id of v; ids are in reverse topological
    /// order (an SCC only has edges into SCCs with smaller or equal id).
    std::vector<std::uint32_t> component;
    std::vector<std::vector<std::uint32_t>> members;
    /// True iff the SCC contains an edge (a cycle, possibly a self-loop).
    std::vector<bool> nontrivial;
  };

  /// Iterative Tarjan. Only vertices flagged in `active` (all if empty) are
  /// considered; edges to inactive vertices are ignored. Inactive vertices
  /// get component id UINT32_MAX.
  scc_decomposition tarjan_scc(const adjacency& graph,
                               const std::vector<bool>& active = {});

  /// Vertices reachable from `sources` (inclusive).
  std::vector<bool> forward_reachable(const adjacency& graph,
                                      const std::vector<std::uint32_t>& sources);

  /// Vertices that can reach some vertex in `targets` (inclusive).
  std::vector<bool> backward_reachable(const adjacency& graph,
                                       const std::vector<bool>& targets);
}
