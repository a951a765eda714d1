#include "graph.hh"

#include <algorithm>
#include <limits>
#include <utility>

namespace omega::detail
{
  namespace
  {
    constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();
  }

  scc_decomposition tarjan_scc(const adjacency& graph,
                               const std::vector<bool>& active)
  {
    const std::size_t n = graph.size();
    auto is_active = [&](std::uint32_t v) { return active.empty() || active[v]; };

    scc_decomposition out;
    out.component.assign(n, unvisited);
    std::vector<std::uint32_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    std::uint32_t counter = 0;

    // (vertex, next edge position)
    std::vector<std::pair<std::uint32_t, std::size_t>> call;
    for (std::uint32_t root = 0; root < n; ++root)
      {
        if (!is_active(root) || index[root] != unvisited)
          continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty())
          {
            auto& [v, pos] = call.back();
            if (pos < graph[v].size())
              {
                std::uint32_t w = graph[v][pos++];
                if (!is_active(w))
                  continue;
                if (index[w] == unvisited)
                  {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                  }
                else if (on_stack[w])
                  low[v] = std::min(low[v], index[w]);
                continue;
              }
            std::uint32_t done = v;
            call.pop_back();
            if (!call.empty())
              {
                auto parent = call.back().first;
                low[parent] = std::min(low[parent], low[done]);
              }
            if (low[done] != index[done])
              continue;
            auto id = static_cast<std::uint32_t>(out.members.size());
            out.members.emplace_back();
            std::uint32_t w;
            do
              {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                out.component[w] = id;
                out.members.back().push_back(w);
              }
            while (w != done);
            std::sort(out.members.back().begin(), out.members.back().end());
          }
      }

    out.nontrivial.assign(out.members.size(), false);
    for (std::uint32_t v = 0; v < n; ++v)
      {
        if (out.component[v] == unvisited)
          continue;
        for (auto w : graph[v])
          if (is_active(w) && out.component[w] == out.component[v])
            out.nontrivial[out.component[v]] = true;
      }
    return out;
  }

  std::vector<bool> forward_reachable(const adjacency& graph,
                                      const std::vector<std::uint32_t>& sources)
  {
    std::vector<bool> seen(graph.size(), false);
    std::vector<std::uint32_t> todo;
    for (auto s : sources)
      if (!seen[s])
        {
          seen[s] = true;
          todo.push_back(s);
        }
    while (!todo.empty())
      {
        auto v = todo.back();
        todo.pop_back();
        for (auto w : graph[v])
          if (!seen[w])
            {
              seen[w] = true;
              todo.push_back(w);
            }
      }
    return seen;
  }

  std::vector<bool> backward_reachable(const adjacency& graph,
                                       const std::vector<bool>& targets)
  {
    adjacency reverse(graph.size());
    for (std::uint32_t v = 0; v < graph.size(); ++v)
      for (auto w : graph[v])
        reverse[w].push_back(v);
    std::vector<std::uint32_t> sources;
    for (std::uint32_t v = 0; v < targets.size(); ++v)
      if (targets[v])
        sources.push_back(v);
    return forward_reachable(reverse, sources);
  }
}
