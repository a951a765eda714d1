#include <omega/automaton_ops.hh>

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "graph.hh"

namespace omega
{
  namespace
  {
    detail::adjacency successor_graph(const automaton& a)
    {
      detail::adjacency g(a.num_states());
      for (state_t q = 0; q < a.num_states(); ++q)
        {
          for (symbol_t s = 0; s < a.num_symbols(); ++s)
            for (auto r : a.successors(q, s))
              g[q].push_back(r);
          std::sort(g[q].begin(), g[q].end());
          g[q].erase(std::unique(g[q].begin(), g[q].end()), g[q].end());
        }
      return g;
    }
  }

  bool accepts_lasso(const automaton& a, const lasso_word& w)
  {
    if (a.mode() != acceptance_mode::buchi)
      throw contract_error("accepts_lasso: automaton is not in Buchi mode");
    if (w.loop.empty())
      throw input_error("accepts_lasso: empty loop");
    for (const auto* part : {&w.stem, &w.loop})
      for (auto s : *part)
        if (s >= a.num_symbols())
          throw input_error("accepts_lasso: letter outside the alphabet");

    const std::size_t stem = w.stem.size(), total = stem + w.loop.size();
    auto letter = [&](std::size_t pos) { return pos < stem ? w.stem[pos] : w.loop[pos - stem]; };
    auto vertex = [&](state_t q, std::size_t pos) {
      return static_cast<std::uint32_t>(q * total + pos);
    };

    detail::adjacency g(a.num_states() * total);
    for (state_t q = 0; q < a.num_states(); ++q)
      for (std::size_t pos = 0; pos < total; ++pos)
        {
          std::size_t next = pos + 1 < total ? pos + 1 : stem;
          for (auto r : a.successors(q, letter(pos)))
            g[vertex(q, pos)].push_back(vertex(r, next));
        }

    auto reach = detail::forward_reachable(g, {vertex(a.initial(), 0)});
    auto scc = detail::tarjan_scc(g, reach);
    for (state_t q = 0; q < a.num_states(); ++q)
      {
        if (!a.is_final(q))
          continue;
        for (std::size_t pos = stem; pos < total; ++pos)
          {
            auto v = vertex(q, pos);
            if (reach[v] && scc.nontrivial[scc.component[v]])
              return true;
          }
      }
    return false;
  }

  automaton intersect_nba(const automaton& a1, const automaton& a2)
  {
    if (a1.mode() != acceptance_mode::buchi || a2.mode() != acceptance_mode::buchi)
      throw contract_error("intersect_nba: both automata must be in Buchi mode");
    if (!(a1.get_alphabet() == a2.get_alphabet()))
      throw input_error("intersect_nba: alphabets differ");

    using key = std::tuple<state_t, state_t, int>;
    std::map<key, state_t> index;
    std::vector<key> states;
    std::deque<state_t> todo;
    auto intern = [&](const key& k) {
      auto [it, fresh] = index.emplace(k, static_cast<state_t>(states.size()));
      if (fresh)
        {
          states.push_back(k);
          todo.push_back(it->second);
        }
      return it->second;
    };

    std::vector<std::tuple<state_t, symbol_t, state_t>> edges;
    intern({a1.initial(), a2.initial(), 1});
    while (!todo.empty())
      {
        auto id = todo.front();
        todo.pop_front();
        auto [p, q, phase] = states[id];
        int next_phase = phase;
        if (phase == 1 && a1.is_final(p))
          next_phase = 2;
        else if (phase == 2 && a2.is_final(q))
          next_phase = 1;
        for (symbol_t s = 0; s < a1.num_symbols(); ++s)
          for (auto p2 : a1.successors(p, s))
            for (auto q2 : a2.successors(q, s))
              edges.emplace_back(id, s, intern({p2, q2, next_phase}));
      }

    automaton out(a1.get_alphabet(), states.size(), 0, acceptance_mode::buchi);
    for (state_t id = 0; id < states.size(); ++id)
      {
        auto [p, q, phase] = states[id];
        out.set_final(id, phase == 2 && a2.is_final(q));
      }
    for (auto [from, s, to] : edges)
      out.add_transition(from, s, to);
    return out;
  }

  std::optional<accepting_lasso> find_accepting_lasso(const automaton& a)
  {
    if (a.mode() != acceptance_mode::buchi)
      throw contract_error("find_accepting_lasso: automaton is not in Buchi mode");
    auto g = successor_graph(a);
    auto reach = detail::forward_reachable(g, {a.initial()});
    auto scc = detail::tarjan_scc(g, reach);
    auto good = [&](state_t q) {
      return reach[q] && a.is_final(q) && scc.nontrivial[scc.component[q]];
    };

    // shortest stem: BFS over states, letters in alphabet order
    constexpr std::size_t none = SIZE_MAX;
    std::vector<std::size_t> parent(a.num_states(), none);
    std::vector<symbol_t> via(a.num_states(), 0);
    std::deque<state_t> bfs{a.initial()};
    parent[a.initial()] = a.initial();
    std::optional<state_t> target;
    while (!bfs.empty() && !target)
      {
        auto q = bfs.front();
        bfs.pop_front();
        if (good(q))
          {
            target = q;
            break;
          }
        for (symbol_t s = 0; s < a.num_symbols(); ++s)
          for (auto r : a.successors(q, s))
            if (parent[r] == none)
              {
                parent[r] = q;
                via[r] = s;
                bfs.push_back(r);
              }
      }
    if (!target)
      return std::nullopt;

    accepting_lasso out{lasso_word({}, {0}), {}, {}};
    finite_word stem;
    for (state_t q = *target; q != a.initial(); q = static_cast<state_t>(parent[q]))
      {
        stem.push_back(via[q]);
        out.stem_states.push_back(static_cast<state_t>(parent[q]));
      }
    std::reverse(stem.begin(), stem.end());
    std::reverse(out.stem_states.begin(), out.stem_states.end());

    // shortest cycle through target inside its SCC
    const state_t f = *target;
    const auto comp = scc.component[f];
    std::vector<std::size_t> cparent(a.num_states(), none);
    std::vector<symbol_t> cvia(a.num_states(), 0);
    std::deque<state_t> cbfs{f};
    cparent[f] = f;
    std::optional<std::pair<state_t, symbol_t>> closing;
    while (!cbfs.empty() && !closing)
      {
        auto q = cbfs.front();
        cbfs.pop_front();
        for (symbol_t s = 0; s < a.num_symbols() && !closing; ++s)
          for (auto r : a.successors(q, s))
            {
              if (scc.component[r] != comp)
                continue;
              if (r == f)
                {
                  closing = {q, s};
                  break;
                }
              if (cparent[r] == none)
                {
                  cparent[r] = q;
                  cvia[r] = s;
                  cbfs.push_back(r);
                }
            }
      }
    finite_word loop{closing->second};
    std::vector<state_t> loop_states{closing->first};
    for (state_t q = closing->first; q != f; q = static_cast<state_t>(cparent[q]))
      {
        loop.push_back(cvia[q]);
        loop_states.push_back(static_cast<state_t>(cparent[q]));
      }
    std::reverse(loop.begin(), loop.end());
    std::reverse(loop_states.begin(), loop_states.end());

    out.word = lasso_word(std::move(stem), std::move(loop));
    out.loop_states = std::move(loop_states);
    return out;
  }

  emptiness_result is_empty_buchi(const automaton& a)
  {
    auto lasso = find_accepting_lasso(a);
    if (!lasso)
      return {true, std::nullopt};
    return {false, std::move(lasso->word)};
  }
}
