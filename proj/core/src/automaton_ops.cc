#include <omega/automaton_ops.hh>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace omega
{
  namespace
  {
    void require_mode(const automaton& a, acceptance_mode m, const char* op)
    {
      if (a.mode() != m)
        throw contract_error(std::string(op) + ": wrong acceptance mode");
    }

    void require_dfa(const automaton& d, const char* op)
    {
      if (!d.is_deterministic())
        throw contract_error(std::string(op) + ": input is not deterministic");
      if (!d.is_complete())
        throw contract_error(std::string(op) + ": input is not complete");
    }

    void check_letters(const automaton& a, const finite_word& w)
    {
      for (auto s : w)
        if (s >= a.num_symbols())
          throw input_error("letter index " + std::to_string(s) + " outside the alphabet");
    }
  }

  bool accepts_finite(const automaton& a, const finite_word& w)
  {
    require_mode(a, acceptance_mode::finite, "accepts_finite");
    check_letters(a, w);
    std::vector<bool> current(a.num_states(), false);
    current[a.initial()] = true;
    for (auto letter : w)
      {
        std::vector<bool> next(a.num_states(), false);
        bool any = false;
        for (state_t q = 0; q < a.num_states(); ++q)
          if (current[q])
            for (auto r : a.successors(q, letter))
              any = next[r] = true;
        if (!any)
          return false;
        current = std::move(next);
      }
    for (state_t q = 0; q < a.num_states(); ++q)
      if (current[q] && a.is_final(q))
        return true;
    return false;
  }

  std::vector<state_t> reachable_states(const automaton& a)
  {
    std::vector<bool> seen(a.num_states(), false);
    std::vector<state_t> todo{a.initial()};
    seen[a.initial()] = true;
    while (!todo.empty())
      {
        auto q = todo.back();
        todo.pop_back();
        for (symbol_t s = 0; s < a.num_symbols(); ++s)
          for (auto r : a.successors(q, s))
            if (!seen[r])
              {
                seen[r] = true;
                todo.push_back(r);
              }
      }
    std::vector<state_t> out;
    for (state_t q = 0; q < a.num_states(); ++q)
      if (seen[q])
        out.push_back(q);
    return out;
  }

  automaton trim_unreachable(const automaton& a)
  {
    auto keep = reachable_states(a);
    if (keep.size() == a.num_states())
      return a;
    std::vector<state_t> renumber(a.num_states(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i)
      renumber[keep[i]] = static_cast<state_t>(i);
    automaton out(a.get_alphabet(), keep.size(), renumber[a.initial()], a.mode());
    for (auto q : keep)
      {
        out.set_final(renumber[q], a.is_final(q));
        for (symbol_t s = 0; s < a.num_symbols(); ++s)
          for (auto r : a.successors(q, s))
            out.add_transition(renumber[q], s, renumber[r]);
      }
    return out;
  }

  subset_automaton subset_construction_with_subsets(const automaton& a)
  {
    std::map<std::vector<state_t>, state_t> index;
    subset_automaton out;
    std::vector<std::vector<std::pair<symbol_t, state_t>>> edges;
    std::deque<state_t> todo;

    auto intern = [&](std::vector<state_t> subset) {
      auto [it, fresh] = index.emplace(subset, static_cast<state_t>(out.subsets.size()));
      if (fresh)
        {
          out.subsets.push_back(std::move(subset));
          edges.emplace_back();
          todo.push_back(it->second);
        }
      return it->second;
    };

    intern({a.initial()});
    while (!todo.empty())
      {
        auto id = todo.front();
        todo.pop_front();
        for (symbol_t s = 0; s < a.num_symbols(); ++s)
          {
            std::set<state_t> next;
            for (auto q : out.subsets[id])
              for (auto r : a.successors(q, s))
                next.insert(r);
            if (next.empty())
              continue;
            auto target = intern(std::vector<state_t>(next.begin(), next.end()));
            edges[id].emplace_back(s, target);
          }
      }

    out.dfa = automaton(a.get_alphabet(), out.subsets.size(), 0, a.mode());
    for (state_t id = 0; id < out.subsets.size(); ++id)
      {
        bool final = std::any_of(out.subsets[id].begin(), out.subsets[id].end(),
                                 [&](state_t q) { return a.is_final(q); });
        out.dfa.set_final(id, final);
        for (auto [s, target] : edges[id])
          out.dfa.add_transition(id, s, target);
      }
    return out;
  }

  automaton subset_construction(const automaton& a)
  {
    return subset_construction_with_subsets(a).dfa;
  }

  automaton complete_with_sink(const automaton& a)
  {
    if (a.is_complete())
      return a;
    automaton out = a;
    state_t sink = out.add_state(false);
    for (state_t q = 0; q < out.num_states(); ++q)
      for (symbol_t s = 0; s < out.num_symbols(); ++s)
        if (out.successors(q, s).empty())
          out.add_transition(q, s, sink);
    return out;
  }

  automaton hopcroft_minimize(const automaton& input)
  {
    require_mode(input, acceptance_mode::finite, "hopcroft_minimize");
    require_dfa(input, "hopcroft_minimize");
    const automaton d = trim_unreachable(input);
    const std::size_t n = d.num_states(), k = d.num_symbols();

    // inverse[s][q] = predecessors of q on s
    std::vector<std::vector<std::vector<state_t>>> inverse(k, std::vector<std::vector<state_t>>(n));
    for (state_t q = 0; q < n; ++q)
      for (symbol_t s = 0; s < k; ++s)
        inverse[s][d.successors(q, s).front()].push_back(q);

    std::vector<std::vector<state_t>> blocks;
    std::vector<std::size_t> block_of(n);
    {
      std::vector<state_t> fin, rest;
      for (state_t q = 0; q < n; ++q)
        (d.is_final(q) ? fin : rest).push_back(q);
      for (auto* part : {&fin, &rest})
        if (!part->empty())
          {
            for (auto q : *part)
              block_of[q] = blocks.size();
            blocks.push_back(std::move(*part));
          }
    }

    std::vector<std::vector<bool>> queued;
    std::deque<std::pair<std::size_t, symbol_t>> work;
    auto enqueue = [&](std::size_t b, symbol_t s) {
      if (queued.size() <= b)
        queued.resize(b + 1, std::vector<bool>(k, false));
      if (!queued[b][s])
        {
          queued[b][s] = true;
          work.emplace_back(b, s);
        }
    };
    queued.assign(blocks.size(), std::vector<bool>(k, false));
    if (blocks.size() == 2)
      {
        std::size_t smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
        for (symbol_t s = 0; s < k; ++s)
          enqueue(smaller, s);
      }

    while (!work.empty())
      {
        auto [splitter, s] = work.front();
        work.pop_front();
        queued[splitter][s] = false;

        std::map<std::size_t, std::vector<state_t>> touched;
        for (auto q : blocks[splitter])
          for (auto p : inverse[s][q])
            touched[block_of[p]].push_back(p);

        for (auto& [b, inside] : touched)
          {
            if (inside.size() == blocks[b].size())
              continue;
            std::sort(inside.begin(), inside.end());
            std::vector<state_t> outside;
            std::set_difference(blocks[b].begin(), blocks[b].end(), inside.begin(),
                                inside.end(), std::back_inserter(outside));
            std::size_t fresh = blocks.size();
            blocks[b] = std::move(outside);
            blocks.push_back(std::move(inside));
            for (auto q : blocks[fresh])
              block_of[q] = fresh;
            for (symbol_t c = 0; c < k; ++c)
              {
                if (queued.size() > b && queued[b][c])
                  enqueue(fresh, c);
                else
                  enqueue(blocks[fresh].size() <= blocks[b].size() ? fresh : b, c);
              }
          }
      }

    // renumber blocks breadth-first from the initial block
    std::vector<std::size_t> order(blocks.size(), SIZE_MAX);
    std::vector<std::size_t> sequence;
    std::deque<std::size_t> bfs{block_of[d.initial()]};
    order[block_of[d.initial()]] = 0;
    sequence.push_back(block_of[d.initial()]);
    while (!bfs.empty())
      {
        auto b = bfs.front();
        bfs.pop_front();
        state_t rep = blocks[b].front();
        for (symbol_t s = 0; s < k; ++s)
          {
            auto t = block_of[d.successors(rep, s).front()];
            if (order[t] == SIZE_MAX)
              {
                order[t] = sequence.size();
                sequence.push_back(t);
                bfs.push_back(t);
              }
          }
      }

    automaton out(d.get_alphabet(), sequence.size(), 0, acceptance_mode::finite);
    for (std::size_t i = 0; i < sequence.size(); ++i)
      {
        state_t rep = blocks[sequence[i]].front();
        auto id = static_cast<state_t>(i);
        out.set_final(id, d.is_final(rep));
        for (symbol_t s = 0; s < k; ++s)
          out.add_transition(id, s, static_cast<state_t>(order[block_of[d.successors(rep, s).front()]]));
      }
    return out;
  }

  equivalence_result dfa_equivalent(const automaton& d1, const automaton& d2)
  {
    if (!(d1.get_alphabet() == d2.get_alphabet()))
      throw input_error("dfa_equivalent: alphabets differ");
    require_dfa(d1, "dfa_equivalent");
    require_dfa(d2, "dfa_equivalent");
    const std::size_t n2 = d2.num_states();
    auto key = [n2](state_t p, state_t q) { return static_cast<std::size_t>(p) * n2 + q; };

    std::vector<std::size_t> parent(d1.num_states() * n2, SIZE_MAX);
    std::vector<symbol_t> via(parent.size(), 0);
    std::deque<std::pair<state_t, state_t>> bfs{{d1.initial(), d2.initial()}};
    auto start = key(d1.initial(), d2.initial());
    parent[start] = start;
    while (!bfs.empty())
      {
        auto [p, q] = bfs.front();
        bfs.pop_front();
        if (d1.is_final(p) != d2.is_final(q))
          {
            finite_word w;
            for (auto cur = key(p, q); cur != start; cur = parent[cur])
              w.push_back(via[cur]);
            std::reverse(w.begin(), w.end());
            return {false, std::move(w)};
          }
        for (symbol_t s = 0; s < d1.num_symbols(); ++s)
          {
            auto p2 = d1.successors(p, s).front(), q2 = d2.successors(q, s).front();
            auto k2 = key(p2, q2);
            if (parent[k2] == SIZE_MAX)
              {
                parent[k2] = key(p, q);
                via[k2] = s;
                bfs.emplace_back(p2, q2);
              }
          }
      }
    return {true, std::nullopt};
  }

  automaton intersect_dfa(const automaton& d1, const automaton& d2)
  {
    if (!(d1.get_alphabet() == d2.get_alphabet()))
      throw input_error("intersect_dfa: alphabets differ");
    require_dfa(d1, "intersect_dfa");
    require_dfa(d2, "intersect_dfa");
    const auto n2 = static_cast<state_t>(d2.num_states());
    auto id = [n2](state_t p, state_t q) { return p * n2 + q; };
    automaton out(d1.get_alphabet(), d1.num_states() * n2, id(d1.initial(), d2.initial()),
                  acceptance_mode::finite);
    for (state_t p = 0; p < d1.num_states(); ++p)
      for (state_t q = 0; q < n2; ++q)
        {
          out.set_final(id(p, q), d1.is_final(p) && d2.is_final(q));
          for (symbol_t s = 0; s < d1.num_symbols(); ++s)
            out.add_transition(id(p, q), s,
                               id(d1.successors(p, s).front(), d2.successors(q, s).front()));
        }
    return out;
  }

  automaton complement_dfa(const automaton& d)
  {
    require_dfa(d, "complement_dfa");
    automaton out = d;
    for (state_t q = 0; q < d.num_states(); ++q)
      out.set_final(q, !d.is_final(q));
    return out;
  }

  bool is_empty_finite(const automaton& a)
  {
    for (auto q : reachable_states(a))
      if (a.is_final(q))
        return false;
    return true;
  }

  automaton loopify(const automaton& a)
  {
    automaton out = a.with_mode(acceptance_mode::buchi);
    for (state_t q = 0; q < out.num_states(); ++q)
      for (symbol_t s = 0; s < out.num_symbols(); ++s)
        if (out.successors(q, s).empty())
          out.add_transition(q, s, out.initial());
    return out;
  }
}
