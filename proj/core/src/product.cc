#include <omega/product.hh>

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "graph.hh"
#include "linear_solve.hh"

namespace omega
{
  std::string product_mdp::state_name(state_t p) const
  {
    const auto& o = origin.at(p);
    if (!o)
      return "reject";
    return "(" + std::to_string(o->first) + "," + std::to_string(o->second) + ")";
  }

  const char* to_string(successor_choice c) noexcept
  {
    return c == successor_choice::per_action ? "per-action" : "per-letter";
  }

  successor_choice parse_successor_choice(const std::string& text)
  {
    if (text == "per-action")
      return successor_choice::per_action;
    if (text == "per-letter")
      return successor_choice::per_letter;
    throw input_error("unknown successor choice '" + text + "' (expected per-action or per-letter)");
  }

  namespace
  {
    constexpr std::uint32_t to_sink = std::numeric_limits<std::uint32_t>::max();

    struct pending_action
    {
      std::string name;
      product_action_origin origin;
      std::vector<mdp_edge> edges;  // target to_sink stands for the reject sink
    };

    /// Successor assignments (one per letter, empty = reject) an action
    /// may use at automaton state q, in the order they become actions.
    std::vector<std::vector<std::optional<state_t>>>
    choices(const automaton& a, state_t q, const mdp_action& act, successor_choice mode)
    {
      const std::size_t k = a.num_symbols();
      std::vector<bool> emitted(k, false);
      for (const auto& e : act.edges)
        emitted[e.label] = true;
      std::vector<std::vector<std::optional<state_t>>> out;

      if (mode == successor_choice::per_action)
        {
          std::set<state_t> targets;
          for (symbol_t l = 0; l < k; ++l)
            if (emitted[l])
              for (auto q2 : a.successors(q, l))
                targets.insert(q2);
          for (auto q2 : targets)
            {
              std::vector<std::optional<state_t>> g(k);
              for (symbol_t l = 0; l < k; ++l)
                {
                  auto succ = a.successors(q, l);
                  if (emitted[l] && std::binary_search(succ.begin(), succ.end(), q2))
                    g[l] = q2;
                }
              out.push_back(std::move(g));
            }
          return out;
        }

      // odometer over the successor sets of the emitted letters
      std::vector<symbol_t> free;
      for (symbol_t l = 0; l < k; ++l)
        if (emitted[l] && !a.successors(q, l).empty())
          free.push_back(l);
      std::vector<std::size_t> pos(free.size(), 0);
      for (;;)
        {
          std::vector<std::optional<state_t>> g(k);
          for (std::size_t i = 0; i < free.size(); ++i)
            g[free[i]] = a.successors(q, free[i])[pos[i]];
          out.push_back(std::move(g));
          std::size_t i = free.size();
          while (i > 0)
            {
              --i;
              if (++pos[i] < a.successors(q, free[i]).size())
                break;
              pos[i] = 0;
              if (i == 0)
                return out;
            }
          if (free.empty())
            return out;
        }
    }

    std::string action_label(const std::string& base, const alphabet& sigma,
                             const std::vector<std::optional<state_t>>& g, successor_choice mode)
    {
      if (mode == successor_choice::per_action)
        {
          for (const auto& q2 : g)
            if (q2)
              return base + "," + std::to_string(*q2);
          return base + ",-";
        }
      std::string out = base + ",[";
      bool first = true;
      for (symbol_t l = 0; l < g.size(); ++l)
        if (g[l])
          {
            out += (first ? "" : " ") + sigma.name(l) + ":" + std::to_string(*g[l]);
            first = false;
          }
      return out + "]";
    }
  }

  product_mdp build_product(const labelled_mdp& m, const automaton& a, successor_choice mode)
  {
    if (!(m.get_alphabet() == a.get_alphabet()))
      throw input_error("build_product: MDP and automaton alphabets differ");

    std::map<std::pair<state_t, state_t>, state_t> index;
    std::vector<std::pair<state_t, state_t>> states;
    std::vector<std::vector<pending_action>> pending;
    auto intern = [&](state_t s, state_t q) {
      auto [it, fresh] = index.emplace(std::make_pair(s, q), static_cast<state_t>(states.size()));
      if (fresh)
        {
          states.emplace_back(s, q);
          pending.emplace_back();
        }
      return it->second;
    };

    intern(m.initial(), a.initial());
    bool need_sink = false;
    for (std::size_t id = 0; id < states.size(); ++id)
      {
        auto [s, q] = states[id];
        std::vector<pending_action> out;
        const auto& acts = m.actions(s);
        for (std::size_t ai = 0; ai < acts.size(); ++ai)
          {
            const auto& act = acts[ai];
            auto options = choices(a, q, act, mode);
            if (options.empty())
              options.emplace_back(a.num_symbols());
            for (auto& g : options)
              {
                pending_action pa{action_label(act.name, m.get_alphabet(), g, mode), {ai, g}, {}};
                rational mass;
                for (const auto& e : act.edges)
                  if (g[e.label])
                    {
                      pa.edges.push_back({e.probability, e.label, intern(e.target, *g[e.label])});
                      mass += e.probability;
                    }
                rational deficit = rational(1) - mass;
                if (!deficit.is_zero())
                  {
                    pa.edges.push_back({deficit, 0, to_sink});
                    need_sink = true;
                  }
                out.push_back(std::move(pa));
              }
          }
        pending[id] = std::move(out);
      }

    const std::size_t n = states.size() + (need_sink ? 1 : 0);
    product_mdp p;
    p.mdp = labelled_mdp(m.get_alphabet(), n, 0);
    p.accepting.assign(n, false);
    p.origin.assign(n, std::nullopt);
    p.action_origin.assign(n, {});
    const state_t sink = static_cast<state_t>(states.size());
    if (need_sink)
      {
        p.reject_sink = sink;
        p.mdp.add_action(sink, "reject");
        p.mdp.add_edge(sink, 0, rational(1), 0, sink);
        p.action_origin[sink].push_back({0, std::vector<std::optional<state_t>>(a.num_symbols())});
      }
    for (state_t id = 0; id < states.size(); ++id)
      {
        p.origin[id] = states[id];
        p.accepting[id] = a.is_final(states[id].second);
        for (auto& pa : pending[id])
          {
            auto ai = p.mdp.add_action(id, pa.name);
            for (auto& e : pa.edges)
              p.mdp.add_edge(id, ai, e.probability, e.label, e.target == to_sink ? sink : e.target);
            p.action_origin[id].push_back(std::move(pa.origin));
          }
      }
    return p;
  }

  std::vector<end_component> mec_decomposition(const labelled_mdp& m)
  {
    const std::size_t n = m.num_states();
    std::vector<std::vector<std::size_t>> allowed(n);
    std::vector<bool> active(n, false);
    for (state_t s = 0; s < n; ++s)
      {
        for (std::size_t a = 0; a < m.actions(s).size(); ++a)
          if (m.actions(s)[a].mass() == rational(1))
            allowed[s].push_back(a);
        active[s] = !allowed[s].empty();
      }

    detail::scc_decomposition scc;
    for (bool changed = true; changed;)
      {
        detail::adjacency graph(n);
        for (state_t s = 0; s < n; ++s)
          if (active[s])
            for (auto a : allowed[s])
              for (const auto& e : m.actions(s)[a].edges)
                graph[s].push_back(e.target);
        scc = detail::tarjan_scc(graph, active);

        changed = false;
        for (state_t s = 0; s < n; ++s)
          {
            if (!active[s])
              continue;
            auto stays = [&](std::size_t a) {
              for (const auto& e : m.actions(s)[a].edges)
                if (!active[e.target] || scc.component[e.target] != scc.component[s])
                  return false;
              return true;
            };
            auto before = allowed[s].size();
            std::erase_if(allowed[s], [&](std::size_t a) { return !stays(a); });
            if (allowed[s].size() != before)
              changed = true;
            if (allowed[s].empty())
              active[s] = false;
          }
      }

    std::vector<end_component> out;
    for (const auto& members : scc.members)
      {
        if (members.empty() || !active[members.front()])
          continue;
        end_component ec;
        for (auto s : members)
          {
            ec.states.push_back(s);
            ec.actions.push_back(allowed[s]);
          }
        out.push_back(std::move(ec));
      }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.states.front() < y.states.front(); });
    return out;
  }

  std::vector<end_component> accepting_mecs(const product_mdp& p)
  {
    auto all = mec_decomposition(p.mdp);
    std::erase_if(all, [&](const end_component& ec) {
      return std::none_of(ec.states.begin(), ec.states.end(),
                          [&](state_t s) { return p.accepting[s]; });
    });
    return all;
  }

  namespace
  {
    std::vector<rational> evaluate(const labelled_mdp& m, const positional_strategy& strategy,
                                   const std::vector<bool>& target)
    {
      const std::size_t n = m.num_states();
      detail::adjacency graph(n);
      for (state_t s = 0; s < n; ++s)
        if (strategy[s] && !target[s])
          for (const auto& e : m.actions(s)[*strategy[s]].edges)
            graph[s].push_back(e.target);
      auto can = detail::backward_reachable(graph, target);

      std::vector<rational> values(n);
      std::vector<std::uint32_t> var(n, to_sink);
      std::vector<state_t> unknowns;
      for (state_t s = 0; s < n; ++s)
        {
          if (target[s])
            values[s] = rational(1);
          else if (can[s])
            {
              var[s] = static_cast<std::uint32_t>(unknowns.size());
              unknowns.push_back(s);
            }
        }
      if (unknowns.empty())
        return values;

      std::vector<detail::sparse_equation> system(unknowns.size());
      for (std::uint32_t i = 0; i < unknowns.size(); ++i)
        {
          auto& eq = system[i];
          eq.coefficients[i] += rational(1);
          for (const auto& e : m.actions(unknowns[i])[*strategy[unknowns[i]]].edges)
            {
              if (target[e.target])
                eq.rhs += e.probability;
              else if (var[e.target] != to_sink)
                {
                  auto& c = eq.coefficients[var[e.target]];
                  c -= e.probability;
                  if (c.is_zero())
                    eq.coefficients.erase(var[e.target]);
                }
            }
        }
      auto x = detail::solve_exact(std::move(system));
      for (std::uint32_t i = 0; i < unknowns.size(); ++i)
        values[unknowns[i]] = x[i];
      return values;
    }

    rational action_value(const mdp_action& act, const std::vector<rational>& values)
    {
      rational v;
      for (const auto& e : act.edges)
        v += e.probability * values[e.target];
      return v;
    }
  }

  reach_result max_reach_probability(const labelled_mdp& m, const std::vector<bool>& target)
  {
    const std::size_t n = m.num_states();
    if (target.size() != n)
      throw input_error("max_reach_probability: target has the wrong size");

    detail::adjacency graph(n);
    for (state_t s = 0; s < n; ++s)
      for (const auto& act : m.actions(s))
        for (const auto& e : act.edges)
          graph[s].push_back(e.target);
    auto can = detail::backward_reachable(graph, target);

    reach_result r;
    r.strategy.assign(n, std::nullopt);
    for (state_t s = 0; s < n; ++s)
      if (!m.actions(s).empty())
        r.strategy[s] = 0;

    for (;;)
      {
        ++r.iterations;
        r.values = evaluate(m, r.strategy, target);
        bool improved = false;
        for (state_t s = 0; s < n; ++s)
          {
            if (target[s] || !can[s])
              continue;
            const auto& acts = m.actions(s);
            for (std::size_t a = 0; a < acts.size(); ++a)
              if (action_value(acts[a], r.values) > r.values[s])
                {
                  r.strategy[s] = a;
                  improved = true;
                  break;
                }
          }
        if (!improved)
          return r;
      }
  }

  labelled_mdp induced_chain(const labelled_mdp& m, const positional_strategy& strategy)
  {
    if (strategy.size() != m.num_states())
      throw input_error("induced_chain: strategy has the wrong size");
    labelled_mdp chain(m.get_alphabet(), m.num_states(), m.initial());
    for (state_t s = 0; s < m.num_states(); ++s)
      {
        if (!strategy[s])
          {
            chain.add_action(s, "stop");
            continue;
          }
        const auto& act = m.actions(s).at(*strategy[s]);
        chain.add_action(s, act.name);
        for (const auto& e : act.edges)
          chain.add_edge(s, 0, e.probability, e.label, e.target);
      }
    return chain;
  }

  std::vector<rational> chain_reach_probability(const labelled_mdp& chain,
                                                const std::vector<bool>& target)
  {
    if (!chain.is_markov_chain())
      throw contract_error("chain_reach_probability: the model is not a Markov chain");
    if (target.size() != chain.num_states())
      throw input_error("chain_reach_probability: target has the wrong size");
    positional_strategy only(chain.num_states(), std::size_t{0});
    return evaluate(chain, only, target);
  }

  psyn_analysis analyze_psyn(const labelled_mdp& m, const automaton& a, successor_choice choice)
  {
    if (a.mode() != acceptance_mode::buchi)
      throw input_error("psyn: the automaton must use Buchi acceptance");
    psyn_analysis out;
    out.product = build_product(m, a, choice);
    out.mecs = accepting_mecs(out.product);
    out.target.assign(out.product.mdp.num_states(), false);
    for (const auto& ec : out.mecs)
      for (auto s : ec.states)
        out.target[s] = true;
    out.reach = max_reach_probability(out.product.mdp, out.target);
    out.value = out.reach.values[out.product.mdp.initial()];
    return out;
  }

  rational psyn(const labelled_mdp& m, const automaton& a, successor_choice choice)
  {
    return analyze_psyn(m, a, choice).value;
  }

  rational psem(const labelled_mdp& chain, const automaton& dba)
  {
    return mc_language_probability(chain, dba);
  }
}
