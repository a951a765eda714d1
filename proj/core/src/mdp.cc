#include <omega/mdp.hh>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "graph.hh"
#include "linear_solve.hh"

namespace omega
{
  rational mdp_action::mass() const
  {
    rational total;
    for (const auto& e : edges)
      total += e.probability;
    return total;
  }

  labelled_mdp::labelled_mdp(alphabet sigma, std::size_t num_states, state_t initial)
    : alphabet_(std::move(sigma)), initial_(initial), actions_(num_states)
  {
    if (num_states == 0)
      throw input_error("an MDP needs at least one state");
    check_state(initial);
  }

  void labelled_mdp::check_state(state_t s) const
  {
    if (s >= actions_.size())
      throw input_error("MDP state " + std::to_string(s) + " out of range");
  }

  state_t labelled_mdp::add_state()
  {
    actions_.emplace_back();
    return static_cast<state_t>(actions_.size() - 1);
  }

  std::size_t labelled_mdp::add_action(state_t s, std::string name)
  {
    check_state(s);
    actions_[s].push_back({std::move(name), {}});
    return actions_[s].size() - 1;
  }

  void labelled_mdp::add_edge(state_t s, std::size_t action, rational p, symbol_t label,
                              state_t target)
  {
    check_state(s);
    check_state(target);
    if (action >= actions_[s].size())
      throw input_error("action index out of range at state " + std::to_string(s));
    if (label >= alphabet_.size())
      throw input_error("transition label outside the alphabet");
    if (p.sign() <= 0)
      throw input_error("transition probabilities must be positive");
    auto& act = actions_[s][action];
    if (act.mass() + p > rational(1))
      throw input_error("probabilities of action '" + act.name + "' at state "
                        + std::to_string(s) + " exceed 1");
    act.edges.push_back({std::move(p), label, target});
  }

  void labelled_mdp::set_initial(state_t s)
  {
    check_state(s);
    initial_ = s;
  }

  bool labelled_mdp::is_markov_chain() const
  {
    return std::all_of(actions_.begin(), actions_.end(),
                       [](const auto& acts) { return acts.size() == 1; });
  }

  bool labelled_mdp::is_full_support() const
  {
    for (const auto& acts : actions_)
      for (const auto& a : acts)
        if (a.mass() != rational(1))
          return false;
    return true;
  }

  bool mdp_run::respects(const labelled_mdp& m) const
  {
    if (actions.size() != labels.size() || labels.size() != states.size())
      return false;
    if (start >= m.num_states())
      return false;
    state_t cur = start;
    for (std::size_t i = 0; i < actions.size(); ++i)
      {
        const auto& acts = m.actions(cur);
        if (actions[i] >= acts.size())
          return false;
        bool found = false;
        for (const auto& e : acts[actions[i]].edges)
          if (e.label == labels[i] && e.target == states[i])
            found = true;
        if (!found)
          return false;
        cur = states[i];
      }
    return true;
  }

  labelled_mdp build_sigma_mc(unsigned n, const std::vector<bool>& sigma)
  {
    if (n < 1)
      throw input_error("build_sigma_mc: n must be at least 1");
    if (sigma.size() != n)
      throw input_error("build_sigma_mc: sigma must have exactly n bits");
    const auto sigma_ab = alphabet::binary_dollar();
    const symbol_t zero = 0, one = 1, dollar = 2;
    labelled_mdp m(sigma_ab, n + 2, 0);
    for (state_t i = 0; i < n; ++i)
      {
        m.add_action(i, "m");
        m.add_edge(i, 0, rational(1), sigma[i] ? one : zero, i + 1);
      }
    const state_t sn = n, sf = n + 1;
    m.add_action(sn, "m");
    m.add_edge(sn, 0, rational(1, 4), zero, sn);
    m.add_edge(sn, 0, rational(1, 4), one, sn);
    m.add_edge(sn, 0, rational(1, 2), dollar, sf);
    m.add_action(sf, "m");
    m.add_edge(sf, 0, rational(1), dollar, sf);
    return m;
  }

  labelled_mdp build_random_mc(std::uint64_t seed, std::size_t num_states,
                               const alphabet& labels, double density)
  {
    if (num_states < 1)
      throw input_error("build_random_mc: need at least one state");
    if (!(density > 0.0 && density <= 1.0))
      throw input_error("build_random_mc: density must lie in (0, 1]");
    if (labels.empty())
      throw input_error("build_random_mc: empty label alphabet");

    std::mt19937_64 rng(seed);
    // plain modulo keeps the stream identical across standard libraries
    auto draw = [&rng](std::uint64_t bound) { return rng() % bound; };
    const auto max_extra = static_cast<std::uint64_t>(std::ceil(density * 3.0));

    for (int attempt = 0; attempt < 10000; ++attempt)
      {
        labelled_mdp m(labels, num_states, 0);
        detail::adjacency graph(num_states);
        for (state_t s = 0; s < num_states; ++s)
          {
            m.add_action(s, "m");
            // mostly forward edges, so that chains have transient parts and
            // several bottom components; one state in four may jump back
            const state_t lowest = draw(4) == 0 ? 0 : s;
            const std::size_t pairs = labels.size() * (num_states - lowest);
            std::size_t count = std::min<std::size_t>(
              pairs, 1 + static_cast<std::size_t>(draw(max_extra + 1)));
            std::set<std::uint64_t> chosen;
            while (chosen.size() < count)
              chosen.insert(draw(pairs));
            std::vector<std::int64_t> weights;
            std::int64_t total = 0;
            for (std::size_t i = 0; i < count; ++i)
              {
                weights.push_back(1 + static_cast<std::int64_t>(draw(4)));
                total += weights.back();
              }
            std::size_t i = 0;
            for (auto pair : chosen)
              {
                auto label = static_cast<symbol_t>(pair % labels.size());
                auto target = static_cast<state_t>(lowest + pair / labels.size());
                m.add_edge(s, 0, rational(weights[i++], total), label, target);
                graph[s].push_back(target);
              }
          }
        auto reach = detail::forward_reachable(graph, {0});
        if (std::all_of(reach.begin(), reach.end(), [](bool b) { return b; }))
          return m;
      }
    throw input_error("build_random_mc: could not draw a chain with all states reachable");
  }

  rational mc_language_probability(const labelled_mdp& mc, const automaton& dba)
  {
    if (!mc.is_markov_chain())
      throw contract_error("mc_language_probability: the model is not a Markov chain");
    if (dba.mode() != acceptance_mode::buchi)
      throw contract_error("mc_language_probability: automaton must be a Buchi automaton");
    if (!dba.is_deterministic() || !dba.is_complete())
      throw contract_error("mc_language_probability: automaton must be deterministic and complete");
    if (!(mc.get_alphabet() == dba.get_alphabet()))
      throw input_error("mc_language_probability: alphabets differ");

    // synchronous product, reachable part; index 0 is the rejecting sink
    std::map<std::pair<state_t, state_t>, std::uint32_t> index;
    std::vector<std::pair<state_t, state_t>> states{{0, 0}};
    std::vector<std::vector<std::pair<rational, std::uint32_t>>> rows(1);
    rows[0].emplace_back(rational(1), 0);
    std::vector<std::uint32_t> todo;
    auto intern = [&](state_t s, state_t q) {
      auto [it, fresh] = index.emplace(std::make_pair(s, q), static_cast<std::uint32_t>(states.size()));
      if (fresh)
        {
          states.emplace_back(s, q);
          rows.emplace_back();
          todo.push_back(it->second);
        }
      return it->second;
    };
    const auto start = intern(mc.initial(), dba.initial());
    while (!todo.empty())
      {
        auto id = todo.back();
        todo.pop_back();
        auto [s, q] = states[id];
        const auto& act = mc.actions(s).front();
        std::vector<std::pair<rational, std::uint32_t>> row;
        for (const auto& e : act.edges)
          row.emplace_back(e.probability, intern(e.target, *dba.step(q, e.label)));
        rational deficit = rational(1) - act.mass();
        if (!deficit.is_zero())
          row.emplace_back(deficit, 0);
        rows[id] = std::move(row);
      }

    const std::size_t n = states.size();
    detail::adjacency graph(n);
    for (std::uint32_t v = 0; v < n; ++v)
      for (const auto& [p, w] : rows[v])
        graph[v].push_back(w);
    auto scc = detail::tarjan_scc(graph);

    std::vector<bool> good(n, false);
    for (std::size_t c = 0; c < scc.members.size(); ++c)
      {
        bool bottom = true, accepting = false;
        for (auto v : scc.members[c])
          {
            for (auto w : graph[v])
              if (scc.component[w] != c)
                bottom = false;
            if (v != 0 && dba.is_final(states[v].second))
              accepting = true;
          }
        if (bottom && accepting)
          for (auto v : scc.members[c])
            good[v] = true;
      }

    auto can_win = detail::backward_reachable(graph, good);
    if (!can_win[start])
      return rational(0);
    if (good[start])
      return rational(1);

    std::vector<std::uint32_t> var(n, UINT32_MAX);
    std::vector<std::uint32_t> unknowns;
    for (std::uint32_t v = 0; v < n; ++v)
      if (can_win[v] && !good[v])
        {
          var[v] = static_cast<std::uint32_t>(unknowns.size());
          unknowns.push_back(v);
        }
    std::vector<detail::sparse_equation> system(unknowns.size());
    for (std::uint32_t i = 0; i < unknowns.size(); ++i)
      {
        auto& eq = system[i];
        eq.coefficients[i] += rational(1);
        for (const auto& [p, w] : rows[unknowns[i]])
          {
            if (good[w])
              eq.rhs += p;
            else if (var[w] != UINT32_MAX)
              {
                auto& c = eq.coefficients[var[w]];
                c -= p;
                if (c.is_zero())
                  eq.coefficients.erase(var[w]);
              }
          }
      }
    auto x = detail::solve_exact(std::move(system));
    return x[var[start]];
  }
}
