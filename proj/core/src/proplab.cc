#include <omega/proplab.hh>

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include <omega/automaton_ops.hh>
#include <omega/families.hh>
#include <omega/mdp.hh>
#include <omega/product.hh>

namespace omega
{
  namespace
  {
    struct pair_state
    {
      state_t p, q;
      bool diverged;
      int phase;
      auto key() const { return std::make_tuple(p, q, diverged, phase); }
    };

    struct self_product
    {
      automaton graph;
      std::vector<pair_state> states;
    };

    /// Pairs of runs of `a` over a common word. With `track_acceptance` the
    /// finals are diverged pairs in which both runs are Buchi fair (phase
    /// construction); otherwise every diverged pair is final.
    self_product build_self_product(const automaton& a, bool track_acceptance)
    {
      self_product sp;
      std::map<std::tuple<state_t, state_t, bool, int>, state_t> index;
      auto is_final = [&](const pair_state& s) {
        if (!s.diverged)
          return false;
        return track_acceptance ? s.phase == 2 && a.is_final(s.q) : true;
      };
      pair_state init{a.initial(), a.initial(), false, 1};
      sp.graph = automaton(a.get_alphabet(), 1, 0, acceptance_mode::buchi);
      sp.graph.set_final(0, is_final(init));
      sp.states.push_back(init);
      index.emplace(init.key(), 0);

      for (state_t id = 0; id < sp.states.size(); ++id)
        {
          const pair_state cur = sp.states[id];
          int next_phase = cur.phase;
          if (track_acceptance)
            {
              if (cur.phase == 1 && a.is_final(cur.p))
                next_phase = 2;
              else if (cur.phase == 2 && a.is_final(cur.q))
                next_phase = 1;
            }
          for (symbol_t l = 0; l < a.num_symbols(); ++l)
            for (auto p2 : a.successors(cur.p, l))
              for (auto q2 : a.successors(cur.q, l))
                {
                  pair_state nxt{p2, q2, cur.diverged || p2 != q2, next_phase};
                  auto [it, fresh] = index.emplace(nxt.key(), static_cast<state_t>(sp.states.size()));
                  if (fresh)
                    {
                      sp.states.push_back(nxt);
                      sp.graph.add_state(is_final(nxt));
                    }
                  sp.graph.add_transition(id, l, it->second);
                }
        }
      return sp;
    }

    ambiguity_result check_pairs(const automaton& a, bool track_acceptance)
    {
      if (a.mode() != acceptance_mode::buchi)
        throw input_error("ambiguity checks need a Buchi automaton");
      auto sp = build_self_product(a, track_acceptance);
      auto lasso = find_accepting_lasso(sp.graph);
      ambiguity_result r;
      if (!lasso)
        return r;
      r.holds = false;
      run_pair w{lasso->word, {}, {}, {}, {}};
      for (auto s : lasso->stem_states)
        {
          w.first_stem.push_back(sp.states[s].p);
          w.second_stem.push_back(sp.states[s].q);
        }
      for (auto s : lasso->loop_states)
        {
          w.first_loop.push_back(sp.states[s].p);
          w.second_loop.push_back(sp.states[s].q);
        }
      r.witness = std::move(w);
      return r;
    }
  }

  ambiguity_result is_unambiguous(const automaton& a)
  {
    return check_pairs(a, true);
  }

  ambiguity_result is_strongly_unambiguous(const automaton& a)
  {
    return check_pairs(a, false);
  }

  separation_result is_separating(const automaton& a)
  {
    if (a.mode() != acceptance_mode::buchi)
      throw input_error("is_separating needs a Buchi automaton");
    separation_result r;
    for (state_t p = 0; p < a.num_states(); ++p)
      {
        const auto ap = a.rooted_at(p);
        for (state_t q = p + 1; q < a.num_states(); ++q)
          {
            auto e = is_empty_buchi(intersect_nba(ap, a.rooted_at(q)));
            if (!e.empty)
              {
                r.holds = false;
                r.p = p;
                r.q = q;
                r.word = e.witness;
                return r;
              }
          }
      }
    return r;
  }

  const char* to_string(language_flavor f) noexcept
  {
    return f == language_flavor::reach ? "reach" : "safety";
  }

  language_flavor parse_flavor(const std::string& text)
  {
    if (text == "reach")
      return language_flavor::reach;
    if (text == "safety")
      return language_flavor::safety;
    throw input_error("unknown language flavor '" + text + "' (expected reach or safety)");
  }

  rational sigma_chain_value(const std::vector<bool>& sigma)
  {
    auto n = static_cast<unsigned>(sigma.size());
    rational v = rational::inverse_power_of_two(n + 1);
    for (unsigned i = 1; i <= n; ++i)
      if (sigma[i - 1])
        v += rational::inverse_power_of_two(i);
    return v;
  }

  namespace
  {
    std::optional<state_t> first_paired_state(const psyn_analysis& an, state_t sn)
    {
      const auto& pm = an.product;
      const auto& mdp = pm.mdp;
      std::vector<bool> seen(mdp.num_states(), false);
      std::deque<state_t> queue{mdp.initial()};
      seen[mdp.initial()] = true;
      std::set<state_t> paired;
      while (!queue.empty())
        {
          auto v = queue.front();
          queue.pop_front();
          const auto& origin = pm.origin[v];
          if (origin && origin->first == sn)
            {
              paired.insert(origin->second);
              continue;
            }
          const auto& choice = an.reach.strategy[v];
          if (!choice)
            continue;
          for (const auto& e : mdp.actions(v)[*choice].edges)
            if (!seen[e.target])
              {
                seen[e.target] = true;
                queue.push_back(e.target);
              }
        }
      if (paired.size() > 1)
        throw contract_error("s_n is first reached with several automaton states");
      if (paired.empty())
        return std::nullopt;
      return *paired.begin();
    }
  }

  lower_bound_report gfm_lower_bound_experiment(unsigned n, const automaton& candidate,
                                                language_flavor flavor,
                                                std::optional<std::size_t> lasso_bound,
                                                successor_choice choice)
  {
    if (n < 1 || n > 16)
      throw input_error("gfm_lower_bound_experiment: n must lie in 1..16");
    const auto reference = flavor == language_flavor::safety ? families::build_sn_dba(n)
                                                             : families::build_rn_dba(n);
    lower_bound_report r;
    r.n = n;
    r.flavor = flavor;
    r.choice = choice;
    r.candidate_states = candidate.num_states();
    if (lasso_bound)
      {
        r.lasso_bound = lasso_bound;
        r.lasso_equivalent = buchi_equiv_on_lassos(candidate, reference, *lasso_bound).equivalent;
      }

    r.formula_matches_reference = true;
    r.attains_all = true;
    std::set<state_t> paired;
    std::set<std::string> values;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t k = 0; k < count; ++k)
      {
        sigma_instance inst;
        inst.sigma.resize(n);
        for (unsigned i = 0; i < n; ++i)
          inst.sigma[i] = ((k >> (n - 1 - i)) & 1U) != 0;
        const auto chain = build_sigma_mc(n, inst.sigma);
        const auto an = analyze_psyn(chain, candidate, choice);
        inst.syntactic = an.value;
        inst.semantic = sigma_chain_value(inst.sigma);
        inst.reference = mc_language_probability(chain, reference);
        inst.attains = inst.syntactic == inst.semantic;
        inst.paired_state = first_paired_state(an, n);

        if (inst.reference != inst.semantic)
          r.formula_matches_reference = false;
        if (!inst.attains)
          r.attains_all = false;
        if (inst.syntactic < inst.semantic)
          r.shortfall = true;
        if (inst.paired_state)
          paired.insert(*inst.paired_state);
        values.insert(inst.semantic.str());
        r.instances.push_back(std::move(inst));
      }
    r.values_distinct = values.size() == count;
    r.distinct_paired_states = paired.size();
    return r;
  }

  bool spot_check_report::all_equal() const
  {
    return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.equal; });
  }

  spot_check_report gfm_spot_check(unsigned n, const std::vector<std::uint64_t>& seeds,
                                   successor_choice choice)
  {
    const auto gn = families::build_gn(n);
    const auto dn = families::build_dn(n);
    spot_check_report r;
    r.n = n;
    r.choice = choice;
    for (auto seed : seeds)
      {
        auto m = build_random_mc(seed, spot_check_chain_states, alphabet::binary_dollar(),
                                 spot_check_density);
        spot_check_case c;
        c.seed = seed;
        c.chain_states = m.num_states();
        c.syntactic = psyn(m, gn, choice);
        c.semantic = psem(m, dn);
        c.equal = c.syntactic == c.semantic;
        r.cases.push_back(std::move(c));
      }
    return r;
  }
}
