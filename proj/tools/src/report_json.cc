#include "report_json.hh"

namespace omega::tools
{
  ordered_json sigma_json(const std::vector<bool>& sigma)
  {
    std::string s;
    for (bool b : sigma)
      s += b ? '1' : '0';
    return s;
  }

  ordered_json run_pair_json(const alphabet& sigma, const run_pair& w)
  {
    return {{"word", format_lasso(sigma, w.word)},
            {"firstRun", {{"stem", w.first_stem}, {"loop", w.first_loop}}},
            {"secondRun", {{"stem", w.second_stem}, {"loop", w.second_loop}}}};
  }

  ordered_json psyn_json(const psyn_analysis& an)
  {
    const auto& p = an.product;
    ordered_json strategy = ordered_json::array();
    for (state_t s = 0; s < p.mdp.num_states(); ++s)
      {
        const auto& choice = an.reach.strategy[s];
        if (!choice || p.mdp.actions(s).size() < 2)
          continue;
        strategy.push_back({{"state", p.state_name(s)},
                            {"action", p.mdp.actions(s)[*choice].name},
                            {"value", an.reach.values[s].str()}});
      }
    ordered_json mecs = ordered_json::array();
    for (const auto& ec : an.mecs)
      {
        ordered_json states = ordered_json::array();
        for (auto s : ec.states)
          states.push_back(p.state_name(s));
        mecs.push_back(std::move(states));
      }
    return {{"value", an.value.str()},
            {"productStates", p.mdp.num_states()},
            {"policyIterations", an.reach.iterations},
            {"strategy", std::move(strategy)},
            {"acceptingMecs", std::move(mecs)}};
  }

  ordered_json marking_json(const automaton& d, const marking& m)
  {
    ordered_json assignments = ordered_json::array();
    for (std::size_t i = 0; i < m.order.size(); ++i)
      {
        auto q = m.order[i];
        assignments.push_back({{"state", q},
                               {"word", format_word(d.get_alphabet(), *m.word[q])},
                               {"phase", to_string(*m.phase[q])},
                               {"orderIndex", i}});
      }
    return {{"assignments", std::move(assignments)}, {"unmarked", m.unmarked()}};
  }

  ordered_json collapse_json(const collapse_report& r)
  {
    ordered_json out = {
      {"n", r.n},
      {"dbaStates", r.dn_states},
      {"minimalDfaStates", r.min_dfa_states},
      {"marked", r.marked},
      {"unmarkedCount", r.unmarked},
      {"pSize", r.p_states},
      {"bound", r.bound.str()},
    };
    out["universalState"] = r.universal_state ? ordered_json(*r.universal_state) : ordered_json(nullptr);
    out["boundsCheck"] = {
      {"closureAfterBinaryPhase", r.closure_after_phase2},
      {"closureAtEnd", r.closure_final},
      {"witnessesValid", r.witnesses_valid},
      {"someStateUnmarked", r.has_unmarked},
      {"gammaUnreachableStructural", r.gamma_structural},
      {"gammaRejectedEnumerated", r.gamma_enumerated},
      {"universalStateFound", r.universal_state_found},
      {"intersectionIsLn", r.intersection_is_ln},
      {"pMeetsBound", r.p_meets_bound},
      {"dbaMeetsBound", r.dn_meets_bound},
    };
    out["pass"] = r.all_pass();
    return out;
  }

  ordered_json ambiguity_json(const automaton& a, const ambiguity_result& r)
  {
    ordered_json out = {{"holds", r.holds}};
    out["witness"] = r.witness ? run_pair_json(a.get_alphabet(), *r.witness) : ordered_json(nullptr);
    return out;
  }

  ordered_json separation_json(const automaton& a, const separation_result& r)
  {
    ordered_json out = {{"holds", r.holds}};
    if (r.holds)
      out["witness"] = nullptr;
    else
      out["witness"] = {{"p", *r.p}, {"q", *r.q}, {"word", format_lasso(a.get_alphabet(), *r.word)}};
    return out;
  }

  ordered_json lower_bound_json(const lower_bound_report& r)
  {
    ordered_json instances = ordered_json::array();
    for (const auto& i : r.instances)
      {
        ordered_json row = {{"sigma", sigma_json(i.sigma)},
                            {"psyn", i.syntactic.str()},
                            {"semantic", i.semantic.str()},
                            {"attains", i.attains}};
        row["pairedState"] = i.paired_state ? ordered_json(*i.paired_state) : ordered_json(nullptr);
        instances.push_back(std::move(row));
      }
    ordered_json out = {{"n", r.n},
                        {"flavor", to_string(r.flavor)},
                        {"successorChoice", to_string(r.choice)},
                        {"candidateStates", r.candidate_states},
                        {"formulaMatchesReference", r.formula_matches_reference},
                        {"valuesDistinct", r.values_distinct},
                        {"attainsAll", r.attains_all},
                        {"shortfall", r.shortfall},
                        {"distinctPairedStates", r.distinct_paired_states}};
    if (r.lasso_bound)
      {
        out["languageCheck"] = {
          {"bound", *r.lasso_bound},
          {"equivalentOnLassos", *r.lasso_equivalent},
          {"assumption", "candidate language compared with the reference automaton on lasso words "
                         "u.v^w with |u|, |v| <= bound only"}};
      }
    else
      out["languageCheck"] = nullptr;
    // the state count conclusion only follows for candidates that attain every value
    out["conclusion"] = r.attains_all
                          ? "candidate attains every value; paired states give a state-count lower bound"
                          : "candidate falls short on some chain; only the value shortfall is certified";
    out["instances"] = std::move(instances);
    return out;
  }

  ordered_json spot_check_json(const spot_check_report& r)
  {
    ordered_json cases = ordered_json::array();
    for (const auto& c : r.cases)
      cases.push_back({{"seed", c.seed},
                       {"chainStates", c.chain_states},
                       {"psyn", c.syntactic.str()},
                       {"psem", c.semantic.str()},
                       {"equal", c.equal}});
    return {{"n", r.n},
            {"successorChoice", to_string(r.choice)},
            {"allEqual", r.all_equal()},
            {"cases", std::move(cases)}};
  }
}
