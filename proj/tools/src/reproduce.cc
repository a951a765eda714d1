#include "reproduce.hh"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <set>
#include <sstream>

#include <omega/automaton_ops.hh>
#include <omega/families.hh>
#include <omega/version.hh>

namespace omega::tools
{
  namespace
  {
    unsigned cap(const suite_options& opt, unsigned fallback)
    {
      return opt.max_n ? std::min(*opt.max_n, fallback) : fallback;
    }

    template <typename Body>
    criterion_result timed(int id, std::string title, std::optional<double> limit, Body body)
    {
      criterion_result r;
      r.id = id;
      r.title = std::move(title);
      r.time_limit = limit;
      r.details = ordered_json::object();
      auto start = std::chrono::steady_clock::now();
      body(r);
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (limit && r.seconds > *limit)
        {
          r.passed = false;
          r.summary += " (over the time limit)";
        }
      return r;
    }

    finite_word repeat(symbol_t a, unsigned k)
    {
      return finite_word(k, a);
    }

    finite_word concat(std::initializer_list<finite_word> parts)
    {
      finite_word out;
      for (const auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
      return out;
    }
  }

  criterion_result check_example_chain(const suite_options&)
  {
    return timed(1, "example chain: psem 1/4 and psyn 1/8", 1.0, [](criterion_result& r) {
      const auto chain = build_sigma_mc(1, {false});
      const auto s1 = families::build_sn(1);
      const auto sem = psem(chain, families::build_sn_dba(1));
      const auto syn = psyn(chain, s1, successor_choice::per_action);
      const auto syn_letter = psyn(chain, s1, successor_choice::per_letter);
      r.passed = sem == rational(1, 4) && syn == rational(1, 8);
      r.summary = "psem = " + sem.str() + ", psyn = " + syn.str() + " (per-letter choice: "
                  + syn_letter.str() + ")";
      r.details = {{"psem", sem.str()},
                   {"psyn", syn.str()},
                   {"psynPerLetter", syn_letter.str()},
                   {"notGfm", syn < sem && syn_letter < sem}};
    });
  }

  criterion_result check_subset_lower_bound(const suite_options& opt)
  {
    return timed(2, "minimal DFA for L_n has at least 2^n states", 30.0, [&](criterion_result& r) {
      r.passed = true;
      ordered_json sizes = ordered_json::array();
      std::ostringstream s;
      for (unsigned n = 1; n <= cap(opt, 5); ++n)
        {
          auto min = hopcroft_minimize(
            complete_with_sink(subset_construction(families::build_an(n))));
          bool ok = min.num_states() >= (std::size_t{1} << n);
          r.passed = r.passed && ok;
          sizes.push_back({{"n", n}, {"states", min.num_states()}, {"atLeast", std::size_t{1} << n}});
          s << (n > 1 ? ", " : "") << "n=" << n << ": " << min.num_states();
        }
      r.summary = "minimal sizes " + s.str();
      r.details = {{"sizes", std::move(sizes)}};
    });
  }

  criterion_result check_loop_automata(const suite_options& opt)
  {
    return timed(3, "D_n complete; G_n on curated lassos", std::nullopt, [&](criterion_result& r) {
      r.passed = true;
      ordered_json complete = ordered_json::array();
      for (unsigned n = 1; n <= cap(opt, 5); ++n)
        {
          auto d = families::build_dn(n);
          bool ok = d.is_complete() && d.is_deterministic();
          r.passed = r.passed && ok;
          complete.push_back({{"n", n}, {"states", d.num_states()}, {"completeDeterministic", ok}});
        }

      const symbol_t zero = 0, one = 1, dollar = 2;
      ordered_json words = ordered_json::array();
      std::size_t checked = 0, wrong = 0;
      for (unsigned n = 1; n <= cap(opt, 4); ++n)
        {
          const auto g = families::build_gn(n);
          const auto d = families::build_dn(n);
          const finite_word good = concat({{one}, repeat(zero, n - 1), {dollar}});
          const finite_word bad = concat({{one}, repeat(zero, n), {dollar}});
          struct sample
          {
            lasso_word word;
            bool expected;
          };
          const std::vector<sample> samples = {
            {{{}, good}, true},
            {{{dollar, zero}, concat({repeat(one, n), {dollar}})}, true},
            {{{}, concat({{zero}, good})}, true},
            {{bad, concat({good, bad})}, true},
            {{{}, concat({repeat(one, n), {dollar, dollar}})}, true},
            {{{}, {zero}}, false},
            {{{}, {one}}, false},
            {{good, {zero, one}}, false},
            {{concat({good, good}), {one}}, false},
            {{{}, concat({repeat(zero, n), {dollar}})}, false},
            {{{}, bad}, false},
            {{good, bad}, false},
            {{{}, {dollar}}, false},
            {{{}, concat({repeat(one, n - 1), {dollar}})}, false},
          };
          for (const auto& smp : samples)
            {
              bool by_g = accepts_lasso(g, smp.word);
              bool by_d = accepts_lasso(d, smp.word);
              ++checked;
              if (by_g != smp.expected || by_d != smp.expected)
                {
                  ++wrong;
                  words.push_back({{"n", n},
                                   {"word", format_lasso(g.get_alphabet(), smp.word)},
                                   {"expected", smp.expected},
                                   {"gn", by_g},
                                   {"dn", by_d}});
                }
            }
        }
      r.passed = r.passed && wrong == 0;
      r.summary = std::to_string(checked) + " lasso verdicts checked, " + std::to_string(wrong)
                  + " wrong";
      r.details = {{"dbaComplete", std::move(complete)},
                   {"lassosChecked", checked},
                   {"mismatches", std::move(words)}};
    });
  }

  criterion_result check_gfm_spot(const suite_options& opt)
  {
    return timed(4, "psyn(m, G_n) = psem(m, D_n) on random chains", 120.0, [&](criterion_result& r) {
      const std::vector<std::pair<unsigned, unsigned>> plan = {{1, 50}, {2, 20}, {3, 10}};
      r.passed = true;
      ordered_json runs = ordered_json::array();
      std::size_t total = 0, equal = 0, nontrivial = 0;
      for (auto [n, count] : plan)
        {
          if (n > cap(opt, 3))
            continue;
          std::vector<std::uint64_t> seeds;
          for (unsigned i = 0; i < count; ++i)
            seeds.push_back(opt.seed_base + i);
          auto rep = gfm_spot_check(n, seeds, successor_choice::per_letter);
          for (const auto& c : rep.cases)
            {
              ++total;
              equal += c.equal ? 1 : 0;
              nontrivial += (c.semantic != rational(0) && c.semantic != rational(1)) ? 1 : 0;
            }
          r.passed = r.passed && rep.all_equal();
          runs.push_back(spot_check_json(rep));
        }
      r.summary = std::to_string(equal) + "/" + std::to_string(total) + " chains agree ("
                  + std::to_string(nontrivial) + " with values strictly between 0 and 1)";
      r.details = {{"seedBase", opt.seed_base}, {"runs", std::move(runs)}};
    });
  }

  criterion_result check_marking(const suite_options& opt)
  {
    return timed(5, "marking procedure and the collapsed automaton P", std::nullopt,
                 [&](criterion_result& r) {
                   r.passed = true;
                   ordered_json reports = ordered_json::array();
                   std::ostringstream s;
                   for (unsigned n = 1; n <= cap(opt, 5); ++n)
                     {
                       auto rep = run_collapse_report(n);
                       r.passed = r.passed && rep.all_pass();
                       s << (n > 1 ? ", " : "") << "n=" << n << ": |P|=" << rep.p_states
                         << " |D|=" << rep.dn_states;
                       reports.push_back(collapse_json(rep));
                     }
                   r.summary = s.str();
                   r.details = {{"reports", std::move(reports)}};
                 });
  }

  criterion_result check_sigma_family(const suite_options& opt)
  {
    return timed(6, "sigma chains: exact values and 2^n paired states", std::nullopt,
                 [&](criterion_result& r) {
                   r.passed = true;
                   ordered_json per_n = ordered_json::array();
                   std::ostringstream s;
                   for (unsigned n = 1; n <= cap(opt, 8); ++n)
                     {
                       const std::size_t bound = 2 * n + 3;
                       auto det = gfm_lower_bound_experiment(n, families::build_sn_dba(n),
                                                             language_flavor::safety, std::nullopt);
                       auto sn = gfm_lower_bound_experiment(n, families::build_sn(n),
                                                            language_flavor::safety, bound);
                       auto rn = gfm_lower_bound_experiment(n, families::build_rn(n),
                                                            language_flavor::reach, bound);
                       bool ok = det.formula_matches_reference && det.values_distinct
                                 && det.attains_all
                                 && det.distinct_paired_states == (std::size_t{1} << n)
                                 && sn.shortfall && rn.shortfall && *sn.lasso_equivalent
                                 && *rn.lasso_equivalent && rn.formula_matches_reference;
                       r.passed = r.passed && ok;
                       s << (n > 1 ? ", " : "") << "n=" << n << ": "
                         << det.distinct_paired_states << " paired";
                       per_n.push_back({{"n", n},
                                        {"pass", ok},
                                        {"deterministic", lower_bound_json(det)},
                                        {"safetyCandidate",
                                         {{"states", sn.candidate_states},
                                          {"shortfall", sn.shortfall},
                                          {"lassoBound", bound},
                                          {"equivalentOnLassos", *sn.lasso_equivalent}}},
                                        {"reachCandidate",
                                         {{"states", rn.candidate_states},
                                          {"shortfall", rn.shortfall},
                                          {"lassoBound", bound},
                                          {"equivalentOnLassos", *rn.lasso_equivalent}}}});
                     }
                   r.summary = s.str();
                   r.details = {{"perN", std::move(per_n)}};
                 });
  }

  criterion_result check_ambiguity_properties(const suite_options& opt)
  {
    return timed(7, "ambiguity, separation and acceptance shape of S_n, R_n, R_n'", std::nullopt,
                 [&](criterion_result& r) {
                   r.passed = true;
                   ordered_json rows = ordered_json::array();
                   for (unsigned n = 1; n <= cap(opt, 5); ++n)
                     {
                       auto sn = families::build_sn(n);
                       auto rn = families::build_rn(n);
                       auto rp = families::build_rn_prime(n);
                       ordered_json row = {
                         {"n", n},
                         {"snStronglyUnambiguous", is_strongly_unambiguous(sn).holds},
                         {"snSeparating", is_separating(sn).holds},
                         {"snSafety", sn.is_safety()},
                         {"rnUnambiguous", is_unambiguous(rn).holds},
                         {"rnReachability", rn.is_reachability()},
                         {"rnPrimeSeparating", is_separating(rp).holds},
                         {"rnPrimeEquivalentOnLassos",
                          buchi_equiv_on_lassos(rn, rp, 2 * n + 3).equivalent},
                       };
                       for (const auto& [key, value] : row.items())
                         if (value.is_boolean() && !value.get<bool>())
                           r.passed = false;
                       rows.push_back(std::move(row));
                     }
                   auto g1 = families::build_gn(1);
                   auto s1 = families::build_sn(1);
                   ordered_json small = {
                     {"g1Unambiguous", is_unambiguous(g1).holds},
                     {"g1Separating", is_separating(g1).holds},
                     {"s1Separating", is_separating(s1).holds},
                     {"s1Unambiguous", is_unambiguous(s1).holds},
                   };
                   r.passed = r.passed && !small["g1Unambiguous"].get<bool>()
                              && !small["g1Separating"].get<bool>()
                              && small["s1Separating"].get<bool>()
                              && small["s1Unambiguous"].get<bool>();
                   r.summary = std::to_string(rows.size()) + " sizes checked; G_1 ambiguous and "
                               "not separating; S_1 separating and unambiguous";
                   r.details = {{"perN", std::move(rows)}, {"smallCases", std::move(small)}};
                 });
  }

  criterion_result check_structural_counts(const suite_options& opt)
  {
    return timed(8, "state and transition counts", std::nullopt, [&](criterion_result& r) {
      r.passed = true;
      ordered_json rows = ordered_json::array();
      bool sn_matches_2n = true;
      for (unsigned n = 1; n <= cap(opt, 10); ++n)
        {
          auto g = families::build_gn(n);
          auto rn = families::build_rn(n);
          auto rp = families::build_rn_prime(n);
          auto sn = families::build_sn(n);
          auto cn = families::build_cn(n);
          bool ok = g.num_states() == n + 2 && g.transition_count() == 3 * n + 7
                    && rn.num_states() == n + 2 && rn.transition_count() == 2 * n + 5
                    && rp.num_states() == n + 2 && rp.transition_count() == 3 * n + 6
                    && sn.num_states() == n + 1 && cn.num_states() == n + 2;
          r.passed = r.passed && ok;
          sn_matches_2n = sn_matches_2n && sn.transition_count() == 2 * n;
          rows.push_back({{"n", n},
                          {"gn", {g.num_states(), g.transition_count()}},
                          {"rn", {rn.num_states(), rn.transition_count()}},
                          {"rnPrime", {rp.num_states(), rp.transition_count()}},
                          {"sn", {sn.num_states(), sn.transition_count()}},
                          {"cn", {cn.num_states(), cn.transition_count()}},
                          {"pass", ok}});
        }
      r.summary = std::string("counts match; S_n has 2n+2 transition triples")
                  + (sn_matches_2n ? "" : " (differs from the quoted 2n; reported, not asserted)");
      r.details = {{"rows", std::move(rows)},
                   {"snTransitionsQuoted", "2n"},
                   {"snTransitionsCounted", "2n+2"},
                   {"snQuotedCountHolds", sn_matches_2n}};
    });
  }

  criterion_result check_substitutions(const criterion_result& sigma_family)
  {
    return timed(9, "claims outside desk scale, substituted", std::nullopt, [&](criterion_result& r) {
      r.passed = sigma_family.passed;
      r.summary = "asymptotic GfG gap documented only; minimal GfM search replaced by the "
                  "sigma-chain certificate ("
                  + std::string(sigma_family.passed ? "holds" : "fails") + ")";
      r.details = {
        {"gfgGap",
         {{"status", "not computed"},
          {"reason", "the square-root gap rests on an external quadratic bound for GfG "
                     "automata; no procedure for deciding GfG is implemented"}}},
        {"minimalGfmSearch",
         {{"status", "substituted"},
          {"replacement", "2^n pairwise distinct chain values and 2^n distinct paired states "
                          "for a deterministic candidate"},
          {"certificateHolds", sigma_family.passed}}}};
    });
  }

  std::vector<criterion_result> run_all(const suite_options& opt)
  {
    std::vector<criterion_result> out;
    out.push_back(check_example_chain(opt));
    out.push_back(check_subset_lower_bound(opt));
    out.push_back(check_loop_automata(opt));
    out.push_back(check_gfm_spot(opt));
    out.push_back(check_marking(opt));
    out.push_back(check_sigma_family(opt));
    out.push_back(check_ambiguity_properties(opt));
    out.push_back(check_structural_counts(opt));
    out.push_back(check_substitutions(out[5]));
    return out;
  }

  std::uint64_t seed_base_from_env(std::uint64_t fallback)
  {
    const char* raw = std::getenv("OMEGA_SUCCINCT_SEED");
    if (!raw || !*raw)
      return fallback;
    std::string text(raw);
    if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })
        || text.size() > 19)
      throw input_error("OMEGA_SUCCINCT_SEED must be a non-negative integer, got '" + text + "'");
    return std::stoull(text);
  }

  ordered_json suite_json(const std::vector<criterion_result>& results, const suite_options& opt,
                          bool with_timing)
  {
    ordered_json list = ordered_json::array();
    bool all = true;
    for (const auto& r : results)
      {
        ordered_json entry = {{"id", r.id},
                              {"title", r.title},
                              {"pass", r.passed},
                              {"summary", r.summary}};
        if (with_timing)
          {
            entry["seconds"] = r.seconds;
            entry["timeLimit"] = r.time_limit ? ordered_json(*r.time_limit) : ordered_json(nullptr);
          }
        entry["details"] = r.details;
        list.push_back(std::move(entry));
        all = all && r.passed;
      }
    ordered_json params = {{"seedBase", opt.seed_base}};
    params["maxN"] = opt.max_n ? ordered_json(*opt.max_n) : ordered_json(nullptr);
    return {{"experiment", "reproduce-all"},
            {"version", omega::version},
            {"parameters", std::move(params)},
            {"pass", all},
            {"criteria", std::move(list)}};
  }

  std::string suite_summary(const std::vector<criterion_result>& results)
  {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto& r : results)
      {
        out << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.title << ": "
            << r.summary << "\n";
        passed += r.passed ? 1 : 0;
      }
    out << passed << "/" << results.size() << " criteria passed\n";
    return out.str();
  }
}
