#include <doctest.h>

#include <cmath>

#include <omega/automaton_ops.hh>
#include <omega/families.hh>
#include <omega/mdp.hh>
#include <omega/proplab.hh>

#include "oracles.hh"

using namespace omega;
namespace fam = omega::families;

namespace
{
  const alphabet sigma = alphabet::binary_dollar();

  std::vector<bool> bits(unsigned n, unsigned mask)
  {
    std::vector<bool> out(n);
    for (unsigned i = 0; i < n; ++i)
      out[i] = (mask >> (n - 1 - i)) & 1u;
    return out;
  }

  bool reaches_everything(const labelled_mdp& m)
  {
    std::vector<bool> seen(m.num_states());
    std::vector<state_t> stack{m.initial()};
    seen[m.initial()] = true;
    while (!stack.empty()) {
      state_t s = stack.back();
      stack.pop_back();
      for (const auto& a : m.actions(s))
        for (const auto& e : a.edges)
          if (!seen[e.target])
            seen[e.target] = true, stack.push_back(e.target);
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }
}

TEST_CASE("labelled MDP validation")
{
  labelled_mdp m(sigma, 2, 0);
  auto a = m.add_action(0, "a");
  m.add_edge(0, a, rational(1, 2), 0, 1);
  CHECK_THROWS_AS(m.add_edge(0, a, rational(2, 3), 1, 1), input_error);
  CHECK_THROWS_AS(m.add_edge(0, a, rational(0), 1, 1), input_error);
  CHECK_THROWS_AS(m.add_edge(0, a, rational(1, 4), 5, 1), input_error);
  CHECK_THROWS_AS(m.add_edge(0, a, rational(1, 4), 0, 9), input_error);
  CHECK_THROWS_AS(labelled_mdp(sigma, 0, 0), input_error);
  CHECK(m.actions(0)[a].mass() == rational(1, 2));
  CHECK_FALSE(m.is_full_support());
  CHECK_FALSE(m.is_markov_chain());

  mdp_run run{0, {0}, {0}, {1}};
  CHECK(run.respects(m));
  mdp_run wrong{0, {0}, {1}, {1}};
  CHECK_FALSE(wrong.respects(m));
}

TEST_CASE("sigma chains")
{
  auto m = build_sigma_mc(1, {false});
  CHECK(m.num_states() == 3);
  CHECK(m.is_markov_chain());
  CHECK(m.is_full_support());
  const auto& sn = m.actions(1).at(0).edges;
  REQUIRE(sn.size() == 3);
  CHECK(sn[0] == mdp_edge{rational(1, 4), 0, 1});
  CHECK(sn[1] == mdp_edge{rational(1, 4), 1, 1});
  CHECK(sn[2] == mdp_edge{rational(1, 2), 2, 2});
  CHECK(m.actions(0).at(0).edges == std::vector<mdp_edge>{{rational(1), 0, 1}});
  CHECK(m.actions(2).at(0).edges == std::vector<mdp_edge>{{rational(1), 2, 2}});
  CHECK_THROWS_AS(build_sigma_mc(2, {true}), input_error);
}

TEST_CASE("random chains are reproducible and well formed")
{
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto a = build_random_mc(seed, 6, sigma, 0.5);
    CHECK(a == build_random_mc(seed, 6, sigma, 0.5));
    CHECK(a.is_markov_chain());
    CHECK(a.is_full_support());
    CHECK(reaches_everything(a));
  }
  CHECK_FALSE(build_random_mc(1, 6, sigma, 0.5) == build_random_mc(2, 6, sigma, 0.5));
  CHECK_THROWS_AS(build_random_mc(1, 0, sigma, 0.5), input_error);
  CHECK_THROWS_AS(build_random_mc(1, 3, sigma, 0.0), input_error);
  CHECK_THROWS_AS(build_random_mc(1, 3, sigma, 1.5), input_error);
}

TEST_CASE("language probability of the example chain")
{
  auto m = build_sigma_mc(1, {false});
  auto s1_det = complete_with_sink(subset_construction(fam::build_sn(1).with_mode(acceptance_mode::finite)))
                    .with_mode(acceptance_mode::buchi);
  CHECK(mc_language_probability(m, s1_det) == rational(1, 4));
  CHECK(mc_language_probability(m, fam::build_sn_dba(1)) == rational(1, 4));
  CHECK(mc_language_probability(m, fam::build_dn(1)) == rational(0));

  auto empty = fam::build_dn(2);
  for (state_t q = 0; q < empty.num_states(); ++q)
    empty.set_final(q, false);
  CHECK(mc_language_probability(build_random_mc(3, 5, sigma, 0.6), empty) == rational(0));
  CHECK_THROWS_AS(mc_language_probability(m, fam::build_gn(1)), contract_error);
}

TEST_CASE("sigma chain values match the closed form and cylinder enumeration")
{
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      auto s = bits(n, mask);
      auto m = build_sigma_mc(n, s);
      rational expected = rational::inverse_power_of_two(n + 1);
      for (unsigned i = 0; i < n; ++i)
        if (s[i])
          expected += rational::inverse_power_of_two(i + 1);
      rational value = mc_language_probability(m, fam::build_sn_dba(n));
      CHECK(value == expected);
      CHECK(value == sigma_chain_value(s));

      auto safety = oracle::sigma_chain_cylinders(m, 20, [n](const lasso_word& x) {
        return oracle::in_ln_s(n, x);
      });
      CHECK(safety.lower <= value);
      CHECK(value <= safety.upper);
      CHECK(safety.upper - safety.lower <= rational::inverse_power_of_two(10));

      rational reach = mc_language_probability(m, fam::build_rn_dba(n));
      auto reach_cyl = oracle::sigma_chain_cylinders(m, 20, [n](const lasso_word& x) {
        return oracle::in_ln_r(n, x);
      });
      CHECK(reach_cyl.lower <= reach);
      CHECK(reach <= reach_cyl.upper);

      rational omega_value = mc_language_probability(m, fam::build_dn(n));
      auto omega_cyl = oracle::sigma_chain_cylinders(m, 20, [n](const lasso_word& x) {
        return oracle::in_ln_omega(n, x);
      });
      CHECK(omega_cyl.lower <= omega_value);
      CHECK(omega_value <= omega_cyl.upper);
    }
}

TEST_CASE("sigma chain values are pairwise distinct")
{
  for (unsigned n = 1; n <= 10; ++n) {
    std::set<std::string> seen;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
      seen.insert(sigma_chain_value(bits(n, mask)).str());
    CHECK(seen.size() == (1u << n));
  }
}

TEST_CASE("language probability agrees with repeated-visit iteration")
{
  for (unsigned n = 1; n <= 3; ++n)
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      auto m = build_random_mc(seed, 5, sigma, 0.6);
      for (const auto& dba : {fam::build_dn(n), fam::build_sn_dba(n), fam::build_rn_dba(n)}) {
        double exact = mc_language_probability(m, dba).raw().get_d();
        double approx = oracle::buchi_probability_by_visits(m, dba, 200);
        CHECK(std::abs(exact - approx) < 1e-6);
      }
    }
}

namespace
{
  // Same automaton over {0,1,$,#}; # leads to a fresh rejecting sink.
  automaton with_rejecting_letter(const automaton& d)
  {
    automaton out(alphabet({"0", "1", "$", "#"}), d.num_states() + 1, d.initial(),
                  acceptance_mode::buchi);
    state_t sink = static_cast<state_t>(d.num_states());
    for (state_t q = 0; q < d.num_states(); ++q) {
      out.set_final(q, d.is_final(q));
      for (symbol_t x = 0; x < 3; ++x)
        for (state_t r : d.successors(q, x))
          out.add_transition(q, x, r);
      out.add_transition(q, 3, sink);
    }
    for (symbol_t x = 0; x < 4; ++x)
      out.add_transition(sink, x, sink);
    return out;
  }
}

TEST_CASE("explicit deficit sinks do not change the value")
{
  labelled_mdp sub(sigma, 2, 0);
  sub.add_action(0, "m");
  sub.add_edge(0, 0, rational(1, 3), 1, 0);
  sub.add_edge(0, 0, rational(1, 3), 2, 1);
  sub.add_action(1, "m");
  sub.add_edge(1, 0, rational(1), 2, 1);

  labelled_mdp full(alphabet({"0", "1", "$", "#"}), 3, 0);
  full.add_action(0, "m");
  full.add_edge(0, 0, rational(1, 3), 1, 0);
  full.add_edge(0, 0, rational(1, 3), 2, 1);
  full.add_edge(0, 0, rational(1, 3), 3, 2);
  full.add_action(1, "m");
  full.add_edge(1, 0, rational(1), 2, 1);
  full.add_action(2, "m");
  full.add_edge(2, 0, rational(1), 3, 2);

  for (unsigned n = 1; n <= 2; ++n)
    for (const auto& dba : {fam::build_dn(n), fam::build_sn_dba(n), fam::build_rn_dba(n)})
      CHECK(mc_language_probability(sub, dba) ==
            mc_language_probability(full, with_rejecting_letter(dba)));
}

TEST_CASE("MDP JSON round trip and errors")
{
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto m = oracle::random_mdp(seed, 5, 3);
    CHECK(mdp_from_json(to_json(m)) == m);
  }
  auto chain = build_sigma_mc(2, {true, false});
  CHECK(mdp_from_json(to_json(chain)) == chain);

  const char* bad[] = {
      "",
      "[]",
      "{\"states\": 2}",
      R"({"states": 1, "initial": 0, "alphabet": ["0"], "transitions": [{"from": 0, "action": "m", "prob": "1/2", "label": "x", "to": 0}]})",
      R"({"states": 1, "initial": 3, "alphabet": ["0"], "transitions": []})",
      R"({"states": 1, "initial": 0, "alphabet": ["0"], "transitions": [{"from": 0, "action": "m", "prob": "0.5", "label": "0", "to": 0}]})",
      R"({"states": 1, "initial": 0, "alphabet": ["0"], "transitions": [{"from": 0, "action": "m", "prob": "3/4", "label": "0", "to": 0}, {"from": 0, "action": "m", "prob": "1/2", "label": "0", "to": 0}]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(mdp_from_json(text), parse_error);
  }
}
