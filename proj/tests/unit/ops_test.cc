#include <doctest.h>

#include <random>

#include <omega/automaton_ops.hh>
#include <omega/families.hh>

#include "oracles.hh"

using namespace omega;
namespace fam = omega::families;

namespace
{
  const alphabet sigma = alphabet::binary_dollar();

  automaton random_dfa(std::uint64_t seed, std::size_t states)
  {
    std::mt19937_64 rng(seed);
    automaton d(sigma, states, 0, acceptance_mode::finite);
    for (state_t q = 0; q < states; ++q) {
      d.set_final(q, rng() % 3 == 0);
      for (symbol_t x = 0; x < 3; ++x)
        d.add_transition(q, x, static_cast<state_t>(rng() % states));
    }
    return d;
  }

  std::optional<finite_word> brute_force_difference(const automaton& a, const automaton& b,
                                                    std::size_t max_len)
  {
    for (const auto& word : oracle::all_words(3, 0, max_len))
      if (oracle::accepts_by_runs(a, word) != oracle::accepts_by_runs(b, word))
        return word;
    return std::nullopt;
  }
}

TEST_CASE("subset construction of the last-n-bits automaton has 2^n states")
{
  for (unsigned n = 1; n <= 8; ++n) {
    auto d = subset_construction(fam::build_an_prime(n));
    CHECK(d.num_states() == (1u << n));
    CHECK(d.is_deterministic());
  }
}

TEST_CASE("subset construction of a deterministic automaton is isomorphic")
{
  auto d = fam::build_dn(2).with_mode(acceptance_mode::finite);
  auto s = subset_construction(d);
  CHECK(s.num_states() == d.num_states());
  CHECK(s.transition_count() == d.transition_count());
  CHECK(dfa_equivalent(s, d).equivalent);
  auto again = subset_construction(s);
  CHECK(again == s);
}

TEST_CASE("subset construction preserves finite acceptance")
{
  auto a2 = fam::build_an(2);
  auto d = subset_construction(a2);
  for (const auto& word : oracle::all_words(3, 0, 8))
    REQUIRE(accepts_finite(d, word) == oracle::accepts_by_runs(a2, word));

  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    auto a = oracle::random_automaton(seed, 4, 0.3, acceptance_mode::finite);
    auto sub = subset_construction_with_subsets(a);
    CHECK(sub.subsets.size() == sub.dfa.num_states());
    CHECK(sub.subsets.at(0) == std::vector<state_t>{0});
    for (const auto& word : oracle::all_words(3, 0, 2 * a.num_states() + 2))
      REQUIRE(accepts_finite(sub.dfa, word) == oracle::accepts_by_runs(a, word));
  }
}

TEST_CASE("completion with a sink")
{
  auto an = fam::build_an(2);
  auto c = complete_with_sink(an);
  CHECK(c.num_states() == an.num_states() + 1);
  CHECK(c.is_complete());
  CHECK_FALSE(c.is_final(c.num_states() - 1));
  for (const auto& word : oracle::all_words(3, 0, 6))
    CHECK(accepts_finite(c, word) == accepts_finite(an, word));

  auto d = fam::build_dn(2);
  CHECK(complete_with_sink(d) == d);

  auto s = complete_with_sink(fam::build_sn(2));
  CHECK(s.is_complete());
  CHECK_FALSE(s.is_safety());
}

TEST_CASE("Hopcroft minimisation agrees with Moore refinement")
{
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto d = random_dfa(seed, 2 + seed % 7);
    auto m = hopcroft_minimize(d);
    CHECK(m.num_states() == oracle::moore_min_size(d));
    CHECK(dfa_equivalent(m, d).equivalent);
    CHECK(hopcroft_minimize(m).num_states() == m.num_states());
  }
  for (unsigned n = 1; n <= 5; ++n) {
    auto b = complete_with_sink(fam::build_bn(n));
    auto m = hopcroft_minimize(b);
    CHECK(m.num_states() >= (1u << n));
    CHECK(m.num_states() == oracle::moore_min_size(b));
  }
  CHECK(hopcroft_minimize(complete_with_sink(fam::build_bn(3))).num_states() == 10);
  CHECK_THROWS_AS(hopcroft_minimize(fam::build_an(2)), contract_error);
  CHECK_THROWS_AS(hopcroft_minimize(fam::build_bn(2)), contract_error);
}

TEST_CASE("minimal automata have no two equivalent states")
{
  auto m = hopcroft_minimize(complete_with_sink(fam::build_bn(3)));
  for (state_t p = 0; p < m.num_states(); ++p)
    for (state_t q = p + 1; q < m.num_states(); ++q)
      CHECK_FALSE(dfa_equivalent(m.rooted_at(p), m.rooted_at(q)).equivalent);
}

TEST_CASE("DFA equivalence with shortest counterexamples")
{
  for (unsigned n = 1; n <= 6; ++n) {
    auto b = complete_with_sink(fam::build_bn(n));
    auto s = complete_with_sink(subset_construction(fam::build_an(n)));
    CHECK(dfa_equivalent(b, s).equivalent);
    CHECK(dfa_equivalent(b, b).equivalent);
  }
  auto b2 = complete_with_sink(fam::build_bn(2));
  auto c2 = complete_with_sink(fam::build_cn(2));
  auto r = dfa_equivalent(b2, c2);
  REQUIRE_FALSE(r.equivalent);
  REQUIRE(r.counterexample.has_value());
  CHECK(*r.counterexample == brute_force_difference(b2, c2, 6));
  CHECK(*r.counterexample == parse_word(sigma, "00$"));

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto d1 = random_dfa(seed, 3), d2 = random_dfa(seed + 1000, 3);
    auto res = dfa_equivalent(d1, d2);
    auto brute = brute_force_difference(d1, d2, 7);
    CHECK(res.equivalent == !brute.has_value());
    if (brute)
      CHECK(*res.counterexample == *brute);
  }
  CHECK_THROWS(dfa_equivalent(fam::build_an(1), b2));
}

TEST_CASE("intersection and complement of DFAs")
{
  auto d = complete_with_sink(fam::build_bn(2));
  auto c = complete_with_sink(fam::build_cn(3));
  auto prod = intersect_dfa(d, c);
  CHECK(prod.num_states() == d.num_states() * c.num_states());
  CHECK(is_empty_finite(intersect_dfa(d, complement_dfa(d))));
  CHECK_FALSE(is_empty_finite(d));
  for (const auto& word : oracle::all_words(3, 0, 7)) {
    CHECK(accepts_finite(prod, word) == (accepts_finite(d, word) && accepts_finite(c, word)));
    CHECK(accepts_finite(complement_dfa(d), word) == !accepts_finite(d, word));
  }
}

TEST_CASE("Buchi intersection")
{
  auto lassos = oracle::all_lassos(3, 3, 3);
  auto g = fam::build_gn(1);
  auto s = fam::build_sn(1);
  auto gs = intersect_nba(g, s);
  auto gg = intersect_nba(g, g);
  for (const auto& x : lassos) {
    CHECK(accepts_lasso(gs, x) == (accepts_lasso(g, x) && accepts_lasso(s, x)));
    CHECK(accepts_lasso(gg, x) == accepts_lasso(g, x));
  }
  CHECK(buchi_equiv_on_lassos(gg, g, 6).equivalent);
  for (unsigned n = 2; n <= 5; ++n) {
    auto sn = fam::build_sn(n);
    CHECK(is_empty_buchi(intersect_nba(sn.rooted_at(1), sn.rooted_at(2))).empty);
  }
  // L_1^omega and L_1^s are disjoint, so the intersection is empty
  auto s1_complete = complete_with_sink(fam::build_sn(1)).with_mode(acceptance_mode::buchi);
  CHECK(is_empty_buchi(intersect_nba(g, s1_complete)).empty);
  for (const auto& x : oracle::all_lassos(3, 3, 3))
    CHECK_FALSE((oracle::in_ln_omega(1, x) && oracle::in_ln_s(1, x)));
  auto gr = is_empty_buchi(intersect_nba(g, fam::build_rn(1)));
  REQUIRE_FALSE(gr.empty);
  CHECK(oracle::in_ln_omega(1, *gr.witness));
  CHECK(oracle::in_ln_r(1, *gr.witness));
  CHECK_THROWS_AS(intersect_nba(fam::build_an(1), g), contract_error);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto a = oracle::random_automaton(seed, 3, 0.3, acceptance_mode::buchi);
    auto b = oracle::random_automaton(seed + 50, 3, 0.3, acceptance_mode::buchi);
    auto ab = intersect_nba(a, b);
    for (const auto& x : oracle::all_lassos(3, 2, 2))
      REQUIRE(accepts_lasso(ab, x) == (accepts_lasso(a, x) && accepts_lasso(b, x)));
  }
}

TEST_CASE("Buchi emptiness with witnesses")
{
  for (unsigned n = 1; n <= 5; ++n) {
    auto g = fam::build_gn(n);
    auto r = is_empty_buchi(g);
    REQUIRE_FALSE(r.empty);
    REQUIRE(r.witness.has_value());
    CHECK(accepts_lasso(g, *r.witness));
    CHECK(oracle::in_ln_omega(n, *r.witness));
  }
  auto none = fam::build_gn(2);
  for (state_t q = 0; q < none.num_states(); ++q)
    none.set_final(q, false);
  CHECK(is_empty_buchi(none).empty);

  auto lassos = oracle::all_lassos(3, 3, 3);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto a = oracle::random_automaton(seed, 4, 0.2, acceptance_mode::buchi);
    auto r = is_empty_buchi(a);
    if (!r.empty) {
      CHECK(oracle::lasso_accepts_by_matrices(a, *r.witness));
      auto lasso = find_accepting_lasso(a);
      REQUIRE(lasso.has_value());
      CHECK(lasso->loop_states.size() == lasso->word.loop.size());
      CHECK(a.is_final(lasso->loop_states.front()));
    } else {
      for (const auto& x : lassos)
        REQUIRE_FALSE(oracle::lasso_accepts_by_matrices(a, x));
    }
  }
}

TEST_CASE("loopify")
{
  for (unsigned n = 1; n <= 5; ++n) {
    CHECK(loopify(fam::build_an(n)) == fam::build_gn(n));
    auto d = loopify(fam::build_bn(n));
    CHECK(d == fam::build_dn(n));
    CHECK(d.is_deterministic());
    CHECK(d.is_complete());
    CHECK(d.mode() == acceptance_mode::buchi);
  }
  auto c = random_dfa(3, 5);
  for (state_t q = 0; q < c.num_states(); ++q)
    c.set_final(q, false);
  auto l = loopify(c);
  CHECK(l.with_mode(acceptance_mode::finite) == c);
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    CHECK(loopify(oracle::random_automaton(seed, 4, 0.2, acceptance_mode::finite)).is_complete());
}

TEST_CASE("bounded lasso equivalence")
{
  for (unsigned n = 1; n <= 3; ++n) {
    auto g = fam::build_gn(n), d = fam::build_dn(n);
    CHECK(default_lasso_bound(g, d) == 2 * d.num_states() + 2);
    CHECK(buchi_equiv_on_lassos(d, g, 2 * n + 2).equivalent);
    CHECK(buchi_equiv_on_lassos(g, g, 3).equivalent);
  }
  auto r = buchi_equiv_on_lassos(fam::build_gn(1), fam::build_sn(1), 3);
  REQUIRE_FALSE(r.equivalent);
  REQUIRE(r.counterexample.has_value());
  CHECK(accepts_lasso(fam::build_gn(1), *r.counterexample) !=
        accepts_lasso(fam::build_sn(1), *r.counterexample));
  CHECK_THROWS_AS(buchi_equiv_on_lassos(fam::build_gn(1), fam::build_gn(1), 0), input_error);

  // bounded check against plain enumeration on random pairs
  auto lassos = oracle::all_lassos(3, 2, 2);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto a = oracle::random_automaton(seed, 3, 0.3, acceptance_mode::buchi);
    auto b = oracle::random_automaton(seed + 77, 3, 0.3, acceptance_mode::buchi);
    bool agree = true;
    for (const auto& x : lassos)
      agree = agree && accepts_lasso(a, x) == accepts_lasso(b, x);
    CHECK(buchi_equiv_on_lassos(a, b, 2).equivalent == agree);
  }
}
