#include <doctest.h>

#include <omega/automaton_ops.hh>
#include <omega/families.hh>
#include <omega/proplab.hh>

#include "oracles.hh"

using namespace omega;
namespace fam = omega::families;

namespace
{
  // The states a run visits at each position of the lasso are consistent
  // with delta and it revisits a final state in every loop pass if required.
  bool valid_run(const automaton& a, const lasso_word& w, const std::vector<state_t>& stem,
                 const std::vector<state_t>& loop, bool need_accepting)
  {
    if (stem.size() != w.stem.size() || loop.size() != w.loop.size() || loop.empty())
      return false;
    std::vector<state_t> states = stem;
    states.insert(states.end(), loop.begin(), loop.end());
    states.push_back(loop.front());
    finite_word letters = w.stem;
    letters.insert(letters.end(), w.loop.begin(), w.loop.end());
    if (states.front() != a.initial())
      return false;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      auto succ = a.successors(states[i], letters[i]);
      if (std::find(succ.begin(), succ.end(), states[i + 1]) == succ.end())
        return false;
    }
    if (!need_accepting)
      return true;
    return std::any_of(loop.begin(), loop.end(), [&](state_t q) { return a.is_final(q); });
  }

  void check_witness(const automaton& a, const run_pair& p, bool need_accepting)
  {
    CHECK(valid_run(a, p.word, p.first_stem, p.first_loop, need_accepting));
    CHECK(valid_run(a, p.word, p.second_stem, p.second_loop, need_accepting));
    CHECK((p.first_stem != p.second_stem || p.first_loop != p.second_loop));
    if (need_accepting)
      CHECK(accepts_lasso(a, p.word));
  }
}

TEST_CASE("unambiguity")
{
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(is_unambiguous(fam::build_rn(n)).holds);
    CHECK(is_unambiguous(fam::build_dn(n)).holds);
    CHECK(is_unambiguous(fam::build_sn(n)).holds);
  }
  auto g = is_unambiguous(fam::build_gn(1));
  REQUIRE_FALSE(g.holds);
  REQUIRE(g.witness.has_value());
  check_witness(fam::build_gn(1), *g.witness, true);
}

TEST_CASE("strong unambiguity")
{
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(is_strongly_unambiguous(fam::build_sn(n)).holds);
    CHECK(is_strongly_unambiguous(fam::build_dn(n)).holds);
  }
  auto g = is_strongly_unambiguous(fam::build_gn(1));
  REQUIRE_FALSE(g.holds);
  check_witness(fam::build_gn(1), *g.witness, false);

  auto r = is_strongly_unambiguous(fam::build_rn(1));
  if (!r.holds)
    check_witness(fam::build_rn(1), *r.witness, false);
}

TEST_CASE("ambiguity checks agree with run counting on random automata")
{
  auto lassos = oracle::all_lassos(3, 2, 2);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto a = oracle::random_automaton(seed, 3, 0.3, acceptance_mode::buchi);
    auto strong = is_strongly_unambiguous(a);
    auto weak = is_unambiguous(a);
    if (strong.holds)
      CHECK(weak.holds);
    if (!weak.holds)
      check_witness(a, *weak.witness, true);
    if (!strong.holds)
      check_witness(a, *strong.witness, false);
  }
}

TEST_CASE("separation")
{
  for (unsigned n = 1; n <= 5; ++n)
    CHECK(is_separating(fam::build_sn(n)).holds);
  for (unsigned n = 1; n <= 4; ++n)
    CHECK(is_separating(fam::build_rn_prime(n)).holds);
  auto g = fam::build_gn(1);
  auto r = is_separating(g);
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.word.has_value());
  CHECK(*r.p != *r.q);
  CHECK(accepts_lasso(g.rooted_at(*r.p), *r.word));
  CHECK(accepts_lasso(g.rooted_at(*r.q), *r.word));
}

TEST_CASE("separation agrees with lasso enumeration on random automata")
{
  auto lassos = oracle::all_lassos(3, 2, 3);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto a = oracle::random_automaton(seed, 3, 0.25, acceptance_mode::buchi);
    auto r = is_separating(a);
    if (!r.holds) {
      CHECK(oracle::lasso_accepts_by_matrices(a.rooted_at(*r.p), *r.word));
      CHECK(oracle::lasso_accepts_by_matrices(a.rooted_at(*r.q), *r.word));
      continue;
    }
    for (state_t p = 0; p < a.num_states(); ++p)
      for (state_t q = p + 1; q < a.num_states(); ++q)
        for (const auto& x : lassos)
          REQUIRE_FALSE((oracle::lasso_accepts_by_matrices(a.rooted_at(p), x) &&
                         oracle::lasso_accepts_by_matrices(a.rooted_at(q), x)));
    if (r.holds)
      CHECK(is_unambiguous(a).holds);
  }
}

TEST_CASE("flavors and the closed-form value")
{
  CHECK(parse_flavor("reach") == language_flavor::reach);
  CHECK(parse_flavor("safety") == language_flavor::safety);
  CHECK_THROWS_AS(parse_flavor("liveness"), input_error);
  CHECK(sigma_chain_value({false}) == rational(1, 4));
  CHECK(sigma_chain_value({true, false, true}) == rational(1, 2) + rational(1, 8) + rational(1, 16));
}

TEST_CASE("lower bound experiment")
{
  for (unsigned n = 1; n <= 5; ++n) {
    CAPTURE(n);
    auto det = gfm_lower_bound_experiment(n, fam::build_sn_dba(n), language_flavor::safety, 2 * n + 3);
    CHECK(det.formula_matches_reference);
    CHECK(det.values_distinct);
    CHECK(det.attains_all);
    CHECK(det.distinct_paired_states == (1u << n));
    CHECK(det.instances.size() == (1u << n));
    CHECK(det.lasso_equivalent == std::optional<bool>(true));

    auto s = gfm_lower_bound_experiment(n, fam::build_sn(n), language_flavor::safety, std::nullopt);
    CHECK(s.shortfall);
    CHECK_FALSE(s.attains_all);
    auto r = gfm_lower_bound_experiment(n, fam::build_rn(n), language_flavor::reach, 2 * n + 3);
    CHECK(r.shortfall);
    CHECK(r.lasso_equivalent == std::optional<bool>(true));

    auto rd = gfm_lower_bound_experiment(n, fam::build_rn_dba(n), language_flavor::reach, std::nullopt);
    CHECK(rd.attains_all);
    CHECK(rd.distinct_paired_states == (1u << n));
  }
  auto one = gfm_lower_bound_experiment(1, fam::build_sn(1), language_flavor::safety, std::nullopt,
                                        successor_choice::per_action);
  const auto& zero = one.instances.at(0);
  CHECK(zero.sigma == std::vector<bool>{false});
  CHECK(zero.syntactic == rational(1, 8));
  CHECK(zero.semantic == rational(1, 4));

  auto wrong = gfm_lower_bound_experiment(2, fam::build_gn(2), language_flavor::safety, 6);
  CHECK(wrong.lasso_equivalent == std::optional<bool>(false));
  CHECK_THROWS_AS(gfm_lower_bound_experiment(0, fam::build_sn(1), language_flavor::safety, std::nullopt),
                  input_error);
}

TEST_CASE("GfM spot check")
{
  std::vector<std::uint64_t> seeds(50);
  for (std::uint64_t i = 0; i < seeds.size(); ++i)
    seeds[i] = i;
  auto r1 = gfm_spot_check(1, seeds);
  CHECK(r1.cases.size() == 50);
  CHECK(r1.all_equal());
  seeds.resize(20);
  CHECK(gfm_spot_check(2, seeds).all_equal());
  seeds.resize(10);
  CHECK(gfm_spot_check(3, seeds).all_equal());

  auto m = build_sigma_mc(1, {false});
  CHECK(psyn(m, fam::build_sn(1)) != psem(m, fam::build_sn_dba(1)));
}
