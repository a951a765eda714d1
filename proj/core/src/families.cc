#include <omega/families.hh>

#include <algorithm>
#include <cctype>

#include <omega/automaton_ops.hh>

namespace omega::families
{
  namespace
  {
    constexpr symbol_t zero = 0, one = 1, dollar = 2;

    void require_n(unsigned n)
    {
      if (n < 1)
        throw input_error("family parameter n must be at least 1");
    }

    /// q0 --0,1--> q0, q0 --1--> q1, q_i --0,1--> q_{i+1} (1 <= i < n):
    /// the chain shared by A_n, A_n', G_n, R_n, S_n and R_n'.
    automaton chain(unsigned n, std::size_t extra_states, acceptance_mode mode)
    {
      automaton a(alphabet::binary_dollar(), n + 1 + extra_states, 0, mode);
      a.add_transition(0, zero, 0);
      a.add_transition(0, one, 0);
      a.add_transition(0, one, 1);
      for (state_t i = 1; i < n; ++i)
        {
          a.add_transition(i, zero, i + 1);
          a.add_transition(i, one, i + 1);
        }
      return a;
    }
  }

  automaton build_an(unsigned n)
  {
    require_n(n);
    auto a = chain(n, 1, acceptance_mode::finite);
    const state_t f = n + 1;
    a.add_transition(n, dollar, f);
    a.set_final(f);
    return a;
  }

  automaton build_an_prime(unsigned n)
  {
    require_n(n);
    auto a = chain(n, 0, acceptance_mode::finite);
    a.set_final(n);
    return a;
  }

  automaton build_gn(unsigned n)
  {
    require_n(n);
    auto g = chain(n, 1, acceptance_mode::buchi);
    const state_t f = n + 1;
    g.add_transition(n, dollar, f);
    g.add_transition(n, zero, 0);
    g.add_transition(n, one, 0);
    g.add_transition(f, zero, 0);
    g.add_transition(f, one, 0);
    for (state_t q = 0; q <= f; ++q)
      if (q != n)
        g.add_transition(q, dollar, 0);
    g.set_final(f);
    return g;
  }

  automaton build_bn(unsigned n)
  {
    require_n(n);
    auto b = subset_construction(build_an_prime(n));
    const state_t f = b.add_state(false);
    for (state_t q = 0; q < f; ++q)
      if (b.is_final(q))
        {
          b.add_transition(q, dollar, f);
          b.set_final(q, false);
        }
    b.set_final(f, true);
    return b;
  }

  automaton build_dn(unsigned n)
  {
    return loopify(build_bn(n));
  }

  automaton build_rn(unsigned n)
  {
    require_n(n);
    auto r = chain(n, 1, acceptance_mode::buchi);
    const state_t f = n + 1;
    r.add_transition(n, dollar, f);
    for (symbol_t s : {zero, one, dollar})
      r.add_transition(f, s, f);
    r.set_final(f);
    return r;
  }

  automaton build_sn(unsigned n)
  {
    require_n(n);
    auto s = chain(n, 0, acceptance_mode::buchi);
    s.add_transition(n, dollar, n);
    for (state_t q = 0; q <= n; ++q)
      s.set_final(q);
    return s;
  }

  automaton build_rn_prime(unsigned n)
  {
    require_n(n);
    auto r = chain(n, 1, acceptance_mode::buchi);
    const state_t f = n + 1;
    for (state_t q = 0; q <= f; ++q)
      r.add_transition(n, dollar, q);
    r.add_transition(f, zero, f);
    r.add_transition(f, one, f);
    r.add_transition(f, zero, 1);
    r.set_final(n);
    r.set_final(f);
    return r;
  }

  automaton build_cn(unsigned n)
  {
    require_n(n);
    automaton c(alphabet::binary_dollar(), n + 2, 0, acceptance_mode::finite);
    for (state_t i = 0; i < n; ++i)
      {
        c.add_transition(i, zero, i + 1);
        c.add_transition(i, one, i + 1);
      }
    c.add_transition(n, zero, n);
    c.add_transition(n, one, n);
    c.add_transition(n, dollar, n + 1);
    c.set_final(n + 1);
    return c;
  }

  automaton build_gamma_dfa(unsigned n)
  {
    require_n(n);
    // g0 --0,1--> g0, g0 --0--> g1, g_i --0,1--> g_{i+1}, g_n --$--> acc
    automaton nfa(alphabet::binary_dollar(), n + 2, 0, acceptance_mode::finite);
    nfa.add_transition(0, zero, 0);
    nfa.add_transition(0, one, 0);
    nfa.add_transition(0, zero, 1);
    for (state_t i = 1; i < n; ++i)
      {
        nfa.add_transition(i, zero, i + 1);
        nfa.add_transition(i, one, i + 1);
      }
    nfa.add_transition(n, dollar, n + 1);
    nfa.set_final(n + 1);
    return subset_construction(nfa);
  }

  automaton powerset_dba(const automaton& a)
  {
    if (a.mode() != acceptance_mode::buchi)
      throw contract_error("powerset_dba: expects a Buchi automaton");
    if (!a.is_safety() && !a.is_reachability())
      throw contract_error("powerset_dba: only safety and reachability automata are supported");
    auto d = complete_with_sink(subset_construction(a.with_mode(acceptance_mode::finite)));
    return d.with_mode(acceptance_mode::buchi);
  }

  automaton build_sn_dba(unsigned n)
  {
    return powerset_dba(build_sn(n));
  }

  automaton build_rn_dba(unsigned n)
  {
    return powerset_dba(build_rn(n));
  }

  const std::vector<std::string>& family_names()
  {
    static const std::vector<std::string> names{"An", "AnPrime", "Gn", "Bn", "Dn", "Rn",
                                                "Sn", "RnPrime", "Cn", "Gamma", "SnDba", "RnDba"};
    return names;
  }

  automaton build_family(std::string_view name, unsigned n)
  {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (key == "an")
      return build_an(n);
    if (key == "anprime")
      return build_an_prime(n);
    if (key == "gn")
      return build_gn(n);
    if (key == "bn")
      return build_bn(n);
    if (key == "dn")
      return build_dn(n);
    if (key == "rn")
      return build_rn(n);
    if (key == "sn")
      return build_sn(n);
    if (key == "rnprime")
      return build_rn_prime(n);
    if (key == "cn")
      return build_cn(n);
    if (key == "gamma")
      return build_gamma_dfa(n);
    if (key == "sndba")
      return build_sn_dba(n);
    if (key == "rndba")
      return build_rn_dba(n);
    throw input_error("unknown family '" + std::string(name) + "'");
  }
}
