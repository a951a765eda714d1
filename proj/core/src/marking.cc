#include <omega/marking.hh>

#include <algorithm>
#include <deque>
#include <limits>

#include <omega/automaton_ops.hh>
#include <omega/families.hh>

namespace omega
{
  const char* to_string(mark_phase p) noexcept
  {
    switch (p)
      {
      case mark_phase::final_state:
        return "final";
      case mark_phase::binary_path:
        return "binary";
      case mark_phase::gamma_path:
        return "gamma";
      }
    return "?";
  }

  std::size_t marking::order_index(state_t q) const
  {
    auto it = std::find(order.begin(), order.end(), q);
    if (it == order.end())
      throw contract_error("order_index: state " + std::to_string(q) + " is unmarked");
    return static_cast<std::size_t>(it - order.begin());
  }

  std::vector<state_t> marking::unmarked() const
  {
    std::vector<state_t> out;
    for (state_t q = 0; q < word.size(); ++q)
      if (!word[q])
        out.push_back(q);
    return out;
  }

  namespace
  {
    constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();

    struct letters
    {
      symbol_t zero, one, dollar;
    };

    letters require_letters(const alphabet& sigma)
    {
      auto z = sigma.find("0"), o = sigma.find("1"), d = sigma.find("$");
      if (!z || !o || !d)
        throw contract_error("marking: the alphabet must contain 0, 1 and $");
      return {*z, *o, *d};
    }

    void require_complete_dba(const automaton& d)
    {
      if (d.mode() != acceptance_mode::buchi)
        throw contract_error("marking: input must be a Buchi automaton");
      if (!d.is_deterministic() || !d.is_complete())
        throw contract_error("marking: input must be deterministic and complete");
    }

    /// Breadth-first search over a product of deterministic, possibly
    /// partial, components; returns the shortest-then-least word from
    /// `start` to the first vertex satisfying `goal`. Letters are tried in
    /// the given order, which must be increasing.
    template <typename Step, typename Goal>
    std::optional<finite_word> shortest_word(std::size_t num_vertices, std::uint32_t start,
                                             const std::vector<symbol_t>& alphabet_order,
                                             Step step, Goal goal)
    {
      std::vector<std::uint32_t> parent(num_vertices, none);
      std::vector<symbol_t> via(num_vertices, 0);
      std::vector<bool> seen(num_vertices, false);
      std::deque<std::uint32_t> queue{start};
      seen[start] = true;
      auto unwind = [&](std::uint32_t from, symbol_t a) {
        finite_word w{a};
        for (auto u = from; u != start; u = parent[u])
          w.push_back(via[u]);
        std::reverse(w.begin(), w.end());
        return w;
      };
      while (!queue.empty())
        {
          auto v = queue.front();
          queue.pop_front();
          for (auto a : alphabet_order)
            {
              auto next = step(v, a);
              if (!next)
                continue;
              if (goal(*next))
                return unwind(v, a);
              if (seen[*next])
                continue;
              seen[*next] = true;
              parent[*next] = v;
              via[*next] = a;
              queue.push_back(*next);
            }
        }
      return std::nullopt;
    }

    marking phases_1_2(const automaton& d, const letters& l)
    {
      const std::size_t n = d.num_states();
      marking m;
      m.word.assign(n, std::nullopt);
      m.phase.assign(n, std::nullopt);
      for (state_t q = 0; q < n; ++q)
        if (d.is_final(q))
          {
            m.word[q] = finite_word{l.zero};
            m.phase[q] = mark_phase::final_state;
            m.order.push_back(q);
          }
      std::vector<symbol_t> binary{l.zero, l.one};
      std::sort(binary.begin(), binary.end());
      std::vector<std::optional<finite_word>> found(n);
      for (state_t q = 0; q < n; ++q)
        {
          if (m.word[q])
            continue;
          found[q] = shortest_word(
            n, q, binary,
            [&](std::uint32_t v, symbol_t a) { return d.step(v, a); },
            [&](std::uint32_t v) { return d.is_final(v); });
        }
      for (state_t q = 0; q < n; ++q)
        if (found[q])
          {
            m.word[q] = std::move(found[q]);
            m.phase[q] = mark_phase::binary_path;
            m.order.push_back(q);
          }
      return m;
    }
  }

  marking run_marking_phases_1_2(const automaton& d)
  {
    require_complete_dba(d);
    return phases_1_2(d, require_letters(d.get_alphabet()));
  }

  marking run_marking(const automaton& d, unsigned n)
  {
    require_complete_dba(d);
    auto l = require_letters(d.get_alphabet());
    auto m = phases_1_2(d, l);

    const auto gamma = families::build_gamma_dfa(n);
    if (!(gamma.get_alphabet() == d.get_alphabet()))
      throw contract_error("marking: the automaton must use the alphabet {0, 1, $}");
    const std::size_t gs = gamma.num_states();
    std::vector<symbol_t> order_of_letters(d.num_symbols());
    for (symbol_t a = 0; a < order_of_letters.size(); ++a)
      order_of_letters[a] = a;

    for (bool progress = true; progress;)
      {
        progress = false;
        for (state_t q = 0; q < d.num_states(); ++q)
          {
            if (m.word[q])
              continue;
            auto w = shortest_word(
              d.num_states() * gs, static_cast<std::uint32_t>(q * gs + gamma.initial()),
              order_of_letters,
              [&](std::uint32_t v, symbol_t a) -> std::optional<std::uint32_t> {
                auto x = d.step(v / gs, a);
                auto g = gamma.step(v % gs, a);
                if (!x || !g)
                  return std::nullopt;
                return static_cast<std::uint32_t>(*x * gs + *g);
              },
              [&](std::uint32_t v) { return gamma.is_final(v % gs) && m.is_marked(v / gs); });
            if (!w)
              continue;
            m.word[q] = std::move(w);
            m.phase[q] = mark_phase::gamma_path;
            m.order.push_back(q);
            progress = true;
          }
      }
    return m;
  }

  bool check_unmarked_closure(const automaton& d, const marking& m)
  {
    auto l = require_letters(d.get_alphabet());
    for (state_t q = 0; q < d.num_states(); ++q)
      {
        if (m.is_marked(q))
          continue;
        for (auto a : {l.zero, l.one})
          {
            auto next = d.step(q, a);
            if (next && m.is_marked(*next))
              return false;
          }
      }
    return true;
  }

  namespace
  {
    std::optional<state_t> run(const automaton& d, state_t q, const finite_word& w)
    {
      std::optional<state_t> cur = q;
      for (auto a : w)
        {
          cur = d.step(*cur, a);
          if (!cur)
            return std::nullopt;
        }
      return cur;
    }
  }

  bool check_marking_witnesses(const automaton& d, const marking& m, unsigned n)
  {
    auto l = require_letters(d.get_alphabet());
    const auto gamma = families::build_gamma_dfa(n);
    std::vector<bool> in_order(d.num_states(), false);
    for (auto q : m.order)
      {
        if (in_order[q] || !m.word[q] || !m.phase[q])
          return false;
        in_order[q] = true;
      }
    for (state_t q = 0; q < d.num_states(); ++q)
      {
        if (m.word[q].has_value() != in_order[q])
          return false;
        if (!m.word[q])
          continue;
        const auto& w = *m.word[q];
        switch (*m.phase[q])
          {
          case mark_phase::final_state:
            if (!d.is_final(q) || w != finite_word{l.zero})
              return false;
            break;
          case mark_phase::binary_path:
            {
              if (w.empty() || d.is_final(q))
                return false;
              for (auto a : w)
                if (a != l.zero && a != l.one)
                  return false;
              auto end = run(d, q, w);
              if (!end || !d.is_final(*end))
                return false;
              break;
            }
          case mark_phase::gamma_path:
            {
              if (!accepts_finite(gamma, w))
                return false;
              auto end = run(d, q, w);
              if (!end || !m.is_marked(*end) || m.order_index(*end) >= m.order_index(q))
                return false;
              break;
            }
          }
      }
    for (state_t q = 0; q < d.num_states(); ++q)
      if (d.is_final(q) && m.phase[q] != mark_phase::final_state)
        return false;
    return true;
  }

  collapsed_automaton collapse_to_p(const automaton& d, const marking& m)
  {
    auto unmarked = m.unmarked();
    if (unmarked.empty())
      throw contract_error("collapse_to_p: every state is marked, P would only be the sink");
    if (unmarked.size() == d.num_states())
      throw contract_error("collapse_to_p: no state is marked, P would have no sink");

    collapsed_automaton c;
    c.original = unmarked;
    c.sink = static_cast<state_t>(unmarked.size());
    c.image.assign(d.num_states(), c.sink);
    for (state_t i = 0; i < unmarked.size(); ++i)
      c.image[unmarked[i]] = i;
    const state_t init = m.is_marked(d.initial()) ? c.sink : c.image[d.initial()];
    c.p = automaton(d.get_alphabet(), unmarked.size() + 1, init, acceptance_mode::finite);
    c.p.set_final(c.sink);
    for (state_t i = 0; i < unmarked.size(); ++i)
      for (symbol_t a = 0; a < d.num_symbols(); ++a)
        for (auto t : d.successors(unmarked[i], a))
          c.p.add_transition(i, a, c.image[t]);
    return c;
  }

  std::optional<std::pair<state_t, finite_word>>
  find_gamma_accepting_state(const collapsed_automaton& c, unsigned n)
  {
    const auto gamma = families::build_gamma_dfa(n);
    if (!(gamma.get_alphabet() == c.p.get_alphabet()))
      throw contract_error("gamma check: P must use the alphabet {0, 1, $}");
    const std::size_t gs = gamma.num_states();
    std::vector<symbol_t> letters_in_order(gamma.num_symbols());
    for (symbol_t a = 0; a < letters_in_order.size(); ++a)
      letters_in_order[a] = a;
    for (state_t q = 0; q < c.sink; ++q)
      {
        auto w = shortest_word(
          c.p.num_states() * gs, static_cast<std::uint32_t>(q * gs + gamma.initial()),
          letters_in_order,
          [&](std::uint32_t v, symbol_t a) -> std::optional<std::uint32_t> {
            auto x = c.p.step(v / gs, a);
            auto g = gamma.step(v % gs, a);
            if (!x || !g)
              return std::nullopt;
            return static_cast<std::uint32_t>(*x * gs + *g);
          },
          [&](std::uint32_t v) { return gamma.is_final(v % gs) && c.p.is_final(v / gs); });
        if (w)
          return std::make_pair(q, std::move(*w));
      }
    return std::nullopt;
  }

  std::optional<std::pair<state_t, finite_word>>
  enumerate_gamma_words(const collapsed_automaton& c, unsigned n, std::size_t max_length)
  {
    auto l = require_letters(c.p.get_alphabet());
    for (std::size_t len = n + 1; len <= max_length; ++len)
      {
        const std::size_t body = len - 1;
        if (body >= 63)
          throw input_error("enumerate_gamma_words: length bound too large");
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << body); ++bits)
          {
            finite_word w(len);
            for (std::size_t i = 0; i < body; ++i)
              w[i] = ((bits >> (body - 1 - i)) & 1U) ? l.one : l.zero;
            w[body] = l.dollar;
            if (w[body - n] != l.zero)
              continue;
            for (state_t q = 0; q < c.p.num_states(); ++q)
              if (accepts_finite(c.p.rooted_at(q), w))
                return std::make_pair(q, w);
          }
      }
    return std::nullopt;
  }

  std::optional<state_t> find_universal_state(const collapsed_automaton& c, unsigned n)
  {
    const auto bn = complete_with_sink(families::build_bn(n));
    if (!(bn.get_alphabet() == c.p.get_alphabet()))
      throw contract_error("find_universal_state: P must use the alphabet {0, 1, $}");
    for (state_t q = 0; q < c.sink; ++q)
      {
        auto pq = complete_with_sink(c.p.rooted_at(q));
        if (is_empty_finite(intersect_dfa(bn, complement_dfa(pq))))
          return q;
      }
    return std::nullopt;
  }

  bool collapse_report::all_pass() const
  {
    return closure_after_phase2 && closure_final && witnesses_valid && has_unmarked
           && gamma_structural && gamma_enumerated && universal_state_found
           && intersection_is_ln && p_meets_bound && dn_meets_bound;
  }

  collapse_report run_collapse_report(unsigned n)
  {
    return run_collapse_report(families::build_dn(n), n);
  }

  collapse_report run_collapse_report(const automaton& d, unsigned n)
  {
    if (n < 1 || n > 20)
      throw input_error("collapse report: n must lie in 1..20");
    collapse_report r;
    r.n = n;
    r.dn_states = d.num_states();
    r.bound = rational(std::int64_t{1} << n, std::int64_t{n} + 2);

    const auto bn = complete_with_sink(families::build_bn(n));
    const auto min_bn = hopcroft_minimize(bn);
    r.min_dfa_states = min_bn.num_states();

    r.closure_after_phase2 = check_unmarked_closure(d, run_marking_phases_1_2(d));
    const auto m = run_marking(d, n);
    r.closure_final = check_unmarked_closure(d, m);
    r.witnesses_valid = check_marking_witnesses(d, m, n);
    r.marked = m.order.size();
    r.unmarked = d.num_states() - r.marked;
    r.has_unmarked = r.unmarked > 0;
    r.dn_meets_bound = rational(static_cast<std::int64_t>(r.dn_states)) >= r.bound;
    if (!r.has_unmarked || r.marked == 0)
      return r;

    const auto c = collapse_to_p(d, m);
    r.p_states = c.p.num_states();
    r.p_meets_bound = rational(static_cast<std::int64_t>(r.p_states)) >= r.bound;
    r.gamma_structural = !find_gamma_accepting_state(c, n).has_value();
    r.gamma_enumerated = !enumerate_gamma_words(c, n, n + 4).has_value();
    r.universal_state = find_universal_state(c, n);
    r.universal_state_found = r.universal_state.has_value();
    if (r.universal_state)
      {
        auto pq = complete_with_sink(c.p.rooted_at(*r.universal_state));
        auto cn = complete_with_sink(families::build_cn(n));
        auto lhs = hopcroft_minimize(intersect_dfa(pq, cn));
        r.intersection_is_ln = dfa_equivalent(lhs, min_bn).equivalent;
      }
    return r;
  }
}
