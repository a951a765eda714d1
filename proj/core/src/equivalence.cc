#include <omega/automaton_ops.hh>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>

namespace omega
{
  namespace
  {
    using word64 = std::uint64_t;

    /// Fixed-width bitset over the states of one automaton.
    struct state_bits
    {
      std::size_t words;
      explicit state_bits(std::size_t n) : words((n + 63) / 64) {}

      std::vector<word64> empty() const { return std::vector<word64>(words, 0); }
      static void set(std::vector<word64>& b, std::size_t i) { b[i / 64] |= word64{1} << (i % 64); }
      static bool test(const std::vector<word64>& b, std::size_t i)
      {
        return (b[i / 64] >> (i % 64)) & 1;
      }
      static bool meets(const word64* a, const word64* b, std::size_t words)
      {
        for (std::size_t i = 0; i < words; ++i)
          if (a[i] & b[i])
            return true;
        return false;
      }
    };

    /// Per-automaton tables used by the lasso oracle.
    struct tables
    {
      const automaton& a;
      state_bits bits;
      std::size_t k;
      std::vector<word64> finals;
      // post[s][q] : delta(q, s) as a bitset
      std::vector<std::vector<std::vector<word64>>> post;

      explicit tables(const automaton& aut)
        : a(aut), bits(aut.num_states()), k(aut.num_states()), finals(bits.empty())
      {
        for (state_t q = 0; q < k; ++q)
          if (a.is_final(q))
            state_bits::set(finals, q);
        post.assign(a.num_symbols(), std::vector<std::vector<word64>>(k, bits.empty()));
        for (symbol_t s = 0; s < a.num_symbols(); ++s)
          for (state_t q = 0; q < k; ++q)
            for (auto r : a.successors(q, s))
              state_bits::set(post[s][q], r);
      }

      void image(const word64* from, symbol_t s, word64* to) const
      {
        std::fill(to, to + bits.words, 0);
        for (std::size_t q = 0; q < k; ++q)
          if ((from[q / 64] >> (q % 64)) & 1)
            for (std::size_t i = 0; i < bits.words; ++i)
              to[i] |= post[s][q][i];
      }

      /// Profile layout: R[0..k) then F[0..k), each `bits.words` wide.
      std::size_t profile_size() const { return 2 * k * bits.words; }

      void letter_profile(symbol_t s, word64* out) const
      {
        const std::size_t w = bits.words;
        for (std::size_t q = 0; q < k; ++q)
          for (std::size_t i = 0; i < w; ++i)
            {
              out[q * w + i] = post[s][q][i];
              out[(k + q) * w + i] = post[s][q][i] & finals[i];
            }
      }

      void extend(const word64* in, symbol_t s, word64* out) const
      {
        const std::size_t w = bits.words;
        std::vector<word64> img(w);
        for (std::size_t q = 0; q < k; ++q)
          {
            image(in + q * w, s, out + q * w);
            image(in + (k + q) * w, s, img.data());
            for (std::size_t i = 0; i < w; ++i)
              out[(k + q) * w + i] = img[i] | (out[q * w + i] & finals[i]);
          }
      }

      /// States from which loop^omega (summarised by the profile) is accepted.
      std::vector<word64> accepting_set(const word64* profile) const
      {
        const std::size_t w = bits.words;
        // reflexive-transitive closure of the block graph
        std::vector<std::vector<word64>> closure(k, bits.empty());
        for (std::size_t q = 0; q < k; ++q)
          {
            std::copy(profile + q * w, profile + (q + 1) * w, closure[q].begin());
            state_bits::set(closure[q], q);
          }
        for (std::size_t m = 0; m < k; ++m)
          for (std::size_t q = 0; q < k; ++q)
            if (state_bits::test(closure[q], m))
              for (std::size_t i = 0; i < w; ++i)
                closure[q][i] |= closure[m][i];

        std::vector<word64> on_cycle = bits.empty();
        for (std::size_t p = 0; p < k; ++p)
          {
            const word64* flagged = profile + (k + p) * w;
            for (std::size_t p2 = 0; p2 < k && !state_bits::test(on_cycle, p); ++p2)
              if ((flagged[p2 / 64] >> (p2 % 64)) & 1 && state_bits::test(closure[p2], p))
                state_bits::set(on_cycle, p);
          }
        std::vector<word64> acc = bits.empty();
        for (std::size_t q = 0; q < k; ++q)
          if (state_bits::meets(closure[q].data(), on_cycle.data(), w))
            state_bits::set(acc, q);
        return acc;
      }
    };
  }

  std::size_t default_lasso_bound(const automaton& a1, const automaton& a2)
  {
    return 2 * std::max(a1.num_states(), a2.num_states()) + 2;
  }

  lasso_equivalence_result buchi_equiv_on_lassos(const automaton& a1,
                                                 const automaton& a2,
                                                 std::size_t bound)
  {
    if (bound < 1)
      throw input_error("buchi_equiv_on_lassos: bound must be at least 1");
    if (a1.mode() != acceptance_mode::buchi || a2.mode() != acceptance_mode::buchi)
      throw contract_error("buchi_equiv_on_lassos: both automata must be in Buchi mode");
    if (!(a1.get_alphabet() == a2.get_alphabet()))
      throw input_error("buchi_equiv_on_lassos: alphabets differ");

    const tables t1(a1), t2(a2);
    const std::size_t sigma = a1.num_symbols();
    const std::size_t w1 = t1.bits.words, w2 = t2.bits.words;

    // Stems: reachable (S1, S2) subset pairs within `bound` letters, each
    // with its shortest, lexicographically least representative.
    std::map<std::vector<word64>, finite_word> stem_pairs;
    std::vector<std::vector<word64>> stem_order;
    {
      std::vector<word64> start(w1 + w2, 0);
      start[a1.initial() / 64] |= word64{1} << (a1.initial() % 64);
      start[w1 + a2.initial() / 64] |= word64{1} << (a2.initial() % 64);
      stem_pairs.emplace(start, finite_word{});
      stem_order.push_back(start);
      std::deque<std::vector<word64>> frontier{start};
      for (std::size_t depth = 0; depth < bound && !frontier.empty(); ++depth)
        {
          std::deque<std::vector<word64>> next;
          for (const auto& cur : frontier)
            for (symbol_t s = 0; s < sigma; ++s)
              {
                std::vector<word64> succ(w1 + w2);
                t1.image(cur.data(), s, succ.data());
                t2.image(cur.data() + w1, s, succ.data() + w1);
                if (stem_pairs.count(succ))
                  continue;
                finite_word rep = stem_pairs.at(cur);
                rep.push_back(s);
                stem_pairs.emplace(succ, std::move(rep));
                stem_order.push_back(succ);
                next.push_back(std::move(succ));
              }
          frontier = std::move(next);
        }
    }

    // Loops: transition profiles of words of length 1..bound.
    const std::size_t p1 = t1.profile_size(), p2 = t2.profile_size();
    std::map<std::vector<word64>, finite_word> profiles;
    std::set<std::vector<word64>> verdicts;
    lasso_equivalence_result result;
    result.stem_pairs = stem_order.size();

    auto check = [&](const std::vector<word64>& profile, const finite_word& loop) {
      auto acc1 = t1.accepting_set(profile.data());
      auto acc2 = t2.accepting_set(profile.data() + p1);
      std::vector<word64> verdict(acc1);
      verdict.insert(verdict.end(), acc2.begin(), acc2.end());
      if (!verdicts.insert(std::move(verdict)).second)
        return true;
      for (const auto& pair : stem_order)
        {
          bool in1 = state_bits::meets(pair.data(), acc1.data(), w1);
          bool in2 = state_bits::meets(pair.data() + w1, acc2.data(), w2);
          if (in1 != in2)
            {
              result.equivalent = false;
              result.counterexample = lasso_word(stem_pairs.at(pair), loop);
              return false;
            }
        }
      return true;
    };

    std::deque<std::vector<word64>> frontier;
    for (symbol_t s = 0; s < sigma; ++s)
      {
        std::vector<word64> prof(p1 + p2);
        t1.letter_profile(s, prof.data());
        t2.letter_profile(s, prof.data() + p1);
        if (profiles.emplace(prof, finite_word{s}).second)
          frontier.push_back(std::move(prof));
      }
    for (std::size_t length = 1; !frontier.empty(); ++length)
      {
        for (const auto& prof : frontier)
          if (!check(prof, profiles.at(prof)))
            {
              result.loop_profiles = profiles.size();
              return result;
            }
        if (length == bound)
          break;
        std::deque<std::vector<word64>> next;
        for (const auto& prof : frontier)
          for (symbol_t s = 0; s < sigma; ++s)
            {
              std::vector<word64> ext(p1 + p2);
              t1.extend(prof.data(), s, ext.data());
              t2.extend(prof.data() + p1, s, ext.data() + p1);
              if (profiles.count(ext))
                continue;
              finite_word rep = profiles.at(prof);
              rep.push_back(s);
              profiles.emplace(ext, std::move(rep));
              next.push_back(std::move(ext));
            }
        frontier = std::move(next);
      }
    result.loop_profiles = profiles.size();
    return result;
  }
}
