#include <omega/automaton.hh>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace omega
{
  alphabet::alphabet(std::vector<std::string> symbols)
    : symbols_(std::move(symbols))
  {
    std::set<std::string> seen;
    for (const auto& s : symbols_)
      {
        if (s.empty())
          throw input_error("alphabet symbols must be nonempty");
        if (!seen.insert(s).second)
          throw input_error("duplicate alphabet symbol '" + s + "'");
      }
  }

  alphabet alphabet::binary_dollar()
  {
    return alphabet({"0", "1", "$"});
  }

  std::optional<symbol_t> alphabet::find(std::string_view name) const noexcept
  {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i] == name)
        return static_cast<symbol_t>(i);
    return std::nullopt;
  }

  symbol_t alphabet::index_of(std::string_view name) const
  {
    if (auto s = find(name))
      return *s;
    throw input_error("letter '" + std::string(name) + "' is not in the alphabet");
  }

  finite_word parse_word(const alphabet& sigma, std::string_view text)
  {
    bool single_char = std::all_of(sigma.names().begin(), sigma.names().end(),
                                   [](const std::string& s) { return s.size() == 1; });
    finite_word w;
    if (single_char)
      {
        for (char c : text)
          {
            if (std::isspace(static_cast<unsigned char>(c)))
              continue;
            w.push_back(sigma.index_of(std::string_view(&c, 1)));
          }
        return w;
      }
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok)
      w.push_back(sigma.index_of(tok));
    return w;
  }

  std::string format_word(const alphabet& sigma, const finite_word& w)
  {
    bool single_char = std::all_of(sigma.names().begin(), sigma.names().end(),
                                   [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i)
      {
        if (!single_char && i > 0)
          out += ' ';
        out += sigma.name(w[i]);
      }
    return out;
  }

  lasso_word::lasso_word(finite_word s, finite_word l)
    : stem(std::move(s)), loop(std::move(l))
  {
    if (loop.empty())
      throw input_error("lasso loop must be nonempty");
  }

  lasso_word parse_lasso(const alphabet& sigma, std::string_view stem,
                         std::string_view loop)
  {
    return lasso_word(parse_word(sigma, stem), parse_word(sigma, loop));
  }

  std::string format_lasso(const alphabet& sigma, const lasso_word& w)
  {
    return format_word(sigma, w.stem) + "(" + format_word(sigma, w.loop) + ")^w";
  }

  automaton::automaton(alphabet sigma, std::size_t num_states, state_t initial,
                       acceptance_mode mode)
    : alphabet_(std::move(sigma)), initial_(initial),
      delta_(num_states * alphabet_.size()), finals_(num_states, false), mode_(mode)
  {
    if (num_states == 0)
      throw input_error("an automaton needs at least one state");
    check_state(initial);
  }

  void automaton::check_state(state_t q) const
  {
    if (q >= num_states())
      throw input_error("state " + std::to_string(q) + " out of range (|Q| = "
                        + std::to_string(num_states()) + ")");
  }

  std::size_t automaton::slot(state_t q, symbol_t a) const
  {
    check_state(q);
    if (a >= alphabet_.size())
      throw input_error("symbol index " + std::to_string(a) + " out of range");
    return static_cast<std::size_t>(q) * alphabet_.size() + a;
  }

  std::span<const state_t> automaton::successors(state_t q, symbol_t a) const
  {
    return delta_[slot(q, a)];
  }

  std::vector<state_t> automaton::final_states() const
  {
    std::vector<state_t> out;
    for (state_t q = 0; q < num_states(); ++q)
      if (finals_[q])
        out.push_back(q);
    return out;
  }

  state_t automaton::add_state(bool final)
  {
    auto q = static_cast<state_t>(finals_.size());
    finals_.push_back(final);
    delta_.resize(finals_.size() * alphabet_.size());
    return q;
  }

  void automaton::add_transition(state_t from, symbol_t a, state_t to)
  {
    check_state(to);
    auto& succ = delta_[slot(from, a)];
    auto it = std::lower_bound(succ.begin(), succ.end(), to);
    if (it == succ.end() || *it != to)
      succ.insert(it, to);
  }

  void automaton::set_successors(state_t from, symbol_t a, std::vector<state_t> to)
  {
    for (auto q : to)
      check_state(q);
    std::sort(to.begin(), to.end());
    to.erase(std::unique(to.begin(), to.end()), to.end());
    delta_[slot(from, a)] = std::move(to);
  }

  void automaton::clear_successors(state_t from, symbol_t a)
  {
    delta_[slot(from, a)].clear();
  }

  void automaton::set_final(state_t q, bool final)
  {
    check_state(q);
    finals_[q] = final;
  }

  void automaton::set_initial(state_t q)
  {
    check_state(q);
    initial_ = q;
  }

  automaton automaton::rooted_at(state_t q) const
  {
    automaton out = *this;
    out.set_initial(q);
    return out;
  }

  automaton automaton::with_mode(acceptance_mode m) const
  {
    automaton out = *this;
    out.mode_ = m;
    return out;
  }

  bool automaton::is_deterministic() const
  {
    return std::all_of(delta_.begin(), delta_.end(),
                       [](const auto& s) { return s.size() <= 1; });
  }

  bool automaton::is_complete() const
  {
    return std::all_of(delta_.begin(), delta_.end(),
                       [](const auto& s) { return !s.empty(); });
  }

  bool automaton::is_safety() const
  {
    return std::all_of(finals_.begin(), finals_.end(), [](bool f) { return f; });
  }

  bool automaton::is_reachability() const
  {
    auto finals = final_states();
    if (finals.size() != 1)
      return false;
    state_t f = finals.front();
    for (symbol_t a = 0; a < num_symbols(); ++a)
      {
        auto succ = successors(f, a);
        if (succ.size() != 1 || succ.front() != f)
          return false;
      }
    return true;
  }

  std::size_t automaton::transition_count() const
  {
    std::size_t total = 0;
    for (const auto& s : delta_)
      total += s.size();
    return total;
  }

  std::optional<state_t> automaton::step(state_t q, symbol_t a) const
  {
    auto succ = successors(q, a);
    if (succ.empty())
      return std::nullopt;
    if (succ.size() > 1)
      throw contract_error("step() on a nondeterministic transition");
    return succ.front();
  }

  bool finite_run::respects(const automaton& a) const
  {
    if (states.size() != letters.size() + 1)
      return false;
    for (std::size_t i = 0; i < letters.size(); ++i)
      {
        if (states[i] >= a.num_states() || letters[i] >= a.num_symbols())
          return false;
        auto succ = a.successors(states[i], letters[i]);
        if (!std::binary_search(succ.begin(), succ.end(), states[i + 1]))
          return false;
      }
    return true;
  }
}
