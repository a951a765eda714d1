#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <omega/errors.hh>

namespace omega
{
  using state_t = std::uint32_t;
  using symbol_t = std::uint32_t;

  /// Ordered set of distinct symbol names. The declaration order is the
  /// letter order used by every shortest-then-lexicographic witness search.
  class alphabet
  {
  public:
    alphabet() = default;
    explicit alphabet(std::vector<std::string> symbols);

    /// The alphabet {0, 1, $} in that order.
    static alphabet binary_dollar();

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    const std::string& name(symbol_t s) const { return symbols_.at(s); }
    const std::vector<std::string>& names() const noexcept { return symbols_; }

    std::optional<symbol_t> find(std::string_view name) const noexcept;
    /// Throws input_error for unknown names.
    symbol_t index_of(std::string_view name) const;

    bool operator==(const alphabet&) const = default;

  private:
    std::vector<std::string> symbols_;
  };

  using finite_word = std::vector<symbol_t>;

  /// Parses a word. If every symbol name is a single character the input is
  /// read character by character ("10$"); otherwise it must be whitespace
  /// separated. Throws input_error on unknown letters.
  finite_word parse_word(const alphabet& sigma, std::string_view text);
  std::string format_word(const alphabet& sigma, const finite_word& w);

  /// The ultimately periodic word stem . loop^omega.
  struct lasso_word
  {
    finite_word stem;
    finite_word loop;

    /// Throws input_error if the loop is empty.
    lasso_word(finite_word stem, finite_word loop);

    bool operator==(const lasso_word&) const = default;
  };

  lasso_word parse_lasso(const alphabet& sigma, std::string_view stem,
                         std::string_view loop);
  std::string format_lasso(const alphabet& sigma, const lasso_word& w);

  enum class acceptance_mode
  {
    finite,
    buchi,
  };

  /// Explicit automaton (Sigma, Q, q0, delta, F) with dense state indices
  /// 0..|Q|-1. delta is total as a map into (possibly empty) successor sets;
  /// an empty set means the automaton blocks. Successor sets are kept sorted
  /// and duplicate free, so structural equality is plain member equality.
  class automaton
  {
  public:
    automaton() = default;
    automaton(alphabet sigma, std::size_t num_states, state_t initial,
              acceptance_mode mode);

    const alphabet& get_alphabet() const noexcept { return alphabet_; }
    std::size_t num_states() const noexcept { return finals_.size(); }
    std::size_t num_symbols() const noexcept { return alphabet_.size(); }
    state_t initial() const noexcept { return initial_; }
    acceptance_mode mode() const noexcept { return mode_; }

    std::span<const state_t> successors(state_t q, symbol_t a) const;
    bool is_final(state_t q) const { return finals_.at(q); }
    std::vector<state_t> final_states() const;

    state_t add_state(bool final = false);
    void add_transition(state_t from, symbol_t a, state_t to);
    void set_successors(state_t from, symbol_t a, std::vector<state_t> to);
    void clear_successors(state_t from, symbol_t a);
    void set_final(state_t q, bool final = true);
    void set_initial(state_t q);
    void set_mode(acceptance_mode m) noexcept { mode_ = m; }

    /// Copy of this automaton rooted at q, written A_q.
    automaton rooted_at(state_t q) const;
    automaton with_mode(acceptance_mode m) const;

    /// |delta(q,a)| <= 1 everywhere.
    bool is_deterministic() const;
    /// |delta(q,a)| >= 1 everywhere.
    bool is_complete() const;
    /// All states final.
    bool is_safety() const;
    /// Exactly one final state, and it is an absorbing sink.
    bool is_reachability() const;

    /// Number of (q, a, q') triples in delta.
    std::size_t transition_count() const;

    /// Deterministic successor, or nullopt when blocked.
    /// Throws contract_error when delta(q,a) has several elements.
    std::optional<state_t> step(state_t q, symbol_t a) const;

    bool operator==(const automaton&) const = default;

  private:
    std::size_t slot(state_t q, symbol_t a) const;
    void check_state(state_t q) const;

    alphabet alphabet_;
    state_t initial_ = 0;
    std::vector<std::vector<state_t>> delta_;
    std::vector<bool> finals_;
    acceptance_mode mode_ = acceptance_mode::finite;
  };

  /// q0 w0 q1 w1 ... qk; states.size() == letters.size() + 1.
  struct finite_run
  {
    std::vector<state_t> states;
    finite_word letters;

    /// True iff consecutive triples respect delta of a.
    bool respects(const automaton& a) const;
  };

}
