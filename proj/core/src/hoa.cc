#include <omega/hoa.hh>

#include <cctype>
#include <string>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace omega
{
  namespace
  {
    std::string quote(std::string_view s)
    {
      std::string out = "\"";
      for (char c : s)
        {
          if (c == '"' || c == '\\')
            out += '\\';
          out += c;
        }
      return out + "\"";
    }

    std::string letter_label(std::size_t letter, std::size_t num_aps)
    {
      std::string out = "[";
      for (std::size_t i = 0; i < num_aps; ++i)
        {
          if (i > 0)
            out += '&';
          if (i != letter)
            out += '!';
          out += std::to_string(i);
        }
      return out + "]";
    }

    /// Tokenizer for the HOA subset.
    class lexer
    {
    public:
      explicit lexer(std::string text) : text_(std::move(text)) {}

      struct token
      {
        enum kind_t { end, ident, header, string, integer, punct } kind;
        std::string text;
        std::size_t line;
      };

      token next()
      {
        skip();
        token t{token::end, {}, line_};
        if (pos_ >= text_.size())
          return t;
        char c = text_[pos_];
        for (const char* marker : {"--BODY--", "--END--"})
          if (text_.compare(pos_, std::char_traits<char>::length(marker), marker) == 0)
            {
              pos_ += std::char_traits<char>::length(marker);
              t.kind = token::ident;
              t.text = marker;
              return t;
            }
        if (c == '"')
          {
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"')
              {
                if (text_[pos_] == '\\' && pos_ + 1 < text_.size())
                  ++pos_;
                if (text_[pos_] == '\n')
                  ++line_;
                t.text += text_[pos_++];
              }
            if (pos_ >= text_.size())
              fail("unterminated string");
            ++pos_;
            t.kind = token::string;
            return t;
          }
        if (std::isdigit(static_cast<unsigned char>(c)))
          {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
              t.text += text_[pos_++];
            t.kind = token::integer;
            return t;
          }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
          {
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'
                       || text_[pos_] == '-'))
              t.text += text_[pos_++];
            if (pos_ < text_.size() && text_[pos_] == ':')
              {
                ++pos_;
                t.kind = token::header;
              }
            else
              t.kind = token::ident;
            return t;
          }
        t.kind = token::punct;
        t.text = std::string(1, c);
        ++pos_;
        return t;
      }

      token peek()
      {
        auto save_pos = pos_;
        auto save_line = line_;
        auto t = next();
        pos_ = save_pos;
        line_ = save_line;
        return t;
      }

      [[noreturn]] void fail(const std::string& what) const
      {
        throw parse_error("HOA line " + std::to_string(line_) + ": " + what);
      }

    private:
      void skip()
      {
        while (pos_ < text_.size())
          {
            char c = text_[pos_];
            if (c == '\n')
              {
                ++line_;
                ++pos_;
              }
            else if (std::isspace(static_cast<unsigned char>(c)))
              ++pos_;
            else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*')
              {
                auto close = text_.find("*/", pos_ + 2);
                if (close == std::string::npos)
                  fail("unterminated comment");
                for (auto i = pos_; i < close; ++i)
                  if (text_[i] == '\n')
                    ++line_;
                pos_ = close + 2;
              }
            else
              break;
          }
      }

      std::string text_;
      std::size_t pos_ = 0;
      std::size_t line_ = 1;
    };

    using token = lexer::token;

    std::size_t to_index(const token& t, lexer& lex)
    {
      if (t.kind != token::integer)
        lex.fail("expected an integer, got '" + t.text + "'");
      try
        {
          return std::stoul(t.text);
        }
      catch (const std::exception&)
        {
          lex.fail("integer out of range: " + t.text);
        }
    }

    void expect(lexer& lex, const char* punct)
    {
      auto t = lex.next();
      if (t.kind != token::punct || t.text != punct)
        lex.fail(std::string("expected '") + punct + "', got '" + t.text + "'");
    }

    /// Parses "i&!j&!k]" (after the opening bracket) and returns the
    /// single positive AP.
    std::size_t parse_label(lexer& lex, std::size_t num_aps)
    {
      std::optional<std::size_t> positive;
      std::vector<bool> mentioned(num_aps, false);
      while (true)
        {
          auto t = lex.next();
          bool negated = false;
          if (t.kind == token::punct && t.text == "!")
            {
              negated = true;
              t = lex.next();
            }
          auto ap = to_index(t, lex);
          if (ap >= num_aps)
            lex.fail("AP index " + t.text + " out of range");
          if (mentioned[ap])
            lex.fail("AP " + t.text + " repeated in label");
          mentioned[ap] = true;
          if (!negated)
            {
              if (positive)
                lex.fail("label makes two letters true at once");
              positive = ap;
            }
          auto sep = lex.next();
          if (sep.kind == token::punct && sep.text == "]")
            break;
          if (sep.kind != token::punct || sep.text != "&")
            lex.fail("only conjunctions of literals are supported in labels");
        }
      if (!positive)
        lex.fail("label does not denote a letter");
      for (std::size_t i = 0; i < num_aps; ++i)
        if (!mentioned[i])
          lex.fail("label must mention every AP to denote a single letter");
      return *positive;
    }
  }

  void write_hoa(std::ostream& out, const automaton& a, std::string_view name)
  {
    const auto& sigma = a.get_alphabet();
    const bool buchi = a.mode() == acceptance_mode::buchi;
    out << "HOA: v1\n";
    if (!name.empty())
      out << "name: " << quote(name) << '\n';
    out << "States: " << a.num_states() << '\n';
    out << "Start: " << a.initial() << '\n';
    out << "AP: " << sigma.size();
    for (const auto& s : sigma.names())
      out << ' ' << quote(s);
    out << '\n';
    if (buchi)
      out << "acc-name: Buchi\nAcceptance: 1 Inf(0)\n";
    else
      {
        out << "acc-name: none\nAcceptance: 0 f\nfinals:";
        for (auto q : a.final_states())
          out << ' ' << q;
        out << '\n';
      }
    out << "properties: explicit-labels state-acc\n";
    out << "--BODY--\n";
    for (state_t q = 0; q < a.num_states(); ++q)
      {
        out << "State: " << q;
        if (buchi && a.is_final(q))
          out << " {0}";
        out << '\n';
        for (symbol_t s = 0; s < a.num_symbols(); ++s)
          for (auto r : a.successors(q, s))
            out << letter_label(s, sigma.size()) << ' ' << r << '\n';
      }
    out << "--END--\n";
  }

  std::string to_hoa(const automaton& a, std::string_view name)
  {
    std::ostringstream out;
    write_hoa(out, a, name);
    return out.str();
  }

  automaton read_hoa(std::istream& in)
  {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hoa(buf.str());
  }

  automaton parse_hoa(std::string_view text)
  {
    lexer lex{std::string(text)};
    auto t = lex.next();
    if (t.kind != token::header || t.text != "HOA")
      lex.fail("expected 'HOA: v1'");
    t = lex.next();
    if (t.text != "v1")
      lex.fail("only HOA v1 is supported");

    std::optional<std::size_t> num_states, start;
    std::vector<std::string> aps;
    bool have_aps = false;
    std::optional<bool> buchi;
    std::vector<std::size_t> finite_finals;

    while (true)
      {
        t = lex.next();
        if (t.kind == token::end)
          lex.fail("missing --BODY--");
        if (t.kind == token::ident && t.text == "--BODY--")
          break;
        if (t.kind != token::header)
          lex.fail("expected a header, got '" + t.text + "'");
        const std::string h = t.text;
        if (h == "States")
          num_states = to_index(lex.next(), lex);
        else if (h == "Start")
          {
            if (start)
              lex.fail("several Start headers (alternation is not supported)");
            start = to_index(lex.next(), lex);
          }
        else if (h == "AP")
          {
            auto count = to_index(lex.next(), lex);
            for (std::size_t i = 0; i < count; ++i)
              {
                auto s = lex.next();
                if (s.kind != token::string)
                  lex.fail("expected a quoted AP name");
                aps.push_back(s.text);
              }
            have_aps = true;
          }
        else if (h == "Acceptance")
          {
            auto count = to_index(lex.next(), lex);
            if (count == 1)
              {
                auto inf = lex.next();
                if (inf.text != "Inf")
                  lex.fail("only 'Acceptance: 1 Inf(0)' or 'Acceptance: 0 f' are supported");
                expect(lex, "(");
                if (to_index(lex.next(), lex) != 0)
                  lex.fail("expected Inf(0)");
                expect(lex, ")");
                buchi = true;
              }
            else if (count == 0)
              {
                auto f = lex.next();
                if (f.text != "f")
                  lex.fail("only 'Acceptance: 0 f' is supported for zero sets");
                buchi = false;
              }
            else
              lex.fail("only Buchi or finite acceptance is supported");
          }
        else if (h == "finals")
          {
            while (lex.peek().kind == token::integer)
              finite_finals.push_back(to_index(lex.next(), lex));
          }
        else if (std::isupper(static_cast<unsigned char>(h[0])))
          lex.fail("unsupported header '" + h + ":'");
        else
          {
            // ignorable header: skip its arguments
            while (true)
              {
                auto p = lex.peek();
                if (p.kind == token::end || p.kind == token::header
                    || (p.kind == token::ident && p.text == "--BODY--"))
                  break;
                lex.next();
              }
          }
      }

    if (!num_states || *num_states == 0)
      lex.fail("missing or zero States header");
    if (!start)
      lex.fail("missing Start header");
    if (!have_aps || aps.empty())
      lex.fail("missing AP header");
    if (!buchi)
      lex.fail("missing Acceptance header");

    alphabet sigma(aps);
    if (*start >= *num_states)
      lex.fail("Start state out of range");
    automaton a(sigma, *num_states, static_cast<state_t>(*start),
                *buchi ? acceptance_mode::buchi : acceptance_mode::finite);
    for (auto q : finite_finals)
      {
        if (*buchi)
          lex.fail("finals: header is only meaningful for finite acceptance");
        if (q >= *num_states)
          lex.fail("final state out of range");
        a.set_final(static_cast<state_t>(q), true);
      }

    std::vector<bool> declared(*num_states, false);
    std::optional<state_t> current;
    while (true)
      {
        t = lex.next();
        if (t.kind == token::end)
          lex.fail("missing --END--");
        if (t.kind == token::ident && t.text == "--END--")
          break;
        if (t.kind == token::header && t.text == "State")
          {
            auto q = to_index(lex.next(), lex);
            if (q >= *num_states)
              lex.fail("state index out of range");
            if (declared[q])
              lex.fail("state " + std::to_string(q) + " declared twice");
            declared[q] = true;
            current = static_cast<state_t>(q);
            if (lex.peek().kind == token::string)
              lex.next();
            if (lex.peek().kind == token::punct && lex.peek().text == "{")
              {
                lex.next();
                auto mark = to_index(lex.next(), lex);
                if (mark != 0 || !*buchi)
                  lex.fail("unexpected acceptance mark");
                expect(lex, "}");
                a.set_final(*current, true);
              }
            continue;
          }
        if (t.kind == token::punct && t.text == "[")
          {
            if (!current)
              lex.fail("edge before any State:");
            auto letter = parse_label(lex, aps.size());
            auto target = to_index(lex.next(), lex);
            if (target >= *num_states)
              lex.fail("edge target out of range");
            a.add_transition(*current, static_cast<symbol_t>(letter), static_cast<state_t>(target));
            continue;
          }
        lex.fail("unexpected '" + t.text + "' in body");
      }
    return a;
  }

  void write_dot(std::ostream& out, const automaton& a, std::string_view name)
  {
    const auto& sigma = a.get_alphabet();
    out << "digraph " << quote(name.empty() ? "automaton" : name) << " {\n";
    out << "  rankdir=LR;\n";
    out << "  init [shape=point];\n";
    for (state_t q = 0; q < a.num_states(); ++q)
      out << "  " << q << " [shape=" << (a.is_final(q) ? "doublecircle" : "circle")
          << ", label=\"" << q << "\"];\n";
    out << "  init -> " << a.initial() << ";\n";
    for (state_t q = 0; q < a.num_states(); ++q)
      {
        std::map<state_t, std::string> merged;
        for (symbol_t s = 0; s < a.num_symbols(); ++s)
          for (auto r : a.successors(q, s))
            {
              auto& label = merged[r];
              if (!label.empty())
                label += ",";
              label += sigma.name(s);
            }
        for (const auto& [r, label] : merged)
          out << "  " << q << " -> " << r << " [label=" << quote(label) << "];\n";
      }
    out << "}\n";
  }

  std::string to_dot(const automaton& a, std::string_view name)
  {
    std::ostringstream out;
    write_dot(out, a, name);
    return out.str();
  }
}
