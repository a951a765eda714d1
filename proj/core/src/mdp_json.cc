#include <omega/mdp.hh>

#include <istream>
#include <iterator>

#include <json.hpp>

namespace omega
{
  using nlohmann::json;

  std::string to_json(const labelled_mdp& m)
  {
    const auto& sigma = m.get_alphabet();
    nlohmann::ordered_json transitions = nlohmann::ordered_json::array();
    for (state_t s = 0; s < m.num_states(); ++s)
      for (const auto& act : m.actions(s))
        for (const auto& e : act.edges)
          transitions.push_back({{"from", s},
                                 {"action", act.name},
                                 {"prob", e.probability.str()},
                                 {"label", sigma.name(e.label)},
                                 {"to", e.target}});
    nlohmann::ordered_json doc = {{"states", m.num_states()},
                {"initial", m.initial()},
                {"alphabet", sigma.names()},
                {"transitions", std::move(transitions)}};
    return doc.dump(2) + "\n";
  }

  namespace
  {
    template <typename T>
    T field(const json& obj, const char* key)
    {
      if (!obj.is_object() || !obj.contains(key))
        throw parse_error(std::string("MDP JSON: missing field '") + key + "'");
      try
        {
          return obj.at(key).get<T>();
        }
      catch (const json::exception&)
        {
          throw parse_error(std::string("MDP JSON: field '") + key + "' has the wrong type");
        }
    }
  }

  labelled_mdp mdp_from_json(std::string_view text)
  {
    json doc;
    try
      {
        doc = json::parse(text.begin(), text.end());
      }
    catch (const json::parse_error& e)
      {
        throw parse_error(std::string("MDP JSON: ") + e.what());
      }

    auto states = field<std::int64_t>(doc, "states");
    auto initial = field<std::int64_t>(doc, "initial");
    auto names = field<std::vector<std::string>>(doc, "alphabet");
    if (states < 1)
      throw parse_error("MDP JSON: 'states' must be positive");
    if (initial < 0 || initial >= states)
      throw parse_error("MDP JSON: 'initial' out of range");
    if (names.empty())
      throw parse_error("MDP JSON: empty alphabet");

    try
      {
        labelled_mdp m(alphabet(names), static_cast<std::size_t>(states),
                       static_cast<state_t>(initial));
        const auto& sigma = m.get_alphabet();
        if (!doc.contains("transitions") || !doc["transitions"].is_array())
          throw parse_error("MDP JSON: 'transitions' must be an array");
        for (const auto& t : doc["transitions"])
          {
            auto from = field<std::int64_t>(t, "from");
            auto to = field<std::int64_t>(t, "to");
            auto action = field<std::string>(t, "action");
            auto prob = rational::parse(field<std::string>(t, "prob"));
            auto label = sigma.index_of(field<std::string>(t, "label"));
            if (from < 0 || from >= states || to < 0 || to >= states)
              throw parse_error("MDP JSON: transition state out of range");
            auto s = static_cast<state_t>(from);
            const auto& acts = m.actions(s);
            std::size_t idx = acts.size();
            for (std::size_t i = 0; i < acts.size(); ++i)
              if (acts[i].name == action)
                idx = i;
            if (idx == acts.size())
              idx = m.add_action(s, action);
            m.add_edge(s, idx, prob, label, static_cast<state_t>(to));
          }
        return m;
      }
    catch (const parse_error&)
      {
        throw;
      }
    catch (const input_error& e)
      {
        throw parse_error(std::string("MDP JSON: ") + e.what());
      }
  }

  labelled_mdp read_mdp_json(std::istream& in)
  {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return mdp_from_json(text);
  }
}
