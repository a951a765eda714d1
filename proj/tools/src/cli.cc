#include "cli.hh"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <omega/automaton_ops.hh>
#include <omega/families.hh>
#include <omega/hoa.hh>
#include <omega/mdp.hh>
#include <omega/version.hh>

#include "reproduce.hh"

namespace omega::tools
{
  namespace
  {
    std::string read_file(const std::string& path)
    {
      std::ifstream in(path, std::ios::binary);
      if (!in)
        throw input_error("cannot open '" + path + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    void write_output(const std::string& path, const std::string& text, std::ostream& out)
    {
      if (path.empty() || path == "-")
        {
          out << text;
          return;
        }
      std::ofstream f(path, std::ios::binary);
      if (!f)
        throw input_error("cannot write '" + path + "'");
      f << text;
    }

    automaton load_automaton(const std::string& path)
    {
      try
        {
          return parse_hoa(read_file(path));
        }
      catch (const parse_error& e)
        {
          throw parse_error(path + ": " + e.what());
        }
    }

    labelled_mdp load_mdp(const std::string& path)
    {
      try
        {
          return mdp_from_json(read_file(path));
        }
      catch (const parse_error& e)
        {
          throw parse_error(path + ": " + e.what());
        }
    }

    std::string lower(std::string s)
    {
      std::transform(s.begin(), s.end(), s.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      return s;
    }

    std::vector<bool> parse_sigma(const std::string& text, unsigned n)
    {
      if (text.size() != n)
        throw input_error("--sigma must have exactly n = " + std::to_string(n) + " bits");
      std::vector<bool> sigma;
      for (char c : text)
        {
          if (c != '0' && c != '1')
            throw input_error("--sigma must consist of the characters 0 and 1");
          sigma.push_back(c == '1');
        }
      return sigma;
    }

    std::uint64_t parse_u64(const std::string& text)
    {
      if (text.empty() || text.size() > 19
          || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw input_error("'" + text + "' is not a non-negative integer");
      return std::stoull(text);
    }

    /// "a..b" (inclusive) or a comma separated list.
    std::vector<std::uint64_t> parse_seeds(const std::string& text)
    {
      std::vector<std::uint64_t> seeds;
      auto dots = text.find("..");
      if (dots != std::string::npos)
        {
          auto lo = parse_u64(text.substr(0, dots));
          auto hi = parse_u64(text.substr(dots + 2));
          if (hi < lo || hi - lo > 100000)
            throw input_error("bad seed range '" + text + "'");
          for (auto s = lo; s <= hi; ++s)
            seeds.push_back(s);
          return seeds;
        }
      std::stringstream in(text);
      std::string item;
      while (std::getline(in, item, ','))
        seeds.push_back(parse_u64(item));
      if (seeds.empty())
        throw input_error("no seeds given");
      return seeds;
    }

    struct gen_options
    {
      std::string family;
      unsigned n = 0;
      bool dot = false;
      bool hoa = false;
      std::string sigma;
      std::uint64_t seed = 0;
      std::size_t states = 5;
      double density = spot_check_density;
      std::string out;
    };

    int run_gen(const gen_options& o, std::ostream& out)
    {
      const auto family = lower(o.family);
      if (family == "sigmamc")
        {
          write_output(o.out, to_json(build_sigma_mc(o.n, parse_sigma(o.sigma, o.n))), out);
          return 0;
        }
      if (family == "randommc")
        {
          write_output(o.out, to_json(build_random_mc(o.seed, o.states, alphabet::binary_dollar(),
                                                      o.density)),
                       out);
          return 0;
        }
      if (o.dot && o.hoa)
        throw input_error("--dot and --hoa are mutually exclusive");
      auto a = families::build_family(o.family, o.n);
      const std::string name = o.family + " n=" + std::to_string(o.n);
      write_output(o.out, o.dot ? to_dot(a, name) : to_hoa(a, name), out);
      return 0;
    }

    struct analyze_options
    {
      std::string mdp, automaton, dba, mode, choice = "per-action";
      bool quiet = false;
      std::optional<std::size_t> lasso_bound;
    };

    int run_analyze(const analyze_options& o, std::ostream& out)
    {
      const auto m = load_mdp(o.mdp);
      ordered_json report = {{"mode", o.mode}};
      rational value;
      bool language_ok = true;
      if (o.mode == "psyn")
        {
          if (o.automaton.empty())
            throw input_error("--mode psyn needs --automaton");
          const auto a = load_automaton(o.automaton);
          const auto choice = parse_successor_choice(o.choice);
          const auto an = analyze_psyn(m, a, choice);
          value = an.value;
          report["successorChoice"] = to_string(choice);
          report.update(psyn_json(an));
        }
      else if (o.mode == "psem")
        {
          if (o.dba.empty())
            throw input_error("--mode psem needs --dba (a deterministic complete Buchi automaton)");
          const auto d = load_automaton(o.dba);
          value = psem(m, d);
          report["value"] = value.str();
          if (!o.automaton.empty())
            {
              const auto a = load_automaton(o.automaton);
              const auto bound = o.lasso_bound.value_or(default_lasso_bound(a, d));
              const auto eq = buchi_equiv_on_lassos(a, d, bound);
              ordered_json check = {{"bound", bound}, {"equivalentOnLassos", eq.equivalent}};
              check["counterexample"] = eq.counterexample
                                          ? ordered_json(format_lasso(a.get_alphabet(), *eq.counterexample))
                                          : ordered_json(nullptr);
              check["assumption"] = "the deterministic automaton is taken to recognise the "
                                    "same language; checked on bounded lasso words only";
              report["languageCheck"] = std::move(check);
              language_ok = eq.equivalent;
            }
        }
      else
        throw input_error("--mode must be psyn or psem");

      if (o.quiet)
        out << value.str() << "\n";
      else
        out << report.dump(2) << "\n";
      return language_ok ? 0 : 1;
    }

    int run_mark(unsigned n, const std::string& dba_path, std::ostream& out)
    {
      const auto d = dba_path.empty() ? families::build_dn(n) : load_automaton(dba_path);
      const auto m = run_marking(d, n);
      const auto rep = run_collapse_report(d, n);
      ordered_json report = {{"n", n}, {"dbaStates", d.num_states()}};
      report.update(marking_json(d, m));
      auto summary = collapse_json(rep);
      report["pSize"] = summary["pSize"];
      report["bound"] = summary["bound"];
      report["universalState"] = summary["universalState"];
      report["boundsCheck"] = summary["boundsCheck"];
      report["pass"] = rep.all_pass();
      out << report.dump(2) << "\n";
      return rep.all_pass() ? 0 : 1;
    }

    int run_props(const std::string& path, const std::string& check, std::ostream& out)
    {
      const auto a = load_automaton(path);
      ordered_json report = {{"check", check}, {"states", a.num_states()}};
      ordered_json result;
      if (check == "unambiguous")
        result = ambiguity_json(a, is_unambiguous(a));
      else if (check == "strongly-unambiguous")
        result = ambiguity_json(a, is_strongly_unambiguous(a));
      else if (check == "separating")
        result = separation_json(a, is_separating(a));
      else
        throw input_error("--check must be unambiguous, strongly-unambiguous or separating");
      const bool holds = result["holds"].get<bool>();
      report.update(result);
      out << report.dump(2) << "\n";
      return holds ? 0 : 1;
    }

    struct lower_bound_options
    {
      unsigned n = 0;
      std::string candidate, flavor = "safety", choice = "per-letter";
      std::optional<std::size_t> lasso_bound;
      bool no_lasso_check = false;
    };

    int run_lower_bound(const lower_bound_options& o, std::ostream& out)
    {
      const auto flavor = parse_flavor(o.flavor);
      const auto candidate =
        o.candidate.empty()
          ? (flavor == language_flavor::safety ? families::build_sn_dba(o.n) : families::build_rn_dba(o.n))
          : load_automaton(o.candidate);
      std::optional<std::size_t> bound;
      if (!o.no_lasso_check)
        bound = o.lasso_bound.value_or(2 * std::size_t{o.n} + 3);
      const auto rep = gfm_lower_bound_experiment(o.n, candidate, flavor, bound,
                                                  parse_successor_choice(o.choice));
      ordered_json report = {{"experiment", "lower-bound"}, {"version", omega::version}};
      report.update(lower_bound_json(rep));
      out << report.dump(2) << "\n";
      return rep.lasso_equivalent.value_or(true) ? 0 : 1;
    }

    int run_spot_check(unsigned n, const std::string& seeds_text, const std::string& choice,
                       std::ostream& out)
    {
      std::vector<std::uint64_t> seeds;
      if (seeds_text.empty())
        {
          auto base = seed_base_from_env(0);
          for (std::uint64_t i = 0; i < 20; ++i)
            seeds.push_back(base + i);
        }
      else
        seeds = parse_seeds(seeds_text);
      const auto rep = gfm_spot_check(n, seeds, parse_successor_choice(choice));
      ordered_json report = {{"experiment", "gfm-spotcheck"},
                             {"version", omega::version},
                             {"chainStates", spot_check_chain_states},
                             {"density", "3/5"}};
      report.update(spot_check_json(rep));
      out << report.dump(2) << "\n";
      return rep.all_equal() ? 0 : 1;
    }

    int run_reproduce(std::optional<unsigned> max_n, const std::string& path, bool with_timing,
                      std::ostream& out)
    {
      suite_options opt;
      opt.max_n = max_n;
      opt.seed_base = seed_base_from_env(0);
      const auto results = run_all(opt);
      out << suite_summary(results);
      const auto doc = suite_json(results, opt, with_timing);
      if (!path.empty())
        write_output(path, doc.dump(2) + "\n", out);
      return doc["pass"].get<bool>() ? 0 : 1;
    }
  }

  int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
  {
    CLI::App app{"Automata succinctness experiments: families, products with MDPs, "
                 "marking and property checks"};
    app.set_version_flag("--version", std::string(omega::version));
    app.require_subcommand(1);

    gen_options gen;
    auto* gen_cmd = app.add_subcommand("gen", "Emit an automaton family (HOA or DOT) or a chain (JSON)");
    gen_cmd->add_option("family", gen.family, "An, AnPrime, Gn, Bn, Dn, Rn, Sn, RnPrime, Cn, Gamma, "
                                              "SnDba, RnDba, SigmaMc, RandomMc")
      ->required();
    gen_cmd->add_option("--n", gen.n, "Family parameter");
    gen_cmd->add_flag("--hoa", gen.hoa, "HOA output (default)");
    gen_cmd->add_flag("--dot", gen.dot, "DOT output");
    gen_cmd->add_option("--sigma", gen.sigma, "Bits sigma_1..sigma_n for SigmaMc");
    gen_cmd->add_option("--seed", gen.seed, "Seed for RandomMc");
    gen_cmd->add_option("--states", gen.states, "State count for RandomMc");
    gen_cmd->add_option("--density", gen.density, "Edge density in (0, 1] for RandomMc");
    gen_cmd->add_option("-o,--out", gen.out, "Output file (default: stdout)");

    analyze_options an;
    auto* an_cmd = app.add_subcommand("analyze", "Syntactic or semantic satisfaction probability");
    an_cmd->add_option("--mdp", an.mdp, "MDP or Markov chain (JSON)")->required();
    an_cmd->add_option("--automaton", an.automaton, "Buchi automaton (HOA)");
    an_cmd->add_option("--dba", an.dba, "Deterministic complete Buchi automaton (HOA) for psem");
    an_cmd->add_option("--mode", an.mode, "psyn or psem")->required();
    an_cmd->add_option("--choice", an.choice, "per-action (default) or per-letter");
    an_cmd->add_option("--lasso-bound", an.lasso_bound, "Bound for comparing --automaton with --dba");
    an_cmd->add_flag("--quiet", an.quiet, "Print only the value");

    unsigned mark_n = 0;
    std::string mark_dba;
    auto* mark_cmd = app.add_subcommand("mark", "Run the marking procedure and the collapse checks");
    mark_cmd->add_option("--n", mark_n, "Parameter n")->required();
    mark_cmd->add_option("--dba", mark_dba, "Complete DBA for L_n^omega (default: D_n)");

    std::string props_path, props_check;
    auto* props_cmd = app.add_subcommand("props", "Decide ambiguity or separation properties");
    props_cmd->add_option("--automaton", props_path, "Buchi automaton (HOA)")->required();
    props_cmd->add_option("--check", props_check, "unambiguous, strongly-unambiguous or separating")
      ->required();

    auto* exp_cmd = app.add_subcommand("experiment", "Run an experiment");
    exp_cmd->require_subcommand(1);
    lower_bound_options lb;
    auto* lb_cmd = exp_cmd->add_subcommand("thm10", "Sweep the 2^n sigma chains against a candidate");
    lb_cmd->alias("lower-bound");
    lb_cmd->add_option("--n", lb.n, "Parameter n")->required();
    lb_cmd->add_option("--candidate", lb.candidate, "Candidate automaton (HOA); default: deterministic reference");
    lb_cmd->add_option("--flavor", lb.flavor, "reach or safety");
    lb_cmd->add_option("--lasso-bound", lb.lasso_bound, "Lasso bound for the language check (default 2n+3)");
    lb_cmd->add_flag("--no-lasso-check", lb.no_lasso_check, "Skip the bounded language check");
    lb_cmd->add_option("--choice", lb.choice, "per-letter (default) or per-action");

    unsigned spot_n = 1;
    std::string spot_seeds, spot_choice = "per-letter";
    auto* spot_cmd = exp_cmd->add_subcommand("gfm-spotcheck", "Compare psyn(G_n) with psem(D_n) on random chains");
    spot_cmd->add_option("--n", spot_n, "Parameter n")->required();
    spot_cmd->add_option("--seeds", spot_seeds, "a..b or a,b,c (default: 20 seeds from OMEGA_SUCCINCT_SEED or 0)");
    spot_cmd->add_option("--choice", spot_choice, "per-letter (default) or per-action");

    std::optional<unsigned> max_n;
    std::string repro_out;
    bool with_timing = false;
    auto* repro_cmd = app.add_subcommand("reproduce-all", "Run every acceptance check");
    repro_cmd->add_option("--max-n", max_n, "Cap on n for every check");
    repro_cmd->add_option("--out", repro_out, "Write the consolidated JSON report here");
    repro_cmd->add_flag("--with-timing", with_timing, "Include wall-clock seconds in the JSON report");

    try
      {
        app.parse(argc, argv);
      }
    catch (const CLI::ParseError& e)
      {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
      }

    try
      {
        if (*gen_cmd)
          return run_gen(gen, out);
        if (*an_cmd)
          return run_analyze(an, out);
        if (*mark_cmd)
          return run_mark(mark_n, mark_dba, out);
        if (*props_cmd)
          return run_props(props_path, props_check, out);
        if (*lb_cmd)
          return run_lower_bound(lb, out);
        if (*spot_cmd)
          return run_spot_check(spot_n, spot_seeds, spot_choice, out);
        if (*repro_cmd)
          return run_reproduce(max_n, repro_out, with_timing, out);
      }
    catch (const input_error& e)
      {
        err << "error: " << e.what() << "\n";
        return 2;
      }
    catch (const contract_error& e)
      {
        err << "error: " << e.what() << "\n";
        return 2;
      }
    return 2;
  }
}
