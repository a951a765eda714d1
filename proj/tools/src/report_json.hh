#pragma once

#include <json.hpp>

#include <omega/automaton.hh>
#include <omega/marking.hh>
#include <omega/product.hh>
#include <omega/proplab.hh>

namespace omega::tools
{
  using nlohmann::ordered_json;

  ordered_json sigma_json(const std::vector<bool>& sigma);
  ordered_json run_pair_json(const alphabet& sigma, const run_pair& w);

  ordered_json psyn_json(const psyn_analysis& an);
  ordered_json marking_json(const automaton& d, const marking& m);
  ordered_json collapse_json(const collapse_report& r);
  ordered_json ambiguity_json(const automaton& a, const ambiguity_result& r);
  ordered_json separation_json(const automaton& a, const separation_result& r);
  ordered_json lower_bound_json(const lower_bound_report& r);
  ordered_json spot_check_json(const spot_check_report& r);
}
