#ifndef MONOWALK_CLI_RENDER_HPP_
#define MONOWALK_CLI_RENDER_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "monowalk/rational.hpp"
#include "monowalk/transformation.hpp"
#include "monowalk/walk.hpp"
#include "monowalk_cli/cli.hpp"

namespace monowalk::cli {

  using Json = nlohmann::ordered_json;

  // Exact value under `key`; with floats a decimal string goes under
  // `key_decimal` next to it, never instead.
  void put_rational(Json& obj, std::string const& key, Rational const& q, bool floats);

  // {label: "p/q"} over the states, plus a decimal twin when floats is set.
  void put_distribution(Json&                           obj,
                        std::string const&              key,
                        StateSpace const&               states,
                        std::vector<Rational> const&    pi,
                        bool                            floats);

  // Model name, parameters and per-generator weights.
  Json request_header(Context const& ctx, bool floats);

  // State-space law after n steps from state 0.
  std::vector<Rational> step_law(RationalMatrix const& T, std::size_t n);

  std::string ergodicity_name(ErgodicityVerdict verdict);

  Json section_simulate(Context const& ctx, Request const& request);

  // Runs every applicable cross-check; `passed` is false on any failure and
  // the document then carries a counterexample.
  Json run_verification(Context const& ctx, Request const& request, bool& passed);

  // JSON is pretty-printed; CSV is one "path,value" row per leaf; text is an
  // indented outline.  All three are deterministic.
  std::string render(Json const& doc, Format format);

}  // namespace monowalk::cli

#endif  // MONOWALK_CLI_RENDER_HPP_
