#ifndef MONOWALK_CLI_CLI_HPP_
#define MONOWALK_CLI_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "monowalk/bounds.hpp"
#include "monowalk/green.hpp"
#include "monowalk/lattice.hpp"
#include "monowalk/matrix.hpp"
#include "monowalk/models/registry.hpp"
#include "monowalk/monoid.hpp"
#include "monowalk/probability.hpp"
#include "monowalk/spectrum.hpp"
#include "monowalk/stationary.hpp"

namespace monowalk::cli {

  enum class Format { Json, Csv, Text };

  struct Request {
    std::string                model;
    models::ParamMap           params;
    std::optional<std::string> generators_file;  // replaces the model
    std::string                probs = "uniform";
    std::vector<std::string>   analyses;         // empty means the default set
    Format                     format = Format::Json;
    std::uint64_t              seed   = 1;
    std::size_t                budget_elements = FiniteMonoid::default_cap;
    std::size_t                budget_chains   = default_chain_budget;
    bool                       floats = false;
    std::size_t                n_max  = 20;
    std::size_t                steps  = 50;
    std::size_t                trials = 10000;
    bool                       conjecture = false;
    std::optional<std::string> inject_fault;
  };

  // Everything derived from a request before any analysis runs.  The lattice
  // exists only when M is ℛ-trivial.
  struct Context {
    models::ModelInstance            instance;
    std::string                      scheme;
    FiniteMonoid                     M;
    GreenStructure                   G;
    std::optional<IdempotentLattice> L;
    Action                           action;
    std::vector<Rational>            weights;  // per generator, zeros allowed
    ProbabilityAssignment            P;
    RationalMatrix                   T;
  };

  Context make_context(Request const& request);

  // Throws NotRTrivial when the lattice is missing.
  IdempotentLattice const& require_lattice(Context const& ctx);

  // "uniform", "powers", "p/q,p/q,..." in generator order, or
  // "name=p/q,name=p/q" with unnamed generators at zero.
  std::vector<Rational> parse_probabilities(std::string const& text, GeneratorSet const& gens);

  // The model's closed-form spectrum indexed by generator subsets, when the
  // model has one and every weight is positive.
  struct ClosedSpectrum {
    std::string                   source;
    std::vector<SubsetEigenvalue> entries;
    std::vector<std::string>      symbols;  // "x11+x21", one per entry
    std::size_t                   omega_size = 0;
  };

  std::optional<ClosedSpectrum> closed_spectrum(Context const& ctx);

  struct Outcome {
    int         exit_code = 0;
    std::string document;
  };

  Outcome cmd_analyze(Request const& request);
  Outcome cmd_verify(Request const& request);
  Outcome cmd_simulate(Request const& request);
  Outcome cmd_list_models(Format format);

  // Machine-readable error object; the exit code follows error_class.
  Outcome error_outcome(std::string const& kind, int exit_code, std::string const& message);

  // Parses argv, dispatches, writes the document to `out` (or --out).
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monowalk::cli

#endif  // MONOWALK_CLI_CLI_HPP_
