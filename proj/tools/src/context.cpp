#include <algorithm>

#include "monowalk/error.hpp"
#include "monowalk/io.hpp"
#include "monowalk/walk.hpp"
#include "monowalk_cli/cli.hpp"

namespace monowalk::cli {

  namespace {
    std::vector<std::string> split(std::string const& text, char sep) {
      std::vector<std::string> out;
      std::size_t              start = 0;
      while (start <= text.size()) {
        std::size_t stop = text.find(sep, start);
        if (stop == std::string::npos) {
          stop = text.size();
        }
        out.push_back(text.substr(start, stop - start));
        start = stop + 1;
      }
      return out;
    }
  }  // namespace

  std::vector<Rational> parse_probabilities(std::string const& text, GeneratorSet const& gens) {
    if (gens.size() == 0) {
      raise(ErrorKind::InvalidInput, "model has no generators");
    }
    if (text == "uniform") {
      return generic_probability(gens.size(), ProbabilityScheme::Uniform);
    }
    if (text == "powers") {
      return generic_probability(gens.size(), ProbabilityScheme::Powers);
    }
    auto                  parts = split(text, ',');
    std::vector<Rational> out(gens.size(), Rational(0));
    bool const            named = text.find('=') != std::string::npos;
    if (!named && parts.size() != gens.size()) {
      raise(ErrorKind::InvalidInput, "expected " + std::to_string(gens.size()) + " probabilities, got "
                                         + std::to_string(parts.size()));
    }
    std::vector<bool> seen(gens.size(), false);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::size_t g     = i;
      std::string value = parts[i];
      if (named) {
        auto eq = parts[i].find('=');
        if (eq == std::string::npos) {
          raise(ErrorKind::InvalidInput, "mixed named and positional probabilities");
        }
        auto idx = gens.index_of(parts[i].substr(0, eq));
        if (!idx) {
          raise(ErrorKind::InvalidInput, "no generator named \"" + parts[i].substr(0, eq) + "\"");
        }
        g     = *idx;
        value = parts[i].substr(eq + 1);
      }
      if (seen[g]) {
        raise(ErrorKind::InvalidInput, "generator " + gens[g].name + " weighted twice");
      }
      seen[g] = true;
      out[g]  = parse_rational(value);
      if (sgn(out[g]) < 0) {
        raise(ErrorKind::InvalidInput, "negative probability for " + gens[g].name);
      }
    }
    if (sum(out) != 1) {
      raise(ErrorKind::InvalidInput, "probabilities sum to " + to_string(sum(out)) + ", not 1");
    }
    return out;
  }

  Context make_context(Request const& request) {
    if (request.budget_elements == 0 || request.budget_chains == 0) {
      raise(ErrorKind::InvalidInput, "budgets must be positive");
    }
    Context ctx;
    if (request.generators_file) {
      if (!request.model.empty() && request.model != "custom") {
        raise(ErrorKind::InvalidInput, "give either a model or --generators, not both");
      }
      auto gens    = read_generator_set(*request.generators_file);
      ctx.instance = models::ModelInstance{"custom", {}, gens, gens, std::nullopt};
    } else {
      if (request.model.empty()) {
        raise(ErrorKind::InvalidInput, "no model given");
      }
      ctx.instance = models::build_model(request.model, request.params);
    }
    ctx.scheme = request.probs;
    ctx.M      = close_monoid(ctx.instance.monoid, request.budget_elements);
    ctx.G      = green_structure(ctx.M);
    if (is_r_trivial(ctx.M)) {
      ctx.L = build_lattice(ctx.M);
    }
    ctx.action  = Action(ctx.M, ctx.instance.states);
    ctx.weights = parse_probabilities(request.probs, ctx.instance.monoid);
    std::vector<std::pair<ElementId, Rational>> entries;
    for (std::size_t g = 0; g < ctx.weights.size(); ++g) {
      if (sgn(ctx.weights[g]) > 0) {
        entries.emplace_back(ctx.M.generator_element(g), ctx.weights[g]);
      }
    }
    ctx.P = ProbabilityAssignment(std::move(entries));
    ctx.T = transition_matrix(ctx.M, ctx.action, ctx.P);
    return ctx;
  }

  IdempotentLattice const& require_lattice(Context const& ctx) {
    if (!ctx.L) {
      raise(ErrorKind::NotRTrivial, "the monoid of " + ctx.instance.model + " is not R-trivial");
    }
    return *ctx.L;
  }

}  // namespace monowalk::cli
