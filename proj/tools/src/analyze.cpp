#include <algorithm>
#include <set>

#include "monowalk/bounds.hpp"
#include "monowalk/error.hpp"
#include "monowalk/exchange.hpp"
#include "monowalk/simulate.hpp"
#include "monowalk/spectrum.hpp"
#include "monowalk/walk.hpp"
#include "monowalk_cli/render.hpp"

namespace monowalk::cli {

  std::string ergodicity_name(ErgodicityVerdict verdict) {
    switch (verdict) {
      case ErgodicityVerdict::Ergodic: return "ERGODIC";
      case ErgodicityVerdict::NotTransitive: return "NOT_TRANSITIVE";
      case ErgodicityVerdict::NoConstant: return "NO_CONSTANT";
    }
    return "UNKNOWN";
  }

  Json request_header(Context const& ctx, bool floats) {
    Json doc;
    doc["model"]  = ctx.instance.model;
    doc["params"] = Json::object();
    for (auto const& [k, v] : ctx.instance.params) {
      doc["params"][k] = v;
    }
    Json probs;
    probs["scheme"] = ctx.scheme;
    Json w          = Json::object();
    for (std::size_t g = 0; g < ctx.weights.size(); ++g) {
      put_rational(w, ctx.instance.monoid[g].name, ctx.weights[g], floats);
    }
    probs["weights"]     = std::move(w);
    doc["probabilities"] = std::move(probs);
    return doc;
  }

  std::vector<Rational> step_law(RationalMatrix const& T, std::size_t n) {
    std::vector<Rational> v(T.rows(), Rational(0));
    v[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      v = T.apply(v);
    }
    return v;
  }

  namespace {
    Json section_structure(Context const& ctx) {
      Json s;
      s["monoid_size"] = ctx.M.size();
      s["state_count"] = ctx.action.size();
      s["generators"]  = ctx.instance.monoid.names();
      s["r_trivial"]   = ctx.L.has_value();
      s["aperiodic"]   = is_aperiodic(ctx.M);
      s["left_regular_band"] = is_left_regular_band(ctx.M);
      s["karnofsky_rhodes"]  = is_karnofsky_rhodes(ctx.M);
      s["idempotents"]       = ctx.G.idempotents.size();
      s["r_classes"]         = ctx.G.r_class_count;
      s["l_classes"]         = ctx.G.l_class_count;
      s["minimal_ideal_size"] = ctx.G.minimal_ideal.size();
      if (ctx.L) {
        s["lattice_size"] = ctx.L->size();
      }
      auto erg          = ergodicity_check(ctx.M, ctx.action, ctx.P);
      s["ergodicity"]   = {{"verdict", ergodicity_name(erg.verdict)}, {"period", erg.period}};
      if (ctx.instance.monoid.tree_order()) {
        auto cert = check_generalized_tree_monoid(ctx.instance.monoid);
        Json t;
        t["order"] = *ctx.instance.monoid.tree_order();
        t["holds"] = cert.holds;
        if (!cert.holds) {
          t["reason"] = cert.reason;
        }
        s["tree_monoid"] = std::move(t);
      }
      if (ctx.instance.coxeter) {
        auto const& W = *ctx.instance.coxeter;
        s["coxeter"]  = {{"system", W.label()},
                         {"group_order", W.size()},
                         {"longest_length", W.length(W.longest())},
                         {"reduced_words_of_w0", ctx.action.size()}};
      }
      return s;
    }

    Json section_spectrum(Context const& ctx, bool floats) {
      auto const& L = require_lattice(ctx);
      auto        S = spectrum(ctx.M, L, ctx.action, ctx.P);
      Json        s;
      s["omega_size"] = S.omega_size;
      Json nodes      = Json::array();
      std::set<Rational> values;
      for (auto const& e : S.entries) {
        Json n;
        n["node"]             = e.node;
        n["representative"]   = ctx.M.element_label(L.representative[e.node]);
        n["generators_above"] = e.generators_above;
        put_rational(n, "lambda", e.lambda, floats);
        n["multiplicity"] = e.multiplicity;
        n["fixed_points"] = e.fixed_points;
        nodes.push_back(std::move(n));
        values.insert(e.lambda);
      }
      s["nodes"]      = std::move(nodes);
      Json eig        = Json::array();
      auto merged     = S.merged();
      for (auto const& [lambda, mult] : merged) {
        Json e;
        put_rational(e, "lambda", lambda, floats);
        e["multiplicity"] = mult;
        eig.push_back(std::move(e));
      }
      s["eigenvalues"] = std::move(eig);
      // Eigenvalues of T proper, and all λ_X including null nodes.
      s["distinct_eigenvalues"]   = merged.size();
      s["distinct_lambda_values"] = values.size();
      auto verdict                = check_diagonalizable_criterion(ctx.M, L, ctx.P);
      Json d;
      d["criterion"] = verdict.satisfied ? "SATISFIED" : "INCONCLUSIVE";
      if (verdict.witness) {
        d["witness"] = {ctx.M.element_label(verdict.witness->first), ctx.M.element_label(verdict.witness->second)};
      }
      s["diagonalizability"] = std::move(d);
      if (auto closed = closed_spectrum(ctx)) {
        Json c;
        c["source"]  = closed->source;
        Json entries = Json::array();
        for (std::size_t i = 0; i < closed->entries.size(); ++i) {
          Json e;
          e["symbol"] = closed->symbols[i];
          put_rational(e, "lambda", closed->entries[i].lambda, floats);
          e["multiplicity"] = closed->entries[i].multiplicity;
          entries.push_back(std::move(e));
        }
        c["entries"]       = std::move(entries);
        s["closed_form"]   = std::move(c);
      }
      return s;
    }

    Json section_stationary(Context const& ctx, bool floats) {
      Json s;
      auto pi      = stationary_exact(ctx.T);
      s["method"]  = "linear-solve";
      put_distribution(s, "distribution", ctx.action.states(), pi, floats);
      if (ctx.instance.coxeter) {
        auto chain = make_exchange_chain(*ctx.instance.coxeter, ctx.weights);
        put_distribution(s, "product_formula", ctx.action.states(), exchange_stationary(chain), floats);
      }
      return s;
    }

    Json section_bounds(Context const& ctx, Request const& request) {
      auto const& L     = require_lattice(ctx);
      bool const  lrb   = is_left_regular_band(ctx.M);
      auto        pi    = stationary_exact(ctx.T);
      auto        tv    = worst_case_tv_profile(ctx.T, pi, request.n_max);
      auto        table = mixing_bound_table(ctx.M, ctx.G, L, ctx.P, request.n_max, request.budget_chains);
      Json        s;
      Json        ea;
      put_rational(ea, "fundamental", expected_absorption_fundamental(ctx.M, ctx.G, ctx.P), request.floats);
      put_rational(ea, "chain_sum", expected_absorption_general(ctx.M, ctx.G, L, ctx.P, request.budget_chains),
                   request.floats);
      if (lrb) {
        put_rational(ea, "lrb", expected_absorption_lrb(ctx.M, ctx.G, L, ctx.P), request.floats);
      }
      s["expected_absorption"] = std::move(ea);
      Json rows                = Json::array();
      for (std::size_t n = 0; n <= request.n_max; ++n) {
        Json r;
        r["n"] = n;
        put_rational(r, "worst_case_tv", tv[n], request.floats);
        for (auto const& b : table) {
          if (b.n == n && b.exact) {
            put_rational(r, bound_kind_name(b.kind), *b.exact, request.floats);
          }
        }
        rows.push_back(std::move(r));
      }
      s["table"] = std::move(rows);
      if (ctx.instance.coxeter) {
        auto chain = make_exchange_chain(*ctx.instance.coxeter, ctx.weights);
        auto kb    = exchange_mixing_bound(chain, Rational(1));
        Json e;
        e["longest_length"] = kb.m;
        put_rational(e, "min_probability", kb.p, request.floats);
        put_rational(e, "c", kb.c, request.floats);
        e["steps"] = kb.steps;
        put_rational(e, "statistic_tail_at_steps", chernoff_statistic_bound(kb.m, kb.p, kb.steps).tail,
                     request.floats);
        if (kb.steps <= 4096) {
          auto prof = worst_case_tv_profile(ctx.T, pi, kb.steps);
          put_rational(e, "worst_case_tv_at_steps", prof.back(), request.floats);
        }
        s["exchange_mixing_bound"] = std::move(e);
      }
      return s;
    }
  }  // namespace

  Json section_simulate(Context const& ctx, Request const& request) {
    auto pi       = stationary_exact(ctx.T);
    auto law      = step_law(ctx.T, request.steps);
    auto walk     = simulate_walk(ctx.action, ctx.P, request.seed, request.steps, request.trials);
    auto emp      = walk.empirical();
    Json mc;
    mc["seed"]   = request.seed;
    mc["trials"] = request.trials;
    mc["steps"]  = request.steps;
    mc["start"]  = ctx.action.states().label(0);
    Json e       = Json::object();
    for (std::size_t i = 0; i < emp.size(); ++i) {
      e[ctx.action.states().label(static_cast<StateIndex>(i))] = emp[i];
    }
    mc["empirical"]           = std::move(e);
    mc["tv_to_step_law"]      = empirical_tv(emp, law);
    mc["tv_to_stationary"]    = empirical_tv(emp, pi);
    auto abs                  = simulate_absorption(ctx.M, ctx.G, ctx.P, request.seed, request.trials);
    mc["absorption_mean"]     = abs.mean;
    mc["absorption_std_error"] = abs.std_error;
    Json exact;
    put_rational(exact, "step_law_tv_to_stationary", tv_distance(law, pi), request.floats);
    put_rational(exact, "expected_absorption", expected_absorption_fundamental(ctx.M, ctx.G, ctx.P),
                 request.floats);
    Json s;
    s["monte_carlo"] = std::move(mc);
    s["exact"]       = std::move(exact);
    return s;
  }

  Outcome cmd_analyze(Request const& request) {
    auto ctx      = make_context(request);
    auto analyses = request.analyses;
    if (analyses.empty()) {
      analyses = {"structure", "spectrum", "stationary", "bounds"};
    }
    Json doc = request_header(ctx, request.floats);
    bool ok  = true;
    for (auto const& a : analyses) {
      if (a == "structure") {
        doc["structure"] = section_structure(ctx);
      } else if (a == "spectrum") {
        doc["spectrum"] = section_spectrum(ctx, request.floats);
      } else if (a == "stationary") {
        doc["stationary"] = section_stationary(ctx, request.floats);
      } else if (a == "bounds") {
        doc["bounds"] = section_bounds(ctx, request);
      } else if (a == "simulate") {
        doc["simulate"] = section_simulate(ctx, request);
      } else if (a == "verify") {
        bool passed    = true;
        doc["verify"]  = run_verification(ctx, request, passed);
        ok             = ok && passed;
      } else {
        raise(ErrorKind::InvalidInput, "unknown analysis \"" + a + "\"");
      }
    }
    return {ok ? 0 : 4, render(doc, request.format)};
  }

  Outcome cmd_simulate(Request const& request) {
    auto ctx = make_context(request);
    Json doc = request_header(ctx, request.floats);
    doc["simulate"] = section_simulate(ctx, request);
    return {0, render(doc, request.format)};
  }

  Outcome cmd_list_models(Format format) {
    Json models = Json::array();
    for (auto const& m : models::model_registry()) {
      Json e;
      e["name"]        = m.name;
      e["description"] = m.description;
      Json params      = Json::array();
      for (auto const& p : m.params) {
        params.push_back({{"name", p.name}, {"type", p.type}, {"default", p.default_value}, {"description", p.description}});
      }
      e["params"] = std::move(params);
      models.push_back(std::move(e));
    }
    Json doc;
    doc["models"] = std::move(models);
    return {0, render(doc, format)};
  }

}  // namespace monowalk::cli
