#include <cmath>
#include <map>

#include "monowalk/bounds.hpp"
#include "monowalk/error.hpp"
#include "monowalk/exchange.hpp"
#include "monowalk/models/free_tree.hpp"
#include "monowalk/models/sandpile.hpp"
#include "monowalk/models/toom.hpp"
#include "monowalk/spectrum.hpp"
#include "monowalk/stationary.hpp"
#include "monowalk/walk.hpp"
#include "monowalk_cli/render.hpp"

namespace monowalk::cli {

  namespace {
    // Power sums are only compared up to this many states.
    constexpr std::size_t trace_budget = 120;

    struct Checks {
      Json                list = Json::array();
      std::optional<Json> counterexample;
      std::size_t         failed = 0;

      void add(std::string const& name, bool ok, Json detail = nullptr, Json witness = nullptr) {
        Json c;
        c["name"]   = name;
        c["passed"] = ok;
        if (!detail.is_null()) {
          c["detail"] = std::move(detail);
        }
        list.push_back(std::move(c));
        if (!ok) {
          ++failed;
          if (!counterexample) {
            Json w     = witness.is_null() ? Json::object() : std::move(witness);
            w["check"] = name;
            counterexample = std::move(w);
          }
        }
      }
    };

    // First k with trace(T^k) ≠ Σ m λ^k, as an explicit witness.
    std::optional<Json> trace_mismatch(RationalMatrix const&                                 T,
                                       std::vector<std::pair<Rational, std::int64_t>> const& spec) {
      RationalMatrix Tk = RationalMatrix::identity(T.rows());
      for (std::size_t k = 0; k <= T.rows(); ++k) {
        Rational rhs = 0;
        for (auto const& [lambda, mult] : spec) {
          rhs += Rational(mult) * power(lambda, k);
        }
        Rational lhs = Tk.trace();
        if (lhs != rhs) {
          return Json{{"k", k}, {"trace", to_string(lhs)}, {"power_sum", to_string(rhs)}};
        }
        Tk = Tk * T;
      }
      return std::nullopt;
    }

    std::vector<std::pair<Rational, std::int64_t>> merge(std::vector<SubsetEigenvalue> const& entries) {
      std::map<Rational, std::int64_t, std::greater<>> acc;
      for (auto const& e : entries) {
        if (e.multiplicity != 0) {
          acc[e.lambda] += e.multiplicity;
        }
      }
      return {acc.begin(), acc.end()};
    }

    // Moves one unit of multiplicity between two nodes with different λ, so
    // the total stays |Ω| and only the trace identities can notice.
    void inject_multiplicity_fault(SpectrumReport& S) {
      for (auto& a : S.entries) {
        if (a.multiplicity <= 0) {
          continue;
        }
        for (auto& b : S.entries) {
          if (b.lambda != a.lambda) {
            --a.multiplicity;
            ++b.multiplicity;
            return;
          }
        }
      }
    }

    void compare_distributions(Checks&                      checks,
                               std::string const&           name,
                               StateSpace const&            states,
                               Distribution const&          expected,
                               Distribution const&          got) {
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (got.size() != expected.size() || got[i] != expected[i]) {
          Json w{{"state", states.label(static_cast<StateIndex>(i))},
                 {"linear_solve", to_string(expected[i])},
                 {"route", i < got.size() ? to_string(got[i]) : "missing"}};
          checks.add(name, false, nullptr, std::move(w));
          return;
        }
      }
      checks.add(name, true);
    }

    void check_free_tree(Checks& checks, Context const& ctx) {
      std::size_t const n     = std::stoul(ctx.instance.params.at("n"));
      auto              words = models::ft_enumerate(n);
      checks.add("free-tree:count", Integer(ctx.M.size()) == models::ft_count(n),
                 Json{{"monoid_size", ctx.M.size()}, {"a(n)", to_string(models::ft_count(n))}});
      Integer class_sum = 0;
      for (std::uint64_t I = 0; I < (std::uint64_t{1} << n); ++I) {
        class_sum += models::ft_descent_class_size(I, n);
      }
      checks.add("free-tree:descent-class-sum", class_sum == models::ft_count(n));
      for (ElementId m = 0; m < ctx.M.size(); ++m) {
        auto const&   u = words[ctx.action.image(m, 0)];
        auto          d = models::ft_descents(u, n);
        std::uint64_t right = 0, left = 0;
        for (std::size_t g = 0; g < ctx.M.generator_count(); ++g) {
          right |= std::uint64_t{ctx.M.right(m, g) == m} << g;
          left |= std::uint64_t{ctx.M.left(m, g) == m} << g;
        }
        if (right != d.right || left != d.left) {
          checks.add("free-tree:descents", false, nullptr,
                     Json{{"word", models::ft_label(u)}, {"closed_right", d.right}, {"stabilizer_right", right},
                          {"closed_left", d.left}, {"stabilizer_left", left}});
          return;
        }
      }
      checks.add("free-tree:descents", true);
    }

    void check_sandpile(Checks& checks, Context const& ctx) {
      models::ArborescenceSpec spec;
      auto thresholds = models::parse_uint_list(ctx.instance.params.at("thresholds"));
      if (!ctx.instance.params.at("successors").empty()) {
        // Custom arborescences are covered by the generic checks only.
        return;
      }
      spec = models::sandpile_path(thresholds);
      std::vector<models::Configuration> configs{models::Configuration{}};
      for (auto T : spec.threshold) {
        std::vector<models::Configuration> next;
        for (auto const& c : configs) {
          for (std::uint32_t t = 0; t <= T; ++t) {
            auto d = c;
            d.push_back(t);
            next.push_back(std::move(d));
          }
        }
        configs = std::move(next);
      }
      for (auto const& c : configs) {
        for (std::uint32_t v = 0; v < spec.threshold.size(); ++v) {
          if (models::sandpile_source(spec, c, v) != models::sandpile_source_direct(spec, c, v)) {
            Json cfg = c;
            checks.add("sandpile:source-recursion", false, nullptr, Json{{"configuration", cfg}, {"vertex", v}});
            return;
          }
        }
      }
      checks.add("sandpile:source-recursion", true, Json{{"configurations", configs.size()}});
    }

    void check_toom_loan(Checks& checks, Context const& ctx, Request const& request, Json& doc) {
      auto m = static_cast<std::uint32_t>(std::stoul(ctx.instance.params.at("m")));
      auto L = static_cast<std::uint32_t>(std::stoul(ctx.instance.params.at("L")));
      if (m * L <= 12) {
        auto spec = models::toom_loan_spec(m, L);
        std::size_t tuples = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m * L)); ++mask) {
          models::SubsetTuple R(m);
          for (std::uint32_t b = 0; b < m; ++b) {
            for (std::uint32_t j = 1; j <= L; ++j) {
              if (mask >> (b * L + j - 1) & 1) {
                R[b].push_back(j);
              }
            }
          }
          auto    e      = evaluate(ctx.instance.states, models::toom_loan_idempotent(spec, R));
          Integer direct = static_cast<unsigned long>(e.fixed_point_count());
          Integer closed = models::interlibrary_fixed_points(m, L, R);
          ++tuples;
          if (direct != closed) {
            checks.add("toom-loan:fixed-points", false, nullptr,
                       Json{{"mask", mask}, {"direct", to_string(direct)}, {"closed_form", to_string(closed)}});
            return;
          }
        }
        checks.add("toom-loan:fixed-points", true, Json{{"tuples", tuples}});
      }
      if (request.conjecture) {
        auto rep = models::check_interlibrary_conjecture(m, L);
        Json c;
        c["m"]          = rep.m;
        c["L"]          = rep.L;
        c["cases"]      = rep.cases.size();
        c["matches"]    = rep.matches;
        c["mismatches"] = rep.mismatches;
        Json bad        = Json::array();
        for (auto const& k : rep.cases) {
          if (k.computed != k.predicted) {
            bad.push_back({{"I", k.I}, {"computed", k.computed}, {"predicted", k.predicted}});
          }
        }
        c["mismatch_cases"] = std::move(bad);
        // A report, not an assertion: mismatches never fail verification.
        doc["conjecture"] = std::move(c);
      }
    }

    void check_exchange(Checks& checks, Context const& ctx, Distribution const& pi) {
      auto const& W     = *ctx.instance.coxeter;
      auto        chain = make_exchange_chain(W, ctx.weights);
      bool        idem  = true;
      for (auto const& g : ctx.instance.states.generators()) {
        idem = idem && g.map.is_idempotent();
      }
      checks.add("exchange:moves-idempotent", idem);
      auto strip = exchange_action(ctx.M, W);
      bool same  = true;
      for (std::size_t s = 0; s < ctx.M.generator_count() && same; ++s) {
        auto m = ctx.M.generator_element(s);
        for (StateIndex b = 0; b < ctx.action.size() && same; ++b) {
          same = strip.image(m, b) == ctx.action.image(m, b);
        }
      }
      checks.add("exchange:strip-equals-exchange-condition", same);
      compare_distributions(checks, "exchange:product-formula", ctx.action.states(), pi, exchange_stationary(chain));
      auto kb   = exchange_mixing_bound(chain, Rational(1));
      if (kb.steps <= 4096) {
        auto tv = worst_case_tv_profile(ctx.T, pi, kb.steps).back();
        checks.add("exchange:mixing-bound", to_double(tv) <= std::exp(-1.0),
                   Json{{"steps", kb.steps}, {"worst_case_tv", to_string(tv)}});
      }
    }
  }  // namespace

  Json run_verification(Context const& ctx, Request const& request, bool& passed) {
    Checks checks;
    Json   doc;
    auto const& L = require_lattice(ctx);
    checks.add("r-trivial:identity", satisfies_r_trivial_identity(ctx.M));
    if (ctx.instance.monoid.tree_order()) {
      auto cert = check_generalized_tree_monoid(ctx.instance.monoid);
      // A positive certificate must imply ℛ-triviality, never the reverse.
      checks.add("tree-monoid:certificate", cert.holds, cert.holds ? Json(nullptr) : Json(cert.reason));
    }

    if (ctx.action.size() > trace_budget) {
      raise(ErrorKind::BudgetExceeded, "trace identities limited to " + std::to_string(trace_budget) + " states");
    }
    auto S = spectrum(ctx.M, L, ctx.action, ctx.P);
    if (request.inject_fault) {
      inject_multiplicity_fault(S);
    }
    auto mismatch = trace_mismatch(ctx.T, S.merged());
    bool traces   = verify_spectrum_by_traces(ctx.T, S, trace_budget);
    checks.add("spectrum:trace-identities", traces && !mismatch, nullptr, mismatch ? *mismatch : Json(nullptr));
    checks.add("spectrum:multiplicity-sum", S.total_multiplicity() == static_cast<std::int64_t>(S.omega_size));

    if (auto closed = closed_spectrum(ctx)) {
      auto node = match_subset_spectrum(ctx.M, L, S, closed->entries);
      checks.add("closed-form:node-match", !node, nullptr, node ? Json{{"disagreement", *node}} : Json(nullptr));
      auto cm = trace_mismatch(ctx.T, merge(closed->entries));
      checks.add("closed-form:trace-identities", !cm, nullptr, cm ? *cm : Json(nullptr));
    }

    auto verdict = check_diagonalizable_criterion(ctx.M, L, ctx.P);
    bool minpoly = verify_diagonalizable_minpoly(ctx.T, S, trace_budget);
    checks.add("diagonalizable:criterion-implies-minpoly", !verdict.satisfied || minpoly,
               Json{{"criterion", verdict.satisfied ? "SATISFIED" : "INCONCLUSIVE"}, {"minpoly", minpoly}});

    auto const& states = ctx.action.states();
    auto        pi     = stationary_exact(ctx.T);
    auto const  B      = request.budget_chains;
    compare_distributions(checks, "stationary:chain-formula", states, pi,
                          push_forward(stationary_chain_formula(ctx.M, ctx.G, L, ctx.P, B), ctx.action));
    compare_distributions(checks, "stationary:reduced-words", states, pi,
                          push_forward(stationary_reduced_words(ctx.M, ctx.G, L, ctx.P, B), ctx.action));
    compare_distributions(checks, "stationary:ideal-linear-solve", states, pi,
                          push_forward(stationary_on_ideal_exact(ctx.M, ctx.G, ctx.P), ctx.action));
    compare_distributions(checks, "stationary:lumped", states, pi, lumped_stationary(ctx.M, ctx.G, ctx.action, ctx.P));
    if (is_karnofsky_rhodes(ctx.M, ctx.P.support())) {
      compare_distributions(checks, "stationary:kr-product", states, pi,
                            push_forward(stationary_kr_product(ctx.M, ctx.G, L, ctx.P), ctx.action));
    }

    bool const lrb   = is_left_regular_band(ctx.M);
    auto       tv    = worst_case_tv_profile(ctx.T, pi, request.n_max);
    auto       table = mixing_bound_table(ctx.M, ctx.G, L, ctx.P, request.n_max, B);
    bool       dominated = true;
    Json       witness;
    for (auto const& row : table) {
      if (row.exact && tv[row.n] > *row.exact) {
        dominated = false;
        witness   = {{"n", row.n}, {"bound", bound_kind_name(row.kind)}, {"worst_case_tv", to_string(tv[row.n])},
                     {"value", to_string(*row.exact)}};
        break;
      }
    }
    checks.add("bounds:dominate-tv", dominated, Json{{"n_max", request.n_max}}, witness);
    if (lrb) {
      bool equal = true;
      for (std::size_t n = 0; n <= request.n_max && equal; ++n) {
        equal = lrb_tv_bound(ctx.M, ctx.G, L, ctx.P, n) == mass_outside_ideal(ctx.M, ctx.G, ctx.P, n);
      }
      checks.add("bounds:lrb-equals-outside-mass", equal);
    }

    Rational const fundamental = expected_absorption_fundamental(ctx.M, ctx.G, ctx.P);
    Rational const general     = expected_absorption_general(ctx.M, ctx.G, L, ctx.P, B);
    checks.add("absorption:chain-sum", general == fundamental,
               Json{{"chain_sum", to_string(general)}, {"fundamental", to_string(fundamental)}});
    if (lrb) {
      Rational const via_lrb = expected_absorption_lrb(ctx.M, ctx.G, L, ctx.P);
      checks.add("absorption:lrb", via_lrb == fundamental, Json{{"lrb", to_string(via_lrb)}});
    }

    auto walk   = right_walk(ctx.M, ctx.P);
    bool pstar  = true;
    for (std::size_t n = 0; n <= std::min<std::size_t>(request.n_max, 6) && pstar; ++n) {
      pstar = pstar_formula_all(ctx.M, L, ctx.P, n, B) == convolution_power(ctx.M, walk, n);
    }
    checks.add("pstar:chain-formula", pstar);

    auto const& model = ctx.instance.model;
    if (model == "free-tree") {
      check_free_tree(checks, ctx);
    } else if (model == "sandpile") {
      check_sandpile(checks, ctx);
    } else if (model == "toom-loan") {
      check_toom_loan(checks, ctx, request, doc);
    } else if (model == "exchange-walk" && ctx.instance.coxeter && closed_spectrum(ctx)) {
      check_exchange(checks, ctx, pi);
    }

    passed         = checks.failed == 0;
    doc["status"]  = passed ? "pass" : "fail";
    doc["summary"] = {{"checks", checks.list.size()}, {"failed", checks.failed}};
    doc["checks"]  = std::move(checks.list);
    if (checks.counterexample) {
      doc["counterexample"] = std::move(*checks.counterexample);
    }
    return doc;
  }

  Outcome cmd_verify(Request const& request) {
    auto ctx    = make_context(request);
    Json doc    = request_header(ctx, request.floats);
    bool passed = true;
    doc["verify"] = run_verification(ctx, request, passed);
    if (!passed) {
      doc["error"] = {{"kind", "VerificationFailed"}, {"code", 4}, {"message", "one or more checks failed"}};
    }
    return {passed ? 0 : 4, render(doc, request.format)};
  }

}  // namespace monowalk::cli
