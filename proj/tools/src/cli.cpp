#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "monowalk/error.hpp"
#include "monowalk_cli/render.hpp"

namespace monowalk::cli {

  Outcome error_outcome(std::string const& kind, int exit_code, std::string const& message) {
    Json doc;
    doc["error"] = {{"kind", kind}, {"code", exit_code}, {"message", message}};
    return {exit_code, doc.dump(2) + "\n"};
  }

  namespace {
    int exit_code_for(ErrorKind kind) {
      switch (error_class(kind)) {
        case ErrorClass::Validation: return 2;
        case ErrorClass::Budget: return 3;
        case ErrorClass::Property: return 4;
      }
      return 2;
    }

    template <typename F>
    Outcome guarded(F&& body) {
      try {
        return body();
      } catch (Error const& e) {
        return error_outcome(std::string(error_kind_name(e.kind())), exit_code_for(e.kind()), e.what());
      } catch (std::exception const& e) {
        return error_outcome("InvalidInput", 2, e.what());
      }
    }

    // Flags shared by analyze, verify and simulate.
    struct Flags {
      Request                  request;
      std::string              model_positional;
      std::string              format = "json";
      std::vector<std::string> param_pairs;
      std::map<std::string, std::string> typed;
      std::string              analyses;
      std::string              out;
    };

    void add_model_flags(CLI::App* cmd, Flags& f) {
      cmd->add_option("name", f.model_positional, "Registered model name (same as --model)");
      cmd->add_option("--model", f.request.model, "Registered model name");
      for (auto name : {"k", "content", "m", "L", "n", "thresholds", "successors", "system"}) {
        cmd->add_option(std::string("--") + name, f.typed[name], std::string("Model parameter ") + name);
      }
      cmd->add_option("--param", f.param_pairs, "Model parameter as key=value (repeatable)");
      cmd->add_option("--generators", f.request.generators_file, "Custom generator set as a JSON file");
      cmd->add_option("--probs", f.request.probs,
                      "uniform | powers | p/q,... in generator order | name=p/q,...");
      cmd->add_option("--format", f.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
      cmd->add_option("--seed", f.request.seed, "Seed for Monte Carlo runs");
      cmd->add_option("--budget-elements", f.request.budget_elements, "Cap on monoid size");
      cmd->add_option("--budget-chains", f.request.budget_chains, "Cap on chain enumerations");
      cmd->add_option("--n-max", f.request.n_max, "Largest n in bound tables");
      cmd->add_option("--steps", f.request.steps, "Walk length for simulation");
      cmd->add_option("--trials", f.request.trials, "Monte Carlo trials");
      cmd->add_flag("--float", f.request.floats, "Add decimal renderings next to exact values");
      cmd->add_option("--out", f.out, "Write the report to this file");
    }

    Request finish(Flags& f, std::vector<std::string> const& added_defaults = {}) {
      Request r = f.request;
      if (!f.model_positional.empty()) {
        if (!r.model.empty() && r.model != f.model_positional) {
          raise(ErrorKind::InvalidInput, "model given twice");
        }
        r.model = f.model_positional;
      }
      for (auto const& [k, v] : f.typed) {
        if (!v.empty()) {
          r.params[k] = v;
        }
      }
      for (auto const& kv : f.param_pairs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
          raise(ErrorKind::InvalidInput, "--param expects key=value, got \"" + kv + "\"");
        }
        r.params[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      r.format = f.format == "csv" ? Format::Csv : f.format == "text" ? Format::Text : Format::Json;
      std::string list = f.analyses;
      std::size_t start = 0;
      while (!list.empty() && start <= list.size()) {
        std::size_t stop = list.find(',', start);
        if (stop == std::string::npos) {
          stop = list.size();
        }
        r.analyses.push_back(list.substr(start, stop - start));
        start = stop + 1;
      }
      r.analyses.insert(r.analyses.end(), added_defaults.begin(), added_defaults.end());
      return r;
    }
  }  // namespace

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spectra, stationary laws and mixing bounds of random walks on R-trivial monoids",
                 "monowalk"};
    app.require_subcommand(1);
    Flags analyze_flags, verify_flags, simulate_flags;
    std::string list_format = "json";
    std::string list_out;

    auto* analyze = app.add_subcommand("analyze", "Build a model and report the requested analyses");
    add_model_flags(analyze, analyze_flags);
    analyze->add_option("--analyses", analyze_flags.analyses,
                        "Comma list of structure,spectrum,stationary,bounds,simulate,verify");

    auto* verify = app.add_subcommand("verify", "Run every cross-check; exit 4 on any failure");
    add_model_flags(verify, verify_flags);
    verify->add_flag("--conjecture", verify_flags.request.conjecture, "Report the interlibrary conjecture sweep");
    verify->add_option("--inject-fault", verify_flags.request.inject_fault, "Negative control: multiplicity")
        ->check(CLI::IsMember({"multiplicity"}));

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo walk and absorption times against exact values");
    add_model_flags(simulate, simulate_flags);

    auto* list = app.add_subcommand("list-models", "List registered models and their parameters");
    list->add_option("--format", list_format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    list->add_option("--out", list_out, "Write the listing to this file");

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      out << error_outcome("InvalidInput", 2, e.what()).document;
      return 2;
    }

    Outcome     result;
    std::string target;
    if (*analyze) {
      target = analyze_flags.out;
      result = guarded([&] { return cmd_analyze(finish(analyze_flags)); });
    } else if (*verify) {
      target = verify_flags.out;
      result = guarded([&] { return cmd_verify(finish(verify_flags)); });
    } else if (*simulate) {
      target = simulate_flags.out;
      result = guarded([&] { return cmd_simulate(finish(simulate_flags)); });
    } else {
      target = list_out;
      Format fmt = list_format == "csv" ? Format::Csv : list_format == "text" ? Format::Text : Format::Json;
      result     = cmd_list_models(fmt);
    }
    if (target.empty()) {
      out << result.document;
    } else {
      std::ofstream file(target);
      if (!file) {
        out << error_outcome("InvalidInput", 2, "cannot write " + target).document;
        return 2;
      }
      file << result.document;
    }
    return result.exit_code;
  }

}  // namespace monowalk::cli
