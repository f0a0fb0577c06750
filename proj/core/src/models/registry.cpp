#include "monowalk/models/registry.hpp"

#include <charconv>

#include "monowalk/error.hpp"
#include "monowalk/exchange.hpp"
#include "monowalk/models/free_tree.hpp"
#include "monowalk/models/sandpile.hpp"
#include "monowalk/models/toom.hpp"
#include "monowalk/models/tsetlin.hpp"

namespace monowalk::models {

  namespace {
    std::uint32_t parse_uint(std::string const& text, std::string const& what) {
      std::uint32_t value = 0;
      auto [end, ec]      = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
        raise(ErrorKind::InvalidInput, what + " must be a nonnegative integer, got \"" + text + "\"");
      }
      return value;
    }

    ModelInstance same(std::string model, ParamMap params, GeneratorSet gens) {
      return ModelInstance{std::move(model), std::move(params), gens, gens, std::nullopt};
    }

    std::vector<ModelSpec> make_registry() {
      std::vector<ModelSpec> r;
      r.push_back({"tsetlin",
                   "Move-to-front on k books; the monoid is the free left regular band",
                   {{"k", "int", "3", "number of books (1..6)"}},
                   [](ParamMap const& p) {
                     auto k = parse_uint(p.at("k"), "k");
                     return ModelInstance{"tsetlin", p, free_lrb_generators(k), tsetlin_generators(k), std::nullopt};
                   }});
      r.push_back({"toom-fixed",
                   "Tsetlin library with multiple copies of each book",
                   {{"content", "int-list", "2,2", "copies per book"}},
                   [](ParamMap const& p) {
                     return same("toom-fixed", p, toom_fixed_generators(toom_fixed_spec(parse_uint_list(p.at("content")))));
                   }});
      r.push_back({"toom-loan",
                   "Tsetlin library with interlibrary loan on a shelf of length L",
                   {{"m", "int", "2", "number of distinct books"}, {"L", "int", "2", "shelf length"}},
                   [](ParamMap const& p) {
                     return same("toom-loan", p,
                                 toom_loan_generators(toom_loan_spec(parse_uint(p.at("m"), "m"), parse_uint(p.at("L"), "L"))));
                   }});
      r.push_back({"free-tree",
                   "Free tree monoid FT(n) acting on itself from the left",
                   {{"n", "int", "2", "alphabet size (1..4)"}},
                   [](ParamMap const& p) { return same("free-tree", p, free_tree_generators(parse_uint(p.at("n"), "n"))); }});
      r.push_back({"sandpile",
                   "Landslide directed sandpile on an arborescence",
                   {{"thresholds", "int-list", "1,1", "threshold per vertex"},
                    {"successors", "int-list", "", "successor per vertex, 'r' for the root; empty means a path"}},
                   [](ParamMap const& p) {
                     ArborescenceSpec spec;
                     auto             thresholds = parse_uint_list(p.at("thresholds"));
                     if (p.at("successors").empty()) {
                       spec = sandpile_path(thresholds);
                     } else {
                       std::string const& text = p.at("successors");
                       std::size_t        start = 0;
                       while (start <= text.size()) {
                         std::size_t stop = text.find(',', start);
                         if (stop == std::string::npos) {
                           stop = text.size();
                         }
                         std::string tok = text.substr(start, stop - start);
                         spec.successor.push_back(tok == "r" ? std::nullopt
                                                             : std::optional<std::uint32_t>(parse_uint(tok, "successor")));
                         start = stop + 1;
                       }
                       spec.threshold = thresholds;
                     }
                     return same("sandpile", p, sandpile_generators(spec));
                   }});
      r.push_back({"exchange-walk",
                   "Exchange walk on reduced words of w0 for a finite Coxeter system",
                   {{"system", "string", "A2", "Coxeter type, e.g. A2xA1, A1^3, B2, I2(5)"}},
                   [](ParamMap const& p) {
                     auto W = build_coxeter(p.at("system"));
                     return ModelInstance{"exchange-walk", p, kr_expansion_generators(W), exchange_walk_generators(W),
                                          std::move(W)};
                   }});
      return r;
    }
  }  // namespace

  std::vector<std::uint32_t> parse_uint_list(std::string const& text) {
    std::vector<std::uint32_t> out;
    std::size_t                start = 0;
    while (start <= text.size()) {
      std::size_t stop = text.find(',', start);
      if (stop == std::string::npos) {
        stop = text.size();
      }
      out.push_back(parse_uint(text.substr(start, stop - start), "list entry"));
      start = stop + 1;
    }
    return out;
  }

  std::vector<ModelSpec> const& model_registry() {
    static std::vector<ModelSpec> const registry = make_registry();
    return registry;
  }

  ModelSpec const& find_model(std::string const& name) {
    for (auto const& m : model_registry()) {
      if (m.name == name) {
        return m;
      }
    }
    raise(ErrorKind::UnknownModel, "unknown model \"" + name + "\"");
  }

  ModelInstance build_model(std::string const& name, ParamMap const& params) {
    auto const& spec = find_model(name);
    ParamMap    full;
    for (auto const& p : spec.params) {
      full[p.name] = p.default_value;
    }
    for (auto const& [key, value] : params) {
      if (!full.count(key)) {
        raise(ErrorKind::InvalidInput, "model " + name + " has no parameter \"" + key + "\"");
      }
      full[key] = value;
    }
    return spec.build(full);
  }

}  // namespace monowalk::models
