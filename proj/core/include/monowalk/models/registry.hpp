#ifndef MONOWALK_MODELS_REGISTRY_HPP_
#define MONOWALK_MODELS_REGISTRY_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monowalk/coxeter.hpp"
#include "monowalk/transformation.hpp"

namespace monowalk::models {

  struct ParamSpec {
    std::string name;
    std::string type;  // "int", "int-list", "string"
    std::string default_value;
    std::string description;
  };

  using ParamMap = std::map<std::string, std::string>;

  // `monoid` generates M; `states` is the same alphabet acting on Ω and must
  // factor through M.  They coincide except for tsetlin (free LRB acting on
  // shelf orders) and exchange-walk (the expansion acting on R(w0)).
  struct ModelInstance {
    std::string                  model;
    ParamMap                     params;  // defaults filled in
    GeneratorSet                 monoid;
    GeneratorSet                 states;
    std::optional<CoxeterSystem> coxeter;
  };

  struct ModelSpec {
    std::string                                   name;
    std::string                                   description;
    std::vector<ParamSpec>                        params;
    std::function<ModelInstance(ParamMap const&)> build;
  };

  // tsetlin, toom-fixed, toom-loan, free-tree, sandpile, exchange-walk.
  std::vector<ModelSpec> const& model_registry();

  // Throws UnknownModel.
  ModelSpec const& find_model(std::string const& name);

  // Fills defaults and rejects unknown parameters (InvalidInput).
  ModelInstance build_model(std::string const& name, ParamMap const& params = {});

  std::vector<std::uint32_t> parse_uint_list(std::string const& text);

}  // namespace monowalk::models

#endif  // MONOWALK_MODELS_REGISTRY_HPP_
