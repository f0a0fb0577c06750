#include "monowalk/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "monowalk/error.hpp"

namespace monowalk {

  GeneratorSet parse_generator_set(std::string const& json_text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(json_text);
    } catch (nlohmann::json::parse_error const& e) {
      raise(ErrorKind::InvalidInput, std::string("generator set is not valid JSON: ") + e.what());
    }
    try {
      if (!doc.is_object() || !doc.contains("states") || !doc.contains("generators")) {
        raise(ErrorKind::InvalidInput, "generator set needs \"states\" and \"generators\"");
      }
      std::vector<std::string> labels;
      for (auto const& s : doc.at("states")) {
        labels.push_back(s.is_string() ? s.get<std::string>() : s.dump());
      }
      StateSpace             states(std::move(labels));
      std::vector<Generator> gens;
      for (auto const& g : doc.at("generators")) {
        std::vector<StateIndex> targets;
        for (auto const& t : g.at("targets")) {
          if (!t.is_number_integer() || t.get<long long>() < 0
              || static_cast<std::size_t>(t.get<long long>()) >= states.size()) {
            raise(ErrorKind::InvalidInput, "target out of range in generator " + g.at("name").dump());
          }
          targets.push_back(static_cast<StateIndex>(t.get<long long>()));
        }
        if (targets.size() != states.size()) {
          raise(ErrorKind::DimensionMismatch,
                "generator " + g.at("name").get<std::string>() + " has the wrong number of targets");
        }
        gens.push_back({g.at("name").get<std::string>(), Transformation(std::move(targets))});
      }
      std::optional<std::vector<std::string>> order;
      if (doc.contains("tree_order") && !doc.at("tree_order").is_null()) {
        order = doc.at("tree_order").get<std::vector<std::string>>();
      }
      return GeneratorSet(std::move(states), std::move(gens), std::move(order));
    } catch (nlohmann::json::exception const& e) {
      raise(ErrorKind::InvalidInput, std::string("malformed generator set: ") + e.what());
    }
  }

  GeneratorSet read_generator_set(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      raise(ErrorKind::InvalidInput, "cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_generator_set(buf.str());
  }

  std::string generator_set_to_json(GeneratorSet const& gens) {
    nlohmann::ordered_json doc;
    doc["states"] = gens.states().labels();
    auto arr      = nlohmann::ordered_json::array();
    for (auto const& g : gens.generators()) {
      arr.push_back({{"name", g.name}, {"targets", g.map.targets()}});
    }
    doc["generators"] = arr;
    if (gens.tree_order()) {
      doc["tree_order"] = *gens.tree_order();
    }
    return doc.dump(2);
  }

}  // namespace monowalk
