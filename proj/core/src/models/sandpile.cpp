#include "monowalk/models/sandpile.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "monowalk/error.hpp"

namespace monowalk::models {

  namespace {
    using Active = std::vector<bool>;

    // Minimum id among active vertices with no active predecessor.
    std::uint32_t first_leaf(ArborescenceSpec const& spec, Active const& active) {
      std::vector<bool> has_pred(active.size(), false);
      for (std::uint32_t v = 0; v < active.size(); ++v) {
        if (active[v] && spec.successor[v]) {
          has_pred[*spec.successor[v]] = true;
        }
      }
      for (std::uint32_t v = 0; v < active.size(); ++v) {
        if (active[v] && !has_pred[v]) {
          return v;
        }
      }
      raise(ErrorKind::InvalidInput, "no active leaf");
    }

    bool any_active(Active const& active) {
      return std::find(active.begin(), active.end(), true) != active.end();
    }

    void source(ArborescenceSpec const& spec, Configuration& t, Active active, std::uint32_t v) {
      std::uint32_t const leaf = first_leaf(spec, active);
      if (v != leaf) {
        active[leaf] = false;
        source(spec, t, std::move(active), v);
        return;
      }
      if (t[leaf] < spec.threshold[leaf]) {
        ++t[leaf];
        return;
      }
      active[leaf] = false;
      if (spec.successor[leaf] && any_active(active)) {
        source(spec, t, std::move(active), *spec.successor[leaf]);
      }
    }

    void topple(ArborescenceSpec const& spec, Configuration& t, Active active, std::uint32_t v) {
      std::uint32_t const leaf = first_leaf(spec, active);
      active[leaf]             = false;
      if (v != leaf) {
        topple(spec, t, std::move(active), v);
        return;
      }
      std::uint32_t const grains = t[leaf];
      t[leaf]                    = 0;
      if (spec.successor[leaf]) {
        for (std::uint32_t g = 0; g < grains; ++g) {
          source(spec, t, active, *spec.successor[leaf]);
        }
      }
    }

    void check_state(ArborescenceSpec const& spec, Configuration const& t, std::uint32_t v) {
      if (t.size() != spec.threshold.size() || v >= t.size()) {
        raise(ErrorKind::InvalidInput, "configuration or vertex out of range");
      }
    }
  }  // namespace

  ArborescenceSpec sandpile_path(std::vector<std::uint32_t> thresholds) {
    ArborescenceSpec spec;
    for (std::uint32_t v = 0; v < thresholds.size(); ++v) {
      spec.successor.push_back(v + 1 < thresholds.size() ? std::optional<std::uint32_t>(v + 1) : std::nullopt);
    }
    spec.threshold = std::move(thresholds);
    validate(spec);
    return spec;
  }

  void validate(ArborescenceSpec const& spec) {
    std::size_t const k = spec.successor.size();
    if (k == 0 || spec.threshold.size() != k) {
      raise(ErrorKind::InvalidInput, "arborescence needs one successor and threshold per vertex");
    }
    std::size_t roots  = 0;
    double      states = 1;
    for (std::uint32_t v = 0; v < k; ++v) {
      if (spec.threshold[v] < 1) {
        raise(ErrorKind::InvalidInput, "thresholds must be at least 1");
      }
      states *= spec.threshold[v] + 1.0;
      if (!spec.successor[v]) {
        ++roots;
      } else if (*spec.successor[v] >= k || *spec.successor[v] == v) {
        raise(ErrorKind::InvalidInput, "successor out of range");
      }
    }
    if (roots != 1) {
      raise(ErrorKind::InvalidInput, "arborescence needs exactly one root");
    }
    if (states > 200000) {
      raise(ErrorKind::InvalidInput, "sandpile limited to 200000 configurations");
    }
    for (std::uint32_t v = 0; v < k; ++v) {
      sandpile_depth(spec, v);
    }
  }

  std::size_t sandpile_depth(ArborescenceSpec const& spec, std::uint32_t v) {
    std::size_t depth = 0;
    while (spec.successor[v]) {
      v = *spec.successor[v];
      if (++depth > spec.successor.size()) {
        raise(ErrorKind::InvalidInput, "successor map has a cycle");
      }
    }
    return depth;
  }

  Configuration sandpile_source(ArborescenceSpec const& spec, Configuration t, std::uint32_t v) {
    check_state(spec, t, v);
    source(spec, t, Active(t.size(), true), v);
    return t;
  }

  Configuration sandpile_topple(ArborescenceSpec const& spec, Configuration t, std::uint32_t v) {
    check_state(spec, t, v);
    topple(spec, t, Active(t.size(), true), v);
    return t;
  }

  Configuration sandpile_source_direct(ArborescenceSpec const& spec, Configuration t, std::uint32_t v) {
    check_state(spec, t, v);
    std::optional<std::uint32_t> at = v;
    while (at) {
      if (t[*at] < spec.threshold[*at]) {
        ++t[*at];
        break;
      }
      at = spec.successor[*at];
    }
    return t;
  }

  GeneratorSet sandpile_generators(ArborescenceSpec const& spec) {
    validate(spec);
    std::size_t const          k = spec.threshold.size();
    std::vector<Configuration> states{Configuration(k, 0)};
    while (true) {
      Configuration t = states.back();
      std::size_t   i = k;
      while (i > 0 && t[i - 1] == spec.threshold[i - 1]) {
        t[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++t[i - 1];
      states.push_back(t);
    }
    std::map<Configuration, StateIndex> index;
    std::vector<std::string>            labels;
    for (std::size_t s = 0; s < states.size(); ++s) {
      index.emplace(states[s], static_cast<StateIndex>(s));
      std::string label;
      for (std::size_t v = 0; v < k; ++v) {
        label += (v ? "," : "") + std::to_string(states[s][v]);
      }
      labels.push_back(label);
    }
    std::vector<Generator> gens;
    auto add = [&](std::string name, auto op) {
      std::vector<StateIndex> targets(states.size());
      for (std::size_t s = 0; s < states.size(); ++s) {
        targets[s] = index.at(op(states[s]));
      }
      gens.push_back({std::move(name), Transformation(std::move(targets))});
    };
    for (std::uint32_t v = 0; v < k; ++v) {
      add("sigma" + std::to_string(v), [&](Configuration const& t) { return sandpile_source(spec, t, v); });
    }
    for (std::uint32_t v = 0; v < k; ++v) {
      add("tau" + std::to_string(v), [&](Configuration const& t) { return sandpile_topple(spec, t, v); });
    }
    std::vector<std::uint32_t> taus(k);
    std::iota(taus.begin(), taus.end(), 0u);
    std::stable_sort(taus.begin(), taus.end(), [&](std::uint32_t a, std::uint32_t b) {
      return sandpile_depth(spec, a) > sandpile_depth(spec, b);
    });
    std::vector<std::string> order;
    for (std::uint32_t v = 0; v < k; ++v) {
      order.push_back("sigma" + std::to_string(v));
    }
    for (auto v : taus) {
      order.push_back("tau" + std::to_string(v));
    }
    return GeneratorSet(StateSpace(std::move(labels)), std::move(gens), std::move(order));
  }

}  // namespace monowalk::models
