#include "monowalk/transformation.hpp"

#include <algorithm>
#include <unordered_set>

#include "monowalk/error.hpp"

namespace monowalk {

  StateSpace::StateSpace(std::vector<std::string> labels)
      : _labels(std::move(labels)) {
    if (_labels.empty()) {
      raise(ErrorKind::InvalidInput, "a state space needs at least one state");
    }
    for (StateIndex i = 0; i < _labels.size(); ++i) {
      if (!_index.emplace(_labels[i], i).second) {
        raise(ErrorKind::InvalidInput, "duplicate state label \"" + _labels[i] + "\"");
      }
    }
  }

  StateSpace StateSpace::anonymous(std::size_t size) {
    std::vector<std::string> labels;
    labels.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
      labels.push_back(std::to_string(i));
    }
    return StateSpace(std::move(labels));
  }

  std::optional<StateIndex> StateSpace::index_of(std::string const& label) const {
    auto it = _index.find(label);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Transformation::Transformation(std::vector<StateIndex> targets)
      : _targets(std::move(targets)) {
    for (auto t : _targets) {
      if (t >= _targets.size()) {
        raise(ErrorKind::InvalidInput, "transformation target out of range");
      }
    }
  }

  Transformation Transformation::identity(std::size_t n) {
    std::vector<StateIndex> t(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = static_cast<StateIndex>(i);
    }
    return Transformation(std::move(t));
  }

  Transformation Transformation::constant(std::size_t n, StateIndex value) {
    return Transformation(std::vector<StateIndex>(n, value));
  }

  bool Transformation::is_identity() const noexcept {
    for (std::size_t i = 0; i < _targets.size(); ++i) {
      if (_targets[i] != i) {
        return false;
      }
    }
    return true;
  }

  bool Transformation::is_constant() const noexcept {
    return std::adjacent_find(_targets.begin(), _targets.end(), std::not_equal_to<>())
           == _targets.end();
  }

  bool Transformation::is_idempotent() const {
    for (auto t : _targets) {
      if (_targets[t] != t) {
        return false;
      }
    }
    return true;
  }

  std::size_t Transformation::fixed_point_count() const noexcept {
    std::size_t count = 0;
    for (std::size_t i = 0; i < _targets.size(); ++i) {
      count += (_targets[i] == i);
    }
    return count;
  }

  Transformation compose(Transformation const& f, Transformation const& g) {
    if (f.degree() != g.degree()) {
      raise(ErrorKind::DimensionMismatch, "composing maps of different degree");
    }
    std::vector<StateIndex> t(g.degree());
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = f[g[i]];
    }
    return Transformation(std::move(t));
  }

  Transformation power(Transformation const& f, std::size_t exponent) {
    Transformation result = Transformation::identity(f.degree());
    for (std::size_t i = 0; i < exponent; ++i) {
      result = compose(result, f);
    }
    return result;
  }

  GeneratorSet::GeneratorSet(StateSpace                              states,
                             std::vector<Generator>                  generators,
                             std::optional<std::vector<std::string>> tree_order)
      : _states(std::move(states)),
        _generators(std::move(generators)),
        _tree_order(std::move(tree_order)) {
    std::unordered_set<std::string> seen;
    for (auto const& g : _generators) {
      if (!seen.insert(g.name).second) {
        raise(ErrorKind::InvalidInput, "duplicate generator name \"" + g.name + "\"");
      }
      if (g.map.degree() != _states.size()) {
        raise(ErrorKind::DimensionMismatch,
              "generator \"" + g.name + "\" does not act on the state space");
      }
    }
    if (_tree_order) {
      if (_tree_order->size() != _generators.size()) {
        raise(ErrorKind::InvalidInput, "tree order must list every generator once");
      }
      std::unordered_set<std::string> listed(_tree_order->begin(), _tree_order->end());
      if (listed.size() != _generators.size()) {
        raise(ErrorKind::InvalidInput, "tree order repeats a generator");
      }
      for (auto const& name : *_tree_order) {
        if (!seen.count(name)) {
          raise(ErrorKind::InvalidInput, "tree order names unknown generator \"" + name + "\"");
        }
      }
    }
  }

  std::vector<std::string> GeneratorSet::names() const {
    std::vector<std::string> out;
    out.reserve(_generators.size());
    for (auto const& g : _generators) {
      out.push_back(g.name);
    }
    return out;
  }

  std::optional<std::size_t> GeneratorSet::index_of(std::string const& name) const {
    for (std::size_t i = 0; i < _generators.size(); ++i) {
      if (_generators[i].name == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::vector<std::size_t> GeneratorSet::tree_order_indices() const {
    if (!_tree_order) {
      raise(ErrorKind::InvalidInput, "generator set has no tree order");
    }
    std::vector<std::size_t> out;
    for (auto const& name : *_tree_order) {
      out.push_back(*index_of(name));
    }
    return out;
  }

  Transformation evaluate(GeneratorSet const& gens, Word const& word) {
    Transformation result = Transformation::identity(gens.states().size());
    for (auto g : word) {
      result = compose(result, gens[g].map);
    }
    return result;
  }

}  // namespace monowalk
