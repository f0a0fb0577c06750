#include "monowalk/monoid.hpp"

#include <algorithm>

#include "monowalk/error.hpp"

namespace monowalk {

  namespace {
    std::uint64_t hash_targets(std::span<StateIndex const> t) {
      std::uint64_t h = 0x9E3779B97F4A7C15ull;
      for (auto x : t) {
        h ^= x + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        h *= 0xBF58476D1CE4E5B9ull;
      }
      return h ^ (h >> 31);
    }
  }  // namespace

  Transformation FiniteMonoid::transformation(ElementId m) const {
    auto s = element(m);
    return Transformation(std::vector<StateIndex>(s.begin(), s.end()));
  }

  Word FiniteMonoid::witness_word(ElementId m) const {
    Word w;
    while (m != 0) {
      w.push_back(_last[m]);
      m = _parent[m];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  std::size_t FiniteMonoid::slot_of(std::span<StateIndex const> targets) const {
    std::size_t mask = _slots.size() - 1;
    std::size_t i    = hash_targets(targets) & mask;
    while (_slots[i] != 0) {
      auto other = element(_slots[i] - 1);
      if (std::equal(other.begin(), other.end(), targets.begin())) {
        return i;
      }
      i = (i + 1) & mask;
    }
    return i;
  }

  void FiniteMonoid::insert_slot(ElementId id) {
    if (2 * (size() + 1) > _slots.size()) {
      std::vector<std::uint32_t> old = std::move(_slots);
      _slots.assign(std::max<std::size_t>(16, old.size() * 2), 0);
      for (auto s : old) {
        if (s != 0) {
          _slots[slot_of(element(s - 1))] = s;
        }
      }
    }
    _slots[slot_of(element(id))] = id + 1;
  }

  std::optional<ElementId> FiniteMonoid::find(std::span<StateIndex const> targets) const {
    if (targets.size() != _degree || _slots.empty()) {
      return std::nullopt;
    }
    auto s = _slots[slot_of(targets)];
    if (s == 0) {
      return std::nullopt;
    }
    return s - 1;
  }

  ElementId FiniteMonoid::product(ElementId a, ElementId b) const {
    std::vector<StateIndex> t(_degree);
    auto                    ea = element(a);
    auto                    eb = element(b);
    for (std::size_t i = 0; i < _degree; ++i) {
      t[i] = ea[eb[i]];
    }
    return *find(t);
  }

  ElementId FiniteMonoid::evaluate(Word const& word) const {
    ElementId m = 0;
    for (auto g : word) {
      m = right(m, g);
    }
    return m;
  }

  bool FiniteMonoid::is_constant(ElementId m) const {
    auto e = element(m);
    return std::adjacent_find(e.begin(), e.end(), std::not_equal_to<>()) == e.end();
  }

  bool FiniteMonoid::is_idempotent(ElementId m) const {
    auto e = element(m);
    for (auto t : e) {
      if (e[t] != t) {
        return false;
      }
    }
    return true;
  }

  std::size_t FiniteMonoid::fixed_point_count(ElementId m) const {
    auto        e     = element(m);
    std::size_t count = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      count += (e[i] == i);
    }
    return count;
  }

  std::string FiniteMonoid::element_label(ElementId m) const {
    return word_label(_gens, witness_word(m));
  }

  FiniteMonoid close_monoid(GeneratorSet const& gens, std::size_t cap) {
    FiniteMonoid M;
    M._gens        = gens;
    M._degree      = gens.states().size();
    std::size_t const n = M._degree;
    std::size_t const k = gens.size();

    auto add = [&](std::vector<StateIndex> const& t, ElementId parent, std::uint32_t last,
                   std::size_t length) {
      if (M.size() >= cap) {
        raise(ErrorKind::CapExceeded,
              "monoid closure exceeds the cap of " + std::to_string(cap) + " elements");
      }
      ElementId id = static_cast<ElementId>(M.size());
      M._data.insert(M._data.end(), t.begin(), t.end());
      M._parent.push_back(parent);
      M._last.push_back(last);
      M._length.push_back(length);
      M.insert_slot(id);
      return id;
    };

    add(Transformation::identity(n).targets(), 0, 0, 0);
    std::vector<StateIndex> t(n);
    for (ElementId m = 0; m < M.size(); ++m) {
      for (std::size_t g = 0; g < k; ++g) {
        auto const& gm = gens[g].map;
        for (std::size_t i = 0; i < n; ++i) {
          t[i] = M._data[static_cast<std::size_t>(m) * n + gm[static_cast<StateIndex>(i)]];
        }
        auto found = M.find(t);
        ElementId id = found ? *found
                             : add(t, m, static_cast<std::uint32_t>(g), M._length[m] + 1);
        M._right.push_back(id);
      }
    }
    M._left.resize(M.size() * k);
    for (ElementId m = 0; m < M.size(); ++m) {
      for (std::size_t g = 0; g < k; ++g) {
        auto const& gm = gens[g].map;
        for (std::size_t i = 0; i < n; ++i) {
          t[i] = gm[M._data[static_cast<std::size_t>(m) * n + i]];
        }
        M._left[static_cast<std::size_t>(m) * k + g] = *M.find(t);
      }
    }
    for (std::size_t g = 0; g < k; ++g) {
      M._generator_element.push_back(M.right(0, g));
    }
    return M;
  }

  std::string word_label(GeneratorSet const& gens, Word const& word) {
    if (word.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i > 0) {
        out += '.';
      }
      out += gens[word[i]].name;
    }
    return out;
  }

  Action::Action(FiniteMonoid const& M, StateSpace states, std::vector<Transformation> maps)
      : _states(std::move(states)) {
    std::size_t const n = _states.size();
    std::size_t const k = M.generator_count();
    if (maps.size() != k) {
      raise(ErrorKind::DimensionMismatch, "an action needs one map per generator");
    }
    for (auto const& f : maps) {
      if (f.degree() != n) {
        raise(ErrorKind::DimensionMismatch, "action map does not act on the given states");
      }
    }
    _data.resize(M.size() * n);
    auto id = Transformation::identity(n);
    std::copy(id.targets().begin(), id.targets().end(), _data.begin());
    std::vector<bool> done(M.size(), false);
    done[0] = true;
    for (ElementId m = 0; m < M.size(); ++m) {
      for (std::size_t g = 0; g < k; ++g) {
        ElementId mg  = M.right(m, g);
        auto      src = map(m);
        if (!done[mg]) {
          // BFS order guarantees the parent of mg is settled before mg.
          for (std::size_t i = 0; i < n; ++i) {
            _data[static_cast<std::size_t>(mg) * n + i] = src[maps[g][static_cast<StateIndex>(i)]];
          }
          done[mg] = true;
        } else {
          for (std::size_t i = 0; i < n; ++i) {
            if (_data[static_cast<std::size_t>(mg) * n + i] != src[maps[g][static_cast<StateIndex>(i)]]) {
              raise(ErrorKind::InvalidInput,
                    "action maps do not factor through the monoid (element "
                        + M.element_label(mg) + ")");
            }
          }
        }
      }
    }
  }

  Action::Action(FiniteMonoid const& M, GeneratorSet const& on_states)
      : Action(M, on_states.states(), [&] {
          if (on_states.names() != M.generators().names()) {
            raise(ErrorKind::InvalidInput, "action generators must match the monoid's generators");
          }
          std::vector<Transformation> maps;
          for (auto const& g : on_states.generators()) {
            maps.push_back(g.map);
          }
          return maps;
        }()) {}

  Action Action::self(FiniteMonoid const& M) {
    std::vector<Transformation> maps;
    for (auto const& g : M.generators().generators()) {
      maps.push_back(g.map);
    }
    return Action(M, M.generators().states(), std::move(maps));
  }

  bool Action::is_constant(ElementId m) const {
    auto e = map(m);
    return std::adjacent_find(e.begin(), e.end(), std::not_equal_to<>()) == e.end();
  }

  std::size_t Action::fixed_point_count(ElementId m) const {
    auto        e     = map(m);
    std::size_t count = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      count += (e[i] == i);
    }
    return count;
  }

  GeneratorSet left_regular_generators(FiniteMonoid const& M) {
    std::vector<std::string> labels;
    for (ElementId m = 0; m < M.size(); ++m) {
      labels.push_back(M.element_label(m));
    }
    std::vector<Generator> gens;
    for (std::size_t g = 0; g < M.generator_count(); ++g) {
      std::vector<StateIndex> t(M.size());
      for (ElementId m = 0; m < M.size(); ++m) {
        t[m] = M.left(m, g);
      }
      gens.push_back({M.generators()[g].name, Transformation(std::move(t))});
    }
    return GeneratorSet(StateSpace(std::move(labels)), std::move(gens),
                        M.generators().tree_order());
  }

}  // namespace monowalk
