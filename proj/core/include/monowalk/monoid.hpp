#ifndef MONOWALK_MONOID_HPP_
#define MONOWALK_MONOID_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monowalk/transformation.hpp"

namespace monowalk {

  using ElementId = std::uint32_t;

  // The transformation monoid generated by a GeneratorSet.  Elements are
  // listed in breadth-first order of their witness words (length, then
  // generator order); element 0 is the identity and every witness word is the
  // shortlex-least word evaluating to its element.
  class FiniteMonoid {
   public:
    static constexpr std::size_t default_cap = 200000;

    FiniteMonoid() = default;

    std::size_t size() const noexcept {
      return _parent.size();
    }
    std::size_t degree() const noexcept {
      return _degree;
    }
    std::size_t generator_count() const noexcept {
      return _gens.size();
    }
    GeneratorSet const& generators() const noexcept {
      return _gens;
    }

    std::span<StateIndex const> element(ElementId m) const {
      return {_data.data() + static_cast<std::size_t>(m) * _degree, _degree};
    }
    Transformation transformation(ElementId m) const;

    // m·g and g·m.
    ElementId right(ElementId m, std::size_t g) const {
      return _right[static_cast<std::size_t>(m) * _gens.size() + g];
    }
    ElementId left(ElementId m, std::size_t g) const {
      return _left[static_cast<std::size_t>(m) * _gens.size() + g];
    }

    std::size_t length(ElementId m) const {
      return _length[m];
    }
    Word      witness_word(ElementId m) const;
    ElementId generator_element(std::size_t g) const {
      return _generator_element[g];
    }

    std::optional<ElementId> find(std::span<StateIndex const> targets) const;
    std::optional<ElementId> find(Transformation const& t) const {
      return find(std::span<StateIndex const>(t.targets()));
    }
    ElementId product(ElementId a, ElementId b) const;
    ElementId evaluate(Word const& word) const;

    bool is_identity(ElementId m) const {
      return m == 0;
    }
    bool        is_constant(ElementId m) const;
    bool        is_idempotent(ElementId m) const;
    std::size_t fixed_point_count(ElementId m) const;

    std::string element_label(ElementId m) const;

    friend FiniteMonoid close_monoid(GeneratorSet const& gens, std::size_t cap);

   private:
    void        insert_slot(ElementId id);
    std::size_t slot_of(std::span<StateIndex const> targets) const;

    GeneratorSet             _gens;
    std::size_t              _degree = 0;
    std::vector<StateIndex>  _data;
    std::vector<ElementId>   _parent;
    std::vector<std::uint32_t> _last;
    std::vector<std::size_t> _length;
    std::vector<ElementId>   _right;
    std::vector<ElementId>   _left;
    std::vector<ElementId>   _generator_element;
    std::vector<std::uint32_t> _slots;
  };

  // Throws CapExceeded if the closure has more than `cap` elements.
  FiniteMonoid close_monoid(GeneratorSet const& gens,
                            std::size_t         cap = FiniteMonoid::default_cap);

  // Human-readable word: generator names joined by '.', "1" for the identity.
  std::string word_label(GeneratorSet const& gens, Word const& word);

  // An action of M on some state space Ω', given by one map per generator and
  // extended along witness words.  The constructor checks that the maps factor
  // through M (act(m·g) = act(m) ∘ act(g) for every m and g).
  class Action {
   public:
    Action() = default;
    Action(FiniteMonoid const& M, StateSpace states, std::vector<Transformation> maps);
    Action(FiniteMonoid const& M, GeneratorSet const& on_states);
    static Action self(FiniteMonoid const& M);

    StateSpace const& states() const noexcept {
      return _states;
    }
    std::size_t size() const noexcept {
      return _states.size();
    }
    std::span<StateIndex const> map(ElementId m) const {
      return {_data.data() + static_cast<std::size_t>(m) * _states.size(), _states.size()};
    }
    StateIndex image(ElementId m, StateIndex b) const {
      return _data[static_cast<std::size_t>(m) * _states.size() + b];
    }
    bool        is_constant(ElementId m) const;
    std::size_t fixed_point_count(ElementId m) const;

   private:
    StateSpace              _states;
    std::vector<StateIndex> _data;
  };

  // Generators of M acting on M's own elements by left multiplication.
  GeneratorSet left_regular_generators(FiniteMonoid const& M);

}  // namespace monowalk

#endif  // MONOWALK_MONOID_HPP_
