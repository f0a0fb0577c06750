#ifndef MONOWALK_TRANSFORMATION_HPP_
#define MONOWALK_TRANSFORMATION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace monowalk {

  using StateIndex = std::uint32_t;

  class StateSpace {
   public:
    StateSpace() = default;
    // Labels must be nonempty and pairwise distinct.
    explicit StateSpace(std::vector<std::string> labels);
    static StateSpace anonymous(std::size_t size);

    std::size_t size() const noexcept {
      return _labels.size();
    }
    std::string const& label(StateIndex i) const {
      return _labels.at(i);
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::optional<StateIndex> index_of(std::string const& label) const;

   private:
    std::vector<std::string>                    _labels;
    std::unordered_map<std::string, StateIndex> _index;
  };

  // A total self-map of {0, ..., n-1}; targets[b] is the image of b.
  class Transformation {
   public:
    Transformation() = default;
    explicit Transformation(std::vector<StateIndex> targets);
    static Transformation identity(std::size_t n);
    static Transformation constant(std::size_t n, StateIndex value);

    std::size_t degree() const noexcept {
      return _targets.size();
    }
    StateIndex operator[](StateIndex b) const {
      return _targets[b];
    }
    std::vector<StateIndex> const& targets() const noexcept {
      return _targets;
    }

    bool is_identity() const noexcept;
    bool is_constant() const noexcept;
    bool is_idempotent() const;
    std::size_t fixed_point_count() const noexcept;

    bool operator==(Transformation const&) const = default;

   private:
    std::vector<StateIndex> _targets;
  };

  // (f ∘ g)(b) = f(g(b)): apply g first.  This is the monoid product f·g.
  Transformation compose(Transformation const& f, Transformation const& g);
  Transformation power(Transformation const& f, std::size_t exponent);

  struct Generator {
    std::string    name;
    Transformation map;
  };

  class GeneratorSet {
   public:
    GeneratorSet() = default;
    GeneratorSet(StateSpace states,
                 std::vector<Generator> generators,
                 std::optional<std::vector<std::string>> tree_order = std::nullopt);

    StateSpace const& states() const noexcept {
      return _states;
    }
    std::size_t size() const noexcept {
      return _generators.size();
    }
    Generator const& operator[](std::size_t i) const {
      return _generators.at(i);
    }
    std::vector<Generator> const& generators() const noexcept {
      return _generators;
    }
    std::vector<std::string> names() const;
    std::optional<std::size_t> index_of(std::string const& name) const;

    std::optional<std::vector<std::string>> const& tree_order() const noexcept {
      return _tree_order;
    }
    // Generator indices in tree order; throws if no tree order was given.
    std::vector<std::size_t> tree_order_indices() const;

   private:
    StateSpace                              _states;
    std::vector<Generator>                  _generators;
    std::optional<std::vector<std::string>> _tree_order;
  };

  // Generator words are sequences of generator indices; a word w1...wk
  // evaluates to g_{w1} ∘ ... ∘ g_{wk}, so the last letter acts first.
  using Word = std::vector<std::uint32_t>;

  Transformation evaluate(GeneratorSet const& gens, Word const& word);

}  // namespace monowalk

#endif  // MONOWALK_TRANSFORMATION_HPP_
