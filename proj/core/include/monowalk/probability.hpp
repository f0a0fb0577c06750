#ifndef MONOWALK_PROBABILITY_HPP_
#define MONOWALK_PROBABILITY_HPP_

#include <string>
#include <utility>
#include <vector>

#include "monowalk/green.hpp"
#include "monowalk/monoid.hpp"
#include "monowalk/rational.hpp"

namespace monowalk {

  // A probability on the elements of a monoid: positive weights summing to 1
  // exactly.  Entries are kept sorted by element id with duplicates merged.
  class ProbabilityAssignment {
   public:
    ProbabilityAssignment() = default;
    explicit ProbabilityAssignment(std::vector<std::pair<ElementId, Rational>> weights);

    // Weight i goes to the element of generator i; generators with equal maps
    // pool their weight on the shared element.
    static ProbabilityAssignment from_generator_weights(FiniteMonoid const&          M,
                                                        std::vector<Rational> const& weights);

    std::vector<std::pair<ElementId, Rational>> const& entries() const noexcept {
      return _entries;
    }
    std::vector<ElementId> support() const;
    Rational               weight(ElementId m) const;

   private:
    std::vector<std::pair<ElementId, Rational>> _entries;
  };

  enum class ProbabilityScheme { Uniform, Powers };

  // Per-generator weights: uniform 1/k, or 2^i/(2^k − 1) (distinct subset sums).
  std::vector<Rational> generic_probability(std::size_t generator_count, ProbabilityScheme scheme);

  // ⟨supp P⟩ contains the minimal ideal.
  bool is_adapted(FiniteMonoid const& M, GreenStructure const& G, ProbabilityAssignment const& P);

}  // namespace monowalk

#endif  // MONOWALK_PROBABILITY_HPP_
