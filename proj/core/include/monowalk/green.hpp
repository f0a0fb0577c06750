#ifndef MONOWALK_GREEN_HPP_
#define MONOWALK_GREEN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monowalk/monoid.hpp"

namespace monowalk {

  // Strongly connected components of a directed graph given as adjacency
  // lists; components are numbered in reverse topological order (sinks first).
  std::vector<std::uint32_t> strongly_connected_components(
      std::vector<std::vector<std::uint32_t>> const& adjacency,
      std::uint32_t&                                 component_count);

  struct GreenStructure {
    std::vector<std::uint32_t> r_class_of;
    std::vector<std::uint32_t> l_class_of;
    std::size_t                r_class_count = 0;
    std::size_t                l_class_count = 0;
    // Covering data of the class orders: edge a -> b means class b lies
    // strictly below class a (reached by one right/left multiplication).
    std::vector<std::vector<std::uint32_t>> r_order;
    std::vector<std::vector<std::uint32_t>> l_order;
    std::vector<ElementId>                  minimal_ideal;
    std::vector<ElementId>                  idempotents;

    bool in_minimal_ideal(ElementId m) const;
    // Reachability in the class orders (reflexive).
    bool r_below(std::uint32_t lower, std::uint32_t upper) const;
    bool l_below(std::uint32_t lower, std::uint32_t upper) const;

    std::vector<bool> minimal_ideal_mask;
  };

  GreenStructure green_structure(FiniteMonoid const& M);

  bool      is_r_trivial(FiniteMonoid const& M);
  // (xy)^ω x = (xy)^ω for all x, y: the equational characterisation.
  bool      satisfies_r_trivial_identity(FiniteMonoid const& M);
  bool      is_aperiodic(FiniteMonoid const& M);
  bool      is_left_regular_band(FiniteMonoid const& M);
  ElementId idempotent_power(FiniteMonoid const& M, ElementId m);
  std::vector<ElementId> idempotent_powers(FiniteMonoid const& M);

  // With respect to the generating set `generators` (element ids, in order):
  // the right Cayley graph minus loops must be a tree rooted at 1.
  bool is_karnofsky_rhodes(FiniteMonoid const& M, std::vector<ElementId> const& generators);
  bool is_karnofsky_rhodes(FiniteMonoid const& M);

  struct TreeMonoidCertificate {
    bool                        holds = true;
    std::string                 reason;
    std::optional<std::size_t>  x;  // generator indices of the violation
    std::optional<std::size_t>  y;
  };

  // Every generator eventually idempotent, and for x < y in tree order either
  // xy = yx, or y is idempotent and yxy = yx.
  TreeMonoidCertificate check_generalized_tree_monoid(GeneratorSet const&             gens,
                                                      std::vector<std::size_t> const& tree_order);
  TreeMonoidCertificate check_generalized_tree_monoid(GeneratorSet const& gens);

  std::vector<ElementId> constant_elements(FiniteMonoid const& M);

  // Elements of ⟨support⟩ ⊆ M, in element order.
  std::vector<ElementId> generated_submonoid(FiniteMonoid const& M,
                                             std::vector<ElementId> const& support);

}  // namespace monowalk

#endif  // MONOWALK_GREEN_HPP_
