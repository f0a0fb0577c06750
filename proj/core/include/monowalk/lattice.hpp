#ifndef MONOWALK_LATTICE_HPP_
#define MONOWALK_LATTICE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "monowalk/green.hpp"
#include "monowalk/monoid.hpp"

namespace monowalk {

  using NodeId = std::uint32_t;

  // Λ(M): the principal left ideals Me, e idempotent, ordered by inclusion.
  // Nodes are numbered by their representative, the first idempotent in
  // element order generating the ideal, so node 0 is the top M·1.
  struct IdempotentLattice {
    std::vector<ElementId>               representative;
    std::vector<std::vector<bool>>       leq;  // leq[X][Y]: X ≤ Y
    std::vector<std::vector<NodeId>>     meet;
    std::vector<std::vector<std::int64_t>> moebius;  // moebius[Y][X] = μ(Y, X)
    NodeId                               top    = 0;
    NodeId                               bottom = 0;
    // c(m) = M·m^ω and d(m) per element.
    std::vector<NodeId> content;
    std::vector<NodeId> descent;

    std::size_t size() const noexcept {
      return representative.size();
    }
    bool below(NodeId x, NodeId y) const {
      return leq[x][y];
    }
    // Nodes in a linear extension of ≤ (bottom first).
    std::vector<NodeId> linear_extension() const;
  };

  // Throws NotRTrivial.
  IdempotentLattice build_lattice(FiniteMonoid const& M);

  std::vector<std::vector<std::int64_t>> moebius_table(std::vector<std::vector<bool>> const& leq);

  NodeId content_map(IdempotentLattice const& L, ElementId m);
  NodeId descent_map(IdempotentLattice const& L, ElementId m);

  // Generators g with c(g) ≥ X, by name and by index.
  std::vector<std::size_t> generator_indices_above(FiniteMonoid const&      M,
                                                   IdempotentLattice const& L,
                                                   NodeId                   X);
  std::vector<std::string> generators_above(FiniteMonoid const& M, IdempotentLattice const& L, NodeId X);

}  // namespace monowalk

#endif  // MONOWALK_LATTICE_HPP_
