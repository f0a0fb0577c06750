#ifndef MONOWALK_MODELS_SANDPILE_HPP_
#define MONOWALK_MODELS_SANDPILE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "monowalk/transformation.hpp"

namespace monowalk::models {

  // successor[v] is s(v), empty for the root.  Exactly one root.
  struct ArborescenceSpec {
    std::vector<std::optional<std::uint32_t>> successor;
    std::vector<std::uint32_t>                threshold;  // T_v ≥ 1
  };

  // Vertices 0..k−1 with s(v) = v + 1; the last vertex is the root.
  ArborescenceSpec sandpile_path(std::vector<std::uint32_t> thresholds);

  // Throws InvalidInput unless successors form a tree oriented to the root.
  void validate(ArborescenceSpec const& spec);

  using Configuration = std::vector<std::uint32_t>;

  // The defining recursion on the minimum-id leaf.
  Configuration sandpile_source(ArborescenceSpec const& spec, Configuration t, std::uint32_t v);
  Configuration sandpile_topple(ArborescenceSpec const& spec, Configuration t, std::uint32_t v);

  // Path description: a grain stops at the first vertex below threshold on
  // the way to the root.
  Configuration sandpile_source_direct(ArborescenceSpec const& spec, Configuration t, std::uint32_t v);

  // σ_v ("sigma<v>") for every v, then τ_v ("tau<v>") by decreasing depth,
  // ties by id.  This declared tree order puts σ_v < τ_u and τ_v < τ_u when u
  // lies on the path from v to the root.  States are configurations in
  // lexicographic order, labelled "t0,t1,…".
  GeneratorSet sandpile_generators(ArborescenceSpec const& spec);

  // Depth of v: number of edges to the root.
  std::size_t sandpile_depth(ArborescenceSpec const& spec, std::uint32_t v);

}  // namespace monowalk::models

#endif  // MONOWALK_MODELS_SANDPILE_HPP_
