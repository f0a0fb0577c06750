#include "monowalk/probability.hpp"

#include <algorithm>
#include <map>

#include "monowalk/error.hpp"

namespace monowalk {

  ProbabilityAssignment::ProbabilityAssignment(std::vector<std::pair<ElementId, Rational>> weights) {
    std::map<ElementId, Rational> merged;
    Rational                      total = 0;
    for (auto& [m, w] : weights) {
      if (sgn(w) <= 0) {
        raise(ErrorKind::InvalidInput, "probability weights must be positive");
      }
      merged[m] += w;
      total += w;
    }
    if (merged.empty()) {
      raise(ErrorKind::InvalidInput, "probability needs a nonempty support");
    }
    if (total != 1) {
      raise(ErrorKind::InvalidInput, "probability weights sum to " + to_string(total) + ", not 1");
    }
    _entries.assign(merged.begin(), merged.end());
  }

  ProbabilityAssignment ProbabilityAssignment::from_generator_weights(
      FiniteMonoid const& M, std::vector<Rational> const& weights) {
    if (weights.size() != M.generator_count()) {
      raise(ErrorKind::DimensionMismatch, "need one weight per generator");
    }
    std::vector<std::pair<ElementId, Rational>> w;
    for (std::size_t g = 0; g < weights.size(); ++g) {
      w.emplace_back(M.generator_element(g), weights[g]);
    }
    return ProbabilityAssignment(std::move(w));
  }

  std::vector<ElementId> ProbabilityAssignment::support() const {
    std::vector<ElementId> out;
    for (auto const& e : _entries) {
      out.push_back(e.first);
    }
    return out;
  }

  Rational ProbabilityAssignment::weight(ElementId m) const {
    auto it = std::lower_bound(_entries.begin(), _entries.end(), m,
                               [](auto const& e, ElementId x) { return e.first < x; });
    if (it == _entries.end() || it->first != m) {
      return 0;
    }
    return it->second;
  }

  std::vector<Rational> generic_probability(std::size_t k, ProbabilityScheme scheme) {
    if (k == 0) {
      raise(ErrorKind::InvalidInput, "no generators to weight");
    }
    std::vector<Rational> out;
    if (scheme == ProbabilityScheme::Uniform) {
      out.assign(k, Rational(1, static_cast<unsigned long>(k)));
      return out;
    }
    Integer denom = (Integer(1) << static_cast<mp_bitcnt_t>(k)) - 1;
    for (std::size_t i = 0; i < k; ++i) {
      Rational q(Integer(1) << static_cast<mp_bitcnt_t>(i), denom);
      q.canonicalize();
      out.push_back(q);
    }
    return out;
  }

  bool is_adapted(FiniteMonoid const& M, GreenStructure const& G, ProbabilityAssignment const& P) {
    auto sub = generated_submonoid(M, P.support());
    std::vector<bool> in(M.size(), false);
    for (auto m : sub) {
      in[m] = true;
    }
    return std::all_of(G.minimal_ideal.begin(), G.minimal_ideal.end(),
                       [&](ElementId m) { return in[m]; });
  }

}  // namespace monowalk
