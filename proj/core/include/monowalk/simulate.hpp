#ifndef MONOWALK_SIMULATE_HPP_
#define MONOWALK_SIMULATE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "monowalk/green.hpp"
#include "monowalk/monoid.hpp"
#include "monowalk/probability.hpp"
#include "monowalk/walk.hpp"

namespace monowalk {

  std::uint64_t mix64(std::uint64_t z);

  class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) : _state(seed) {}
    std::uint64_t next();

   private:
    std::uint64_t _state;
  };

  // xoshiro256**, state filled from SplitMix64(seed).
  class Xoshiro256ss {
   public:
    explicit Xoshiro256ss(std::uint64_t seed);
    std::uint64_t next();
    // Uniform on [0, 1) from the top 53 bits.
    double uniform();

   private:
    std::uint64_t _s[4];
  };

  // Trial t draws from Xoshiro256ss(seed ^ mix64(t + 1)).
  std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

  class Sampler {
   public:
    explicit Sampler(ProbabilityAssignment const& P);
    ElementId operator()(Xoshiro256ss& rng) const;

   private:
    std::vector<ElementId> _elements;
    std::vector<double>    _cumulative;
  };

  struct WalkSimulation {
    std::uint64_t              seed   = 0;
    std::size_t                trials = 0;
    std::size_t                steps  = 0;
    std::vector<std::uint64_t> final_counts;  // per state of Ω

    std::vector<double> empirical() const;
  };

  WalkSimulation simulate_walk(Action const&                action,
                               ProbabilityAssignment const& P,
                               std::uint64_t                seed,
                               std::size_t                  steps,
                               std::size_t                  trials,
                               StateIndex                   start = 0);

  struct AbsorptionSimulation {
    std::uint64_t seed      = 0;
    std::size_t   trials    = 0;
    double        mean      = 0.0;
    double        std_error = 0.0;
  };

  // Steps of the right walk on M from 1 until it enters the minimal ideal.
  AbsorptionSimulation simulate_absorption(FiniteMonoid const&          M,
                                           GreenStructure const&        G,
                                           ProbabilityAssignment const& P,
                                           std::uint64_t                seed,
                                           std::size_t                  trials,
                                           std::size_t                  max_steps = 1'000'000);

  double empirical_tv(std::vector<double> const& empirical, Distribution const& exact);

}  // namespace monowalk

#endif  // MONOWALK_SIMULATE_HPP_
