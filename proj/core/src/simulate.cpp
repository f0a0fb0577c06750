#include "monowalk/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "monowalk/error.hpp"

namespace monowalk {

  std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t SplitMix64::next() {
    _state += 0x9e3779b97f4a7c15ULL;
    return mix64(_state);
  }

  namespace {
    std::uint64_t rotl(std::uint64_t x, int k) {
      return (x << k) | (x >> (64 - k));
    }
  }  // namespace

  Xoshiro256ss::Xoshiro256ss(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& s : _s) {
      s = sm.next();
    }
  }

  std::uint64_t Xoshiro256ss::next() {
    std::uint64_t const result = rotl(_s[1] * 5, 7) * 9;
    std::uint64_t const t      = _s[1] << 17;
    _s[2] ^= _s[0];
    _s[3] ^= _s[1];
    _s[1] ^= _s[2];
    _s[0] ^= _s[3];
    _s[2] ^= t;
    _s[3] = rotl(_s[3], 45);
    return result;
  }

  double Xoshiro256ss::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return seed ^ mix64(trial + 1);
  }

  Sampler::Sampler(ProbabilityAssignment const& P) {
    double acc = 0.0;
    for (auto const& [m, w] : P.entries()) {
      acc += to_double(w);
      _elements.push_back(m);
      _cumulative.push_back(acc);
    }
    if (_elements.empty()) {
      raise(ErrorKind::InvalidInput, "cannot sample from an empty probability");
    }
  }

  ElementId Sampler::operator()(Xoshiro256ss& rng) const {
    double const u  = rng.uniform() * _cumulative.back();
    auto         it = std::upper_bound(_cumulative.begin(), _cumulative.end(), u);
    if (it == _cumulative.end()) {
      --it;
    }
    return _elements[static_cast<std::size_t>(it - _cumulative.begin())];
  }

  std::vector<double> WalkSimulation::empirical() const {
    std::vector<double> out(final_counts.size(), 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = trials == 0 ? 0.0 : static_cast<double>(final_counts[i]) / static_cast<double>(trials);
    }
    return out;
  }

  WalkSimulation simulate_walk(Action const&                action,
                               ProbabilityAssignment const& P,
                               std::uint64_t                seed,
                               std::size_t                  steps,
                               std::size_t                  trials,
                               StateIndex                   start) {
    if (start >= action.size()) {
      raise(ErrorKind::InvalidInput, "start state out of range");
    }
    Sampler        sample(P);
    WalkSimulation out{seed, trials, steps, std::vector<std::uint64_t>(action.size(), 0)};
    for (std::size_t t = 0; t < trials; ++t) {
      Xoshiro256ss rng(trial_seed(seed, t));
      StateIndex   state = start;
      for (std::size_t s = 0; s < steps; ++s) {
        state = action.image(sample(rng), state);
      }
      ++out.final_counts[state];
    }
    return out;
  }

  AbsorptionSimulation simulate_absorption(FiniteMonoid const&          M,
                                           GreenStructure const&        G,
                                           ProbabilityAssignment const& P,
                                           std::uint64_t                seed,
                                           std::size_t                  trials,
                                           std::size_t                  max_steps) {
    Sampler sample(P);
    double  sum = 0.0, sum_sq = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      Xoshiro256ss rng(trial_seed(seed, t));
      ElementId    m     = 0;
      std::size_t  steps = 0;
      while (!G.in_minimal_ideal(m)) {
        if (++steps > max_steps) {
          raise(ErrorKind::BudgetExceeded, "absorption not reached within the step budget");
        }
        m = M.product(m, sample(rng));
      }
      sum += static_cast<double>(steps);
      sum_sq += static_cast<double>(steps) * static_cast<double>(steps);
    }
    AbsorptionSimulation out{seed, trials, 0.0, 0.0};
    if (trials > 0) {
      double const n = static_cast<double>(trials);
      out.mean       = sum / n;
      if (trials > 1) {
        double const var = (sum_sq - n * out.mean * out.mean) / (n - 1);
        out.std_error    = std::sqrt(std::max(var, 0.0) / n);
      }
    }
    return out;
  }

  double empirical_tv(std::vector<double> const& empirical, Distribution const& exact) {
    if (empirical.size() != exact.size()) {
      raise(ErrorKind::DimensionMismatch, "distributions of different length");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i) {
      s += std::abs(empirical[i] - to_double(exact[i]));
    }
    return s / 2.0;
  }

}  // namespace monowalk
