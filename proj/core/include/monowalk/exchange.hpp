#ifndef MONOWALK_EXCHANGE_HPP_
#define MONOWALK_EXCHANGE_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "monowalk/coxeter.hpp"
#include "monowalk/monoid.hpp"
#include "monowalk/rational.hpp"
#include "monowalk/walk.hpp"

namespace monowalk {

  // The exchange walk on R(w0): α moves to e_s(α) with probability P(s).
  struct ExchangeChain {
    CoxeterSystem         W;
    std::vector<Rational> P;  // per generator, all positive, sum 1
  };

  // Throws InvalidInput unless P has full support and sums to 1.
  ExchangeChain make_exchange_chain(CoxeterSystem W, std::vector<Rational> P);

  // π_s acting on W by w ↦ sw unless s ∈ D_L(w).  Under the left-action
  // convention the word s1⋯sk then evaluates to π_{s1⋯sk}.
  GeneratorSet hecke_generators(CoxeterSystem const& W);
  FiniteMonoid hecke_monoid(CoxeterSystem const& W, std::size_t cap = FiniteMonoid::default_cap);

  // R = ∪ R(w) in shortlex order.
  std::vector<Word> all_reduced_words(CoxeterSystem const& W, std::size_t budget = 100000);

  // s acting on R by α ↦ strip(sα).  States are labelled by reduced_word_label.
  GeneratorSet kr_expansion_generators(CoxeterSystem const& W, std::size_t budget = 100000);
  FiniteMonoid kr_expansion(CoxeterSystem const& W, std::size_t cap = FiniteMonoid::default_cap);

  // e_s on R(w0) via the Exchange Condition scan; states in lexicographic order.
  GeneratorSet exchange_walk_generators(CoxeterSystem const& W, std::size_t budget = 100000);

  // The expansion monoid acting on its minimal ideal R(w0) by strip(βα).
  Action exchange_action(FiniteMonoid const& expansion, CoxeterSystem const& W, std::size_t budget = 100000);

  struct ExchangeEigenvalue {
    SubsetMask   J = 0;
    Rational     lambda;
    std::int64_t multiplicity = 0;
  };

  struct ExchangeSpectrum {
    std::vector<ExchangeEigenvalue> entries;  // one per J ⊆ S, J as mask order
    std::size_t                     omega_size = 0;
    std::vector<std::pair<Rational, std::int64_t>> merged() const;
  };

  // λ_J = Σ_{s∈J} P(s) with multiplicity Σ_{K⊇J} (−1)^{|K|−|J|} |R(w_K w0)|.
  ExchangeSpectrum exchange_spectrum(ExchangeChain const& chain);

  // π(s1⋯sm) = Π P(s_i)/(1 − λ_{D_R(s1⋯s_{i−1})}), aligned with
  // exchange_walk_generators' states.
  Distribution exchange_stationary(ExchangeChain const& chain, std::size_t budget = 100000);

  struct ExchangeMixingBound {
    std::size_t   m = 0;  // ℓ(w0)
    Rational      p;      // min P(s)
    Rational      c;
    std::uint64_t steps = 0;  // ⌈2(m + c − 1)/p⌉
  };

  // Throws InvalidInput unless c > 0.
  ExchangeMixingBound exchange_mixing_bound(ExchangeChain const& chain, Rational const& c);

  // f(α) = ℓ(w0) − ℓ(α) per element of the expansion monoid.
  std::vector<std::uint64_t> exchange_statistic(FiniteMonoid const& expansion, CoxeterSystem const& W);

}  // namespace monowalk

#endif  // MONOWALK_EXCHANGE_HPP_
