#include "monowalk/exchange.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "monowalk/error.hpp"

namespace monowalk {

  namespace {
    StateSpace word_states(CoxeterSystem const& W, std::vector<Word> const& words) {
      std::vector<std::string> labels;
      labels.reserve(words.size());
      for (auto const& w : words) {
        labels.push_back(reduced_word_label(W, w));
      }
      return StateSpace(std::move(labels));
    }

    std::map<Word, StateIndex> word_index(std::vector<Word> const& words) {
      std::map<Word, StateIndex> index;
      for (std::size_t i = 0; i < words.size(); ++i) {
        index.emplace(words[i], static_cast<StateIndex>(i));
      }
      return index;
    }

    Word prepend(std::size_t s, Word const& alpha) {
      Word w{static_cast<std::uint32_t>(s)};
      w.insert(w.end(), alpha.begin(), alpha.end());
      return w;
    }

    Rational subset_weight(std::vector<Rational> const& P, SubsetMask J) {
      Rational total = 0;
      for (std::size_t s = 0; s < P.size(); ++s) {
        if (J >> s & 1) {
          total += P[s];
        }
      }
      return total;
    }
  }  // namespace

  ExchangeChain make_exchange_chain(CoxeterSystem W, std::vector<Rational> P) {
    if (P.size() != W.rank()) {
      raise(ErrorKind::InvalidInput, "exchange walk needs one probability per generator");
    }
    Rational total = 0;
    for (auto const& p : P) {
      if (p <= 0) {
        raise(ErrorKind::InvalidInput, "exchange walk probabilities must all be positive");
      }
      total += p;
    }
    if (total != 1) {
      raise(ErrorKind::InvalidInput, "exchange walk probabilities must sum to 1, got " + to_string(total));
    }
    return ExchangeChain{std::move(W), std::move(P)};
  }

  GeneratorSet hecke_generators(CoxeterSystem const& W) {
    std::vector<std::string> labels;
    for (GroupElement w = 0; w < W.size(); ++w) {
      labels.push_back(reduced_word_label(W, W.shortlex_word(w)));
    }
    std::vector<Generator> gens;
    for (std::size_t s = 0; s < W.rank(); ++s) {
      std::vector<StateIndex> targets(W.size());
      for (GroupElement w = 0; w < W.size(); ++w) {
        GroupElement sw = W.left(w, s);
        targets[w]      = W.length(sw) > W.length(w) ? sw : w;
      }
      gens.push_back({W.generator_names()[s], Transformation(std::move(targets))});
    }
    return GeneratorSet(StateSpace(std::move(labels)), std::move(gens));
  }

  FiniteMonoid hecke_monoid(CoxeterSystem const& W, std::size_t cap) {
    return close_monoid(hecke_generators(W), cap);
  }

  std::vector<Word> all_reduced_words(CoxeterSystem const& W, std::size_t budget) {
    std::vector<Word> out;
    for (GroupElement w = 0; w < W.size(); ++w) {
      auto words = reduced_words(W, w, budget);
      if (out.size() + words.size() > budget) {
        raise(ErrorKind::BudgetExceeded, "more than " + std::to_string(budget) + " reduced words");
      }
      out.insert(out.end(), words.begin(), words.end());
    }
    std::sort(out.begin(), out.end(), [](Word const& a, Word const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
  }

  GeneratorSet kr_expansion_generators(CoxeterSystem const& W, std::size_t budget) {
    auto words = all_reduced_words(W, budget);
    auto index = word_index(words);
    std::vector<Generator> gens;
    for (std::size_t s = 0; s < W.rank(); ++s) {
      std::vector<StateIndex> targets(words.size());
      for (std::size_t i = 0; i < words.size(); ++i) {
        targets[i] = index.at(descent_strip(W, prepend(s, words[i])));
      }
      gens.push_back({W.generator_names()[s], Transformation(std::move(targets))});
    }
    return GeneratorSet(word_states(W, words), std::move(gens));
  }

  FiniteMonoid kr_expansion(CoxeterSystem const& W, std::size_t cap) {
    return close_monoid(kr_expansion_generators(W, cap), cap);
  }

  GeneratorSet exchange_walk_generators(CoxeterSystem const& W, std::size_t budget) {
    auto words = reduced_words(W, W.longest(), budget);
    auto index = word_index(words);
    std::vector<Generator> gens;
    for (std::size_t s = 0; s < W.rank(); ++s) {
      std::vector<StateIndex> targets(words.size());
      for (std::size_t i = 0; i < words.size(); ++i) {
        targets[i] = index.at(exchange_op(W, s, words[i]));
      }
      gens.push_back({W.generator_names()[s], Transformation(std::move(targets))});
    }
    return GeneratorSet(word_states(W, words), std::move(gens));
  }

  Action exchange_action(FiniteMonoid const& expansion, CoxeterSystem const& W, std::size_t budget) {
    auto words = reduced_words(W, W.longest(), budget);
    auto index = word_index(words);
    std::vector<Transformation> maps;
    for (std::size_t s = 0; s < expansion.generator_count(); ++s) {
      std::vector<StateIndex> targets(words.size());
      for (std::size_t i = 0; i < words.size(); ++i) {
        targets[i] = index.at(descent_strip(W, prepend(s, words[i])));
      }
      maps.emplace_back(std::move(targets));
    }
    return Action(expansion, word_states(W, words), std::move(maps));
  }

  std::vector<std::pair<Rational, std::int64_t>> ExchangeSpectrum::merged() const {
    std::map<Rational, std::int64_t, std::greater<>> acc;
    for (auto const& e : entries) {
      acc[e.lambda] += e.multiplicity;
    }
    std::vector<std::pair<Rational, std::int64_t>> out;
    for (auto const& [lambda, mult] : acc) {
      if (mult > 0) {
        out.emplace_back(lambda, mult);
      }
    }
    return out;
  }

  ExchangeSpectrum exchange_spectrum(ExchangeChain const& chain) {
    auto const&       W = chain.W;
    std::size_t const r = W.rank();
    if (r > 20) {
      raise(ErrorKind::BudgetExceeded, "closed spectrum enumerates 2^rank subsets; rank above 20");
    }
    SubsetMask const full   = (SubsetMask{1} << r) - 1;
    auto const       counts = reduced_word_counts(W);
    std::vector<Integer> coset(full + 1);
    for (SubsetMask K = 0; K <= full; ++K) {
      coset[K] = counts[W.multiply(longest_parabolic(W, K), W.longest())];
    }
    ExchangeSpectrum out;
    out.omega_size = static_cast<std::size_t>(counts[W.longest()].get_ui());
    for (SubsetMask J = 0; J <= full; ++J) {
      Integer     mult = 0;
      SubsetMask  rest = full & ~J;
      // Enumerate K = J ∪ T over subsets T of the complement.
      for (SubsetMask T = rest;; T = (T - 1) & rest) {
        if (std::popcount(T) % 2 == 0) {
          mult += coset[J | T];
        } else {
          mult -= coset[J | T];
        }
        if (T == 0) {
          break;
        }
      }
      out.entries.push_back({J, subset_weight(chain.P, J), static_cast<std::int64_t>(mult.get_si())});
    }
    return out;
  }

  Distribution exchange_stationary(ExchangeChain const& chain, std::size_t budget) {
    auto const&  W     = chain.W;
    auto         words = reduced_words(W, W.longest(), budget);
    Distribution pi;
    pi.reserve(words.size());
    for (auto const& alpha : words) {
      Rational     value = 1;
      GroupElement cur   = 0;
      for (auto s : alpha) {
        value *= chain.P[s] / (1 - subset_weight(chain.P, W.right_descents(cur)));
        cur = W.right(cur, s);
      }
      pi.push_back(value);
    }
    return pi;
  }

  ExchangeMixingBound exchange_mixing_bound(ExchangeChain const& chain, Rational const& c) {
    if (c <= 0) {
      raise(ErrorKind::InvalidInput, "mixing constant c must be positive");
    }
    ExchangeMixingBound b;
    b.m = chain.W.length(chain.W.longest());
    b.p = *std::min_element(chain.P.begin(), chain.P.end());
    b.c = c;
    Rational k = 2 * (Rational(static_cast<long>(b.m)) + c - 1) / b.p;
    b.steps    = ceil(k).get_ui();
    return b;
  }

  std::vector<std::uint64_t> exchange_statistic(FiniteMonoid const& expansion, CoxeterSystem const& W) {
    std::size_t const          m = W.length(W.longest());
    std::vector<std::uint64_t> f(expansion.size());
    for (ElementId x = 0; x < expansion.size(); ++x) {
      f[x] = m - expansion.length(x);
    }
    return f;
  }

}  // namespace monowalk
