#include "monowalk/models/toom.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "monowalk/error.hpp"
#include "monowalk/probability.hpp"

namespace monowalk::models {

  namespace {
    std::vector<std::vector<Rational>> reshape(std::vector<Rational> const& flat,
                                               std::vector<std::uint32_t> const& sizes) {
      std::vector<std::vector<Rational>> out;
      std::size_t                        at = 0;
      for (auto n : sizes) {
        out.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(at),
                         flat.begin() + static_cast<std::ptrdiff_t>(at + n));
        at += n;
      }
      return out;
    }

    void validate_weights(std::vector<std::vector<Rational>> const& weights,
                          std::vector<std::uint32_t> const&         sizes) {
      if (weights.size() != sizes.size()) {
        raise(ErrorKind::InvalidInput, "need one weight row per book");
      }
      Rational total = 0;
      for (std::size_t b = 0; b < sizes.size(); ++b) {
        if (weights[b].size() != sizes[b]) {
          raise(ErrorKind::InvalidInput, "book " + std::to_string(b + 1) + " needs "
                                             + std::to_string(sizes[b]) + " weights");
        }
        for (auto const& x : weights[b]) {
          if (x <= 0) {
            raise(ErrorKind::InvalidInput, "Toom weights must be positive");
          }
          total += x;
        }
      }
      if (total != 1) {
        raise(ErrorKind::InvalidInput, "Toom weights must sum to 1, got " + to_string(total));
      }
    }

    std::vector<std::uint32_t> loan_sizes(ToomLoanSpec const& spec) {
      return std::vector<std::uint32_t>(spec.m, spec.L);
    }

    std::vector<Rational> flatten(std::vector<std::vector<Rational>> const& w) {
      std::vector<Rational> out;
      for (auto const& row : w) {
        out.insert(out.end(), row.begin(), row.end());
      }
      return out;
    }

    std::vector<Shelf> words_of_content(std::vector<std::uint32_t> const& content) {
      Shelf w;
      for (std::uint32_t b = 0; b < content.size(); ++b) {
        w.insert(w.end(), content[b], b + 1);
      }
      std::vector<Shelf> out;
      do {
        out.push_back(w);
      } while (std::next_permutation(w.begin(), w.end()));
      return out;
    }

    std::vector<Shelf> all_words(std::uint32_t m, std::uint32_t L) {
      std::vector<Shelf> out;
      Shelf              w(L, 1);
      while (true) {
        out.push_back(w);
        std::size_t i = L;
        while (i > 0 && w[i - 1] == m) {
          w[i - 1] = 1;
          --i;
        }
        if (i == 0) {
          break;
        }
        ++w[i - 1];
      }
      return out;
    }

    template <class Move>
    GeneratorSet shelf_generators(std::vector<Shelf> const&         states,
                                  std::uint32_t                     m,
                                  std::vector<std::uint32_t> const& sizes,
                                  Move                              move) {
      std::map<Shelf, StateIndex> index;
      std::vector<std::string>    labels;
      for (std::size_t i = 0; i < states.size(); ++i) {
        index.emplace(states[i], static_cast<StateIndex>(i));
        labels.push_back(shelf_label(states[i], m));
      }
      std::vector<Generator>   gens;
      std::vector<std::string> order;
      for (std::uint32_t b = 1; b <= sizes.size(); ++b) {
        for (std::uint32_t j = 1; j <= sizes[b - 1]; ++j) {
          std::vector<StateIndex> targets(states.size());
          for (std::size_t i = 0; i < states.size(); ++i) {
            targets[i] = index.at(move(states[i], b, j));
          }
          std::string name = "d" + std::to_string(b) + "_" + std::to_string(j);
          order.push_back(name);
          gens.push_back({name, Transformation(std::move(targets))});
        }
      }
      return GeneratorSet(StateSpace(std::move(labels)), std::move(gens), std::move(order));
    }

    std::vector<std::size_t> offsets_of(std::vector<std::uint32_t> const& sizes) {
      std::vector<std::size_t> off(sizes.size() + 1, 0);
      for (std::size_t b = 0; b < sizes.size(); ++b) {
        off[b + 1] = off[b] + sizes[b];
      }
      return off;
    }

    Word idempotent_word(std::vector<std::uint32_t> const& sizes, SubsetTuple const& R) {
      if (R.size() != sizes.size()) {
        raise(ErrorKind::InvalidInput, "subset tuple needs one subset per book");
      }
      auto off = offsets_of(sizes);
      Word word;
      for (std::size_t i = 0; i < R.size(); ++i) {
        auto Ri = R[i];
        std::sort(Ri.begin(), Ri.end(), std::greater<>());
        if (std::adjacent_find(Ri.begin(), Ri.end()) != Ri.end()) {
          raise(ErrorKind::InvalidInput, "subset has a repeated index");
        }
        for (auto j : Ri) {
          if (j < 1 || j > sizes[i]) {
            raise(ErrorKind::InvalidInput, "subset index out of range");
          }
          word.push_back(static_cast<std::uint32_t>(off[i] + j - 1));
        }
      }
      return word;
    }

    SubsetTuple tuple_of_mask(std::uint64_t mask, std::vector<std::uint32_t> const& sizes) {
      auto        off = offsets_of(sizes);
      SubsetTuple R(sizes.size());
      for (std::size_t b = 0; b < sizes.size(); ++b) {
        for (std::uint32_t j = 1; j <= sizes[b]; ++j) {
          if (mask >> (off[b] + j - 1) & 1) {
            R[b].push_back(j);
          }
        }
      }
      return R;
    }

    Integer multinomial_or_zero(std::vector<std::int64_t> const& parts) {
      for (auto p : parts) {
        if (p < 0) {
          return 0;
        }
      }
      return multinomial(parts);
    }

    // Calls f on every n⃗ ∈ ℕ^m with |n⃗| = total.
    template <class F>
    void compositions(std::uint32_t m, std::uint32_t total, F&& f) {
      std::vector<std::uint32_t> n(m, 0);
      auto rec = [&](auto&& self, std::uint32_t i, std::uint32_t left) -> void {
        if (i + 1 == m) {
          n[i] = left;
          f(n);
          return;
        }
        for (std::uint32_t v = 0; v <= left; ++v) {
          n[i] = v;
          self(self, i + 1, left - v);
        }
      };
      rec(rec, 0, total);
    }

    std::vector<std::pair<Rational, std::int64_t>> merge(std::vector<ToomEigenvalue> const& entries) {
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
  }  // namespace

  std::string shelf_label(Shelf const& pi, std::uint32_t m) {
    std::string s;
    for (std::size_t i = 0; i < pi.size(); ++i) {
      if (m > 9 && i > 0) {
        s += '.';
      }
      s += std::to_string(pi[i]);
    }
    return s.empty() ? "1" : s;
  }

  ToomFixedSpec toom_fixed_spec(std::vector<std::uint32_t> content, bool powers) {
    std::size_t g = std::accumulate(content.begin(), content.end(), std::size_t{0});
    auto flat = generic_probability(g, powers ? ProbabilityScheme::Powers : ProbabilityScheme::Uniform);
    ToomFixedSpec spec{content, reshape(flat, content)};
    validate(spec);
    return spec;
  }

  ToomLoanSpec toom_loan_spec(std::uint32_t m, std::uint32_t L, bool powers) {
    ToomLoanSpec spec;
    spec.m    = m;
    spec.L    = L;
    auto flat = generic_probability(static_cast<std::size_t>(m) * L,
                                    powers ? ProbabilityScheme::Powers : ProbabilityScheme::Uniform);
    spec.weights = reshape(flat, loan_sizes(spec));
    validate(spec);
    return spec;
  }

  void validate(ToomFixedSpec const& spec) {
    if (spec.content.empty()) {
      raise(ErrorKind::InvalidInput, "content must list at least one book");
    }
    std::size_t L = 0;
    for (auto n : spec.content) {
      if (n < 1) {
        raise(ErrorKind::InvalidInput, "every book needs a positive copy count");
      }
      L += n;
    }
    if (L > 12) {
      raise(ErrorKind::InvalidInput, "fixed-content shelves are limited to 12 books");
    }
    validate_weights(spec.weights, spec.content);
  }

  void validate(ToomLoanSpec const& spec) {
    if (spec.m < 1 || spec.L < 1) {
      raise(ErrorKind::InvalidInput, "loan model needs m ≥ 1 and L ≥ 1");
    }
    if (std::pow(static_cast<double>(spec.m), spec.L) > 200000 || spec.m * spec.L > 62) {
      raise(ErrorKind::InvalidInput, "loan model limited to m^L ≤ 200000 shelves");
    }
    validate_weights(spec.weights, loan_sizes(spec));
  }

  std::vector<Rational> generator_weights(ToomFixedSpec const& spec) {
    return flatten(spec.weights);
  }

  std::vector<Rational> generator_weights(ToomLoanSpec const& spec) {
    return flatten(spec.weights);
  }

  Shelf toom_move(Shelf const& pi, std::uint32_t b, std::uint32_t j) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < pi.size(); ++i) {
      if (pi[i] == b) {
        pos.push_back(i);
      }
    }
    if (j < 1 || j > pos.size()) {
      raise(ErrorKind::InvalidInput, "copy index exceeds the number of copies");
    }
    Shelf       w  = pi;
    std::size_t k  = pos[j - 1];
    std::size_t to = j == 1 ? 0 : pos[j - 2] + 1;
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(k));
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(to), b);
    return w;
  }

  Shelf toom_loan_move(Shelf const& pi, std::uint32_t b, std::uint32_t j) {
    auto nb = static_cast<std::uint32_t>(std::count(pi.begin(), pi.end(), b));
    if (j <= nb) {
      return toom_move(pi, b, j);
    }
    if (j != nb + 1) {
      return pi;
    }
    Shelf w = pi;
    if (nb == 0) {
      w.insert(w.begin(), b);
    } else {
      auto last = std::find(w.rbegin(), w.rend(), b).base();
      w.insert(last, b);
    }
    w.pop_back();
    return w;
  }

  GeneratorSet toom_fixed_generators(ToomFixedSpec const& spec) {
    validate(spec);
    return shelf_generators(words_of_content(spec.content), static_cast<std::uint32_t>(spec.content.size()),
                            spec.content, toom_move);
  }

  GeneratorSet toom_loan_generators(ToomLoanSpec const& spec) {
    validate(spec);
    return shelf_generators(all_words(spec.m, spec.L), spec.m, loan_sizes(spec), toom_loan_move);
  }

  std::size_t fixed_generator_index(ToomFixedSpec const& spec, std::uint32_t b, std::uint32_t j) {
    if (b < 1 || b > spec.content.size() || j < 1 || j > spec.content[b - 1]) {
      raise(ErrorKind::InvalidInput, "no generator d" + std::to_string(b) + "_" + std::to_string(j));
    }
    return offsets_of(spec.content)[b - 1] + j - 1;
  }

  std::size_t loan_generator_index(ToomLoanSpec const& spec, std::uint32_t b, std::uint32_t j) {
    if (b < 1 || b > spec.m || j < 1 || j > spec.L) {
      raise(ErrorKind::InvalidInput, "no generator d" + std::to_string(b) + "_" + std::to_string(j));
    }
    return static_cast<std::size_t>(b - 1) * spec.L + j - 1;
  }

  Word toom_fixed_idempotent(ToomFixedSpec const& spec, SubsetTuple const& R) {
    return idempotent_word(spec.content, R);
  }

  Word toom_loan_idempotent(ToomLoanSpec const& spec, SubsetTuple const& R) {
    return idempotent_word(loan_sizes(spec), R);
  }

  namespace {
    // ∂̄_1 ∘ ⋯ ∘ ∂̄_k over the blocks of target, ∂̄_i = ∂_{b_i,ℓ(i)} ∘ ⋯ ∘ ∂_{b_i,1}.
    template <class Index>
    Word block_reset(Shelf const& target, Index index) {
      Word                                    word;
      std::map<std::uint32_t, std::uint32_t> seen;
      for (std::size_t i = 0; i < target.size();) {
        std::size_t k = i;
        while (k < target.size() && target[k] == target[i]) {
          ++k;
        }
        std::uint32_t b = target[i];
        seen[b] += static_cast<std::uint32_t>(k - i);
        for (std::uint32_t j = seen[b]; j >= 1; --j) {
          word.push_back(static_cast<std::uint32_t>(index(b, j)));
        }
        i = k;
      }
      return word;
    }
  }  // namespace

  Word toom_reset_word(ToomFixedSpec const& spec, Shelf const& target) {
    std::vector<std::uint32_t> content(spec.content.size(), 0);
    for (auto b : target) {
      if (b < 1 || b > content.size()) {
        raise(ErrorKind::InvalidInput, "target uses an unknown book");
      }
      ++content[b - 1];
    }
    if (content != spec.content) {
      raise(ErrorKind::InvalidInput, "target does not have the spec's content");
    }
    return block_reset(target, [&](std::uint32_t b, std::uint32_t j) { return fixed_generator_index(spec, b, j); });
  }

  Word toom_loan_reset_word(ToomLoanSpec const& spec, Shelf const& target) {
    if (target.size() != spec.L) {
      raise(ErrorKind::InvalidInput, "target must have length L");
    }
    std::vector<std::uint32_t> content(spec.m, 0);
    for (auto b : target) {
      if (b < 1 || b > spec.m) {
        raise(ErrorKind::InvalidInput, "target uses an unknown book");
      }
      ++content[b - 1];
    }
    auto index = [&](std::uint32_t b, std::uint32_t j) { return loan_generator_index(spec, b, j); };
    Word word  = block_reset(target, index);
    for (std::uint32_t b = 1; b <= spec.m; ++b) {
      for (std::uint32_t j = content[b - 1]; j >= 1; --j) {
        word.push_back(static_cast<std::uint32_t>(index(b, j)));
      }
    }
    return word;
  }

  Integer word_derangement_count(std::vector<std::uint32_t> const& content) {
    std::size_t const          m = content.size();
    std::vector<std::uint32_t> k(m, 0);
    Integer                    total = 0;
    while (true) {
      Integer                   term = 1;
      std::vector<std::int64_t> rest(m);
      std::uint32_t             size = 0;
      for (std::size_t i = 0; i < m; ++i) {
        term *= binomial(content[i], k[i]);
        rest[i] = static_cast<std::int64_t>(content[i] - k[i]);
        size += k[i];
      }
      term *= multinomial(rest);
      total += size % 2 == 0 ? term : Integer(-term);
      std::size_t i = 0;
      while (i < m && k[i] == content[i]) {
        k[i++] = 0;
      }
      if (i == m) {
        break;
      }
      ++k[i];
    }
    return total;
  }

  bool is_word_derangement(Shelf const& word, std::vector<std::uint32_t> const& content) {
    Shelf ref;
    for (std::uint32_t b = 0; b < content.size(); ++b) {
      ref.insert(ref.end(), content[b], b + 1);
    }
    if (word.size() != ref.size()) {
      return false;
    }
    for (std::size_t i = 0; i < ref.size(); ++i) {
      if (word[i] == ref[i]) {
        return false;
      }
    }
    return true;
  }

  Integer word_derangement_count_brute(std::vector<std::uint32_t> const& content) {
    if (std::accumulate(content.begin(), content.end(), 0u) > 12) {
      raise(ErrorKind::BudgetExceeded, "brute-force derangement count limited to 12 letters");
    }
    Integer count = 0;
    for (auto const& w : words_of_content(content)) {
      if (is_word_derangement(w, content)) {
        ++count;
      }
    }
    return count;
  }

  std::vector<std::pair<Rational, std::int64_t>> ToomSpectrum::merged() const {
    return merge(entries);
  }

  ToomSpectrum toom_fixed_spectrum(ToomFixedSpec const& spec) {
    validate(spec);
    auto const  flat = flatten(spec.weights);
    std::size_t g    = flat.size();
    ToomSpectrum out;
    out.omega_size = words_of_content(spec.content).size();
    std::map<std::vector<std::uint32_t>, Integer> cache;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
      ToomEigenvalue e;
      e.R    = tuple_of_mask(mask, spec.content);
      e.mask = mask;
      e.lambda = 0;
      for (std::size_t i = 0; i < g; ++i) {
        if (mask >> i & 1) {
          e.lambda += flat[i];
        }
      }
      std::vector<std::uint32_t> rest(spec.content.size());
      std::vector<std::int64_t>  parts(spec.content.size());
      for (std::size_t b = 0; b < rest.size(); ++b) {
        rest[b]  = spec.content[b] - static_cast<std::uint32_t>(e.R[b].size());
        parts[b] = rest[b];
      }
      auto it = cache.find(rest);
      if (it == cache.end()) {
        it = cache.emplace(rest, word_derangement_count(rest)).first;
      }
      e.multiplicity = it->second.get_si();
      e.fixed_points = multinomial(parts);
      out.entries.push_back(std::move(e));
    }
    return out;
  }

  Integer interlibrary_fixed_points(std::uint32_t m, std::uint32_t L, SubsetTuple const& R) {
    if (R.size() != m) {
      raise(ErrorKind::InvalidInput, "subset tuple needs one subset per book");
    }
    bool          full     = true;
    std::uint64_t min_sum  = 0;
    for (auto const& Ri : R) {
      std::uint32_t least = L + 1;
      for (std::uint32_t r = L; r >= 1; --r) {
        if (std::find(Ri.begin(), Ri.end(), r) == Ri.end()) {
          least = r;
        }
      }
      full = full && least == L + 1;
      min_sum += least;
    }
    if (full || min_sum >= static_cast<std::uint64_t>(L) + m) {
      return 1;
    }
    Integer total = 0;
    compositions(m, L, [&](std::vector<std::uint32_t> const& n) {
      std::size_t boundary = 0;
      for (std::uint32_t i = 0; i < m; ++i) {
        auto const& Ri = R[i];
        if (n[i] == 0 && std::find(Ri.begin(), Ri.end(), 1u) != Ri.end()) {
          return;
        }
        if (std::find(Ri.begin(), Ri.end(), n[i] + 1) != Ri.end()) {
          ++boundary;
        }
      }
      if (boundary > 1) {
        return;
      }
      std::vector<std::int64_t> parts(m);
      for (std::uint32_t i = 0; i < m; ++i) {
        std::int64_t f = 0;
        for (auto r : R[i]) {
          if (n[i] + 1 >= r) {
            ++f;
          }
        }
        parts[i] = static_cast<std::int64_t>(n[i]) - f;
      }
      total += multinomial_or_zero(parts);
    });
    return total;
  }

  namespace {
    // Closed-form fixed points and Möbius-inverted multiplicities per mask.
    std::pair<std::vector<Integer>, std::vector<Integer>> loan_tables(std::uint32_t m, std::uint32_t L,
                                                                      std::uint64_t budget) {
      std::size_t const g = static_cast<std::size_t>(m) * L;
      if (g > 40 || (std::uint64_t{1} << g) * g > budget) {
        raise(ErrorKind::BudgetExceeded, "loan spectrum needs mL·2^{mL} within the budget");
      }
      std::vector<std::uint32_t> sizes(m, L);
      std::vector<Integer>       fix(std::size_t{1} << g), mult;
      for (std::uint64_t mask = 0; mask < fix.size(); ++mask) {
        fix[mask] = interlibrary_fixed_points(m, L, tuple_of_mask(mask, sizes));
      }
      // m_R = Σ_{U ⊇ R} (−1)^{|U∖R|} fix(U) by the superset Möbius transform.
      mult = fix;
      for (std::size_t bit = 0; bit < g; ++bit) {
        for (std::uint64_t mask = 0; mask < mult.size(); ++mask) {
          if (!(mask >> bit & 1)) {
            mult[mask] -= mult[mask | (std::uint64_t{1} << bit)];
          }
        }
      }
      return {std::move(fix), std::move(mult)};
    }
  }  // namespace

  ToomSpectrum toom_loan_spectrum(ToomLoanSpec const& spec, std::uint64_t budget) {
    validate(spec);
    auto [fix, mult] = loan_tables(spec.m, spec.L, budget);
    auto const   flat = flatten(spec.weights);
    auto const   sizes = loan_sizes(spec);
    ToomSpectrum out;
    out.omega_size = 1;
    for (std::uint32_t i = 0; i < spec.L; ++i) {
      out.omega_size *= spec.m;
    }
    for (std::uint64_t mask = 0; mask < fix.size(); ++mask) {
      ToomEigenvalue e;
      e.R      = tuple_of_mask(mask, sizes);
      e.mask   = mask;
      e.lambda = 0;
      for (std::size_t i = 0; i < flat.size(); ++i) {
        if (mask >> i & 1) {
          e.lambda += flat[i];
        }
      }
      e.multiplicity = mult[mask].get_si();
      e.fixed_points = fix[mask];
      out.entries.push_back(std::move(e));
    }
    return out;
  }

  ConjectureReport check_interlibrary_conjecture(std::uint32_t m, std::uint32_t L, std::uint64_t budget) {
    if (m < 1 || L < 1) {
      raise(ErrorKind::InvalidInput, "conjecture sweep needs m ≥ 1 and L ≥ 1");
    }
    auto [fix, mult] = loan_tables(m, L, budget);
    std::vector<std::uint32_t> sizes(m, L);
    ConjectureReport           report;
    report.m = m;
    report.L = L;
    for (std::uint64_t mask = 0; mask < mult.size(); ++mask) {
      SubsetTuple I = tuple_of_mask(mask, sizes);
      bool        proper = std::all_of(I.begin(), I.end(), [&](auto const& Ii) { return Ii.size() < L; });
      if (!proper) {
        continue;
      }
      std::uint64_t              max_sum = 0;
      std::vector<std::uint32_t> reduced(m);
      for (std::uint32_t i = 0; i < m; ++i) {
        std::uint32_t largest = 0;
        for (std::uint32_t r = 1; r <= L; ++r) {
          if (std::find(I[i].begin(), I[i].end(), r) == I[i].end()) {
            largest = r;
          }
        }
        max_sum += largest;
        reduced[i] = L - static_cast<std::uint32_t>(I[i].size()) - 1;
      }
      ConjectureCase c;
      c.I         = I;
      c.computed  = mult[mask].get_si();
      c.predicted = max_sum <= static_cast<std::uint64_t>(L) + m - 1
                        ? static_cast<std::int64_t>(m - 1) * word_derangement_count(reduced).get_si()
                        : 0;
      (c.computed == c.predicted ? report.matches : report.mismatches) += 1;
      report.cases.push_back(std::move(c));
    }
    return report;
  }

}  // namespace monowalk::models
