#ifndef MONOWALK_COXETER_HPP_
#define MONOWALK_COXETER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "monowalk/rational.hpp"
#include "monowalk/transformation.hpp"

namespace monowalk {

  enum class CoxeterType { A, B, D, I2 };

  struct CoxeterFactor {
    CoxeterType type = CoxeterType::A;
    std::size_t n    = 1;  // rank for A/B/D, m for I2(m)

    std::string name() const;
    std::size_t rank() const;
  };

  // "A2xA1", "A1^3", "B3", "D4", "I2(5)" or
  // {"factors":[{"type":"A","n":2},{"type":"I2","m":5}]}.  Throws UnsupportedType.
  std::vector<CoxeterFactor> parse_coxeter_spec(std::string const& text);

  using GroupElement = std::uint32_t;
  using SubsetMask   = std::uint64_t;

  // A finite Coxeter group realized by permutations of a finite point set,
  // one block of points per factor.  Generators are named s1..sr across all
  // factors in order.  Element 0 is the identity; elements are listed by BFS
  // over right multiplication, so BFS depth is the Coxeter length.
  class CoxeterSystem {
   public:
    static constexpr std::size_t default_cap = 50000;

    std::vector<CoxeterFactor> const& factors() const noexcept {
      return _factors;
    }
    std::size_t rank() const noexcept {
      return _names.size();
    }
    std::size_t size() const noexcept {
      return _length.size();
    }
    std::vector<std::string> const& generator_names() const noexcept {
      return _names;
    }
    std::vector<std::vector<int>> const& coxeter_matrix() const noexcept {
      return _matrix;
    }
    std::string label() const;

    GroupElement right(GroupElement w, std::size_t s) const {
      return _right[static_cast<std::size_t>(w) * rank() + s];
    }
    GroupElement left(GroupElement w, std::size_t s) const {
      return _left[static_cast<std::size_t>(w) * rank() + s];
    }
    std::size_t length(GroupElement w) const {
      return _length[w];
    }
    SubsetMask right_descents(GroupElement w) const;
    SubsetMask left_descents(GroupElement w) const;
    GroupElement longest() const noexcept {
      return _w0;
    }
    GroupElement multiply(GroupElement a, GroupElement b) const;
    GroupElement inverse(GroupElement w) const;
    GroupElement evaluate(Word const& word) const;
    std::vector<StateIndex> const& permutation(GroupElement w) const {
      return _perm[w];
    }
    Word         shortlex_word(GroupElement w) const;

    friend CoxeterSystem build_coxeter(std::vector<CoxeterFactor> const& factors, std::size_t cap);

   private:
    std::vector<CoxeterFactor>           _factors;
    std::vector<std::string>             _names;
    std::vector<std::vector<int>>        _matrix;
    std::vector<std::vector<StateIndex>> _perm;
    std::vector<GroupElement>            _right;
    std::vector<GroupElement>            _left;
    std::vector<std::size_t>             _length;
    std::vector<GroupElement>            _parent;
    std::vector<std::uint32_t>           _last;
    GroupElement                         _w0 = 0;
  };

  // Validates ℓ(ws) = ℓ(w) ± 1, the braid relations and the Coxeter orders of
  // the realization, and ℓ(w0) against the positive-root count.
  CoxeterSystem build_coxeter(std::vector<CoxeterFactor> const& factors,
                              std::size_t                       cap = CoxeterSystem::default_cap);
  CoxeterSystem build_coxeter(std::string const& spec, std::size_t cap = CoxeterSystem::default_cap);

  // Number of positive roots: n(n+1)/2, n², n(n−1), m per factor.
  std::size_t positive_root_count(std::vector<CoxeterFactor> const& factors);

  bool is_reduced_word(CoxeterSystem const& W, Word const& word);

  // All reduced words of w in lexicographic order.  Throws BudgetExceeded.
  std::vector<Word> reduced_words(CoxeterSystem const& W, GroupElement w, std::size_t budget = 100000);
  // |R(w)| for every w by dynamic programming over right descents.
  std::vector<Integer> reduced_word_counts(CoxeterSystem const& W);

  GroupElement longest_parabolic(CoxeterSystem const& W, SubsetMask J);

  // e_s(α) = s s_1 ... ŝ_i ... s_m.  Throws NotReducedForW0.
  Word exchange_op(CoxeterSystem const& W, std::size_t s, Word const& alpha);

  // Concatenate, then scan left to right dropping every letter that is a
  // right descent of the prefix kept so far.
  Word descent_strip(CoxeterSystem const& W, Word const& word);

  // Word label: generator indices (1-based) run together when rank < 10,
  // dot-separated otherwise; the empty word is "e".
  std::string reduced_word_label(CoxeterSystem const& W, Word const& word);

}  // namespace monowalk

#endif  // MONOWALK_COXETER_HPP_
