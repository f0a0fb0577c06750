#ifndef MONOWALK_MODELS_FREE_TREE_HPP_
#define MONOWALK_MODELS_FREE_TREE_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monowalk/rational.hpp"
#include "monowalk/transformation.hpp"

namespace monowalk::models {

  // Letters are 1..n with the natural order; x_i is letter i.
  using FtWord = std::vector<std::uint32_t>;

  // a(0) = 1, a(n) = a(n−1)² + a(n−1).
  Integer ft_count(std::size_t n);

  // Reduced iff the largest letter occurs at most once and the words on
  // either side of it are reduced over the smaller letters.
  bool ft_is_reduced(FtWord const& word);

  // Positions (i, j) of applicable rules y u y → y u: w[i] = w[j] = y, u =
  // w[i+1..j−1] reduced over letters < y.  Rewriting deletes w[j].
  std::vector<std::pair<std::size_t, std::size_t>> ft_redexes(FtWord const& word);
  FtWord                                           ft_rewrite(FtWord const& word, std::size_t j);

  // Normal form by leftmost-outermost rewriting.  Throws InvalidInput for a
  // letter outside 1..n.
  FtWord ft_reduce(FtWord const& word, std::size_t n);

  // FT(n) in shortlex order.  Throws BudgetExceeded for n ≥ 5.
  std::vector<FtWord> ft_enumerate(std::size_t n);

  // x_i acting on FT(n) by u ↦ reduce(x_i u), generators named x1..xn with
  // tree order x1 < ⋯ < xn.  States are labelled by ft_label.
  GeneratorSet free_tree_generators(std::size_t n);

  // "x3x2x4", "1" for the empty word.
  std::string ft_label(FtWord const& word);

  struct TreeShape {
    enum class Kind { Leaf, Unary, Binary };
    Kind                   kind = Kind::Leaf;
    std::vector<TreeShape> children;

    std::size_t leaves() const;
    std::size_t height() const;
    bool        operator==(TreeShape const&) const = default;
  };

  // φ: with x the largest letter, w = u x v ↦ binary(φ(u), φ(v)) and a word
  // without x ↦ unary(φ(w)); height n.  Throws NotReduced.
  TreeShape ft_to_tree(FtWord const& word, std::size_t n);
  // Throws InvalidInput unless every leaf sits at level 0.
  FtWord ft_from_tree(TreeShape const& tree);

  // "*" for a leaf, "U(c)" and "B(l,r)" otherwise.
  std::string tree_bracket(TreeShape const& tree);
  std::string tree_dot(TreeShape const& tree, std::string const& name = "ft");

  struct FtDescents {
    std::uint64_t left  = 0;  // bit i−1 for x_i
    std::uint64_t right = 0;
  };

  // D_L is the first letter; D_R holds i when the word ends in x_i v with v
  // over letters < i.  Throws NotReduced.
  FtDescents ft_descents(FtWord const& word, std::size_t n);

  // Π_{i∈I} a(i−1).
  Integer ft_descent_class_size(std::uint64_t I, std::size_t n);

}  // namespace monowalk::models

#endif  // MONOWALK_MODELS_FREE_TREE_HPP_
