#ifndef MONOWALK_MODELS_TOOM_HPP_
#define MONOWALK_MODELS_TOOM_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "monowalk/rational.hpp"
#include "monowalk/transformation.hpp"

namespace monowalk::models {

  // Books are 1..m; a shelf word stores book numbers.  Labels run digits
  // together ("1212") when m ≤ 9 and use '.' otherwise.
  using Shelf = std::vector<std::uint32_t>;

  // weights[b][j−1] = x_{b+1, j}.
  struct ToomFixedSpec {
    std::vector<std::uint32_t>         content;
    std::vector<std::vector<Rational>> weights;
  };

  struct ToomLoanSpec {
    std::uint32_t                      m = 2;
    std::uint32_t                      L = 2;
    std::vector<std::vector<Rational>> weights;
  };

  // Generic weights in generator order: uniform, or 2^i/(2^g − 1).
  ToomFixedSpec toom_fixed_spec(std::vector<std::uint32_t> content, bool powers = false);
  ToomLoanSpec  toom_loan_spec(std::uint32_t m, std::uint32_t L, bool powers = false);

  // Throws InvalidInput.
  void validate(ToomFixedSpec const& spec);
  void validate(ToomLoanSpec const& spec);

  // Flattened x_{b,j}, book-major, in generator order.
  std::vector<Rational> generator_weights(ToomFixedSpec const& spec);
  std::vector<Rational> generator_weights(ToomLoanSpec const& spec);

  // ∂_{b,j} on a single shelf.  Fixed content requires j ≤ n_b(π).
  Shelf toom_move(Shelf const& pi, std::uint32_t b, std::uint32_t j);
  // Loan rule: bulk move, insertion after the last copy, or no-op.
  Shelf toom_loan_move(Shelf const& pi, std::uint32_t b, std::uint32_t j);

  // Generators ∂_{b,j} named "d<b>_<j>", book-major with j increasing; this
  // is also the declared tree order.  States are words in lexicographic order.
  GeneratorSet toom_fixed_generators(ToomFixedSpec const& spec);
  GeneratorSet toom_loan_generators(ToomLoanSpec const& spec);

  std::size_t fixed_generator_index(ToomFixedSpec const& spec, std::uint32_t b, std::uint32_t j);
  std::size_t loan_generator_index(ToomLoanSpec const& spec, std::uint32_t b, std::uint32_t j);

  // A subset tuple R⃗ with R[b−1] ⊆ [n_b], each sorted increasingly.
  using SubsetTuple = std::vector<std::vector<std::uint32_t>>;

  // e_R⃗ = Π_i Π_{j∈R_i} ∂_{b_i,j}: outer product increasing in i, inner
  // decreasing in j, read left to right.  Throws InvalidInput unless
  // R_i ⊆ [n_i] (fixed) or R_i ⊆ [L] (loan).
  Word toom_fixed_idempotent(ToomFixedSpec const& spec, SubsetTuple const& R);
  Word toom_loan_idempotent(ToomLoanSpec const& spec, SubsetTuple const& R);

  // A word taking every state to `target` (same content as the spec).
  Word toom_reset_word(ToomFixedSpec const& spec, Shelf const& target);
  // Loan variant: first gather to b_1^{n_1}⋯b_m^{n_m}, then reset.
  Word toom_loan_reset_word(ToomLoanSpec const& spec, Shelf const& target);

  // d_n⃗ = Σ_{S⃗} (−1)^{|S⃗|} multinomial(n⃗ − |S⃗|).
  Integer word_derangement_count(std::vector<std::uint32_t> const& content);
  // Direct count against the reference 1^{n_1}⋯m^{n_m}; total length ≤ 12.
  Integer word_derangement_count_brute(std::vector<std::uint32_t> const& content);
  bool    is_word_derangement(Shelf const& word, std::vector<std::uint32_t> const& content);

  struct ToomEigenvalue {
    SubsetTuple  R;
    std::uint64_t mask = 0;  // generator indices in R⃗
    Rational     lambda;
    std::int64_t multiplicity = 0;
    Integer      fixed_points;  // |e_R⃗ Ω|
  };

  struct ToomSpectrum {
    std::vector<ToomEigenvalue> entries;  // every subset tuple
    std::size_t                 omega_size = 0;
    std::vector<std::pair<Rational, std::int64_t>> merged() const;
  };

  // λ_R⃗ = Σ x_{b_i,R_i} with multiplicity d_{n⃗ − |R⃗|}.
  ToomSpectrum toom_fixed_spectrum(ToomFixedSpec const& spec);

  // Closed-form |e_R⃗ Ω| for the loan model; min(∅) is taken as L + 1.
  Integer interlibrary_fixed_points(std::uint32_t m, std::uint32_t L, SubsetTuple const& R);

  // Multiplicities by Möbius inversion over closed-form fixed-point counts.
  // Throws BudgetExceeded when mL·2^{mL} exceeds `budget`.
  ToomSpectrum toom_loan_spectrum(ToomLoanSpec const& spec, std::uint64_t budget = 20'000'000);

  struct ConjectureCase {
    SubsetTuple  I;
    std::int64_t computed  = 0;
    std::int64_t predicted = 0;
  };

  struct ConjectureReport {
    std::uint32_t               m = 0;
    std::uint32_t               L = 0;
    std::vector<ConjectureCase> cases;  // all tuples with every I_i ⊊ [L]
    std::size_t                 matches = 0;
    std::size_t                 mismatches = 0;
  };

  // Compares m_I⃗ against (m−1)·d_{(|Ī_i|−1)} if Σ max(Ī_i) ≤ L+m−1, else 0.
  ConjectureReport check_interlibrary_conjecture(std::uint32_t m, std::uint32_t L,
                                                 std::uint64_t budget = 20'000'000);

  std::string shelf_label(Shelf const& pi, std::uint32_t m);

}  // namespace monowalk::models

#endif  // MONOWALK_MODELS_TOOM_HPP_
