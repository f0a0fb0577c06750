#include "monowalk/bounds.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "monowalk/error.hpp"
#include "monowalk/matrix.hpp"
#include "monowalk/spectrum.hpp"
#include "monowalk/walk.hpp"

namespace monowalk {

  namespace {
    void require_adapted(FiniteMonoid const& M, GreenStructure const& G, ProbabilityAssignment const& P) {
      if (!is_adapted(M, G, P)) {
        raise(ErrorKind::NotAdapted, "supp P does not generate a submonoid containing the minimal ideal");
      }
    }

    void require_lrb(FiniteMonoid const& M) {
      if (!is_left_regular_band(M)) {
        raise(ErrorKind::NotLRB, "monoid is not a left regular band");
      }
    }
  }  // namespace

  Rational lrb_tv_bound(FiniteMonoid const&          M,
                        GreenStructure const&        G,
                        IdempotentLattice const&     L,
                        ProbabilityAssignment const& P,
                        std::size_t                  n) {
    require_lrb(M);
    require_adapted(M, G, P);
    Rational s = 0;
    for (NodeId X = 0; X < L.size(); ++X) {
      if (X != L.bottom && L.below(L.bottom, X)) {
        s -= power(eigenvalue(L, P, X), n) * L.moebius[L.bottom][X];
      }
    }
    return s;
  }

  Rational mass_outside_ideal(FiniteMonoid const&          M,
                              GreenStructure const&        G,
                              ProbabilityAssignment const& P,
                              std::size_t                  n) {
    auto     d = convolution_power(M, right_walk(M, P), n);
    Rational s = 0;
    for (ElementId m = 0; m < M.size(); ++m) {
      if (!G.in_minimal_ideal(m)) {
        s += d[m];
      }
    }
    return s;
  }

  Rational expected_absorption_lrb(FiniteMonoid const&          M,
                                   GreenStructure const&        G,
                                   IdempotentLattice const&     L,
                                   ProbabilityAssignment const& P) {
    require_lrb(M);
    require_adapted(M, G, P);
    Rational s = 0;
    for (NodeId X = 0; X < L.size(); ++X) {
      if (X != L.bottom && L.below(L.bottom, X)) {
        s -= Rational(L.moebius[L.bottom][X]) / (1 - eigenvalue(L, P, X));
      }
    }
    return s;
  }

  Rational expected_absorption_general(FiniteMonoid const&          M,
                                       GreenStructure const&        G,
                                       IdempotentLattice const&     L,
                                       ProbabilityAssignment const& P,
                                       std::size_t                  budget) {
    require_adapted(M, G, P);
    if (G.in_minimal_ideal(0)) {
      return 0;
    }
    auto        lam   = descent_eigenvalues(L, P);
    auto        W     = right_walk(M, P);
    Rational    total = 0;
    std::size_t used  = 0;

    // w = P(σ) / Π_{i<q} (1 − λ_{d(σ_i)}) on entry to σ_q = m.
    std::function<void(ElementId, Rational const&)> visit = [&](ElementId m, Rational const& w) {
      if (++used > budget) {
        raise(ErrorKind::BudgetExceeded,
              "simplex enumeration exceeded the budget of " + std::to_string(budget));
      }
      Rational const here = w / (1 - lam[m]);
      total += here;
      for (auto const& [t, T] : W.out[m]) {
        if (!G.in_minimal_ideal(t)) {
          visit(t, here * T);
        }
      }
    };
    visit(0, Rational(1));
    return total;
  }

  Rational expected_absorption_fundamental(FiniteMonoid const&          M,
                                           GreenStructure const&        G,
                                           ProbabilityAssignment const& P) {
    require_adapted(M, G, P);
    if (G.in_minimal_ideal(0)) {
      return 0;
    }
    std::vector<ElementId>           transient;
    std::map<ElementId, std::size_t> pos;
    for (ElementId m = 0; m < M.size(); ++m) {
      if (!G.in_minimal_ideal(m)) {
        pos[m] = transient.size();
        transient.push_back(m);
      }
    }
    std::size_t const k = transient.size();
    RationalMatrix    A = RationalMatrix::identity(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (auto const& [x, p] : P.entries()) {
        ElementId t = M.product(transient[i], x);
        if (!G.in_minimal_ideal(t)) {
          A(i, pos.at(t)) -= p;
        }
      }
    }
    auto h = solve_linear(std::move(A), std::vector<Rational>(k, Rational(1)));
    return h[pos.at(0)];
  }

  Rational markov_mixing_bound(Rational const& expected_absorption, std::size_t n) {
    return expected_absorption / Rational(static_cast<unsigned long>(n + 1));
  }

  Rational simplex_mixing_bound(FiniteMonoid const&          M,
                                GreenStructure const&        G,
                                IdempotentLattice const&     L,
                                ProbabilityAssignment const& P,
                                std::size_t                  n,
                                std::size_t                  budget) {
    return expected_absorption_general(M, G, L, P, budget)
           / Rational(static_cast<unsigned long>(n + 1));
  }

  ChernoffBound chernoff_statistic_bound(std::uint64_t n, Rational const& p, std::uint64_t k) {
    if (sgn(p) <= 0 || p > 1) {
      raise(ErrorKind::InvalidInput, "p must lie in (0, 1]");
    }
    ChernoffBound b;
    Rational const q = 1 - p;
    for (std::uint64_t i = 0; i < n && i <= k; ++i) {
      b.tail += Rational(binomial(k, i)) * power(p, i) * power(q, k - i);
    }
    double const kp = static_cast<double>(k) * to_double(p);
    b.applicable    = k > 0 && Rational(static_cast<unsigned long>(k)) * p + 1 >= Rational(static_cast<unsigned long>(n));
    b.value = to_double(b.tail);
    if (b.applicable) {
      double const gap = kp - (static_cast<double>(n) - 1.0);
      b.chernoff       = std::exp(-gap * gap / (2.0 * kp));
      b.value          = std::min(b.value, b.chernoff);
    }
    return b;
  }

  StatisticVerdict check_statistic(FiniteMonoid const&               M,
                                   Action const&                     action,
                                   ProbabilityAssignment const&      P,
                                   std::vector<std::uint64_t> const& f) {
    StatisticVerdict v;
    if (f.size() != M.size()) {
      raise(ErrorKind::DimensionMismatch, "statistic must have one value per element");
    }
    for (ElementId m = 0; m < M.size(); ++m) {
      for (std::size_t g = 0; g < M.generator_count(); ++g) {
        // Generators suffice: f(m m') ≤ f(m) then follows along witness words.
        if (f[M.right(m, g)] > f[m]) {
          v.holds  = false;
          v.reason = "f increases from " + M.element_label(m) + " to " + M.element_label(M.right(m, g));
          return v;
        }
      }
      if (f[m] > 0) {
        bool drops = false;
        for (auto const& [x, p] : P.entries()) {
          drops = drops || f[M.product(m, x)] < f[m];
        }
        if (!drops) {
          v.holds  = false;
          v.reason = "no supported step lowers f at " + M.element_label(m);
          return v;
        }
      }
      bool const constant = action.is_constant(m);
      if (f[m] == 0 && !constant) {
        v.holds  = false;
        v.reason = "f vanishes at the non-constant " + M.element_label(m);
        return v;
      }
      if (f[m] > 0 && constant && v.zero_exactly_on_constants) {
        v.zero_exactly_on_constants = false;
        v.reason = "f is positive at the constant " + M.element_label(m);
      }
    }
    return v;
  }

  namespace {
    void check_coupon_input(std::vector<std::uint32_t> const& copies, std::vector<Rational> const& p) {
      if (copies.size() != p.size() || copies.empty()) {
        raise(ErrorKind::DimensionMismatch, "copies and probabilities must have equal nonzero length");
      }
      if (copies.size() > 24) {
        raise(ErrorKind::InvalidInput, "at most 24 coupon types");
      }
      Rational s = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (copies[i] == 0 || sgn(p[i]) <= 0) {
          raise(ErrorKind::InvalidInput, "copies must be ≥ 1 and probabilities positive");
        }
        s += p[i];
      }
      if (s != 1) {
        raise(ErrorKind::InvalidInput, "probabilities must sum to 1");
      }
    }
  }  // namespace

  Rational coupon_collector_multi(std::vector<std::uint32_t> const& copies,
                                  std::vector<Rational> const&      p) {
    check_coupon_input(copies, p);
    std::size_t const k     = copies.size();
    Rational          total = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<std::size_t> I;
      Rational                 pI = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1) {
          I.push_back(i);
          pI += p[i];
        }
      }
      Rational                  inner = 0;
      std::vector<std::int64_t> r(I.size(), 0);
      while (true) {
        std::int64_t rs   = 0;
        Rational     prod = 1;
        for (std::size_t a = 0; a < I.size(); ++a) {
          rs += r[a];
          prod *= power(p[I[a]], static_cast<std::uint64_t>(r[a]));
        }
        inner += Rational(multinomial(r)) * prod / power(pI, static_cast<std::uint64_t>(1 + rs));
        std::size_t a = 0;
        while (a < I.size() && r[a] + 1 == static_cast<std::int64_t>(copies[I[a]])) {
          r[a] = 0;
          ++a;
        }
        if (a == I.size()) {
          break;
        }
        ++r[a];
      }
      total += (I.size() % 2 == 1) ? inner : Rational(-inner);
    }
    return total;
  }

  Rational coupon_collector_chain(std::vector<std::uint32_t> const& copies,
                                  std::vector<Rational> const&      p) {
    check_coupon_input(copies, p);
    std::size_t const        k = copies.size();
    std::vector<std::size_t> stride(k, 1);
    std::size_t              states = 1;
    for (std::size_t i = 0; i < k; ++i) {
      stride[i] = states;
      states *= copies[i] + 1;
    }
    // Mixed-radix index; a successor always has a larger index, so fill from the top.
    std::vector<Rational> E(states);
    for (std::size_t s = states; s-- > 0;) {
      Rational stay_out = 0, acc = 1;
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t c = s / stride[i] % (copies[i] + 1);
        if (c < copies[i]) {
          stay_out += p[i];
          acc += p[i] * E[s + stride[i]];
        }
      }
      E[s] = sgn(stay_out) == 0 ? Rational(0) : Rational(acc / stay_out);
    }
    return E[0];
  }

  std::string bound_kind_name(BoundKind kind) {
    switch (kind) {
      case BoundKind::LrbMoebius: return "lrb_moebius";
      case BoundKind::MarkovExpectation: return "markov_expectation";
      case BoundKind::SimplexSum: return "simplex_sum";
      case BoundKind::ChernoffStatistic: return "chernoff_statistic";
    }
    return "unknown";
  }

  std::vector<MixingBoundReport> mixing_bound_table(FiniteMonoid const&          M,
                                                    GreenStructure const&        G,
                                                    IdempotentLattice const&     L,
                                                    ProbabilityAssignment const& P,
                                                    std::size_t                  n_max,
                                                    std::size_t                  budget) {
    std::vector<MixingBoundReport> rows;
    bool const     lrb     = is_left_regular_band(M);
    Rational const simplex = expected_absorption_general(M, G, L, P, budget);
    Rational const expect  = lrb ? expected_absorption_lrb(M, G, L, P)
                                 : expected_absorption_fundamental(M, G, P);
    for (std::size_t n = 0; n <= n_max; ++n) {
      if (lrb) {
        Rational v = lrb_tv_bound(M, G, L, P, n);
        rows.push_back({BoundKind::LrbMoebius, n, v, to_double(v), true});
      }
      Rational m = markov_mixing_bound(expect, n);
      rows.push_back({BoundKind::MarkovExpectation, n, m, to_double(m), true});
      Rational s = markov_mixing_bound(simplex, n);
      rows.push_back({BoundKind::SimplexSum, n, s, to_double(s), true});
    }
    return rows;
  }

}  // namespace monowalk
