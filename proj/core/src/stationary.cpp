#include "monowalk/stationary.hpp"

#include <functional>
#include <map>

#include "monowalk/error.hpp"
#include "monowalk/spectrum.hpp"

namespace monowalk {

  namespace {
    void require_adapted(FiniteMonoid const& M, GreenStructure const& G, ProbabilityAssignment const& P) {
      if (!is_adapted(M, G, P)) {
        raise(ErrorKind::NotAdapted, "supp P does not generate a submonoid containing the minimal ideal");
      }
    }

    std::map<ElementId, std::size_t> ideal_positions(GreenStructure const& G) {
      std::map<ElementId, std::size_t> pos;
      for (std::size_t i = 0; i < G.minimal_ideal.size(); ++i) {
        pos[G.minimal_ideal[i]] = i;
      }
      return pos;
    }

    class Budget {
     public:
      explicit Budget(std::size_t limit) : _limit(limit) {}
      void tick() {
        if (++_used > _limit) {
          raise(ErrorKind::BudgetExceeded,
                "chain enumeration exceeded the budget of " + std::to_string(_limit));
        }
      }

     private:
      std::size_t _limit;
      std::size_t _used = 0;
    };
  }  // namespace

  std::vector<Rational> descent_eigenvalues(IdempotentLattice const& L, ProbabilityAssignment const& P) {
    std::vector<Rational> by_node(L.size());
    for (NodeId X = 0; X < L.size(); ++X) {
      by_node[X] = eigenvalue(L, P, X);
    }
    std::vector<Rational> out(L.descent.size());
    for (std::size_t m = 0; m < out.size(); ++m) {
      out[m] = by_node[L.descent[m]];
    }
    return out;
  }

  IdealDistribution stationary_chain_formula(FiniteMonoid const&          M,
                                             GreenStructure const&        G,
                                             IdempotentLattice const&     L,
                                             ProbabilityAssignment const& P,
                                             std::size_t                  budget) {
    require_adapted(M, G, P);
    auto              lam = descent_eigenvalues(L, P);
    auto              W   = right_walk(M, P);
    auto              pos = ideal_positions(G);
    IdealDistribution out{G.minimal_ideal, Distribution(G.minimal_ideal.size())};
    Budget            spent(budget);

    std::function<void(ElementId, Rational const&)> visit = [&](ElementId m, Rational const& w) {
      spent.tick();
      if (G.in_minimal_ideal(m)) {
        out.pi[pos.at(m)] += w;
        return;
      }
      Rational const escape = 1 - lam[m];
      for (auto const& [t, T] : W.out[m]) {
        visit(t, w * T / escape);
      }
    };
    visit(0, Rational(1));
    return out;
  }

  IdealDistribution stationary_reduced_words(FiniteMonoid const&          M,
                                             GreenStructure const&        G,
                                             IdempotentLattice const&     L,
                                             ProbabilityAssignment const& P,
                                             std::size_t                  budget) {
    require_adapted(M, G, P);
    auto              lam = descent_eigenvalues(L, P);
    auto              pos = ideal_positions(G);
    IdealDistribution out{G.minimal_ideal, Distribution(G.minimal_ideal.size())};
    Budget            spent(budget);

    std::function<void(ElementId, Rational const&)> visit = [&](ElementId m, Rational const& w) {
      spent.tick();
      if (G.in_minimal_ideal(m)) {
        out.pi[pos.at(m)] += w;
        return;
      }
      Rational const escape = 1 - lam[m];
      for (auto const& [x, p] : P.entries()) {
        ElementId t = M.product(m, x);
        if (t != m) {
          visit(t, w * p / escape);
        }
      }
    };
    visit(0, Rational(1));
    return out;
  }

  IdealDistribution stationary_kr_product(FiniteMonoid const&          M,
                                          GreenStructure const&        G,
                                          IdempotentLattice const&     L,
                                          ProbabilityAssignment const& P) {
    require_adapted(M, G, P);
    if (!is_karnofsky_rhodes(M, P.support())) {
      raise(ErrorKind::NotKarnofskyRhodes, "right Cayley graph over supp P is not a tree");
    }
    auto lam = descent_eigenvalues(L, P);
    // The unique non-loop in-edge of every element other than 1.
    std::vector<std::pair<ElementId, Rational>> parent(M.size(), {0, Rational(0)});
    for (ElementId m = 0; m < M.size(); ++m) {
      for (auto const& [x, p] : P.entries()) {
        ElementId t = M.product(m, x);
        if (t != m) {
          parent[t] = {m, p};
        }
      }
    }
    IdealDistribution out{G.minimal_ideal, Distribution(G.minimal_ideal.size())};
    for (std::size_t i = 0; i < G.minimal_ideal.size(); ++i) {
      Rational  w = 1;
      ElementId m = G.minimal_ideal[i];
      while (m != 0) {
        auto const& [prev, p] = parent[m];
        w *= p / (1 - lam[prev]);
        m = prev;
      }
      out.pi[i] = w;
    }
    return out;
  }

  IdealDistribution stationary_on_ideal_exact(FiniteMonoid const&          M,
                                              GreenStructure const&        G,
                                              ProbabilityAssignment const& P) {
    require_adapted(M, G, P);
    return {G.minimal_ideal, stationary_exact(minimal_ideal_matrix(M, G, P))};
  }

  Distribution lumped_stationary(FiniteMonoid const&          M,
                                 GreenStructure const&        G,
                                 Action const&                action,
                                 ProbabilityAssignment const& P) {
    require_adapted(M, G, P);
    bool has_constant = false;
    for (auto m : G.minimal_ideal) {
      has_constant = has_constant || action.is_constant(m);
    }
    if (!has_constant) {
      raise(ErrorKind::NoConstants, "no element of the minimal ideal acts as a constant map");
    }
    ElementId const        z = G.minimal_ideal.front();
    std::vector<bool>      in_left(M.size(), false);
    for (ElementId m = 0; m < M.size(); ++m) {
      in_left[M.product(m, z)] = true;
    }
    std::vector<ElementId>           left_ideal;
    std::map<ElementId, std::size_t> pos;
    for (ElementId m = 0; m < M.size(); ++m) {
      if (in_left[m]) {
        pos[m] = left_ideal.size();
        left_ideal.push_back(m);
      }
    }
    RationalMatrix T(left_ideal.size(), left_ideal.size());
    for (auto const& [x, p] : P.entries()) {
      for (std::size_t b = 0; b < left_ideal.size(); ++b) {
        T(pos.at(M.product(x, left_ideal[b])), b) += p;
      }
    }
    Distribution mu = stationary_exact(T);
    Distribution pi(action.size());
    for (std::size_t i = 0; i < left_ideal.size(); ++i) {
      for (StateIndex w = 0; w < action.size(); ++w) {
        if (action.image(left_ideal[i], w) == w) {
          pi[w] += mu[i];
        }
      }
    }
    return pi;
  }

  Distribution push_forward(IdealDistribution const& pi, Action const& action) {
    Distribution out(action.size());
    for (std::size_t i = 0; i < pi.states.size(); ++i) {
      if (!action.is_constant(pi.states[i])) {
        raise(ErrorKind::NoConstants, "minimal ideal element is not constant on Ω");
      }
      out[action.image(pi.states[i], 0)] += pi.pi[i];
    }
    return out;
  }

  Distribution pstar_formula_all(FiniteMonoid const&          M,
                                 IdempotentLattice const&     L,
                                 ProbabilityAssignment const& P,
                                 std::size_t                  n,
                                 std::size_t                  budget) {
    auto         lam = descent_eigenvalues(L, P);
    auto         W   = right_walk(M, P);
    Distribution out(M.size());
    Budget       spent(budget);

    // h[j] = h_j(λ_{d(σ_0)}, ..., λ_{d(σ_q)}) for j ≤ n.
    auto extend = [n](std::vector<Rational> const& h, Rational const& x) {
      std::vector<Rational> next(n + 1);
      for (std::size_t j = 0; j <= n; ++j) {
        next[j] = h[j];
        if (j > 0) {
          next[j] += x * next[j - 1];
        }
      }
      return next;
    };

    std::function<void(ElementId, std::size_t, Rational const&, std::vector<Rational> const&)> visit =
        [&](ElementId m, std::size_t q, Rational const& w, std::vector<Rational> const& h_prev) {
          spent.tick();
          auto h = extend(h_prev, lam[m]);
          out[m] += w * h[n - q];
          if (q == n) {
            return;
          }
          for (auto const& [t, T] : W.out[m]) {
            visit(t, q + 1, w * T, h);
          }
        };
    std::vector<Rational> h0(n + 1);
    h0[0] = 1;
    visit(0, 0, Rational(1), h0);
    return out;
  }

  Rational pstar_formula(FiniteMonoid const&          M,
                         IdempotentLattice const&     L,
                         ProbabilityAssignment const& P,
                         ElementId                    m,
                         std::size_t                  n,
                         std::size_t                  budget) {
    if (m >= M.size()) {
      raise(ErrorKind::InvalidInput, "element id out of range");
    }
    return pstar_formula_all(M, L, P, n, budget)[m];
  }

}  // namespace monowalk
