#include "monowalk/walk.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "monowalk/error.hpp"

namespace monowalk {

  RationalMatrix transition_matrix(FiniteMonoid const&          M,
                                   Action const&                action,
                                   ProbabilityAssignment const& P) {
    (void) M;
    std::size_t const n = action.size();
    RationalMatrix    T(n, n);
    for (auto const& [m, w] : P.entries()) {
      for (StateIndex b = 0; b < n; ++b) {
        T(action.image(m, b), b) += w;
      }
    }
    return T;
  }

  RationalMatrix minimal_ideal_matrix(FiniteMonoid const&          M,
                                      GreenStructure const&        G,
                                      ProbabilityAssignment const& P) {
    std::size_t const                 n = G.minimal_ideal.size();
    std::map<ElementId, std::size_t>  pos;
    for (std::size_t i = 0; i < n; ++i) {
      pos[G.minimal_ideal[i]] = i;
    }
    RationalMatrix T(n, n);
    for (auto const& [m, w] : P.entries()) {
      for (std::size_t b = 0; b < n; ++b) {
        T(pos.at(M.product(m, G.minimal_ideal[b])), b) += w;
      }
    }
    return T;
  }

  RightWalk right_walk(FiniteMonoid const& M, ProbabilityAssignment const& P) {
    RightWalk W;
    W.out.resize(M.size());
    W.loop.assign(M.size(), 0);
    for (ElementId m = 0; m < M.size(); ++m) {
      std::map<ElementId, Rational> acc;
      for (auto const& [x, w] : P.entries()) {
        ElementId t = M.product(m, x);
        if (t == m) {
          W.loop[m] += w;
        } else {
          acc[t] += w;
        }
      }
      W.out[m].assign(acc.begin(), acc.end());
    }
    return W;
  }

  Distribution convolution_power(FiniteMonoid const& M, RightWalk const& W, std::size_t n) {
    Distribution d(M.size());
    d[0] = 1;
    for (std::size_t step = 0; step < n; ++step) {
      Distribution next(M.size());
      for (ElementId m = 0; m < M.size(); ++m) {
        if (sgn(d[m]) == 0) {
          continue;
        }
        next[m] += d[m] * W.loop[m];
        for (auto const& [t, w] : W.out[m]) {
          next[t] += d[m] * w;
        }
      }
      d.swap(next);
    }
    return d;
  }

  namespace {
    // Support digraph: β -> α when T(α, β) > 0.
    std::vector<std::vector<std::uint32_t>> support_digraph(RationalMatrix const& T) {
      std::vector<std::vector<std::uint32_t>> adj(T.cols());
      for (std::size_t b = 0; b < T.cols(); ++b) {
        for (std::size_t a = 0; a < T.rows(); ++a) {
          if (sgn(T(a, b)) != 0) {
            adj[b].push_back(static_cast<std::uint32_t>(a));
          }
        }
      }
      return adj;
    }
  }  // namespace

  std::size_t digraph_period(RationalMatrix const& T, std::vector<std::size_t> const& states) {
    if (states.empty()) {
      return 1;
    }
    auto                     adj = support_digraph(T);
    std::vector<bool>        in(T.cols(), false);
    for (auto s : states) {
      in[s] = true;
    }
    std::vector<long>        level(T.cols(), -1);
    std::vector<std::size_t> queue{states[0]};
    level[states[0]] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto v = queue[i];
      for (auto w : adj[v]) {
        if (in[w] && level[w] < 0) {
          level[w] = level[v] + 1;
          queue.push_back(w);
        }
      }
    }
    long g = 0;
    for (auto v : states) {
      for (auto w : adj[v]) {
        if (in[w] && level[v] >= 0 && level[w] >= 0) {
          g = std::gcd(g, std::labs(level[v] + 1 - level[w]));
        }
      }
    }
    return g == 0 ? 1 : static_cast<std::size_t>(g);
  }

  Distribution stationary_exact(RationalMatrix const& T) {
    std::size_t const n = T.rows();
    if (T.cols() != n || n == 0) {
      raise(ErrorKind::DimensionMismatch, "stationary_exact needs a square matrix");
    }
    auto          adj = support_digraph(T);
    std::uint32_t count = 0;
    auto          comp  = strongly_connected_components(adj, count);
    std::vector<bool> closed(count, true);
    for (std::size_t v = 0; v < n; ++v) {
      for (auto w : adj[v]) {
        if (comp[v] != comp[w]) {
          closed[comp[v]] = false;
        }
      }
    }
    if (std::count(closed.begin(), closed.end(), true) != 1) {
      raise(ErrorKind::NotErgodic, "chain does not have a unique closed class");
    }
    std::uint32_t const      c = static_cast<std::uint32_t>(
        std::find(closed.begin(), closed.end(), true) - closed.begin());
    std::vector<std::size_t> cls;
    for (std::size_t v = 0; v < n; ++v) {
      if (comp[v] == c) {
        cls.push_back(v);
      }
    }
    if (digraph_period(T, cls) != 1) {
      raise(ErrorKind::NotErgodic, "recurrent class is periodic");
    }
    std::size_t const k = cls.size();
    RationalMatrix    A(k, k);
    std::vector<Rational> b(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        A(i, j) = T(cls[i], cls[j]);
      }
      A(i, i) -= 1;
    }
    for (std::size_t j = 0; j < k; ++j) {
      A(k - 1, j) = 1;
    }
    b[k - 1] = 1;
    auto         x = solve_linear(std::move(A), std::move(b));
    Distribution pi(n);
    for (std::size_t i = 0; i < k; ++i) {
      pi[cls[i]] = x[i];
    }
    return pi;
  }

  Rational tv_distance(Distribution const& nu, Distribution const& mu) {
    if (nu.size() != mu.size()) {
      raise(ErrorKind::DimensionMismatch, "distributions of different length");
    }
    Rational s = 0;
    for (std::size_t i = 0; i < nu.size(); ++i) {
      s += abs(nu[i] - mu[i]);
    }
    return s / 2;
  }

  std::vector<Rational> worst_case_tv_profile(RationalMatrix const& T,
                                              Distribution const&   pi,
                                              std::size_t           n_max) {
    std::size_t const     n = T.rows();
    RationalMatrix        Tn = RationalMatrix::identity(n);
    std::vector<Rational> out;
    for (std::size_t step = 0; step <= n_max; ++step) {
      if (step > 0) {
        Tn = T * Tn;
      }
      Rational worst = 0;
      for (std::size_t b = 0; b < n; ++b) {
        worst = std::max(worst, tv_distance(Tn.column(b), pi));
      }
      out.push_back(worst);
    }
    return out;
  }

  ErgodicityReport ergodicity_check(FiniteMonoid const&          M,
                                    Action const&                action,
                                    ProbabilityAssignment const& P) {
    ErgodicityReport report;
    RationalMatrix   T   = transition_matrix(M, action, P);
    auto             adj = support_digraph(T);
    std::uint32_t    count = 0;
    strongly_connected_components(adj, count);
    if (count != 1) {
      report.verdict = ErgodicityVerdict::NotTransitive;
      return report;
    }
    std::vector<std::size_t> all(action.size());
    std::iota(all.begin(), all.end(), 0);
    report.period = digraph_period(T, all);
    auto sub      = generated_submonoid(M, P.support());
    bool constant = std::any_of(sub.begin(), sub.end(),
                                [&](ElementId m) { return action.is_constant(m); });
    report.verdict = constant ? ErgodicityVerdict::Ergodic : ErgodicityVerdict::NoConstant;
    return report;
  }

}  // namespace monowalk
