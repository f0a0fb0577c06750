#include "monowalk/spectrum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "monowalk/error.hpp"

namespace monowalk {

  std::vector<std::pair<Rational, std::int64_t>> SpectrumReport::merged() const {
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

  std::int64_t SpectrumReport::total_multiplicity() const {
    std::int64_t s = 0;
    for (auto const& e : entries) {
      s += e.multiplicity;
    }
    return s;
  }

  Rational eigenvalue(IdempotentLattice const& L, ProbabilityAssignment const& P, NodeId X) {
    Rational lambda = 0;
    for (auto const& [m, w] : P.entries()) {
      if (L.leq[X][L.content[m]]) {
        lambda += w;
      }
    }
    return lambda;
  }

  std::vector<std::size_t> fixed_point_counts(IdempotentLattice const& L, Action const& action) {
    std::vector<std::size_t> out;
    for (auto e : L.representative) {
      out.push_back(action.fixed_point_count(e));
    }
    return out;
  }

  std::int64_t multiplicity(IdempotentLattice const&        L,
                            NodeId                          X,
                            std::vector<std::size_t> const& fixed_points) {
    std::int64_t m = 0;
    for (NodeId Y = 0; Y < L.size(); ++Y) {
      if (L.leq[Y][X]) {
        m += static_cast<std::int64_t>(fixed_points[Y]) * L.moebius[Y][X];
      }
    }
    return m;
  }

  SpectrumReport spectrum(FiniteMonoid const&          M,
                          IdempotentLattice const&     L,
                          Action const&                action,
                          ProbabilityAssignment const& P) {
    SpectrumReport S;
    S.omega_size = action.size();
    auto fixed   = fixed_point_counts(L, action);
    for (NodeId X = 0; X < L.size(); ++X) {
      SpectrumEntry e;
      e.node             = X;
      e.lambda           = eigenvalue(L, P, X);
      e.multiplicity     = multiplicity(L, X, fixed);
      e.fixed_points     = fixed[X];
      e.generators_above = generators_above(M, L, X);
      if (e.multiplicity < 0) {
        raise(ErrorKind::MultiplicityMismatch,
              "negative multiplicity at lattice node " + std::to_string(X));
      }
      S.entries.push_back(std::move(e));
    }
    if (S.total_multiplicity() != static_cast<std::int64_t>(S.omega_size)) {
      raise(ErrorKind::MultiplicityMismatch, "multiplicities do not sum to |Ω|");
    }
    return S;
  }

  namespace {
    // Sparse integer matrix given by rows of (column, value).
    using SparseRows = std::vector<std::vector<std::pair<std::size_t, Integer>>>;

    Integer common_denominator(RationalMatrix const& T) {
      Integer D = 1;
      for (std::size_t r = 0; r < T.rows(); ++r) {
        for (std::size_t c = 0; c < T.cols(); ++c) {
          mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), T(r, c).get_den_mpz_t());
        }
      }
      return D;
    }

    // scale·(T − shift·I), which must be integral.
    SparseRows scaled_rows(RationalMatrix const& T, Integer const& scale, Rational const& shift) {
      SparseRows rows(T.rows());
      for (std::size_t r = 0; r < T.rows(); ++r) {
        for (std::size_t c = 0; c < T.cols(); ++c) {
          Rational v = T(r, c);
          if (r == c) {
            v -= shift;
          }
          if (sgn(v) == 0) {
            continue;
          }
          Rational s = v * scale;
          rows[r].emplace_back(c, Integer(s.get_num()));
        }
      }
      return rows;
    }

    using DenseInt = std::vector<std::vector<Integer>>;

    DenseInt multiply(SparseRows const& A, DenseInt const& B) {
      std::size_t const n = A.size();
      DenseInt          out(n, std::vector<Integer>(B.empty() ? 0 : B[0].size()));
      for (std::size_t i = 0; i < n; ++i) {
        for (auto const& [l, a] : A[i]) {
          auto const& row = B[l];
          auto&       dst = out[i];
          for (std::size_t j = 0; j < row.size(); ++j) {
            if (sgn(row[j]) != 0) {
              mpz_addmul(dst[j].get_mpz_t(), a.get_mpz_t(), row[j].get_mpz_t());
            }
          }
        }
      }
      return out;
    }

    DenseInt identity(std::size_t n) {
      DenseInt I(n, std::vector<Integer>(n));
      for (std::size_t i = 0; i < n; ++i) {
        I[i][i] = 1;
      }
      return I;
    }
  }  // namespace

  bool verify_spectrum_by_traces(RationalMatrix const&                                 T,
                                 std::vector<std::pair<Rational, std::int64_t>> const& spec,
                                 std::size_t                                           budget) {
    std::size_t const n = T.rows();
    if (n > budget) {
      raise(ErrorKind::BudgetExceeded,
            "trace verification limited to |Ω| ≤ " + std::to_string(budget));
    }
    Integer    D = common_denominator(T);
    SparseRows A = scaled_rows(T, D, 0);
    DenseInt   Pk = identity(n);
    Integer    Dk = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) {
        Pk = multiply(A, Pk);
        Dk *= D;
      }
      Integer tr = 0;
      for (std::size_t i = 0; i < n; ++i) {
        tr += Pk[i][i];
      }
      Rational rhs = 0;
      for (auto const& [lambda, mult] : spec) {
        rhs += Rational(mult) * power(lambda, k);
      }
      if (Rational(tr) != rhs * Dk) {
        return false;
      }
    }
    return true;
  }

  bool verify_spectrum_by_traces(RationalMatrix const& T, SpectrumReport const& S, std::size_t budget) {
    std::vector<std::pair<Rational, std::int64_t>> spec;
    for (auto const& e : S.entries) {
      spec.emplace_back(e.lambda, e.multiplicity);
    }
    return verify_spectrum_by_traces(T, spec, budget);
  }

  DiagonalizabilityVerdict check_diagonalizable_criterion(FiniteMonoid const&          M,
                                                          IdempotentLattice const&     L,
                                                          ProbabilityAssignment const& P) {
    std::vector<Rational> node_lambda;
    for (NodeId X = 0; X < L.size(); ++X) {
      node_lambda.push_back(eigenvalue(L, P, X));
    }
    auto const support = P.support();
    // Right multiplication tables for the support elements.
    std::vector<std::vector<ElementId>> times(support.size(), std::vector<ElementId>(M.size()));
    for (std::size_t s = 0; s < support.size(); ++s) {
      std::optional<std::size_t> as_gen;
      for (std::size_t g = 0; g < M.generator_count(); ++g) {
        if (M.generator_element(g) == support[s]) {
          as_gen = g;
          break;
        }
      }
      for (ElementId m = 0; m < M.size(); ++m) {
        times[s][m] = as_gen ? M.right(m, *as_gen) : M.product(m, support[s]);
      }
    }
    DiagonalizabilityVerdict verdict;
    std::vector<std::uint32_t> stamp(M.size(), UINT32_MAX);
    for (ElementId m = 0; m < M.size(); ++m) {
      Rational const&       lm = node_lambda[L.descent[m]];
      std::deque<ElementId> todo{m};
      stamp[m] = m;
      while (!todo.empty()) {
        ElementId u = todo.front();
        todo.pop_front();
        if (u != m && node_lambda[L.descent[u]] == lm) {
          verdict.satisfied = false;
          verdict.witness   = std::make_pair(m, u);
          return verdict;
        }
        for (std::size_t s = 0; s < support.size(); ++s) {
          ElementId t = times[s][u];
          if (stamp[t] != m) {
            stamp[t] = m;
            todo.push_back(t);
          }
        }
      }
    }
    return verdict;
  }

  bool verify_diagonalizable_minpoly(RationalMatrix const&        T,
                                     std::vector<Rational> const& eigenvalues,
                                     std::size_t                  budget) {
    std::size_t const n = T.rows();
    if (n > budget) {
      raise(ErrorKind::BudgetExceeded,
            "minimal-polynomial check limited to |Ω| ≤ " + std::to_string(budget));
    }
    Integer  D       = common_denominator(T);
    DenseInt product = identity(n);
    for (auto const& lambda : eigenvalues) {
      Integer scale;
      mpz_lcm(scale.get_mpz_t(), D.get_mpz_t(), lambda.get_den_mpz_t());
      product = multiply(scaled_rows(T, scale, lambda), product);
    }
    for (auto const& row : product) {
      for (auto const& x : row) {
        if (sgn(x) != 0) {
          return false;
        }
      }
    }
    return true;
  }

  bool verify_diagonalizable_minpoly(RationalMatrix const& T, SpectrumReport const& S, std::size_t budget) {
    std::vector<Rational> distinct;
    for (auto const& [lambda, mult] : S.merged()) {
      distinct.push_back(lambda);
    }
    return verify_diagonalizable_minpoly(T, distinct, budget);
  }

  std::optional<std::string> match_subset_spectrum(FiniteMonoid const&                  M,
                                                   IdempotentLattice const&             L,
                                                   SpectrumReport const&                S,
                                                   std::vector<SubsetEigenvalue> const& closed) {
    if (M.generator_count() > 64) {
      raise(ErrorKind::InvalidInput, "subset matching supports at most 64 generators");
    }
    std::map<std::uint64_t, SubsetEigenvalue const*> by_set;
    for (auto const& c : closed) {
      by_set[c.generators] = &c;
    }
    std::set<std::uint64_t> matched;
    for (auto const& e : S.entries) {
      std::uint64_t set = 0;
      for (auto g : generator_indices_above(M, L, e.node)) {
        set |= std::uint64_t{1} << g;
      }
      auto it = by_set.find(set);
      if (it == by_set.end()) {
        return "node " + std::to_string(e.node) + " has no closed entry for generator set "
               + std::to_string(set);
      }
      if (it->second->lambda != e.lambda || it->second->multiplicity != e.multiplicity) {
        return "node " + std::to_string(e.node) + ": generic (" + to_string(e.lambda) + ", "
               + std::to_string(e.multiplicity) + ") vs closed (" + to_string(it->second->lambda) + ", "
               + std::to_string(it->second->multiplicity) + ")";
      }
      matched.insert(set);
    }
    for (auto const& c : closed) {
      if (!matched.count(c.generators) && c.multiplicity != 0) {
        return "closed entry for generator set " + std::to_string(c.generators) + " has multiplicity "
               + std::to_string(c.multiplicity) + " but matches no lattice node";
      }
    }
    return std::nullopt;
  }

}  // namespace monowalk
