#include "monowalk/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "monowalk/error.hpp"

namespace monowalk {

  std::vector<NodeId> IdempotentLattice::linear_extension() const {
    std::vector<std::size_t> below_count(size(), 0);
    for (NodeId x = 0; x < size(); ++x) {
      for (NodeId y = 0; y < size(); ++y) {
        below_count[x] += leq[y][x];
      }
    }
    std::vector<NodeId> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return below_count[a] < below_count[b]; });
    return order;
  }

  std::vector<std::vector<std::int64_t>> moebius_table(std::vector<std::vector<bool>> const& leq) {
    std::size_t const        k = leq.size();
    std::vector<std::size_t> below_count(k, 0);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        below_count[x] += leq[y][x];
      }
    }
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return below_count[a] < below_count[b]; });
    std::vector<std::vector<std::int64_t>> mu(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t y = 0; y < k; ++y) {
      mu[y][y] = 1;
      for (auto x : order) {
        if (x == y || !leq[y][x]) {
          continue;
        }
        std::int64_t s = 0;
        for (auto z : order) {
          if (z != x && leq[y][z] && leq[z][x]) {
            s += mu[y][z];
          }
        }
        mu[y][x] = -s;
      }
    }
    return mu;
  }

  IdempotentLattice build_lattice(FiniteMonoid const& M) {
    if (!is_r_trivial(M)) {
      raise(ErrorKind::NotRTrivial, "the lattice Λ(M) is only built for ℛ-trivial monoids");
    }
    IdempotentLattice L;
    auto              omega = idempotent_powers(M);
    std::vector<NodeId> node_of(M.size(), UINT32_MAX);
    for (ElementId e = 0; e < M.size(); ++e) {
      if (!M.is_idempotent(e)) {
        continue;
      }
      for (NodeId x = 0; x < L.representative.size(); ++x) {
        ElementId r = L.representative[x];
        if (M.product(e, r) == e && M.product(r, e) == r) {
          node_of[e] = x;
          break;
        }
      }
      if (node_of[e] == UINT32_MAX) {
        node_of[e] = static_cast<NodeId>(L.representative.size());
        L.representative.push_back(e);
      }
    }
    std::size_t const k = L.size();
    L.leq.assign(k, std::vector<bool>(k, false));
    L.meet.assign(k, std::vector<NodeId>(k, 0));
    for (NodeId x = 0; x < k; ++x) {
      for (NodeId y = 0; y < k; ++y) {
        ElementId ex = L.representative[x];
        ElementId ey = L.representative[y];
        L.leq[x][y]  = M.product(ex, ey) == ex;
        L.meet[x][y] = node_of[omega[M.product(ex, ey)]];
      }
    }
    L.moebius = moebius_table(L.leq);
    L.top     = node_of[0];
    L.content.resize(M.size());
    for (ElementId m = 0; m < M.size(); ++m) {
      L.content[m] = node_of[omega[m]];
    }
    L.bottom = L.content[0];
    for (NodeId x = 0; x < k; ++x) {
      if (L.leq[x][L.bottom]) {
        L.bottom = x;
      }
    }
    // In an ℛ-trivial monoid mt = m forces every letter of t to fix m, so the
    // right stabiliser is generated by the stabilising generators and the
    // ω-power of their product lies in its minimal ideal.
    L.descent.resize(M.size());
    for (ElementId m = 0; m < M.size(); ++m) {
      ElementId z = 0;
      for (std::size_t g = 0; g < M.generator_count(); ++g) {
        if (M.right(m, g) == m) {
          z = M.right(z, g);
        }
      }
      L.descent[m] = L.content[z];
    }
    return L;
  }

  NodeId content_map(IdempotentLattice const& L, ElementId m) {
    return L.content.at(m);
  }

  NodeId descent_map(IdempotentLattice const& L, ElementId m) {
    return L.descent.at(m);
  }

  std::vector<std::size_t> generator_indices_above(FiniteMonoid const&      M,
                                                   IdempotentLattice const& L,
                                                   NodeId                   X) {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < M.generator_count(); ++g) {
      if (L.leq[X][L.content[M.generator_element(g)]]) {
        out.push_back(g);
      }
    }
    return out;
  }

  std::vector<std::string> generators_above(FiniteMonoid const& M, IdempotentLattice const& L, NodeId X) {
    std::vector<std::string> out;
    for (auto g : generator_indices_above(M, L, X)) {
      out.push_back(M.generators()[g].name);
    }
    return out;
  }

}  // namespace monowalk
