#include "monowalk/green.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "monowalk/error.hpp"

namespace monowalk {

  std::vector<std::uint32_t> strongly_connected_components(
      std::vector<std::vector<std::uint32_t>> const& adj,
      std::uint32_t&                                 component_count) {
    // Iterative Tarjan.
    std::size_t const          n = adj.size();
    constexpr std::uint32_t    unset = UINT32_MAX;
    std::vector<std::uint32_t> index(n, unset), low(n, 0), comp(n, unset);
    std::vector<std::uint32_t> stack;
    std::vector<bool>          on_stack(n, false);
    std::vector<std::pair<std::uint32_t, std::size_t>> call;
    std::uint32_t              counter = 0;
    component_count                    = 0;
    for (std::uint32_t root = 0; root < n; ++root) {
      if (index[root] != unset) {
        continue;
      }
      call.emplace_back(root, 0);
      while (!call.empty()) {
        auto& [v, edge] = call.back();
        if (edge == 0) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = true;
        }
        if (edge < adj[v].size()) {
          std::uint32_t w = adj[v][edge++];
          if (index[w] == unset) {
            call.emplace_back(w, 0);
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        if (low[v] == index[v]) {
          std::uint32_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w]     = component_count;
          } while (w != v);
          ++component_count;
        }
        std::uint32_t finished = v;
        call.pop_back();
        if (!call.empty()) {
          low[call.back().first] = std::min(low[call.back().first], low[finished]);
        }
      }
    }
    return comp;
  }

  namespace {
    std::vector<std::vector<std::uint32_t>> condensation(
        std::vector<std::vector<std::uint32_t>> const& adj,
        std::vector<std::uint32_t> const&              comp,
        std::size_t                                    count) {
      std::vector<std::set<std::uint32_t>> edges(count);
      for (std::size_t v = 0; v < adj.size(); ++v) {
        for (auto w : adj[v]) {
          if (comp[v] != comp[w]) {
            edges[comp[v]].insert(comp[w]);
          }
        }
      }
      std::vector<std::vector<std::uint32_t>> out(count);
      for (std::size_t c = 0; c < count; ++c) {
        out[c].assign(edges[c].begin(), edges[c].end());
      }
      return out;
    }

    bool reaches(std::vector<std::vector<std::uint32_t>> const& dag,
                 std::uint32_t from, std::uint32_t to) {
      if (from == to) {
        return true;
      }
      std::vector<bool>          seen(dag.size(), false);
      std::vector<std::uint32_t> todo{from};
      seen[from] = true;
      while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        for (auto w : dag[v]) {
          if (w == to) {
            return true;
          }
          if (!seen[w]) {
            seen[w] = true;
            todo.push_back(w);
          }
        }
      }
      return false;
    }

    std::vector<std::vector<std::uint32_t>> cayley_graph(FiniteMonoid const& M, bool right_side) {
      std::vector<std::vector<std::uint32_t>> adj(M.size());
      for (ElementId m = 0; m < M.size(); ++m) {
        for (std::size_t g = 0; g < M.generator_count(); ++g) {
          adj[m].push_back(right_side ? M.right(m, g) : M.left(m, g));
        }
      }
      return adj;
    }
  }  // namespace

  bool GreenStructure::in_minimal_ideal(ElementId m) const {
    return minimal_ideal_mask[m];
  }

  bool GreenStructure::r_below(std::uint32_t lower, std::uint32_t upper) const {
    return reaches(r_order, upper, lower);
  }

  bool GreenStructure::l_below(std::uint32_t lower, std::uint32_t upper) const {
    return reaches(l_order, upper, lower);
  }

  GreenStructure green_structure(FiniteMonoid const& M) {
    GreenStructure G;
    auto           right_adj = cayley_graph(M, true);
    auto           left_adj  = cayley_graph(M, false);
    std::uint32_t  rc = 0, lc = 0, jc = 0;
    G.r_class_of    = strongly_connected_components(right_adj, rc);
    G.l_class_of    = strongly_connected_components(left_adj, lc);
    G.r_class_count = rc;
    G.l_class_count = lc;
    G.r_order       = condensation(right_adj, G.r_class_of, rc);
    G.l_order       = condensation(left_adj, G.l_class_of, lc);

    // Two-sided reachability: the minimal ideal is the unique sink component.
    std::vector<std::vector<std::uint32_t>> both(M.size());
    for (ElementId m = 0; m < M.size(); ++m) {
      both[m] = right_adj[m];
      both[m].insert(both[m].end(), left_adj[m].begin(), left_adj[m].end());
    }
    auto j_class = strongly_connected_components(both, jc);
    auto j_dag   = condensation(both, j_class, jc);
    std::vector<std::uint32_t> sinks;
    for (std::uint32_t c = 0; c < jc; ++c) {
      if (j_dag[c].empty()) {
        sinks.push_back(c);
      }
    }
    if (sinks.size() != 1) {
      raise(ErrorKind::InvalidInput, "monoid has no unique minimal ideal");
    }
    G.minimal_ideal_mask.assign(M.size(), false);
    for (ElementId m = 0; m < M.size(); ++m) {
      if (j_class[m] == sinks[0]) {
        G.minimal_ideal.push_back(m);
        G.minimal_ideal_mask[m] = true;
      }
      if (M.is_idempotent(m)) {
        G.idempotents.push_back(m);
      }
    }
    return G;
  }

  bool is_r_trivial(FiniteMonoid const& M) {
    std::uint32_t count = 0;
    strongly_connected_components(cayley_graph(M, true), count);
    return count == M.size();
  }

  ElementId idempotent_power(FiniteMonoid const& M, ElementId m) {
    std::size_t const       n = M.degree();
    auto                    base = M.element(m);
    std::vector<StateIndex> p(base.begin(), base.end());
    std::vector<StateIndex> next(n);
    for (std::size_t step = 0; step <= M.size(); ++step) {
      bool idem = true;
      for (std::size_t i = 0; i < n && idem; ++i) {
        idem = p[p[i]] == p[i];
      }
      if (idem) {
        return *M.find(p);
      }
      for (std::size_t i = 0; i < n; ++i) {
        next[i] = p[base[i]];
      }
      p.swap(next);
    }
    raise(ErrorKind::InvalidInput, "no idempotent power found");
  }

  std::vector<ElementId> idempotent_powers(FiniteMonoid const& M) {
    std::vector<ElementId> out(M.size());
    for (ElementId m = 0; m < M.size(); ++m) {
      out[m] = idempotent_power(M, m);
    }
    return out;
  }

  bool satisfies_r_trivial_identity(FiniteMonoid const& M) {
    auto omega = idempotent_powers(M);
    for (ElementId x = 0; x < M.size(); ++x) {
      for (ElementId y = 0; y < M.size(); ++y) {
        ElementId w = omega[M.product(x, y)];
        if (M.product(w, x) != w) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_aperiodic(FiniteMonoid const& M) {
    for (ElementId m = 0; m < M.size(); ++m) {
      ElementId w = idempotent_power(M, m);
      if (M.product(w, m) != w) {
        return false;
      }
    }
    return true;
  }

  bool is_left_regular_band(FiniteMonoid const& M) {
    for (ElementId x = 0; x < M.size(); ++x) {
      if (!M.is_idempotent(x)) {
        return false;
      }
    }
    for (ElementId x = 0; x < M.size(); ++x) {
      for (ElementId y = 0; y < M.size(); ++y) {
        ElementId xy = M.product(x, y);
        if (M.product(xy, x) != xy) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_karnofsky_rhodes(FiniteMonoid const& M, std::vector<ElementId> const& generators) {
    std::vector<std::size_t> in_edges(M.size(), 0);
    std::vector<bool>        seen(M.size(), false);
    std::vector<ElementId>   todo{0};
    seen[0] = true;
    while (!todo.empty()) {
      ElementId m = todo.back();
      todo.pop_back();
      for (auto x : generators) {
        ElementId t = M.product(m, x);
        if (t == m) {
          continue;
        }
        ++in_edges[t];
        if (!seen[t]) {
          seen[t] = true;
          todo.push_back(t);
        }
      }
    }
    if (in_edges[0] != 0) {
      return false;
    }
    for (ElementId m = 1; m < M.size(); ++m) {
      if (!seen[m] || in_edges[m] != 1) {
        return false;
      }
    }
    return true;
  }

  bool is_karnofsky_rhodes(FiniteMonoid const& M) {
    std::vector<ElementId> gens;
    for (std::size_t g = 0; g < M.generator_count(); ++g) {
      gens.push_back(M.generator_element(g));
    }
    return is_karnofsky_rhodes(M, gens);
  }

  TreeMonoidCertificate check_generalized_tree_monoid(GeneratorSet const&             gens,
                                                      std::vector<std::size_t> const& order) {
    TreeMonoidCertificate cert;
    std::size_t const     n = gens.states().size();
    if (order.size() != gens.size()) {
      raise(ErrorKind::InvalidInput, "tree order must list every generator once");
    }
    for (std::size_t g = 0; g < gens.size(); ++g) {
      // x^{k+1} = x^k for some k ≤ n.
      Transformation p = gens[g].map;
      bool           eventually = false;
      for (std::size_t k = 0; k <= n && !eventually; ++k) {
        Transformation q = compose(p, gens[g].map);
        eventually       = (q == p);
        p                = std::move(q);
      }
      if (!eventually) {
        cert.holds  = false;
        cert.reason = "generator " + gens[g].name + " is not eventually idempotent";
        cert.x      = g;
        return cert;
      }
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        auto const& x  = gens[order[i]].map;
        auto const& y  = gens[order[j]].map;
        auto        yx = compose(y, x);
        if (yx == compose(x, y)) {
          continue;
        }
        if (y.is_idempotent() && compose(yx, y) == yx) {
          continue;
        }
        cert.holds  = false;
        cert.reason = "pair " + gens[order[i]].name + " < " + gens[order[j]].name
                      + " neither commutes nor satisfies yxy = yx with y idempotent";
        cert.x = order[i];
        cert.y = order[j];
        return cert;
      }
    }
    return cert;
  }

  TreeMonoidCertificate check_generalized_tree_monoid(GeneratorSet const& gens) {
    return check_generalized_tree_monoid(gens, gens.tree_order_indices());
  }

  std::vector<ElementId> constant_elements(FiniteMonoid const& M) {
    std::vector<ElementId> out;
    for (ElementId m = 0; m < M.size(); ++m) {
      if (M.is_constant(m)) {
        out.push_back(m);
      }
    }
    return out;
  }

  std::vector<ElementId> generated_submonoid(FiniteMonoid const& M,
                                             std::vector<ElementId> const& support) {
    std::vector<bool>      seen(M.size(), false);
    std::deque<ElementId>  todo{0};
    seen[0] = true;
    while (!todo.empty()) {
      ElementId m = todo.front();
      todo.pop_front();
      for (auto x : support) {
        ElementId t = M.product(m, x);
        if (!seen[t]) {
          seen[t] = true;
          todo.push_back(t);
        }
      }
    }
    std::vector<ElementId> out;
    for (ElementId m = 0; m < M.size(); ++m) {
      if (seen[m]) {
        out.push_back(m);
      }
    }
    return out;
  }

}  // namespace monowalk
