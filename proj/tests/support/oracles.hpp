#ifndef MONOWALK_TESTS_ORACLES_HPP_
#define MONOWALK_TESTS_ORACLES_HPP_

// Slow, obviously-correct reimplementations used only as test oracles.  None
// of them call into the library beyond its value types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "monowalk/matrix.hpp"
#include "monowalk/rational.hpp"
#include "monowalk/transformation.hpp"

namespace oracle {

  using monowalk::Rational;
  using monowalk::RationalMatrix;

  // Fraction-exact Gaussian elimination.
  inline Rational det(RationalMatrix A) {
    std::size_t const n = A.rows();
    Rational          d = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && A(p, c) == 0) {
        ++p;
      }
      if (p == n) {
        return 0;
      }
      if (p != c) {
        for (std::size_t k = 0; k < n; ++k) {
          std::swap(A(p, k), A(c, k));
        }
        d = -d;
      }
      d *= A(c, c);
      for (std::size_t r = c + 1; r < n; ++r) {
        if (A(r, c) == 0) {
          continue;
        }
        Rational f = A(r, c) / A(c, c);
        for (std::size_t k = c; k < n; ++k) {
          A(r, k) -= f * A(c, k);
        }
      }
    }
    return d;
  }

  // det(zI − T) at n+1 distinct points pins down the monic characteristic
  // polynomial, so agreement there is agreement of spectra with multiplicity.
  inline bool charpoly_matches(RationalMatrix const&                                 T,
                               std::vector<std::pair<Rational, std::int64_t>> const& spectrum) {
    std::size_t const n = T.rows();
    std::int64_t      total = 0;
    for (auto const& e : spectrum) {
      total += e.second;
    }
    if (total != static_cast<std::int64_t>(n)) {
      return false;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      Rational       z(static_cast<long>(2 * i + 3), 7);
      RationalMatrix A(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          A(r, c) = (r == c ? z : Rational(0)) - T(r, c);
        }
      }
      Rational rhs = 1;
      for (auto const& [lambda, m] : spectrum) {
        for (std::int64_t k = 0; k < m; ++k) {
          rhs *= z - lambda;
        }
      }
      if (det(A) != rhs) {
        return false;
      }
    }
    return true;
  }

  // Stationary vector by elimination on (T − I)π = 0 with Σπ = 1, assuming a
  // one-dimensional fixed space.
  inline std::vector<Rational> stationary(RationalMatrix const& T) {
    std::size_t const n = T.rows();
    RationalMatrix    A(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        A(r, c) = T(r, c) - (r == c ? 1 : 0);
      }
    }
    for (std::size_t c = 0; c <= n; ++c) {
      A(n - 1, c) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (A(p, c) == 0) {
        ++p;
      }
      for (std::size_t k = 0; k <= n; ++k) {
        std::swap(A(p, k), A(c, k));
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r != c && A(r, c) != 0) {
          Rational f = A(r, c) / A(c, c);
          for (std::size_t k = 0; k <= n; ++k) {
            A(r, k) -= f * A(c, k);
          }
        }
      }
    }
    std::vector<Rational> pi(n);
    for (std::size_t r = 0; r < n; ++r) {
      pi[r] = A(r, n) / A(r, r);
    }
    return pi;
  }

  using Map = std::vector<std::uint32_t>;

  inline Map compose(Map const& f, Map const& g) {
    Map h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      h[i] = f[g[i]];
    }
    return h;
  }

  // Every element of the generated monoid as a raw map.
  inline std::set<Map> closure(std::vector<Map> const& gens, std::size_t degree) {
    Map id(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      id[i] = static_cast<std::uint32_t>(i);
    }
    std::set<Map>    seen{id};
    std::vector<Map> todo{id};
    while (!todo.empty()) {
      Map m = todo.back();
      todo.pop_back();
      for (auto const& g : gens) {
        Map t = compose(m, g);
        if (seen.insert(t).second) {
          todo.push_back(t);
        }
      }
    }
    return seen;
  }

  inline std::vector<Map> raw_maps(monowalk::GeneratorSet const& gens) {
    std::vector<Map> out;
    for (auto const& g : gens.generators()) {
      out.push_back(g.map.targets());
    }
    return out;
  }

  // ℛ-trivial iff mM = nM forces m = n, on raw maps.
  inline bool r_trivial(std::vector<Map> const& gens, std::size_t degree) {
    auto                         all = closure(gens, degree);
    std::map<Map, std::set<Map>> right_ideal;
    for (auto const& m : all) {
      for (auto const& n : all) {
        right_ideal[m].insert(compose(m, n));
      }
    }
    std::set<std::set<Map>> distinct;
    for (auto const& [m, I] : right_ideal) {
      distinct.insert(I);
    }
    return distinct.size() == all.size();
  }

  // Words of the given content with no letter in its reference slot.
  inline std::uint64_t derangements(std::vector<std::uint32_t> const& content) {
    std::vector<std::uint32_t> ref;
    for (std::uint32_t b = 0; b < content.size(); ++b) {
      ref.insert(ref.end(), content[b], b + 1);
    }
    auto          w     = ref;
    std::uint64_t count = 0;
    do {
      bool ok = true;
      for (std::size_t i = 0; i < w.size() && ok; ++i) {
        ok = w[i] != ref[i];
      }
      count += ok;
    } while (std::next_permutation(w.begin(), w.end()));
    return count;
  }

  // Positive rationals with small denominators summing to exactly 1.
  inline std::vector<Rational> random_probability(std::size_t k, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(1, 9);
    std::vector<Rational>              w(k);
    Rational                           total = 0;
    for (auto& x : w) {
      x = d(rng);
      total += x;
    }
    for (auto& x : w) {
      x /= total;
    }
    return w;
  }

}  // namespace oracle

#endif  // MONOWALK_TESTS_ORACLES_HPP_
