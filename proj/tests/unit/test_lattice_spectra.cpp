#include <catch_amalgamated.hpp>

#include <random>

#include "monowalk/error.hpp"
#include "monowalk/exchange.hpp"
#include "monowalk/green.hpp"
#include "monowalk/lattice.hpp"
#include "monowalk/models/free_tree.hpp"
#include "monowalk/models/registry.hpp"
#include "monowalk/models/toom.hpp"
#include "monowalk/models/tsetlin.hpp"
#include "monowalk/probability.hpp"
#include "monowalk/spectrum.hpp"
#include "monowalk/walk.hpp"
#include "oracles.hpp"

using namespace monowalk;

namespace {
  struct Walk {
    FiniteMonoid          M;
    IdempotentLattice     L;
    Action                action;
    ProbabilityAssignment P;
    RationalMatrix        T;
    SpectrumReport        S;
  };

  Walk make_walk(GeneratorSet const& monoid, GeneratorSet const& states, std::vector<Rational> const& w) {
    Walk k;
    k.M      = close_monoid(monoid);
    k.L      = build_lattice(k.M);
    k.action = Action(k.M, states);
    k.P      = ProbabilityAssignment::from_generator_weights(k.M, w);
    k.T      = transition_matrix(k.M, k.action, k.P);
    k.S      = spectrum(k.M, k.L, k.action, k.P);
    return k;
  }

  Walk make_walk(GeneratorSet const& gens, std::vector<Rational> const& w) {
    return make_walk(gens, gens, w);
  }

  std::vector<Rational> toom22_weights() {
    return {Rational(1, 10), Rational(1, 5), Rational(3, 10), Rational(2, 5)};
  }

  SpectrumEntry const& node_with(Walk const& k, std::vector<std::string> const& above) {
    for (auto const& e : k.S.entries) {
      if (e.generators_above == above) {
        return e;
      }
    }
    FAIL("no node with the requested generators");
    return k.S.entries.front();
  }

  // μ from its defining recursion, independent of moebius_table.
  std::vector<std::vector<std::int64_t>> moebius_oracle(std::vector<std::vector<bool>> const& leq) {
    std::size_t const n = leq.size();
    std::vector<std::vector<std::int64_t>> mu(n, std::vector<std::int64_t>(n, 0));
    // Order pairs by interval size so smaller intervals are filled first.
    for (std::size_t size = 1; size <= n; ++size) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t x = 0; x < n; ++x) {
          if (!leq[y][x]) {
            continue;
          }
          std::size_t interval = 0;
          for (std::size_t z = 0; z < n; ++z) {
            interval += leq[y][z] && leq[z][x];
          }
          if (interval != size) {
            continue;
          }
          if (x == y) {
            mu[y][x] = 1;
            continue;
          }
          std::int64_t s = 0;
          for (std::size_t z = 0; z < n; ++z) {
            if (leq[y][z] && leq[z][x] && z != x) {
              s += mu[y][z];
            }
          }
          mu[y][x] = -s;
        }
      }
    }
    return mu;
  }
}  // namespace

TEST_CASE("lattice of the trivial monoid", "[lattice]") {
  auto M = close_monoid(GeneratorSet(StateSpace::anonymous(2), {}));
  auto L = build_lattice(M);
  REQUIRE(L.size() == 1);
  REQUIRE(L.top == L.bottom);
}

TEST_CASE("free tree lattice is the power set", "[lattice][free-tree]") {
  auto M = close_monoid(models::free_tree_generators(3));
  auto L = build_lattice(M);
  REQUIRE(L.size() == 8);
  std::map<NodeId, std::uint64_t> subset;
  std::set<std::uint64_t>         seen;
  for (NodeId X = 0; X < L.size(); ++X) {
    std::uint64_t s = 0;
    for (auto g : generator_indices_above(M, L, X)) {
      s |= std::uint64_t{1} << g;
    }
    subset[X] = s;
    seen.insert(s);
  }
  REQUIRE(seen.size() == 8);
  // X ≤ Y exactly when the generator set above X contains the one above Y.
  for (NodeId X = 0; X < L.size(); ++X) {
    for (NodeId Y = 0; Y < L.size(); ++Y) {
      REQUIRE(L.below(X, Y) == ((subset[X] & subset[Y]) == subset[Y]));
      int const d = __builtin_popcountll(subset[X] ^ subset[Y]);
      if (L.below(Y, X)) {
        REQUIRE(L.moebius[Y][X] == (d % 2 ? -1 : 1));
      }
    }
  }
}

TEST_CASE("faithful two-book Tsetlin lattice has two nodes", "[lattice]") {
  // The two constants generate the same left ideal, so Λ is a 2-chain.
  auto M = close_monoid(models::tsetlin_generators(2));
  auto L = build_lattice(M);
  REQUIRE(L.size() == 2);
  REQUIRE(L.moebius[L.bottom][L.top] == -1);
  // The free LRB on the same alphabet keeps all four subsets.
  REQUIRE(build_lattice(close_monoid(models::free_lrb_generators(2))).size() == 4);
}

TEST_CASE("Moebius table against the defining recursion", "[lattice][property]") {
  // Pentagon N5: 0 < a < b < 1, 0 < c < 1.
  std::vector<std::vector<bool>> n5(5, std::vector<bool>(5, false));
  auto set = [&](int x, int y) { n5[x][y] = true; };
  for (int i = 0; i < 5; ++i) {
    set(i, i);
    set(0, i);
    set(i, 4);
  }
  set(1, 2);
  REQUIRE(moebius_table(n5) == moebius_oracle(n5));
  REQUIRE(moebius_table(n5)[0][4] == 1);  // −(μ(0,0) + μ(0,a) + μ(0,b) + μ(0,c)) = −(1 − 1 + 0 − 1)

  std::vector<std::vector<bool>> chain{{true, true}, {false, true}};
  REQUIRE(moebius_table(chain)[0][1] == -1);

  for (auto const& name : {"tsetlin", "toom-fixed", "toom-loan", "free-tree", "sandpile", "exchange-walk"}) {
    auto inst = models::build_model(name);
    auto L    = build_lattice(close_monoid(inst.monoid));
    REQUIRE(L.moebius == moebius_oracle(L.leq));
  }
}

TEST_CASE("lattice meets are idempotent powers of products", "[lattice][property]") {
  auto M = close_monoid(models::toom_fixed_generators(models::toom_fixed_spec({2, 2})));
  auto L = build_lattice(M);
  for (NodeId X = 0; X < L.size(); ++X) {
    for (NodeId Y = 0; Y < L.size(); ++Y) {
      ElementId ef = M.product(L.representative[X], L.representative[Y]);
      REQUIRE(L.meet[X][Y] == content_map(L, ef));
      REQUIRE(L.below(L.meet[X][Y], X));
      REQUIRE(L.below(L.meet[X][Y], Y));
    }
  }
}

TEST_CASE("building a lattice needs R-triviality", "[lattice]") {
  GeneratorSet s3(StateSpace::anonymous(3), {{"c", Transformation({1, 2, 0})}, {"t", Transformation({1, 0, 2})}});
  auto         M = close_monoid(s3);
  REQUIRE_THROWS_AS(build_lattice(M), Error);
}

TEST_CASE("Toom (2,2) spectrum node by node", "[spectrum][toom]") {
  auto k = make_walk(models::toom_fixed_generators(models::toom_fixed_spec({2, 2})), toom22_weights());
  // x11 = 1/10, x12 = 1/5, x21 = 3/10, x22 = 2/5.
  auto const& a = node_with(k, {"d1_1", "d2_2"});
  REQUIRE(a.lambda == Rational(1, 2));
  REQUIRE(a.multiplicity == 1);
  auto const& b = node_with(k, {"d1_2", "d2_1"});
  REQUIRE(b.lambda == Rational(1, 2));
  REQUIRE(b.multiplicity == 1);
  REQUIRE(k.S.entries[k.L.bottom].lambda == 1);
  REQUIRE(k.S.total_multiplicity() == 6);
  REQUIRE(verify_spectrum_by_traces(k.T, k.S));
  REQUIRE(oracle::charpoly_matches(k.T, k.S.merged()));
}

TEST_CASE("Tsetlin k=3 multiplicities follow derangement numbers", "[spectrum][tsetlin]") {
  auto k = make_walk(models::free_lrb_generators(3), models::tsetlin_generators(3),
                     generic_probability(3, ProbabilityScheme::Uniform));
  for (auto const& e : k.S.entries) {
    std::size_t const size = e.generators_above.size();
    std::int64_t const expected[] = {2, 1, 0, 1};  // d_3, d_2, d_1, d_0
    REQUIRE(e.multiplicity == expected[size]);
    REQUIRE(e.lambda == Rational(static_cast<long>(size)) / 3);
  }
  auto merged = k.S.merged();
  REQUIRE(merged.size() == 3);
  REQUIRE(oracle::charpoly_matches(k.T, merged));
}

TEST_CASE("one-state walk has a single unit eigenvalue", "[spectrum]") {
  GeneratorSet gens(StateSpace::anonymous(1), {{"g", Transformation({0})}});
  auto         k = make_walk(gens, {Rational(1)});
  REQUIRE(k.S.omega_size == 1);
  for (auto const& e : k.S.entries) {
    REQUIRE(e.multiplicity == (e.node == k.L.bottom ? 1 : 0));
  }
}

TEST_CASE("trace identities and their negative control", "[spectrum]") {
  RationalMatrix I = RationalMatrix::identity(4);
  REQUIRE(verify_spectrum_by_traces(I, std::vector<std::pair<Rational, std::int64_t>>{{Rational(1), 4}}));
  REQUIRE_FALSE(verify_spectrum_by_traces(I, std::vector<std::pair<Rational, std::int64_t>>{{Rational(1), 3}, {Rational(0), 1}}));

  auto k = make_walk(models::toom_fixed_generators(models::toom_fixed_spec({2, 2})), toom22_weights());
  auto S = k.S;
  for (auto& e : S.entries) {
    if (e.multiplicity > 0 && e.lambda != 1) {
      --e.multiplicity;
      ++S.entries[k.L.bottom].multiplicity;
      break;
    }
  }
  REQUIRE_FALSE(verify_spectrum_by_traces(k.T, S));
  REQUIRE_THROWS_AS(verify_spectrum_by_traces(k.T, k.S, 3), Error);
}

TEST_CASE("Moebius inversion round trip", "[spectrum][property]") {
  for (auto const& name : {"tsetlin", "toom-fixed", "toom-loan", "free-tree", "sandpile", "exchange-walk"}) {
    auto inst = models::build_model(name);
    auto M    = close_monoid(inst.monoid);
    auto k    = make_walk(inst.monoid, inst.states, generic_probability(M.generator_count(), ProbabilityScheme::Powers));
    auto fix  = fixed_point_counts(k.L, k.action);
    for (NodeId X = 0; X < k.L.size(); ++X) {
      std::int64_t s = 0;
      for (NodeId Y = 0; Y < k.L.size(); ++Y) {
        if (k.L.below(Y, X)) {
          s += k.S.entries[Y].multiplicity;
        }
      }
      REQUIRE(s == static_cast<std::int64_t>(fix[X]));
    }
  }
}

TEST_CASE("spectra match the characteristic polynomial under random weights", "[spectrum][property]") {
  std::mt19937_64 rng(2024);
  for (auto const& name : {"tsetlin", "toom-fixed", "toom-loan", "free-tree", "sandpile", "exchange-walk"}) {
    auto inst = models::build_model(name);
    for (int trial = 0; trial < 3; ++trial) {
      auto w = oracle::random_probability(inst.monoid.size(), rng);
      auto k = make_walk(inst.monoid, inst.states, w);
      INFO(name);
      REQUIRE(verify_spectrum_by_traces(k.T, k.S));
      REQUIRE(oracle::charpoly_matches(k.T, k.S.merged()));
    }
  }
}

TEST_CASE("diagonalizability criterion and min-poly oracle", "[spectrum][diagonal]") {
  RationalMatrix J(2, 2);
  J(0, 0) = Rational(1, 2);
  J(0, 1) = 1;
  J(1, 1) = Rational(1, 2);
  REQUIRE_FALSE(verify_diagonalizable_minpoly(J, std::vector<Rational>{Rational(1, 2)}));
  REQUIRE(verify_diagonalizable_minpoly(RationalMatrix::identity(3), std::vector<Rational>{Rational(1)}));

  auto lrb = make_walk(models::free_lrb_generators(3), models::tsetlin_generators(3),
                       {Rational(1, 2), Rational(1, 4), Rational(1, 4)});
  REQUIRE(check_diagonalizable_criterion(lrb.M, lrb.L, lrb.P).satisfied);

  auto ft = make_walk(models::free_tree_generators(2), generic_probability(2, ProbabilityScheme::Powers));
  REQUIRE(check_diagonalizable_criterion(ft.M, ft.L, ft.P).satisfied);
  REQUIRE(verify_diagonalizable_minpoly(ft.T, ft.S));

  std::mt19937_64 rng(8);
  for (auto const& name : {"toom-fixed", "toom-loan", "free-tree", "sandpile", "exchange-walk"}) {
    auto inst = models::build_model(name);
    for (auto const& w : {generic_probability(inst.monoid.size(), ProbabilityScheme::Uniform),
                          oracle::random_probability(inst.monoid.size(), rng)}) {
      auto k = make_walk(inst.monoid, inst.states, w);
      auto v = check_diagonalizable_criterion(k.M, k.L, k.P);
      if (v.satisfied) {
        REQUIRE(verify_diagonalizable_minpoly(k.T, k.S));
      } else {
        REQUIRE(v.witness.has_value());
      }
    }
  }
}

TEST_CASE("generic probability schemes", "[probability]") {
  REQUIRE(generic_probability(3, ProbabilityScheme::Powers)
          == std::vector<Rational>{Rational(1, 7), Rational(2, 7), Rational(4, 7)});
  REQUIRE(generic_probability(2, ProbabilityScheme::Uniform) == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  auto                w = generic_probability(6, ProbabilityScheme::Powers);
  std::set<Rational>  sums;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    Rational s = 0;
    for (std::size_t i = 0; i < 6; ++i) {
      if (mask >> i & 1) {
        s += w[i];
      }
    }
    sums.insert(s);
  }
  REQUIRE(sums.size() == 64);
  REQUIRE_THROWS_AS(ProbabilityAssignment({{0, Rational(1, 2)}}), Error);
  REQUIRE_THROWS_AS(ProbabilityAssignment({{0, Rational(-1, 2)}, {1, Rational(3, 2)}}), Error);
}
