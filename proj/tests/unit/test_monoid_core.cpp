#include <catch_amalgamated.hpp>

#include <random>

#include "monowalk/error.hpp"
#include "monowalk/exchange.hpp"
#include "monowalk/green.hpp"
#include "monowalk/io.hpp"
#include "monowalk/lattice.hpp"
#include "monowalk/models/free_tree.hpp"
#include "monowalk/models/sandpile.hpp"
#include "monowalk/models/toom.hpp"
#include "monowalk/models/tsetlin.hpp"
#include "monowalk/monoid.hpp"
#include "monowalk/stochastic.hpp"
#include "oracles.hpp"

using namespace monowalk;

namespace {
  GeneratorSet perms(std::vector<std::vector<StateIndex>> maps) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      gens.push_back({"g" + std::to_string(i), Transformation(maps[i])});
    }
    return GeneratorSet(StateSpace::anonymous(maps.empty() ? 1 : maps[0].size()), std::move(gens));
  }

  GeneratorSet random_generators(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::uniform_int_distribution<StateIndex> pick(0, static_cast<StateIndex>(n - 1));
    std::vector<std::vector<StateIndex>>      maps(k, std::vector<StateIndex>(n));
    for (auto& m : maps) {
      for (auto& t : m) {
        t = pick(rng);
      }
    }
    return perms(maps);
  }
}  // namespace

TEST_CASE("closure of two-book Tsetlin has three elements", "[monoid]") {
  auto M = close_monoid(models::tsetlin_generators(2));
  REQUIRE(M.size() == 3);
  REQUIRE(M.is_identity(0));
  REQUIRE(M.is_constant(1));
  REQUIRE(M.is_constant(2));
  REQUIRE(constant_elements(M) == std::vector<ElementId>{1, 2});
  auto G = green_structure(M);
  REQUIRE(G.r_class_count == 3);
  REQUIRE(G.minimal_ideal.size() == 2);
}

TEST_CASE("empty generator set closes to the identity", "[monoid]") {
  GeneratorSet gens(StateSpace::anonymous(3), {});
  auto         M = close_monoid(gens);
  REQUIRE(M.size() == 1);
  auto G = green_structure(M);
  REQUIRE(G.r_class_count == 1);
  REQUIRE(G.minimal_ideal == std::vector<ElementId>{0});
  REQUIRE(constant_elements(M).empty());
  REQUIRE(is_r_trivial(M));
  REQUIRE(is_aperiodic(M));
  REQUIRE(is_left_regular_band(M));
}

TEST_CASE("free tree monoid on two letters", "[monoid][free-tree]") {
  auto gens = models::free_tree_generators(2);
  auto M    = close_monoid(gens);
  REQUIRE(M.size() == 6);
  auto G = green_structure(M);
  std::set<std::string> ideal;
  for (auto m : G.minimal_ideal) {
    ideal.insert(gens.states().label(Action(M, gens).image(m, 0)));
  }
  REQUIRE(ideal == std::set<std::string>{"x2x1", "x1x2x1"});
  REQUIRE(is_karnofsky_rhodes(M));
  REQUIRE_FALSE(is_left_regular_band(M));
}

TEST_CASE("closure caps are errors, not truncation", "[monoid]") {
  auto gens = models::tsetlin_generators(4);
  REQUIRE_THROWS_AS(close_monoid(gens, 10), Error);
  try {
    close_monoid(gens, 10);
  } catch (Error const& e) {
    REQUIRE(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("witness words and products agree", "[monoid][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto gens = random_generators(rng, 4, 2);
    auto M    = close_monoid(gens);
    REQUIRE(M.size() == oracle::closure(oracle::raw_maps(gens), 4).size());
    for (ElementId m = 0; m < M.size(); ++m) {
      REQUIRE(M.evaluate(M.witness_word(m)) == m);
      REQUIRE(evaluate(gens, M.witness_word(m)) == M.transformation(m));
      for (ElementId n = 0; n < M.size(); n += 3) {
        auto w = M.witness_word(m);
        auto v = M.witness_word(n);
        w.insert(w.end(), v.begin(), v.end());
        REQUIRE(M.evaluate(w) == M.product(m, n));
        REQUIRE(M.transformation(M.product(m, n)) == compose(M.transformation(m), M.transformation(n)));
      }
    }
  }
}

TEST_CASE("composition is associative", "[monoid][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_generators(rng, 6, 3);
    auto a = g[0].map, b = g[1].map, c = g[2].map;
    REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("R-triviality by three routes", "[monoid][property]") {
  // The full transformation monoid on 3 points contains S3.
  auto T3 = close_monoid(perms({{1, 2, 0}, {1, 0, 2}, {0, 0, 2}}));
  REQUIRE(T3.size() == 27);
  REQUIRE_FALSE(is_r_trivial(T3));
  REQUIRE_FALSE(satisfies_r_trivial_identity(T3));

  // A semilattice.
  auto S = close_monoid(perms({{0, 0, 2, 2}, {0, 1, 0, 1}}));
  REQUIRE(is_r_trivial(S));
  REQUIRE(is_left_regular_band(S));

  REQUIRE(is_r_trivial(close_monoid(models::toom_fixed_generators(models::toom_fixed_spec({2, 2})))));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto gens = random_generators(rng, 4, 2);
    auto M    = close_monoid(gens);
    bool r    = is_r_trivial(M);
    REQUIRE(r == satisfies_r_trivial_identity(M));
    REQUIRE(r == oracle::r_trivial(oracle::raw_maps(gens), 4));
  }
}

TEST_CASE("aperiodicity", "[monoid]") {
  REQUIRE(is_aperiodic(close_monoid(GeneratorSet(StateSpace::anonymous(2), {}))));
  REQUIRE_FALSE(is_aperiodic(close_monoid(perms({{1, 0}}))));
  REQUIRE(is_aperiodic(close_monoid(models::sandpile_generators(models::sandpile_path({1, 1})))));
}

TEST_CASE("left regular bands", "[monoid]") {
  REQUIRE(is_left_regular_band(close_monoid(models::free_lrb_generators(3))));
  REQUIRE(is_left_regular_band(close_monoid(models::tsetlin_generators(3))));
  REQUIRE_FALSE(is_left_regular_band(close_monoid(models::free_tree_generators(2))));
}

TEST_CASE("idempotent powers", "[monoid]") {
  auto M = close_monoid(perms({{1, 0, 2}, {2, 2, 2}, {0, 0, 1}}));
  auto t = *M.find(Transformation({1, 0, 2}));
  REQUIRE(idempotent_power(M, t) == 0);
  auto c = *M.find(Transformation({2, 2, 2}));
  REQUIRE(idempotent_power(M, c) == c);
  auto f = *M.find(Transformation({0, 0, 1}));
  REQUIRE(idempotent_power(M, f) == *M.find(Transformation({0, 0, 0})));
  for (ElementId m = 0; m < M.size(); ++m) {
    REQUIRE(M.is_idempotent(idempotent_power(M, m)));
  }
}

TEST_CASE("minimal ideal is a left-zero ideal for R-trivial monoids", "[monoid][property]") {
  for (auto const& gens : {models::tsetlin_generators(3), models::free_tree_generators(3),
                           models::toom_fixed_generators(models::toom_fixed_spec({2, 1})),
                           models::sandpile_generators(models::sandpile_path({2, 1}))}) {
    auto M = close_monoid(gens);
    auto G = green_structure(M);
    for (auto m : G.minimal_ideal) {
      for (ElementId t = 0; t < M.size(); ++t) {
        REQUIRE(M.product(m, t) == m);
        REQUIRE(G.in_minimal_ideal(M.product(t, m)));
      }
    }
  }
}

TEST_CASE("stabilizer contract mt = m iff c(t) >= d(m)", "[monoid][lattice][property]") {
  for (auto const& gens : {models::free_lrb_generators(3), models::free_tree_generators(3),
                           models::toom_fixed_generators(models::toom_fixed_spec({2, 2})),
                           models::toom_loan_generators(models::toom_loan_spec(2, 2)),
                           models::sandpile_generators(models::sandpile_path({1, 2})),
                           kr_expansion_generators(build_coxeter("A2"))}) {
    auto M = close_monoid(gens);
    REQUIRE(M.size() <= 2000);
    auto L = build_lattice(M);
    bool lrb = is_left_regular_band(M);
    for (ElementId m = 0; m < M.size(); ++m) {
      if (lrb) {
        REQUIRE(content_map(L, m) == descent_map(L, m));
      }
      if (M.is_idempotent(m)) {
        REQUIRE(content_map(L, m) == descent_map(L, m));
      }
      for (ElementId t = 0; t < M.size(); ++t) {
        REQUIRE((M.product(m, t) == m) == L.below(descent_map(L, m), content_map(L, t)));
      }
    }
  }
}

TEST_CASE("Karnofsky-Rhodes recognition", "[monoid]") {
  REQUIRE(is_karnofsky_rhodes(close_monoid(models::free_tree_generators(3))));
  REQUIRE(is_karnofsky_rhodes(close_monoid(models::free_lrb_generators(2))));
  // π_{w0} of A2 is reached along both 121 and 212.
  REQUIRE_FALSE(is_karnofsky_rhodes(hecke_monoid(build_coxeter("A2"))));
}

TEST_CASE("generalized tree monoid certificates", "[monoid]") {
  auto toom = models::toom_fixed_generators(models::toom_fixed_spec({2, 2}));
  REQUIRE(check_generalized_tree_monoid(toom).holds);
  auto sand = models::sandpile_generators(models::sandpile_path({1, 2, 1}));
  REQUIRE(check_generalized_tree_monoid(sand).holds);
  auto cert = check_generalized_tree_monoid(perms({{1, 2, 0}, {1, 0, 2}}), {0, 1});
  REQUIRE_FALSE(cert.holds);
  REQUIRE(cert.x == 0u);
}

TEST_CASE("a positive tree certificate implies R-triviality", "[monoid][property]") {
  std::mt19937_64 rng(17);
  std::size_t     positives = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto gens = random_generators(rng, 3, 2);
    auto cert = check_generalized_tree_monoid(gens, {0, 1});
    if (cert.holds) {
      ++positives;
      REQUIRE(is_r_trivial(close_monoid(gens)));
    }
  }
  REQUIRE(positives > 0);
}

TEST_CASE("column-stochastic decomposition", "[monoid][stochastic]") {
  auto A = column_monomial(Transformation({1, 1, 0}));
  auto d = decompose_column_stochastic(A);
  REQUIRE(d.size() == 1);
  REQUIRE(d[0].first == 1);
  REQUIRE(d[0].second == Transformation({1, 1, 0}));

  auto id = decompose_column_stochastic(RationalMatrix::identity(3));
  REQUIRE(id.size() == 1);
  REQUIRE(id[0].second.is_identity());

  RationalMatrix T(2, 2);
  T(0, 0) = Rational(1, 2);
  T(0, 1) = Rational(1, 3);
  T(1, 0) = Rational(1, 2);
  T(1, 1) = Rational(2, 3);
  auto parts = decompose_column_stochastic(T);
  REQUIRE(parts.size() >= 2);
  REQUIRE(parts.size() <= 3);
  RationalMatrix back(2, 2);
  Rational       total = 0;
  for (auto const& [w, f] : parts) {
    REQUIRE(sgn(w) > 0);
    total += w;
    auto Af = column_monomial(f);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        back(r, c) += w * Af(r, c);
      }
    }
  }
  REQUIRE(total == 1);
  REQUIRE(back == T);

  T(1, 1) = Rational(1, 2);
  REQUIRE_THROWS_AS(decompose_column_stochastic(T), Error);
}

TEST_CASE("generator sets round-trip through JSON", "[monoid][io]") {
  auto gens = models::toom_fixed_generators(models::toom_fixed_spec({2, 1}));
  auto back = parse_generator_set(generator_set_to_json(gens));
  REQUIRE(back.states().labels() == gens.states().labels());
  REQUIRE(back.names() == gens.names());
  REQUIRE(back.tree_order() == gens.tree_order());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    REQUIRE(back[g].map == gens[g].map);
  }
  REQUIRE_THROWS_AS(parse_generator_set("{\"states\":[\"a\"],\"generators\":[{\"name\":\"x\",\"targets\":[3]}]}"),
                    Error);
  REQUIRE_THROWS_AS(parse_generator_set("not json"), Error);
}
