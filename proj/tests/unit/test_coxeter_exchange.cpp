#include <catch_amalgamated.hpp>

#include <cmath>

#include "monowalk/bounds.hpp"
#include "monowalk/coxeter.hpp"
#include "monowalk/error.hpp"
#include "monowalk/exchange.hpp"
#include "monowalk/green.hpp"
#include "monowalk/lattice.hpp"
#include "monowalk/models/tsetlin.hpp"
#include "monowalk/spectrum.hpp"
#include "monowalk/stationary.hpp"
#include "monowalk/stochastic.hpp"
#include "monowalk/walk.hpp"
#include "oracles.hpp"

using namespace monowalk;

namespace {
  std::vector<std::string> labels(CoxeterSystem const& W, std::vector<Word> const& words) {
    std::vector<std::string> out;
    for (auto const& w : words) {
      out.push_back(reduced_word_label(W, w));
    }
    return out;
  }

  Word word(std::string const& digits) {
    Word out;
    for (char c : digits) {
      out.push_back(static_cast<std::uint32_t>(c - '1'));
    }
    return out;
  }

  // All systems small enough for the dense checks.
  std::vector<std::string> const small_systems{"A1", "A2", "A1^2", "A1^3", "A2xA1", "B2", "I2(5)", "A3"};
}  // namespace

TEST_CASE("Coxeter groups by type", "[coxeter]") {
  auto A1 = build_coxeter("A1");
  REQUIRE(A1.size() == 2);
  REQUIRE(A1.length(A1.longest()) == 1);

  auto A2 = build_coxeter("A2");
  REQUIRE(A2.size() == 6);
  REQUIRE(A2.length(A2.longest()) == 3);

  for (std::size_t n = 1; n <= 4; ++n) {
    auto W = build_coxeter("A1^" + std::to_string(n));
    REQUIRE(W.size() == (1u << n));
    // w0 is the all-ones vector: every generator is a descent.
    REQUIRE(W.right_descents(W.longest()) == (SubsetMask{1} << n) - 1);
    REQUIRE(W.length(W.longest()) == n);
  }
  std::vector<std::pair<std::string, std::size_t>> orders{
      {"A3", 24}, {"B2", 8}, {"B3", 48}, {"D4", 192}, {"I2(5)", 10}, {"A2xA1", 12}};
  for (auto const& [spec, order] : orders) {
    auto W = build_coxeter(spec);
    INFO(spec);
    REQUIRE(W.size() == order);
    REQUIRE(W.length(W.longest()) == positive_root_count(W.factors()));
    // w0 is the only element with full right descent set.
    std::size_t full = 0;
    for (GroupElement w = 0; w < W.size(); ++w) {
      full += W.right_descents(w) == (SubsetMask{1} << W.rank()) - 1;
    }
    REQUIRE(full == 1);
  }
  auto json = build_coxeter(R"({"factors":[{"type":"A","n":2},{"type":"I2","m":5}]})");
  REQUIRE(json.size() == 60);
  REQUIRE_THROWS_AS(build_coxeter("E8"), Error);
  REQUIRE_THROWS_AS(build_coxeter("A7", 1000), Error);
}

TEST_CASE("reduced words", "[coxeter]") {
  auto A2 = build_coxeter("A2");
  REQUIRE(labels(A2, reduced_words(A2, A2.longest())) == std::vector<std::string>{"121", "212"});
  auto A11 = build_coxeter("A1^2");
  REQUIRE(labels(A11, reduced_words(A11, A11.longest())) == std::vector<std::string>{"12", "21"});
  auto W = build_coxeter("A2xA1");
  REQUIRE(reduced_words(W, W.longest()).size() == 8);
  REQUIRE_THROWS_AS(reduced_words(build_coxeter("A3"), build_coxeter("A3").longest(), 5), Error);
  REQUIRE(reduced_word_label(A2, {}) == "e");

  for (auto const& spec : small_systems) {
    auto W    = build_coxeter(spec);
    auto cnts = reduced_word_counts(W);
    for (GroupElement w = 0; w < W.size(); ++w) {
      auto words = reduced_words(W, w);
      REQUIRE(cnts[w] == static_cast<unsigned long>(words.size()));
      for (auto const& r : words) {
        REQUIRE(is_reduced_word(W, r));
        REQUIRE(W.evaluate(r) == w);
      }
    }
  }
}

TEST_CASE("exchange moves", "[coxeter][exchange]") {
  auto A2 = build_coxeter("A2");
  REQUIRE(exchange_op(A2, 0, word("212")) == word("121"));
  REQUIRE(exchange_op(A2, 0, word("121")) == word("121"));
  REQUIRE_THROWS_AS(exchange_op(A2, 0, word("12")), Error);

  // A1^n: an exchange move is move-to-front.
  auto W = build_coxeter("A1^3");
  REQUIRE(exchange_op(W, 2, word("123")) == word("312"));
  REQUIRE(exchange_op(W, 1, word("312")) == word("231"));

  for (auto const& spec : small_systems) {
    auto S = build_coxeter(spec);
    for (auto const& a : reduced_words(S, S.longest())) {
      for (std::size_t s = 0; s < S.rank(); ++s) {
        auto once = exchange_op(S, s, a);
        REQUIRE(S.evaluate(once) == S.longest());
        REQUIRE(once.front() == s);
        REQUIRE(exchange_op(S, s, once) == once);
        // Concatenate-and-strip realizes the same move.
        Word sa{static_cast<std::uint32_t>(s)};
        sa.insert(sa.end(), a.begin(), a.end());
        REQUIRE(descent_strip(S, sa) == once);
      }
    }
  }
}

TEST_CASE("0-Hecke monoid", "[coxeter][hecke]") {
  auto H1 = hecke_monoid(build_coxeter("A1"));
  REQUIRE(H1.size() == 2);
  for (auto const& spec : small_systems) {
    auto W = build_coxeter(spec);
    auto H = hecke_monoid(W);
    INFO(spec);
    REQUIRE(H.size() == W.size());
    auto G = green_structure(H);
    // J-trivial: both R- and L-classes are singletons.
    REQUIRE(G.r_class_count == H.size());
    REQUIRE(G.l_class_count == H.size());
    REQUIRE(G.minimal_ideal.size() == 1);
    // Idempotents are the π_{w_J}: one per subset J.
    REQUIRE(G.idempotents.size() == (std::size_t{1} << W.rank()));
  }
}

TEST_CASE("Karnofsky-Rhodes expansion", "[coxeter][expansion]") {
  auto A11 = kr_expansion(build_coxeter("A1^2"));
  REQUIRE(A11.size() == 5);
  REQUIRE(is_left_regular_band(A11));
  for (auto const& spec : small_systems) {
    auto W      = build_coxeter(spec);
    auto M      = kr_expansion(W);
    auto counts = reduced_word_counts(W);
    Integer total = 0;
    for (auto const& c : counts) {
      total += c;
    }
    INFO(spec);
    REQUIRE(Integer(static_cast<unsigned long>(M.size())) == total);
    REQUIRE(is_karnofsky_rhodes(M));
    REQUIRE(is_r_trivial(M));
    auto G = green_structure(M);
    REQUIRE(Integer(static_cast<unsigned long>(G.minimal_ideal.size())) == counts[W.longest()]);
    REQUIRE(all_reduced_words(W).size() == M.size());
  }
  REQUIRE(kr_expansion(build_coxeter("A2")).size() == 7);
}

TEST_CASE("expansion product is concatenate then strip", "[coxeter][expansion][property]") {
  for (auto const& spec : {"A2", "A2xA1"}) {
    auto W     = build_coxeter(spec);
    auto M     = kr_expansion(W);
    auto words = all_reduced_words(W);
    std::map<Word, ElementId> id;
    for (ElementId m = 0; m < M.size(); ++m) {
      id[descent_strip(W, M.witness_word(m))] = m;
    }
    REQUIRE(id.size() == M.size());
    for (auto const& a : words) {
      for (auto const& b : words) {
        Word ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        REQUIRE(M.product(id.at(a), id.at(b)) == id.at(descent_strip(W, ab)));
      }
    }
  }
}

TEST_CASE("exchange spectrum", "[exchange][spectrum]") {
  for (auto const& spec : small_systems) {
    auto W = build_coxeter(spec);
    for (auto scheme : {ProbabilityScheme::Uniform, ProbabilityScheme::Powers}) {
      auto chain = make_exchange_chain(W, generic_probability(W.rank(), scheme));
      auto S     = exchange_spectrum(chain);
      std::int64_t total = 0;
      for (auto const& e : S.entries) {
        total += e.multiplicity;
        REQUIRE(e.multiplicity >= 0);
      }
      INFO(spec);
      REQUIRE(static_cast<std::size_t>(total) == S.omega_size);
      REQUIRE(S.entries.back().lambda == 1);
      REQUIRE(S.entries.back().multiplicity == 1);

      auto M   = kr_expansion(W);
      auto L   = build_lattice(M);
      auto act = exchange_action(M, W);
      auto P   = ProbabilityAssignment::from_generator_weights(M, chain.P);
      auto T   = transition_matrix(M, act, P);
      REQUIRE(is_column_stochastic(T));
      REQUIRE(S.merged() == spectrum(M, L, act, P).merged());
      REQUIRE(verify_spectrum_by_traces(T, S.merged()));
      REQUIRE(oracle::charpoly_matches(T, S.merged()));
    }
  }
  // A1^3: multiplicity d_{3−|J|} per J.
  auto W = build_coxeter("A1^3");
  auto S = exchange_spectrum(make_exchange_chain(W, generic_probability(3, ProbabilityScheme::Powers)));
  std::int64_t const d[] = {2, 1, 0, 1};
  for (auto const& e : S.entries) {
    REQUIRE(e.multiplicity == d[std::popcount(e.J)]);
  }
}

TEST_CASE("each generator acts by a column-monomial matrix", "[exchange]") {
  auto W    = build_coxeter("A2xA1");
  auto gens = exchange_walk_generators(W);
  REQUIRE(gens.states().size() == 8);
  for (auto const& g : gens.generators()) {
    auto A = column_monomial(g.map);
    for (std::size_t c = 0; c < A.cols(); ++c) {
      int ones = 0;
      for (std::size_t r = 0; r < A.rows(); ++r) {
        ones += A(r, c) == 1;
      }
      REQUIRE(ones == 1);
    }
    REQUIRE(g.map.is_idempotent());
  }
}

TEST_CASE("exchange stationary distribution", "[exchange][stationary]") {
  auto A11 = build_coxeter("A1^2");
  auto pi  = exchange_stationary(make_exchange_chain(A11, {Rational(1, 3), Rational(2, 3)}));
  REQUIRE(pi == Distribution{Rational(1, 3), Rational(2, 3)});  // π(12) = p(s1)
  REQUIRE(exchange_stationary(make_exchange_chain(build_coxeter("A1"), {Rational(1)})) == Distribution{Rational(1)});

  std::mt19937_64 rng(17);
  for (auto const& spec : small_systems) {
    auto W     = build_coxeter(spec);
    auto chain = make_exchange_chain(W, oracle::random_probability(W.rank(), rng));
    auto gens  = exchange_walk_generators(W);
    auto M     = close_monoid(gens);
    auto P     = ProbabilityAssignment::from_generator_weights(M, chain.P);
    auto T     = transition_matrix(M, Action(M, gens), P);
    INFO(spec);
    REQUIRE(exchange_stationary(chain) == oracle::stationary(T));

    auto E  = kr_expansion(W);
    auto G  = green_structure(E);
    auto L  = build_lattice(E);
    auto PE = ProbabilityAssignment::from_generator_weights(E, chain.P);
    REQUIRE(push_forward(stationary_kr_product(E, G, L, PE), exchange_action(E, W)) == exchange_stationary(chain));
  }
  REQUIRE_THROWS_AS(make_exchange_chain(build_coxeter("A2"), {Rational(1), Rational(0)}), Error);
  REQUIRE_THROWS_AS(make_exchange_chain(build_coxeter("A2"), {Rational(1, 2), Rational(1, 3)}), Error);
}

TEST_CASE("exchange mixing bound", "[exchange][bounds]") {
  auto A1 = make_exchange_chain(build_coxeter("A1"), {Rational(1)});
  REQUIRE(exchange_mixing_bound(A1, 1).steps == 2);
  REQUIRE_THROWS_AS(exchange_mixing_bound(A1, 0), Error);

  for (auto const& spec : {"A2", "A2xA1", "A1^3", "B2"}) {
    auto W     = build_coxeter(spec);
    auto chain = make_exchange_chain(W, generic_probability(W.rank(), ProbabilityScheme::Uniform));
    auto b     = exchange_mixing_bound(chain, 1);
    auto gens  = exchange_walk_generators(W);
    auto M     = close_monoid(gens);
    auto T     = transition_matrix(M, Action(M, gens), ProbabilityAssignment::from_generator_weights(M, chain.P));
    auto tv    = worst_case_tv_profile(T, exchange_stationary(chain), b.steps);
    INFO(spec);
    REQUIRE(to_double(tv[b.steps]) <= std::exp(-1.0));
    if (std::string(spec) == "A2") {
      REQUIRE(b.m == 3);
      REQUIRE(b.p == Rational(1, 2));
      REQUIRE(b.steps == 12);
    }
  }
}

TEST_CASE("longest parabolic elements", "[coxeter]") {
  auto W = build_coxeter("A2xA1");
  REQUIRE(longest_parabolic(W, 0) == 0);
  REQUIRE(longest_parabolic(W, 0b111) == W.longest());
  auto A2 = build_coxeter("A2");
  REQUIRE(A2.shortlex_word(longest_parabolic(A2, 0b01)) == word("1"));
  for (SubsetMask J = 0; J < 8; ++J) {
    auto w = longest_parabolic(W, J);
    REQUIRE(W.multiply(w, w) == 0);
    REQUIRE(W.right_descents(w) == J);
  }
}

TEST_CASE("A1^n exchange walk is the Tsetlin library", "[exchange][tsetlin]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto W  = build_coxeter("A1^" + std::to_string(n));
    auto ex = exchange_walk_generators(W);
    auto ts = models::tsetlin_generators(n);
    REQUIRE(ex.states().size() == ts.states().size());
    // Both are lexicographic: reduced word 1..n ↔ shelf a..z.
    for (StateIndex s = 0; s < ex.states().size(); ++s) {
      std::string relabel;
      for (char c : ex.states().label(s)) {
        relabel += static_cast<char>('a' + (c - '1'));
      }
      REQUIRE(relabel == ts.states().label(s));
    }
    for (std::size_t g = 0; g < n; ++g) {
      REQUIRE(ex[g].map == ts[g].map);
    }
  }
}
