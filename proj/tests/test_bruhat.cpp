#include <catch2/catch_amalgamated.hpp>

#include "normgen/normgen.hpp"
#include "support/oracles.hpp"

using namespace normgen;

namespace {
  template <Field F>
  bool canonical_u(BruhatForm<F> const& bf) {
    auto const winv = inverse(bf.w);
    for (std::size_t i = 0; i < bf.w.size(); ++i) {
      for (std::size_t j = i + 1; j < bf.w.size(); ++j) {
        if (winv[i] < winv[j] && !bf.u(i, j).is_zero()) {
          return false;
        }
      }
    }
    return true;
  }

  template <Field F>
  void check_bruhat(GroupMatrix<F> const& g) {
    auto const bf = bruhat_decompose(g);
    CHECK(bf.u.is_upper_unitriangular());
    CHECK(bf.b.is_upper_triangular());
    CHECK(bf.u * weyl_rep(g.field(), bf.w) * bf.b == g);
    CHECK(bf.product() == g);
    CHECK(canonical_u(bf));
  }
}  // namespace

TEST_CASE("big cell examples", "[bruhat]") {
  Rationals f;
  auto const id = big_cell_decompose(GroupMatrix<Rationals>::identity(f, 3));
  REQUIRE(id);
  CHECK(id->lower.is_identity());
  CHECK(id->torus.is_identity());
  CHECK(id->upper.is_identity());

  auto const bc = big_cell_decompose(GroupMatrix<Rationals>(f, {{1, 1}, {1, 2}}));
  REQUIRE(bc);
  CHECK(bc->lower == GroupMatrix<Rationals>(f, {{1, 0}, {1, 1}}));
  CHECK(bc->torus.is_identity());
  CHECK(bc->upper == GroupMatrix<Rationals>(f, {{1, 1}, {0, 1}}));

  CHECK_FALSE(big_cell_decompose(longest_element_rep(f, 2)));
  CHECK_FALSE(in_big_cell(longest_element_rep(f, 4)));
}

TEST_CASE("big cell matches leading minors exhaustively", "[bruhat]") {
  for (std::uint64_t p : {3U, 5U}) {
    auto const all = testing::all_special_linear(2, p);
    CHECK(all.size() == (p == 3 ? 24U : 120U));
    for (auto const& g : all) {
      auto const bc = big_cell_decompose(g);
      CHECK(bc.has_value() == testing::leading_minors_nonzero(g));
      if (bc) {
        CHECK(bc->lower.is_lower_unitriangular());
        CHECK(bc->torus.is_diagonal());
        CHECK(bc->upper.is_upper_unitriangular());
        CHECK(bc->product() == g);
      }
      check_bruhat(g);
    }
  }
  // SL_3(F_2): 168 elements.
  for (auto const& g : testing::all_special_linear(3, 2)) {
    CHECK(in_big_cell(g) == testing::leading_minors_nonzero(g));
    check_bruhat(g);
  }
}

TEST_CASE("Bruhat examples", "[bruhat]") {
  Rationals  f;
  Randomness rng(4);
  auto const b  = random_unitriangular(f, 3, true, rng, 5) * random_torus(f, 3, rng, 5);
  auto const bf = bruhat_decompose(b);
  CHECK(bf.u.is_identity());
  CHECK(bf.w == identity_permutation(3));
  CHECK(bf.b == b);

  auto const n0 = longest_element_rep(f, 3);
  auto const b0 = bruhat_decompose(n0);
  CHECK(b0.u.is_identity());
  CHECK(b0.w == longest_element(3));
  CHECK(b0.b.is_identity());

  GroupMatrix<Rationals> const g(f, {{0, 1}, {-1, 1}});
  auto const bg = bruhat_decompose(g);
  CHECK(bg.u.is_identity());
  CHECK(bg.w == longest_element(2));
  CHECK(bg.b == GroupMatrix<Rationals>(f, {{1, -1}, {0, 1}}));
}

TEST_CASE("Bruhat decomposition of random elements", "[bruhat]") {
  Randomness rng(6);
  Rationals  qf;
  PrimeField f3(3);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int i = 0; i < 20; ++i) {
      check_bruhat(random_group_element(qf, n, rng, 4));
      check_bruhat(random_group_element(f3, n, rng, 0));
      // Representatives of every kind of cell.
      Permutation w = identity_permutation(n);
      for (std::size_t k = n; k > 1; --k) {
        std::swap(w[k - 1], w[rng.below(k)]);
      }
      auto const g = random_unitriangular(qf, n, true, rng, 3) * weyl_rep(qf, w)
                     * random_unitriangular(qf, n, true, rng, 3)
                     * random_torus(qf, n, rng, 3);
      auto const bf = bruhat_decompose(g);
      CHECK(bf.w == w);
      CHECK(bf.product() == g);
    }
  }
}

TEST_CASE("Bruhat cell is a double coset invariant", "[bruhat]") {
  Randomness rng(8);
  Rationals  f;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int i = 0; i < 20; ++i) {
      auto const g  = random_group_element(f, n, rng, 3);
      auto const b1 = random_unitriangular(f, n, true, rng, 4) * random_torus(f, n, rng, 4);
      auto const b2 = random_torus(f, n, rng, 4) * random_unitriangular(f, n, true, rng, 4);
      CHECK(bruhat_decompose(b1 * g * b2).w == bruhat_decompose(g).w);
    }
  }
}

TEST_CASE("splitting over the big cell", "[bruhat]") {
  Rationals  f;
  Randomness rng(10);
  auto const id = split_over_big_cell(GroupMatrix<Rationals>::identity(f, 3), rng);
  CHECK(id.h * id.h_prime == GroupMatrix<Rationals>::identity(f, 3));
  CHECK(id.attempts == 1);

  auto const n0 = longest_element_rep(f, 2);
  auto const s  = split_over_big_cell(n0, rng);
  CHECK(s.h * s.h_prime == n0);
  CHECK(in_big_cell(s.h.inverse()));
  CHECK(in_big_cell(s.h_prime));
  CHECK(s.h_inverse_form.product() == s.h.inverse());
  CHECK(s.h_prime_form.product() == s.h_prime);

  for (std::size_t n = 2; n <= 5; ++n) {
    for (int i = 0; i < 10; ++i) {
      auto const g  = random_group_element(f, n, rng, 5);
      auto const sp = split_over_big_cell(g, rng);
      CHECK(sp.h * sp.h_prime == g);
      CHECK(in_big_cell(sp.h.inverse()));
      CHECK(in_big_cell(sp.h_prime));
    }
  }
}

TEST_CASE("splitting over small finite fields", "[bruhat]") {
  Randomness rng(12);
  for (std::uint64_t p : {2U, 3U, 5U}) {
    PrimeField const f(p);
    for (auto const& g : testing::all_special_linear(2, p)) {
      auto const sp = split_over_big_cell(g, rng);
      CHECK(sp.h * sp.h_prime == g);
      CHECK(in_big_cell(sp.h.inverse()));
      CHECK(in_big_cell(sp.h_prime));
    }
  }
}

TEST_CASE("split search reports exhaustion", "[bruhat]") {
  Rationals  f;
  Randomness rng(14);
  // With a budget of one only h' = I is tried, which fails for n0.
  CHECK_THROWS_AS(split_over_big_cell(longest_element_rep(f, 3), rng, 1),
                  search_exhausted);
  try {
    (void)split_over_big_cell(longest_element_rep(f, 3), rng, 1);
  } catch (search_exhausted const& e) {
    CHECK(e.attempts() == 1);
  }
}
