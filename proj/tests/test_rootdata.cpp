#include <catch2/catch_amalgamated.hpp>

#include "normgen/normgen.hpp"

using namespace normgen;

namespace {
  Rational q(std::string_view s) {
    return Rational::parse(s);
  }
}  // namespace

TEST_CASE("elementary matrices", "[rootdata]") {
  Rationals f;
  CHECK(elementary(f, 2, 0, 1, q("0")).is_identity());
  auto const e13 = elementary(f, 3, 0, 2, q("1"));
  CHECK(e13 == GroupMatrix<Rationals>(f, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(e13.is_upper_unitriangular());
  auto const low = elementary(f, 2, 1, 0, q("5"));
  CHECK(low.is_lower_unitriangular());
  CHECK(low.matrix().determinant() == f.one());
  CHECK(low(1, 0) == q("5"));
  CHECK_THROWS_AS(elementary(f, 3, 1, 1, q("2")), precondition_failure);
  CHECK_THROWS_AS(elementary(f, 3, 0, 3, q("2")), precondition_failure);
}

TEST_CASE("coroots", "[rootdata]") {
  Rationals f;
  CHECK(coroot(f, 4, 0, q("1")).is_identity());
  CHECK(coroot(f, 2, 0, q("2"))
        == GroupMatrix<Rationals>::diagonal(f, {q("2"), q("1/2")}));
  CHECK(coroot(f, 3, 1, q("3"))
        == GroupMatrix<Rationals>::diagonal(f, {q("1"), q("3"), q("1/3")}));
  CHECK_THROWS_AS(coroot(f, 3, 0, q("0")), precondition_failure);
  CHECK_THROWS_AS(coroot(f, 3, 2, q("2")), precondition_failure);

  Randomness rng(2);
  for (int k = 0; k < 50; ++k) {
    auto const a = random_nonzero_scalar(f, rng, 30);
    auto const b = random_nonzero_scalar(f, rng, 30);
    std::size_t const i = rng.below(4);
    CHECK(coroot(f, 5, i, a) * coroot(f, 5, i, b) == coroot(f, 5, i, a * b));
  }
}

TEST_CASE("coroot coordinates are injective", "[rootdata]") {
  PrimeField const f(5);
  std::size_t const n = 3;
  // All (a1, a2) in (F_5^*)^2 give distinct diagonal elements.
  std::vector<GroupMatrix<PrimeField>> seen;
  for (long long a1 = 1; a1 < 5; ++a1) {
    for (long long a2 = 1; a2 < 5; ++a2) {
      auto const t = coroot(f, n, 0, f.from_int(a1)) * coroot(f, n, 1, f.from_int(a2));
      CHECK(t.is_diagonal());
      for (auto const& s : seen) {
        CHECK_FALSE(s == t);
      }
      seen.push_back(t);
    }
  }
  CHECK(seen.size() == 16);  // = |T(F_5)| for SL_3
}

TEST_CASE("Weyl representatives", "[rootdata]") {
  Rationals f;
  auto const s0 = simple_reflection_rep(f, 3, 0);
  CHECK(s0 == GroupMatrix<Rationals>(f, {{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}}));
  CHECK_THROWS_AS(simple_reflection_rep(f, 3, 2), precondition_failure);

  auto const n0 = longest_element_rep(f, 2);
  CHECK(n0 == GroupMatrix<Rationals>(f, {{0, 1}, {-1, 0}}));
  CHECK(n0 * n0 == GroupMatrix<Rationals>(f, {{-1, 0}, {0, -1}}));
  auto const x = q("7/3");
  CHECK(conjugate(elementary(f, 2, 0, 1, x), n0) == elementary(f, 2, 1, 0, -x));

  for (std::size_t n = 2; n <= 6; ++n) {
    auto const m   = longest_element_rep(f, n);
    auto const sq  = m * m;
    CHECK(sq.is_diagonal());
    for (auto const& d : sq.diagonal_entries()) {
      CHECK((d == f.one() || d == -f.one()));
    }
    // n0 U n0^-1 = U^- on the generators of U.
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        CHECK(conjugate(elementary(f, n, i, j, x), m).is_lower_unitriangular());
        CHECK(conjugate(elementary(f, n, j, i, x), m).is_upper_unitriangular());
      }
    }
  }
}

TEST_CASE("n0 squared for n = 3", "[rootdata]") {
  Rationals  f;
  auto const n0 = longest_element_rep(f, 3);
  // Reduced word (0, 1, 0); computed by hand multiplication.
  CHECK(reduced_word(longest_element(3)) == WeylWord{0, 1, 0});
  CHECK(n0 == GroupMatrix<Rationals>(f, {{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}));
  CHECK(n0 * n0 == GroupMatrix<Rationals>::identity(f, 3));
}

TEST_CASE("permutations and reduced words", "[rootdata]") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto const w0 = longest_element(n);
    CHECK(length(w0) == n * (n - 1) / 2);
    CHECK(reduced_word(w0).size() == n * (n - 1) / 2);
  }
  Permutation w{2, 0, 3, 1};
  CHECK(inverse(inverse(w)) == w);
  CHECK(reduced_word(w).size() == length(w));
  CHECK(length(identity_permutation(4)) == 0);
  Rationals f;
  // w-dot sends e_j to +-e_{w(j)}.
  auto const rep = weyl_rep(f, w);
  for (std::size_t j = 0; j < w.size(); ++j) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(rep(i, j).is_zero() == (i != w[j]));
    }
  }
}

TEST_CASE("simple root groups commute with distinct negative ones", "[rootdata]") {
  Rationals  f;
  Randomness rng(9);
  std::size_t const n = 5;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      auto const x = random_nonzero_scalar(f, rng, 9);
      auto const y = random_nonzero_scalar(f, rng, 9);
      auto const a = elementary(f, n, i, i + 1, x);
      auto const b = elementary(f, n, j + 1, j, y);
      if (i != j) {
        CHECK(a * b == b * a);
      } else {
        CHECK_FALSE(a * b == b * a);
      }
    }
  }
}

TEST_CASE("simple reflections swap the simple root groups", "[rootdata]") {
  Rationals f;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      auto const c = conjugate(elementary(f, n, i, i + 1, q("3")),
                               simple_reflection_rep(f, n, i));
      auto const root = root_group_of(c);
      REQUIRE(root.has_value());
      CHECK(root->i == i + 1);
      CHECK(root->j == i);
      CHECK(c(i + 1, i) == q("-3"));
      CHECK(in_root_group(c, RootIndex{i + 1, i}));
    }
  }
}

TEST_CASE("root index helpers", "[rootdata]") {
  CHECK(RootIndex{0, 1}.is_positive());
  CHECK(RootIndex{0, 1}.is_simple());
  CHECK_FALSE(RootIndex{0, 2}.is_simple());
  CHECK_FALSE(RootIndex{2, 1}.is_positive());
  CHECK(RootIndex{2, 1}.is_simple());
  CHECK(RootIndex{2, 1}.simple_index() == 1);
}
