#include <catch2/catch_amalgamated.hpp>

#include "normgen/normgen.hpp"
#include "support/oracles.hpp"

using namespace normgen;

namespace {
  Rational q(std::string_view s) {
    return Rational::parse(s);
  }

  // f(v) = v d v^-1 d^-1 evaluated directly.
  template <Field F>
  GroupMatrix<F> twisted(GroupMatrix<F> const& v, GroupMatrix<F> const& d) {
    return commutator(v, d);
  }
}  // namespace

TEST_CASE("regular Borel elements", "[conjsolver]") {
  Rationals f;
  CHECK_NOTHROW(RegularBorelElement<Rationals>(
      GroupMatrix<Rationals>(f, {{1, 7}, {0, 1}}) * coroot(f, 2, 0, q("2"))));
  CHECK_THROWS_AS(RegularBorelElement<Rationals>(GroupMatrix<Rationals>::identity(f, 2)),
                  precondition_failure);
  CHECK_THROWS_AS(RegularBorelElement<Rationals>(GroupMatrix<Rationals>(f, {{1, 0}, {1, 1}})),
                  precondition_failure);
  CHECK_THROWS_AS(RegularBorelElement<Rationals>(
                      GroupMatrix<Rationals>::diagonal(f, {q("2"), q("2"), q("1/4")})),
                  precondition_failure);
}

TEST_CASE("diagonalising in the Borel subgroup", "[conjsolver]") {
  Rationals  f;
  auto const d = GroupMatrix<Rationals>::diagonal(f, {q("2"), q("1/2")});
  auto const r = diagonalize_in_borel(RegularBorelElement<Rationals>(d));
  CHECK(r.conjugator.is_identity());
  CHECK(r.diagonal == d);

  auto const tt = GroupMatrix<Rationals>(
      Matrix<Rationals>(f, std::vector<std::vector<Rational>>{{q("2"), q("1")},
                                                              {q("0"), q("1/2")}}));
  auto const r2 = diagonalize_in_borel(RegularBorelElement<Rationals>(tt));
  CHECK(r2.conjugator == elementary(f, 2, 0, 1, q("2/3")));
  CHECK(conjugate(tt, r2.conjugator) == d);

  Randomness rng(7);
  PrimeField f11(11);
  for (int i = 0; i < 50; ++i) {
    auto const t4 = random_unitriangular(f11, 4, true, rng, 0)
                    * testing::distinct_diagonal(f11, 4, rng);
    auto const rr = diagonalize_in_borel(RegularBorelElement<PrimeField>(t4));
    CHECK(rr.conjugator.is_upper_unitriangular());
    CHECK(conjugate(t4, rr.conjugator) == rr.diagonal);
    CHECK(rr.diagonal.diagonal_entries() == t4.diagonal_entries());
  }
}

TEST_CASE("twisted conjugation examples", "[conjsolver]") {
  Rationals  f;
  auto const d = GroupMatrix<Rationals>::diagonal(f, {q("2"), q("1/2")});
  CHECK(solve_twisted_conjugation(d, GroupMatrix<Rationals>::identity(f, 2)).is_identity());
  auto const v = solve_twisted_conjugation(d, elementary(f, 2, 0, 1, q("1")));
  CHECK(v == elementary(f, 2, 0, 1, q("-1/3")));
  CHECK(twisted(v, d) == elementary(f, 2, 0, 1, q("1")));

  CHECK_THROWS_AS(solve_twisted_conjugation(
                      GroupMatrix<Rationals>::diagonal(f, {q("3"), q("3"), q("1/9")}),
                      GroupMatrix<Rationals>::identity(f, 3)),
                  precondition_failure);
  CHECK_THROWS_AS(solve_twisted_conjugation(d, elementary(f, 2, 1, 0, q("1"))),
                  precondition_failure);
  CHECK_THROWS_AS(solve_twisted_conjugation(elementary(f, 2, 0, 1, q("1")), d),
                  precondition_failure);
}

TEST_CASE("twisted conjugation round trip", "[conjsolver]") {
  Randomness rng(19);
  Rationals  qf;
  PrimeField f13(13);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int i = 0; i < 40; ++i) {
      auto const d  = testing::distinct_diagonal(qf, n, rng);
      auto const u  = random_unitriangular(qf, n, true, rng, 20);
      auto const v  = solve_twisted_conjugation(d, u);
      CHECK(v.is_upper_unitriangular());
      CHECK(twisted(v, d) == u);

      auto const dp = testing::distinct_diagonal(f13, n, rng);
      auto const up = random_unitriangular(f13, n, true, rng, 0);
      CHECK(twisted(solve_twisted_conjugation(dp, up), dp) == up);
    }
  }
}

TEST_CASE("twisted conjugation is injective on samples", "[conjsolver]") {
  Randomness rng(21);
  PrimeField f13(13);
  auto const d  = testing::distinct_diagonal(f13, 3, rng);
  std::vector<GroupMatrix<PrimeField>> us, vs;
  for (int i = 0; i < 30; ++i) {
    us.push_back(random_unitriangular(f13, 3, true, rng, 0));
    vs.push_back(solve_twisted_conjugation(d, us.back()));
  }
  for (std::size_t i = 0; i < us.size(); ++i) {
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      CHECK((us[i] == us[j]) == (vs[i] == vs[j]));
    }
  }
}

TEST_CASE("unipotent elements as two conjugates", "[conjsolver]") {
  Rationals  f;
  auto const d = GroupMatrix<Rationals>::diagonal(f, {q("2"), q("1/2")});
  RegularBorelElement<Rationals> const t(d);

  auto const c0 = unipotent_as_two_conjugates(t, GroupMatrix<Rationals>::identity(f, 2));
  REQUIRE(c0.length() == 2);
  CHECK(c0.word[0].conjugator.is_identity());
  CHECK(c0.word[1].conjugator.is_identity());
  CHECK(c0.word[0].exponent == 1);
  CHECK(c0.word[1].exponent == -1);
  CHECK(verify_certificate(c0));

  auto const c1 = unipotent_as_two_conjugates(t, elementary(f, 2, 0, 1, q("1")));
  REQUIRE(c1.length() == 2);
  CHECK(c1.word[0].conjugator == elementary(f, 2, 0, 1, q("-1/3")));
  CHECK(c1.word[1].conjugator.is_identity());
  CHECK(verify_certificate(c1));
  CHECK(c1.meta.bound_claimed == 2);

  CHECK_THROWS_AS(unipotent_as_two_conjugates(t, d), precondition_failure);

  Randomness rng(25);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int i = 0; i < 20; ++i) {
      auto const tn = random_unitriangular(f, n, true, rng, 5)
                      * testing::distinct_diagonal(f, n, rng);
      auto const u  = random_unitriangular(f, n, true, rng, 10);
      auto const c  = unipotent_as_two_conjugates(RegularBorelElement<Rationals>(tn), u);
      CHECK(c.length() == 2);
      CHECK(verify_certificate(c));
    }
  }
}
