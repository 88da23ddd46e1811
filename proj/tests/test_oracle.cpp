#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "normgen/normgen.hpp"
#include "support/oracles.hpp"

using namespace normgen;
using namespace normgen::oracle;

namespace {
  ClassSet all_classes(GroupTable const& g) {
    ClassSet cs(g.classes().size());
    std::iota(cs.begin(), cs.end(), 0);
    return cs;
  }

  std::vector<ClassSet> generating_subsets(GroupTable const& g) {
    std::vector<ClassSet> out;
    std::size_t const     m = g.classes().size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
      ClassSet cs;
      for (std::size_t c = 0; c < m; ++c) {
        if ((mask >> c) & 1U) {
          cs.push_back(c);
        }
      }
      if (normally_generates(g, cs)) {
        out.push_back(cs);
      }
    }
    return out;
  }

  void check_norm_axioms(GroupTable const& g, NormTable const& t) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      CHECK((t.norm[x] == 0) == (x == g.identity()));
      CHECK(t.norm[g.inverse(x)] == t.norm[x]);
    }
    for (std::size_t x = 0; x < g.order(); ++x) {
      for (std::size_t c : g.generators()) {
        CHECK(t.norm[g.conjugate(x, c)] == t.norm[x]);
      }
      for (std::size_t y = 0; y < g.order(); ++y) {
        CHECK(t.norm[g.multiply(x, y)] <= t.norm[x] + t.norm[y]);
      }
    }
  }
}  // namespace

TEST_CASE("group orders by two methods", "[oracle]") {
  for (auto [n, p, order] : std::vector<std::tuple<std::size_t, std::uint64_t, std::size_t>>{
           {2, 3, 24}, {2, 5, 120}, {3, 2, 168}}) {
    GroupTable const g(n, p);
    CHECK(g.order() == order);
    CHECK(sl_order(n, p) == order);
    auto const direct = testing::all_special_linear(n, p);
    CHECK(direct.size() == order);
    std::set<std::size_t> seen;
    for (auto const& m : direct) {
      seen.insert(g.index_of(m));
    }
    CHECK(seen.size() == order);
  }
}

TEST_CASE("group table structure", "[oracle]") {
  GroupTable g(2, 5);
  g.cache_products();
  CHECK(g.element(g.identity()).is_identity());
  CHECK(g.name() == "SL_2(F_5)");
  for (std::size_t x = 0; x < g.order(); ++x) {
    CHECK(g.multiply(x, g.inverse(x)) == g.identity());
    CHECK(g.index_of(g.element(x)) == x);
  }
  Randomness rng(5);
  for (int i = 0; i < 200; ++i) {
    std::size_t const x = rng.below(g.order());
    std::size_t const y = rng.below(g.order());
    CHECK(g.element(g.multiply(x, y)) == g.element(x) * g.element(y));
    CHECK(g.class_of(g.conjugate(x, y)) == g.class_of(x));
  }
  std::size_t total = 0;
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    total += g.classes()[c].size();
    CHECK(g.class_of(g.inverse(g.classes()[c].front())) == g.class_inverse(c));
    // Class sizes divide the group order.
    CHECK(g.order() % g.classes()[c].size() == 0);
  }
  CHECK(total == g.order());
  CHECK(g.classes().size() == 9);
}

TEST_CASE("class sizes agree with a direct conjugation orbit", "[oracle]") {
  GroupTable const g(2, 3);
  for (auto const& cl : g.classes()) {
    std::set<std::size_t> orbit;
    for (std::size_t c = 0; c < g.order(); ++c) {
      orbit.insert(g.index_of(conjugate(g.element(cl.front()), g.element(c))));
    }
    CHECK(orbit == std::set<std::size_t>(cl.begin(), cl.end()));
  }
}

TEST_CASE("normal generation", "[oracle]") {
  GroupTable const g(2, 5);
  CHECK_FALSE(normally_generates(g, {g.class_of(g.identity())}));
  CHECK(normally_generates(g, all_classes(g)));
  PrimeField const f(5);
  auto const       e12 = g.class_of(g.index_of(elementary(f, 2, 0, 1, f.one())));
  CHECK(normally_generates(g, {e12}));
  auto const minus = g.class_of(g.index_of(GroupMatrix<PrimeField>(f, {{-1, 0}, {0, -1}})));
  CHECK_FALSE(normally_generates(g, {minus}));
  CHECK_THROWS_AS(norm_ball_table(g, {minus}), precondition_failure);
  CHECK_THROWS_AS(normally_generates(g, {99}), invalid_input);
}

TEST_CASE("norm tables", "[oracle]") {
  GroupTable g(2, 3);
  g.cache_products();
  PrimeField const f(3);
  auto const       c = g.class_of(g.index_of(elementary(f, 2, 0, 1, f.one())));
  auto const       t = norm_ball_table(g, {c});
  CHECK(t.norm[g.identity()] == 0);
  for (std::size_t c2 : symmetrize(g, {c})) {
    for (std::size_t x : g.classes()[c2]) {
      CHECK(t.norm[x] == 1);
    }
  }
  CHECK(t.diameter == *std::max_element(t.norm.begin(), t.norm.end()));
  CHECK(t.norm == testing::fixed_point_norms(g, symmetrize(g, {c})));
}

TEST_CASE("norm axioms hold on every generating class set", "[oracle]") {
  GroupTable g(2, 3);
  g.cache_products();
  for (auto const& cs : generating_subsets(g)) {
    check_norm_axioms(g, norm_ball_table(g, cs));
  }
}

TEST_CASE("BFS agrees with fixed point iteration", "[oracle]") {
  GroupTable g(2, 3);
  g.cache_products();
  for (auto const& cs : generating_subsets(g)) {
    CHECK(ball_norms(g, cs) == testing::fixed_point_norms(g, symmetrize(g, cs)));
  }
}

TEST_CASE("norms depend only on the classes covered", "[oracle]") {
  GroupTable g(2, 5);
  g.cache_products();
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    ClassSet const one{c};
    ClassSet const both{c, g.class_inverse(c)};
    CHECK(ball_norms(g, one) == ball_norms(g, both));
  }
  // A generating set of explicit elements: a norm computed by BFS over the
  // conjugates of the elements must match the class-level table.
  PrimeField const f(5);
  auto const       s = elementary(f, 2, 1, 0, f.from_int(2));
  std::set<std::size_t> conj;
  for (std::size_t c = 0; c < g.order(); ++c) {
    conj.insert(g.index_of(conjugate(s, g.element(c))));
    conj.insert(g.index_of(conjugate(s.inverse(), g.element(c))));
  }
  std::vector<int> norm(g.order(), unreachable);
  norm[g.identity()] = 0;
  std::vector<std::size_t> layer{g.identity()};
  for (int radius = 1; !layer.empty(); ++radius) {
    std::vector<std::size_t> next;
    for (std::size_t x : layer) {
      for (std::size_t y : conj) {
        std::size_t const z = g.multiply(x, y);
        if (norm[z] == unreachable) {
          norm[z] = radius;
          next.push_back(z);
        }
      }
    }
    layer = std::move(next);
  }
  CHECK(norm == norm_ball_table(g, {g.class_of(g.index_of(s))}).norm);
}

TEST_CASE("diameters shrink as class sets grow", "[oracle]") {
  GroupTable g(2, 3);
  g.cache_products();
  auto const subsets = generating_subsets(g);
  std::vector<int> diam;
  std::vector<std::uint64_t> masks;
  for (auto const& cs : subsets) {
    diam.push_back(norm_ball_table(g, cs).diameter);
    std::uint64_t m = 0;
    for (std::size_t c : cs) {
      m |= std::uint64_t(1) << c;
    }
    masks.push_back(m);
  }
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    for (std::size_t b = 0; b < subsets.size(); ++b) {
      if ((masks[a] & masks[b]) == masks[a]) {
        CHECK(diam[b] <= diam[a]);
      }
    }
  }
}

TEST_CASE("ball composition", "[oracle]") {
  GroupTable g(2, 3);
  g.cache_products();
  auto const subsets = generating_subsets(g);
  for (auto const& xs : subsets) {
    auto const nx = norm_ball_table(g, xs).norm;
    for (auto const& ys : subsets) {
      auto const ny = norm_ball_table(g, ys).norm;
      int        m  = 0;
      for (std::size_t y : class_elements(g, ys)) {
        m = std::max(m, nx[y]);
      }
      for (std::size_t e = 0; e < g.order(); ++e) {
        CHECK(nx[e] <= m * ny[e]);
      }
    }
  }
}

TEST_CASE("Delta by subset enumeration", "[oracle]") {
  for (auto [n, p] : std::vector<std::pair<std::size_t, std::uint64_t>>{{2, 3}, {2, 5}, {3, 2}}) {
    GroupTable g(n, p);
    g.cache_products();
    auto const rep = delta(g);
    REQUIRE_FALSE(rep.delta_k.empty());
    CHECK(rep.delta_k.front() <= rep.delta);
    CHECK(rep.delta_k.back() == rep.delta);
    for (std::size_t k = 1; k < rep.delta_k.size(); ++k) {
      CHECK(rep.delta_k[k - 1] <= rep.delta_k[k]);
    }
    CHECK(norm_ball_table(g, rep.delta_witness).diameter == rep.delta);
    for (std::size_t k = 0; k < rep.witnesses.size(); ++k) {
      if (rep.delta_k[k] > 0) {
        CHECK(rep.witnesses[k].size() <= k + 1);
        CHECK(norm_ball_table(g, rep.witnesses[k]).diameter == rep.delta_k[k]);
      }
    }
    // Brute force over singletons gives Delta_1.
    int d1 = 0;
    for (std::size_t c = 0; c < g.classes().size(); ++c) {
      if (normally_generates(g, {c})) {
        d1 = std::max(d1, norm_ball_table(g, {c}).diameter);
      }
    }
    CHECK(rep.delta_k.front() == d1);
    CHECK(rep.results.size() == (std::size_t(1) << g.classes().size()) - 1);
  }
}

TEST_CASE("Delta honours max_classes and the subset cap", "[oracle]") {
  GroupTable g(2, 5);
  g.cache_products();
  auto const full = delta(g);
  auto const two  = delta(g, 2);
  CHECK(two.delta_k.size() == 2);
  CHECK(two.delta_k[0] == full.delta_k[0]);
  CHECK(two.delta_k[1] == full.delta_k[1]);
  Caps tiny;
  tiny.max_subsets = 16;
  CHECK_THROWS_AS(delta(g, std::nullopt, tiny), cap_exceeded);
}

TEST_CASE("element cap", "[oracle]") {
  Caps caps;
  caps.max_elements = 1000;
  CHECK_THROWS_AS(GroupTable(2, 11, caps), cap_exceeded);
  CHECK_THROWS_AS(GroupTable(3, 11), cap_exceeded);
  CHECK_NOTHROW(GroupTable(2, 11));
  CHECK_THROWS_AS(GroupTable(1, 5), invalid_input);
  CHECK_THROWS_AS(GroupTable(2, 6), invalid_input);
}

TEST_CASE("elementary class diameters", "[oracle]") {
  for (auto [n, p] : std::vector<std::pair<std::size_t, std::uint64_t>>{{3, 2}, {3, 3}, {2, 5}}) {
    auto const rep = example64_analog(n, p);
    CHECK(rep.order == sl_order(n, p));
    CHECK(rep.rank == n - 1);
    CHECK(rep.generates);
    CHECK(rep.diameter >= 1);
    GroupTable g(n, p);
    g.cache_products();
    CHECK(rep.diameter == norm_ball_table(g, {rep.class_index}).diameter);
  }
}

// Values recomputed by a separate brute-force script (Leibniz enumeration,
// orbit classes, plain BFS over all class subsets).
TEST_CASE("frozen Delta and elementary-class values", "[oracle]") {
  struct Expected {
    std::size_t   n;
    std::uint64_t p;
    std::size_t   classes;
    int           delta;
    int           delta1;
    int           elementary_diameter;
    std::size_t   elementary_class_size;
  };
  for (auto const& e : {Expected{2, 3, 7, 3, 3, 3, 4}, Expected{2, 5, 9, 5, 5, 3, 12},
                        Expected{3, 2, 6, 3, 3, 3, 21}}) {
    GroupTable g(e.n, e.p);
    g.cache_products();
    CHECK(g.classes().size() == e.classes);
    auto const rep = delta(g);
    CHECK(rep.delta == e.delta);
    CHECK(rep.delta_k.front() == e.delta1);
    auto const ex = example64_analog(e.n, e.p);
    CHECK(ex.diameter == e.elementary_diameter);
    CHECK(ex.class_size == e.elementary_class_size);
  }
}
