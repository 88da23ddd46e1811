// Walks through the main entry points on a small example: factor a matrix
// over Q into conjugates of a single elementary matrix, then compare with
// exact word norms in a small finite group.

#include <iostream>

#include "normgen/normgen.hpp"

int main() {
  using namespace normgen;
  Rationals  q;
  Randomness rng(2024);

  GroupMatrix<Rationals> const g(q, {{2, -1, 3}, {1, 0, 4}, {0, 1, 6}});
  std::cout << "g =\n" << g.to_string() << '\n';

  auto const bf = bruhat_decompose(g);
  std::cout << "Bruhat cell:";
  for (auto v : bf.w) {
    std::cout << ' ' << v;
  }
  std::cout << "\n\n";

  GeneratingSet<Rationals> const x({elementary(q, 3, 0, 2, q.one())});
  auto const witness = find_regular_in_ball(x, rng);
  std::cout << "regular element t found after " << witness.samples
            << " samples, certificate length " << witness.certificate.length()
            << "\n" << witness.t.matrix().to_string() << "\n\n";

  auto const over_t = decompose_as_conjugates_of(g, witness.t, rng);
  auto const full   = decompose_full(g, witness, rng);
  std::cout << "g is a product of " << over_t.length()
            << " conjugates of t^(+-1) and of " << full.length()
            << " conjugates of E_13(1)^(+-1) (claimed bound "
            << full.meta.bound_claimed << "); verified: " << std::boolalpha
            << verify_certificate(full) << "\n\n";

  oracle::GroupTable table(2, 5);
  table.cache_products();
  auto const rep = oracle::delta(table);
  std::cout << table.name() << ": " << table.order() << " elements, "
            << table.classes().size() << " classes, Delta = " << rep.delta
            << ", Delta_1 = " << rep.delta_k.front() << '\n';
}
