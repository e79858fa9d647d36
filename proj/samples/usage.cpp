// Small tour of the library: fixed points of one permutation, an orbit
// poset, and the Burnside count of inequivalent functions for n = 6.

#include <iostream>

#include "mbfcount/mbfcount.hpp"

int main() {
  using namespace mbfcount;

  // The five monotone functions of three variables fixed by (x1 x2 x3).
  const CycleType rot = CycleType::parse("3", 3);
  std::cout << "Fix" << rot.notation() << " in D_3:";
  for (const Mbf& f : alg1_fixset(rot).elements) std::cout << ' ' << f.to_decimal() << " [" << f.to_table() << ']';
  std::cout << '\n';

  // Orbits of B^4 under (x1 x2)(x3 x4) and their downsets.
  const OrbitPoset poset(lift(canonical_perm(CycleType::parse("2+2", 4))));
  std::cout << "(x1 x2)(x3 x4) on B^4: " << poset.size() << " orbits, " << to_decimal(count_downsets(poset))
            << " downsets, width " << width(poset) << '\n';

  // One row at a time, then the whole table.
  const PhiResult row = phi(CycleType::parse("2+2+2", 7), 7);
  std::cout << "phi" << row.type.notation() << " at n=7 = " << to_decimal(row.phi) << " via " << to_string(row.strategy)
            << '\n';

  const BurnsideReport report = compute_r(6);
  std::cout << '\n' << to_markdown(report);
}
