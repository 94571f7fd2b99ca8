// Library walk-through: count the solutions of 4452x + 8030y + 9945z = 3857942
// and show each stage of the computation next to an independent oracle.

#include <iostream>

#include "denum/denumerant3.hpp"
#include "denum/floor_sum.hpp"
#include "denum/reduction.hpp"

int main() {
  using denum::ExactInt;
  const denum::Instance3 inst{4452, 8030, 9945, 3857942};

  const auto w = denum::reduce(inst);
  if (!w) {
    std::cout << "no solutions: gcd does not divide n\n";
    return 0;
  }
  std::cout << "pairwise gcds: " << w->g1 << " " << w->g2 << " " << w->g3 << "\n"
            << "offsets:       " << w->n1 << " " << w->n2 << " " << w->n3 << "\n"
            << "reduced:       " << w->reduced.a << "x + " << w->reduced.b << "y + "
            << w->reduced.c << "z = " << w->reduced.n << "\n";

  const denum::CountResult r = denum::count3(inst.a, inst.b, inst.c, inst.n);
  const ExactInt oracle = denum::count3_oracle_dp(inst.a, inst.b, inst.c, inst.n);
  std::cout << "closed form:   " << r.count << "\n"
            << "dp oracle:     " << oracle << "\n";

  // The derivation of one floor sum, step by step.
  const denum::FloorSumTrace t = denum::floor_sum_trace({129, 281, 742});
  std::cout << "\nsum_{i=1}^{129} floor(281i/742):\n" << denum::render_trace(t);
  return r.count == oracle ? 0 : 2;
}
