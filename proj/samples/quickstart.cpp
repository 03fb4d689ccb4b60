// Invariants of a three-generated monoid, the bounds for its (e, m), and
// the Betti numbers of its initial-form ideal.

#include <iostream>

#include "nm/nm.hpp"

int main() {
  const auto g = nm::from_generators({10, 13, 15});
  const auto e = g.e();
  const auto m = g.multiplicity();

  std::cout << "generators:";
  for (auto x : g.generators()) std::cout << ' ' << x;
  std::cout << "\nApery set:";
  for (auto w : nm::apery_set(g).elements) std::cout << ' ' << w;
  std::cout << "\nFrobenius " << *nm::frobenius(g) << ", type " << nm::type(g) << '\n';

  const auto pres = nm::rho(g);
  std::cout << "rho = " << pres.rho << " from Betti elements";
  for (const auto& b : pres.betti_elements) std::cout << ' ' << b.value << " (" << b.components << " components)";
  std::cout << '\n';

  std::cout << "bounds for (e, m) = (" << e << ", " << m << "): cem = " << nm::cem(e, m)
            << ", dem = " << nm::dem(e, m) << '\n';
  if (auto k = nm::not_sharp_region(e, m)) std::cout << "the relation bound is strict here (k = " << *k << ")\n";

  const auto istar = nm::istar_ideal(g);
  const auto betti = nm::koszul_betti(istar).totals(static_cast<std::size_t>(e));
  std::cout << "initial-form ideal Betti totals:";
  for (auto b : betti) std::cout << ' ' << b;
  std::cout << '\n';

  // A monoid attaining the relation bound with the same (e, m).
  const auto sharp = nm::sharp_family_small_delta(3, 7 - 3);
  std::cout << "extremal example for (3, 7): rho = " << nm::rho(sharp).rho << " = cem(3, 7) = " << nm::cem(3, 7) << '\n';
  return 0;
}
