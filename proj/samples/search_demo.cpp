// Searches a Kunz box and resumes from a partial run.

#include <iostream>
#include <map>
#include <string>

#include "nm/search.hpp"

int main(int argc, char** argv) {
  const std::int64_t e = argc > 1 ? std::stoll(argv[1]) : 4;
  const std::int64_t m = argc > 2 ? std::stoll(argv[2]) : 11;
  const std::int64_t k = argc > 3 ? std::stoll(argv[3]) : 3;

  std::map<nm::KunzPrefix, nm::SearchTally> done;
  nm::SearchOptions first;
  first.on_unit_done = [&](const nm::KunzPrefix& p, const nm::SearchTally& t) {
    if (done.size() < 3) done[p] = t;
  };
  nm::max_invariants(e, m, k, first);

  nm::SearchOptions resume;
  resume.completed = done;
  resume.jobs = 2;
  const auto r = nm::max_invariants(e, m, k, resume);

  std::cout << "e=" << e << " m=" << m << " K=" << k << ": " << r.tally.scanned << " Kunz vectors, " << r.tally.matching
            << " with edim " << e + 1 << '\n';
  std::cout << "best rho " << r.tally.best_rho << " (bound " << r.cem << "), best type " << r.tally.best_type
            << " (bound " << r.dem << ")\n";
  if (r.tally.rho_witness) {
    std::cout << "rho witness:";
    for (auto x : r.tally.rho_witness->generators) std::cout << ' ' << x;
    std::cout << '\n';
  }
  return 0;
}
