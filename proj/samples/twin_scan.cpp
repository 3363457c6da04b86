// Lists twin-prime pairs below a bound using the indivisibility test, and
// shows the witness residues that decided each pair.

#include <cstdint>
#include <cstdlib>
#include <iostream>

#include "factoria/theorems.hpp"

int main(int argc, char** argv) {
  const std::uint64_t limit = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200;
  for (std::uint64_t n = 3; n + 2 <= limit; ++n) {
    const auto v = factoria::theorem2_test(n);
    if (v.is_twin_pair) {
      std::cout << '(' << n << ", " << n + 2 << ")  residues " << v.residue_mod_n.value() << ' '
                << v.residue_mod_n_plus_2.value() << '\n';
    }
  }
}
