#include <iostream>

#include "qubitinv/invariants.hpp"
#include "qubitinv/random.hpp"

int main() {
  qubitinv::Rng rng(1);
  const auto v = qubitinv::assemble(qubitinv::random_bloch(2, rng), qubitinv::cycle(2));
  std::cout << v.size() << "\n";
  return v.size() == 9 ? 0 : 1;
}
