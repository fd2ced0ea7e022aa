// Compute the trace polynomial of the commutator word and watch the
// Nielsen generators act on the rank-2 trace coordinates; the commutator
// polynomial is invariant under all of them.

#include <iostream>

#include "repvar/autf.hpp"
#include "repvar/charvar.hpp"

int main() {
  using namespace repvar;

  const Word comm = parse_word("a b A B", 2);
  const TracePolynomial kappa = trace_polynomial(comm);
  std::cout << "tr[f1,f2] = " << kappa.to_string() << "\n\n";

  const auto gens = nielsen_generators(2);
  const auto names = nielsen_generator_names(2);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::cout << names[i] << ":\n";
    const auto action = induced_action(gens[i], 2);
    for (const auto& [v, poly] : action)
      std::cout << "  " << trace_var_name(v) << " -> " << poly.to_string() << "\n";
    const TracePolynomial image = kappa.substitute(action);
    std::cout << "  kappa -> " << image.to_string()
              << (image == kappa ? "   (invariant)" : "   (changed!)") << "\n";
  }
  return 0;
}
