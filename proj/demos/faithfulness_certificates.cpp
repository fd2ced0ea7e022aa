// Certify that the Nielsen generators, a braid generator and an inner
// automorphism all act nontrivially on SL2(F5)^2 // R for an order-2 R:
// each gets a sampled witness point whose R-orbit moves.

#include <iostream>

#include "repvar/faithfulness.hpp"
#include "repvar/json_io.hpp"

int main() {
  using namespace repvar;

  const GroupSpec spec = parse_group_spec("sl2:p=5");
  const GroupDomain dom{spec};
  const auto h = parse_matrix_literal<Fp>("[0,1;-1,0]", spec);
  const auto r = close_subgroup<Fp>(spec, {GroupAutomorphism<Fp>::inner(h)});
  std::cout << "|R| = " << r.size() << "\n";

  std::vector<std::pair<std::string, AutElement>> named;
  const auto gens = nielsen_generators(2);
  const auto names = nielsen_generator_names(2);
  for (std::size_t i = 0; i < gens.size(); ++i) named.emplace_back(names[i], gens[i]);
  named.emplace_back("braid:1", braid_generator(1, 2));
  named.emplace_back("inner:x1", inner(Word::generator(2, 1)));

  const FaithfulnessReport report = faithfulness_report(dom, r, 2, named, 10'000, 7);
  std::cout << report_to_json(report).dump(2) << "\n";
  return report.all_certified() ? 0 : 2;
}
