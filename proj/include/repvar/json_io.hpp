#pragma once

#include <json.hpp>

#include "repvar/faithfulness.hpp"
#include "repvar/groups.hpp"
#include "repvar/scalar.hpp"
#include "repvar/variety.hpp"

namespace repvar {

// Matrices serialize as row-major arrays: integer entries (canonical
// residues) over F_p, "num/den" strings over Q, so modular output is
// golden-file friendly and rational output stays exact.

inline nlohmann::json scalar_to_json(const Fp& x) { return x.value(); }
inline nlohmann::json scalar_to_json(const Rat& x) { return x.str(); }

template <class K>
nlohmann::json matrix_to_json(const Matrix<K>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class K>
nlohmann::json element_to_json(const GroupElement<K>& g) {
  return matrix_to_json(g.mat);
}

template <class K>
nlohmann::json point_to_json(const Point<K>& x) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& g : x.coords) coords.push_back(element_to_json(g));
  return nlohmann::json{{"group", x.spec.to_string()}, {"coords", std::move(coords)}};
}

template <class K>
nlohmann::json orbit_to_json(const OrbitRep<K>& o) {
  return nlohmann::json{{"canonical", point_to_json(o.canonical)},
                        {"orbit_size", o.orbit_size}};
}

inline const char* kernel_verdict_name(KernelVerdictKind k) {
  switch (k) {
    case KernelVerdictKind::NotInKernel: return "not_in_kernel";
    case KernelVerdictKind::InKernel: return "in_kernel";
    case KernelVerdictKind::Undetermined: return "undetermined";
  }
  throw error("bad verdict");
}

inline nlohmann::json report_to_json(const FaithfulnessReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json row{{"auto", e.name},
                       {"verdict", kernel_verdict_name(e.verdict.kind)},
                       {"trials", e.verdict.trials},
                       {"exhaustive", e.verdict.exhaustive},
                       {"seed", e.seed}};
    if (e.verdict.witness) row["witness"] = point_to_json(*e.verdict.witness);
    entries.push_back(std::move(row));
  }
  return nlohmann::json{{"group", report.domain.to_string()},
                        {"n", report.n},
                        {"subgroup_order", report.subgroup_size},
                        {"results", std::move(entries)},
                        {"all_certified", report.all_certified()}};
}

}  // namespace repvar
