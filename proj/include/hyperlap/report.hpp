#ifndef HYPERLAP_REPORT_HPP
#define HYPERLAP_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/spectra.hpp"
#include "hyperlap/structure.hpp"

namespace hyperlap {

struct IdentityCheck {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  bool pass = false;
};

struct Report {
  Eigen::Index n = 0;
  Eigen::Index m = 0;
  std::vector<int> degrees;
  std::vector<Component> components;
  BipartitenessResult bipartiteness = Bipartition{};
  std::optional<Rational> h_prime;  // absent when M = 0
  Eigen::Index m_v = 0;
  Eigen::Index m_h = 0;
  Spectrum vertex_spectrum;
  Spectrum hyperedge_spectrum;
  std::optional<StructuralReport> structure;  // absent when M exceeds the cap
  int closed_system_cap = kDefaultClosedSystemCap;
  std::vector<IdentityCheck> checks;

  bool all_checks_pass() const;
};

Report build_report(const ChemicalHypergraph& g, int closed_system_cap = kDefaultClosedSystemCap);

nlohmann::json to_json(const Report& report);
std::string format_text(const Report& report);

/// Invariant suite run on a single instance; returns the failures
/// (empty means the instance verifies).
std::vector<std::string> verify_instance(const ChemicalHypergraph& g);

std::string format_eigenvalues(const std::vector<double>& values);

}  // namespace hyperlap

#endif  // HYPERLAP_REPORT_HPP
