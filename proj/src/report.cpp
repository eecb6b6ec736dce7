#include "hyperlap/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include "hyperlap/operators.hpp"

namespace hyperlap {

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

/// Largest elementwise gap between the descending nonzero parts of the two
/// spectra; infinite if the counts differ.
double nonzero_spectra_gap(const Spectrum& a, const Spectrum& b) {
  std::vector<double> na, nb;
  for (double ev : a.eigenvalues)
    if (ev > kZeroTol) na.push_back(ev);
  for (double ev : b.eigenvalues)
    if (ev > kZeroTol) nb.push_back(ev);
  if (na.size() != nb.size()) return std::numeric_limits<double>::infinity();
  double gap = 0;
  for (std::size_t i = 0; i < na.size(); ++i) gap = std::max(gap, std::abs(na[i] - nb[i]));
  return gap;
}

}  // namespace

bool Report::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.pass; });
}

Report build_report(const ChemicalHypergraph& g, int closed_system_cap) {
  Report r;
  r.n = g.vertex_count();
  r.m = g.hyperedge_count();
  for (Eigen::Index i = 0; i < r.n; ++i) r.degrees.push_back(g.degree(i));
  r.components = connected_components(g);
  r.bipartiteness = bipartition(g);
  if (r.m > 0) r.h_prime = h_prime(g);
  std::tie(r.m_v, r.m_h) = zero_multiplicities(g);
  r.vertex_spectrum = spectrum(g, Which::Vertex);
  r.hyperedge_spectrum = spectrum(g, Which::Hyperedge);
  r.closed_system_cap = closed_system_cap;
  if (r.m <= closed_system_cap) r.structure = structural_report(g, closed_system_cap);

  double mult_lhs = double(r.m_v - r.m_h), mult_rhs = double(r.n - r.m);
  r.checks.push_back({"zero-multiplicity identity m_V - m_H = N - M", mult_lhs, mult_rhs,
                      mult_lhs == mult_rhs});
  double gap = nonzero_spectra_gap(r.vertex_spectrum, r.hyperedge_spectrum);
  r.checks.push_back({"shared nonzero spectra (max elementwise gap)", gap, 0.0, gap <= 1e-8});
  double min_v = r.vertex_spectrum.eigenvalues.empty()
                     ? 0.0
                     : r.vertex_spectrum.eigenvalues.back();
  double min_h = r.hyperedge_spectrum.eigenvalues.empty()
                     ? 0.0
                     : r.hyperedge_spectrum.eigenvalues.back();
  double min_ev = std::min(min_v, min_h);
  r.checks.push_back({"nonnegativity (min eigenvalue)", min_ev, 0.0, min_ev >= -kZeroTol});
  return r;
}

std::string format_eigenvalues(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_double(values[i]);
  }
  return out;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["degrees"] = r.degrees;
  j["components"] = nlohmann::json::array();
  for (const auto& c : r.components)
    j["components"].push_back({{"vertices", c.vertices}, {"hyperedges", c.hyperedges}});
  if (const auto* p = std::get_if<Bipartition>(&r.bipartiteness)) {
    j["bipartite"] = {{"first", p->first}, {"second", p->second}};
  } else {
    const auto& c = std::get<BipartitionConflict>(r.bipartiteness);
    j["bipartite_conflict"] = {{"vertex", c.vertex}, {"chain", c.chain}};
  }
  if (r.h_prime) {
    j["h_prime"] = {{"exact", r.h_prime->str()}, {"value", to_double(*r.h_prime)}};
  } else {
    j["h_prime"] = nullptr;
  }
  j["m_V"] = r.m_v;
  j["m_H"] = r.m_h;
  j["vertex_spectrum"] = r.vertex_spectrum.eigenvalues;
  j["hyperedge_spectrum"] = r.hyperedge_spectrum.eigenvalues;
  j["closed_system_cap"] = r.closed_system_cap;
  if (r.structure) {
    nlohmann::json s;
    s["closed_system_count"] = r.structure->closed_system_count;
    s["independence_rank"] = r.structure->independence_rank;
    s["bound_satisfied"] = r.structure->bound_satisfied;
    if (r.structure->graph_cycle_space_dim)
      s["graph_cycle_space_dim"] = *r.structure->graph_cycle_space_dim;
    j["closed_systems"] = s;
  } else {
    j["closed_systems"] = {{"skipped", "hyperedge count exceeds enumeration cap"}};
  }
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
  return j;
}

std::string format_text(const Report& r) {
  std::ostringstream out;
  out << "vertices: " << r.n << ", hyperedges: " << r.m << "\n";
  out << "degrees:";
  for (int d : r.degrees) out << " " << d;
  out << "\n";
  out << "components: " << r.components.size() << "\n";
  if (const auto* p = std::get_if<Bipartition>(&r.bipartiteness)) {
    out << "bipartite: yes; V1 = {";
    for (std::size_t i = 0; i < p->first.size(); ++i) out << (i ? ", " : "") << p->first[i];
    out << "}, V2 = {";
    for (std::size_t i = 0; i < p->second.size(); ++i) out << (i ? ", " : "") << p->second[i];
    out << "}\n";
  } else {
    const auto& c = std::get<BipartitionConflict>(r.bipartiteness);
    out << "bipartite: no; conflict at " << c.vertex << " via";
    for (const auto& id : c.chain) out << " " << id;
    out << "\n";
  }
  if (r.h_prime)
    out << "h' = " << r.h_prime->str() << " = " << format_double(to_double(*r.h_prime)) << "\n";
  out << "m_V = " << r.m_v << ", m_H = " << r.m_h << "\n";
  out << "vertex spectrum (descending): " << format_eigenvalues(r.vertex_spectrum.eigenvalues)
      << "\n";
  out << "hyperedge spectrum (descending): "
      << format_eigenvalues(r.hyperedge_spectrum.eigenvalues) << "\n";
  if (r.structure) {
    out << "closed systems: " << r.structure->closed_system_count
        << ", independent: " << r.structure->independence_rank
        << ", rank bound l <= m_H: " << (r.structure->bound_satisfied ? "holds" : "VIOLATED")
        << "\n";
    if (r.structure->graph_cycle_space_dim)
      out << "graph cycle-space dimension: " << *r.structure->graph_cycle_space_dim << "\n";
  } else {
    out << "closed systems: skipped (M > cap " << r.closed_system_cap << ")\n";
  }
  for (const auto& c : r.checks)
    out << "check [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": "
        << format_double(c.lhs) << " vs " << format_double(c.rhs) << "\n";
  return out.str();
}

std::vector<std::string> verify_instance(const ChemicalHypergraph& g) {
  std::vector<std::string> failures;
  auto fail = [&](const std::string& msg) { failures.push_back(msg); };

  auto [m_v, m_h] = zero_multiplicities(g);
  if (m_v - m_h != g.vertex_count() - g.hyperedge_count())
    fail("m_V - m_H != N - M");

  Spectrum sv = spectrum(g, Which::Vertex);
  Spectrum sh = spectrum(g, Which::Hyperedge);
  if (!sv.eigenvalues.empty() && sv.eigenvalues.back() < -kZeroTol)
    fail("negative vertex eigenvalue");
  if (!sh.eigenvalues.empty() && sh.eigenvalues.back() < -kZeroTol)
    fail("negative hyperedge eigenvalue");
  if (nonzero_spectra_gap(sv, sh) > 1e-8)
    fail("nonzero spectra of the two Laplacians disagree");

  // Degree sum identity.
  long long deg_sum = 0, size_sum = 0;
  for (Eigen::Index i = 0; i < g.vertex_count(); ++i) deg_sum += g.degree(i);
  for (const auto& h : g.hyperedges()) size_sum += static_cast<long long>(h.size());
  if (deg_sum != size_sum) fail("degree sum != sum of hyperedge sizes");

  // Exact adjointness on a few deterministic rational probes.
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 5; ++t) {
    RationalVector f(g.vertex_count()), gamma(g.hyperedge_count());
    for (Eigen::Index i = 0; i < f.size(); ++i)
      f[i] = Rational(static_cast<long long>(rng() % 19) - 9, 1 + static_cast<long long>(rng() % 7));
    for (Eigen::Index i = 0; i < gamma.size(); ++i)
      gamma[i] = Rational(static_cast<long long>(rng() % 19) - 9,
                          1 + static_cast<long long>(rng() % 7));
    auto [lhs, rhs] = adjointness_check(g, f, gamma);
    if (lhs != rhs) {
      fail("adjointness (delta f, gamma)_H != (f, delta* gamma)_V");
      break;
    }
  }

  // Kernel vectors of the transposed incidence satisfy the per-hyperedge
  // balance equation exactly.
  auto kernel_t = exact_rank_and_kernel(incidence_rational(g).transpose().eval());
  for (const auto& f : kernel_t.basis) {
    RationalVector df = boundary_apply<Rational>(g, f);
    for (Eigen::Index j = 0; j < df.size(); ++j)
      if (df[j] != 0) {
        fail("kernel vector of I^T violates the balance equation");
        break;
      }
  }

  auto two_coloring = bipartition(g);
  if (is_bipartite(two_coloring)) {
    const auto& p = std::get<Bipartition>(two_coloring);
    std::vector<bool> in_first(g.vertex_count(), false);
    for (const auto& v : p.first) in_first[g.vertex_index(v)] = true;
    for (const auto& h : g.hyperedges()) {
      if (!h.catalysts().empty()) {
        fail("bipartition succeeded on an instance with a catalyst");
        break;
      }
      auto side = [&](const std::vector<std::string>& vs) {
        bool any_first = false, any_second = false;
        for (const auto& v : vs) (in_first[g.vertex_index(v)] ? any_first : any_second) = true;
        return std::pair{any_first, any_second};
      };
      auto [in1, in2] = side(h.inputs);
      auto [out1, out2] = side(h.outputs);
      if ((in1 && in2) || (out1 && out2) || (in1 && out1) || (in2 && out2)) {
        fail("bipartition blocks split a hyperedge side");
        break;
      }
    }
  }

  if (g.hyperedge_count() <= kDefaultClosedSystemCap) {
    auto report = structural_report(g);
    if (!report.bound_satisfied) fail("independence rank exceeds m_H");
    for (const auto& s : enumerate_closed_systems(g)) {
      RationalVector indicator = RationalVector::Zero(g.hyperedge_count());
      for (const auto& id : s.hyperedge_ids) indicator[g.hyperedge_index(id)] = 1;
      RationalVector image = incidence_rational(g) * indicator;
      for (Eigen::Index i = 0; i < image.size(); ++i)
        if (image[i] != 0) {
          fail("closed-system indicator not in ker I");
          break;
        }
    }
  }

  return failures;
}

}  // namespace hyperlap
