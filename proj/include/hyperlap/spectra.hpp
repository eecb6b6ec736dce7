#ifndef HYPERLAP_SPECTRA_HPP
#define HYPERLAP_SPECTRA_HPP

#include <utility>
#include <vector>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/types.hpp"

namespace hyperlap {

/// Float eigenvalues are classified against this window, but multiplicities
/// of the eigenvalue 0 always come from exact rational rank.
inline constexpr double kZeroTol = 1e-9;

struct KernelBasis {
  Eigen::Index rank = 0;
  /// Reduced-echelon kernel parametrization, one vector per free column,
  /// ordered by free-column index. Each vector is annihilated exactly.
  std::vector<RationalVector> basis;
};

/// Rank and kernel over the rationals by Gauss-Jordan elimination.
KernelBasis exact_rank_and_kernel(const RationalMatrix& a);

Eigen::Index exact_rank(const RationalMatrix& a);

/// (m_V, m_H) = (N - rank I, M - rank I). Satisfies m_V - m_H = N - M.
std::pair<Eigen::Index, Eigen::Index> zero_multiplicities(const ChemicalHypergraph& g);

struct EigenSystem {
  Eigen::VectorXd values;   // descending
  Eigen::MatrixXd vectors;  // column i pairs with values[i]
};

/// Cyclic Jacobi for dense symmetric matrices. Sweeps until the
/// off-diagonal Frobenius norm drops below `tol`, at most `max_sweeps`
/// sweeps. Throws not_symmetric when max|S - S^T| > 1e-12 and
/// no_convergence when the sweep budget runs out.
EigenSystem jacobi_eigensystem(const Eigen::MatrixXd& s, double tol = 1e-12,
                               int max_sweeps = 100);

std::vector<double> eigenvalues_symmetric(const Eigen::MatrixXd& s, double tol = 1e-12);

enum class Which { Vertex, Hyperedge };

struct Spectrum {
  Which op = Which::Vertex;
  /// Descending, following the convention that the FIRST entry is the
  /// largest eigenvalue (mu_1). Note this is the opposite of the usual
  /// ascending library order.
  std::vector<double> eigenvalues;
  /// Exact multiplicity of the eigenvalue 0, from rational rank, never
  /// from float thresholds.
  Eigen::Index zero_multiplicity = 0;
};

/// Vertex spectrum via the symmetrized form D^{-1/2} I I^T D^{-1/2};
/// hyperedge spectrum via I^T D^{-1} I. Eigenvalues inside the zero window
/// are snapped to 0 when their count matches the exact multiplicity;
/// a count mismatch throws multiplicity_mismatch (solver failure).
Spectrum spectrum(const ChemicalHypergraph& g, Which which, double zero_tol = kZeroTol);

/// Eigenpairs (mu, f) of the vertex Laplacian, descending. f is recovered
/// from the symmetrized eigenvector g as D^{-1/2} g.
std::vector<std::pair<double, Eigen::VectorXd>> vertex_eigenpairs(const ChemicalHypergraph& g);

/// Σ_h (δf(h))² / Σ_v deg v · f(v)² (weight 1 for deg 0).
double rayleigh_vertex(const ChemicalHypergraph& g, const Eigen::VectorXd& f);

/// Σ_v (1/deg v)(Σ_{h: v input} γ - Σ_{h: v output} γ)² / Σ_h γ(h)².
double rayleigh_hyperedge(const ChemicalHypergraph& g, const Eigen::VectorXd& gamma);

}  // namespace hyperlap

#endif  // HYPERLAP_SPECTRA_HPP
