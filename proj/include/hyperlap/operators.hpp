#ifndef HYPERLAP_OPERATORS_HPP
#define HYPERLAP_OPERATORS_HPP

#include <utility>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/types.hpp"

namespace hyperlap {

/// N×M signed incidence matrix: +1 input-not-output, -1 output-not-input,
/// 0 otherwise (catalyst or absent). Rows follow vertex declaration order,
/// columns hyperedge declaration order.
Eigen::MatrixXi incidence_matrix(const ChemicalHypergraph& g);

/// Incidence matrix lifted to exact rationals.
RationalMatrix incidence_rational(const ChemicalHypergraph& g);

Eigen::VectorXi degree_vector(const ChemicalHypergraph& g);

/// diag(max(deg v, 1)) as exact rationals. Isolated vertices get weight 1,
/// which keeps the vertex inner product positive definite; their incidence
/// row is zero so the Laplacian row is zero either way.
RationalVector vertex_weights(const ChemicalHypergraph& g);

RationalMatrix boundary_matrix(const ChemicalHypergraph& g);    // M×N, = incidence^T
RationalMatrix coboundary_matrix(const ChemicalHypergraph& g);  // N×M, = D^{-1} incidence

RationalMatrix laplacian_vertex(const ChemicalHypergraph& g);     // N×N, D^{-1} I I^T
RationalMatrix laplacian_hyperedge(const ChemicalHypergraph& g);  // M×M, I^T D^{-1} I

/// D^{-1/2} I I^T D^{-1/2}: symmetric, similar to the vertex Laplacian,
/// assembled in doubles for the eigensolver.
Eigen::MatrixXd laplacian_vertex_symmetrized(const ChemicalHypergraph& g);

/// (δf)(h) = Σ_{inputs} f - Σ_{outputs} f.
template <class Scalar>
Vector<Scalar> boundary_apply(const ChemicalHypergraph& g, const Vector<Scalar>& f) {
  if (f.size() != g.vertex_count())
    throw Error(errc::dimension_mismatch, "boundary_apply: expected a vertex function");
  Vector<Scalar> out = Vector<Scalar>::Zero(g.hyperedge_count());
  for (Eigen::Index j = 0; j < g.hyperedge_count(); ++j) {
    const Hyperedge& h = g.hyperedges()[j];
    for (const auto& v : h.inputs) out[j] += f[g.vertex_index(v)];
    for (const auto& v : h.outputs) out[j] -= f[g.vertex_index(v)];
  }
  return out;
}

/// (δ*γ)(v) = (Σ_{h: v input} γ - Σ_{h: v output} γ) / deg v, and 0 for
/// isolated vertices.
template <class Scalar>
Vector<Scalar> coboundary_apply(const ChemicalHypergraph& g, const Vector<Scalar>& gamma) {
  if (gamma.size() != g.hyperedge_count())
    throw Error(errc::dimension_mismatch, "coboundary_apply: expected a hyperedge function");
  Vector<Scalar> out = Vector<Scalar>::Zero(g.vertex_count());
  for (Eigen::Index j = 0; j < g.hyperedge_count(); ++j) {
    const Hyperedge& h = g.hyperedges()[j];
    for (const auto& v : h.inputs) out[g.vertex_index(v)] += gamma[j];
    for (const auto& v : h.outputs) out[g.vertex_index(v)] -= gamma[j];
  }
  for (Eigen::Index i = 0; i < g.vertex_count(); ++i)
    if (g.degree(i) > 0) out[i] /= Scalar(g.degree(i));
  return out;
}

/// (f,g)_V = Σ_v deg v · f(v)g(v), with weight 1 for deg 0.
template <class Scalar>
Scalar inner_vertex(const ChemicalHypergraph& g, const Vector<Scalar>& f,
                    const Vector<Scalar>& h) {
  if (f.size() != g.vertex_count() || h.size() != g.vertex_count())
    throw Error(errc::dimension_mismatch, "inner_vertex: expected vertex functions");
  Scalar sum(0);
  for (Eigen::Index i = 0; i < g.vertex_count(); ++i)
    sum += Scalar(std::max(g.degree(i), 1)) * f[i] * h[i];
  return sum;
}

/// (ω,γ)_H = Σ_h ω(h)γ(h).
template <class Scalar>
Scalar inner_hyperedge(const ChemicalHypergraph& g, const Vector<Scalar>& a,
                       const Vector<Scalar>& b) {
  if (a.size() != g.hyperedge_count() || b.size() != g.hyperedge_count())
    throw Error(errc::dimension_mismatch, "inner_hyperedge: expected hyperedge functions");
  return a.dot(b);
}

/// Evaluates both sides of (δf,γ)_H = (f,δ*γ)_V; the caller asserts equality.
template <class Scalar>
std::pair<Scalar, Scalar> adjointness_check(const ChemicalHypergraph& g,
                                            const Vector<Scalar>& f,
                                            const Vector<Scalar>& gamma) {
  return {inner_hyperedge(g, boundary_apply(g, f), gamma),
          inner_vertex(g, f, coboundary_apply(g, gamma))};
}

}  // namespace hyperlap

#endif  // HYPERLAP_OPERATORS_HPP
