#include "hyperlap/operators.hpp"

#include <cmath>

namespace hyperlap {

Eigen::MatrixXi incidence_matrix(const ChemicalHypergraph& g) {
  Eigen::MatrixXi inc = Eigen::MatrixXi::Zero(g.vertex_count(), g.hyperedge_count());
  for (Eigen::Index j = 0; j < g.hyperedge_count(); ++j) {
    const Hyperedge& h = g.hyperedges()[j];
    for (const auto& v : h.inputs)
      if (!h.is_output(v)) inc(g.vertex_index(v), j) = 1;
    for (const auto& v : h.outputs)
      if (!h.is_input(v)) inc(g.vertex_index(v), j) = -1;
  }
  return inc;
}

Eigen::VectorXi degree_vector(const ChemicalHypergraph& g) {
  Eigen::VectorXi deg(g.vertex_count());
  for (Eigen::Index i = 0; i < g.vertex_count(); ++i) deg[i] = g.degree(i);
  return deg;
}

RationalVector vertex_weights(const ChemicalHypergraph& g) {
  RationalVector w(g.vertex_count());
  for (Eigen::Index i = 0; i < g.vertex_count(); ++i) w[i] = std::max(g.degree(i), 1);
  return w;
}

RationalMatrix incidence_rational(const ChemicalHypergraph& g) {
  Eigen::MatrixXi inc = incidence_matrix(g);
  RationalMatrix out(inc.rows(), inc.cols());
  for (Eigen::Index i = 0; i < inc.rows(); ++i)
    for (Eigen::Index j = 0; j < inc.cols(); ++j) out(i, j) = inc(i, j);
  return out;
}

RationalMatrix boundary_matrix(const ChemicalHypergraph& g) {
  return incidence_rational(g).transpose();
}

RationalMatrix coboundary_matrix(const ChemicalHypergraph& g) {
  RationalMatrix c = incidence_rational(g);
  RationalVector w = vertex_weights(g);
  for (Eigen::Index i = 0; i < c.rows(); ++i) c.row(i) /= w[i];
  return c;
}

RationalMatrix laplacian_vertex(const ChemicalHypergraph& g) {
  RationalMatrix inc = incidence_rational(g);
  RationalMatrix k = inc * inc.transpose();
  RationalVector w = vertex_weights(g);
  for (Eigen::Index i = 0; i < k.rows(); ++i) k.row(i) /= w[i];
  return k;
}

RationalMatrix laplacian_hyperedge(const ChemicalHypergraph& g) {
  RationalMatrix inc = incidence_rational(g);
  return inc.transpose() * coboundary_matrix(g);
}

Eigen::MatrixXd laplacian_vertex_symmetrized(const ChemicalHypergraph& g) {
  Eigen::MatrixXi inc = incidence_matrix(g);
  Eigen::MatrixXd k = (inc * inc.transpose()).cast<double>();
  Eigen::VectorXd scale(g.vertex_count());
  for (Eigen::Index i = 0; i < g.vertex_count(); ++i)
    scale[i] = 1.0 / std::sqrt(static_cast<double>(std::max(g.degree(i), 1)));
  return scale.asDiagonal() * k * scale.asDiagonal();
}

}  // namespace hyperlap
