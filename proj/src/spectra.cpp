#include "hyperlap/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyperlap/operators.hpp"

namespace hyperlap {

KernelBasis exact_rank_and_kernel(const RationalMatrix& a) {
  RationalMatrix r = a;
  const Eigen::Index rows = r.rows(), cols = r.cols();

  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = row; i < rows; ++i)
      if (r(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    r.row(row).swap(r.row(pivot));
    r.row(row) /= r(row, col);
    for (Eigen::Index i = 0; i < rows; ++i)
      if (i != row && r(i, col) != 0) r.row(i) -= r(i, col) * r.row(row);
    pivot_cols.push_back(col);
    ++row;
  }

  KernelBasis out;
  out.rank = static_cast<Eigen::Index>(pivot_cols.size());
  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index c : pivot_cols) is_pivot[c] = true;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RationalVector v = RationalVector::Zero(cols);
    v[free_col] = 1;
    for (Eigen::Index p = 0; p < out.rank; ++p) v[pivot_cols[p]] = -r(p, free_col);
    out.basis.push_back(std::move(v));
  }
  return out;
}

Eigen::Index exact_rank(const RationalMatrix& a) { return exact_rank_and_kernel(a).rank; }

std::pair<Eigen::Index, Eigen::Index> zero_multiplicities(const ChemicalHypergraph& g) {
  Eigen::Index rank = exact_rank(incidence_rational(g));
  return {g.vertex_count() - rank, g.hyperedge_count() - rank};
}

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& s) {
  double sum = 0;
  for (Eigen::Index i = 0; i < s.rows(); ++i)
    for (Eigen::Index j = 0; j < s.cols(); ++j)
      if (i != j) sum += s(i, j) * s(i, j);
  return std::sqrt(sum);
}

}  // namespace

EigenSystem jacobi_eigensystem(const Eigen::MatrixXd& s, double tol, int max_sweeps) {
  const Eigen::Index n = s.rows();
  if (s.cols() != n || (n > 0 && (s - s.transpose()).cwiseAbs().maxCoeff() > 1e-12))
    throw Error(errc::not_symmetric, "jacobi_eigensystem: matrix is not symmetric");

  Eigen::MatrixXd a = s;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

  int sweep = 0;
  while (n > 1 && off_diagonal_norm(a) > tol) {
    if (sweep++ >= max_sweeps)
      throw Error(errc::no_convergence, "jacobi_eigensystem: sweep budget exhausted");
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (apq == 0) continue;
        double theta = (a(q, q) - a(p, p)) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1);
        double sn = t * c;

        for (Eigen::Index k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });

  EigenSystem out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

std::vector<double> eigenvalues_symmetric(const Eigen::MatrixXd& s, double tol) {
  EigenSystem es = jacobi_eigensystem(s, tol);
  return {es.values.data(), es.values.data() + es.values.size()};
}

namespace {

Spectrum classify(Which which, std::vector<double> eigenvalues, Eigen::Index exact_mult,
                  double zero_tol) {
  Eigen::Index in_window = 0;
  for (double ev : eigenvalues)
    if (std::abs(ev) <= zero_tol) ++in_window;
  if (in_window != exact_mult)
    throw Error(errc::multiplicity_mismatch,
                "eigensolver zero count " + std::to_string(in_window) +
                    " disagrees with exact multiplicity " + std::to_string(exact_mult));
  for (double& ev : eigenvalues)
    if (std::abs(ev) <= zero_tol) ev = 0;
  std::sort(eigenvalues.rbegin(), eigenvalues.rend());
  return Spectrum{which, std::move(eigenvalues), exact_mult};
}

Eigen::MatrixXd laplacian_hyperedge_double(const ChemicalHypergraph& g) {
  Eigen::MatrixXd inc = incidence_matrix(g).cast<double>();
  Eigen::VectorXd inv_w(g.vertex_count());
  for (Eigen::Index i = 0; i < g.vertex_count(); ++i)
    inv_w[i] = 1.0 / std::max(g.degree(i), 1);
  return inc.transpose() * inv_w.asDiagonal() * inc;
}

}  // namespace

Spectrum spectrum(const ChemicalHypergraph& g, Which which, double zero_tol) {
  auto [m_v, m_h] = zero_multiplicities(g);
  if (which == Which::Vertex)
    return classify(which, eigenvalues_symmetric(laplacian_vertex_symmetrized(g)), m_v,
                    zero_tol);
  return classify(which, eigenvalues_symmetric(laplacian_hyperedge_double(g)), m_h, zero_tol);
}

std::vector<std::pair<double, Eigen::VectorXd>> vertex_eigenpairs(const ChemicalHypergraph& g) {
  EigenSystem es = jacobi_eigensystem(laplacian_vertex_symmetrized(g));
  std::vector<std::pair<double, Eigen::VectorXd>> pairs;
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    Eigen::VectorXd f = es.vectors.col(k);
    for (Eigen::Index i = 0; i < g.vertex_count(); ++i)
      f[i] /= std::sqrt(static_cast<double>(std::max(g.degree(i), 1)));
    pairs.emplace_back(es.values[k], std::move(f));
  }
  return pairs;
}

double rayleigh_vertex(const ChemicalHypergraph& g, const Eigen::VectorXd& f) {
  double den = inner_vertex<double>(g, f, f);
  if (den <= 0) throw Error(errc::zero_function, "rayleigh_vertex: zero function");
  Eigen::VectorXd df = boundary_apply<double>(g, f);
  return df.squaredNorm() / den;
}

double rayleigh_hyperedge(const ChemicalHypergraph& g, const Eigen::VectorXd& gamma) {
  double den = gamma.squaredNorm();
  if (den <= 0) throw Error(errc::zero_function, "rayleigh_hyperedge: zero function");
  Eigen::VectorXd cg = coboundary_apply<double>(g, gamma);
  return inner_vertex<double>(g, cg, cg) / den;
}

}  // namespace hyperlap
