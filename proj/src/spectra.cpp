#include "fraccolloc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fraccolloc {

std::vector<double> eig_symmetric(const Eigen::MatrixXd& T) {
  if (T.rows() != T.cols()) throw std::invalid_argument("matrix must be square");
  const double scale = std::max(T.cwiseAbs().maxCoeff(), 1e-300);
  const double asym = (T - T.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale)
    throw std::invalid_argument("matrix is not symmetric to 1e-12");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("symmetric eigensolver failed to converge");
  std::vector<double> out(static_cast<size_t>(T.rows()));
  for (int i = 0; i < T.rows(); ++i) out[static_cast<size_t>(i)] = es.eigenvalues()(i);
  std::sort(out.begin(), out.end());
  return out;
}

GeneralEig eig_general(const Eigen::MatrixXd& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("matrix must be square");
  if (M.rows() > 1024)
    throw std::invalid_argument("dense general eigensolver capped at order 1024");
  Eigen::EigenSolver<Eigen::MatrixXd> es;
  es.setMaxIterations(50 * static_cast<int>(M.rows()));
  es.compute(M, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("QR iteration did not converge within the sweep cap");
  GeneralEig out;
  out.max_imag = 0.0;
  out.real_parts.resize(static_cast<size_t>(M.rows()));
  for (int i = 0; i < M.rows(); ++i) {
    out.real_parts[static_cast<size_t>(i)] = es.eigenvalues()(i).real();
    out.max_imag = std::max(out.max_imag, std::abs(es.eigenvalues()(i).imag()));
  }
  std::sort(out.real_parts.begin(), out.real_parts.end());
  return out;
}

EigenReport compare_to_symbol(const std::vector<double>& eigs_sorted,
                              const SymbolEvaluator& ev, int p,
                              double max_imag) {
  const int N = static_cast<int>(eigs_sorted.size());
  EigenReport rep;
  rep.max_imag = max_imag;
  rep.outlier_budget = 4 * (p - 1);
  rep.grid.resize(static_cast<size_t>(N));
  for (int k = 1; k <= N; ++k)
    rep.grid[static_cast<size_t>(k - 1)] = k * M_PI / N;
  rep.symbol_sorted = sample_symbol(ev, rep.grid);
  std::sort(rep.symbol_sorted.begin(), rep.symbol_sorted.end());
  rep.eigen_sorted = eigs_sorted;
  std::sort(rep.eigen_sorted.begin(), rep.eigen_sorted.end());

  const double cutoff = 1.05 * ev.max_value();
  rep.outliers_above_range = static_cast<int>(
      std::count_if(rep.eigen_sorted.begin(), rep.eigen_sorted.end(),
                    [&](double v) { return v > cutoff; }));

  const int kept = std::max(N - rep.outlier_budget, 0);
  double acc = 0.0;
  for (int j = 0; j < kept; ++j)
    acc += std::abs(rep.eigen_sorted[static_cast<size_t>(j)] -
                    rep.symbol_sorted[static_cast<size_t>(j)]);
  rep.deviation = kept > 0 ? acc / kept : 0.0;
  return rep;
}

} // namespace fraccolloc
