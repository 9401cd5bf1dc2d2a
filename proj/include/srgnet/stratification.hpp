#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "srgnet/graph.hpp"

namespace srgnet {

/// Distance partition of the vertex set from a reference vertex. Stratum i
/// holds exactly the vertices at graph distance i (breadth-first layers).
struct Stratification {
  int root = 0;
  std::vector<std::vector<int>> strata;

  std::vector<int> valencies() const {
    std::vector<int> v;
    v.reserve(strata.size());
    for (const auto& s : strata) v.push_back(static_cast<int>(s.size()));
    return v;
  }
};

/// Works for any connected graph and returns however many strata exist;
/// connected SRGs come out with exactly three.
inline Stratification stratify(const Graph& graph, int root) {
  const int n = graph.order();
  if (root < 0 || root >= n) throw Error(ErrorCode::RootOutOfRange, "root vertex out of range");
  std::vector<int> dist(n, -1);
  dist[root] = 0;
  std::vector<int> queue{root};
  int reached = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int v = queue[h];
    for (int u = 0; u < n; ++u)
      if (graph.has_edge(v, u) && dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
        ++reached;
      }
  }
  if (reached != n) throw Error(ErrorCode::Disconnected, "graph is not connected");

  Stratification s;
  s.root = root;
  s.strata.resize(1 + *std::max_element(dist.begin(), dist.end()));
  for (int v = 0; v < n; ++v) s.strata[dist[v]].push_back(v);
  return s;
}

/// Adjacency blocks of an SRG in the distance partition from the root:
/// a11 couples the neighbours among themselves, a22 the non-neighbours,
/// a12 the two strata. Vertices keep their ascending index order.
struct StratifiedBlocks {
  Eigen::MatrixXi a11;  // kappa x kappa
  Eigen::MatrixXi a12;  // kappa x (n-kappa-1)
  Eigen::MatrixXi a22;  // (n-kappa-1) x (n-kappa-1)
  SrgParams params;
};

inline StratifiedBlocks extract_blocks(const Graph& graph, const Stratification& strat) {
  if (strat.strata.size() != 3)
    throw Error(ErrorCode::NotThreeStrata,
                "expected 3 strata, got " + std::to_string(strat.strata.size()));
  StratifiedBlocks b;
  b.params = srg_params(graph);
  const auto& g1 = strat.strata[1];
  const auto& g2 = strat.strata[2];
  const int k = static_cast<int>(g1.size());
  const int k2 = static_cast<int>(g2.size());
  const Eigen::MatrixXi& a = graph.adjacency();
  b.a11.resize(k, k);
  b.a12.resize(k, k2);
  b.a22.resize(k2, k2);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) b.a11(i, j) = a(g1[i], g1[j]);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k2; ++j) b.a12(i, j) = a(g1[i], g2[j]);
  for (int i = 0; i < k2; ++i)
    for (int j = 0; j < k2; ++j) b.a22(i, j) = a(g2[i], g2[j]);

  // Exact block-sum and block-product identities; a failure means the input
  // was not strongly regular (or the partition was not a distance partition).
  const int kappa = b.params.kappa, lambda = b.params.lambda, mu = b.params.mu;
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::BlockSumViolation, what);
  };
  for (int j = 0; j < k2; ++j)
    if (b.a12.col(j).sum() != mu) fail("A12 column sums must equal mu");
  for (int i = 0; i < k; ++i)
    if (b.a12.row(i).sum() != kappa - lambda - 1) fail("A12 row sums must equal kappa-lambda-1");
  for (int i = 0; i < k; ++i)
    if (b.a11.row(i).sum() != lambda || b.a11.col(i).sum() != lambda)
      fail("A11 row and column sums must equal lambda");
  for (int i = 0; i < k2; ++i)
    if (b.a22.row(i).sum() != kappa - mu || b.a22.col(i).sum() != kappa - mu)
      fail("A22 row and column sums must equal kappa-mu");

  const Eigen::MatrixXi lhs2 = b.a12.transpose() * b.a12 + b.a22 * b.a22;
  const Eigen::MatrixXi lhs1 = b.a11 * b.a11 + b.a12 * b.a12.transpose();
  for (int i = 0; i < k2; ++i)
    for (int j = 0; j < k2; ++j)
      if (lhs2(i, j) != (i == j ? kappa - mu : 0) + mu + (lambda - mu) * b.a22(i, j))
        fail("A12^T A12 + A22^2 block identity fails");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (lhs1(i, j) != (i == j ? kappa - mu : 0) + (mu - 1) + (lambda - mu) * b.a11(i, j))
        fail("A11^2 + A12 A12^T block identity fails");
  return b;
}

/// Analytic 3x3 adjacency block on the stratum unit vectors:
/// [[0, sqrt(kappa), 0], [sqrt(kappa), lambda, c], [0, c, kappa-mu]] with
/// c = mu sqrt(n-kappa-1) / sqrt(kappa).
struct FirstStratumBlock {
  Eigen::Matrix3d m;
};

inline FirstStratumBlock first_stratum_block(const SrgParams& p) {
  p.validate();
  const double rk = std::sqrt(static_cast<double>(p.kappa));
  const double c = p.mu * std::sqrt(static_cast<double>(p.n - p.kappa - 1)) / rk;
  FirstStratumBlock b;
  b.m << 0.0, rk, 0.0, rk, static_cast<double>(p.lambda), c, 0.0, c,
      static_cast<double>(p.kappa - p.mu);
  return b;
}

/// Numeric counterpart built from the actual blocks: entries are
/// <phi_i| A |phi_j> over the uniform stratum vectors.
inline Eigen::Matrix3d first_stratum_projection(const StratifiedBlocks& b) {
  const double k = static_cast<double>(b.a11.rows());
  const double k2 = static_cast<double>(b.a22.rows());
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  m(0, 1) = m(1, 0) = std::sqrt(k);
  m(1, 1) = b.a11.sum() / k;
  m(1, 2) = m(2, 1) = b.a12.sum() / std::sqrt(k * k2);
  m(2, 2) = b.a22.sum() / k2;
  return m;
}

/// One paired 2x2 block [[lambda1, sqrt(lambda12)], [sqrt(lambda12), lambda2]]
/// of the block-diagonalized adjacency matrix. lambda1 belongs to the
/// stratum-2 mode, lambda2 to the stratum-3 mode; lambda12 is the squared
/// cross coupling (> 0 for pairs; zero couplings are singlets).
struct TwoByTwoBlock {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda12 = 0.0;
  int multiplicity = 1;
};

/// Solve lambda1 + lambda2 = lambda - mu, lambda12 - lambda1 lambda2 =
/// kappa - mu for the diagonal entries given a positive lambda12.
/// Returns (lambda1, lambda2) with lambda1 >= lambda2.
inline std::pair<double, double> pair_from_lambda12(const SrgParams& p, double lambda12) {
  if (!(lambda12 > 0.0))
    throw Error(ErrorCode::InvalidArgument, "lambda12 must be positive for a paired block");
  const double s = p.lambda - p.mu;                    // lambda1 + lambda2
  const double prod = lambda12 - (p.kappa - p.mu);     // lambda1 * lambda2
  const double disc = s * s - 4.0 * prod;
  if (disc < 0.0)
    throw Error(ErrorCode::NegativeDiscriminant, "no real diagonal pair for this lambda12");
  const double root = std::sqrt(disc);
  return {0.5 * (s + root), 0.5 * (s - root)};
}

/// The full stratification-basis block-diagonal form of the adjacency matrix:
/// one 3x3 first-stratum block, paired 2x2 blocks with multiplicities, and
/// the decoupled single eigenvalues on each side.
struct BlockDiagonalization {
  FirstStratumBlock first;
  std::vector<TwoByTwoBlock> pairs;
  std::vector<std::pair<double, int>> singlets2;  // (value, multiplicity)
  std::vector<std::pair<double, int>> singlets3;
  SrgParams params;

  /// Union of all block spectra; equals the spectrum of A.
  std::vector<double> adjacency_spectrum() const {
    std::vector<double> ev;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(first.m);
    for (int i = 0; i < 3; ++i) ev.push_back(es.eigenvalues()(i));
    for (const auto& p : pairs) {
      const double tr = p.lambda1 + p.lambda2;
      const double det = p.lambda1 * p.lambda2 - p.lambda12;
      const double disc = std::sqrt(tr * tr - 4.0 * det);
      for (int r = 0; r < p.multiplicity; ++r) {
        ev.push_back(0.5 * (tr + disc));
        ev.push_back(0.5 * (tr - disc));
      }
    }
    for (const auto& [value, mult] : singlets2)
      for (int r = 0; r < mult; ++r) ev.push_back(value);
    for (const auto& [value, mult] : singlets3)
      for (int r = 0; r < mult; ++r) ev.push_back(value);
    std::sort(ev.rbegin(), ev.rend());
    return ev;
  }
};

namespace detail {

// Orthonormal basis of the complement of the uniform vector in R^k,
// as the trailing k-1 columns of a Householder Q whose first column is the
// normalized all-ones vector.
inline Eigen::MatrixXd uniform_complement(int k) {
  Eigen::MatrixXd u = Eigen::MatrixXd::Ones(k, 1) / std::sqrt(static_cast<double>(k));
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(u);
  Eigen::MatrixXd q = qr.householderQ();
  return q.rightCols(k - 1);
}

inline void group_sorted(std::vector<double>& values, double tol,
                         std::vector<std::pair<double, int>>& out) {
  std::sort(values.rbegin(), values.rend());
  for (double v : values) {
    if (!out.empty() && std::abs(out.back().first - v) <= tol)
      ++out.back().second;
    else
      out.emplace_back(v, 1);
  }
}

}  // namespace detail

/// Block-diagonalize the adjacency matrix in the stratification basis.
///
/// The uniform directions are deflated first (they carry the 3x3 first-stratum
/// block), then the residual a12 is SVD'd. Within each degenerate
/// singular-value subspace the left/right bases are rotated jointly by the
/// eigenbasis of the projected a11; the projected a22 must then come out
/// diagonal, which the SRG block identities guarantee (on the deflated
/// complement, a12 a12^T is a polynomial in a11, a12^T a12 one in a22, and
/// a11' + a22' = (lambda-mu) I across each pair). Kernel modes on either side
/// are the singlets; their values must be SRG eigenvalues.
inline BlockDiagonalization block_diagonalize(const StratifiedBlocks& blocks) {
  constexpr double kProjectionTol = 1e-10;
  constexpr double kGroupRelTol = 1e-8;
  constexpr double kKernelRelTol = 1e-10;
  constexpr double kResidualTol = 1e-8;
  constexpr double kSingletSnapTol = 1e-6;

  BlockDiagonalization out;
  out.params = blocks.params;
  out.first = first_stratum_block(blocks.params);

  const Eigen::Matrix3d projection = first_stratum_projection(blocks);
  if ((projection - out.first.m).cwiseAbs().maxCoeff() > kProjectionTol)
    throw Error(ErrorCode::JointDiagonalizationFailure,
                "numeric first-stratum projection deviates from the analytic block");

  const int k = static_cast<int>(blocks.a11.rows());
  const int k2 = static_cast<int>(blocks.a22.rows());
  const double r_eig = blocks.params.eigenvalue_r();
  const double s_eig = blocks.params.eigenvalue_s();

  const Eigen::MatrixXd uperp = detail::uniform_complement(k);
  const Eigen::MatrixXd c11 = uperp.transpose() * blocks.a11.cast<double>() * uperp;

  auto snap_singlet = [&](double value) {
    const double target = std::abs(value - r_eig) <= std::abs(value - s_eig) ? r_eig : s_eig;
    if (std::abs(value - target) > kSingletSnapTol)
      throw Error(ErrorCode::JointDiagonalizationFailure,
                  "singlet value is not an SRG eigenvalue: " + std::to_string(value));
    return target;
  };

  std::vector<double> singlets2, singlets3;
  std::vector<TwoByTwoBlock> raw_pairs;

  if (k2 == 1) {
    // Third stratum is a single vertex: its one mode sits in the first-stratum
    // block and everything left on the stratum-2 side is a singlet.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c11);
    for (int i = 0; i < k - 1; ++i) singlets2.push_back(snap_singlet(es.eigenvalues()(i)));
  } else {
    const Eigen::MatrixXd vperp = detail::uniform_complement(k2);
    const Eigen::MatrixXd c22 = vperp.transpose() * blocks.a22.cast<double>() * vperp;
    const Eigen::MatrixXd b = uperp.transpose() * blocks.a12.cast<double>() * vperp;

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(b, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd sigma = svd.singularValues();
    // the deflated uniform pair carries the overall largest singular value
    const double sigma_top =
        std::max(out.first.m(1, 2), sigma.size() > 0 ? sigma(0) : 0.0);
    const double zero_thresh = kKernelRelTol * std::max(1.0, sigma_top);

    const int rank_max = static_cast<int>(std::min(b.rows(), b.cols()));
    int rank = 0;
    while (rank < rank_max && sigma(rank) > zero_thresh) ++rank;

    // group equal singular values
    int start = 0;
    while (start < rank) {
      int end = start + 1;
      while (end < rank && sigma(start) - sigma(end) <= kGroupRelTol * sigma(start)) ++end;
      const int m = end - start;
      const Eigen::MatrixXd pg = svd.matrixU().middleCols(start, m);
      const Eigen::MatrixXd qg = svd.matrixV().middleCols(start, m);

      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es11(pg.transpose() * c11 * pg);
      const Eigen::MatrixXd rot = es11.eigenvectors();
      const Eigen::MatrixXd s22 = (qg * rot).transpose() * c22 * (qg * rot);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (i != j && std::abs(s22(i, j)) > kResidualTol)
            throw Error(ErrorCode::JointDiagonalizationFailure,
                        "projected a22 is not diagonal in the joint basis");

      const double lambda12 = sigma(start) * sigma(start);
      for (int i = 0; i < m; ++i) {
        TwoByTwoBlock pair;
        pair.lambda1 = es11.eigenvalues()(i);
        pair.lambda2 = s22(i, i);
        pair.lambda12 = lambda12;
        const double sum_residual =
            std::abs(pair.lambda1 + pair.lambda2 - (blocks.params.lambda - blocks.params.mu));
        const double prod_residual = std::abs(pair.lambda12 - pair.lambda1 * pair.lambda2 -
                                              (blocks.params.kappa - blocks.params.mu));
        if (sum_residual > kResidualTol || prod_residual > kResidualTol)
          throw Error(ErrorCode::JointDiagonalizationFailure,
                      "paired block violates the trace/determinant constraints");
        raw_pairs.push_back(pair);
      }
      start = end;
    }

    // kernel modes: left null space -> stratum-2 singlets, right -> stratum-3
    if (rank < k - 1) {
      const Eigen::MatrixXd kl = svd.matrixU().rightCols(k - 1 - rank);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(kl.transpose() * c11 * kl);
      for (int i = 0; i < es.eigenvalues().size(); ++i)
        singlets2.push_back(snap_singlet(es.eigenvalues()(i)));
    }
    if (rank < k2 - 1) {
      const Eigen::MatrixXd kr = svd.matrixV().rightCols(k2 - 1 - rank);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(kr.transpose() * c22 * kr);
      for (int i = 0; i < es.eigenvalues().size(); ++i)
        singlets3.push_back(snap_singlet(es.eigenvalues()(i)));
    }
  }

  // merge identical pairs into multiplicities, descending (lambda12, lambda1)
  std::sort(raw_pairs.begin(), raw_pairs.end(), [](const auto& x, const auto& y) {
    if (std::abs(x.lambda12 - y.lambda12) > 1e-9) return x.lambda12 > y.lambda12;
    return x.lambda1 > y.lambda1;
  });
  for (const auto& p : raw_pairs) {
    if (!out.pairs.empty() && std::abs(out.pairs.back().lambda12 - p.lambda12) <= kResidualTol &&
        std::abs(out.pairs.back().lambda1 - p.lambda1) <= kResidualTol)
      ++out.pairs.back().multiplicity;
    else
      out.pairs.push_back(p);
  }
  detail::group_sorted(singlets2, kResidualTol, out.singlets2);
  detail::group_sorted(singlets3, kResidualTol, out.singlets3);

  // mode counting: each side contributes one mode to the first-stratum block
  int pair_count = 0, s2 = 0, s3 = 0;
  for (const auto& p : out.pairs) pair_count += p.multiplicity;
  for (const auto& [v, m] : out.singlets2) s2 += m;
  for (const auto& [v, m] : out.singlets3) s3 += m;
  if (1 + pair_count + s2 != k || 1 + pair_count + s3 != k2)
    throw Error(ErrorCode::JointDiagonalizationFailure, "mode counting mismatch");

  return out;
}

}  // namespace srgnet
