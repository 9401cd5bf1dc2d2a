#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "srgnet/errors.hpp"

namespace srgnet {

/// Simple undirected loopless graph with dense 0/1 adjacency.
/// Immutable after construction; the constructor rejects anything that is not
/// a symmetric 0/1 matrix with zero diagonal.
class Graph {
 public:
  explicit Graph(Eigen::MatrixXi adjacency) : adj_(std::move(adjacency)) {
    const auto n = adj_.rows();
    if (n < 1 || adj_.cols() != n)
      throw Error(ErrorCode::InvalidGraph, "adjacency must be square and non-empty");
    for (Eigen::Index i = 0; i < n; ++i) {
      if (adj_(i, i) != 0)
        throw Error(ErrorCode::InvalidGraph, "loop at vertex " + std::to_string(i));
      for (Eigen::Index j = 0; j < n; ++j) {
        if (adj_(i, j) != 0 && adj_(i, j) != 1)
          throw Error(ErrorCode::InvalidGraph, "adjacency entries must be 0 or 1");
        if (adj_(i, j) != adj_(j, i))
          throw Error(ErrorCode::InvalidGraph, "adjacency must be symmetric");
      }
    }
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
    for (auto [i, j] : edges) {
      if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw Error(ErrorCode::InvalidGraph, "bad edge");
      a(i, j) = a(j, i) = 1;
    }
    return Graph(std::move(a));
  }

  int order() const { return static_cast<int>(adj_.rows()); }
  bool has_edge(int i, int j) const { return adj_(i, j) != 0; }
  int degree(int i) const { return adj_.row(i).sum(); }
  long edge_count() const { return adj_.sum() / 2; }
  const Eigen::MatrixXi& adjacency() const { return adj_; }

  bool is_connected() const {
    const int n = order();
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int v = queue[h];
      for (int u = 0; u < n; ++u)
        if (adj_(v, u) && !seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
    }
    return queue.size() == static_cast<std::size_t>(n);
  }

  /// Vertex i of the result is vertex perm[i]... inverse convention trips
  /// everyone up, so spell it out: result(perm[i], perm[j]) == this(i, j).
  Graph relabeled(const std::vector<int>& perm) const {
    const int n = order();
    if (static_cast<int>(perm.size()) != n)
      throw Error(ErrorCode::InvalidArgument, "permutation size mismatch");
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (adj_(i, j)) a(perm[i], perm[j]) = 1;
    return Graph(std::move(a));
  }

  Graph complement() const {
    const int n = order();
    Eigen::MatrixXi a = Eigen::MatrixXi::Ones(n, n) - Eigen::MatrixXi::Identity(n, n) - adj_;
    return Graph(std::move(a));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  Eigen::MatrixXi adj_;
};

/// The tuple (n, kappa, lambda, mu) of a strongly regular graph.
struct SrgParams {
  int n = 0;
  int kappa = 0;
  int lambda = 0;
  int mu = 0;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;

  /// Feasibility conditions: n-1 > kappa >= mu > 0, kappa-1 > lambda >= 0,
  /// the edge-count identity kappa(kappa-lambda-1) = (n-kappa-1)mu, and its
  /// algebraic restatement kappa^2 = (kappa-mu) + mu n + (lambda-mu)kappa.
  void validate() const {
    if (!(n - 1 > kappa && kappa >= mu && mu > 0))
      throw Error(ErrorCode::InvalidArgument, "requires n-1 > kappa >= mu > 0");
    if (!(kappa - 1 > lambda && lambda >= 0))
      throw Error(ErrorCode::InvalidArgument, "requires kappa-1 > lambda >= 0");
    if (kappa * (kappa - lambda - 1) != (n - kappa - 1) * mu)
      throw Error(ErrorCode::InvalidArgument, "edge-count identity violated");
    if (kappa * kappa != (kappa - mu) + mu * n + (lambda - mu) * kappa)
      throw Error(ErrorCode::InvalidArgument, "parameter identity violated");
  }

  /// Restricted eigenvalues r >= s of the adjacency matrix:
  /// (lambda - mu +- sqrt((lambda-mu)^2 + 4(kappa-mu))) / 2.
  double eigenvalue_r() const {
    const double t = lambda - mu;
    return 0.5 * (t + std::sqrt(t * t + 4.0 * (kappa - mu)));
  }
  double eigenvalue_s() const {
    const double t = lambda - mu;
    return 0.5 * (t - std::sqrt(t * t + 4.0 * (kappa - mu)));
  }
};

/// L = diag(degree) - A. Every row sums to zero.
inline Eigen::MatrixXi laplacian(const Graph& graph) {
  const int n = graph.order();
  Eigen::MatrixXi l = -graph.adjacency();
  for (int i = 0; i < n; ++i) l(i, i) = graph.degree(i);
  return l;
}

/// Ground-state potential matrix V = I + 2gL of the oscillator network.
struct PotentialMatrix {
  double g = 0.0;
  Eigen::MatrixXd matrix;
};

inline PotentialMatrix potential(const Graph& graph, double g) {
  if (!(g >= 0.0)) throw Error(ErrorCode::InvalidArgument, "coupling g must be >= 0");
  PotentialMatrix v;
  v.g = g;
  v.matrix = Eigen::MatrixXd::Identity(graph.order(), graph.order()) +
             2.0 * g * laplacian(graph).cast<double>();
  return v;
}

/// Classify a graph as strongly regular, or throw.
///
/// The parameters are established twice over the integers: once by counting
/// common neighbours of every vertex pair, and once through the entrywise
/// identity A^2 = (kappa-mu)I + mu J + (lambda-mu)A. Exact arithmetic keeps
/// the classification free of floating-point noise.
inline SrgParams srg_params(const Graph& graph) {
  const int n = graph.order();
  const Eigen::MatrixXi& a = graph.adjacency();

  const long edges = graph.edge_count();
  if (edges == 0) throw Error(ErrorCode::Degenerate, "edgeless graph");
  if (edges == static_cast<long>(n) * (n - 1) / 2)
    throw Error(ErrorCode::Degenerate, "complete graph");
  if (!graph.is_connected()) throw Error(ErrorCode::Disconnected, "graph is not connected");

  const int kappa = graph.degree(0);
  for (int i = 1; i < n; ++i)
    if (graph.degree(i) != kappa)
      throw Error(ErrorCode::NotRegular, "degrees differ: " + std::to_string(kappa) + " vs " +
                                             std::to_string(graph.degree(i)));

  // Route 1: direct common-neighbour counting.
  int lambda = -1, mu = -1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int common = 0;
      for (int k = 0; k < n; ++k) common += a(i, k) & a(k, j);
      if (a(i, j)) {
        if (lambda < 0) lambda = common;
        if (common != lambda)
          throw Error(ErrorCode::NotStronglyRegular, "lambda is not constant");
      } else {
        if (mu < 0) mu = common;
        if (common != mu) throw Error(ErrorCode::NotStronglyRegular, "mu is not constant");
      }
    }
  }
  if (mu < 0) throw Error(ErrorCode::NotStronglyRegular, "no non-adjacent pair");

  // Route 2: the adjacency-matrix identity, entrywise over the integers.
  const Eigen::MatrixXi a2 = a * a;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int expected = (i == j ? kappa - mu : 0) + mu + (lambda - mu) * a(i, j);
      if (a2(i, j) != expected)
        throw Error(ErrorCode::NotStronglyRegular, "A^2 identity fails at (" +
                                                       std::to_string(i) + "," +
                                                       std::to_string(j) + ")");
    }

  SrgParams p{n, kappa, lambda, mu};
  p.validate();
  return p;
}

}  // namespace srgnet
