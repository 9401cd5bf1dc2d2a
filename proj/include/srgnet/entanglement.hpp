#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "srgnet/families.hpp"
#include "srgnet/graph.hpp"
#include "srgnet/stratification.hpp"

namespace srgnet {

enum class LogBase { Nats, Bits };

/// Which matrix sits in the ground-state exponent. Paper keeps W = V = I+2gL
/// verbatim; Physical substitutes W = V^{1/2} for the textbook oscillator
/// ground state. Every closed form in this header follows the Paper
/// convention.
enum class GroundStateConvention { Paper, Physical };

struct CouplingConfig {
  double g = 1.0;
  LogBase log_base = LogBase::Nats;
  GroundStateConvention convention = GroundStateConvention::Paper;
};

/// Per-mode entanglement data of one two-mode Gaussian factor:
/// gamma = 1/sqrt(1-d^2) and
/// S = ((gamma+1)/2) log((gamma+1)/2) - ((gamma-1)/2) log((gamma-1)/2).
struct ModeEntanglement {
  double d = 0.0;
  double gamma = 1.0;
  double entropy = 0.0;
};

namespace detail {

inline long double entropy_nats_ld(long double gamma) {
  if (gamma <= 1.0L) return 0.0L;
  const long double hi = 0.5L * (gamma + 1.0L);
  const long double lo = 0.5L * (gamma - 1.0L);
  return hi * std::log(hi) - lo * std::log(lo);
}

inline double log_base_factor(LogBase base) {
  return base == LogBase::Bits ? 1.0 / std::log(2.0) : 1.0;
}

}  // namespace detail

inline double entropy_from_gamma(double gamma, LogBase base = LogBase::Nats) {
  if (!(gamma >= 1.0)) throw Error(ErrorCode::InvalidArgument, "gamma must be >= 1");
  return static_cast<double>(detail::entropy_nats_ld(gamma)) * detail::log_base_factor(base);
}

inline ModeEntanglement mode_entropy(double d, const CouplingConfig& config = {}) {
  if (!(d >= 0.0) || d >= 1.0)
    throw Error(ErrorCode::DOutOfRange,
                "Schmidt number must lie in [0,1), got " + std::to_string(d));
  ModeEntanglement m;
  m.d = d;
  if (d == 0.0) return m;
  m.gamma = 1.0 / std::sqrt((1.0 - d) * (1.0 + d));
  m.entropy = entropy_from_gamma(m.gamma, config.log_base);
  return m;
}

/// v11 - v12 v22^{-1} v12^T, the Schur complement of v22. v22 must be
/// invertible (positive definite in every use here).
inline Eigen::MatrixXd schur_reduce(const Eigen::MatrixXd& v11, const Eigen::MatrixXd& v12,
                                    const Eigen::MatrixXd& v22) {
  if (v11.rows() != v11.cols() || v22.rows() != v22.cols() || v12.rows() != v11.rows() ||
      v12.cols() != v22.rows())
    throw Error(ErrorCode::InvalidArgument, "Schur block shapes do not match");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(v22);
  const double emax = es.eigenvalues().cwiseAbs().maxCoeff();
  if (es.eigenvalues().cwiseAbs().minCoeff() <= 1e-12 * std::max(1.0, emax))
    throw Error(ErrorCode::SingularBlock, "v22 block is numerically singular");
  const Eigen::MatrixXd inv =
      es.eigenvectors() * es.eigenvalues().cwiseInverse().asDiagonal() *
      es.eigenvectors().transpose();
  Eigen::MatrixXd s = v11 - v12 * inv * v12.transpose();
  return 0.5 * (s + s.transpose());
}

enum class StrataPartition { S1_vs_S23, S12_vs_S3, S13_vs_S2 };

inline const char* to_string(StrataPartition p) {
  switch (p) {
    case StrataPartition::S1_vs_S23: return "1:23";
    case StrataPartition::S12_vs_S3: return "12:3";
    case StrataPartition::S13_vs_S2: return "13:2";
  }
  return "?";
}

/// Corrected evaluates the V-consistent reduction of the first-stratum 3x3
/// potential; PaperLiteral reproduces the printed expressions verbatim where
/// they deviate (the 13:2 case and the generic 2x2-block formula), for
/// discrepancy reporting only.
enum class FormulaVariant { Corrected, PaperLiteral };

namespace detail {

// Expanded denominators of the first-stratum Schmidt numbers, with the
// edge-count identity kappa(kappa-lambda-1) = (n-kappa-1)mu folded in so all
// coefficients are positive. This keeps d, gamma and S fully accurate at
// couplings as large as 1e8, where the textbook route through 1-d^2 would
// cancel catastrophically.
//   q(g) = (1+2g mu)(1+2g(kappa-lambda)) - 4g^2 mu (kappa-lambda-1)
//        = 1 + 2g(kappa-lambda+mu) + 4g^2 mu
//   r(g) = (1+2g kappa)(1+2g(kappa-lambda)) - 4g^2 kappa
//        = 1 + 2g(2kappa-lambda) + 4g^2 mu(n-kappa-1)
//   nden = (1+2g kappa) q - 4g^2 kappa (1+2g mu)
//        = (1+2g mu) r - 4g^2 mu(kappa-lambda-1)(1+2g kappa)
//        = 1 + 2g(2kappa-lambda+mu) + 4g^2 mu n
struct FirstStratumPoly {
  long double one_plus_2gk, one_plus_2gmu, q, r, nden;
  long double g, kappa, mu, klm1;  // klm1 = kappa-lambda-1

  FirstStratumPoly(const SrgParams& p, double gin) {
    const long double g_ = gin;
    const long double kappa_ = p.kappa, lambda_ = p.lambda, mu_ = p.mu, n_ = p.n;
    g = g_;
    kappa = kappa_;
    mu = mu_;
    klm1 = kappa_ - lambda_ - 1.0L;
    one_plus_2gk = 1.0L + 2.0L * g_ * kappa_;
    one_plus_2gmu = 1.0L + 2.0L * g_ * mu_;
    q = 1.0L + 2.0L * g_ * (kappa_ - lambda_ + mu_) + 4.0L * g_ * g_ * mu_;
    r = 1.0L + 2.0L * g_ * (2.0L * kappa_ - lambda_) +
        4.0L * g_ * g_ * mu_ * (n_ - kappa_ - 1.0L);
    nden = 1.0L + 2.0L * g_ * (2.0L * kappa_ - lambda_ + mu_) + 4.0L * g_ * g_ * mu_ * n_;
  }

  long double d_1_23() const {
    return 2.0L * g * std::sqrt(kappa * one_plus_2gmu / (one_plus_2gk * q));
  }
  long double gamma_1_23() const { return std::sqrt(one_plus_2gk * q / nden); }
  long double d_12_3() const {
    return 2.0L * g * std::sqrt(mu * klm1 * one_plus_2gk / (one_plus_2gmu * r));
  }
  long double gamma_12_3() const { return std::sqrt(one_plus_2gmu * r / nden); }
};

}  // namespace detail

/// Closed-form Schmidt number of the three strata bipartitions, from the
/// first-stratum 3x3 block alone.
inline double closed_form_schmidt(const SrgParams& p, double g, StrataPartition partition,
                                  FormulaVariant variant = FormulaVariant::Corrected) {
  if (!(g >= 0.0)) throw Error(ErrorCode::InvalidArgument, "coupling g must be >= 0");
  p.validate();
  const detail::FirstStratumPoly poly(p, g);
  switch (partition) {
    case StrataPartition::S1_vs_S23: return static_cast<double>(poly.d_1_23());
    case StrataPartition::S12_vs_S3: return static_cast<double>(poly.d_12_3());
    case StrataPartition::S13_vs_S2: {
      const long double gl = g;
      const long double kl = p.kappa, ll = p.lambda, ml = p.mu;
      const long double da = 1.0L + 2.0L * gl * kl;
      const long double db = 1.0L + 2.0L * gl * (kl - ll);
      const long double dc = 1.0L + 2.0L * gl * ml;
      const long double first = variant == FormulaVariant::PaperLiteral ? kl * kl : kl;
      const long double d2 =
          4.0L * gl * gl * (first / (da * db) + ml * (kl - ll - 1.0L) / (dc * db));
      return static_cast<double>(std::sqrt(d2));
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown partition");
}

/// Schmidt number plus gamma and entropy for a first-stratum bipartition,
/// evaluated through the expanded polynomial forms (stable for g up to ~1e8).
inline ModeEntanglement first_stratum_mode(const SrgParams& p, double g,
                                           StrataPartition partition,
                                           LogBase base = LogBase::Nats) {
  if (!(g >= 0.0)) throw Error(ErrorCode::InvalidArgument, "coupling g must be >= 0");
  p.validate();
  ModeEntanglement m;
  if (g == 0.0) return m;
  const detail::FirstStratumPoly poly(p, g);
  long double d, gamma;
  switch (partition) {
    case StrataPartition::S1_vs_S23:
      d = poly.d_1_23();
      gamma = poly.gamma_1_23();
      break;
    case StrataPartition::S12_vs_S3:
      d = poly.d_12_3();
      gamma = poly.gamma_12_3();
      break;
    case StrataPartition::S13_vs_S2: {
      d = closed_form_schmidt(p, g, partition);
      gamma = 1.0L / std::sqrt((1.0L - d) * (1.0L + d));
      break;
    }
    default: throw Error(ErrorCode::InvalidArgument, "unknown partition");
  }
  m.d = static_cast<double>(d);
  m.gamma = static_cast<double>(gamma);
  m.entropy = static_cast<double>(detail::entropy_nats_ld(gamma)) * detail::log_base_factor(base);
  return m;
}

/// Schmidt number of one paired 2x2 block for the stratum-2 vs stratum-3
/// bipartition. The potential restricted to the pair is
/// [[1+2g(kappa-lambda1), -2g sqrt(lambda12)], [., 1+2g(kappa-lambda2)]],
/// giving d = 2g sqrt(lambda12) / sqrt((1+2g(kappa-lambda1))(1+2g(kappa-lambda2))).
/// PaperLiteral replaces kappa-lambda_i by lambda12-lambda_i.
inline double block_schmidt(const TwoByTwoBlock& block, const SrgParams& p, double g,
                            FormulaVariant variant = FormulaVariant::Corrected) {
  if (!(g >= 0.0)) throw Error(ErrorCode::InvalidArgument, "coupling g must be >= 0");
  const double b1 = variant == FormulaVariant::Corrected ? p.kappa - block.lambda1
                                                         : block.lambda12 - block.lambda1;
  const double b2 = variant == FormulaVariant::Corrected ? p.kappa - block.lambda2
                                                         : block.lambda12 - block.lambda2;
  return 2.0 * g * std::sqrt(block.lambda12) /
         std::sqrt((1.0 + 2.0 * g * b1) * (1.0 + 2.0 * g * b2));
}

/// Bipartition report: all min(|A|,|B|) Schmidt modes, descending.
struct EntanglementReport {
  std::string partition;
  std::vector<ModeEntanglement> modes;
  double total_entropy = 0.0;
  double g = 0.0;
};

namespace detail {

inline Eigen::MatrixXd symmetric_power(const Eigen::MatrixXd& m, double exponent) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw Error(ErrorCode::InvalidArgument, "matrix is not positive definite");
  Eigen::VectorXd powered = es.eigenvalues().array().pow(exponent).matrix();
  return es.eigenvectors() * powered.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace detail

/// Multimode Schmidt spectrum of an arbitrary vertex bipartition: the mode
/// Schmidt numbers are the singular values of W_AA^{-1/2} W_AB W_BB^{-1/2},
/// where W is the ground-state exponent matrix.
inline EntanglementReport bipartite_entanglement(const Graph& graph,
                                                 const std::vector<int>& subset_a,
                                                 const CouplingConfig& config = {}) {
  const int n = graph.order();
  std::vector<int> a = subset_a;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.empty() || static_cast<int>(a.size()) == n)
    throw Error(ErrorCode::EmptyOrFullSubset, "subset must be nonempty and proper");
  for (int v : a)
    if (v < 0 || v >= n) throw Error(ErrorCode::InvalidArgument, "subset vertex out of range");

  std::vector<int> b;
  {
    std::vector<char> in_a(n, 0);
    for (int v : a) in_a[v] = 1;
    for (int v = 0; v < n; ++v)
      if (!in_a[v]) b.push_back(v);
  }

  Eigen::MatrixXd w = potential(graph, config.g).matrix;
  if (config.convention == GroundStateConvention::Physical)
    w = detail::symmetric_power(w, 0.5);

  const auto na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  Eigen::MatrixXd waa(na, na), wbb(nb, nb), wab(na, nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) waa(i, j) = w(a[i], a[j]);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) wbb(i, j) = w(b[i], b[j]);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) wab(i, j) = w(a[i], b[j]);

  const Eigen::MatrixXd whitened = detail::symmetric_power(waa, -0.5) * wab *
                                   detail::symmetric_power(wbb, -0.5);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(whitened);

  EntanglementReport report;
  report.g = config.g;
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    const ModeEntanglement m = mode_entropy(svd.singularValues()(i), config);
    report.total_entropy += m.entropy;
    report.modes.push_back(m);
  }
  return report;
}

/// Vertex subset of side A for a strata bipartition.
inline std::vector<int> strata_subset(const Stratification& strat, StrataPartition partition) {
  if (strat.strata.size() != 3)
    throw Error(ErrorCode::NotThreeStrata, "strata bipartitions need exactly 3 strata");
  std::vector<int> subset{strat.strata[0]};
  const auto& extra = partition == StrataPartition::S12_vs_S3   ? strat.strata[1]
                      : partition == StrataPartition::S13_vs_S2 ? strat.strata[2]
                                                                : std::vector<int>{};
  subset.insert(subset.end(), extra.begin(), extra.end());
  return subset;
}

/// Independent single-mode oracle: discretize
/// psi(x,y) = exp(-x^2/2 - y^2/2 - d x y) on a symmetric grid, SVD the kernel
/// with trapezoid weights absorbed, and return the normalized squared
/// singular values. These follow the geometric law (2/(gamma+1)) * t^{2n}
/// with t^2 = (gamma-1)/(gamma+1).
inline std::vector<double> mehler_oracle(double d, double grid_halfwidth = 8.0,
                                         int grid_points = 400) {
  if (!(d > 0.0) || d >= 1.0)
    throw Error(ErrorCode::DOutOfRange, "Mehler oracle needs 0 < d < 1");
  if (grid_points < 16 || !(grid_halfwidth > 0.0))
    throw Error(ErrorCode::InvalidArgument, "grid too small");

  const int n = grid_points;
  Eigen::VectorXd x(n), sw(n);
  const double h = 2.0 * grid_halfwidth / (n - 1);
  for (int i = 0; i < n; ++i) {
    x(i) = -grid_halfwidth + i * h;
    sw(i) = std::sqrt((i == 0 || i == n - 1) ? 0.5 * h : h);
  }
  Eigen::MatrixXd kernel(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      kernel(i, j) =
          sw(i) * std::exp(-0.5 * x(i) * x(i) - 0.5 * x(j) * x(j) - d * x(i) * x(j)) * sw(j);

  Eigen::BDCSVD<Eigen::MatrixXd> svd(kernel);
  Eigen::VectorXd sq = svd.singularValues().array().square();
  sq /= sq.sum();

  const double gamma = 1.0 / std::sqrt((1.0 - d) * (1.0 + d));
  if (std::abs(sq(0) - 2.0 / (gamma + 1.0)) > 1e-4)
    throw Error(ErrorCode::GridTooCoarse,
                "leading Schmidt coefficient deviates from 2/(gamma+1); enlarge the grid");
  return {sq.data(), sq.data() + sq.size()};
}

/// Large-coupling asymptote of the entanglement entropy (natural log):
/// S ~ ln(gamma/2) + 1 with gamma^2 = 2 g kappa / n for the 1:23 cut and
/// gamma^2 = 2 g mu (n-kappa-1) / n for the 12:3 cut, whose boundary has
/// mu(n-kappa-1) edges.
struct LargeGEntropy {
  double entropy = 0.0;
  double gamma_asymptotic = 1.0;
  bool in_regime = true;  // gamma_asymptotic >= 2, else the asymptote is meaningless
};

inline LargeGEntropy large_g_entropy(const SrgParams& p, double g, StrataPartition partition) {
  if (!(g > 0.0)) throw Error(ErrorCode::InvalidArgument, "coupling g must be > 0");
  p.validate();
  double boundary;
  switch (partition) {
    case StrataPartition::S1_vs_S23: boundary = p.kappa; break;
    case StrataPartition::S12_vs_S3: boundary = static_cast<double>(p.mu) * (p.n - p.kappa - 1); break;
    default:
      throw Error(ErrorCode::InvalidArgument, "large-coupling asymptote covers 1:23 and 12:3");
  }
  LargeGEntropy out;
  out.gamma_asymptotic = std::sqrt(2.0 * g * boundary / p.n);
  out.in_regime = out.gamma_asymptotic >= 2.0;
  out.entropy = 0.5 * std::log(g * boundary / (2.0 * p.n)) + 1.0;
  return out;
}

enum class AreaLawCase { FiniteMu, KappaEqualsMu };

/// gamma of the 1:23 cut in the two area-law regimes. FiniteMu evaluates the
/// exact first-stratum gamma (which tends to 1 as kappa grows at fixed mu);
/// KappaEqualsMu evaluates the dedicated kappa = mu expression, whose
/// denominator is the one printed for that case.
inline double area_law_gamma(const SrgParams& p, double g, AreaLawCase which) {
  if (!(g >= 0.0)) throw Error(ErrorCode::InvalidArgument, "coupling g must be >= 0");
  p.validate();
  switch (which) {
    case AreaLawCase::FiniteMu:
      return static_cast<double>(detail::FirstStratumPoly(p, g).gamma_1_23());
    case AreaLawCase::KappaEqualsMu: {
      if (p.kappa != p.mu)
        throw Error(ErrorCode::CaseMismatch, "this branch requires kappa = mu");
      const double k = p.kappa, l = p.lambda;
      const double qp = 1.0 + 4.0 * g * g * k + 2.0 * g * k * (2.0 * k - l);
      const double frac = 4.0 * g * g * k * (1.0 + 2.0 * g * k) / qp;
      return std::sqrt((1.0 + 2.0 * g * k) / (1.0 + 2.0 * g * k - frac));
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown area-law case");
}

/// One printed family formula next to the value the general pipeline gives.
struct FormulaRow {
  std::string label;
  double printed = 0.0;       // family formula, evaluated verbatim
  double pipeline = 0.0;      // corrected/general value
  double discrepancy = 0.0;   // |printed - pipeline|
  bool consistent = false;    // discrepancy <= 1e-10
  bool printed_exceeds_one = false;  // printed value is not a valid Schmidt number
};

namespace detail {

inline FormulaRow make_row(std::string label, double printed, double pipeline) {
  FormulaRow row;
  row.label = std::move(label);
  row.printed = printed;
  row.pipeline = pipeline;
  row.discrepancy = std::abs(printed - pipeline);
  row.consistent = row.discrepancy <= 1e-10;
  row.printed_exceeds_one = !(printed < 1.0);
  return row;
}

inline FormulaRow block_row(std::string label, double printed, const SrgParams& p, double l1,
                            double l12, double g) {
  TwoByTwoBlock blk;
  blk.lambda1 = l1;
  blk.lambda2 = (p.lambda - p.mu) - l1;
  blk.lambda12 = l12;
  return make_row(std::move(label), printed, block_schmidt(blk, p, g));
}

}  // namespace detail

/// Evaluate every Schmidt-number formula the source families come with,
/// verbatim, next to the general pipeline value. Consistent rows agree to
/// 1e-10 by algebra; the rest document where the printed expressions deviate
/// (kappa^2 numerators, lambda12-lambda_i denominators), including printed
/// values that leave [0,1) at large coupling.
inline std::vector<FormulaRow> family_closed_forms(const FamilySpec& spec, double g) {
  if (!(g >= 0.0)) throw Error(ErrorCode::InvalidArgument, "coupling g must be >= 0");
  const SrgParams p = spec.expected_params();
  p.validate();
  const auto d123 = [&] { return closed_form_schmidt(p, g, StrataPartition::S1_vs_S23); };
  const auto d123p = [&] { return closed_form_schmidt(p, g, StrataPartition::S12_vs_S3); };
  const auto d132 = [&] { return closed_form_schmidt(p, g, StrataPartition::S13_vs_S2); };
  using detail::block_row;
  using detail::make_row;
  std::vector<FormulaRow> rows;

  switch (spec.family) {
    case Family::CompleteBipartite: {
      const double m = spec.a;
      rows.push_back(make_row(
          "d(1,23)", 2.0 * std::sqrt(m) * g /
                         std::sqrt(std::pow(1.0 + 2.0 * g * m, 2) - 4.0 * m * (m - 1.0) * g * g),
          d123()));
      rows.push_back(make_row(
          "d(12,3)", 2.0 * std::sqrt(m * (m - 1.0)) * g /
                         std::sqrt(std::pow(1.0 + 2.0 * g * m, 2) - 4.0 * m * g * g),
          d123p()));
      rows.push_back(make_row(
          "d(13,2)", 2.0 * g / (1.0 + 2.0 * g * m) * std::sqrt(m * (2.0 * m - 1.0)), d132()));
      break;
    }
    case Family::CompleteMultipartite:
    case Family::CocktailParty: {
      // kappa = mu family: printed d(12,3) with kappa substituted for mu
      const double k = p.kappa, l = p.lambda, nk1 = p.n - p.kappa - 1;
      rows.push_back(make_row(
          "d(12,3)",
          2.0 * std::sqrt(nk1) * std::sqrt(k) * g /
              std::sqrt((1.0 + 2.0 * g * k) * (1.0 + 2.0 * g * (k - l)) - 4.0 * g * g * k),
          d123p()));
      break;
    }
    case Family::Petersen: {
      // lambda = 0 family: printed stratum-2/3 block formula
      const double k = p.kappa, mu = p.mu;
      rows.push_back(block_row(
          "d(2,3) lambda1=0",
          2.0 * g * std::sqrt(k - mu) /
              (std::sqrt(1.0 + 2.0 * g * k) * std::sqrt(1.0 + 2.0 * g * (k - mu))),
          p, 0.0, k - mu, g));
      break;
    }
    case Family::Triangular: {
      const double nu = spec.a;
      rows.push_back(make_row(
          "d(1,23)",
          2.0 * g * std::sqrt(2.0 * (nu - 2.0) * (1.0 + 8.0 * g)) /
              (std::sqrt(1.0 + 4.0 * g * (nu - 2.0)) *
               std::sqrt((1.0 + 8.0 * g) * (1.0 + 2.0 * g * (nu - 2.0)) -
                         16.0 * g * g * (nu - 3.0))),
          d123()));
      rows.push_back(make_row(
          "d(12,3)",
          4.0 * g * std::sqrt((nu - 3.0) * (1.0 + 4.0 * g * (nu - 2.0))) /
              (std::sqrt(1.0 + 8.0 * g) *
               std::sqrt((1.0 + 4.0 * g * (nu - 2.0)) * (1.0 + 2.0 * g * (nu - 2.0)) -
                         8.0 * g * g * (nu - 3.0))),
          d123p()));
      rows.push_back(make_row(
          "d(13,2)",
          4.0 * g * std::sqrt((nu - 2.0) * (nu - 2.0) /
                                  ((1.0 + 4.0 * g * (nu - 2.0)) * (1.0 + 2.0 * g * (nu - 2.0))) +
                              (nu - 3.0) / ((1.0 + 8.0 * g) * (1.0 + 2.0 * g * (nu - 2.0)))),
          d132()));
      rows.push_back(block_row(
          "d(2,3) lambda1=0",
          2.0 * g * std::sqrt(2.0 * (nu - 4.0)) /
              (std::sqrt(1.0 + 4.0 * g * (nu - 4.0)) * std::sqrt(1.0 + 2.0 * g * (nu - 2.0))),
          p, 0.0, 2.0 * (nu - 4.0), g));
      break;
    }
    case Family::Lattice: {
      const double nu = spec.a;
      rows.push_back(make_row(
          "d(1,23)",
          2.0 * g * std::sqrt(2.0 * (nu - 1.0) * (1.0 + 4.0 * g)) /
              (std::sqrt(1.0 + 4.0 * g * (nu - 1.0)) *
               std::sqrt((1.0 + 4.0 * g) * (1.0 + 2.0 * g * nu) - 8.0 * g * g * (nu - 1.0))),
          d123()));
      rows.push_back(make_row(
          "d(12,3)",
          2.0 * g * std::sqrt(2.0 * (nu - 1.0) * (1.0 + 4.0 * g * (nu - 1.0))) /
              (std::sqrt(1.0 + 4.0 * g) *
               std::sqrt((1.0 + 4.0 * g * (nu - 1.0)) * (1.0 + 2.0 * g * nu) -
                         8.0 * g * g * (nu - 1.0))),
          d123p()));
      rows.push_back(make_row(
          "d(13,2)",
          2.0 * g * std::sqrt(4.0 * (nu - 1.0) * (nu - 1.0) /
                                  ((1.0 + 4.0 * g * (nu - 1.0)) * (1.0 + 2.0 * g * nu)) +
                              2.0 * (nu - 1.0) / ((1.0 + 4.0 * g) * (1.0 + 2.0 * g * nu))),
          d132()));
      rows.push_back(block_row(
          "d(2,3) lambda1=-1",
          2.0 * g * std::sqrt(nu - 1.0) /
              (std::sqrt(1.0 + 4.0 * g * (nu - 1.0)) * std::sqrt(1.0 + 2.0 * g * (nu - 1.0))),
          p, -1.0, nu - 1.0, g));
      break;
    }
    case Family::LatinSquareCyclic: {
      const double nu = spec.a;
      rows.push_back(make_row(
          "d(1,23)",
          2.0 * g * std::sqrt(3.0 * (nu - 1.0) * (1.0 + 12.0 * g)) /
              (std::sqrt(1.0 + 6.0 * g * (nu - 1.0)) *
               std::sqrt((1.0 + 12.0 * g) * (1.0 + 2.0 * g * (2.0 * nu - 3.0)) -
                         48.0 * g * g * (nu - 2.0))),
          d123()));
      rows.push_back(make_row(
          "d(12,3)",
          4.0 * g * std::sqrt(3.0 * (nu - 2.0) * (1.0 + 6.0 * g * (nu - 1.0))) /
              (std::sqrt(1.0 + 12.0 * g) *
               std::sqrt((1.0 + 6.0 * g * (nu - 1.0)) * (1.0 + 2.0 * g * (2.0 * nu - 3.0)) -
                         12.0 * g * g * (nu - 1.0))),
          d123p()));
      rows.push_back(make_row(
          "d(13,2)",
          2.0 * g *
              std::sqrt(9.0 * (nu - 1.0) * (nu - 1.0) /
                            ((1.0 + 6.0 * g * (nu - 1.0)) * (1.0 + 2.0 * g * (2.0 * nu - 3.0))) +
                        12.0 * (nu - 2.0) /
                            ((1.0 + 12.0 * g) * (1.0 + 2.0 * g * (2.0 * nu - 3.0)))),
          d132()));
      rows.push_back(block_row(
          "d(2,3) lambda1=1",
          2.0 * g * std::sqrt(4.0 * (nu - 4.0)) /
              (std::sqrt(1.0 + 2.0 * g * (4.0 * nu - 17.0)) *
               std::sqrt(1.0 + 6.0 * g * (nu - 3.0))),
          p, 1.0, 4.0 * (nu - 4.0), g));
      rows.push_back(block_row(
          "d(2,3) lambda1=0",
          2.0 * g * std::sqrt(3.0 * (nu - 3.0)) /
              (std::sqrt(1.0 + 2.0 * g * (2.0 * nu - 3.0)) *
               std::sqrt(1.0 + 6.0 * g * (nu - 3.0))),
          p, 0.0, 3.0 * (nu - 3.0), g));
      rows.push_back(block_row(
          "d(2,3) lambda1=-2",
          2.0 * g * std::sqrt(nu - 1.0) /
              (std::sqrt(1.0 + 2.0 * g * (nu + 1.0)) * std::sqrt(1.0 + 6.0 * g)),
          p, -2.0, nu - 1.0, g));
      break;
    }
    case Family::Kneser62: {
      // GQ(2,2) parameter formulas at s = t = 2
      const double s = 2.0, t = 2.0;
      rows.push_back(make_row(
          "d(1,23)",
          2.0 * g * std::sqrt(s * (t + 1.0) * (1.0 + 2.0 * g * (t + 1.0))) /
              (std::sqrt(1.0 + 2.0 * g * s * (t + 1.0)) *
               std::sqrt((1.0 + 2.0 * g * (t + 1.0)) * (1.0 + 2.0 * g * (s * t + 1.0)) -
                         4.0 * g * g * s * t * (t + 1.0))),
          d123()));
      rows.push_back(make_row(
          "d(12,3)",
          2.0 * g * std::sqrt(s * t * (1.0 + t) * (1.0 + 2.0 * g * s * (t + 1.0))) /
              (std::sqrt(1.0 + 2.0 * g * (t + 1.0)) *
               std::sqrt((1.0 + 2.0 * g * s * (t + 1.0)) * (1.0 + 2.0 * g * (s * t + 1.0)) -
                         4.0 * g * g * s * (t + 1.0))),
          d123p()));
      rows.push_back(make_row(
          "d(13,2)",
          2.0 * g *
              std::sqrt(s * s * (t + 1.0) * (t + 1.0) /
                            ((1.0 + 2.0 * g * s * (t + 1.0)) * (1.0 + 2.0 * g * (s * t + 1.0))) +
                        s * t * (t + 1.0) /
                            ((1.0 + 2.0 * g * (t + 1.0)) * (1.0 + 2.0 * g * (s * t + 1.0)))),
          d132()));
      rows.push_back(block_row(
          "d(2,3) lambda1=-1",
          2.0 * g * std::sqrt(s * t) /
              (std::sqrt(1.0 + 2.0 * g * (1.0 + s * t)) *
               std::sqrt(1.0 + 2.0 * g * (s * (t - 1.0) + t + 1.0))),
          p, -1.0, s * t, g));
      break;
    }
    default:
      throw Error(ErrorCode::UnsupportedFamily,
                  "no closed-form table for " + spec.name());
  }
  return rows;
}

}  // namespace srgnet
