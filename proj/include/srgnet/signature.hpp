#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "srgnet/graph.hpp"
#include "srgnet/stratification.hpp"

namespace srgnet {

/// Multiset of singular values of the stratum-2/stratum-3 coupling block,
/// grouped into (value, multiplicity) pairs, descending. An isomorphism
/// invariant that separates many (not all) SRG pairs with equal parameters.
struct A12Signature {
  std::vector<std::pair<double, int>> values;
  SrgParams params;
  int root = 0;

  bool equals(const A12Signature& other, double tol) const {
    if (values.size() != other.values.size()) return false;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i].second != other.values[i].second ||
          std::abs(values[i].first - other.values[i].first) > tol)
        return false;
    return true;
  }

  /// Lexicographic order on the (value, multiplicity) sequence, for
  /// deterministic output; ties broken only beyond tol.
  static bool less(const A12Signature& a, const A12Signature& b, double tol) {
    const std::size_t m = std::min(a.values.size(), b.values.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (std::abs(a.values[i].first - b.values[i].first) > tol)
        return a.values[i].first < b.values[i].first;
      if (a.values[i].second != b.values[i].second)
        return a.values[i].second < b.values[i].second;
    }
    return a.values.size() < b.values.size();
  }
};

/// Full singular spectrum of the a12 block at one root, zeros included.
/// Values are grouped into multiplicities by a relative 1e-8 gap; `tol` is
/// the cross-graph comparison tolerance stored for downstream checks.
inline A12Signature a12_signature(const Graph& graph, int root, double tol = 1e-6) {
  const Stratification strat = stratify(graph, root);
  const StratifiedBlocks blocks = extract_blocks(graph, strat);
  const int k = static_cast<int>(blocks.a12.rows());
  const int k2 = static_cast<int>(blocks.a12.cols());

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(blocks.a12.cast<double>());
  const Eigen::VectorXd sigma = svd.singularValues();

  A12Signature sig;
  sig.params = blocks.params;
  sig.root = root;
  constexpr double kGroupRelTol = 1e-8;
  for (int i = 0; i < sigma.size(); ++i) {
    double v = sigma(i) < kGroupRelTol ? 0.0 : sigma(i);
    if (!sig.values.empty() &&
        sig.values.back().first - v <= kGroupRelTol * std::max(1.0, sig.values.back().first))
      ++sig.values.back().second;
    else
      sig.values.emplace_back(v, 1);
  }

  // invariants: count, top value, Frobenius mass
  int total = 0;
  for (const auto& [v, m] : sig.values) total += m;
  if (total != std::min(k, k2))
    throw Error(ErrorCode::JointDiagonalizationFailure, "signature mode count mismatch");
  const double top_expected =
      blocks.params.mu *
      std::sqrt(static_cast<double>(blocks.params.n - blocks.params.kappa - 1) /
                blocks.params.kappa);
  if (std::abs(sig.values.front().first - top_expected) > 1e-8)
    throw Error(ErrorCode::JointDiagonalizationFailure,
                "largest singular value deviates from mu sqrt((n-kappa-1)/kappa)");
  double frob = 0.0;
  for (const auto& [v, m] : sig.values) frob += v * v * m;
  if (std::abs(frob - static_cast<double>(blocks.params.mu) * (blocks.params.n - blocks.params.kappa - 1)) >
      1e-6)
    throw Error(ErrorCode::JointDiagonalizationFailure,
                "Frobenius mass deviates from mu(n-kappa-1)");
  (void)tol;
  return sig;
}

/// Per-root signatures, deduplicated and sorted. SRGs need not be
/// vertex-transitive, so the signature can depend on the root; comparing the
/// full deduplicated list keeps the invariant sound under relabeling.
/// Vertex-transitive graphs give a single entry.
inline std::vector<A12Signature> canonical_signature(const Graph& graph, double tol = 1e-6) {
  std::vector<A12Signature> sigs;
  for (int root = 0; root < graph.order(); ++root) {
    A12Signature s = a12_signature(graph, root, tol);
    bool dup = false;
    for (const auto& seen : sigs)
      if (seen.equals(s, tol)) {
        dup = true;
        break;
      }
    if (!dup) sigs.push_back(std::move(s));
  }
  std::sort(sigs.begin(), sigs.end(),
            [&](const A12Signature& a, const A12Signature& b) {
              return A12Signature::less(b, a, tol);  // descending
            });
  return sigs;
}

enum class Outcome { Distinguished, Indistinguishable, ParameterMismatch };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Distinguished: return "Distinguished";
    case Outcome::Indistinguishable: return "Indistinguishable";
    case Outcome::ParameterMismatch: return "ParameterMismatch";
  }
  return "?";
}

/// Distinguished carries a witness: the first differing (value, multiplicity)
/// entries. Distinguished implies non-isomorphic; Indistinguishable implies
/// nothing (the invariant is incomplete).
struct Verdict {
  Outcome outcome = Outcome::Indistinguishable;
  std::optional<std::pair<std::pair<double, int>, std::pair<double, int>>> witness;
};

inline Verdict distinguish(const Graph& a, const Graph& b, double tol = 1e-6) {
  const std::vector<A12Signature> sa = canonical_signature(a, tol);
  const std::vector<A12Signature> sb = canonical_signature(b, tol);
  if (!(sa.front().params == sb.front().params)) return {Outcome::ParameterMismatch, {}};

  auto first_difference = [&]() -> Verdict {
    const std::size_t lists = std::max(sa.size(), sb.size());
    for (std::size_t i = 0; i < lists; ++i) {
      if (i >= sa.size()) return {Outcome::Distinguished,
                                  std::make_pair(std::make_pair(0.0, 0), sb[i].values.front())};
      if (i >= sb.size()) return {Outcome::Distinguished,
                                  std::make_pair(sa[i].values.front(), std::make_pair(0.0, 0))};
      const auto& va = sa[i].values;
      const auto& vb = sb[i].values;
      for (std::size_t j = 0; j < std::max(va.size(), vb.size()); ++j) {
        const auto ea = j < va.size() ? va[j] : std::make_pair(0.0, 0);
        const auto eb = j < vb.size() ? vb[j] : std::make_pair(0.0, 0);
        if (std::abs(ea.first - eb.first) > tol || ea.second != eb.second)
          return {Outcome::Distinguished, std::make_pair(ea, eb)};
      }
    }
    return {Outcome::Indistinguishable, {}};
  };
  return first_difference();
}

/// One indistinguishability class of a catalog scan.
struct SignatureClass {
  std::vector<A12Signature> signature;  // canonical list shared by the members
  std::vector<int> members;             // indices into the input catalog
};

struct CatalogScan {
  SrgParams params;
  std::vector<SignatureClass> classes;
};

/// Group a catalog of graphs with one common parameter set into classes of
/// equal canonical signature. Classes come out sorted by descending
/// signature, members in input order.
inline CatalogScan scan_catalog(const std::vector<Graph>& graphs, double tol = 1e-6) {
  if (graphs.empty()) throw Error(ErrorCode::InvalidArgument, "empty catalog");
  CatalogScan scan;
  std::vector<std::vector<A12Signature>> sigs;
  sigs.reserve(graphs.size());
  for (const Graph& g : graphs) sigs.push_back(canonical_signature(g, tol));
  scan.params = sigs.front().front().params;
  for (const auto& s : sigs)
    if (!(s.front().params == scan.params))
      throw Error(ErrorCode::MixedParameters, "catalog graphs have differing SRG parameters");

  auto lists_equal = [&](const std::vector<A12Signature>& x, const std::vector<A12Signature>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].equals(y[i], tol)) return false;
    return true;
  };

  for (int idx = 0; idx < static_cast<int>(graphs.size()); ++idx) {
    bool placed = false;
    for (auto& cls : scan.classes)
      if (lists_equal(cls.signature, sigs[idx])) {
        cls.members.push_back(idx);
        placed = true;
        break;
      }
    if (!placed) scan.classes.push_back({sigs[idx], {idx}});
  }
  std::sort(scan.classes.begin(), scan.classes.end(),
            [&](const SignatureClass& x, const SignatureClass& y) {
              if (x.signature.size() != y.signature.size())
                return x.signature.size() > y.signature.size();
              for (std::size_t i = 0; i < x.signature.size(); ++i) {
                if (x.signature[i].equals(y.signature[i], tol)) continue;
                return A12Signature::less(y.signature[i], x.signature[i], tol);
              }
              return false;
            });
  return scan;
}

}  // namespace srgnet
