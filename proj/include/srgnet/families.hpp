#pragma once

#include <string>
#include <vector>

#include "srgnet/graph.hpp"

namespace srgnet {

enum class Family {
  CompleteBipartite,    // K_{m,m}: (2m, m, 0, m)
  CompleteMultipartite, // K_{p x s}: (ps, (p-1)s, (p-2)s, (p-1)s)
  CocktailParty,        // K_{q x 2}: (2q, 2q-2, 2q-4, 2q-2)
  Triangular,           // T(nu): (nu(nu-1)/2, 2(nu-2), nu-2, 4)
  Lattice,              // L(nu): (nu^2, 2(nu-1), nu-2, 2)
  LatinSquareCyclic,    // LS(nu), cyclic square: (nu^2, 3(nu-1), nu, 6)
  Kneser62,             // 2-subsets of a 6-set, disjoint: (15, 6, 1, 3) = GQ(2,2)
  Petersen,             // (10, 3, 0, 1)
  Shrikhande,           // (16, 6, 2, 2)
};

/// A family instance. Vertex orderings are fixed so generation is
/// byte-for-byte reproducible: row-major (a,b) -> a*width+b for product
/// constructions, lexicographic pairs {i<j} for Triangular/Kneser/Petersen,
/// part-major for multipartite families.
struct FamilySpec {
  Family family;
  int a = 0;  // m / parts / q / nu, depending on family
  int b = 0;  // part size (CompleteMultipartite only)

  static FamilySpec complete_bipartite(int m) { return {Family::CompleteBipartite, m, 0}; }
  static FamilySpec complete_multipartite(int parts, int part_size) {
    return {Family::CompleteMultipartite, parts, part_size};
  }
  static FamilySpec cocktail_party(int q) { return {Family::CocktailParty, q, 0}; }
  static FamilySpec triangular(int nu) { return {Family::Triangular, nu, 0}; }
  static FamilySpec lattice(int nu) { return {Family::Lattice, nu, 0}; }
  static FamilySpec latin_square_cyclic(int nu) { return {Family::LatinSquareCyclic, nu, 0}; }
  static FamilySpec kneser_6_2() { return {Family::Kneser62, 0, 0}; }
  static FamilySpec petersen() { return {Family::Petersen, 0, 0}; }
  static FamilySpec shrikhande() { return {Family::Shrikhande, 0, 0}; }

  SrgParams expected_params() const {
    switch (family) {
      case Family::CompleteBipartite: return {2 * a, a, 0, a};
      case Family::CompleteMultipartite:
        return {a * b, (a - 1) * b, (a - 2) * b, (a - 1) * b};
      case Family::CocktailParty: return {2 * a, 2 * a - 2, 2 * a - 4, 2 * a - 2};
      case Family::Triangular: return {a * (a - 1) / 2, 2 * (a - 2), a - 2, 4};
      case Family::Lattice: return {a * a, 2 * (a - 1), a - 2, 2};
      case Family::LatinSquareCyclic: return {a * a, 3 * (a - 1), a, 6};
      case Family::Kneser62: return {15, 6, 1, 3};
      case Family::Petersen: return {10, 3, 0, 1};
      case Family::Shrikhande: return {16, 6, 2, 2};
    }
    throw Error(ErrorCode::UnsupportedFamily, "unknown family");
  }

  std::string name() const {
    switch (family) {
      case Family::CompleteBipartite: return "complete-bipartite(" + std::to_string(a) + ")";
      case Family::CompleteMultipartite:
        return "complete-multipartite(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case Family::CocktailParty: return "cocktail-party(" + std::to_string(a) + ")";
      case Family::Triangular: return "triangular(" + std::to_string(a) + ")";
      case Family::Lattice: return "lattice(" + std::to_string(a) + ")";
      case Family::LatinSquareCyclic: return "latin-square(" + std::to_string(a) + ")";
      case Family::Kneser62: return "kneser-6-2";
      case Family::Petersen: return "petersen";
      case Family::Shrikhande: return "shrikhande";
    }
    return "?";
  }
};

namespace detail {

inline Graph multipartite(int parts, int part_size) {
  const int n = parts * part_size;
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i / part_size != j / part_size) a(i, j) = 1;
  return Graph(std::move(a));
}

inline std::vector<std::pair<int, int>> lex_pairs(int m) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  return pairs;
}

inline Graph pair_graph(int m, bool adjacent_iff_disjoint) {
  const auto pairs = lex_pairs(m);
  const int n = static_cast<int>(pairs.size());
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const bool share = pairs[u].first == pairs[v].first || pairs[u].first == pairs[v].second ||
                         pairs[u].second == pairs[v].first || pairs[u].second == pairs[v].second;
      if (share != adjacent_iff_disjoint) a(u, v) = a(v, u) = 1;
    }
  return Graph(std::move(a));
}

}  // namespace detail

/// Generate a family instance and verify at generation time that its
/// classified parameters match the family formulas.
inline Graph generate(const FamilySpec& spec) {
  auto build = [&]() -> Graph {
    switch (spec.family) {
      case Family::CompleteBipartite:
        if (spec.a < 2) throw Error(ErrorCode::SizeTooSmall, "complete-bipartite needs m >= 2");
        return detail::multipartite(2, spec.a);
      case Family::CompleteMultipartite:
        if (spec.a < 2 || spec.b < 2)
          throw Error(ErrorCode::SizeTooSmall, "complete-multipartite needs parts, size >= 2");
        return detail::multipartite(spec.a, spec.b);
      case Family::CocktailParty:
        if (spec.a < 2) throw Error(ErrorCode::SizeTooSmall, "cocktail-party needs q >= 2");
        return detail::multipartite(spec.a, 2);
      case Family::Triangular: {
        if (spec.a < 4) throw Error(ErrorCode::SizeTooSmall, "triangular needs nu >= 4");
        return detail::pair_graph(spec.a, /*adjacent_iff_disjoint=*/false);
      }
      case Family::Lattice: {
        if (spec.a < 2) throw Error(ErrorCode::SizeTooSmall, "lattice needs nu >= 2");
        const int nu = spec.a, n = nu * nu;
        Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n, n);
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (u / nu == v / nu || u % nu == v % nu) m(u, v) = m(v, u) = 1;
        return Graph(std::move(m));
      }
      case Family::LatinSquareCyclic: {
        if (spec.a < 3) throw Error(ErrorCode::SizeTooSmall, "latin-square needs nu >= 3");
        const int nu = spec.a, n = nu * nu;
        // cell (i,j) holds symbol i+j mod nu; adjacent iff same row, column
        // or symbol
        Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n, n);
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v) {
            const int ri = u / nu, ci = u % nu, rj = v / nu, cj = v % nu;
            if (ri == rj || ci == cj || (ri + ci) % nu == (rj + cj) % nu)
              m(u, v) = m(v, u) = 1;
          }
        return Graph(std::move(m));
      }
      case Family::Kneser62: return detail::pair_graph(6, true);
      case Family::Petersen: return detail::pair_graph(5, true);
      case Family::Shrikhande: {
        // Z4 x Z4, adjacent iff difference in {+-(1,0), +-(0,1), +-(1,1)}
        Eigen::MatrixXi m = Eigen::MatrixXi::Zero(16, 16);
        for (int u = 0; u < 16; ++u)
          for (int v = 0; v < 16; ++v) {
            if (u == v) continue;
            const int da = ((u / 4 - v / 4) % 4 + 4) % 4;
            const int db = ((u % 4 - v % 4) % 4 + 4) % 4;
            const bool conn = (da == 1 && db == 0) || (da == 3 && db == 0) ||
                              (da == 0 && db == 1) || (da == 0 && db == 3) ||
                              (da == 1 && db == 1) || (da == 3 && db == 3);
            if (conn) m(u, v) = 1;
          }
        return Graph(std::move(m));
      }
    }
    throw Error(ErrorCode::UnsupportedFamily, "unknown family");
  };

  Graph g = build();
  const SrgParams got = srg_params(g);
  const SrgParams want = spec.expected_params();
  if (!(got == want))
    throw Error(ErrorCode::InvalidGraph, spec.name() + " generated unexpected parameters");
  return g;
}

}  // namespace srgnet
