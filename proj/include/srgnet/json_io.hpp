#pragma once

#include <json.hpp>

#include "srgnet/entanglement.hpp"
#include "srgnet/signature.hpp"
#include "srgnet/stratification.hpp"

namespace srgnet {

using nlohmann::json;

inline void to_json(json& j, const SrgParams& p) {
  j = json{{"n", p.n}, {"kappa", p.kappa}, {"lambda", p.lambda}, {"mu", p.mu}};
}

inline void from_json(const json& j, SrgParams& p) {
  j.at("n").get_to(p.n);
  j.at("kappa").get_to(p.kappa);
  j.at("lambda").get_to(p.lambda);
  j.at("mu").get_to(p.mu);
}

inline void to_json(json& j, const TwoByTwoBlock& b) {
  j = json{{"lambda1", b.lambda1},
           {"lambda2", b.lambda2},
           {"lambda12", b.lambda12},
           {"multiplicity", b.multiplicity}};
}

inline void to_json(json& j, const BlockDiagonalization& bd) {
  json first = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int k = 0; k < 3; ++k) row.push_back(bd.first.m(i, k));
    first.push_back(row);
  }
  json s2 = json::array(), s3 = json::array();
  for (const auto& [value, mult] : bd.singlets2) s2.push_back(json::array({value, mult}));
  for (const auto& [value, mult] : bd.singlets3) s3.push_back(json::array({value, mult}));
  j = json{{"params", bd.params},
           {"first", first},
           {"pairs", bd.pairs},
           {"singlets2", s2},
           {"singlets3", s3}};
}

inline void to_json(json& j, const ModeEntanglement& m) {
  j = json{{"d", m.d}, {"gamma", m.gamma}, {"entropy", m.entropy}};
}

inline void to_json(json& j, const EntanglementReport& r) {
  j = json{{"partition", r.partition},
           {"g", r.g},
           {"modes", r.modes},
           {"total_entropy", r.total_entropy}};
}

inline void to_json(json& j, const A12Signature& s) {
  json values = json::array();
  for (const auto& [value, mult] : s.values) values.push_back(json::array({value, mult}));
  j = json{{"params", s.params}, {"root", s.root}, {"values", values}};
}

inline void to_json(json& j, const SignatureClass& c) {
  json sig = json::array();
  for (const auto& s : c.signature) {
    json values = json::array();
    for (const auto& [value, mult] : s.values) values.push_back(json::array({value, mult}));
    sig.push_back(values);
  }
  j = json{{"signature", sig}, {"members", c.members}};
}

inline void to_json(json& j, const CatalogScan& scan) {
  j = json{{"params", scan.params}, {"classes", scan.classes}};
}

inline void to_json(json& j, const FormulaRow& row) {
  j = json{{"label", row.label},
           {"printed", row.printed},
           {"pipeline", row.pipeline},
           {"discrepancy", row.discrepancy},
           {"consistent", row.consistent},
           {"printed_exceeds_one", row.printed_exceeds_one}};
}

}  // namespace srgnet
