#pragma once

#include <json.hpp>

#include "tpsym/entanglement.hpp"
#include "tpsym/partitions.hpp"
#include "tpsym/perm_engine.hpp"
#include "tpsym/spectral.hpp"

namespace tpsym {

inline nlohmann::json to_json(const Dims& d) { return nlohmann::json(d.entries()); }

inline nlohmann::json to_json(const PartitionClass& pc) {
  nlohmann::json members = nlohmann::json::array();
  for (const Dims& m : pc.members) members.push_back(to_json(m));
  return {{"representative", to_json(pc.representative)}, {"members", members}};
}

inline nlohmann::json to_json(const SubsystemPerm& sigma) {
  return nlohmann::json(sigma.images_one_based());
}

inline nlohmann::json to_json(const CycleDecomp& cd) {
  return {{"d", to_json(cd.shape)}, {"sigma", to_json(cd.sigma)}, {"cycles", cd.cycles}};
}

inline nlohmann::json to_json(const RootOfUnity& r) {
  return {{"order", r.order}, {"exponent", r.exponent}};
}

inline nlohmann::json to_json(const EigenspaceBasis& basis) {
  nlohmann::json vectors = nlohmann::json::array();
  for (const auto& v : basis.vectors) {
    nlohmann::json amps = nlohmann::json::array();
    for (label_t i = 0; i < v.size(); ++i) amps.push_back({v(i).real(), v(i).imag()});
    vectors.push_back(amps);
  }
  return {{"eigenvalue", to_json(basis.eigenvalue)},
          {"dimension", basis.dimension()},
          {"vectors", vectors}};
}

/// Row-major [re, im] entry pairs.
inline nlohmann::json to_json(const DensityMatrix& rho) {
  nlohmann::json entries = nlohmann::json::array();
  for (label_t r = 0; r < rho.rows(); ++r)
    for (label_t c = 0; c < rho.cols(); ++c) entries.push_back({rho(r, c).real(), rho(r, c).imag()});
  return {{"dim", rho.rows()}, {"entries", entries}};
}

}  // namespace tpsym
