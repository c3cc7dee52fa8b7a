#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "sftkit/cylinder_function.hpp"

namespace sftkit {

// The discrete suspension X^f of a one-sided shift under a roof f >= 1. Each
// base vertex v becomes the chain (v, f(v)-1) -> ... -> (v, 0); edges into v
// enter the top floor and edges out of v leave floor 0. Tower vertices are
// ordered by base vertex, then floor, and labelled "v.floor".
class Tower {
 public:
  // Roofs of depth >= 2 are first moved to vertex level by higher-block
  // recoding; then base() is the recoded presentation.
  explicit Tower(const CylinderFunction& f);

  const Presentation& base() const { return *base_; }
  const std::shared_ptr<const Presentation>& base_ptr() const { return base_; }
  const Presentation& presentation() const { return *tower_; }
  const std::shared_ptr<const Presentation>& presentation_ptr() const { return tower_; }
  const std::optional<HigherBlock>& recoding() const { return recoding_; }

  Value height(Symbol base_vertex) const { return height_.at(base_vertex); }
  Symbol vertex(Symbol base_vertex, Value floor) const;
  std::pair<Symbol, Value> floor_of(Symbol tower_vertex) const { return floor_of_.at(tower_vertex); }

  // Base points of the original shift, encoded into base() when recoded.
  EvPerPoint encode(const EvPerPoint& x) const;

  // iota(x, i): the tower point that starts on floor i above x_0 and then
  // climbs down each chain in turn. Throws FloorOutOfRange.
  EvPerPoint iota(const EvPerPoint& x, Value floor) const;
  std::pair<EvPerPoint, Value> iota_inverse(const EvPerPoint& p) const;

  bool in_cross_section(const EvPerPoint& p) const;

 private:
  Word chain(Symbol v, Value from) const;
  Word expand(const Word& w) const;

  std::shared_ptr<const Presentation> base_;
  std::optional<HigherBlock> recoding_;
  std::vector<Value> height_;
  std::shared_ptr<const Presentation> tower_;
  std::vector<std::pair<Symbol, Value>> floor_of_;
  std::map<std::pair<Symbol, Value>, Symbol> vertex_of_;
};

// (sigma^t(p), t) with t the first return time of p to the cross section
// iota(X x {0}); t = f(sigma x) for p = iota(x, 0). Throws NotInCrossSection.
std::pair<EvPerPoint, Value> first_return(const Tower& T, const EvPerPoint& p);

}  // namespace sftkit
