#include "sftkit/tower.hpp"

#include "sftkit/error.hpp"

namespace sftkit {

Tower::Tower(const CylinderFunction& f) {
  if (f.min_value() < 1) {
    throw Error(ErrorKind::ZeroFloorValue, "roof function takes the value " + std::to_string(f.min_value()));
  }
  if (f.depth() >= 2) {
    recoding_ = higher_block(f.presentation(), f.depth());
    base_ = share(recoding_->presentation);
    for (const auto& block : recoding_->blocks) height_.push_back(f(block));
  } else {
    base_ = f.presentation_ptr();
    for (std::size_t v = 0; v < base_->vertex_count(); ++v) height_.push_back(f(Word{static_cast<Symbol>(v)}));
  }
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < base_->vertex_count(); ++v) {
    for (Value i = 0; i < height_[v]; ++i) {
      vertex_of_[{static_cast<Symbol>(v), i}] = static_cast<Symbol>(floor_of_.size());
      floor_of_.emplace_back(static_cast<Symbol>(v), i);
      labels.push_back(base_->labels()[v] + "." + std::to_string(i));
    }
  }
  const auto n = floor_of_.size();
  Matrix A(n, std::vector<int>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    const auto [v, i] = floor_of_[x];
    if (i > 0) {
      A[x][vertex(v, i - 1)] = 1;
      continue;
    }
    for (Symbol w : base_->successors(v)) A[x][vertex(w, height_[w] - 1)] = 1;
  }
  tower_ = share(build_presentation(A, labels));
}

Symbol Tower::vertex(Symbol base_vertex, Value floor) const {
  const auto it = vertex_of_.find({base_vertex, floor});
  if (it == vertex_of_.end()) {
    throw Error(ErrorKind::FloorOutOfRange,
                "floor " + std::to_string(floor) + " above vertex " + std::to_string(base_vertex));
  }
  return it->second;
}

EvPerPoint Tower::encode(const EvPerPoint& x) const {
  if (!recoding_) return x;
  const auto k = recoding_->block_length;
  Word prefix = x.prefix.empty() ? Word{} : recoding_->encode(first_symbols(x, x.prefix.size() + k - 1));
  const auto shifted = shift_point(x, static_cast<std::int64_t>(x.prefix.size()));
  Word cycle;
  for (std::size_t i = 0; i < shifted.cycle.size(); ++i) {
    Word block;
    for (std::size_t t = 0; t < k; ++t) block.push_back(shifted.cycle[(i + t) % shifted.cycle.size()]);
    cycle.push_back(recoding_->block_index(block));
  }
  return normalize_point(std::move(prefix), std::move(cycle));
}

Word Tower::chain(Symbol v, Value from) const {
  Word out;
  for (Value i = from; i >= 0; --i) out.push_back(vertex(v, i));
  return out;
}

Word Tower::expand(const Word& w) const {
  Word out;
  for (Symbol v : w) {
    const auto c = chain(v, height_.at(v) - 1);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

EvPerPoint Tower::iota(const EvPerPoint& x, Value floor) const {
  const Symbol x0 = symbol_at(x, 0);
  if (floor < 0 || floor >= height_.at(x0)) {
    throw Error(ErrorKind::FloorOutOfRange, "floor " + std::to_string(floor) + " at " + format_point(x));
  }
  const Word rest = x.prefix.empty() ? slice(x.cycle, 1, x.cycle.size()) : slice(x.prefix, 1, x.prefix.size());
  return normalize_point(concat(chain(x0, floor), expand(rest)), expand(x.cycle));
}

std::pair<EvPerPoint, Value> Tower::iota_inverse(const EvPerPoint& p) const {
  const auto floor = floor_of(symbol_at(p, 0)).second;
  const auto bottoms = [&](const Word& w) {
    Word out;
    for (Symbol s : w) {
      if (floor_of(s).second == 0) out.push_back(floor_of(s).first);
    }
    return out;
  };
  return {normalize_point(bottoms(p.prefix), bottoms(p.cycle)), floor};
}

bool Tower::in_cross_section(const EvPerPoint& p) const { return floor_of(symbol_at(p, 0)).second == 0; }

std::pair<EvPerPoint, Value> first_return(const Tower& T, const EvPerPoint& p) {
  if (!T.in_cross_section(p)) throw Error(ErrorKind::NotInCrossSection, format_point(p) + " starts above floor 0");
  const auto x = T.iota_inverse(p).first;
  const Value t = T.height(symbol_at(x, 1));
  return {shift_point(p, t), t};
}

}  // namespace sftkit
