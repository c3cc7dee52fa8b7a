#include "sftkit/cylinder_function.hpp"

#include <algorithm>

#include "sftkit/error.hpp"

namespace sftkit {

std::shared_ptr<const Presentation> share(const Presentation& P) { return std::make_shared<const Presentation>(P); }

CylinderFunction CylinderFunction::constant(std::shared_ptr<const Presentation> P, Value c) {
  return from_function(std::move(P), 0, [c](const Word&) { return c; });
}

CylinderFunction CylinderFunction::from_table(std::shared_ptr<const Presentation> P, std::size_t depth,
                                              const std::map<Word, Value>& table) {
  CylinderFunction f;
  f.P_ = std::move(P);
  f.depth_ = depth;
  for (const auto& w : language(*f.P_, f.window())) {
    const auto it = table.find(w);
    if (it == table.end()) {
      if (depth == 0 && !table.empty()) {
        f.table_[w] = table.begin()->second;
        continue;
      }
      throw Error(ErrorKind::InvalidArgument, "table has no value for word " + format_word(w));
    }
    f.table_[w] = it->second;
  }
  if (depth == 0) {
    const auto v = f.table_.begin()->second;
    if (std::any_of(f.table_.begin(), f.table_.end(), [v](const auto& kv) { return kv.second != v; })) {
      throw Error(ErrorKind::InvalidArgument, "depth 0 function must be constant");
    }
  }
  for (const auto& [w, v] : table) {
    if (w.size() != f.window() || !f.P_->admissible(w)) {
      throw Error(ErrorKind::InadmissibleWord, "table word " + format_word(w) + " is not admissible of length " +
                                                   std::to_string(f.window()));
    }
  }
  return f;
}

CylinderFunction CylinderFunction::from_function(std::shared_ptr<const Presentation> P, std::size_t depth,
                                                 const std::function<Value(const Word&)>& fn) {
  CylinderFunction f;
  f.P_ = std::move(P);
  f.depth_ = depth;
  if (depth == 0) {
    const auto c = fn(Word{});
    for (const auto& w : language(*f.P_, 1)) f.table_[w] = c;
    return f;
  }
  for (const auto& w : language(*f.P_, f.window())) f.table_[w] = fn(w);
  return f;
}

Value CylinderFunction::operator()(const Word& w) const {
  if (depth_ == 0) return table_.begin()->second;
  if (w.size() < depth_) {
    throw Error(ErrorKind::WordTooShort, "need " + std::to_string(depth_) + " symbols, got " + format_word(w));
  }
  const auto key = w.size() == depth_ ? w : slice(w, 0, depth_);
  const auto it = table_.find(key);
  if (it == table_.end()) throw Error(ErrorKind::InadmissibleWord, format_word(key));
  return it->second;
}

Value CylinderFunction::operator()(const EvPerPoint& x) const { return (*this)(first_symbols(x, window())); }

CylinderFunction CylinderFunction::refine(std::size_t depth) const {
  if (depth <= depth_) return *this;
  return from_function(P_, depth, [this](const Word& w) { return (*this)(w); });
}

CylinderFunction CylinderFunction::pullback() const {
  return from_function(P_, depth_ + 1, [this](const Word& w) { return (*this)(slice(w, 1, w.size())); });
}

CylinderFunction CylinderFunction::coboundary() const { return refine(depth_ + 1) - pullback(); }

Value CylinderFunction::min_value() const {
  return std::min_element(table_.begin(), table_.end(), [](const auto& a, const auto& b) {
           return a.second < b.second;
         })->second;
}

Value CylinderFunction::max_value() const {
  return std::max_element(table_.begin(), table_.end(), [](const auto& a, const auto& b) {
           return a.second < b.second;
         })->second;
}

CylinderFunction CylinderFunction::operator-() const {
  CylinderFunction g = *this;
  for (auto& kv : g.table_) kv.second = -kv.second;
  return g;
}

namespace {

template <typename Op>
CylinderFunction combine(const CylinderFunction& a, const CylinderFunction& b, Op op) {
  if (!(a.presentation() == b.presentation())) {
    throw Error(ErrorKind::InvalidArgument, "functions live on different presentations");
  }
  const auto d = std::max(a.depth(), b.depth());
  return CylinderFunction::from_function(a.presentation_ptr(), d,
                                         [&](const Word& w) { return op(a(w), b(w)); });
}

}  // namespace

CylinderFunction operator+(const CylinderFunction& a, const CylinderFunction& b) {
  return combine(a, b, [](Value x, Value y) { return x + y; });
}

CylinderFunction operator-(const CylinderFunction& a, const CylinderFunction& b) {
  return combine(a, b, [](Value x, Value y) { return x - y; });
}

CylinderFunction operator+(const CylinderFunction& a, Value c) {
  CylinderFunction g = a;
  for (auto& kv : g.table_) kv.second += c;
  return g;
}

bool operator==(const CylinderFunction& a, const CylinderFunction& b) {
  if (!(a.presentation() == b.presentation())) return false;
  const auto d = std::max(a.depth(), b.depth());
  return a.refine(d).table_ == b.refine(d).table_;
}

Value orbit_sum(const CylinderFunction& f, const Word& cycle) {
  if (!f.presentation().closed(cycle)) throw Error(ErrorKind::NotClosed, format_word(cycle) + " is not a closed path");
  Value total = 0;
  const EvPerPoint x{{}, cycle};
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Word w;
    for (std::size_t t = 0; t < f.window(); ++t) w.push_back(cycle[(i + t) % cycle.size()]);
    total += f(w);
  }
  return total;
}

Value birkhoff_sum(const CylinderFunction& f, const EvPerPoint& x, std::size_t count) {
  Value total = 0;
  const auto w = first_symbols(x, count + f.window());
  for (std::size_t i = 0; i < count; ++i) total += f(slice(w, i, i + f.window()));
  return total;
}

}  // namespace sftkit
