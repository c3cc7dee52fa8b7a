#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>

#include "sftkit/point.hpp"
#include "sftkit/presentation.hpp"

namespace sftkit {

using Value = std::int64_t;

// A locally constant integer function on the one-sided shift of a
// presentation: f(x) depends only on x_0 ... x_{d-1}. The table is stored on
// admissible words of length window() = max(d, 1); depth 0 means constant.
class CylinderFunction {
 public:
  CylinderFunction() = default;

  static CylinderFunction constant(std::shared_ptr<const Presentation> P, Value c);
  static CylinderFunction from_table(std::shared_ptr<const Presentation> P, std::size_t depth,
                                     const std::map<Word, Value>& table);
  // fn is called on each admissible word of length depth (once, on the
  // empty word, when depth is 0).
  static CylinderFunction from_function(std::shared_ptr<const Presentation> P, std::size_t depth,
                                        const std::function<Value(const Word&)>& fn);

  std::size_t depth() const { return depth_; }
  std::size_t window() const { return depth_ == 0 ? 1 : depth_; }
  const std::map<Word, Value>& table() const { return table_; }
  const Presentation& presentation() const { return *P_; }
  const std::shared_ptr<const Presentation>& presentation_ptr() const { return P_; }

  // Value on any word with at least depth() symbols.
  Value operator()(const Word& w) const;
  Value operator()(const EvPerPoint& x) const;

  // Same function stored at a larger depth.
  CylinderFunction refine(std::size_t depth) const;
  // f o sigma.
  CylinderFunction pullback() const;
  // f - f o sigma.
  CylinderFunction coboundary() const;

  Value min_value() const;
  Value max_value() const;
  bool nonnegative() const { return min_value() >= 0; }

  CylinderFunction operator-() const;
  friend CylinderFunction operator+(const CylinderFunction& a, const CylinderFunction& b);
  friend CylinderFunction operator-(const CylinderFunction& a, const CylinderFunction& b);
  friend CylinderFunction operator+(const CylinderFunction& a, Value c);
  friend CylinderFunction operator-(const CylinderFunction& a, Value c) { return a + (-c); }
  // Equal as functions (compared at the common depth).
  friend bool operator==(const CylinderFunction& a, const CylinderFunction& b);

 private:
  std::shared_ptr<const Presentation> P_;
  std::size_t depth_ = 0;
  std::map<Word, Value> table_;
};

std::shared_ptr<const Presentation> share(const Presentation& P);

// Sum of f over the orbit of cycle^inf; throws NotClosed for a non-closed word.
Value orbit_sum(const CylinderFunction& f, const Word& cycle);

// sum_{i<count} f(sigma^i x).
Value birkhoff_sum(const CylinderFunction& f, const EvPerPoint& x, std::size_t count);

}  // namespace sftkit
