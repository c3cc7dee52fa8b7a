#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sftkit/point.hpp"
#include "sftkit/presentation.hpp"

namespace sftkit {

// A map between one-sided shifts realized by a deterministic sequential
// transducer: reading x_0 x_1 ... from the initial state emits
// initial_output followed by the outputs of the transitions taken. Prefix
// exchanges, sliding block codes and their compositions all have this form.
class PointMap {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  struct Transition {
    std::size_t next = npos;
    Word output;
  };

  PointMap() = default;
  PointMap(std::shared_ptr<const Presentation> domain, std::shared_ptr<const Presentation> codomain,
           std::vector<std::vector<Transition>> transitions, std::size_t initial, Word initial_output,
           std::string description);

  const Presentation& domain() const { return *domain_; }
  const Presentation& codomain() const { return *codomain_; }
  const std::shared_ptr<const Presentation>& domain_ptr() const { return domain_; }
  const std::shared_ptr<const Presentation>& codomain_ptr() const { return codomain_; }
  std::size_t state_count() const { return transitions_.size(); }
  std::size_t initial_state() const { return initial_; }
  const Word& initial_output() const { return initial_output_; }
  const Transition& transition(std::size_t state, Symbol a) const;
  const std::string& description() const { return description_; }

  // Output emitted while reading w from `state`, and the state reached.
  // Throws InadmissibleWord if a transition is missing.
  std::pair<Word, std::size_t> run_from(std::size_t state, const Word& w) const;
  // Same from the initial state, including the initial output.
  std::pair<Word, std::size_t> run(const Word& w) const;

  // Output produced by reading x from `state`; the initial output is not
  // included.
  EvPerPoint apply_from(std::size_t state, const EvPerPoint& x) const;
  EvPerPoint operator()(const EvPerPoint& x) const;

 private:
  std::shared_ptr<const Presentation> domain_;
  std::shared_ptr<const Presentation> codomain_;
  std::vector<std::vector<Transition>> transitions_;
  std::size_t initial_ = 0;
  Word initial_output_;
  std::string description_;
};

PointMap identity_map(std::shared_ptr<const Presentation> P);

// h(u_i t) = v_i t for the complete prefix codes {u_i} of the domain and
// {v_i} of the codomain. Throws InvalidCode unless both codes partition their
// shifts and each pair has matching follower data (equal successor sets
// after u_i and v_i, and identical successor sets on everything reachable
// from them, so copying the tail is admissible).
struct CodePair {
  Word from;
  Word to;
};

PointMap prefix_exchange(std::shared_ptr<const Presentation> X, std::shared_ptr<const Presentation> Y,
                         const std::vector<CodePair>& code);

// Checks the conditions above without building the map.
void validate_prefix_exchange(const Presentation& X, const Presentation& Y, const std::vector<CodePair>& code);

// Sliding block code h(x)_i = block_map(x_i ... x_{i+anticipation}).
PointMap sliding_block_code(std::shared_ptr<const Presentation> X, std::shared_ptr<const Presentation> Y,
                            std::size_t anticipation, const std::function<Symbol(const Word&)>& block_map,
                            std::string description);

// second o first.
PointMap compose(const PointMap& first, const PointMap& second);

// A pair of mutually inverse point maps between one-sided shifts.
struct OrbitEquivalence {
  PointMap forward;
  PointMap inverse;

  const Presentation& domain() const { return forward.domain(); }
  const Presentation& codomain() const { return forward.codomain(); }
};

OrbitEquivalence identity_equivalence(std::shared_ptr<const Presentation> P);
OrbitEquivalence prefix_exchange_equivalence(std::shared_ptr<const Presentation> X,
                                             std::shared_ptr<const Presentation> Y,
                                             const std::vector<CodePair>& code);
// second o first, with inverse first^-1 o second^-1.
OrbitEquivalence compose(const OrbitEquivalence& first, const OrbitEquivalence& second);
OrbitEquivalence invert(const OrbitEquivalence& h);

// True when inverse(forward(x)) = x and forward(inverse(y)) = y for every
// eventually periodic point with prefix and cycle length at most `bound`.
bool check_inverse_pair(const OrbitEquivalence& h, std::size_t bound);

}  // namespace sftkit
