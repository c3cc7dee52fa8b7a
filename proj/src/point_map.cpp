#include "sftkit/point_map.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sftkit/error.hpp"

namespace sftkit {

PointMap::PointMap(std::shared_ptr<const Presentation> domain, std::shared_ptr<const Presentation> codomain,
                   std::vector<std::vector<Transition>> transitions, std::size_t initial, Word initial_output,
                   std::string description)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      transitions_(std::move(transitions)),
      initial_(initial),
      initial_output_(std::move(initial_output)),
      description_(std::move(description)) {}

const PointMap::Transition& PointMap::transition(std::size_t state, Symbol a) const {
  static const Transition missing{};
  if (state >= transitions_.size() || a < 0 || static_cast<std::size_t>(a) >= transitions_[state].size()) {
    return missing;
  }
  return transitions_[state][a];
}

std::pair<Word, std::size_t> PointMap::run_from(std::size_t state, const Word& w) const {
  Word out;
  for (Symbol a : w) {
    const auto& t = transition(state, a);
    if (t.next == npos) {
      throw Error(ErrorKind::InadmissibleWord, "map " + description_ + " cannot read " + format_word(w));
    }
    out.insert(out.end(), t.output.begin(), t.output.end());
    state = t.next;
  }
  return {out, state};
}

std::pair<Word, std::size_t> PointMap::run(const Word& w) const {
  auto [out, state] = run_from(initial_, w);
  return {concat(initial_output_, out), state};
}

EvPerPoint PointMap::apply_from(std::size_t state, const EvPerPoint& x) const {
  auto [pre, q] = run_from(state, x.prefix);
  std::map<std::size_t, std::size_t> seen;
  std::vector<Word> blocks;
  while (!seen.count(q)) {
    seen[q] = blocks.size();
    auto [out, next] = run_from(q, x.cycle);
    blocks.push_back(std::move(out));
    q = next;
  }
  const auto start = seen[q];
  for (std::size_t i = 0; i < start; ++i) pre.insert(pre.end(), blocks[i].begin(), blocks[i].end());
  Word period;
  for (std::size_t i = start; i < blocks.size(); ++i) period.insert(period.end(), blocks[i].begin(), blocks[i].end());
  if (period.empty()) {
    throw Error(ErrorKind::InvalidCode, "map " + description_ + " produces a finite image of " + format_point(x));
  }
  return normalize_point(std::move(pre), std::move(period));
}

EvPerPoint PointMap::operator()(const EvPerPoint& x) const {
  return prepend(initial_output_, apply_from(initial_, x));
}

PointMap identity_map(std::shared_ptr<const Presentation> P) {
  return sliding_block_code(P, P, 0, [](const Word& w) { return w.front(); }, "identity");
}

namespace {

std::vector<Symbol> followers(const Presentation& P, const Word& w) {
  if (w.empty()) {
    std::vector<Symbol> all(P.vertex_count());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Symbol>(v);
    return all;
  }
  return P.successors(w.back());
}

void check_complete_code(const Presentation& P, const std::vector<Word>& code, const std::string& side) {
  std::size_t longest = 0;
  for (const auto& u : code) {
    if (!P.admissible(u)) throw Error(ErrorKind::InvalidCode, side + " word " + format_word(u) + " is inadmissible");
    longest = std::max(longest, u.size());
  }
  if (longest == 0) {
    if (code.size() != 1) throw Error(ErrorKind::InvalidCode, side + " code repeats the empty word");
    return;
  }
  for (const auto& w : language(P, longest)) {
    const auto hits = std::count_if(code.begin(), code.end(), [&](const Word& u) { return is_prefix(u, w); });
    if (hits != 1) {
      throw Error(ErrorKind::InvalidCode, side + " cylinders do not partition the shift: " + format_word(w) +
                                              " lies in " + std::to_string(hits) + " of them");
    }
  }
}

}  // namespace

void validate_prefix_exchange(const Presentation& X, const Presentation& Y, const std::vector<CodePair>& code) {
  if (code.empty()) throw Error(ErrorKind::InvalidCode, "empty code");
  std::vector<Word> from, to;
  for (const auto& c : code) {
    from.push_back(c.from);
    to.push_back(c.to);
  }
  check_complete_code(X, from, "domain");
  check_complete_code(Y, to, "image");
  for (const auto& c : code) {
    const auto sx = followers(X, c.from);
    const auto sy = followers(Y, c.to);
    if (sx != sy) {
      throw Error(ErrorKind::InvalidCode, "follower sets of " + format_word(c.from) + " and " + format_word(c.to) +
                                              " differ");
    }
    std::set<Symbol> reach;
    for (Symbol s : sx) {
      for (Symbol r : X.reachable(s)) reach.insert(r);
    }
    for (Symbol r : reach) {
      if (static_cast<std::size_t>(r) >= Y.vertex_count() || X.successors(r) != Y.successors(r)) {
        throw Error(ErrorKind::InvalidCode, "tails after " + format_word(c.from) + " and " + format_word(c.to) +
                                                " are not interchangeable at vertex " + std::to_string(r));
      }
    }
  }
}

PointMap prefix_exchange(std::shared_ptr<const Presentation> X, std::shared_ptr<const Presentation> Y,
                         const std::vector<CodePair>& code) {
  validate_prefix_exchange(*X, *Y, code);
  std::string description;
  for (const auto& c : code) {
    if (!description.empty()) description += ",";
    description += format_word(c.from) + "->" + format_word(c.to);
  }
  const auto nx = X->vertex_count();
  const auto copy_row = [&](std::size_t self) {
    std::vector<PointMap::Transition> row(nx);
    for (std::size_t a = 0; a < nx; ++a) {
      if (a < Y->vertex_count()) row[a] = {self, {static_cast<Symbol>(a)}};
    }
    return row;
  };
  if (code.size() == 1 && code.front().from.empty()) {
    std::vector<std::vector<PointMap::Transition>> t{copy_row(0)};
    return PointMap(X, Y, std::move(t), 0, code.front().to, description);
  }
  std::map<Word, std::size_t> trie;
  for (const auto& c : code) {
    for (std::size_t len = 0; len < c.from.size(); ++len) trie.emplace(slice(c.from, 0, len), 0);
  }
  std::size_t index = 0;
  for (auto& kv : trie) kv.second = index++;
  const std::size_t copy = index;
  std::vector<std::vector<PointMap::Transition>> t(index + 1, std::vector<PointMap::Transition>(nx));
  for (const auto& [node, id] : trie) {
    for (std::size_t a = 0; a < nx; ++a) {
      Word next = node;
      next.push_back(static_cast<Symbol>(a));
      if (!X->admissible(next)) continue;
      const auto hit = std::find_if(code.begin(), code.end(), [&](const CodePair& c) { return c.from == next; });
      if (hit != code.end()) {
        t[id][a] = {copy, hit->to};
      } else if (const auto it = trie.find(next); it != trie.end()) {
        t[id][a] = {it->second, {}};
      }
    }
  }
  t[copy] = copy_row(copy);
  return PointMap(X, Y, std::move(t), trie.at(Word{}), {}, description);
}

PointMap sliding_block_code(std::shared_ptr<const Presentation> X, std::shared_ptr<const Presentation> Y,
                            std::size_t anticipation, const std::function<Symbol(const Word&)>& block_map,
                            std::string description) {
  std::map<Word, std::size_t> ids{{Word{}, 0}};
  std::vector<Word> buffers{Word{}};
  std::vector<std::vector<PointMap::Transition>> t;
  const auto nx = X->vertex_count();
  for (std::size_t s = 0; s < buffers.size(); ++s) {
    t.emplace_back(nx);
    for (std::size_t a = 0; a < nx; ++a) {
      const Word buf = buffers[s];
      if (!buf.empty() && !X->has_edge(buf.back(), static_cast<Symbol>(a))) continue;
      Word next = buf;
      next.push_back(static_cast<Symbol>(a));
      Word out;
      if (next.size() == anticipation + 1) {
        out.push_back(block_map(next));
        next.erase(next.begin());
      }
      auto [it, fresh] = ids.emplace(next, buffers.size());
      if (fresh) buffers.push_back(next);
      t[s][a] = {it->second, std::move(out)};
    }
  }
  return PointMap(std::move(X), std::move(Y), std::move(t), 0, {}, std::move(description));
}

PointMap compose(const PointMap& first, const PointMap& second) {
  if (!(first.codomain() == second.domain())) {
    throw Error(ErrorKind::InvalidArgument, "cannot compose " + first.description() + " with " + second.description());
  }
  const auto [init_out, q2] = second.run(first.initial_output());
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids{{{first.initial_state(), q2}, 0}};
  std::vector<std::pair<std::size_t, std::size_t>> states{{first.initial_state(), q2}};
  std::vector<std::vector<PointMap::Transition>> t;
  const auto nx = first.domain().vertex_count();
  for (std::size_t s = 0; s < states.size(); ++s) {
    t.emplace_back(nx);
    for (std::size_t a = 0; a < nx; ++a) {
      const auto [p1, p2] = states[s];
      const auto& t1 = first.transition(p1, static_cast<Symbol>(a));
      if (t1.next == PointMap::npos) continue;
      std::pair<Word, std::size_t> step;
      try {
        step = second.run_from(p2, t1.output);
      } catch (const Error&) {
        continue;
      }
      const std::pair<std::size_t, std::size_t> key{t1.next, step.second};
      auto [it, fresh] = ids.emplace(key, states.size());
      if (fresh) states.push_back(key);
      t[s][a] = {it->second, std::move(step.first)};
    }
  }
  return PointMap(first.domain_ptr(), second.codomain_ptr(), std::move(t), 0, init_out,
                  "(" + second.description() + ")o(" + first.description() + ")");
}

OrbitEquivalence identity_equivalence(std::shared_ptr<const Presentation> P) {
  return {identity_map(P), identity_map(P)};
}

OrbitEquivalence prefix_exchange_equivalence(std::shared_ptr<const Presentation> X,
                                             std::shared_ptr<const Presentation> Y,
                                             const std::vector<CodePair>& code) {
  std::vector<CodePair> swapped;
  for (const auto& c : code) swapped.push_back({c.to, c.from});
  return {prefix_exchange(X, Y, code), prefix_exchange(Y, X, swapped)};
}

OrbitEquivalence compose(const OrbitEquivalence& first, const OrbitEquivalence& second) {
  return {compose(first.forward, second.forward), compose(second.inverse, first.inverse)};
}

OrbitEquivalence invert(const OrbitEquivalence& h) { return {h.inverse, h.forward}; }

namespace {

std::vector<EvPerPoint> small_points(const Presentation& P, std::size_t bound) {
  std::set<EvPerPoint> out;
  for (std::size_t c = 1; c <= bound; ++c) {
    for (const auto& cycle : language(P, c)) {
      if (!P.has_edge(cycle.back(), cycle.front())) continue;
      out.insert(normalize_point({}, cycle));
      for (std::size_t p = 1; p <= bound; ++p) {
        for (const auto& prefix : language(P, p)) {
          if (P.has_edge(prefix.back(), cycle.front())) out.insert(normalize_point(prefix, cycle));
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

bool check_inverse_pair(const OrbitEquivalence& h, std::size_t bound) {
  for (const auto& x : small_points(h.domain(), bound)) {
    if (h.inverse(h.forward(x)) != x) return false;
  }
  for (const auto& y : small_points(h.codomain(), bound)) {
    if (h.forward(h.inverse(y)) != y) return false;
  }
  return true;
}

}  // namespace sftkit
