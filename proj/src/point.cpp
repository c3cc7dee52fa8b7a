#include "sftkit/point.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "sftkit/error.hpp"

namespace sftkit {

namespace {

Word rotate_right(const Word& w, std::size_t by) {
  if (w.empty()) return w;
  by %= w.size();
  return rotate_left(w, w.size() - by);
}

std::size_t mod(std::int64_t a, std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<std::size_t>(((a % m) + m) % m);
}

}  // namespace

EvPerPoint normalize_point(Word prefix, Word cycle) {
  if (cycle.empty()) throw Error(ErrorKind::InvalidArgument, "point cycle must be non-empty");
  cycle = primitive_root(cycle);
  while (!prefix.empty() && prefix.back() == cycle.back()) {
    prefix.pop_back();
    cycle = rotate_right(cycle, 1);
  }
  return {std::move(prefix), std::move(cycle)};
}

bool point_admissible(const Presentation& P, const EvPerPoint& p) {
  if (p.cycle.empty() || !P.closed(p.cycle) || !P.admissible(p.prefix)) return false;
  return p.prefix.empty() || P.has_edge(p.prefix.back(), p.cycle.front());
}

EvPerPoint normalize_point(const Word& prefix, const Word& cycle, const Presentation& P) {
  if (cycle.empty() || !point_admissible(P, {prefix, cycle})) {
    throw Error(ErrorKind::InadmissibleWord, format_word(prefix) + "/" + format_word(cycle));
  }
  return normalize_point(prefix, cycle);
}

Symbol symbol_at(const EvPerPoint& p, std::size_t i) {
  if (i < p.prefix.size()) return p.prefix[i];
  return p.cycle[(i - p.prefix.size()) % p.cycle.size()];
}

Word first_symbols(const EvPerPoint& p, std::size_t n) {
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(symbol_at(p, i));
  return out;
}

bool in_cylinder(const EvPerPoint& p, const Word& u) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (symbol_at(p, i) != u[i]) return false;
  }
  return true;
}

EvPerPoint prepend(const Word& u, const EvPerPoint& p) {
  return normalize_point(concat(u, p.prefix), p.cycle);
}

EvPerPoint shift_point(const EvPerPoint& p, std::int64_t j) {
  if (j < 0) throw Error(ErrorKind::NegativeShiftOneSided, "cannot shift a one-sided point by " + std::to_string(j));
  const auto drop = std::min<std::size_t>(static_cast<std::size_t>(j), p.prefix.size());
  const auto rest = static_cast<std::size_t>(j) - drop;
  return normalize_point(slice(p.prefix, drop, p.prefix.size()), rotate_left(p.cycle, rest % p.cycle.size()));
}

std::size_t least_period(const EvPerPoint& p) { return primitive_root(p.cycle).size(); }

bool is_periodic(const EvPerPoint& p) { return normalize_point(p.prefix, p.cycle).prefix.empty(); }

bool is_isolated(const Presentation& P, const EvPerPoint& p) {
  for (Symbol v : P.reachable(p.cycle.front())) {
    if (P.successors(v).size() != 1) return false;
  }
  return true;
}

std::string format_point(const EvPerPoint& p) {
  return (p.prefix.empty() ? std::string() : format_word(p.prefix)) + "/" + format_word(p.cycle);
}

EvPerPoint parse_point(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw Error(ErrorKind::ParseError, "point '" + std::string(text) + "' must look like prefix/cycle");
  }
  auto cycle = parse_word(text.substr(slash + 1));
  if (cycle.empty()) throw Error(ErrorKind::ParseError, "point '" + std::string(text) + "' has an empty cycle");
  return normalize_point(parse_word(text.substr(0, slash)), std::move(cycle));
}

BiPoint normalize_bipoint(Word left, Word middle, Word right, std::int64_t phase) {
  if (left.empty() || right.empty()) throw Error(ErrorKind::InvalidArgument, "bi-point cycles must be non-empty");
  left = primitive_root(left);
  right = primitive_root(right);
  std::size_t front = 0;
  while (front < middle.size() && middle[front] == left.front()) {
    left = rotate_left(left, 1);
    ++front;
    --phase;
  }
  middle.erase(middle.begin(), middle.begin() + static_cast<std::ptrdiff_t>(front));
  while (!middle.empty() && middle.back() == right.back()) {
    middle.pop_back();
    right = rotate_right(right, 1);
  }
  if (middle.empty()) {
    if (left == right) {
      const auto c = rotate_left(left, mod(phase, left.size()));
      return {c, {}, c, 0};
    }
    // Push the boundary right while the left cycle continues to match.
    while (left.front() == right.front()) {
      left = rotate_left(left, 1);
      right = rotate_left(right, 1);
      --phase;
    }
  }
  return {std::move(left), std::move(middle), std::move(right), phase};
}

bool bipoint_admissible(const Presentation& P, const BiPoint& x) {
  if (!P.closed(x.left) || !P.closed(x.right) || !P.admissible(x.middle)) return false;
  const Symbol after_left = x.middle.empty() ? x.right.front() : x.middle.front();
  if (!P.has_edge(x.left.back(), after_left)) return false;
  return x.middle.empty() || P.has_edge(x.middle.back(), x.right.front());
}

BiPoint normalize_bipoint(const Word& left, const Word& middle, const Word& right, std::int64_t phase,
                          const Presentation& P) {
  if (left.empty() || right.empty() || !bipoint_admissible(P, {left, middle, right, phase})) {
    throw Error(ErrorKind::InadmissibleWord,
                format_word(left) + "|" + format_word(middle) + "|" + format_word(right));
  }
  return normalize_bipoint(left, middle, right, phase);
}

BiPoint periodic_bipoint(const Word& cycle, std::int64_t phase) {
  return normalize_bipoint(cycle, {}, cycle, phase);
}

Symbol frame_symbol(const BiPoint& x, std::int64_t k) {
  const auto m = static_cast<std::int64_t>(x.middle.size());
  if (k < 0) return x.left[mod(k, x.left.size())];
  if (k < m) return x.middle[static_cast<std::size_t>(k)];
  return x.right[static_cast<std::size_t>(k - m) % x.right.size()];
}

Symbol coordinate(const BiPoint& x, std::int64_t j) { return frame_symbol(x, j + x.phase); }

EvPerPoint tail(const BiPoint& x, std::int64_t i) {
  const auto k = i + x.phase;
  const auto m = static_cast<std::int64_t>(x.middle.size());
  if (k >= m) return normalize_point({}, rotate_left(x.right, static_cast<std::size_t>(k - m) % x.right.size()));
  Word prefix;
  for (std::int64_t t = k; t < 0; ++t) prefix.push_back(frame_symbol(x, t));
  const auto start = static_cast<std::size_t>(std::max<std::int64_t>(k, 0));
  prefix.insert(prefix.end(), x.middle.begin() + static_cast<std::ptrdiff_t>(start), x.middle.end());
  return normalize_point(std::move(prefix), x.right);
}

BiPoint shift_bipoint(const BiPoint& x, std::int64_t j) {
  return normalize_bipoint(x.left, x.middle, x.right, x.phase + j);
}

bool is_periodic(const BiPoint& x) {
  const auto c = normalize_bipoint(x.left, x.middle, x.right, x.phase);
  return c.middle.empty() && c.left == c.right;
}

std::size_t least_period(const BiPoint& x) {
  if (!is_periodic(x)) throw Error(ErrorKind::NotPeriodic, format_bipoint(x) + " is not periodic");
  return primitive_root(x.left).size();
}

std::string format_bipoint(const BiPoint& x) {
  return format_word(x.left) + "|" + (x.middle.empty() ? std::string() : format_word(x.middle)) + "|" +
         format_word(x.right) + "@" + std::to_string(x.phase);
}

BiPoint parse_bipoint(std::string_view text) {
  const auto bad = [&] {
    return Error(ErrorKind::ParseError, "bi-point '" + std::string(text) + "' must look like L|M|R@phase");
  };
  const auto bar1 = text.find('|');
  const auto bar2 = bar1 == std::string_view::npos ? bar1 : text.find('|', bar1 + 1);
  const auto at = text.find('@');
  if (bar2 == std::string_view::npos) throw bad();
  std::int64_t phase = 0;
  auto right_text = text.substr(bar2 + 1);
  if (at != std::string_view::npos) {
    if (at < bar2) throw bad();
    const auto ptext = text.substr(at + 1);
    auto [ptr, ec] = std::from_chars(ptext.data(), ptext.data() + ptext.size(), phase);
    if (ec != std::errc() || ptr != ptext.data() + ptext.size()) throw bad();
    right_text = text.substr(bar2 + 1, at - bar2 - 1);
  }
  auto left = parse_word(text.substr(0, bar1));
  auto right = parse_word(right_text);
  if (left.empty() || right.empty()) throw bad();
  return normalize_bipoint(std::move(left), parse_word(text.substr(bar1 + 1, bar2 - bar1 - 1)), std::move(right),
                           phase);
}

Word random_cycle(const Presentation& P, Rng& rng, std::size_t max_cycle) {
  if (max_cycle == 0) throw Error(ErrorKind::InvalidArgument, "max_cycle must be positive");
  std::uniform_int_distribution<std::size_t> pick_vertex(0, P.vertex_count() - 1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Word walk{static_cast<Symbol>(pick_vertex(rng))};
    std::vector<std::ptrdiff_t> seen(P.vertex_count(), -1);
    seen[walk.back()] = 0;
    while (true) {
      const auto& succ = P.successors(walk.back());
      std::uniform_int_distribution<std::size_t> pick(0, succ.size() - 1);
      const Symbol next = succ[pick(rng)];
      if (seen[next] >= 0) {
        Word c = slice(walk, static_cast<std::size_t>(seen[next]), walk.size());
        if (c.size() <= max_cycle) return c;
        break;
      }
      seen[next] = static_cast<std::ptrdiff_t>(walk.size());
      walk.push_back(next);
    }
  }
  // Every vertex-shift has a simple cycle, but maybe none this short.
  throw Error(ErrorKind::InvalidArgument, "no cycle of length <= " + std::to_string(max_cycle) + " found");
}

EvPerPoint random_point(const Presentation& P, Rng& rng, std::size_t max_prefix, std::size_t max_cycle) {
  auto cycle = random_cycle(P, rng, max_cycle);
  const auto rot = std::uniform_int_distribution<std::size_t>(0, cycle.size() - 1)(rng);
  cycle = rotate_left(cycle, rot);
  const auto len = std::uniform_int_distribution<std::size_t>(0, max_prefix)(rng);
  Word prefix;
  Symbol head = cycle.front();
  for (std::size_t i = 0; i < len; ++i) {
    const auto& pred = P.predecessors(head);
    head = pred[std::uniform_int_distribution<std::size_t>(0, pred.size() - 1)(rng)];
    prefix.push_back(head);
  }
  std::reverse(prefix.begin(), prefix.end());
  return normalize_point(std::move(prefix), std::move(cycle));
}

BiPoint random_bipoint(const Presentation& P, Rng& rng, std::size_t max_middle, std::size_t max_cycle) {
  auto left = random_cycle(P, rng, max_cycle);
  Word middle;
  Symbol last = left.back();
  const auto len = std::uniform_int_distribution<std::size_t>(0, max_middle)(rng);
  for (std::size_t i = 0; i < len; ++i) {
    const auto& succ = P.successors(last);
    last = succ[std::uniform_int_distribution<std::size_t>(0, succ.size() - 1)(rng)];
    middle.push_back(last);
  }
  Word right;
  for (int attempt = 0; attempt < 10000 && right.empty(); ++attempt) {
    Word walk{last};
    std::vector<std::ptrdiff_t> seen(P.vertex_count(), -1);
    seen[last] = 0;
    while (true) {
      const auto& succ = P.successors(walk.back());
      const Symbol next = succ[std::uniform_int_distribution<std::size_t>(0, succ.size() - 1)(rng)];
      if (seen[next] >= 0) {
        const auto i = static_cast<std::size_t>(seen[next]);
        if (walk.size() - i <= max_cycle) {
          if (i == 0) {
            right = rotate_left(walk, 1);
          } else {
            middle.insert(middle.end(), walk.begin() + 1, walk.begin() + static_cast<std::ptrdiff_t>(i));
            right = slice(walk, i, walk.size());
          }
        }
        break;
      }
      seen[next] = static_cast<std::ptrdiff_t>(walk.size());
      walk.push_back(next);
    }
  }
  if (right.empty()) right = left;  // fall back to a periodic point
  const auto span = static_cast<std::int64_t>(middle.size());
  const auto phase = std::uniform_int_distribution<std::int64_t>(-3, span + 3)(rng);
  if (right == left && middle.empty()) return periodic_bipoint(left, phase);
  return normalize_bipoint(std::move(left), std::move(middle), std::move(right), phase, P);
}

std::vector<Word> periodic_orbits(const Presentation& P, std::size_t max_cycle) {
  std::vector<Word> out;
  for (std::size_t len = 1; len <= max_cycle; ++len) {
    for (const auto& w : language(P, len)) {
      if (!P.has_edge(w.back(), w.front()) || primitive_root(w).size() != len) continue;
      bool least = true;
      for (std::size_t r = 1; r < len && least; ++r) least = !(rotate_left(w, r) < w);
      if (least) out.push_back(w);
    }
  }
  return out;
}

}  // namespace sftkit
