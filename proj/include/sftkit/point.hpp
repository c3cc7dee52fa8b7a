#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "sftkit/presentation.hpp"
#include "sftkit/word.hpp"

namespace sftkit {

using Rng = std::mt19937_64;

// One-sided eventually periodic point prefix . cycle^inf. Values produced by
// normalize_point are canonical: the cycle is primitive and the prefix is as
// short as possible, so equality of points is structural equality.
struct EvPerPoint {
  Word prefix;
  Word cycle;

  auto operator<=>(const EvPerPoint&) const = default;
};

EvPerPoint normalize_point(Word prefix, Word cycle);
// As above, and rejects points that are not admissible in P.
EvPerPoint normalize_point(const Word& prefix, const Word& cycle, const Presentation& P);

bool point_admissible(const Presentation& P, const EvPerPoint& p);

Symbol symbol_at(const EvPerPoint& p, std::size_t i);
// x_0 ... x_{n-1}.
Word first_symbols(const EvPerPoint& p, std::size_t n);
bool in_cylinder(const EvPerPoint& p, const Word& u);
// The point u . p.
EvPerPoint prepend(const Word& u, const EvPerPoint& p);

EvPerPoint shift_point(const EvPerPoint& p, std::int64_t j);
std::size_t least_period(const EvPerPoint& p);
bool is_periodic(const EvPerPoint& p);

bool is_isolated(const Presentation& P, const EvPerPoint& p);

std::string format_point(const EvPerPoint& p);
EvPerPoint parse_point(std::string_view text);

// Two-sided point left^inf . middle . right^inf. Frame position k holds
// middle[k] for 0 <= k < |middle|, the left cycle (ending at -1) for k < 0
// and the right cycle (starting at |middle|) beyond. Coordinate j of the
// point sits at frame position j + phase.
struct BiPoint {
  Word left;
  Word middle;
  Word right;
  std::int64_t phase = 0;

  auto operator<=>(const BiPoint&) const = default;
};

BiPoint normalize_bipoint(Word left, Word middle, Word right, std::int64_t phase);
BiPoint normalize_bipoint(const Word& left, const Word& middle, const Word& right,
                          std::int64_t phase, const Presentation& P);
// The periodic point cycle^inf with x_0 = cycle[phase mod |cycle|].
BiPoint periodic_bipoint(const Word& cycle, std::int64_t phase = 0);

bool bipoint_admissible(const Presentation& P, const BiPoint& x);

Symbol frame_symbol(const BiPoint& x, std::int64_t k);
// x_j.
Symbol coordinate(const BiPoint& x, std::int64_t j);
// x_{[i, inf)}.
EvPerPoint tail(const BiPoint& x, std::int64_t i);

BiPoint shift_bipoint(const BiPoint& x, std::int64_t j);
bool is_periodic(const BiPoint& x);
// Throws NotPeriodic unless x is periodic.
std::size_t least_period(const BiPoint& x);

std::string format_bipoint(const BiPoint& x);
BiPoint parse_bipoint(std::string_view text);

// Random generators used by tests and sampling. Cycles are simple cycles of
// the graph with length at most max_cycle (retrying walks as needed).
Word random_cycle(const Presentation& P, Rng& rng, std::size_t max_cycle);
EvPerPoint random_point(const Presentation& P, Rng& rng, std::size_t max_prefix,
                        std::size_t max_cycle);
BiPoint random_bipoint(const Presentation& P, Rng& rng, std::size_t max_middle,
                       std::size_t max_cycle);

// All primitive closed words up to the given length, one per rotation class
// (the lexicographically least rotation).
std::vector<Word> periodic_orbits(const Presentation& P, std::size_t max_cycle);

}  // namespace sftkit
