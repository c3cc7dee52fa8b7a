#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sftkit/cohomology.hpp"
#include "sftkit/error.hpp"
#include "sftkit/flow.hpp"
#include "sftkit/groupoid.hpp"
#include "sftkit/invariants.hpp"
#include "sftkit/io.hpp"
#include "sftkit/orbit.hpp"
#include "sftkit/pipeline.hpp"
#include "sftkit/tower.hpp"

using namespace sftkit;

namespace {

enum Exit { kOk = 0, kFalse = 1, kInput = 2, kInconclusive = 3 };

struct Flags {
  bool json = false;
  std::size_t depth = 8;
  std::size_t max_cycle = 6;
  std::string t_grid = "-2:2:1/4";
  std::uint64_t seed = 1;
  std::size_t samples = 20;
  std::size_t length = 3;
  bool scoe = false;
  bool repair = false;
  std::string f;
  bool check_invariants = false;
  std::string name;
  std::vector<std::string> points;
};

void emit(const Flags& flags, const json& j, const std::string& text) {
  if (flags.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::vector<Rational> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::istringstream in(spec);
  for (std::string p; std::getline(in, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw Error(ErrorKind::ParseError, "--t-grid must look like from:to:step");
  const auto from = parse_rational(parts[0]);
  const auto to = parse_rational(parts[1]);
  const auto step = parse_rational(parts[2]);
  if (step <= 0 || to < from) throw Error(ErrorKind::ParseError, "--t-grid needs from <= to and a positive step");
  std::vector<Rational> grid;
  for (auto t = from; t <= to; t += step) grid.push_back(t);
  return grid;
}

std::shared_ptr<const Presentation> load_shared(const std::string& path) { return share(load_presentation(path)); }

int cmd_invariants(const Flags& flags, const std::string& file) {
  const auto r = bowen_franks(load_presentation(file));
  emit(flags, to_json(r), "snf: " + join(r.snf_diagonal) + "\ndet: " + std::to_string(r.determinant) + "\n");
  return kOk;
}

int cmd_language(const Flags& flags, const std::string& file) {
  const auto words = language(load_presentation(file), flags.length);
  json j = json::array();
  std::string text;
  for (const auto& w : words) {
    j.push_back(format_word(w));
    text += format_word(w) + "\n";
  }
  emit(flags, {{"length", flags.length}, {"count", words.size()}, {"words", j}}, text);
  return kOk;
}

int cmd_tower(const Flags& flags, const std::string& file) {
  const auto P = load_shared(file);
  if (flags.f.empty()) throw Error(ErrorKind::InvalidArgument, "tower needs --f");
  const Tower T(function_from_spec(flags.f, P));
  json j{{"tower", to_json(T.presentation())}};
  std::string text = format_presentation(T.presentation());
  bool preserved = true;
  if (flags.check_invariants) {
    const auto before = bowen_franks(*P);
    const auto after = bowen_franks(T.presentation());
    preserved = before == after;
    j["invariants"] = {{"base", to_json(before)}, {"tower", to_json(after)}, {"preserved", preserved}};
    text += std::string("det preserved: ") + (before.determinant == after.determinant ? "true" : "false") + "\n";
    text += std::string("group preserved: ") + (before.group_factors() == after.group_factors() ? "true" : "false") +
            "\n";
  }
  emit(flags, j, text);
  return preserved ? kOk : kFalse;
}

std::vector<std::vector<Symbol>> parse_parts(const std::string& spec) {
  std::vector<std::vector<Symbol>> parts;
  std::istringstream in(spec);
  for (std::string part; std::getline(in, part, ';');) {
    std::vector<Symbol> items;
    std::istringstream pin(part);
    for (std::string item; std::getline(pin, item, ',');) {
      try {
        items.push_back(std::stoi(item));
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::ParseError, "bad vertex '" + item + "' in --parts");
      }
    }
    parts.push_back(items);
  }
  return parts;
}

int cmd_move(const Flags& flags, const std::string& file, const std::string& kind, int vertex,
             const std::string& parts) {
  const auto P = load_presentation(file);
  if (kind == "attach-head") {
    const auto A = attach_head(P.matrix(), vertex);
    std::ostringstream text;
    text << "# the new vertex is a source, so this is not a valid shift presentation\nsft v1\nvertices " << A.size()
         << "\n";
    json edges = json::array();
    for (std::size_t u = 0; u < A.size(); ++u) {
      for (std::size_t v = 0; v < A.size(); ++v) {
        if (!A[u][v]) continue;
        text << "edge " << u << " " << v << "\n";
        edges.push_back({u, v});
      }
    }
    emit(flags, {{"vertices", A.size()}, {"edges", edges}, {"has_source", true}}, text.str());
    return kOk;
  }
  const auto Q = kind == "out-split" ? out_split(P, vertex, parse_parts(parts)) : in_split(P, vertex, parse_parts(parts));
  const auto before = bowen_franks(P);
  const auto after = bowen_franks(Q);
  const bool same = before.determinant == after.determinant;
  emit(flags, {{"presentation", to_json(Q)}, {"det_before", before.determinant}, {"det_after", after.determinant}},
       format_presentation(Q) + "# det preserved: " + (same ? "true" : "false") + "\n");
  return same ? kOk : kFalse;
}

int cmd_potential(const Flags& flags, const std::string& sft, const std::string& fn) {
  const auto P = load_shared(sft);
  const auto f = find_function(load_functions(fn, P), flags.name, fn);
  const auto W = transition_graph(f);
  const auto result = find_potential(W);
  if (const auto* p = std::get_if<Potential>(&result)) {
    json kappa = json::object();
    std::string text = "potential\n";
    for (std::size_t v = 0; v < W.node_count; ++v) {
      kappa[format_word(W.node_labels[v])] = p->kappa[v];
      text += format_word(W.node_labels[v]) + " " + std::to_string(p->kappa[v]) + "\n";
    }
    emit(flags, {{"potential", kappa}}, text);
    return kOk;
  }
  const auto& c = std::get<NegativeCycleWitness>(result);
  emit(flags, {{"negative_cycle", to_json(W, c)}},
       "negative-cycle sum=" + std::to_string(c.sum) + " cycle=" + format_word(c.cycle_word) + "\n");
  return kFalse;
}

int cmd_positive(const Flags& flags, const std::string& sft, const std::string& fn) {
  const auto P = load_shared(sft);
  const auto f = find_function(load_functions(fn, P), flags.name, fn);
  const auto result = class_is_positive(f);
  if (const auto* c = std::get_if<PositivityCertificate>(&result)) {
    emit(flags, {{"positive", true}, {"certificate", to_json(*c)}},
         "certificate\n" + format_function(c->b, "b") + format_function(c->n, "n"));
    return kOk;
  }
  const auto& w = std::get<NegativeCycleWitness>(result);
  const auto W = transition_graph(f);
  emit(flags, {{"positive", false}, {"negative_cycle", to_json(W, w)}},
       "negative-cycle sum=" + std::to_string(w.sum) + " cycle=" + format_word(w.cycle_word) + "\n");
  return kFalse;
}

int cmd_derive(const Flags& flags, const std::string& oe) {
  const auto h = load_orbit_equivalence(oe);
  const auto pair = derive_cocycle_pair(h.forward, flags.depth);
  const auto inverse = derive_cocycle_pair(h.inverse, flags.depth);
  emit(flags, {{"pair", to_json(pair)}, {"inverse_pair", to_json(inverse)}},
       format_function(pair.k, "k") + format_function(pair.l, "l") + format_function(inverse.k, "k_inv") +
           format_function(inverse.l, "l_inv"));
  return kOk;
}

std::string report_text(const COEReport& r) {
  std::ostringstream out;
  out << "verified: " << (r.verified ? "true" : "false") << "\n";
  out << "depth: " << r.depth << " / " << r.inverse_depth << "\n";
  for (const auto& f : r.failures) {
    out << "failure " << f.equation << " cylinder=" << format_word(f.cylinder) << " point=" << format_point(f.point)
        << " k=" << f.k << " l=" << f.l << " lhs=" << format_point(f.lhs) << " rhs=" << format_point(f.rhs) << "\n";
  }
  for (const auto& u : r.unresolved) out << "unresolved " << format_word(u) << "\n";
  const auto lp = [&](const char* name, const LeastPeriodResult& res) {
    out << name << ": " << (res.preserving ? "true" : "false") << "\n";
    for (const auto& w : res.witnesses) {
      if (!w.ok) {
        out << "  orbit " << format_word(w.cycle) << " lp(h(x))=" << w.image_period << " sum=" << w.orbit_sum << "\n";
      }
    }
  };
  lp("least period preserving", r.least_period);
  lp("inverse least period preserving", r.inverse_least_period);
  out << "strongly coe: " << (r.scoe_b ? "true" : "unknown within bound") << "\n";
  return out.str();
}

int cmd_verify_coe(const Flags& flags, const std::string& oe, const std::string& pairs) {
  const auto h = load_orbit_equivalence(oe);
  CocyclePair pair, inverse;
  if (pairs.empty()) {
    pair = derive_cocycle_pair(h.forward, flags.depth);
    inverse = derive_cocycle_pair(h.inverse, flags.depth);
  } else {
    const auto fx = load_functions(pairs, h.forward.domain_ptr());
    const auto fy = load_functions(pairs, h.inverse.domain_ptr());
    pair = {find_function(fx, "k", pairs), find_function(fx, "l", pairs)};
    inverse = {find_function(fy, "k_inv", pairs), find_function(fy, "l_inv", pairs)};
  }
  VerifyOptions options;
  options.max_cycle = flags.max_cycle;
  const auto r = verify_coe(h, pair, inverse, options);
  emit(flags, to_json(r), report_text(r));
  if (!r.failures.empty()) return kFalse;
  return r.inconclusive ? kInconclusive : kOk;
}

ClaimOptions claim_options(const Flags& flags) {
  ClaimOptions options;
  options.t_grid = parse_grid(flags.t_grid);
  options.max_cycle = flags.max_cycle;
  return options;
}

std::string claims_text(const ClaimReport& report) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  for (const auto& r : report.results) {
    auto& [checked, passed] = counts[r.claim];
    ++checked;
    passed += r.pass ? 1 : 0;
  }
  std::ostringstream out;
  for (const auto& [claim, c] : counts) out << "claim " << claim << ": " << c.second << "/" << c.first << "\n";
  for (const auto& r : report.results) {
    if (r.pass) continue;
    out << (r.inconclusive ? "inconclusive " : "fail ") << r.claim << " point=" << r.point << " " << r.parameters
        << " lhs=" << r.lhs << " rhs=" << r.rhs << "\n";
  }
  out << "claims: " << (report.passed() ? "pass" : report.inconclusive() ? "inconclusive" : "fail") << "\n";
  return out.str();
}

int claims_exit(const ClaimReport& report) {
  if (report.passed()) return kOk;
  return report.inconclusive() ? kInconclusive : kFalse;
}

std::pair<std::vector<BiPoint>, std::vector<BiPoint>> samples(const Flags& flags, const OrbitEquivalence& h) {
  std::vector<BiPoint> xs, ys;
  for (const auto& text : flags.points) {
    const auto p = parse_bipoint(text);
    xs.push_back(normalize_bipoint(p.left, p.middle, p.right, p.phase, h.domain()));
  }
  if (flags.points.empty()) {
    Rng rng(flags.seed);
    for (std::size_t i = 0; i < flags.samples; ++i) xs.push_back(random_bipoint(h.domain(), rng, 4, 3));
    for (std::size_t i = 0; i < flags.samples; ++i) ys.push_back(random_bipoint(h.codomain(), rng, 4, 3));
  }
  return {xs, ys};
}

PipelineOptions pipeline_options(const Flags& flags) {
  PipelineOptions options;
  options.max_depth = flags.depth;
  options.max_cycle = flags.max_cycle;
  options.scoe = flags.scoe;
  options.repair = flags.repair;
  return options;
}

int cmd_pipeline(const Flags& flags, const std::string& oe, bool claims_only) {
  const auto h = load_orbit_equivalence(oe);
  const auto result = coe_to_flow_pipeline(h, pipeline_options(flags));
  const auto [xs, ys] = samples(flags, h);
  const auto report = verify_flow_claims(result.data, xs, claim_options(flags), ys);
  json j;
  std::string text;
  if (!claims_only) {
    j["flow_data"] = to_json(result.data);
    j["coe"] = to_json(result.report);
    const auto& D = result.data;
    text += "pair depth: " + std::to_string(D.pair.depth()) + " / " + std::to_string(D.inverse_pair.depth()) + "\n";
    text += "strongly coe: " + std::string(D.strongly_coe ? "true" : "false") + "\n";
    text += format_function(D.pair.k, "k") + format_function(D.pair.l, "l") + format_function(D.n, "n") +
            format_function(D.b, "b") + format_function(D.inverse_pair.k, "k_inv") +
            format_function(D.inverse_pair.l, "l_inv") + format_function(D.inverse_n, "n_inv") +
            format_function(D.inverse_b, "b_inv");
  }
  j["claims"] = to_json(report);
  text += claims_text(report);
  emit(flags, j, text);
  return claims_exit(report);
}

int cmd_groupoid(const Flags& flags, const std::string& sft, const std::string& x, const std::string& y,
                 std::int64_t n, std::optional<std::int64_t> fi, std::optional<std::int64_t> fj) {
  const auto P = load_shared(sft);
  const auto px = parse_point(x);
  const auto py = parse_point(y);
  for (const auto& p : {px, py}) {
    if (!point_admissible(*P, p)) throw Error(ErrorKind::InadmissibleWord, format_point(p) + " is not in the shift");
  }
  json j;
  std::string text;
  int code = kOk;
  try {
    const auto [base, period] = feasible_degrees(px, py);
    j["feasible_degrees"] = {{"base", base}, {"period", period}};
    text += "feasible degrees: " + std::to_string(base) + " + " + std::to_string(period) + "Z\n";
    const auto e = make_element(px, n, py);
    j["element"] = to_json(e);
    text += "element " + format_element(e) + " witnesses i=" + std::to_string(e.i) + " j=" + std::to_string(e.j) + "\n";
    const auto inv = invert(e);
    const auto loop = compose(e, inv);
    j["inverse"] = to_json(inv);
    j["unit_check"] = loop == unit(e.x);
    text += "inverse " + format_element(inv) + "\n";
    text += std::string("e . e^-1 is a unit: ") + (loop == unit(e.x) ? "true" : "false") + "\n";
    if (!flags.f.empty()) {
      const Tower T(function_from_spec(flags.f, P));
      const TowerGroupoidElement theta{e, fi.value_or(0), fj.value_or(0)};
      const auto image = tower_iso(T, theta);
      j["tower_image"] = to_json(image);
      text += "tower image " + format_element(image) + "\n";
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotTailEquivalent && e.kind() != ErrorKind::DegreeImpossible) throw;
    j["error"] = e.what();
    text += std::string(e.what()) + "\n";
    code = kFalse;
  }
  emit(flags, j, text);
  return code;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::DepthExceeded:
      return kInconclusive;
    case ErrorKind::LeastPeriodViolation:
    case ErrorKind::NotPositiveClass:
    case ErrorKind::CocycleInconsistent:
    case ErrorKind::DegenerateN:
    case ErrorKind::InvalidFlowData:
      return kFalse;
    default:
      return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shifts of finite type: invariants, cohomology, orbit and flow equivalence"};
  app.require_subcommand(1);
  Flags flags;
  const auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", flags.json, "Emit JSON");
    sub->add_option("--depth", flags.depth, "Maximum cocycle depth");
    sub->add_option("--max-cycle", flags.max_cycle, "Longest periodic orbit checked");
    sub->add_option("--seed", flags.seed, "Seed for sampled points");
  };

  std::string file, second, kind, parts, x, y;
  int vertex = 0;
  std::int64_t degree = 0;
  std::optional<std::int64_t> floor_i, floor_j;

  auto* invariants = app.add_subcommand("invariants", "Smith normal form and determinant of I - A");
  invariants->add_option("sft", file, "Presentation file")->required();
  common(invariants);

  auto* lang = app.add_subcommand("language", "Admissible words of a given length");
  lang->add_option("sft", file)->required();
  lang->add_option("--length", flags.length, "Word length");
  common(lang);

  auto* tower = app.add_subcommand("tower", "Tower over a roof function");
  tower->add_option("sft", file)->required();
  tower->add_option("--f", flags.f, "Roof: const:<c>, table:<w>=<v>,... or a function file")->required();
  tower->add_flag("--check-invariants", flags.check_invariants, "Compare Bowen-Franks data");
  common(tower);

  auto* move = app.add_subcommand("move", "State splitting or head attachment");
  move->add_option("sft", file)->required();
  move->add_option("kind", kind, "out-split, in-split or attach-head")
      ->required()
      ->check(CLI::IsMember({"out-split", "in-split", "attach-head"}));
  move->add_option("vertex", vertex)->required();
  move->add_option("--parts", parts, "Partition such as 0;1 or 0,1;2");
  common(move);

  auto* potential = app.add_subcommand("potential", "Potential or negative cycle for a weight function");
  potential->add_option("sft", file)->required();
  potential->add_option("fn", second, "Function file")->required();
  potential->add_option("--name", flags.name, "Function name in the file");
  common(potential);

  auto* positive = app.add_subcommand("positive", "Decide whether a class is positive");
  positive->add_option("sft", file)->required();
  positive->add_option("fn", second, "Function file")->required();
  positive->add_option("--name", flags.name, "Function name in the file");
  common(positive);

  auto* derive = app.add_subcommand("derive-cocycles", "Least cocycle pairs of an orbit equivalence");
  derive->add_option("oe", file)->required();
  common(derive);

  auto* verify = app.add_subcommand("verify-coe", "Check cocycle identities and least periods");
  verify->add_option("oe", file)->required();
  verify->add_option("pairs", second, "Function file with k, l, k_inv, l_inv (derived when omitted)");
  common(verify);

  const auto claim_flags = [&](CLI::App* sub) {
    sub->add_option("--t-grid", flags.t_grid, "Time grid from:to:step");
    sub->add_option("--samples", flags.samples, "Number of random sample points");
    sub->add_option("--point", flags.points, "Sample point L|M|R@phase (repeatable)");
    sub->add_flag("--scoe", flags.scoe, "Use n = 1 when a strong transfer function exists");
    sub->add_flag("--repair", flags.repair, "Try the least-period repair");
  };
  auto* pipeline = app.add_subcommand("pipeline", "Orbit equivalence to flow equivalence data and claim checks");
  pipeline->add_option("oe", file)->required();
  common(pipeline);
  claim_flags(pipeline);

  auto* claims = app.add_subcommand("verify-claims", "Claim checks on given or sampled points");
  claims->add_option("oe", file)->required();
  common(claims);
  claim_flags(claims);

  auto* groupoid = app.add_subcommand("groupoid-check", "Groupoid element arithmetic");
  groupoid->add_option("sft", file)->required();
  groupoid->add_option("--x", x, "Range point prefix/cycle")->required();
  groupoid->add_option("--y", y, "Source point prefix/cycle")->required();
  groupoid->add_option("--n", degree, "Degree")->required();
  groupoid->add_option("--f", flags.f, "Roof function for the tower image");
  groupoid->add_option("--i", floor_i, "Floor over x");
  groupoid->add_option("--j", floor_j, "Floor over y");
  common(groupoid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*invariants) return cmd_invariants(flags, file);
    if (*lang) return cmd_language(flags, file);
    if (*tower) return cmd_tower(flags, file);
    if (*move) return cmd_move(flags, file, kind, vertex, parts);
    if (*potential) return cmd_potential(flags, file, second);
    if (*positive) return cmd_positive(flags, file, second);
    if (*derive) return cmd_derive(flags, file);
    if (*verify) return cmd_verify_coe(flags, file, second);
    if (*pipeline) return cmd_pipeline(flags, file, false);
    if (*claims) return cmd_pipeline(flags, file, true);
    if (*groupoid) return cmd_groupoid(flags, file, x, y, degree, floor_i, floor_j);
  } catch (const LeastPeriodViolationError& e) {
    const auto& w = e.witness();
    emit(flags,
         {{"error", e.what()},
          {"witness", {{"cycle", format_word(w.cycle)}, {"image_period", w.image_period}, {"orbit_sum", w.orbit_sum}}}},
         std::string(e.what()) + "\n");
    return kFalse;
  } catch (const NotPositiveClassError& e) {
    emit(flags, {{"error", e.what()}, {"cycle", format_word(e.witness().cycle_word)}, {"sum", e.witness().sum}},
         std::string(e.what()) + "\n");
    return kFalse;
  } catch (const Error& e) {
    std::cerr << "sftkit: " << e.what() << "\n";
    return exit_for(e);
  }
  return kInput;
}
