#include "sftkit/io.hpp"

#include <fstream>
#include <sstream>

#include "sftkit/error.hpp"

namespace sftkit {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

Error parse_error(const std::string& source, std::size_t line, const std::string& message) {
  return Error(ErrorKind::ParseError, source + ":" + std::to_string(line) + ": " + message);
}

long long to_integer(const std::string& token, const std::string& source, std::size_t line) {
  try {
    std::size_t used = 0;
    const auto v = std::stoll(token, &used);
    if (used == token.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw parse_error(source, line, "expected an integer, got '" + token + "'");
}

void expect_header(const std::vector<Line>& lines, const std::string& kind, const std::string& source) {
  if (lines.empty() || lines.front().tokens != std::vector<std::string>{kind, "v1"}) {
    throw parse_error(source, lines.empty() ? 1 : lines.front().number, "expected header '" + kind + " v1'");
  }
}

// key=value attributes after the keyword.
std::map<std::string, std::string> attributes(const Line& line, const std::string& source) {
  std::map<std::string, std::string> out;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    const auto eq = line.tokens[i].find('=');
    if (eq == std::string::npos) throw parse_error(source, line.number, "expected key=value, got '" + line.tokens[i] + "'");
    out[line.tokens[i].substr(0, eq)] = line.tokens[i].substr(eq + 1);
  }
  return out;
}

Word word_at(const std::string& token, const std::string& source, std::size_t line) {
  try {
    return parse_word(token);
  } catch (const Error& e) {
    throw parse_error(source, line, e.what());
  }
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Presentation parse_presentation(const std::string& text, const std::string& source) {
  const auto lines = tokenize(text);
  expect_header(lines, "sft", source);
  std::optional<std::size_t> n;
  Matrix A;
  std::vector<std::string> labels;
  bool custom_labels = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, t] = lines[i];
    if (t[0] == "vertices" && t.size() == 2) {
      if (n) throw parse_error(source, number, "duplicate 'vertices' line");
      const auto v = to_integer(t[1], source, number);
      if (v <= 0) throw parse_error(source, number, "vertex count must be positive");
      n = static_cast<std::size_t>(v);
      A.assign(*n, std::vector<int>(*n, 0));
      for (std::size_t k = 0; k < *n; ++k) labels.push_back(std::to_string(k));
      continue;
    }
    if (!n) throw parse_error(source, number, "'vertices' must come first");
    const auto vertex = [&](const std::string& tok) {
      const auto v = to_integer(tok, source, number);
      if (v < 0 || static_cast<std::size_t>(v) >= *n) throw parse_error(source, number, "no vertex " + tok);
      return static_cast<std::size_t>(v);
    };
    if (t[0] == "edge" && t.size() == 3) {
      A[vertex(t[1])][vertex(t[2])] = 1;
    } else if (t[0] == "label" && t.size() == 3) {
      labels[vertex(t[1])] = t[2];
      custom_labels = true;
    } else {
      throw parse_error(source, number, "unrecognized line '" + t[0] + "'");
    }
  }
  if (!n) throw parse_error(source, lines.front().number, "missing 'vertices' line");
  try {
    return build_presentation(A, custom_labels ? labels : std::vector<std::string>{});
  } catch (const Error& e) {
    throw Error(e.kind(), source + ": " + e.what());
  }
}

std::string format_presentation(const Presentation& P) {
  std::ostringstream out;
  out << "sft v1\nvertices " << P.vertex_count() << "\n";
  for (std::size_t v = 0; v < P.vertex_count(); ++v) {
    if (P.labels()[v] != std::to_string(v)) out << "label " << v << " " << P.labels()[v] << "\n";
  }
  for (std::size_t v = 0; v < P.vertex_count(); ++v) {
    for (Symbol w : P.successors(static_cast<Symbol>(v))) out << "edge " << v << " " << w << "\n";
  }
  return out.str();
}

Presentation load_presentation(const std::filesystem::path& path) {
  return parse_presentation(read_file(path), path.string());
}

std::vector<NamedFunction> parse_functions(const std::string& text, std::shared_ptr<const Presentation> P,
                                           const std::string& source) {
  const auto lines = tokenize(text);
  std::vector<NamedFunction> out;
  std::size_t i = 0;
  while (i < lines.size()) {
    const auto& head = lines[i];
    if (head.tokens[0] != "fn") throw parse_error(source, head.number, "expected 'fn depth=<d>'");
    const auto attrs = attributes(head, source);
    const auto depth_it = attrs.find("depth");
    if (depth_it == attrs.end()) throw parse_error(source, head.number, "missing depth=");
    const auto depth = to_integer(depth_it->second, source, head.number);
    if (depth < 0) throw parse_error(source, head.number, "depth must be non-negative");
    const auto name_it = attrs.find("name");
    std::map<Word, Value> table;
    std::optional<Value> fallback;
    for (++i; i < lines.size() && lines[i].tokens[0] != "fn"; ++i) {
      const auto& [number, t] = lines[i];
      if (t.size() != 2) throw parse_error(source, number, "expected '<word> <value>'");
      const Value v = to_integer(t[1], source, number);
      if (t[0] == "*") {
        fallback = v;
        continue;
      }
      if (!table.emplace(word_at(t[0], source, number), v).second) {
        throw parse_error(source, number, "duplicate word " + t[0]);
      }
    }
    if (fallback) {
      for (const auto& w : language(*P, std::max<std::size_t>(static_cast<std::size_t>(depth), 1))) {
        table.emplace(w, *fallback);
      }
    }
    try {
      out.push_back({name_it == attrs.end() ? std::string() : name_it->second,
                     CylinderFunction::from_table(P, static_cast<std::size_t>(depth), table)});
    } catch (const Error& e) {
      throw parse_error(source, head.number, e.what());
    }
  }
  if (out.empty()) throw parse_error(source, 1, "no 'fn' block");
  return out;
}

std::string format_function(const CylinderFunction& f, const std::string& name) {
  std::ostringstream out;
  out << "fn depth=" << f.depth();
  if (!name.empty()) out << " name=" << name;
  out << "\n";
  if (f.depth() == 0) {
    out << "* " << f.table().begin()->second << "\n";
    return out.str();
  }
  for (const auto& [w, v] : f.table()) out << format_word(w) << " " << v << "\n";
  return out.str();
}

std::vector<NamedFunction> load_functions(const std::filesystem::path& path, std::shared_ptr<const Presentation> P) {
  return parse_functions(read_file(path), std::move(P), path.string());
}

CylinderFunction function_from_spec(const std::string& spec, std::shared_ptr<const Presentation> P) {
  if (spec.rfind("const:", 0) == 0) {
    return CylinderFunction::constant(P, to_integer(spec.substr(6), "--f", 1));
  }
  if (spec.rfind("table:", 0) == 0) {
    std::map<Word, Value> table;
    std::size_t depth = 0;
    std::istringstream in(spec.substr(6));
    for (std::string item; std::getline(in, item, ',');) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw parse_error("--f", 1, "expected <word>=<value>, got '" + item + "'");
      const auto w = word_at(item.substr(0, eq), "--f", 1);
      depth = std::max(depth, w.size());
      table[w] = to_integer(item.substr(eq + 1), "--f", 1);
    }
    try {
      return CylinderFunction::from_table(P, depth, table);
    } catch (const Error& e) {
      throw parse_error("--f", 1, e.what());
    }
  }
  return load_functions(spec, P).front().f;
}

const CylinderFunction& find_function(const std::vector<NamedFunction>& fns, const std::string& name,
                                      const std::string& source) {
  if (name.empty()) {
    if (fns.size() == 1) return fns.front().f;
    throw Error(ErrorKind::ParseError, source + ": several functions present, a name is required");
  }
  for (const auto& f : fns) {
    if (f.name == name) return f.f;
  }
  throw Error(ErrorKind::ParseError, source + ": no function named '" + name + "'");
}

OrbitEquivalence load_orbit_equivalence(const std::filesystem::path& path) {
  const auto source = path.string();
  const auto lines = tokenize(read_file(path));
  expect_header(lines, "oe", source);
  const auto dir = path.parent_path();
  std::shared_ptr<const Presentation> X, Y;
  std::vector<CodePair> code;
  std::optional<OrbitEquivalence> composed;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, t] = lines[i];
    if (t[0] == "domain" && t.size() == 2) {
      X = share(load_presentation(dir / t[1]));
    } else if (t[0] == "codomain" && t.size() == 2) {
      Y = share(load_presentation(dir / t[1]));
    } else if (t[0] == "map" && t.size() == 4 && t[2] == "->") {
      code.push_back({word_at(t[1], source, number), word_at(t[3], source, number)});
    } else if (t[0] == "compose" && t.size() == 3) {
      if (composed) throw parse_error(source, number, "only one 'compose' line is allowed");
      composed = compose(load_orbit_equivalence(dir / t[1]), load_orbit_equivalence(dir / t[2]));
    } else {
      throw parse_error(source, number, "unrecognized line '" + t[0] + "'");
    }
  }
  if (composed) {
    if (X || Y || !code.empty()) throw parse_error(source, 1, "'compose' cannot be mixed with maps");
    return *composed;
  }
  if (!X || !Y) throw parse_error(source, 1, "domain and codomain are required");
  if (code.empty()) throw parse_error(source, 1, "no 'map' lines");
  return prefix_exchange_equivalence(X, Y, code);
}

std::string format_prefix_exchange(const std::string& domain, const std::string& codomain,
                                   const std::vector<CodePair>& code) {
  std::ostringstream out;
  out << "oe v1\ndomain " << domain << "\ncodomain " << codomain << "\n";
  for (const auto& c : code) out << "map " << format_word(c.from) << " -> " << format_word(c.to) << "\n";
  return out.str();
}

json to_json(const Word& w) { return format_word(w); }

json to_json(const Presentation& P) {
  json edges = json::array();
  for (std::size_t v = 0; v < P.vertex_count(); ++v) {
    for (Symbol w : P.successors(static_cast<Symbol>(v))) edges.push_back({v, w});
  }
  return {{"vertices", P.vertex_count()}, {"labels", P.labels()}, {"edges", edges}};
}

json to_json(const CylinderFunction& f) {
  json table = json::object();
  for (const auto& [w, v] : f.table()) table[format_word(w)] = v;
  return {{"depth", f.depth()}, {"table", table}};
}

json to_json(const InvariantReport& r) { return {{"snf", r.snf_diagonal}, {"det", r.determinant}}; }

json to_json(const WeightedDigraph& W, const NegativeCycleWitness& c) {
  json arcs = json::array();
  for (auto a : c.arcs) arcs.push_back(format_word(W.arcs[a].label));
  return {{"cycle", format_word(c.cycle_word)}, {"sum", c.sum}, {"arcs", arcs}};
}

json to_json(const PositivityCertificate& c) { return {{"b", to_json(c.b)}, {"n", to_json(c.n)}}; }

json to_json(const CocyclePair& p) { return {{"depth", p.depth()}, {"k", to_json(p.k)}, {"l", to_json(p.l)}}; }

namespace {

json to_json(const LeastPeriodResult& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"cycle", format_word(w.cycle)},
                         {"image_period", w.image_period},
                         {"orbit_sum", w.orbit_sum},
                         {"ok", w.ok}});
  }
  return {{"preserving", r.preserving}, {"orbits", witnesses}};
}

}  // namespace

json to_json(const COEReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"equation", f.equation},
                        {"cylinder", format_word(f.cylinder)},
                        {"point", format_point(f.point)},
                        {"k", f.k},
                        {"l", f.l},
                        {"lhs", format_point(f.lhs)},
                        {"rhs", format_point(f.rhs)}});
  }
  json unresolved = json::array();
  for (const auto& w : r.unresolved) unresolved.push_back(format_word(w));
  return {{"verified", r.verified},
          {"inconclusive", r.inconclusive},
          {"depth", r.depth},
          {"inverse_depth", r.inverse_depth},
          {"least_period", to_json(r.least_period)},
          {"inverse_least_period", to_json(r.inverse_least_period)},
          {"strongly_coe", r.scoe_b ? to_json(*r.scoe_b) : json(nullptr)},
          {"failures", failures},
          {"unresolved", unresolved}};
}

json to_json(const FlowMapData& D) {
  return {{"forward", D.h.forward.description()},
          {"inverse", D.h.inverse.description()},
          {"pair", to_json(D.pair)},
          {"inverse_pair", to_json(D.inverse_pair)},
          {"n", to_json(D.n)},
          {"b", to_json(D.b)},
          {"b_shift", D.b_shift},
          {"inverse_n", to_json(D.inverse_n)},
          {"inverse_b", to_json(D.inverse_b)},
          {"inverse_b_shift", D.inverse_b_shift},
          {"strongly_coe", D.strongly_coe}};
}

json to_json(const ClaimResult& r) {
  return {{"claim", r.claim}, {"point", r.point}, {"parameters", r.parameters}, {"pass", r.pass},
          {"inconclusive", r.inconclusive}, {"lhs", r.lhs}, {"rhs", r.rhs}};
}

json to_json(const ClaimReport& r) {
  json by_claim = json::object();
  for (const auto& c : r.results) {
    if (!by_claim.contains(c.claim)) by_claim[c.claim] = json::array();
    by_claim[c.claim].push_back(to_json(c));
  }
  json summary = json::object();
  for (const auto& [claim, items] : by_claim.items()) {
    std::size_t pass = 0;
    for (const auto& item : items) pass += item["pass"].get<bool>() ? 1 : 0;
    summary[claim] = {{"checked", items.size()}, {"passed", pass}};
  }
  return {{"passed", r.passed()},
          {"inconclusive", r.inconclusive()},
          {"failures", r.failure_count()},
          {"summary", summary},
          {"claims", by_claim}};
}

json to_json(const GroupoidElement& e) {
  return {{"x", format_point(e.x)}, {"n", e.n}, {"y", format_point(e.y)}, {"i", e.i}, {"j", e.j}};
}

}  // namespace sftkit
