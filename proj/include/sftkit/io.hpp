#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "sftkit/cohomology.hpp"
#include "sftkit/flow.hpp"
#include "sftkit/groupoid.hpp"
#include "sftkit/invariants.hpp"
#include "sftkit/orbit.hpp"
#include "sftkit/pipeline.hpp"

namespace sftkit {

using json = nlohmann::ordered_json;

// Presentation files:
//   sft v1
//   vertices <n>
//   label <v> <name>      (optional)
//   edge <u> <v>
// Blank lines and text after '#' are ignored. Parse failures throw ParseError
// with "<source>:<line>: " in the message.
Presentation parse_presentation(const std::string& text, const std::string& source = "<input>");
std::string format_presentation(const Presentation& P);
Presentation load_presentation(const std::filesystem::path& path);

// Cylinder function files hold one or more blocks
//   fn depth=<d> [name=<name>]
//   <word> <value>
//   * <value>             (every word not listed)
struct NamedFunction {
  std::string name;
  CylinderFunction f;
};

std::vector<NamedFunction> parse_functions(const std::string& text, std::shared_ptr<const Presentation> P,
                                           const std::string& source = "<input>");
std::string format_function(const CylinderFunction& f, const std::string& name = "");
std::vector<NamedFunction> load_functions(const std::filesystem::path& path, std::shared_ptr<const Presentation> P);
// "const:<c>", "table:<word>=<value>,..." or a path to a function file whose
// first block is used.
CylinderFunction function_from_spec(const std::string& spec, std::shared_ptr<const Presentation> P);
// The named block, or the only block when name is empty. Throws ParseError.
const CylinderFunction& find_function(const std::vector<NamedFunction>& fns, const std::string& name,
                                      const std::string& source);

// Orbit equivalence files:
//   oe v1
//   domain <presentation file>
//   codomain <presentation file>
//   map <u> -> <v>           (one per code word, '-' for the empty word)
// or
//   oe v1
//   compose <oe file> <oe file>   (the first is applied first)
// Paths are relative to the directory of the file.
OrbitEquivalence load_orbit_equivalence(const std::filesystem::path& path);
std::string format_prefix_exchange(const std::string& domain, const std::string& codomain,
                                   const std::vector<CodePair>& code);

std::string read_file(const std::filesystem::path& path);

json to_json(const Word& w);
json to_json(const Presentation& P);
json to_json(const CylinderFunction& f);
json to_json(const InvariantReport& r);
json to_json(const WeightedDigraph& W, const NegativeCycleWitness& c);
json to_json(const PositivityCertificate& c);
json to_json(const CocyclePair& p);
json to_json(const COEReport& r);
json to_json(const FlowMapData& D);
json to_json(const ClaimResult& r);
json to_json(const ClaimReport& r);
json to_json(const GroupoidElement& e);

}  // namespace sftkit
