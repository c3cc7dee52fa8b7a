#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "sftkit/cylinder_function.hpp"
#include "sftkit/error.hpp"

namespace sftkit {

struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  Value weight = 0;
  Word label;  // the (m+1)-block for transition graphs, empty otherwise
};

struct WeightedDigraph {
  std::size_t node_count = 0;
  std::vector<Arc> arcs;
  std::vector<Word> node_labels;  // the m-blocks for transition graphs
  std::size_t block_length = 0;
};

// kappa with weight(a) + kappa(from(a)) - kappa(to(a)) >= 0 on every arc.
struct Potential {
  std::vector<Value> kappa;
};

struct NegativeCycleWitness {
  std::vector<std::size_t> arcs;  // indices into the graph's arcs, in path order
  Value sum = 0;
  // For transition graphs: the closed word c whose periodic point c^inf has
  // orbit sum `sum`.
  Word cycle_word;
};

std::variant<Potential, NegativeCycleWitness> find_potential(const WeightedDigraph& W);
bool potential_valid(const WeightedDigraph& W, const Potential& p);
bool witness_valid(const WeightedDigraph& W, const NegativeCycleWitness& c);

// Nodes are the admissible m-blocks and arcs the (m+1)-blocks, m =
// max(depth(f) - 1, 1), weighted by f.
WeightedDigraph transition_graph(const CylinderFunction& f);

// f = n + b - b o sigma with n >= 0.
struct PositivityCertificate {
  CylinderFunction b;
  CylinderFunction n;
};

bool certificate_valid(const CylinderFunction& f, const PositivityCertificate& c);

std::variant<PositivityCertificate, NegativeCycleWitness> class_is_positive(const CylinderFunction& f);

class NotPositiveClassError : public Error {
 public:
  explicit NotPositiveClassError(NegativeCycleWitness w)
      : Error(ErrorKind::NotPositiveClass,
              "periodic orbit " + format_word(w.cycle_word) + " has sum " + std::to_string(w.sum)),
        witness_(std::move(w)) {}
  const NegativeCycleWitness& witness() const { return witness_; }

 private:
  NegativeCycleWitness witness_;
};

struct Decomposition {
  CylinderFunction n;
  CylinderFunction b;
  Value shift = 0;  // constant added to the certificate's b
};

// The certificate (n, b) with b shifted by the least constant making
// b >= lower_bound pointwise (default lower bound 0). Throws
// NotPositiveClassError.
Decomposition decompose_positive(const CylinderFunction& f,
                                 const std::optional<CylinderFunction>& lower_bound = std::nullopt);

// Some b of depth at most max_depth with g = b - b o sigma, if one exists.
std::optional<CylinderFunction> solve_coboundary(const CylinderFunction& g, std::size_t max_depth);

}  // namespace sftkit
