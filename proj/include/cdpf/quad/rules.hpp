#pragma once

#include <vector>

namespace cdpf::quad {

// Nested quadrature family on (-1,1).  Both selectable rules resolve to the
// same embedded tables: iterating Kronrod's optimal-degree extension from the
// midpoint rule reproduces Patterson's sequence, so the nested Gauss-Kronrod
// family and the Gauss-Patterson family coincide node-for-node.
enum class Rule { kGaussPatterson, kGaussKronrod };

inline constexpr int kMaxUnidimLevel = 8;

// One member of the nested family: level l has 2^(l+1)-1 nodes and the node
// set of level l is contained in that of level l+1.
struct UnidimRule {
  int level = 0;
  std::vector<double> nodes;    // ascending, interior to (-1,1)
  std::vector<double> weights;  // sum to 2
};

// Throws UnsupportedLevelError above kMaxUnidimLevel.
UnidimRule unidim_rule(Rule rule, int level);

namespace detail {
extern const double* kPattersonNodes[];
extern const double* kPattersonWeights[];
}  // namespace detail

}  // namespace cdpf::quad
