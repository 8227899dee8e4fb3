#include "cdpf/quad/rules.hpp"

#include "cdpf/util/errors.hpp"

namespace cdpf::quad {

UnidimRule unidim_rule(Rule /*rule*/, int level) {
  if (level < 0 || level > kMaxUnidimLevel) {
    throw UnsupportedLevelError(level, kMaxUnidimLevel);
  }
  const std::size_t n = (std::size_t{2} << level) - 1;
  UnidimRule out;
  out.level = level;
  out.nodes.assign(detail::kPattersonNodes[level],
                   detail::kPattersonNodes[level] + n);
  out.weights.assign(detail::kPattersonWeights[level],
                     detail::kPattersonWeights[level] + n);
  return out;
}

}  // namespace cdpf::quad
