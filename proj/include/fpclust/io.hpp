#pragma once

#include <string>
#include <string_view>

#include "fpclust/fingerprint.hpp"
#include "fpclust/gen.hpp"
#include "fpclust/objectives.hpp"
#include "fpclust/partition.hpp"

namespace fpclust {

/// One fingerprint per line over {0,1,N}; '#' lines and blank lines are
/// ignored; all data lines must share a length. Index order is file order.
/// Errors report 1-based line and column.
Instance parse_instance(std::string_view text, std::string name = {});
std::string emit_instance(const Instance& inst);

/// First non-comment line "n m", then m lines "u v" with 0-based vertex ids.
CubicGraph parse_cubic_graph(std::string_view text);
std::string emit_cubic_graph(const CubicGraph& graph);

/// Partition JSON: {"clusters":[{"members":[...],"witness":"01..."},...],
/// "evaluation":{...}}. Clusters are emitted in canonical order (by smallest
/// member); output is byte-stable for identical inputs.
std::string emit_partition(const Partition& part, const Evaluation& eval);
Partition parse_partition(std::string_view json_text);

std::string emit_certificate(const GadgetCertificate& cert);

}  // namespace fpclust
