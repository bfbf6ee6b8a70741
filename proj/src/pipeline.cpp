// Copyright 2026 The bsa-synth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bsa/pipeline.hpp"

namespace bsa {

CostResult evaluate_cost(const Circuit& logical, const Layout& layout, const std::optional<Mapping>& mapping,
                         const CostOptions& options) {
  CostResult r{canonicalize(rewrite_to_basis(logical, options.basis)), {}, {}, Circuit(1), 0, {}};
  r.initial_mapping = mapping ? *mapping : find_placement(layout, r.native_logical);
  RoutingResult routed = route(r.native_logical, layout, r.initial_mapping);
  r.final_mapping = routed.final_mapping;
  r.swaps = routed.swaps;
  r.physical = canonicalize(rewrite_to_basis(routed.circuit, options.basis));

  const GateCounts swap_counts = count_gates(rewrite_to_basis(Circuit(2, {Gate::swap(0, 1)}), options.basis), options.basis);
  const GateCounts total = count_gates(r.physical, options.basis);
  CostCounts& counts = r.report.counts;
  counts.n1 = total.n1;
  counts.n2 = total.n2 - swap_counts.n2 * r.swaps;
  counts.xc = options.xc_mode == XcMode::Swaps ? r.swaps : 3 * r.swaps;
  counts.d = depth(r.physical);
  r.report.weights = options.weights;
  r.report.wtqc = wtqc(counts, options.weights);
  return r;
}

}  // namespace bsa
