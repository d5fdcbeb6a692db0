#include "lcc/analysis.hpp"

#include <stdexcept>

namespace lcc {

SweepResult sweep_b(const CodeSpec& spec, const ExactOptions& options) {
  CodeSpec normalized = validate_and_normalize(spec);
  normalized.b = 0;
  const ResidueCode code = to_residue_code(normalized);

  const GroupRingTable table = build_exact_table(code, options);

  SweepResult result;
  result.spec = normalized;
  result.rows.reserve(code.m);
  std::vector<BigInt> totals(code.n + 1);
  for (std::uint64_t r = 0; r < code.m; ++r) {
    SweepRow row;
    row.b = r;
    row.enumerator = table.row(r);
    row.size = row.enumerator.size();
    for (std::size_t w = 0; w <= code.n; ++w) totals[w] += row.enumerator[w];
    result.rows.push_back(std::move(row));
  }
  result.totals = WeightEnumerator(std::move(totals));
  if (result.totals != unconstrained_enumerator(code.n, code.q)) {
    throw std::logic_error("sweep totals differ from (1 + (q-1) z)^n");
  }
  return result;
}

CrossCheckReport cross_check(const CodeSpec& spec, const std::vector<Engine>& engines,
                             const EngineOptions& options) {
  if (engines.empty()) throw std::invalid_argument("cross_check needs at least one engine");
  CrossCheckReport out;
  for (auto engine : engines) {
    out.reports.push_back(enumerate(spec, engine, options));
    if (engine == Engine::dft) out.dft_residual = out.reports.back().residual;
  }
  const auto& reference = out.reports.front();
  for (std::size_t i = 1; i < out.reports.size(); ++i) {
    auto diff = reference.enumerator.first_difference(out.reports[i].enumerator);
    if (diff) {
      out.agree = false;
      out.disagreeing = {reference.engine, out.reports[i].engine};
      out.first_difference = diff;
      break;
    }
  }
  return out;
}

}  // namespace lcc
