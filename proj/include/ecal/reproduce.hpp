#pragma once

// Report builders shared by the CLI, plus the named reproduction targets
// that regenerate the reference tables and figure data.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ecal/carbon.hpp"
#include "ecal/lifecycle.hpp"
#include "ecal/report.hpp"

namespace ecal {

// quantity,value rows for a full lifecycle evaluation.
ReportTable lifecycle_table(const LifecycleReport& report);

ReportTable gamma_sweep_table(const std::vector<GammaRow>& rows);

ReportTable carbon_table(const CarbonReport& report);

// B_T and E_T of one scenario-sized payload on the scenario's technology with
// its F_U, P_T and R_T kept and the overhead set to each percentage of F_U.
ReportTable overhead_sweep_table(const Scenario& s, const std::vector<double>& overhead_pct);

// Preprocessing FLOPs and energy for the scenario's sample count at each invalid-sample count.
ReportTable invalid_sample_sweep_table(const Scenario& s, const std::vector<std::uint64_t>& n_nan);

struct ReproduceOptions {
  bool strict_eq2 = false;        // drop packet overrides from the built-in profiles
  CarbonIntensityTable ci = bundled_ci_2023();
};

// table1 table2 fig2 fig4 fig5 fig6 fig7 fig8 fig9ab fig11 fig12 table3 fig13
const std::vector<std::string>& reproduce_targets();

// Throws LookupError listing the valid targets for an unknown name.
ReportTable reproduce(std::string_view target, const ReproduceOptions& options = {});

}  // namespace ecal
