#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sumfree/bigcount.hpp"
#include "sumfree/bounds.hpp"
#include "sumfree/census.hpp"
#include "sumfree/group.hpp"

namespace sumfree {

/// Significant decimal digits printed for an interval computed at the given precision.
int decimal_digits(mpfr_prec_t precision_bits);

/// {group, N, total, by_min_k}; counts are decimal strings. With a breakdown, the closed
/// forms k0_formula(N) and k1_formula(N) are reported next to the exact slices.
std::string census_json(const AbelianGroup& g, const BigCount& total, const MinKBreakdown* breakdown = nullptr);
/// Rows "group,N,k,count" with k = "total" first.
std::string census_csv(const AbelianGroup& g, const BigCount& total, const MinKBreakdown* breakdown = nullptr);
std::string census_text(const AbelianGroup& g, const BigCount& total, const MinKBreakdown* breakdown = nullptr);

std::string bound_report_json(const BoundReport& r);
/// {"reports": [...], "exact_census": "..."} for one or more reports of the same theorem.
std::string bound_reports_json(const std::vector<BoundReport>& reports,
                               const std::optional<BigCount>& exact_census = std::nullopt);
/// One row per term: direction, label, base, base_decimal, exponent, coefficient, value_lo,
/// value_hi, asymptotic, digits. With header unless header = false.
std::string bound_report_csv(const BoundReport& r, bool header = true);
std::string bound_report_text(const BoundReport& r);

}  // namespace sumfree
