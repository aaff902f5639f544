#include "sumfree/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace sumfree {

using ordered_json = nlohmann::ordered_json;

int decimal_digits(mpfr_prec_t precision_bits) {
    return std::max(6, static_cast<int>(std::floor(static_cast<double>(precision_bits - 8) * std::log10(2.0))));
}

std::string census_json(const AbelianGroup& g, const BigCount& total, const MinKBreakdown* breakdown) {
    ordered_json j;
    j["group"] = g.name();
    j["N"] = g.order();
    j["total"] = total.to_string();
    if (breakdown != nullptr) {
        ordered_json by_k = ordered_json::object();
        for (std::size_t k = 0; k < breakdown->counts.size(); ++k) by_k[std::to_string(k)] = breakdown->counts[k].to_string();
        j["by_min_k"] = std::move(by_k);
        j["k0_formula"] = k0_formula(g.order()).to_string();
        j["k1_formula"] = k1_formula(g.order()).to_string();
    }
    return j.dump(2) + "\n";
}

std::string census_csv(const AbelianGroup& g, const BigCount& total, const MinKBreakdown* breakdown) {
    std::ostringstream out;
    out << "group,N,k,count\n";
    out << g.name() << ',' << g.order() << ",total," << total << '\n';
    if (breakdown != nullptr) {
        for (std::size_t k = 0; k < breakdown->counts.size(); ++k) {
            out << g.name() << ',' << g.order() << ',' << k << ',' << breakdown->counts[k] << '\n';
        }
    }
    return out.str();
}

std::string census_text(const AbelianGroup& g, const BigCount& total, const MinKBreakdown* breakdown) {
    std::ostringstream out;
    out << "group " << g.name() << "  N=" << g.order() << "\n";
    out << "total " << total << "\n";
    if (breakdown != nullptr) {
        for (std::size_t k = 0; k < breakdown->counts.size(); ++k) out << "  min=" << k << "  " << breakdown->counts[k] << "\n";
        out << "k0 formula " << k0_formula(g.order()) << "\n";
        out << "k1 formula " << k1_formula(g.order()) << "\n";
    }
    return out.str();
}

namespace {

std::string rational_text(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

ordered_json to_json(const BoundReport& r) {
    const int digits = decimal_digits(r.precision);
    ordered_json j;
    j["theorem"] = r.theorem;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = std::move(params);
    j["direction"] = to_string(r.direction);
    j["precision_bits"] = r.precision;
    j["digits"] = digits;
    ordered_json terms = ordered_json::array();
    for (const auto& t : r.terms) {
        ordered_json row;
        row["label"] = t.label;
        row["base"] = t.base_expression;
        row["base_decimal"] = t.base.lower_string(digits);
        row["exponent"] = rational_text(t.exponent);
        row["coefficient"] = t.coefficient_expression;
        row["coefficient_value"] = t.coefficient.lower_string(digits);
        row["value_lo"] = t.value.lower_string(digits);
        row["value_hi"] = t.value.upper_string(digits);
        row["asymptotic"] = t.asymptotic;
        terms.push_back(std::move(row));
    }
    j["terms"] = std::move(terms);
    j["total_lo"] = r.total.lower_string(digits);
    j["total_hi"] = r.total.upper_string(digits);
    return j;
}

}  // namespace

std::string bound_report_json(const BoundReport& r) { return to_json(r).dump(2) + "\n"; }

std::string bound_reports_json(const std::vector<BoundReport>& reports, const std::optional<BigCount>& exact_census) {
    ordered_json j;
    ordered_json list = ordered_json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    j["reports"] = std::move(list);
    if (exact_census) j["exact_census"] = exact_census->to_string();
    return j.dump(2) + "\n";
}

std::string bound_report_csv(const BoundReport& r, bool header) {
    const int digits = decimal_digits(r.precision);
    std::ostringstream out;
    if (header) out << "direction,label,base,base_decimal,exponent,coefficient,value_lo,value_hi,asymptotic,digits\n";
    for (const auto& t : r.terms) {
        out << to_string(r.direction) << ',' << t.label << ',' << t.base_expression << ',' << t.base.lower_string(digits) << ',' << rational_text(t.exponent)
            << ',' << t.coefficient_expression << ',' << t.value.lower_string(digits) << ',' << t.value.upper_string(digits)
            << ',' << (t.asymptotic ? "true" : "false") << ',' << digits << '\n';
    }
    return out.str();
}

std::string bound_report_text(const BoundReport& r) {
    std::ostringstream out;
    out << "theorem " << r.theorem << " (" << to_string(r.direction) << ")";
    for (const auto& [k, v] : r.parameters) out << "  " << k << "=" << v;
    out << "\n";
    std::size_t width = 5;
    for (const auto& t : r.terms) width = std::max(width, t.label.size());
    for (const auto& t : r.terms) {
        out << "  " << std::left << std::setw(static_cast<int>(width)) << t.label << "  " << std::setw(18)
            << t.base_expression << " ~" << std::setprecision(6) << std::fixed << t.base.mid_double() << "  value ~"
            << std::scientific << std::setprecision(6) << t.value.mid_double() << (t.asymptotic ? "  (1+o(1))" : "")
            << std::defaultfloat << "\n";
    }
    out << "  " << std::left << std::setw(static_cast<int>(width)) << "total" << "  value ~" << std::scientific
        << std::setprecision(6) << r.total.mid_double() << std::defaultfloat << "\n";
    return out.str();
}

}  // namespace sumfree
