#pragma once

#include <string>
#include <string_view>

#include "rquant/catalog.hpp"
#include "rquant/quantize.hpp"
#include "rquant/series.hpp"
#include "rquant/verify.hpp"

namespace rquant {

// Operator series documents:
//   {"dim": d, "order": N, "params": [...],
//    "coeffs": [[{"i":..,"j":..,"k":..,"l":..,"c":"<poly>"}, ...], ...]}
// coeffs[n] lists the nonzero entries of the h^n coefficient in (i, j, k, l)
// order; omitted entries are zero. "params" is the ordered parameter
// universe the polynomial strings are written against. Export followed by
// import and export reproduces the text exactly.

[[nodiscard]] std::string series_to_json(const HSeries& series);
/// Throws std::invalid_argument on malformed documents.
[[nodiscard]] HSeries series_from_json(std::string_view text);

/// An Op2 is written as an order-0 document.
[[nodiscard]] std::string op2_to_json(const Op2& op);
[[nodiscard]] Op2 op2_from_json(std::string_view text);

/// A classical r-matrix is written as an order-1 document whose h^0 slot is
/// empty. On import the h^0 slot is ignored and coeffs[1] is taken.
[[nodiscard]] std::string classical_to_json(const ClassicalR& r);
[[nodiscard]] ClassicalR classical_from_json(std::string_view text);

/// {"identity": .., "is_zero": .., "nonzero_entries": .., "witnesses": [{"index": [..], "value": ".."}]}
[[nodiscard]] std::string report_to_json(const ResidualReport& report);

[[nodiscard]] std::string quantization_to_json(const QuantizationResult& result);
[[nodiscard]] std::string membership_to_json(const MembershipResult& membership);
[[nodiscard]] std::string parameter_report_to_json(const ParameterReport& report);

}  // namespace rquant
