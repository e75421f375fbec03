#include "rquant/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace rquant {

namespace {

using json = nlohmann::ordered_json;

json series_document(const std::vector<Op2>& coeffs, std::size_t first_written) {
  const std::size_t d = coeffs.front().dim();
  Universe u = empty_universe();
  for (std::size_t n = first_written; n < coeffs.size(); ++n) u = merge_universes(u, coeffs[n].universe());

  json doc;
  doc["dim"] = d;
  doc["order"] = coeffs.size() - 1;
  doc["params"] = *u;
  json all = json::array();
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    json entries = json::array();
    if (n >= first_written) {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          for (std::size_t k = 0; k < d; ++k) {
            for (std::size_t l = 0; l < d; ++l) {
              const Poly& c = coeffs[n].at(i, j, k, l);
              if (c.is_zero()) continue;
              entries.push_back(json{{"i", i}, {"j", j}, {"k", k}, {"l", l}, {"c", c.with_universe(u).str()}});
            }
          }
        }
      }
    }
    all.push_back(std::move(entries));
  }
  doc["coeffs"] = std::move(all);
  return doc;
}

std::size_t read_index(const json& entry, const char* key, std::size_t dim) {
  if (!entry.contains(key) || !entry[key].is_number_unsigned()) {
    throw std::invalid_argument(std::string("series JSON: entry needs a non-negative integer '") + key + "'");
  }
  const auto v = entry[key].get<std::size_t>();
  if (v >= dim) throw std::invalid_argument(std::string("series JSON: index '") + key + "' out of range");
  return v;
}

std::vector<Op2> parse_series(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("series JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("order") || !doc.contains("coeffs")) {
    throw std::invalid_argument("series JSON: expected an object with dim, order and coeffs");
  }
  if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0) {
    throw std::invalid_argument("series JSON: dim must be a positive integer");
  }
  if (!doc["order"].is_number_unsigned()) throw std::invalid_argument("series JSON: order must be a non-negative integer");
  const auto dim = doc["dim"].get<std::size_t>();
  const auto order = doc["order"].get<std::size_t>();
  const json& all = doc["coeffs"];
  if (!all.is_array() || all.size() != order + 1) {
    throw std::invalid_argument("series JSON: coeffs must hold order + 1 lists");
  }

  Universe universe;
  if (doc.contains("params")) {
    if (!doc["params"].is_array()) throw std::invalid_argument("series JSON: params must be an array of names");
    std::vector<std::string> names;
    for (const auto& name : doc["params"]) {
      if (!name.is_string()) throw std::invalid_argument("series JSON: params must be an array of names");
      names.push_back(name.get<std::string>());
    }
    universe = make_universe(std::move(names));
  }

  std::vector<Op2> coeffs(order + 1, Op2(dim));
  for (std::size_t n = 0; n <= order; ++n) {
    if (!all[n].is_array()) throw std::invalid_argument("series JSON: each coefficient must be a list of entries");
    for (const auto& entry : all[n]) {
      if (!entry.is_object() || !entry.contains("c") || !entry["c"].is_string()) {
        throw std::invalid_argument("series JSON: entry needs a string 'c'");
      }
      const std::size_t i = read_index(entry, "i", dim);
      const std::size_t j = read_index(entry, "j", dim);
      const std::size_t k = read_index(entry, "k", dim);
      const std::size_t l = read_index(entry, "l", dim);
      coeffs[n].at(i, j, k, l) += Poly::parse(entry["c"].get<std::string>(), universe);
    }
  }
  if (!universe) {
    Universe u = empty_universe();
    for (const auto& c : coeffs) u = merge_universes(u, c.universe());
    universe = u;
  }
  for (auto& c : coeffs) c = c.map([&universe](const Poly& p) { return p.with_universe(universe); });
  return coeffs;
}

json witness_list(const std::vector<Witness>& witnesses) {
  json out = json::array();
  for (const auto& w : witnesses) out.push_back(json{{"index", w.index}, {"value", w.value.str()}});
  return out;
}

}  // namespace

std::string series_to_json(const HSeries& series) { return series_document(series.coeffs(), 0).dump(); }

HSeries series_from_json(std::string_view text) { return HSeries(parse_series(text)); }

std::string op2_to_json(const Op2& op) { return series_document({op}, 0).dump(); }

Op2 op2_from_json(std::string_view text) {
  auto coeffs = parse_series(text);
  if (coeffs.size() != 1) throw std::invalid_argument("operator JSON: expected order 0");
  return coeffs.front();
}

std::string classical_to_json(const ClassicalR& r) {
  return series_document({Op2(r.dim()), r.op}, 1).dump();
}

ClassicalR classical_from_json(std::string_view text) {
  auto coeffs = parse_series(text);
  if (coeffs.size() < 2) throw std::invalid_argument("classical r JSON: expected order >= 1");
  return ClassicalR{coeffs[1]};
}

std::string report_to_json(const ResidualReport& report) {
  json doc;
  doc["identity"] = report.identity;
  doc["is_zero"] = report.is_zero;
  doc["nonzero_entries"] = report.nonzero_entries;
  doc["witnesses"] = witness_list(report.witnesses);
  return doc.dump();
}

std::string quantization_to_json(const QuantizationResult& result) {
  json doc;
  doc["dim"] = result.series.dim();
  doc["order"] = result.series.order();
  doc["constraints"] = json{{"braid", true},
                            {"involution", result.constraints.involution},
                            {"mirror", result.constraints.mirror},
                            {"lookahead", result.constraints.lookahead}};
  doc["obstruction_free"] = result.obstruction_free();
  doc["stopped_early"] = result.stopped_early;
  doc["total_new_parameters"] = result.total_new_parameters;
  json records = json::array();
  for (const auto& rec : result.per_order) {
    json obstructions = json::array();
    for (const auto& p : rec.obstructions) obstructions.push_back(p.str());
    records.push_back(json{{"order", rec.order},
                           {"equations", rec.equations},
                           {"rank", rec.rank},
                           {"kernel_dim", rec.kernel_dim},
                           {"new_parameters", rec.new_parameters},
                           {"obstructions", std::move(obstructions)}});
  }
  doc["per_order"] = std::move(records);
  doc["series"] = series_document(result.series.coeffs(), 0);
  return doc.dump();
}

std::string membership_to_json(const MembershipResult& membership) {
  json doc;
  doc["member"] = membership.member;
  json bindings = json::object();
  for (const auto& [name, value] : membership.bindings) bindings[name] = value.str();
  doc["bindings"] = std::move(bindings);
  if (!membership.member) {
    doc["witness"] = json{{"index", membership.witness_index}, {"value", membership.witness_value.str()}};
    doc["reason"] = membership.reason;
  }
  return doc.dump();
}

std::string parameter_report_to_json(const ParameterReport& report) {
  json doc;
  doc["dim"] = report.dim;
  doc["constraints"] = report.constraint_label;
  doc["order_reached"] = report.order_reached;
  doc["per_order_counts"] = report.per_order_counts;
  doc["total_new_parameters"] = report.total_new_parameters;
  doc["conjectured"] = report.conjectured ? json(*report.conjectured) : json(nullptr);
  doc["agrees"] = report.agrees;
  doc["obstruction_free"] = report.obstruction_free;
  return doc.dump();
}

}  // namespace rquant
