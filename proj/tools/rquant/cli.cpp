#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "notation.hpp"
#include "rquant/catalog.hpp"
#include "rquant/json_io.hpp"
#include "rquant/quantize.hpp"
#include "rquant/verify.hpp"

namespace rquant::cli {

namespace {

using json = nlohmann::ordered_json;

// Thrown for anything the user can fix by changing the command line or input.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FlagOptions {
  std::size_t dim = 3;
  std::string c = "central";
};

Poly flag_constant(const FlagOptions& flag, bool allow_symbolic) {
  if (flag.c == "central") return Poly(central_c(flag.dim));
  if (flag.c == "symbolic") {
    if (!allow_symbolic) throw UsageError("--c symbolic is not accepted here; give a rational value");
    return Poly::variable("c");
  }
  try {
    return Poly(Rational::parse(flag.c));
  } catch (const std::exception&) {
    throw UsageError("--c expects a rational, 'central' or 'symbolic', got '" + flag.c + "'");
  }
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << file.rdbuf();
  return os.str();
}

using Object = std::variant<HSeries, ClassicalR>;

// An order-1 document with an empty h^0 slot is a classical r-matrix.
Object object_from_document(const std::string& text) {
  HSeries s = series_from_json(text);
  if (s.order() == 1 && s.coeff(0).is_zero()) return ClassicalR{s.coeff(1)};
  return s;
}

Object load_target(const std::string& target, std::optional<std::size_t> order, const FlagOptions& flag,
                   std::istream& in) {
  if (target == "example1") return example1(order.value_or(2));
  if (target == "example2") return example2(order.value_or(3));
  if (target == "flag") return flag_r(flag.dim, flag_constant(flag, true));
  return object_from_document(read_source(target, in));
}

HSeries at_order(const HSeries& s, std::size_t order) {
  return order >= s.order() ? s.extended(order) : s.truncated(order);
}

std::string witness_index(const std::vector<std::size_t>& index) {
  std::string s = "[";
  for (std::size_t i = 0; i < index.size(); ++i) s += (i ? ", " : "") + std::to_string(index[i]);
  return s + "]";
}

void print_report_text(std::ostream& out, const ResidualReport& report) {
  out << "  " << report.identity << std::string(report.identity.size() < 12 ? 12 - report.identity.size() : 1, ' ');
  if (report.is_zero) {
    out << "holds\n";
    return;
  }
  out << "FAILS: " << report.nonzero_entries << " nonzero entr" << (report.nonzero_entries == 1 ? "y" : "ies") << '\n';
  for (const auto& w : report.witnesses) out << "    " << witness_index(w.index) << "  " << w.value.str() << '\n';
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string target;
  std::vector<std::string> checks;
  std::optional<std::size_t> order;
  std::vector<std::string> flips;
  FlagOptions flag;
  std::string format = "json";
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::istream& in) {
  const Object object = load_target(opt.target, std::nullopt, opt.flag, in);
  const bool is_series = std::holds_alternative<HSeries>(object);

  std::vector<std::string> checks = opt.checks;
  if (checks.empty()) {
    checks = is_series ? std::vector<std::string>{"braid", "involution", "mirror", "cyb", "skew"}
                       : std::vector<std::string>{"cyb", "skew"};
  }

  std::optional<HSeries> series;
  std::optional<ClassicalR> classical;
  std::size_t order = 1;
  if (is_series) {
    const HSeries& s = std::get<HSeries>(object);
    order = opt.order.value_or(2 * s.h_degree() + 2);
    series = at_order(s, order);
  } else {
    if (opt.order) throw UsageError("--order applies to series targets only");
    classical = std::get<ClassicalR>(object);
  }

  auto classical_part = [&]() -> const ClassicalR& {
    if (!classical) {
      if (series->order() < 1) throw UsageError("cyb and skew need a series of order at least 1");
      classical = classical_limit(*series).r;
    }
    return *classical;
  };
  auto require_series = [&](const std::string& check) -> const HSeries& {
    if (!series) throw UsageError("check '" + check + "' needs an h-series target, not a classical r-matrix");
    return *series;
  };

  std::vector<ResidualReport> reports;
  for (const auto& check : checks) {
    if (check == "braid") {
      reports.push_back(braid_residual(require_series(check)));
    } else if (check == "involution") {
      reports.push_back(involution_residual(require_series(check)));
    } else if (check == "mirror") {
      reports.push_back(mirror_residual(require_series(check), std::set<std::string>(opt.flips.begin(), opt.flips.end())));
    } else if (check == "cyb") {
      reports.push_back(cyb_residual(classical_part()));
    } else if (check == "skew") {
      reports.push_back(classical_skew_residual(classical_part()));
    }
  }
  const bool all_hold = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.is_zero; });

  if (opt.format == "text") {
    out << opt.target << (series ? " through h^" + std::to_string(order) : std::string(" (classical)")) << '\n';
    for (const auto& r : reports) print_report_text(out, r);
  } else {
    json doc;
    doc["target"] = opt.target;
    doc["order"] = order;
    json list = json::array();
    for (const auto& r : reports) list.push_back(json::parse(report_to_json(r)));
    doc["reports"] = std::move(list);
    doc["all_hold"] = all_hold;
    out << doc.dump() << '\n';
  }
  return all_hold ? kOk : kFailed;
}

// ---------------------------------------------------------------- quantize

struct QuantizeOptions {
  std::string catalog_r;
  std::string input;
  std::size_t order = 0;
  bool involution = false;
  bool mirror = false;
  bool lookahead = false;
  std::string check_member;
  FlagOptions flag;
  std::string format = "json";
};

ClassicalR quantize_input(const QuantizeOptions& opt, std::istream& in) {
  if (!opt.catalog_r.empty()) {
    if (opt.catalog_r == "example1-limit") return classical_limit(example1()).r;
    if (opt.catalog_r == "example2-limit") return classical_limit(example2()).r;
    if (opt.catalog_r == "flag") return flag_r(opt.flag.dim, flag_constant(opt.flag, false));
    throw UsageError("unknown --catalog-r '" + opt.catalog_r + "'");
  }
  const HSeries s = series_from_json(read_source(opt.input, in));
  return ClassicalR{s.order() == 0 ? s.coeff(0) : s.coeff(1)};
}

HSeries member_candidate(const std::string& name, std::size_t order, std::istream& in) {
  HSeries s = [&] {
    if (name == "example1") return example1(std::max<std::size_t>(order, 2));
    if (name == "example2") return example2(std::max<std::size_t>(order, 3));
    const Object o = object_from_document(read_source(name, in));
    if (!std::holds_alternative<HSeries>(o)) throw UsageError("--check-member needs an h-series");
    return std::get<HSeries>(o);
  }();
  return at_order(s, order);
}

int cmd_quantize(const QuantizeOptions& opt, std::ostream& out, std::istream& in) {
  if (opt.order < 2) throw UsageError("--order must be at least 2");
  const ClassicalR r = quantize_input(opt, in);
  if (!r.op.is_rational()) throw UsageError("the classical r-matrix must have rational entries");

  const QuantizationResult result = quantize(r, opt.order, {opt.involution, opt.mirror, opt.lookahead});
  std::optional<MembershipResult> membership;
  if (!opt.check_member.empty()) {
    const HSeries candidate = member_candidate(opt.check_member, result.series.order(), in);
    if (candidate.dim() != r.dim()) throw UsageError("--check-member series has a different dimension");
    membership = membership_check(result, candidate);
  }
  const ParameterReport report = parameter_report(result, r.dim());

  if (opt.format == "text") {
    out << "constraints: " << report.constraint_label << (opt.lookahead ? " (lookahead)" : "") << '\n';
    for (const auto& rec : result.per_order) {
      out << "  h^" << rec.order << ": " << rec.equations << " equations, rank " << rec.rank << ", "
          << rec.kernel_dim << " new parameters, " << rec.obstructions.size() << " side conditions\n";
      for (std::size_t i = 0; i < rec.obstructions.size() && i < 5; ++i) {
        out << "      " << rec.obstructions[i].str() << " = 0\n";
      }
    }
    out << "total new parameters: " << result.total_new_parameters;
    if (report.conjectured) out << " (expected " << *report.conjectured << ")";
    out << '\n' << (result.obstruction_free() ? "obstruction-free" : "obstructed") << '\n';
    if (membership) {
      out << "member of family: " << (membership->member ? "yes" : "no");
      if (membership->member) {
        out << ", " << membership->free_directions << " free direction" << (membership->free_directions == 1 ? "" : "s");
        for (const auto& [name, value] : membership->bindings) {
          if (!value.is_zero()) out << "\n  " << name << " = " << value.str();
        }
      } else {
        out << " (" << membership->reason << " at " << witness_index(membership->witness_index) << ": "
            << membership->witness_value.str() << ")";
      }
      out << '\n';
    }
    out << action_notation(result.series.coeffs(), "R");
  } else {
    json doc = json::parse(quantization_to_json(result));
    doc["parameter_report"] = json::parse(parameter_report_to_json(report));
    if (membership) doc["membership"] = json::parse(membership_to_json(*membership));
    out << doc.dump() << '\n';
  }
  const bool ok = result.obstruction_free() && (!membership || membership->member);
  return ok ? kOk : kFailed;
}

// ---------------------------------------------------------------- export / catalog

struct ExportOptions {
  std::string target;
  std::optional<std::size_t> order;
  FlagOptions flag;
  std::string format = "json";
};

int cmd_export(const ExportOptions& opt, std::ostream& out) {
  if (opt.target != "example1" && opt.target != "example2" && opt.target != "flag") {
    throw UsageError("unknown export target '" + opt.target + "'");
  }
  std::istringstream none;
  const Object object = load_target(opt.target, opt.order, opt.flag, none);
  if (const auto* s = std::get_if<HSeries>(&object)) {
    out << (opt.format == "text" ? action_notation(s->coeffs(), "R") : series_to_json(*s) + "\n");
  } else {
    const auto& r = std::get<ClassicalR>(object);
    out << (opt.format == "text" ? action_notation({r.op}, "r") : classical_to_json(r) + "\n");
  }
  return kOk;
}

int cmd_catalog(const std::string& format, std::ostream& out) {
  const auto entries = catalog_entries();
  if (format == "text") {
    for (const auto& e : entries) {
      const bool series = std::holds_alternative<HSeries>(e.object);
      const std::size_t dim = series ? std::get<HSeries>(e.object).dim() : std::get<ClassicalR>(e.object).dim();
      std::string params;
      for (const auto& p : e.parameters) params += (params.empty() ? "" : ",") + p;
      out << e.name << "\t" << (series ? "series" : "classical") << "\tdim " << dim << "\t" << params << "\t"
          << e.provenance << '\n';
    }
    return kOk;
  }
  json list = json::array();
  for (const auto& e : entries) {
    const bool series = std::holds_alternative<HSeries>(e.object);
    list.push_back(json{{"name", e.name},
                        {"kind", series ? "series" : "classical"},
                        {"dim", series ? std::get<HSeries>(e.object).dim() : std::get<ClassicalR>(e.object).dim()},
                        {"parameters", e.parameters},
                        {"provenance", e.provenance}});
  }
  out << list.dump() << '\n';
  return kOk;
}

void add_flag_options(CLI::App* cmd, FlagOptions& flag) {
  cmd->add_option("--dim", flag.dim, "dimension for the flag target")->check(CLI::Range(1, 6));
  cmd->add_option("--c", flag.c, "flag constant: a rational, 'central' for (dim-1)/2, or 'symbolic'");
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact verification and order-by-order quantization of R-matrices", "rquant"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "check identities on a catalog entry or a JSON series");
  verify->add_option("target", vopt.target, "example1, example2, flag, a JSON file, or - for stdin")->required();
  verify->add_option("--checks", vopt.checks, "comma-separated subset of braid,cyb,involution,mirror,skew")
      ->delimiter(',')
      ->check(CLI::IsMember({"braid", "cyb", "involution", "mirror", "skew"}));
  verify->add_option("--order", vopt.order, "truncation order (default 2*degree+2)");
  verify->add_option("--flip", vopt.flips, "parameter negated together with h in the mirror check");
  add_flag_options(verify, vopt.flag);
  add_format(verify, vopt.format);

  QuantizeOptions qopt;
  auto* quant = app.add_subcommand("quantize", "solve for a quantum R-matrix order by order");
  auto* src_catalog = quant->add_option("--catalog-r", qopt.catalog_r, "example1-limit, example2-limit or flag");
  auto* src_input = quant->add_option("--input", qopt.input, "classical r-matrix JSON file, or - for stdin");
  src_catalog->excludes(src_input);
  src_input->excludes(src_catalog);
  quant->add_option("--order", qopt.order, "truncation order N >= 2")->required();
  quant->add_flag("--involution", qopt.involution, "impose R(h)^2 = 1");
  quant->add_flag("--mirror", qopt.mirror, "impose mirror(R)(h) = R(-h)");
  quant->add_flag("--lookahead", qopt.lookahead, "also use each constraint's next-order equation when R_n drops out");
  quant->add_option("--check-member", qopt.check_member, "example1, example2 or a JSON series to locate in the family");
  add_flag_options(quant, qopt.flag);
  add_format(quant, qopt.format);

  auto* catalog = app.add_subcommand("catalog", "list the built-in examples");
  std::string catalog_format = "text";
  add_format(catalog, catalog_format);

  ExportOptions eopt;
  auto* exp = app.add_subcommand("export", "write a catalog entry as JSON");
  exp->add_option("target", eopt.target, "example1, example2 or flag")->required();
  exp->add_option("--order", eopt.order, "truncation order for series targets");
  add_flag_options(exp, eopt.flag);
  add_format(exp, eopt.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "rquant: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(vopt, out, in);
    if (*quant) {
      if (qopt.catalog_r.empty() && qopt.input.empty()) throw UsageError("give --catalog-r or --input");
      return cmd_quantize(qopt, out, in);
    }
    if (*catalog) return cmd_catalog(catalog_format, out);
    if (*exp) return cmd_export(eopt, out);
  } catch (const UsageError& e) {
    err << "rquant: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "rquant: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "rquant: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace rquant::cli
