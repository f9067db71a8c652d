#include "gaussdeg/cli.hpp"

#include "gaussdeg/degrees.hpp"
#include "gaussdeg/errors.hpp"
#include "gaussdeg/grassmann.hpp"
#include "gaussdeg/io.hpp"
#include "gaussdeg/partition.hpp"
#include "gaussdeg/schur.hpp"
#include "gaussdeg/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <utility>

namespace gaussdeg::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, table };

struct Range {
  int lo = 0;
  int hi = -1;
};

// "a..b" or a single integer "a".
Range parse_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      std::size_t used = 0;
      int value = std::stoi(text, &used);
      if (used != text.size()) throw ParameterError("");
      return {value, value};
    }
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    Range r{std::stoi(lo, &used_lo), std::stoi(hi, &used_hi)};
    if (used_lo != lo.size() || used_hi != hi.size()) throw ParameterError("");
    return r;
  } catch (const std::exception&) {
    throw ParameterError("bad range '" + text + "' (expected a or a..b)");
  }
}

Partition parse_shape(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw ParameterError("bad shape '" + text + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ParameterError("bad shape '" + text + "'");
    parts.push_back(value);
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (c != '(' && c != ')' && c != ' ') {
      token += c;
    }
  }
  if (!token.empty()) flush();
  return Partition(std::move(parts));
}

std::string cell(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "";
  return value.dump();
}

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// json: the document as is. csv/table: `rows` flattened under `columns`.
void render(std::ostream& out, Format format, const Json& document,
            const std::vector<std::string>& columns, const std::vector<Json>& rows) {
  if (format == Format::json) {
    out << document.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> cells;
  for (const Json& row : rows) {
    std::vector<std::string> line;
    for (const std::string& column : columns) {
      line.push_back(row.contains(column) ? cell(row.at(column)) : "");
    }
    cells.push_back(std::move(line));
  }
  if (format == Format::csv) {
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_escape(columns[i]);
    out << '\n';
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "," : "") << csv_escape(line[i]);
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    width[i] = columns[i].size();
    for (const auto& line : cells) width[i] = std::max(width[i], line[i].size());
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << "  ";
      out << line[i];
      if (i + 1 < line.size()) out << std::string(width[i] - line[i].size(), ' ');
    }
    out << '\n';
  };
  emit(columns);
  for (const auto& line : cells) emit(line);
}

const std::vector<std::string> kReportColumns{"n", "d", "N", "m", "dim", "degree", "method", "notes"};

Json table_row(const VeroneseVariety& v, int m) {
  const DegreeReport report = degree_main(v, m);
  const BoundsReport b = bounds(v, m);
  Json row;
  row["m"] = m;
  row["dim"] = report.dim_xm;
  row["degree"] = to_decimal(report.degree);
  const Json extra = bounds_to_json(b);
  for (const auto& [key, value] : extra.items()) row[key] = value;
  return row;
}

const std::vector<std::string> kTableColumns{"m",     "dim",   "degree",           "ratio",
                                             "lower", "upper", "conjecture_upper", "within_conjecture"};

Json suite_to_json(const verify::SuiteResult& r) {
  return {{"suite", r.name}, {"passed", r.passed}, {"failed", r.failed}, {"failures", r.failures}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degrees of higher Gauss map images of Veronese varieties", "gaussdeg"};
  app.require_subcommand(1);

  Format format = Format::json;
  const std::map<std::string, Format> format_names{
      {"json", Format::json}, {"csv", Format::csv}, {"table", Format::table}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case).description(""))
      ->option_text("json|csv|table (default json)");

  int n = 0;
  int d = 0;
  int m = 0;

  auto* degree_cmd = app.add_subcommand("degree", "Degree and dimension of X_m^* for v_d(P^n)");
  std::string method_tag = "main";
  degree_cmd->add_option("--n", n, "Dimension of P^n")->required();
  degree_cmd->add_option("--d", d, "Veronese degree")->required();
  degree_cmd->add_option("--m", m, "Gauss map index")->required();
  degree_cmd->add_option("--method", method_tag,
                         "main|alternate|curve_closed|surface_closed|threefold_closed|boole|"
                         "m_eq_n_plus_1|generic");

  auto* table_cmd = app.add_subcommand("table", "All m = n..N-1 for one Veronese variety");
  table_cmd->add_option("--n", n)->required();
  table_cmd->add_option("--d", d)->required();

  auto* curve_cmd = app.add_subcommand("curve", "X_m^* for a smooth curve of degree d and genus g");
  int ambient = 0;
  int genus = 0;
  curve_cmd->add_option("--N", ambient, "Ambient projective dimension")->required();
  curve_cmd->add_option("--d", d, "Degree of the curve")->required();
  curve_cmd->add_option("--g", genus, "Genus")->required();
  curve_cmd->add_option("--m", m)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "all";
  int max_n = 8;
  int max_weight = 10;
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "identity", "syt", "crossform", "schur", "bounds", "lemma", "generic"}));
  verify_cmd->add_option("--max-n", max_n, "Largest n for the identity suite")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-weight", max_weight, "Largest |lambda| for the syt suite")
      ->check(CLI::NonNegativeNumber);

  auto* conjecture_cmd = app.add_subcommand("conjecture", "Scan the conjectured upper bound");
  std::string n_range = "1..3";
  std::string d_range = "2..4";
  conjecture_cmd->add_option("--n", n_range, "n or lo..hi");
  conjecture_cmd->add_option("--d", d_range, "d or lo..hi");

  auto* generic_cmd = app.add_subcommand("generic", "Degree from a Segre integral table (JSON)");
  std::string table_path;
  generic_cmd->add_option("--table", table_path, "Path to the table, '-' for stdin")->required();
  generic_cmd->add_option("--m", m)->required();

  auto* integrals_cmd = app.add_subcommand("integrals", "Export the Veronese Segre integral table");
  integrals_cmd->add_option("--n", n)->required();
  integrals_cmd->add_option("--d", d)->required();

  auto* syt_cmd = app.add_subcommand("syt", "f^lambda by hook formula and brute force");
  std::string shape_text;
  syt_cmd->add_option("--shape", shape_text, "Comma-separated parts, e.g. 3,1")->required();

  auto* grassmann_cmd = app.add_subcommand("grassmann", "Dimension and Pluecker degree of G(d, r)");
  int rank = 0;
  grassmann_cmd->add_option("--d", d, "Quotient rank")->required();
  grassmann_cmd->add_option("--r", rank, "Ambient rank")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadParameters;
  }

  try {
    if (degree_cmd->parsed()) {
      const DegreeReport report = degree_by_method(VeroneseVariety(n, d), m, parse_method(method_tag));
      const Json row = report_to_json(report);
      render(out, format, row, kReportColumns, {row});
    } else if (curve_cmd->parsed()) {
      const Json row = report_to_json(degree_general_curve(ambient, d, genus, m));
      render(out, format, row, kReportColumns, {row});
    } else if (table_cmd->parsed()) {
      const VeroneseVariety v(n, d);
      std::vector<Json> rows;
      for (int mm = n; mm <= v.ambient_dim() - 1; ++mm) rows.push_back(table_row(v, mm));
      const Json document{{"n", n}, {"d", d}, {"N", v.ambient_dim()}, {"rows", rows}};
      render(out, format, document, kTableColumns, rows);
    } else if (verify_cmd->parsed()) {
      std::vector<verify::SuiteResult> results;
      auto wanted = [&](const char* name) { return suite == "all" || suite == name; };
      if (wanted("identity")) results.push_back(verify::identity(max_n));
      if (wanted("syt")) results.push_back(verify::syt(max_weight, std::max(max_weight, brute_force_cap_from_env())));
      if (wanted("crossform")) results.push_back(verify::crossform(3, 4));
      if (wanted("schur")) results.push_back(verify::schur(4, 5));
      if (wanted("bounds")) results.push_back(verify::bounds(3, 4));
      if (wanted("lemma")) results.push_back(verify::lemma(5, 20));
      if (wanted("generic")) results.push_back(verify::generic(3, 4));
      bool all_ok = true;
      std::vector<Json> rows;
      for (const auto& r : results) {
        all_ok = all_ok && r.ok();
        rows.push_back(suite_to_json(r));
        for (const auto& failure : r.failures) err << "FAIL [" << r.name << "] " << failure << '\n';
      }
      const Json document{{"passed", all_ok}, {"suites", rows}};
      render(out, format, document, {"suite", "passed", "failed"}, rows);
      return all_ok ? kSuccess : kVerificationFailed;
    } else if (conjecture_cmd->parsed()) {
      const Range nr = parse_range(n_range);
      const Range dr = parse_range(d_range);
      const ScanReport scan = conjecture_scan(nr.lo, nr.hi, dr.lo, dr.hi);
      std::vector<Json> rows;
      for (const ScanRow& row : scan.rows) {
        Json j{{"n", row.n}, {"d", row.d}, {"N", row.ambient_dim}, {"m", row.m},
               {"degree", to_decimal(row.degree)}};
        const Json extra = bounds_to_json(row.bounds);
        for (const auto& [key, value] : extra.items()) j[key] = value;
        rows.push_back(std::move(j));
      }
      const Json document{{"rows", rows}, {"violations", scan.violations.size()}};
      render(out, format, document,
             {"n", "d", "N", "m", "degree", "ratio", "conjecture_upper", "virtual_degree",
              "within_conjecture"},
             rows);
      if (format != Format::json) out << "violations: " << scan.violations.size() << '\n';
    } else if (generic_cmd->parsed()) {
      std::optional<SegreIntegralTable> table;
      if (table_path == "-") {
        table = read_table(std::cin);
      } else {
        std::ifstream file(table_path);
        if (!file) throw ParameterError("cannot open table file '" + table_path + "'");
        table = read_table(file);
      }
      const Json row = report_to_json(degree_generic(*table, m));
      render(out, format, row, kReportColumns, {row});
    } else if (integrals_cmd->parsed()) {
      out << table_to_json(veronese_integral_table(VeroneseVariety(n, d))).dump(2) << '\n';
    } else if (syt_cmd->parsed()) {
      const Partition lam = parse_shape(shape_text);
      const int cap = brute_force_cap_from_env();
      Json row{{"shape", partition_to_json(lam)}, {"hook", to_decimal(syt_count_hook(lam))}};
      row["bruteforce"] = lam.weight() <= cap ? Json(to_decimal(syt_count_bruteforce(lam, cap))) : Json(nullptr);
      row["cap"] = cap;
      render(out, format, row, {"shape", "hook", "bruteforce", "cap"}, {row});
    } else if (grassmann_cmd->parsed()) {
      const GrassmannShape shape(d, rank);
      const Json row{{"d", d}, {"r", rank}, {"dim", grassmann_dim(shape)},
                     {"degree", to_decimal(grassmann_degree(shape))}};
      render(out, format, row, {"d", "r", "dim", "degree"}, {row});
    }
  } catch (const NotGenericallyFinite& e) {
    err << "error: " << e.what() << '\n';
    return kNonPositiveGeneric;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kBadParameters;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kBadParameters;
  }
  return kSuccess;
}

}  // namespace gaussdeg::cli
