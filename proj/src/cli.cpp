// Copyright 2026 The riordan-toolkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "riordan/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "riordan/delannoy.hpp"
#include "riordan/diagonals.hpp"
#include "riordan/errors.hpp"
#include "riordan/fixtures.hpp"
#include "riordan/palindromic.hpp"
#include "riordan/serialize.hpp"
#include "riordan/series_expr.hpp"

namespace riordan {
namespace {

// Bad argv content discovered after option parsing (malformed expressions,
// malformed rational literals, inconsistent flag combinations). Maps to
// exit code 2 like the parser's own errors.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::size_t default_order() {
  const char* raw = std::getenv("RIORDAN_DEFAULT_ORDER");
  if (raw == nullptr) {
    return 16;
  }
  const std::string text(raw);
  if (text.empty() || text.size() > 4 ||
      !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }) ||
      text == "0") {
    throw UsageError("RIORDAN_DEFAULT_ORDER: expected a positive integer up to 9999, got '" +
                     text + "'");
  }
  return static_cast<std::size_t>(std::stoul(text));
}

enum class Format { Table, Json, Csv };

Format pick_format(const std::string& name) {
  if (name == "json") {
    return Format::Json;
  }
  if (name == "csv") {
    return Format::Csv;
  }
  return Format::Table;
}

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  auto value = Rational::parse(text);
  if (!value) {
    throw UsageError(flag + ": not a rational number: '" + text + "'");
  }
  return *value;
}

PowerSeries parse_coeff_list(const std::string& flag, const std::string& text) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::size_t stop = comma == std::string::npos ? text.size() : comma;
    std::size_t lo = start;
    while (lo < stop && std::isspace(static_cast<unsigned char>(text[lo]))) {
      ++lo;
    }
    std::size_t hi = stop;
    while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) {
      --hi;
    }
    const std::string item = text.substr(lo, hi - lo);
    if (item.empty()) {
      throw UsageError(flag + ": empty coefficient (at offset " + std::to_string(start) + ")");
    }
    auto value = Rational::parse(item);
    if (!value) {
      throw UsageError(flag + ": not a rational number: '" + item + "' (at offset " +
                       std::to_string(lo) + ")");
    }
    coeffs.push_back(*value);
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return PowerSeries(std::move(coeffs));
}

// One series argument with the two mutually exclusive spellings
// --expr-<tag> (closed form) and --coeffs-<tag> (explicit list).
struct SeriesInput {
  std::string expr_flag;
  std::string coeffs_flag;
  std::string expr_text;
  std::string coeffs_text;
  CLI::Option* expr_opt = nullptr;
  CLI::Option* coeffs_opt = nullptr;

  void attach(CLI::App* cmd, const std::string& tag, const std::string& doc) {
    expr_flag = "--expr-" + tag;
    coeffs_flag = "--coeffs-" + tag;
    CLI::Option_group* group = cmd->add_option_group(tag, doc);
    expr_opt = group->add_option(expr_flag, expr_text, "closed form, e.g. \"1/(1-x)\"");
    coeffs_opt = group->add_option(coeffs_flag, coeffs_text,
                                   "comma separated rational coefficients, e.g. \"1,1/2,0\"");
    group->require_option(1);
  }

  std::string flag() const { return expr_opt->count() > 0 ? expr_flag : coeffs_flag; }

  // Expands a closed form to exactly `order` coefficients; an explicit list
  // keeps its own length and is never padded.
  PowerSeries build(std::size_t order) const {
    if (expr_opt->count() > 0) {
      SeriesExprPtr tree;
      try {
        tree = parse_series_expr(expr_text);
      } catch (const ParseError& e) {
        throw UsageError(expr_flag + ": " + e.what());
      }
      try {
        return evaluate(*tree, order);
      } catch (const Error& e) {
        throw Error(expr_flag + ": " + e.what());
      }
    }
    return parse_coeff_list(coeffs_flag, coeffs_text);
  }
};

// The (f, g) pair defining T(f|g).
struct MatrixInput {
  SeriesInput f;
  SeriesInput g;

  void attach(CLI::App* cmd, const std::string& f_tag = "f", const std::string& g_tag = "g") {
    f.attach(cmd, f_tag, "numerator series " + f_tag);
    g.attach(cmd, g_tag, "denominator series " + g_tag);
  }

  RiordanMatrix build(std::size_t rows, const std::string& rows_flag = "--rows") const {
    if (rows == 0) {
      throw ConstructionError(rows_flag + ": a matrix needs at least one row");
    }
    PowerSeries fs = f.build(rows);
    PowerSeries gs = g.build(rows);
    if (fs.order() < rows) {
      throw BudgetError(f.flag() + ": " + std::to_string(rows) + " rows need " +
                        std::to_string(rows) + " coefficients, got " +
                        std::to_string(fs.order()));
    }
    if (gs.order() < rows) {
      throw BudgetError(g.flag() + ": " + std::to_string(rows) + " rows need " +
                        std::to_string(rows) + " coefficients, got " +
                        std::to_string(gs.order()));
    }
    if (fs.coeff(0).is_zero()) {
      throw ConstructionError(f.flag() + ": f must have a nonzero constant term");
    }
    if (gs.coeff(0).is_zero()) {
      throw ConstructionError(g.flag() + ": g must have a nonzero constant term");
    }
    return RiordanMatrix::from_T(std::move(fs), std::move(gs), rows);
  }
};

void print_matrix(const RiordanMatrix& m, Format format, std::ostream& out) {
  switch (format) {
    case Format::Table:
      out << render_table(matrix_strings(m));
      break;
    case Format::Json:
      out << matrix_to_json(m).dump() << "\n";
      break;
    case Format::Csv:
      out << matrix_to_csv(m);
      break;
  }
}

void print_series(const PowerSeries& s, Format format, std::ostream& out) {
  switch (format) {
    case Format::Table:
      out << render_series(s) << "\n";
      break;
    case Format::Json:
      out << series_to_json(s).dump() << "\n";
      break;
    case Format::Csv:
      out << series_to_csv(s);
      break;
  }
}

void print_grid(const CoeffGrid& grid, Format format, std::ostream& out) {
  switch (format) {
    case Format::Table:
      out << render_table(grid_strings(grid));
      break;
    case Format::Json:
      out << grid_to_json(grid).dump() << "\n";
      break;
    case Format::Csv:
      out << grid_to_csv(grid);
      break;
  }
}

// Verification outcome; a failed check is a reportable result, not a crash,
// but it still flips the exit code to 1.
void print_report(const CheckReport& report, Format format, std::ostream& out, int& rc) {
  if (!report.ok) {
    rc = 1;
  }
  switch (format) {
    case Format::Table:
      if (report.ok) {
        out << "ok\n";
      } else {
        out << "check failed: " << report.detail << "\n";
      }
      break;
    case Format::Json: {
      Json j;
      j["ok"] = report.ok;
      j["detail"] = report.detail;
      out << j.dump() << "\n";
      break;
    }
    case Format::Csv:
      out << table_to_csv({{"ok", report.ok ? "true" : "false"}, {"detail", report.detail}});
      break;
  }
}

void print_palindrome_report(const RiordanMatrix& m, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << palindrome_report_json(m).dump() << "\n";
    return;
  }
  const PalindromeCheck check = is_palindromic(m);
  const auto params = check.palindromic ? recover_params(m) : std::nullopt;
  if (format == Format::Csv) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"palindromic", check.palindromic ? "true" : "false"});
    if (check.counterexample) {
      rows.push_back({"counterexample-row", std::to_string(check.counterexample->first)});
      rows.push_back({"counterexample-col", std::to_string(check.counterexample->second)});
    }
    if (params) {
      rows.push_back({"f0", params->f0.str()});
      rows.push_back({"g0", params->g0.str()});
      rows.push_back({"f1", params->f1.str()});
      rows.push_back({"g1", params->g1().str()});
    }
    out << table_to_csv(rows);
    return;
  }
  out << "palindromic: " << (check.palindromic ? "yes" : "no") << "\n";
  if (check.counterexample) {
    const std::size_t n = check.counterexample->first;
    const std::size_t k = check.counterexample->second;
    out << "counterexample: entry(" << n << ", " << k << ") = " << m.entry(n, k).str()
        << " but entry(" << n << ", " << n - k << ") = " << m.entry(n, n - k).str() << "\n";
  } else if (params) {
    out << "f0 = " << params->f0.str() << "\n";
    out << "g0 = " << params->g0.str() << "\n";
    out << "f1 = " << params->f1.str() << "\n";
    out << "g1 = " << params->g1().str() << "\n";
  } else {
    out << "parameters: not determined by the stored coefficients\n";
  }
}

void print_lines(const std::vector<std::string>& lines, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << Json(lines).dump() << "\n";
    return;
  }
  for (const std::string& line : lines) {
    out << line << "\n";
  }
}

void print_value(const std::string& value, Format format, std::ostream& out) {
  switch (format) {
    case Format::Table:
      out << value << "\n";
      break;
    case Format::Json: {
      Json j;
      j["weight"] = value;
      out << j.dump() << "\n";
      break;
    }
    case Format::Csv:
      out << table_to_csv({{"weight", value}});
      break;
  }
}

CoeffGrid family_grid(const DiagonalFamily& family) {
  CoeffGrid grid;
  grid.rows = family.series.size();
  grid.data.reserve(grid.rows);
  for (const PowerSeries& s : family.series) {
    grid.cols = s.order();
    grid.data.push_back(s.coeffs());
  }
  return grid;
}

std::vector<std::vector<std::string>> lower_triangle_strings(
    const std::vector<std::vector<AbPoly>>& square) {
  std::vector<std::vector<std::string>> cells;
  cells.reserve(square.size());
  for (std::size_t i = 0; i < square.size(); ++i) {
    std::vector<std::string> row;
    row.reserve(i + 1);
    for (std::size_t j = 0; j <= i; ++j) {
      row.push_back(square[i][j].str());
    }
    cells.push_back(std::move(row));
  }
  return cells;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  std::size_t n_default = 16;
  try {
    n_default = default_order();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"exact rational arithmetic for Riordan matrices and their diagonals", "riordan"};
  app.require_subcommand(1);
  app.get_formatter()->column_width(28);

  std::string format = "table";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
  };

  int rc = 0;

  // ---- show ----------------------------------------------------------
  auto* show = app.add_subcommand("show", "print the lower triangular prefix of T(f|g)");
  MatrixInput show_in;
  show_in.attach(show);
  std::size_t show_rows = n_default;
  show->add_option("--rows", show_rows, "number of rows")->capture_default_str();
  add_format(show);
  show->callback([&] { print_matrix(show_in.build(show_rows), pick_format(format), out); });

  // ---- diag ----------------------------------------------------------
  auto* diag = app.add_subcommand(
      "diag", "diagonal series of T(f|g): recurrence family, or a bivariate expansion");
  MatrixInput diag_in;
  diag_in.attach(diag);
  std::size_t diag_count = n_default;
  std::size_t diag_len = n_default;
  diag->add_option("--count", diag_count, "number of diagonals")->capture_default_str();
  diag->add_option("--len", diag_len, "coefficients per diagonal")->capture_default_str();
  bool diag_bivariate = false;
  bool diag_sprugnoli = false;
  auto* biv_flag = diag->add_flag("--bivariate", diag_bivariate,
                                  "expand f(z)/(g(z) - x) instead of the recurrence");
  auto* spr_flag = diag->add_flag("--sprugnoli", diag_sprugnoli,
                                  "expand f(z)/(g(z) - x*z), recovering the matrix entries");
  biv_flag->excludes(spr_flag);
  add_format(diag);
  diag->callback([&] {
    RiordanMatrix m = diag_in.build(diag_count, "--count");
    if (diag_bivariate) {
      print_grid(bivariate_gf(m, diag_count, diag_len), pick_format(format), out);
    } else if (diag_sprugnoli) {
      print_grid(sprugnoli_bgf(m, diag_count, diag_len), pick_format(format), out);
    } else {
      print_grid(family_grid(diagonal_family(m, diag_count, diag_len)), pick_format(format),
                 out);
    }
  });

  // ---- product -------------------------------------------------------
  auto* prod = app.add_subcommand("product", "group product T(f|g) * T(f2|g2)");
  MatrixInput prod_left;
  prod_left.attach(prod);
  MatrixInput prod_right;
  prod_right.attach(prod, "f2", "g2");
  std::size_t prod_rows = n_default;
  prod->add_option("--rows", prod_rows, "number of rows")->capture_default_str();
  add_format(prod);
  prod->callback([&] {
    print_matrix(product(prod_left.build(prod_rows), prod_right.build(prod_rows)),
                 pick_format(format), out);
  });

  // ---- inverse -------------------------------------------------------
  auto* inv = app.add_subcommand("inverse", "group inverse of T(f|g)");
  MatrixInput inv_in;
  inv_in.attach(inv);
  std::size_t inv_rows = n_default;
  inv->add_option("--rows", inv_rows, "number of rows")->capture_default_str();
  add_format(inv);
  inv->callback([&] {
    RiordanMatrix m = inv_in.build(inv_rows);
    try {
      print_matrix(inverse(m), pick_format(format), out);
    } catch (const Error& e) {
      throw Error(inv_in.f.flag() + ": " + e.what());
    }
  });

  // ---- aseq ----------------------------------------------------------
  auto* aseq = app.add_subcommand("aseq",
                                  "A-sequence of T(f|g): d(i,j) = sum_k a_k d(i-1, j-1+k)");
  MatrixInput aseq_in;
  aseq_in.attach(aseq);
  std::size_t aseq_len = n_default;
  aseq->add_option("--len", aseq_len, "number of coefficients")->capture_default_str();
  add_format(aseq);
  aseq->callback([&] {
    RiordanMatrix m = aseq_in.build(aseq_len, "--len");
    try {
      print_series(a_sequence(m, aseq_len), pick_format(format), out);
    } catch (const Error& e) {
      throw Error(aseq_in.g.flag() + ": " + e.what());
    }
  });

  // ---- apply ---------------------------------------------------------
  auto* app_cmd = app.add_subcommand(
      "apply", "apply T(f|g) to a column vector of series coefficients: f * s(x/g)");
  MatrixInput apply_in;
  apply_in.attach(app_cmd);
  SeriesInput apply_s;
  apply_s.attach(app_cmd, "s", "series acted on");
  std::size_t apply_order = n_default;
  app_cmd->add_option("--order", apply_order, "coefficients of the image")
      ->capture_default_str();
  add_format(app_cmd);
  app_cmd->callback([&] {
    RiordanMatrix m = apply_in.build(apply_order, "--order");
    PowerSeries s = apply_s.build(apply_order);
    try {
      print_series(apply(m, s), pick_format(format), out);
    } catch (const Error& e) {
      throw Error(apply_s.flag() + ": " + e.what());
    }
  });

  // ---- palindromic ---------------------------------------------------
  auto* pal = app.add_subcommand("palindromic",
                                 "rows that read the same in both directions");
  pal->require_subcommand(1);

  auto* pal_make = pal->add_subcommand(
      "construct", "the unique palindromic T(f|g) with the given f0, g0, f1");
  std::string pal_f0, pal_g0, pal_f1;
  pal_make->add_option("--f0", pal_f0, "constant term of f (nonzero)")->required();
  pal_make->add_option("--g0", pal_g0, "constant term of g (nonzero)")->required();
  pal_make->add_option("--f1", pal_f1, "linear term of f")->required();
  std::size_t pal_make_rows = n_default;
  pal_make->add_option("--rows", pal_make_rows, "number of rows")->capture_default_str();
  add_format(pal_make);
  auto read_params = [&pal_f0, &pal_g0, &pal_f1] {
    PalindromicParams p{parse_rational_flag("--f0", pal_f0),
                        parse_rational_flag("--g0", pal_g0),
                        parse_rational_flag("--f1", pal_f1)};
    if (p.f0.is_zero()) {
      throw ConstructionError("--f0: must be nonzero");
    }
    if (p.g0.is_zero()) {
      throw ConstructionError("--g0: must be nonzero");
    }
    return p;
  };
  pal_make->callback(
      [&] { print_matrix(palindromic_matrix(read_params(), pal_make_rows), pick_format(format), out); });

  auto* pal_check = pal->add_subcommand(
      "check", "test the stored prefix of T(f|g) and recover parameters when palindromic");
  MatrixInput pal_check_in;
  pal_check_in.attach(pal_check);
  std::size_t pal_check_rows = n_default;
  pal_check->add_option("--rows", pal_check_rows, "number of rows")->capture_default_str();
  add_format(pal_check);
  pal_check->callback(
      [&] { print_palindrome_report(pal_check_in.build(pal_check_rows), pick_format(format), out); });

  auto* pal_class = pal->add_subcommand(
      "classify", "involution / pseudo-involution / none, for the given parameters");
  std::string cls_f0, cls_g0, cls_f1;
  pal_class->add_option("--f0", cls_f0, "constant term of f (nonzero)")->required();
  pal_class->add_option("--g0", cls_g0, "constant term of g (nonzero)")->required();
  pal_class->add_option("--f1", cls_f1, "linear term of f")->required();
  std::size_t pal_class_rows = n_default;
  pal_class->add_option("--rows", pal_class_rows, "rows checked")->capture_default_str();
  add_format(pal_class);
  pal_class->callback([&] {
    PalindromicParams p{parse_rational_flag("--f0", cls_f0),
                        parse_rational_flag("--g0", cls_g0),
                        parse_rational_flag("--f1", cls_f1)};
    if (p.f0.is_zero()) {
      throw ConstructionError("--f0: must be nonzero");
    }
    if (p.g0.is_zero()) {
      throw ConstructionError("--g0: must be nonzero");
    }
    const InvolutionKind kind = classify_involution(p, pal_class_rows);
    const std::string name = kind == InvolutionKind::Involution         ? "involution"
                             : kind == InvolutionKind::PseudoInvolution ? "pseudo-involution"
                                                                        : "none";
    switch (pick_format(format)) {
      case Format::Table:
        out << name << "\n";
        break;
      case Format::Json: {
        Json j;
        j["kind"] = name;
        out << j.dump() << "\n";
        break;
      }
      case Format::Csv:
        out << table_to_csv({{"kind", name}});
        break;
    }
  });

  // ---- gk-check ------------------------------------------------------
  auto* gk = app.add_subcommand(
      "gk-check", "verify the fixed diagonal shape of T(g|g) for g = 1 + ... x^(k-1) + ...");
  SeriesInput gk_g;
  gk_g.attach(gk, "g", "the subgroup element g");
  std::size_t gk_k = 0;
  gk->add_option("--k", gk_k, "subgroup index (g has vanishing inner coefficients)")
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  std::size_t gk_max_j = 10;
  gk->add_option("--max-j", gk_max_j, "columns checked")->capture_default_str();
  std::size_t gk_order = 0;
  auto* gk_order_opt =
      gk->add_option("--order", gk_order, "coefficients of g to expand (default: as needed)");
  add_format(gk);
  gk->callback([&] {
    const std::size_t need = gk_max_j + 2 * gk_k - 2;
    PowerSeries g = gk_g.build(gk_order_opt->count() > 0 ? gk_order : need);
    try {
      print_report(gk_diagonal_check(g, gk_k, gk_max_j), pick_format(format), out, rc);
    } catch (const Error& e) {
      throw Error(gk_g.flag() + ": " + e.what());
    }
  });

  // ---- qcones --------------------------------------------------------
  auto* qc = app.add_subcommand(
      "qcones", "face count pair of iterated q-weighted cones over m points");
  long long qc_m = 0;
  long long qc_q = 0;
  qc->add_option("--m", qc_m, "number of points")->required();
  qc->add_option("--q", qc_q, "cone weight (nonzero)")->required();
  std::size_t qc_rows = n_default;
  qc->add_option("--rows", qc_rows, "number of rows")->capture_default_str();
  bool qc_check = false;
  qc->add_flag("--check", qc_check, "verify the closed diagonal forms instead of printing");
  std::size_t qc_count = 8;
  qc->add_option("--count", qc_count, "diagonals verified with --check")->capture_default_str();
  std::size_t qc_len = n_default;
  qc->add_option("--len", qc_len, "coefficients per diagonal with --check")
      ->capture_default_str();
  add_format(qc);
  qc->callback([&] {
    if (qc_q == 0) {
      throw ConstructionError("--q: must be nonzero");
    }
    if (qc_check) {
      print_report(qcone_diagonal_check(qc_m, qc_q, qc_count, qc_len), pick_format(format), out,
                   rc);
      return;
    }
    auto pair = qcone_matrices(qc_m, qc_q, qc_rows);
    switch (pick_format(format)) {
      case Format::Table:
        out << "F\n" << render_table(matrix_strings(pair.first));
        out << "Fbar\n" << render_table(matrix_strings(pair.second));
        break;
      case Format::Json: {
        Json j;
        j["F"] = matrix_to_json(pair.first);
        j["Fbar"] = matrix_to_json(pair.second);
        out << j.dump() << "\n";
        break;
      }
      case Format::Csv:
        out << "F\n" << matrix_to_csv(pair.first);
        out << "Fbar\n" << matrix_to_csv(pair.second);
        break;
    }
  });

  // ---- delannoy ------------------------------------------------------
  auto* del = app.add_subcommand("delannoy",
                                 "weighted lattice paths with horizontal, vertical and "
                                 "diagonal steps");
  del->require_subcommand(1);

  auto* del_paths = del->add_subcommand("paths", "every path to (n, m), n and m at most 8");
  std::size_t del_n = 0, del_m = 0;
  del_paths->add_option("--n", del_n, "horizontal extent")->required();
  del_paths->add_option("--m", del_m, "vertical extent")->required();
  add_format(del_paths);
  del_paths->callback([&] {
    std::vector<std::string> words;
    try {
      words = delannoy_paths(del_n, del_m);
    } catch (const Error& e) {
      throw Error("--n/--m: " + std::string(e.what()));
    }
    if (pick_format(format) == Format::Json) {
      Json j;
      j["count"] = words.size();
      j["paths"] = words;
      out << j.dump() << "\n";
      return;
    }
    print_lines(words, pick_format(format), out);
  });

  auto* del_classes = del->add_subcommand(
      "classes", "equivalence classes under HV swaps, one canonical word per class");
  std::size_t cls_n = 0, cls_m = 0;
  del_classes->add_option("--n", cls_n, "horizontal extent")->required();
  del_classes->add_option("--m", cls_m, "vertical extent")->required();
  bool cls_exhaustive = false;
  del_classes->add_flag("--exhaustive", cls_exhaustive,
                        "enumerate and group every path instead of counting in closed form");
  add_format(del_classes);
  del_classes->callback([&] {
    std::vector<DelannoyClass> classes;
    try {
      classes = cls_exhaustive ? delannoy_classes_exhaustive(cls_n, cls_m)
                               : delannoy_classes(cls_n, cls_m);
    } catch (const Error& e) {
      throw Error("--n/--m: " + std::string(e.what()));
    }
    if (pick_format(format) == Format::Json) {
      Json arr = Json::array();
      for (const DelannoyClass& c : classes) {
        Json o;
        o["canonical"] = c.canonical;
        o["size"] = c.size;
        if (cls_exhaustive) {
          o["paths"] = c.paths;
        }
        arr.push_back(o);
      }
      out << arr.dump() << "\n";
      return;
    }
    std::vector<std::vector<std::string>> rows;
    rows.reserve(classes.size());
    for (const DelannoyClass& c : classes) {
      rows.push_back({c.canonical, std::to_string(c.size)});
    }
    if (pick_format(format) == Format::Csv) {
      out << table_to_csv(rows);
    } else {
      out << render_table(rows);
    }
  });

  auto* del_weight = del->add_subcommand(
      "weight", "w(n, m): each class counted once with weight a^(#H + #V) b^(#D)");
  std::size_t w_n = 0, w_m = 0;
  del_weight->add_option("--n", w_n, "horizontal extent")->required();
  del_weight->add_option("--m", w_m, "vertical extent")->required();
  std::string w_a, w_b;
  auto* w_a_opt = del_weight->add_option("--a", w_a, "weight of a straight step (rational)");
  auto* w_b_opt = del_weight->add_option("--b", w_b, "weight of a diagonal step (rational)");
  bool w_symbolic = false;
  auto* w_sym_opt =
      del_weight->add_flag("--symbolic", w_symbolic, "leave a and b as indeterminates");
  w_sym_opt->excludes(w_a_opt);
  w_sym_opt->excludes(w_b_opt);
  add_format(del_weight);
  del_weight->callback([&] {
    if (!w_symbolic && (w_a_opt->count() == 0 || w_b_opt->count() == 0)) {
      throw CLI::RequiredError("--a and --b (or --symbolic)");
    }
    std::string value;
    try {
      value = w_symbolic ? delannoy_weight_poly(w_n, w_m).str()
                         : delannoy_weight(parse_rational_flag("--a", w_a),
                                           parse_rational_flag("--b", w_b), w_n, w_m)
                               .str();
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      throw Error("--n/--m: " + std::string(e.what()));
    }
    print_value(value, pick_format(format), out);
  });

  auto* del_gf = del->add_subcommand(
      "gf", "generating function of row n of the weight grid: sum_m w(n, m) z^m");
  std::string gf_a, gf_b;
  del_gf->add_option("--a", gf_a, "weight of a straight step (rational)")->required();
  del_gf->add_option("--b", gf_b, "weight of a diagonal step (rational)")->required();
  std::size_t gf_n = 0;
  del_gf->add_option("--n", gf_n, "row of the weight grid")->required();
  std::size_t gf_order = n_default;
  del_gf->add_option("--order", gf_order, "coefficients to expand")->capture_default_str();
  add_format(del_gf);
  del_gf->callback([&] {
    print_series(wn_generating_function(parse_rational_flag("--a", gf_a),
                                        parse_rational_flag("--b", gf_b), gf_n, gf_order),
                 pick_format(format), out);
  });

  auto* del_fact = del->add_subcommand(
      "factorize", "verify the binomial factorization of the square weight matrix");
  std::string fact_a, fact_b;
  del_fact->add_option("--a", fact_a, "weight of a straight step (rational)")->required();
  del_fact->add_option("--b", fact_b, "weight of a diagonal step (rational)")->required();
  std::size_t fact_size = n_default;
  del_fact->add_option("--size", fact_size, "matrix size")->capture_default_str();
  add_format(del_fact);
  del_fact->callback([&] {
    print_report(pascal_factorization_check(parse_rational_flag("--a", fact_a),
                                            parse_rational_flag("--b", fact_b), fact_size),
                 pick_format(format), out, rc);
  });

  auto* del_qm = del->add_subcommand(
      "qmatrix", "lower triangular matrix with entry (n, k) = w(n-k, k)");
  std::string qm_a, qm_b;
  auto* qm_a_opt = del_qm->add_option("--a", qm_a, "weight of a straight step (rational)");
  auto* qm_b_opt = del_qm->add_option("--b", qm_b, "weight of a diagonal step (rational)");
  bool qm_symbolic = false;
  auto* qm_sym_opt =
      del_qm->add_flag("--symbolic", qm_symbolic, "leave a and b as indeterminates");
  qm_sym_opt->excludes(qm_a_opt);
  qm_sym_opt->excludes(qm_b_opt);
  std::size_t qm_rows = n_default;
  del_qm->add_option("--rows", qm_rows, "number of rows")->capture_default_str();
  add_format(del_qm);
  del_qm->callback([&] {
    if (qm_symbolic) {
      auto cells = lower_triangle_strings(delannoy_q_symbolic(qm_rows));
      switch (pick_format(format)) {
        case Format::Table:
          out << render_table(cells);
          break;
        case Format::Json: {
          Json j;
          j["kind"] = "qab";
          j["rows"] = qm_rows;
          j["data"] = cells;
          out << j.dump() << "\n";
          break;
        }
        case Format::Csv:
          out << table_to_csv(cells);
          break;
      }
      return;
    }
    if (qm_a_opt->count() == 0 || qm_b_opt->count() == 0) {
      throw CLI::RequiredError("--a and --b (or --symbolic)");
    }
    const Rational a = parse_rational_flag("--a", qm_a);
    const Rational b = parse_rational_flag("--b", qm_b);
    try {
      print_matrix(delannoy_q_matrix(a, b, qm_rows), pick_format(format), out);
    } catch (const Error& e) {
      throw Error("--a: " + std::string(e.what()));
    }
  });

  // ---- fixtures ------------------------------------------------------
  auto* fix = app.add_subcommand(
      "fixtures", "golden matrix displays: list them, print one, or reverify all");
  std::string fix_name;
  auto* fix_name_opt = fix->add_option("--name", fix_name, "print the stored window");
  bool fix_verify = false;
  auto* fix_verify_opt =
      fix->add_flag("--verify", fix_verify, "regenerate every fixture and diff");
  fix_name_opt->excludes(fix_verify_opt);
  add_format(fix);
  fix->callback([&] {
    if (fix_verify) {
      const auto diffs = verify_fixtures();
      if (pick_format(format) == Format::Json) {
        Json arr = Json::array();
        for (const FixtureMismatch& d : diffs) {
          Json o;
          o["fixture"] = d.fixture;
          o["row"] = d.row;
          o["col"] = d.col;
          o["expected"] = d.expected;
          o["actual"] = d.actual;
          arr.push_back(o);
        }
        Json j;
        j["checked"] = all_fixtures().size();
        j["mismatches"] = arr;
        out << j.dump() << "\n";
      } else {
        if (diffs.empty()) {
          out << "verified " << all_fixtures().size() << " fixtures\n";
        } else {
          for (const FixtureMismatch& d : diffs) {
            out << d.fixture << " (" << d.row << ", " << d.col << "): expected " << d.expected
                << ", got " << d.actual << "\n";
          }
        }
      }
      if (!diffs.empty()) {
        rc = 1;
      }
      return;
    }
    if (fix_name_opt->count() > 0) {
      const Fixture* fixture = find_fixture(fix_name);
      if (fixture == nullptr) {
        throw Error("--name: unknown fixture '" + fix_name + "'");
      }
      switch (pick_format(format)) {
        case Format::Table:
          out << render_table(fixture->window);
          break;
        case Format::Json: {
          Json j;
          j["name"] = fixture->name;
          j["generator"] = fixture->generator;
          j["window"] = fixture->window;
          out << j.dump() << "\n";
          break;
        }
        case Format::Csv:
          out << table_to_csv(fixture->window);
          break;
      }
      return;
    }
    std::vector<std::string> names;
    names.reserve(all_fixtures().size());
    for (const Fixture& fixture : all_fixtures()) {
      names.push_back(fixture.name);
    }
    print_lines(names, pick_format(format), out);
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    while (!target->get_subcommands().empty()) {
      target = target->get_subcommands().front();
    }
    out << target->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace riordan
