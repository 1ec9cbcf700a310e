#include "ainfty/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "ainfty/acceptance.hpp"
#include "ainfty/biderivative.hpp"
#include "ainfty/errors.hpp"
#include "ainfty/evaluator.hpp"
#include "ainfty/latex.hpp"
#include "json.hpp"

namespace ainfty {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::vector<std::string> terms_of(const MatrixSum& s, bool ascii) { return render_terms(s, ascii); }

std::string join_sum(const MatrixSum& s, bool ascii) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& t : terms_of(s, ascii)) out += (out.empty() ? "" : " + ") + t;
  return out;
}

ordered_json arrow_json(const Arrow& a) {
  return {{"start", {a.start.first, a.start.second}}, {"end", {a.end.first, a.end.second}}};
}

// ---- faces ----

int cmd_faces(int n, const std::string& format, std::ostream& out) {
  const auto by_dim = enumerate_faces(n);
  if (format == "json") {
    ordered_json j{{"schema_version", kSchemaVersion}, {"n", n}};
    j["counts"] = ordered_json::object();
    j["faces"] = ordered_json::object();
    for (const auto& [dim, faces] : by_dim) {
      j["counts"][std::to_string(dim)] = faces.size();
      auto& list = j["faces"][std::to_string(dim)] = ordered_json::array();
      for (const auto& f : faces) list.push_back(f.code());
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "K_" << n << '\n';
  for (const auto& [dim, faces] : by_dim) {
    out << "  dim " << dim << ": " << faces.size() << " faces\n";
    for (const auto& f : faces) out << "    " << f.code() << '\n';
  }
  return kExitOk;
}

// ---- diagonal ----

int cmd_diagonal(int n, const std::string& format, bool all, std::ostream& out) {
  const Diagonal& diag = default_diagonal();
  std::vector<Face> cells;
  if (all)
    cells = faces_of(n);
  else
    cells.push_back(Face::corolla(n));
  if (format == "json") {
    ordered_json j{{"schema_version", kSchemaVersion}, {"n", n}, {"nmax", diag.max_leaves()}};
    j["cells"] = ordered_json::array();
    for (const auto& f : cells) {
      ordered_json terms = ordered_json::array();
      for (const auto& [a, b] : diag(f)) terms.push_back({a.code(), b.code()});
      j["cells"].push_back({{"face", f.code()}, {"dim", f.dim()}, {"terms", terms}});
    }
    out << j.dump(2) << '\n';
  } else if (format == "latex") {
    for (const auto& f : cells) out << "\\Delta_K\\left(" << to_latex(f) << "\\right) = " << to_latex(diag(f)) << '\n';
  } else {
    for (const auto& f : cells) {
      const auto terms = diag(f);
      out << f.code() << " (dim " << f.dim() << "): " << terms.size() << " terms\n";
      for (const auto& [a, b] : terms) out << "  " << a.code() << " ⊗ " << b.code() << '\n';
    }
  }
  return kExitOk;
}

// ---- relation ----

void print_relation_text(const Relation& r, bool ascii, std::ostream& out) {
  const char* dot = ascii ? " * " : " · ";
  out << "relation " << r.label << ": arrow " << to_string(r.arrow) << '\n';
  out << "  lhs: " << join_sum(r.lhs, ascii) << '\n';
  if (!r.rhs_left.empty()) {
    auto group = [&](const MatrixSum& s) { return s.size() > 1 ? "{" + join_sum(s, ascii) + "}" : join_sum(s, ascii); };
    out << "  rhs: " << group(r.rhs_left) << dot << group(r.rhs_right) << '\n';
  }
  const auto terms = terms_of(r.rhs, ascii);
  for (std::size_t k = 0; k < terms.size(); ++k) out << (k ? "     + " : "     = ") << terms[k] << '\n';
  if (terms.empty()) out << "     = 0\n";
  if (r.diagonal_dependent) out << "  note: depends on the chosen diagonal on K_n for n >= 4\n";
}

ordered_json relation_json(const Relation& r, bool ascii) {
  ordered_json j{{"label", r.label}, {"lhs", terms_of(r.lhs, ascii)}, {"rhs", terms_of(r.rhs, ascii)},
                 {"arrow", arrow_json(r.arrow)}, {"diagonal_dependent", r.diagonal_dependent}};
  if (!r.rhs_left.empty()) {
    j["rhs_left"] = terms_of(r.rhs_left, ascii);
    j["rhs_right"] = terms_of(r.rhs_right, ascii);
  }
  return j;
}

int cmd_relation(int i, int j, const std::string& format, bool ascii, std::ostream& out) {
  const Relation r = generate_relation(i, j);
  if (format == "json") {
    ordered_json doc{{"schema_version", kSchemaVersion}};
    doc.update(relation_json(r, ascii));
    out << doc.dump(2) << '\n';
  } else if (format == "latex") {
    out << to_latex(r) << '\n';
  } else {
    print_relation_text(r, ascii, out);
  }
  return kExitOk;
}

// ---- expand ----

int cmd_expand(int imax, int jmax, const std::string& format, bool residual, std::ostream& out) {
  const auto eq = structure_equation_terms(OmegaSpec::standard(imax, jmax));
  if (format == "json") {
    ordered_json doc{{"schema_version", kSchemaVersion}, {"imax", imax}, {"jmax", jmax}};
    doc["relations"] = ordered_json::array();
    for (const auto& r : eq.relations) {
      doc["relations"].push_back({{"label", r.label}, {"arrow", arrow_json(r.arrow)}, {"terms", terms_of(r.terms(), false)},
                                  {"diagonal_dependent", r.diagonal_dependent}});
    }
    doc["residual"] = ordered_json::array();
    for (const auto& r : eq.residual) {
      ordered_json item{{"arrow", arrow_json(r.arrow)}, {"term_count", r.terms().size()}};
      if (residual) item["terms"] = terms_of(r.terms(), false);
      doc["residual"].push_back(item);
    }
    doc["notes"] = eq.notes;
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& r : eq.relations) {
    out << r.label << "  " << to_string(r.arrow) << (r.diagonal_dependent ? "  (diagonal-dependent)" : "") << '\n';
    for (const auto& t : terms_of(r.terms(), false)) out << "  + " << t << '\n';
    out << "  = 0\n";
  }
  out << "off-axis components: " << eq.residual.size() << '\n';
  if (residual) {
    for (const auto& r : eq.residual) {
      out << to_string(r.arrow) << '\n';
      for (const auto& t : terms_of(r.terms(), false)) out << "  + " << t << '\n';
    }
  }
  for (const auto& n : eq.notes) out << "note: " << n << '\n';
  return kExitOk;
}

// ---- verify ----

int cmd_verify(const std::string& path, int imax, int jmax, const std::string& format, std::ostream& out) {
  const FiniteModel model = FiniteModel::load(path);
  const Report report = check_all(model, imax, jmax);
  if (format == "json") {
    ordered_json doc{{"schema_version", kSchemaVersion}, {"model", path}, {"pass", report.pass()}};
    doc["checks"] = ordered_json::array();
    for (const auto& c : report.checks) {
      ordered_json item{{"label", c.label}, {"pass", c.pass}};
      if (!c.pass) {
        ordered_json witnesses = ordered_json::array();
        for (const auto& w : c.witnesses) witnesses.push_back(w);
        item["witnesses"] = witnesses;
        item["lhs_value"] = format_vector(c.lhs_value);
        item["rhs_value"] = format_vector(c.rhs_value);
      }
      doc["checks"].push_back(item);
    }
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& c : report.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.label;
      if (!c.pass) {
        out << "  at " << format_tuple(c.witnesses.front()) << ": lhs " << format_vector(c.lhs_value) << ", rhs "
            << format_vector(c.rhs_value) << " (" << c.witnesses.size() << " failing inputs:";
        for (const auto& w : c.witnesses) out << ' ' << format_tuple(w);
        out << ')';
      }
      out << '\n';
    }
    out << (report.pass() ? "model satisfies all relations\n" : "model violates at least one relation\n");
  }
  return report.pass() ? kExitOk : kExitVerificationFailed;
}

// ---- selfcheck ----

int cmd_selfcheck(int only, std::uint64_t seed, std::ostream& out) {
  bool pass = true;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (only && id != only) continue;
    const auto r = run_criterion(id, seed);
    out << format_result(r) << '\n';
    pass = pass && r.pass;
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relations of special A-infinity bialgebras over GF(2)", "ainfty"};
  app.require_subcommand(1);

  int n = 4, i = 2, j = 2, imax = 2, jmax = 2, only = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "text", model, expr;
  bool ascii = false, all = false, residual = false;
  const auto formats = CLI::IsMember({"text", "json", "latex"});
  const auto plain_formats = CLI::IsMember({"text", "json"});

  auto* faces = app.add_subcommand("faces", "List the faces of K_n by dimension");
  faces->add_option("--n", n, "Number of leaves")->required()->check(CLI::Range(2, 9));
  faces->add_option("--format", format, "text or json")->check(plain_formats);

  auto* diagonal = app.add_subcommand("diagonal", "Dump the cellular diagonal on K_n");
  diagonal->add_option("--n", n, "Number of leaves")->required()->check(CLI::Range(2, 9));
  diagonal->add_option("--format", format, "text, json or latex")->check(formats);
  diagonal->add_flag("--all", all, "Every face, not only the top cell");

  auto* relation = app.add_subcommand("relation", "Generate the (i,j) relation Δ_j∘m_i = ξ^{∧j}·ζ^{∨i}");
  relation->add_option("--i", i, "Inputs")->required()->check(CLI::Range(2, 9));
  relation->add_option("--j", j, "Outputs")->required()->check(CLI::Range(2, 9));
  relation->add_option("--format", format, "text, json or latex")->check(formats);
  relation->add_flag("--ascii", ascii, "ASCII operators");

  auto* expand = app.add_subcommand("expand", "Expand d_ω • d_ω and group it by arrow");
  expand->add_option("--imax", imax, "Largest m_i")->required()->check(CLI::Range(1, 6));
  expand->add_option("--jmax", jmax, "Largest Δ_j")->required()->check(CLI::Range(1, 6));
  expand->add_option("--format", format, "text or json")->check(plain_formats);
  expand->add_flag("--residual", residual, "Also list the off-axis components");

  auto* verify = app.add_subcommand("verify", "Check all relations in a finite model");
  verify->add_option("--model", model, "Model JSON file")->required();
  verify->add_option("--imax", imax, "Largest m_i")->required()->check(CLI::Range(2, 6));
  verify->add_option("--jmax", jmax, "Largest Δ_j")->required()->check(CLI::Range(2, 6));
  verify->add_option("--format", format, "text or json")->check(plain_formats);

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the acceptance criteria");
  selfcheck->add_option("--only", only, "Run a single criterion")->check(CLI::Range(1, kCriterionCount));
  selfcheck->add_option("--seed", seed, "Random seed for the property suites");

  auto* normal = app.add_subcommand("normalize", "Print the normal form of an operation expression");
  normal->add_option("expr", expr, "Expression, e.g. 'm2∘(1⊗m2)' or 'm2 . (1 x m2)'")->required();
  normal->add_flag("--ascii", ascii, "ASCII operators");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*faces) return cmd_faces(n, format, out);
    if (*diagonal) return cmd_diagonal(n, format, all, out);
    if (*relation) return cmd_relation(i, j, format, ascii, out);
    if (*expand) return cmd_expand(imax, jmax, format, residual, out);
    if (*verify) return cmd_verify(model, imax, jmax, format, out);
    if (*selfcheck) return cmd_selfcheck(only, seed, out);
    if (*normal) {
      const OpExpr e = normalize(parse_opexpr(expr));
      out << (ascii ? e.ascii() : e.str()) << '\n';
      return kExitOk;
    }
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ainfty
