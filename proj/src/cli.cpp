#include "haantjes/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "haantjes/io.hpp"
#include "haantjes/linearizer.hpp"
#include "haantjes/structure.hpp"
#include "haantjes/torsion.hpp"

namespace haantjes::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::string at;
  int level = 1;
  bool force = false;
  bool eigenvalue = false;
  int dim = 0;
  int k = 0;
  std::string file;
  std::vector<std::string> files;
  std::vector<std::string> points;
  std::string tensor = "haantjes";
  std::string family = "default";
};

std::vector<RationalVector> parse_points(const std::vector<std::string>& texts, Eigen::Index n) {
  std::vector<RationalVector> out;
  for (const auto& t : texts) {
    RationalVector p;
    try {
      p = parse_point(t);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (p.size() != n)
      throw UsageError("point '" + t + "' has " + std::to_string(p.size()) + " coordinates, expected " +
                       std::to_string(n));
    out.push_back(std::move(p));
  }
  return out;
}

// Prints a tensor result (and its value at --at); exit 0 iff zero.
int report_tensor(const Tensor12& s, const std::string& symbol, const Options& o, std::ostream& out) {
  std::optional<Tensor12> at;
  RationalVector point;
  if (!o.at.empty()) {
    point = parse_points({o.at}, s.dim()).front();
    std::map<std::size_t, Rational> values;
    for (Eigen::Index i = 0; i < point.size(); ++i) values[static_cast<std::size_t>(i)] = point(i);
    at = substitute(s, values);
  }
  if (o.json) {
    json doc = tensor_json(s, symbol);
    if (at) doc["at"] = {{"point", format_point(point)}, {"value", tensor_json(*at, symbol)}};
    out << doc.dump(2) << "\n";
  } else {
    out << format_tensor(s, symbol);
    if (at) out << "at " << format_point(point) << ":\n" << format_tensor(*at, symbol);
  }
  return s.is_zero() ? 0 : 1;
}

std::string level_symbol(const std::string& base, int level) {
  return level == 1 ? base : base + std::to_string(level);
}

int cmd_torsion(const Options& o, std::ostream& out) {
  const auto l = read_operator_field(o.file);
  const std::string symbol = o.level == 1 ? "N" : o.level == 2 ? "H" : "H" + std::to_string(o.level);
  return report_tensor(torsion_level(l, o.level), symbol, o, out);
}

int cmd_fn(const Options& o, std::ostream& out) {
  const auto k = read_operator_field(o.files.at(0));
  const auto l = read_operator_field(o.files.at(1));
  if (k.rows() != l.rows())
    throw UsageError("fn: operators have different dimensions (" + std::to_string(k.rows()) + " and " +
                     std::to_string(l.rows()) + ")");
  return report_tensor(fn_bracket_level(k, l, o.level), level_symbol("FN", o.level), o, out);
}

int cmd_tensor_t(const Options& o, std::ostream& out) {
  const auto l = read_operator_field(o.file);
  if (l.rows() != 4 && !o.force)
    throw UsageError("tensor-t: T is defined in dimension 4 (file has dimension " + std::to_string(l.rows()) +
                     "); use --force to evaluate anyway");
  return report_tensor(tensor_t(l, {.force = o.force}), "T", o, out);
}

int cmd_verdict(const Options& o, std::ostream& out) {
  const auto l = read_operator_field(o.file);
  if (l.rows() != 3 && l.rows() != 4)
    throw UsageError("verdict: only dimensions 3 and 4 are supported (file has dimension " +
                     std::to_string(l.rows()) + ")");
  const Verdict v = verdict(l, parse_points(o.points, l.rows()));
  if (o.json) {
    out << verdict_json(v).dump(2) << "\n";
  } else {
    out << "eigenvalue: " << to_string(v.regularity.eigenvalue) << "\n";
    out << "rank profile of (L - eigenvalue)^k, k = 1.." << l.rows() << ":\n";
    for (std::size_t p = 0; p < v.regularity.sampled_points.size(); ++p) {
      out << "  " << format_point(v.regularity.sampled_points[p]) << ":";
      for (auto r : v.regularity.rank_profile[p]) out << ' ' << r;
      out << "\n";
    }
    out << "verdict: " << to_string(v.kind) << " (" << v.detail << ")\n";
    if (v.kind == VerdictKind::NotTriangularizable)
      for (const auto& c : v.failing_certificates) out << "  " << c << "\n";
  }
  switch (v.kind) {
    case VerdictKind::Triangularizable:
      return 0;
    case VerdictKind::NotTriangularizable:
      return 1;
    case VerdictKind::PreconditionViolated:
      return 2;
  }
  return 2;
}

std::string field_string(const VectorField& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v(i));
  return s + ")";
}

int cmd_integrability(const Options& o, std::ostream& out) {
  const auto l = read_operator_field(o.file);
  if (o.k < 1 || o.k > l.rows() - 1)
    throw UsageError("integrability: --k must be in 1.." + std::to_string(l.rows() - 1));
  const auto d = image_flag(l, o.k);
  const auto r = check_integrability(d, parse_points(o.points, l.rows()));
  if (o.json) {
    json doc = integrability_json(d, r);
    doc["k"] = o.k;
    out << doc.dump(2) << "\n";
  } else {
    out << "image of (L - eigenvalue)^" << o.k << ": " << d.generators.size() << " generators\n";
    for (std::size_t g = 0; g < d.generators.size(); ++g)
      out << "  xi" << g + 1 << " = " << field_string(d.generators[g]) << "\n";
    if (r.integrable) {
      out << "integrable: every bracket lies in the span\n";
    } else {
      out << "not integrable: [xi" << r.failing_pair->first + 1 << ", xi" << r.failing_pair->second + 1
          << "] = " << field_string(r.failing_bracket) << " is not in the span\n";
    }
  }
  return r.integrable ? 0 : 1;
}

int cmd_linearize(const Options& o, std::ostream& out) {
  TensorChoice choice;
  try {
    choice = TensorChoice::parse(o.tensor);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto op = build_linearized(o.dim, o.eigenvalue);
  const auto sys = extract_system(tensor_at_origin(op, choice), op.layout, choice.name());
  std::optional<LinearSystemQ> cond;
  if (o.dim >= 3) cond = cond3_system(op.layout);
  if (o.json) {
    json doc = system_json(sys);
    doc["dim"] = o.dim;
    doc["tensor"] = choice.name();
    if (cond) {
      doc["cond3_rank"] = cond->rank();
      doc["rowspace_equal"] = rowspace_equal(sys.matrix, cond->matrix);
      doc["contains_cond3"] = rowspace_contains(sys.matrix, cond->matrix);
    }
    out << doc.dump(2) << "\n";
    return 0;
  }
  for (Eigen::Index r = 0; r < sys.matrix.rows(); ++r)
    out << sys.row_labels[static_cast<std::size_t>(r)] << ": " << sys.equation(r) << " = 0\n";
  if (sys.matrix.rows() == 0) out << "no equations\n";
  out << "rank: " << sys.rank() << "\n";
  if (cond) {
    out << "integrability system rank: " << cond->rank() << "\n";
    if (rowspace_equal(sys.matrix, cond->matrix)) out << "row space: equal to the integrability system\n";
    else if (rowspace_contains(sys.matrix, cond->matrix))
      out << "row space: strictly contains the integrability system\n";
    else if (rowspace_contains(cond->matrix, sys.matrix))
      out << "row space: strictly contained in the integrability system\n";
    else out << "row space: not comparable with the integrability system\n";
  }
  return 0;
}

int cmd_search(const Options& o, std::ostream& out) {
  std::vector<Candidate> family;
  if (o.family == "default") family = default_candidates();
  else if (o.family == "t") family = tensor_t_candidates();
  else family = haantjes_candidate();
  const auto r = search_tensor(o.dim, family);
  if (o.json) {
    json doc = search_json(r);
    doc["dim"] = o.dim;
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "candidates:\n";
  for (std::size_t c = 0; c < r.candidate_names.size(); ++c)
    out << "  c" << c + 1 << ": " << r.candidate_names[c] << "\n";
  out << "integrability system rank: " << r.cond3_rank << "\n";
  out << "admissible combinations: dimension " << r.basis.size() << "\n";
  const auto show = [&](const SearchSolution& s) {
    out << "(";
    for (Eigen::Index i = 0; i < s.coefficients.size(); ++i) out << (i ? ", " : "") << to_string(s.coefficients(i));
    out << ") rank " << s.rank << (s.equivalent ? ", equivalent" : "") << "\n";
  };
  for (std::size_t b = 0; b < r.basis.size(); ++b) {
    out << "  basis " << b + 1 << ": ";
    show(r.basis[b]);
  }
  if (r.generic) {
    out << "  generic combination: ";
    show(*r.generic);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact torsions of operator fields and triangularizability tests", "haantjes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Structured output");

  const auto dim_check = CLI::Range(2, 8);
  auto* torsion = app.add_subcommand("torsion", "Level-m torsion (1 = Nijenhuis, 2 = Haantjes)");
  torsion->add_option("file", o.file, "Operator-field file")->required();
  torsion->add_option("--level", o.level, "Torsion level")->check(CLI::Range(1, 32));
  torsion->add_option("--at", o.at, "Also evaluate at x1,...,xn");

  auto* fn = app.add_subcommand("fn", "Generalized Frolicher-Nijenhuis bracket of two fields");
  fn->add_option("files", o.files, "Two operator-field files")->required()->expected(2);
  fn->add_option("--level", o.level, "Bracket level")->check(CLI::Range(1, 32));
  fn->add_option("--at", o.at, "Also evaluate at x1,...,xn");

  auto* tt = app.add_subcommand("tensor-t", "Tensor T (dimension 4)");
  tt->add_option("file", o.file, "Operator-field file")->required();
  tt->add_flag("--force", o.force, "Allow other dimensions (trace/n normalisation)");
  tt->add_option("--at", o.at, "Also evaluate at x1,...,xn");

  auto* ver = app.add_subcommand("verdict", "Triangularizability verdict in dimensions 3 and 4");
  ver->add_option("file", o.file, "Operator-field file")->required();
  ver->add_option("--point", o.points, "Extra sample point x1,...,xn (repeatable)");

  auto* integ = app.add_subcommand("integrability", "Frobenius test for the image flag");
  integ->add_option("file", o.file, "Operator-field file")->required();
  integ->add_option("--k", o.k, "Power k in Image (L - eigenvalue)^k")->required();
  integ->add_option("--point", o.points, "Points certifying independence (repeatable)");

  auto* lin = app.add_subcommand("linearize", "Linear system of a tensor at the origin");
  lin->add_option("--dim", o.dim, "Dimension")->required()->check(dim_check);
  lin->add_option("--tensor", o.tensor, "nijenhuis, haantjes, level:m or t");
  lin->add_flag("--eigenvalue", o.eigenvalue, "Include a non-constant eigenvalue");

  auto* search = app.add_subcommand("search", "Search for tensors equivalent to integrability");
  search->add_option("--dim", o.dim, "Dimension")->required()->check(CLI::Range(3, 6));
  search->add_option("--family", o.family, "Candidate family")
      ->check(CLI::IsMember({"default", "t", "haantjes"}));

  std::vector<std::string> argv_store{"haantjes"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*torsion) return cmd_torsion(o, out);
    if (*fn) return cmd_fn(o, out);
    if (*tt) return cmd_tensor_t(o, out);
    if (*ver) return cmd_verdict(o, out);
    if (*integ) return cmd_integrability(o, out);
    if (*lin) return cmd_linearize(o, out);
    if (*search) return cmd_search(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kNoInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace haantjes::cli
