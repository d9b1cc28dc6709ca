#include "haantjes/io.hpp"

#include <fstream>
#include <sstream>

namespace haantjes {

using nlohmann::json;

namespace {

std::string entry_name(std::size_t i, std::size_t j) {
  return "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

json rational_vector_json(const RationalVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

}  // namespace

OperatorField parse_operator_field(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": byte " + std::to_string(e.byte) + ": not valid JSON");
  }
  if (!doc.is_object()) throw InputError(source + ": expected an object with \"dim\" and \"matrix\"");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw InputError(source + ": missing or non-integer \"dim\"");
  const auto dim = doc["dim"].get<long long>();
  if (dim < 1 || dim > 64) throw InputError(source + ": \"dim\" must be between 1 and 64");
  const auto n = static_cast<std::size_t>(dim);
  const json& rows = doc.contains("matrix") ? doc["matrix"] : json();
  if (!rows.is_array() || rows.size() != n)
    throw InputError(source + ": \"matrix\" must be an array of " + std::to_string(n) + " rows");

  OperatorField l(dim, dim);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw InputError(source + ": matrix[" + std::to_string(i) + "] must have " + std::to_string(n) +
                       " entries");
    for (std::size_t j = 0; j < n; ++j) {
      const json& e = rows[i][j];
      std::string poly;
      if (e.is_string()) poly = e.get<std::string>();
      else if (e.is_number_integer()) poly = e.dump();
      else throw InputError(source + ": " + entry_name(i, j) + ": expected a polynomial string");
      try {
        l(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = parse_poly(poly, n);
      } catch (const ParseError& pe) {
        throw InputError(source + ": " + entry_name(i, j) + ": " + pe.what());
      }
    }
  }
  return l;
}

OperatorField read_operator_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_operator_field(buf.str(), path);
}

json operator_field_json(const OperatorField& l) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < l.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < l.cols(); ++j) row.push_back(to_string(l(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"dim", l.rows()}, {"matrix", std::move(rows)}};
}

RationalVector parse_point(const std::string& text) {
  std::vector<Rational> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty coordinate in point '" + text + "'");
    item = item.substr(first, last - first + 1);
    const bool ok = item.find_first_not_of("+-0123456789/") == std::string::npos &&
                    item.find_first_of("0123456789") != std::string::npos;
    Rational q;
    try {
      if (!ok) throw std::runtime_error("bad");
      q = Rational(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad coordinate '" + item + "' in point '" + text + "'");
    }
    coords.push_back(q);
  }
  if (coords.empty() || (!text.empty() && text.back() == ','))
    throw std::invalid_argument("bad point '" + text + "'");
  RationalVector v(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) v(static_cast<Eigen::Index>(i)) = coords[i];
  return v;
}

std::string format_point(const RationalVector& p) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < p.size(); ++i) out += (i ? ", " : "") + to_string(p(i));
  return out + ")";
}

std::string format_tensor(const Tensor12& s, const std::string& symbol) {
  std::string out;
  const auto n = s.dim();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k) {
        if (s(i, j, k).is_zero()) continue;
        out += symbol + "^" + std::to_string(i + 1) + "_{" + std::to_string(j + 1) + std::to_string(k + 1) +
               "} = " + to_string(s(i, j, k)) + "\n";
      }
  return out.empty() ? "zero tensor\n" : out;
}

json tensor_json(const Tensor12& s, const std::string& symbol) {
  json comps = json::array();
  const auto n = s.dim();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        if (!s(i, j, k).is_zero())
          comps.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"value", to_string(s(i, j, k))}});
  return {{"tensor", symbol}, {"dim", n}, {"zero", comps.empty()}, {"components", std::move(comps)}};
}

json vector_field_json(const VectorField& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

json integrability_json(const Distribution& d, const IntegrabilityReport& r) {
  json gens = json::array();
  for (const auto& g : d.generators) gens.push_back(vector_field_json(g));
  json out{{"generators", std::move(gens)}, {"source_columns", d.source_columns}, {"integrable", r.integrable}};
  if (r.failing_pair) {
    out["failing_pair"] = {r.failing_pair->first + 1, r.failing_pair->second + 1};
    out["bracket"] = vector_field_json(r.failing_bracket);
  }
  return out;
}

json regularity_json(const RegularityReport& r) {
  json profile = json::array();
  for (std::size_t p = 0; p < r.sampled_points.size(); ++p)
    profile.push_back({{"point", rational_vector_json(r.sampled_points[p])}, {"ranks", r.rank_profile[p]}});
  return {{"eigenvalue", to_string(r.eigenvalue)}, {"regular", r.regular}, {"rank_profile", std::move(profile)}};
}

json verdict_json(const Verdict& v) {
  json out = regularity_json(v.regularity);
  out["verdict"] = to_string(v.kind);
  out["failing_certificates"] = v.failing_certificates;
  out["detail"] = v.detail;
  return out;
}

json system_json(const LinearSystemQ& sys) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < sys.matrix.rows(); ++r)
    rows.push_back({{"label", sys.row_labels[static_cast<std::size_t>(r)]}, {"equation", sys.equation(r)}});
  return {{"rows", std::move(rows)}, {"rank", sys.rank()}, {"unknowns", sys.unknown_names}};
}

json search_json(const SearchResult& r) {
  const auto solution = [](const SearchSolution& s) {
    return json{{"coefficients", rational_vector_json(s.coefficients)},
                {"rank", s.rank},
                {"equivalent", s.equivalent}};
  };
  json basis = json::array();
  for (const auto& b : r.basis) basis.push_back(solution(b));
  json out{{"candidates", r.candidate_names}, {"basis", std::move(basis)}, {"cond3_rank", r.cond3_rank}};
  out["generic"] = r.generic ? solution(*r.generic) : json();
  return out;
}

}  // namespace haantjes
