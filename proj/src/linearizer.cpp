#include "haantjes/linearizer.hpp"

#include <numeric>

#include "haantjes/random.hpp"
#include "haantjes/torsion.hpp"

namespace haantjes {

ParamLayout::ParamLayout(Eigen::Index n, bool with_eigenvalue) : n_(n), eigen_(with_eigenvalue) {
  if (n < 2) throw std::invalid_argument("linearization needs dimension >= 2");
  names_.resize(nvars());
  for (Eigen::Index k = 0; k < n; ++k) names_[x(k)] = "x" + std::to_string(k + 1);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        names_[a(i, j, k)] = "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1) +
                             std::to_string(k + 1);
  if (eigen_) {
    for (Eigen::Index k = 0; k < n; ++k) names_[lambda(k)] = "lambda" + std::to_string(k + 1);
    names_[lambda0()] = "lambda0";
  }
}

std::size_t ParamLayout::nvars() const {
  const auto n = static_cast<std::size_t>(n_);
  return n + n * n * n + (eigen_ ? n + 1 : 0);
}

std::size_t ParamLayout::unknowns() const {
  const auto n = static_cast<std::size_t>(n_);
  return n * n * n + (eigen_ ? n : 0);
}

std::size_t ParamLayout::lambda(Eigen::Index k) const {
  if (!eigen_) throw std::logic_error("layout has no eigenvalue data");
  return static_cast<std::size_t>(n_ + n_ * n_ * n_ + k);
}

std::size_t ParamLayout::lambda0() const {
  if (!eigen_) throw std::logic_error("layout has no eigenvalue data");
  return static_cast<std::size_t>(n_ + n_ * n_ * n_ + n_);
}

Eigen::Index ParamLayout::column(std::size_t var) const {
  const auto n = static_cast<std::size_t>(n_);
  if (var < n) return -1;
  if (var - n < unknowns()) return static_cast<Eigen::Index>(var - n);
  return -1;
}

std::vector<std::string> ParamLayout::unknown_names() const {
  const auto n = static_cast<std::size_t>(n_);
  return {names_.begin() + static_cast<std::ptrdiff_t>(n),
          names_.begin() + static_cast<std::ptrdiff_t>(n + unknowns())};
}

ParamOperator build_linearized(Eigen::Index n, bool with_eigenvalue) {
  ParamLayout layout(n, with_eigenvalue);
  const auto nv = layout.nvars();
  OperatorField a = OperatorField::Constant(n, n, Poly::zero(nv));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        a(i, j) += Poly::variable(nv, layout.a(i, j, k)) * Poly::variable(nv, layout.x(k));
  const OperatorField jordan = jordan_block(n, Poly::zero(nv));
  OperatorField l = jordan - a * jordan + jordan * a;
  if (with_eigenvalue) {
    Poly lambda = Poly::variable(nv, layout.lambda0());
    for (Eigen::Index k = 0; k < n; ++k)
      lambda += Poly::variable(nv, layout.lambda(k)) * Poly::variable(nv, layout.x(k));
    for (Eigen::Index i = 0; i < n; ++i) l(i, i) += lambda;
  }
  return {std::move(l), std::move(layout)};
}

TensorChoice TensorChoice::parse(const std::string& text) {
  if (text == "nijenhuis") return {Kind::Nijenhuis, 1};
  if (text == "haantjes") return {Kind::Level, 2};
  if (text == "t" || text == "T") return {Kind::T, 2};
  if (text.rfind("level:", 0) == 0) {
    const auto digits = text.substr(6);
    if (!digits.empty() && digits.size() < 4 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const int m = std::stoi(digits);
      if (m >= 1) return {Kind::Level, m};
    }
  }
  throw std::invalid_argument("unknown tensor '" + text +
                              "' (expected nijenhuis, haantjes, level:m or t)");
}

std::string TensorChoice::name() const {
  switch (kind) {
    case Kind::Nijenhuis:
      return "N";
    case Kind::T:
      return "T";
    case Kind::Level:
      return level == 2 ? "H" : level == 1 ? "N" : "H" + std::to_string(level);
  }
  return "S";
}

namespace {

std::map<std::size_t, Rational> origin(const ParamLayout& layout) {
  std::map<std::size_t, Rational> at;
  for (Eigen::Index k = 0; k < layout.dim(); ++k) at.emplace(layout.x(k), Rational(0));
  return at;
}

std::string component_label(const std::string& symbol, Eigen::Index i, Eigen::Index j,
                            Eigen::Index k) {
  return symbol + "^" + std::to_string(i + 1) + "_{" + std::to_string(j + 1) +
         std::to_string(k + 1) + "}";
}

// Coefficient row of one component at the origin.
RationalVector linear_form(const Poly& p, const ParamLayout& layout, const std::string& label) {
  RationalVector row = RationalVector::Zero(static_cast<Eigen::Index>(layout.unknowns()));
  if (p.nvars() == 0) {
    if (!p.is_zero()) throw NonlinearSystemError(label + " has a constant term at the origin");
    return row;
  }
  for (const auto& [e, c] : p.terms()) {
    const auto degree = std::accumulate(e.begin(), e.end(), std::uint64_t{0});
    const auto var = static_cast<std::size_t>(
        std::find_if(e.begin(), e.end(), [](std::uint32_t v) { return v != 0; }) - e.begin());
    if (degree != 1 || layout.column(var) < 0) {
      throw NonlinearSystemError(label + " is not linear in the unknowns at the origin");
    }
    row(layout.column(var)) = c;
  }
  return row;
}

}  // namespace

OriginJet origin_jet(const ParamOperator& op) {
  const auto at = origin(op.layout);
  OriginJet jet;
  jet.value = substitute(op.field, at);
  jet.nijenhuis = substitute(nijenhuis(op.field), at);
  jet.haantjes = haantjes_step(jet.value, jet.nijenhuis);
  return jet;
}

Tensor12 tensor_at_origin(const ParamOperator& op, const TensorChoice& choice) {
  const OriginJet jet = origin_jet(op);
  switch (choice.kind) {
    case TensorChoice::Kind::Nijenhuis:
      return jet.nijenhuis;
    case TensorChoice::Kind::Level:
      return torsion_level_from(jet.value, jet.nijenhuis, choice.level);
    case TensorChoice::Kind::T:
      return tensor_t_from(traceless_part(jet.value), jet.haantjes);
  }
  throw std::logic_error("unreachable");
}

RationalMatrix component_matrix(const Tensor12& s, const ParamLayout& layout) {
  const auto n = s.dim();
  if (n != layout.dim()) throw std::invalid_argument("tensor and layout dimensions differ");
  const auto at = origin(layout);
  RationalMatrix m(n * n * n, static_cast<Eigen::Index>(layout.unknowns()));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k) {
        const Poly& p = s(i, j, k);
        const Poly at_origin = p.nvars() == 0 ? p : substitute(p.promoted(layout.nvars()), at);
        m.row((i * n + j) * n + k) =
            linear_form(at_origin, layout, component_label("S", i, j, k)).transpose();
      }
  return m;
}

LinearSystemQ extract_system(const Tensor12& s, const ParamLayout& layout,
                             const std::string& symbol) {
  const auto n = s.dim();
  const RationalMatrix all = component_matrix(s, layout);
  LinearSystemQ sys;
  sys.unknown_names = layout.unknown_names();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k) {
        const auto r = (i * n + j) * n + k;
        if (all.row(r) == RationalMatrix::Zero(1, all.cols())) continue;
        keep.push_back(r);
        sys.row_labels.push_back(component_label(symbol, i, j, k));
        sys.components.push_back({i, j, k});
      }
  sys.matrix.resize(static_cast<Eigen::Index>(keep.size()), all.cols());
  for (std::size_t r = 0; r < keep.size(); ++r)
    sys.matrix.row(static_cast<Eigen::Index>(r)) = all.row(keep[r]);
  return sys;
}

std::string LinearSystemQ::equation(Eigen::Index r) const {
  const auto cols = static_cast<std::size_t>(matrix.cols());
  Poly p = Poly::zero(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const Rational& q = matrix(r, static_cast<Eigen::Index>(c));
    if (q != 0) p += Poly::constant(cols, q) * Poly::variable(cols, c);
  }
  return to_string(p, unknown_names);
}

LinearSystemQ cond3_system(const ParamLayout& layout) {
  const auto n = layout.dim();
  if (n < 3) throw std::invalid_argument("integrability system needs dimension >= 3");
  LinearSystemQ sys;
  sys.unknown_names = layout.unknown_names();
  std::vector<RationalVector> rows;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      for (Eigen::Index k = j + 1; k < n; ++k) {
        RationalVector row = RationalVector::Zero(static_cast<Eigen::Index>(layout.unknowns()));
        row(layout.column(layout.a(k, i, j))) = 1;
        row(layout.column(layout.a(k, j, i))) = -1;
        rows.push_back(std::move(row));
        sys.row_labels.push_back(component_label("C", k, i, j));
        sys.components.push_back({k, i, j});
      }
  sys.matrix.resize(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(layout.unknowns()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    sys.matrix.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
  return sys;
}

LinearSystemQ cond3_system(Eigen::Index n) {
  if (n < 3) throw std::invalid_argument("integrability system needs dimension >= 3");
  return cond3_system(ParamLayout(n));
}

namespace {

std::string word(int p) {
  if (p == 0) return "";
  if (p == 1) return "Lh";
  return "Lh^" + std::to_string(p);
}

std::string pattern_name(const std::string& base, int p, int q, int r) {
  std::string out = word(p);
  if (!out.empty()) out += " ";
  out += base + "(";
  out += q == 0 ? "." : word(q) + ".";
  out += ", ";
  out += r == 0 ? "." : word(r) + ".";
  return out + ")";
}

Candidate pattern(bool use_haantjes, int p, int q, int r) {
  return {pattern_name(use_haantjes ? "H" : "N", p, q, r),
          [use_haantjes, p, q, r](const OperatorField& lhat, const Tensor12& nij,
                                  const Tensor12& h) {
            const Tensor12& base = use_haantjes ? h : nij;
            return upper(power(lhat, static_cast<unsigned>(p)),
                         lower_both(base, power(lhat, static_cast<unsigned>(q)),
                                    power(lhat, static_cast<unsigned>(r))));
          }};
}

}  // namespace

std::vector<Candidate> default_candidates() {
  std::vector<Candidate> out;
  for (bool use_h : {false, true})
    for (int total = 0; total <= 2; ++total)
      for (int p = total; p >= 0; --p)
        for (int q = total - p; q >= 0; --q) out.push_back(pattern(use_h, p, q, total - p - q));
  return out;
}

std::vector<Candidate> tensor_t_candidates() {
  return {pattern(true, 1, 1, 0), pattern(true, 1, 0, 1), pattern(true, 0, 2, 0)};
}

std::vector<Candidate> haantjes_candidate() { return {pattern(true, 0, 0, 0)}; }

bool SearchResult::contains(const RationalVector& c) const {
  if (basis.empty()) return c == RationalVector::Zero(c.size());
  RationalMatrix span(c.size(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t b = 0; b < basis.size(); ++b)
    span.col(static_cast<Eigen::Index>(b)) = basis[b].coefficients;
  RationalMatrix with(c.size(), span.cols() + 1);
  with << span, c;
  return rank(with) == rank(span);
}

namespace {

struct SearchSetup {
  ParamOperator op;
  LinearSystemQ cond;
  std::vector<RationalMatrix> systems;
};

SearchSetup prepare(Eigen::Index n, const std::vector<Candidate>& candidates) {
  if (candidates.empty()) throw std::invalid_argument("search_tensor: empty candidate list");
  SearchSetup s{build_linearized(n), cond3_system(n), {}};
  const OriginJet jet = origin_jet(s.op);
  const OperatorField lhat = traceless_part(jet.value);
  for (const auto& cand : candidates)
    s.systems.push_back(component_matrix(cand.build(lhat, jet.nijenhuis, jet.haantjes), s.op.layout));
  return s;
}

SearchSolution judge(const SearchSetup& s, const RationalVector& coeffs) {
  if (coeffs.size() != static_cast<Eigen::Index>(s.systems.size()))
    throw std::invalid_argument("coefficient vector does not match the candidate list");
  RationalMatrix combined = RationalMatrix::Zero(s.systems.front().rows(), s.systems.front().cols());
  for (std::size_t c = 0; c < s.systems.size(); ++c) {
    const Rational& q = coeffs(static_cast<Eigen::Index>(c));
    if (q != 0) combined += q * s.systems[c];
  }
  SearchSolution out;
  out.coefficients = coeffs;
  out.rank = rank(combined);
  out.equivalent = rowspace_equal(combined, s.cond.matrix);
  return out;
}

}  // namespace

SearchResult search_tensor(Eigen::Index n, const std::vector<Candidate>& candidates) {
  const SearchSetup setup = prepare(n, candidates);
  const RationalMatrix solutions = nullspace(setup.cond.matrix);

  SearchResult result;
  result.cond3_rank = setup.cond.rank();
  const auto m = static_cast<Eigen::Index>(candidates.size());
  // Column c: candidate c restricted to the solutions of the integrability system.
  RationalMatrix constraints(solutions.cols() * n * n * n, m);
  for (Eigen::Index c = 0; c < m; ++c) {
    result.candidate_names.push_back(candidates[static_cast<std::size_t>(c)].name);
    const RationalMatrix restricted = setup.systems[static_cast<std::size_t>(c)] * solutions;
    constraints.col(c) = restricted.reshaped();
  }

  const RationalMatrix coeff_basis = nullspace(constraints);
  for (Eigen::Index b = 0; b < coeff_basis.cols(); ++b) result.basis.push_back(judge(setup, coeff_basis.col(b)));
  if (coeff_basis.cols() > 0) {
    RandomSource rng(0x5eed);
    RationalVector mix = RationalVector::Zero(m);
    for (Eigen::Index b = 0; b < coeff_basis.cols(); ++b) mix += rng.nonzero_rational() * coeff_basis.col(b);
    result.generic = judge(setup, mix);
  }
  return result;
}

SearchSolution assess_combination(Eigen::Index n, const std::vector<Candidate>& candidates,
                                  const RationalVector& c) {
  return judge(prepare(n, candidates), c);
}

}  // namespace haantjes
