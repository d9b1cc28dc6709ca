#include "haantjes/structure.hpp"

#include <sstream>
#include <stdexcept>

#include "haantjes/random.hpp"
#include "haantjes/torsion.hpp"

namespace haantjes {

namespace {

std::string point_string(const RationalVector& p) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += to_string(p(i));
  }
  return out + ")";
}

// Calls f on every increasing k-subset of {0..n-1}.
template <class F>
bool for_each_subset(Eigen::Index n, Eigen::Index k, F&& f) {
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (k > n) return true;
  while (true) {
    if (!f(idx)) return false;
    Eigen::Index i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

OperatorField columns(const std::vector<VectorField>& fields, Eigen::Index n, std::size_t nvars) {
  OperatorField m = OperatorField::Constant(n, static_cast<Eigen::Index>(fields.size()), Poly::zero(nvars));
  for (std::size_t c = 0; c < fields.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = fields[c];
  return m;
}

std::size_t nvars_of(const std::vector<VectorField>& fields) {
  std::size_t nv = 0;
  for (const auto& f : fields) nv = std::max(nv, ring_nvars(f));
  return nv;
}

// Some maximal minor of the n x m matrix (m <= n) is a nonzero polynomial.
bool has_nonzero_minor(const OperatorField& m) {
  if (m.cols() == 0) return true;
  if (m.cols() > m.rows()) return false;
  bool found = false;
  for_each_subset(m.rows(), m.cols(), [&](const std::vector<Eigen::Index>& rows) {
    OperatorField sub(m.cols(), m.cols());
    for (Eigen::Index r = 0; r < m.cols(); ++r) sub.row(r) = m.row(rows[static_cast<std::size_t>(r)]);
    found = !determinant(sub).is_zero();
    return !found;
  });
  return found;
}

}  // namespace

std::vector<RationalVector> default_sample_points(Eigen::Index n) {
  RandomSource rng(0x9e3779b97f4a7c15ULL);
  std::vector<RationalVector> out;
  for (int p = 0; p < 2; ++p) {
    RationalVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Rational(rng.integer(-9, 9)) / Rational(rng.integer(1, 5));
    out.push_back(std::move(v));
  }
  return out;
}

RegularityReport regularity_check(const OperatorField& l, const std::vector<RationalVector>& points) {
  if (points.empty()) throw std::invalid_argument("regularity_check: no sample points");
  if (l.rows() != l.cols()) throw std::invalid_argument("regularity_check: operator is not square");
  const auto n = l.rows();
  RegularityReport report;
  report.eigenvalue = trace(l) * Poly(Rational(1, static_cast<long>(n)));
  OperatorField shifted = l;
  for (Eigen::Index i = 0; i < n; ++i) shifted(i, i) -= report.eigenvalue;
  for (std::size_t p = 0; p < points.size(); ++p) {
    const RationalVector& point = points[p];
    if (point.size() != n) {
      throw std::invalid_argument("sample point " + point_string(point) + " has " +
                                  std::to_string(point.size()) + " coordinates, expected " +
                                  std::to_string(n));
    }
    const RationalMatrix a = evaluate(shifted, std::span<const Rational>(point.data(), point.size()));
    RationalMatrix ak = a;
    std::vector<Eigen::Index> profile;
    bool ok = true;
    for (Eigen::Index k = 1; k <= n; ++k) {
      profile.push_back(rank(ak));
      ok = ok && profile.back() == n - k;
      ak = (ak * a).eval();
    }
    report.sampled_points.push_back(point);
    report.rank_profile.push_back(std::move(profile));
    if (!ok && report.regular) {
      report.regular = false;
      report.first_failure = p;
    }
  }
  return report;
}

Poly determinant(const OperatorField& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const auto n = m.rows();
  if (n == 0) return Poly(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Poly out = Poly::zero(ring_nvars(m));
  for (Eigen::Index c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    OperatorField minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index cc = 0, t = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, t++) = m(r, cc);
    const Poly term = m(0, c) * determinant(minor);
    if (c % 2 == 0) out += term;
    else out -= term;
  }
  return out;
}

bool generically_independent(const std::vector<VectorField>& fields,
                             const std::vector<RationalVector>& points) {
  if (fields.empty()) return true;
  const auto n = fields.front().size();
  if (static_cast<Eigen::Index>(fields.size()) > n) return false;
  const OperatorField m = columns(fields, n, nvars_of(fields));
  const auto nv = ring_nvars(m);
  for (const auto& p : points) {
    RationalVector full = RationalVector::Zero(static_cast<Eigen::Index>(nv));
    for (Eigen::Index i = 0; i < std::min<Eigen::Index>(p.size(), full.size()); ++i) full(i) = p(i);
    if (rank(evaluate(m, std::span<const Rational>(full.data(), full.size()))) == m.cols()) return true;
  }
  return has_nonzero_minor(m);
}

Distribution span_of(std::vector<VectorField> generators) {
  Distribution d;
  if (!generators.empty()) d.dim = generators.front().size();
  for (const auto& g : generators)
    if (g.size() != d.dim) throw std::invalid_argument("span_of: generators of different dimensions");
  if (static_cast<Eigen::Index>(generators.size()) > d.dim && d.dim > 0)
    throw std::invalid_argument("span_of: more generators than the dimension");
  d.generators = std::move(generators);
  for (std::size_t i = 0; i < d.generators.size(); ++i) d.source_columns.push_back(static_cast<Eigen::Index>(i));
  return d;
}

Distribution image_flag(const OperatorField& l, int k) {
  const auto n = l.rows();
  if (k < 1 || k > n - 1) {
    throw std::invalid_argument("image_flag: k must be in 1.." + std::to_string(n - 1) + ", got " +
                                std::to_string(k));
  }
  // Flag of the nilpotent part; the same as L itself when trace(L) = 0.
  OperatorField nil = l;
  const Poly lambda = trace(l) * Poly(Rational(1, static_cast<long>(n)));
  for (Eigen::Index i = 0; i < n; ++i) nil(i, i) -= lambda;
  const OperatorField lk = power(nil, static_cast<unsigned>(k));
  const auto points = default_sample_points(n);
  Distribution d;
  d.dim = n;
  for (Eigen::Index c = 0; c < n; ++c) {
    auto trial = d.generators;
    trial.push_back(lk.col(c));
    if (generically_independent(trial, points)) {
      d.generators = std::move(trial);
      d.source_columns.push_back(c);
    }
  }
  return d;
}

IntegrabilityReport check_integrability(const Distribution& d, const std::vector<RationalVector>& points) {
  std::vector<RationalVector> probe = points;
  for (auto& p : default_sample_points(d.dim)) probe.push_back(std::move(p));
  if (!generically_independent(d.generators, probe))
    throw std::invalid_argument("is_integrable: generators are generically dependent");
  IntegrabilityReport report;
  const auto r = d.generators.size();
  if (static_cast<Eigen::Index>(r) >= d.dim) return report;
  const auto nv = nvars_of(d.generators);
  OperatorField bordered = columns(d.generators, d.dim, nv);
  bordered.conservativeResize(Eigen::NoChange, static_cast<Eigen::Index>(r + 1));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a + 1; b < r; ++b) {
      const VectorField br = lie_bracket(d.generators[a], d.generators[b]);
      bordered.col(static_cast<Eigen::Index>(r)) = br;
      if (has_nonzero_minor(bordered)) {
        report.integrable = false;
        report.failing_pair = std::make_pair(a, b);
        report.failing_bracket = br;
        return report;
      }
    }
  }
  return report;
}

bool is_integrable(const Distribution& d, const std::vector<RationalVector>& points) {
  return check_integrability(d, points).integrable;
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Triangularizable:
      return "Triangularizable";
    case VerdictKind::NotTriangularizable:
      return "NotTriangularizable";
    case VerdictKind::PreconditionViolated:
      return "PreconditionViolated";
  }
  return "?";
}

Verdict verdict(const OperatorField& l, const std::vector<RationalVector>& points) {
  const auto n = l.rows();
  if (l.cols() != n || (n != 3 && n != 4)) {
    throw std::invalid_argument("verdict is only available in dimensions 3 and 4 (got " +
                                std::to_string(n) + ")");
  }
  auto sample = default_sample_points(n);
  sample.insert(sample.end(), points.begin(), points.end());

  Verdict v;
  v.regularity = regularity_check(l, sample);
  if (!v.regularity.regular) {
    const auto p = *v.regularity.first_failure;
    std::ostringstream why;
    why << "not a single Jordan block at " << point_string(v.regularity.sampled_points[p])
        << ": ranks of (L - lambda)^k are";
    for (auto r : v.regularity.rank_profile[p]) why << ' ' << r;
    v.kind = VerdictKind::PreconditionViolated;
    v.detail = why.str();
    v.failing_certificates.push_back(v.detail);
    return v;
  }

  const std::string symbol = n == 3 ? "H" : "T";
  const Tensor12 s = n == 3 ? haantjes_torsion(l) : tensor_t(l);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        if (!s(i, j, k).is_zero())
          v.failing_certificates.push_back(symbol + "^" + std::to_string(i + 1) + "_{" +
                                           std::to_string(j + 1) + std::to_string(k + 1) +
                                           "} = " + to_string(s(i, j, k)));
  v.kind = v.failing_certificates.empty() ? VerdictKind::Triangularizable : VerdictKind::NotTriangularizable;
  v.detail = v.kind == VerdictKind::Triangularizable ? symbol + " vanishes" : symbol + " does not vanish";
  return v;
}

}  // namespace haantjes
