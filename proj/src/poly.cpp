#include "haantjes/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace haantjes {

namespace {

std::uint64_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

std::size_t common_nvars(const Poly& a, const Poly& b) {
  if (a.nvars() == b.nvars()) return a.nvars();
  if (a.nvars() == 0) return b.nvars();
  if (b.nvars() == 0) return a.nvars();
  throw std::invalid_argument("polynomial ring mismatch: " + std::to_string(a.nvars()) +
                              " vs " + std::to_string(b.nvars()) + " variables");
}

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::runtime_error("at position " + std::to_string(position) + ": " + what),
      position_(position) {}

Poly::Poly(int c) : Poly(Rational(c)) {}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

Poly Poly::zero(std::size_t nvars) {
  Poly p;
  p.nvars_ = nvars;
  return p;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p = zero(nvars);
  if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) {
    throw std::out_of_range("variable index " + std::to_string(index + 1) + " exceeds " +
                            std::to_string(nvars));
  }
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e), Rational(1));
}

Poly Poly::monomial(Exponents exponents, const Rational& c) {
  Poly p = zero(exponents.size());
  if (c != 0) p.terms_.emplace(std::move(exponents), c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant_term() const {
  if (terms_.empty()) return Rational(0);
  // Grlex puts the constant monomial last.
  const auto& [e, c] = *terms_.rbegin();
  return total_degree(e) == 0 ? c : Rational(0);
}

std::uint32_t Poly::degree() const {
  if (terms_.empty()) return 0;
  return static_cast<std::uint32_t>(total_degree(terms_.begin()->first));
}

Poly Poly::promoted(std::size_t nvars) const {
  if (nvars == nvars_) return *this;
  if (nvars < nvars_) throw std::invalid_argument("cannot demote a polynomial ring");
  Poly p = zero(nvars);
  for (const auto& [e, c] : terms_) {
    Exponents wide(nvars, 0);
    std::copy(e.begin(), e.end(), wide.begin());
    p.terms_.emplace_hint(p.terms_.end(), std::move(wide), c);
  }
  return p;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& rhs) {
  const auto n = common_nvars(*this, rhs);
  if (nvars_ != n) *this = promoted(n);
  if (rhs.nvars_ != n) return *this += rhs.promoted(n);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  const auto n = common_nvars(*this, rhs);
  if (nvars_ != n) *this = promoted(n);
  if (rhs.nvars_ != n) return *this -= rhs.promoted(n);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  const auto n = common_nvars(lhs, rhs);
  if (lhs.nvars_ != n) return lhs.promoted(n) * rhs;
  if (rhs.nvars_ != n) return lhs * rhs.promoted(n);
  Poly out = Poly::zero(n);
  if (lhs.is_zero() || rhs.is_zero()) return out;
  Exponents e(n);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Poly operator-(Poly p) {
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

bool operator==(const Poly& lhs, const Poly& rhs) {
  if (lhs.nvars_ == rhs.nvars_) return lhs.terms_ == rhs.terms_;
  if (lhs.nvars_ == 0) return lhs.promoted(rhs.nvars_).terms_ == rhs.terms_;
  if (rhs.nvars_ == 0) return lhs.terms_ == rhs.promoted(lhs.nvars_).terms_;
  return false;
}

Poly diff(const Poly& p, std::size_t k) {
  if (k >= p.nvars()) {
    throw std::out_of_range("derivative index " + std::to_string(k + 1) + " exceeds " +
                            std::to_string(p.nvars()));
  }
  Poly out = Poly::zero(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[k] == 0) continue;
    Exponents d = e;
    --d[k];
    out += Poly::monomial(std::move(d), c * e[k]);
  }
  return out;
}

Poly pow(const Poly& p, std::uint32_t e) {
  Poly result = Poly::constant(p.nvars(), Rational(1));
  Poly base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Rational evaluate(const Poly& p, std::span<const Rational> point) {
  if (p.nvars() != 0 && point.size() != p.nvars()) {
    throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) +
                                " coordinates, polynomial has " + std::to_string(p.nvars()) +
                                " variables");
  }
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

Poly substitute(const Poly& p, const std::map<std::size_t, Rational>& values) {
  for (const auto& [k, v] : values) {
    if (k >= p.nvars()) throw std::out_of_range("substitution index out of range");
  }
  Poly out = Poly::zero(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponents kept = e;
    Rational coeff = c;
    for (const auto& [k, v] : values) {
      for (std::uint32_t i = 0; i < e[k]; ++i) coeff *= v;
      kept[k] = 0;
    }
    out += Poly::monomial(std::move(kept), coeff);
  }
  return out;
}

Poly compose(const Poly& p, std::span<const Poly> images) {
  if (p.nvars() != 0 && images.size() != p.nvars()) {
    throw std::invalid_argument("compose: expected one image per variable");
  }
  std::size_t target = 0;
  for (const auto& img : images) target = std::max(target, img.nvars());
  Poly out = Poly::zero(target);
  // Cache of images[i]^k, grown on demand.
  std::vector<std::vector<Poly>> powers(images.size());
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(images[i].promoted(target));
      while (cache.size() < e[i]) cache.push_back(cache.back() * cache.front());
      term *= cache[e[i] - 1];
    }
    out += term;
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  Poly parse() {
    Poly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expression() {
    Poly p = term();
    while (true) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Poly term() {
    Poly p = unary();
    while (true) {
      if (accept('*')) {
        p *= unary();
      } else if (accept('/')) {
        const auto at = pos_;
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) {
          throw ParseError(at, "division is only allowed by a nonzero constant");
        }
        p *= Rational(1) / d.constant_term();
      } else {
        return p;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      skip_space();
      const auto at = pos_;
      const auto digits = read_digits();
      if (digits.empty()) throw ParseError(at, "expected a non-negative integer exponent");
      if (digits.size() > 4) throw ParseError(at, "exponent too large");
      return pow(base, static_cast<std::uint32_t>(std::stoul(digits)));
    }
    return base;
  }

  Poly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expression();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly::constant(nvars_, Rational(read_digits()));
    }
    if (c == 'x') {
      const auto at = pos_;
      ++pos_;
      const auto digits = read_digits();
      if (digits.empty()) throw ParseError(at, "expected a variable index after 'x'");
      const auto index = std::stoull(digits.size() > 18 ? std::string("0") : digits);
      if (index == 0 || index > nvars_) {
        throw ParseError(at, "variable x" + digits + " out of range (" +
                                 std::to_string(nvars_) + " variables)");
      }
      return Poly::variable(nvars_, index - 1);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string read_digits() {
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Exponents& e, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

Poly parse_poly(std::string_view text, std::size_t nvars) {
  if (nvars == 0) throw std::invalid_argument("parse_poly: nvars must be positive");
  return Parser(text, nvars).parse();
}

std::string to_string(const Poly& p, std::span<const std::string> names) {
  if (names.size() < p.nvars()) throw std::invalid_argument("to_string: too few variable names");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const auto mono = monomial_text(e, names);
    const Rational mag = c < 0 ? Rational(-c) : c;
    std::string body;
    if (mono.empty()) {
      body = mag.str();
    } else if (mag == 1) {
      body = mono;
    } else {
      body = mag.str() + "*" + mono;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string to_string(const Poly& p) {
  std::vector<std::string> names(p.nvars());
  for (std::size_t i = 0; i < names.size(); ++i) names[i] = "x" + std::to_string(i + 1);
  return to_string(p, names);
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace haantjes
