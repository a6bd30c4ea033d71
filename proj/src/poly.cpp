#include "interlace/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace interlace {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::EmptyInterval: return "EmptyInterval";
    case ErrorCode::CertificateMismatch: return "CertificateMismatch";
    case ErrorCode::NegativeLeadingCoefficient: return "NegativeLeadingCoefficient";
    case ErrorCode::NotRealRooted: return "NotRealRooted";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::InvalidGamma: return "InvalidGamma";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::MalformedVector: return "MalformedVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Poly::Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  canonicalize();
}

Poly Poly::constant(const Integer& c) { return Poly(std::vector<Integer>{c}); }

Poly Poly::monomial(const Integer& c, std::size_t power) {
  std::vector<Integer> v(power + 1);
  v[power] = c;
  return Poly(std::move(v));
}

void Poly::canonicalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

int Poly::degree() const noexcept {
  return coeffs_.empty() ? kNegInfinityDegree : static_cast<int>(coeffs_.size()) - 1;
}

Integer Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

const Integer& Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Integer Poly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  Integer g = content();
  if (sgn(leading()) < 0) g = -g;
  return divexact(g);
}

bool Poly::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) >= 0; });
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  canonicalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  canonicalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Integer& scalar) {
  if (sgn(scalar) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Poly Poly::divexact(const Integer& d) const {
  Poly r = *this;
  for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return r;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ',';
    out += coeffs_[k].get_str();
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view tok, std::string_view context) {
  tok = trim(tok);
  std::string_view digits = tok;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(ErrorCode::ParseError, "bad integer '" + std::string(tok) + "' in '" + std::string(context) + "'");
  }
  std::string s(tok.front() == '+' ? tok.substr(1) : tok);
  return Integer(s, 10);
}

}  // namespace

Poly Poly::parse(std::string_view text) {
  std::vector<Integer> coeffs;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    coeffs.push_back(parse_integer(tok, text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Poly(std::move(coeffs));
}

std::string Poly::pretty() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) out << mag.get_str();
    if (k >= 1) out << 'x';
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

Poly derivative(const Poly& a) {
  if (a.degree() <= 0) return {};
  std::vector<Integer> out(a.coeffs().size() - 1);
  for (std::size_t k = 1; k < a.coeffs().size(); ++k) out[k - 1] = a.coeffs()[k] * static_cast<unsigned long>(k);
  return Poly(std::move(out));
}

Poly pseudo_remainder(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const Integer& lb = b.leading();
  int steps = a.degree() - b.degree() + 1;
  Poly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Poly t = Poly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - b.degree()));
    r = r * lb - t * b;
    --steps;
  }
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
  return r * scale;
}

bool integer_divide(const Poly& a, const Poly& b, DivisionResult& out) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  Poly q;
  Poly r = a;
  const Integer& lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    if (!mpz_divisible_p(r.leading().get_mpz_t(), lb.get_mpz_t())) return false;
    Integer c;
    mpz_divexact(c.get_mpz_t(), r.leading().get_mpz_t(), lb.get_mpz_t());
    Poly t = Poly::monomial(c, static_cast<std::size_t>(r.degree() - b.degree()));
    r -= t * b;
    q += t;
  }
  out.quotient = std::move(q);
  out.remainder = std::move(r);
  return true;
}

bool divides(const Poly& b, const Poly& a) {
  if (b.is_zero()) return a.is_zero();
  return pseudo_remainder(a, b).is_zero();
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  // Primitive remainder sequence: each remainder is reduced to its primitive part.
  Poly u = a.primitive();
  Poly v = b.primitive();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    Poly r = pseudo_remainder(u, v).primitive();
    u = std::move(v);
    v = std::move(r);
  }
  return u.primitive();
}

Rational evaluate(const Poly& a, const Rational& t) {
  if (a.is_zero()) return 0;
  // Horner on numerator/denominator: value = N / q^d.
  const Integer& p = t.get_num();
  const Integer& q = t.get_den();
  Integer num = a.leading();
  Integer qpow = 1;
  for (int k = a.degree() - 1; k >= 0; --k) {
    qpow *= q;
    num = num * p + a.coeffs()[static_cast<std::size_t>(k)] * qpow;
  }
  Rational out(num, qpow);
  out.canonicalize();
  return out;
}

int sign_at(const Poly& a, const Rational& t) {
  if (a.is_zero()) return 0;
  const Integer& p = t.get_num();
  const Integer& q = t.get_den();
  Integer num = a.leading();
  Integer qpow = 1;
  for (int k = a.degree() - 1; k >= 0; --k) {
    qpow *= q;
    num = num * p + a.coeffs()[static_cast<std::size_t>(k)] * qpow;
  }
  return sgn(num);
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = Poly::constant(1);
  Poly b = base;
  while (exponent) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent) b *= b;
  }
  return result;
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  std::size_t slash = text.find('/');
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = 1;
  if (slash != std::string_view::npos) den = parse_integer(text.substr(slash + 1), text);
  if (sgn(den) == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace interlace
