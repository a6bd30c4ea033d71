#include "interlace/matrices.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

#include "interlace/realroots.hpp"

namespace interlace {

namespace {

void require_2x2(const SymMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "expected a 2x2 matrix, got " + m.to_string());
  }
}

bool is_zero_one(Entry e) { return e != Entry::X; }
bool is_zero_x(Entry e) { return e != Entry::One; }
int indicator(Entry e) { return e == Entry::Zero ? 0 : 1; }

using PolyMatrix2 = std::array<std::array<Poly, 2>, 2>;

PolyMatrix2 lift(const SymMatrix& m) {
  PolyMatrix2 out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) out[i][j] = to_poly(m.at(i, j));
  }
  return out;
}

std::optional<SymMatrix> symbolic_product(const SymMatrix& a, const SymMatrix& b) {
  const PolyMatrix2 pa = lift(a);
  const PolyMatrix2 pb = lift(b);
  SymMatrix out(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      auto e = entry_from_poly(pa[i][0] * pb[0][j] + pa[i][1] * pb[1][j]);
      if (!e) return std::nullopt;
      out.set(i, j, *e);
    }
  }
  return out;
}

}  // namespace

char to_char(Entry e) {
  switch (e) {
    case Entry::Zero: return '0';
    case Entry::One: return '1';
    case Entry::X: return 'x';
  }
  return '?';
}

Entry entry_from_char(char c) {
  switch (c) {
    case '0': return Entry::Zero;
    case '1': return Entry::One;
    case 'x': return Entry::X;
    default: throw Error(ErrorCode::ParseError, std::string("matrix entry must be 0, 1 or x, got '") + c + "'");
  }
}

Poly to_poly(Entry e) {
  switch (e) {
    case Entry::Zero: return {};
    case Entry::One: return Poly::constant(1);
    case Entry::X: return Poly::x();
  }
  return {};
}

std::optional<Entry> entry_from_poly(const Poly& p) {
  if (p.is_zero()) return Entry::Zero;
  if (p == Poly::constant(1)) return Entry::One;
  if (p == Poly::x()) return Entry::X;
  return std::nullopt;
}

SymMatrix::SymMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, Entry::Zero) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
}

SymMatrix::SymMatrix(std::initializer_list<std::string_view> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (auto row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (char c : row) entries_.push_back(entry_from_char(c));
  }
}

SymMatrix SymMatrix::submatrix(std::size_t k, std::size_t l, std::size_t i, std::size_t j) const {
  SymMatrix out(2, 2);
  out.set(0, 0, at(k, i));
  out.set(0, 1, at(k, j));
  out.set(1, 0, at(l, i));
  out.set(1, 1, at(l, j));
  return out;
}

std::string SymMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < cols_; ++j) out += to_char(at(i, j));
  }
  return out;
}

std::string SymMatrix::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < rows_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < cols_; ++j) row.push_back(std::string(1, to_char(at(i, j))));
    out.push_back(std::move(row));
  }
  return out.dump();
}

SymMatrix SymMatrix::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("matrix JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty() || !doc.front().is_array() || doc.front().empty()) {
    throw Error(ErrorCode::ParseError, "matrix JSON must be a nonempty array of nonempty arrays");
  }
  SymMatrix out(doc.size(), doc.front().size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& row = doc[i];
    if (!row.is_array() || row.size() != out.cols()) throw Error(ErrorCode::ParseError, "ragged matrix rows");
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_string() || row[j].get<std::string>().size() != 1) {
        throw Error(ErrorCode::ParseError, "matrix entries must be the strings \"0\", \"1\" or \"x\"");
      }
      out.set(i, j, entry_from_char(row[j].get<std::string>()[0]));
    }
  }
  return out;
}

std::vector<Poly> apply_matrix(const SymMatrix& g, std::span<const Poly> fs) {
  if (fs.size() != g.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix has " + std::to_string(g.cols()) + " columns but " +
                                                  std::to_string(fs.size()) + " polynomials were given");
  }
  std::vector<Poly> out(g.rows());
  for (std::size_t k = 0; k < g.rows(); ++k) {
    for (std::size_t i = 0; i < g.cols(); ++i) {
      switch (g.at(k, i)) {
        case Entry::Zero: break;
        case Entry::One: out[k] += fs[i]; break;
        case Entry::X: out[k] += Poly::x() * fs[i]; break;
      }
    }
  }
  return out;
}

std::vector<SamplePair> default_sample_pairs() {
  const Rational grid[] = {Rational(1, 8), Rational(1, 2), Rational(1), Rational(2), Rational(8)};
  std::vector<SamplePair> out;
  for (const auto& l : grid) {
    for (const auto& m : grid) out.push_back({l, m});
  }
  out.push_back({Rational(64), Rational(1, 64)});
  out.push_back({Rational(1, 64), Rational(1, 64)});
  return out;
}

std::pair<Poly, Poly> inequality_sides(const SymMatrix& m, const SamplePair& s) {
  require_2x2(m);
  Integer d;
  mpz_lcm(d.get_mpz_t(), s.lambda.get_den_mpz_t(), s.mu.get_den_mpz_t());
  // d * (lambda x + mu) with integer coefficients.
  const Poly linear({Integer(s.mu.get_num() * (d / s.mu.get_den())), Integer(s.lambda.get_num() * (d / s.lambda.get_den()))});
  const Poly scale = Poly::constant(d);
  Poly left = linear * to_poly(m.at(0, 1)) + scale * to_poly(m.at(1, 1));
  Poly right = linear * to_poly(m.at(0, 0)) + scale * to_poly(m.at(1, 0));
  return {std::move(left), std::move(right)};
}

std::optional<SamplePair> first_failing_sample(const SymMatrix& m, std::span<const SamplePair> pairs) {
  require_2x2(m);
  for (const auto& s : pairs) {
    auto [left, right] = inequality_sides(m, s);
    if (!interleaves(left, right)) return s;
  }
  return std::nullopt;
}

bool check_2x2_sampled(const SymMatrix& m, std::span<const SamplePair> pairs) {
  return !first_failing_sample(m, pairs).has_value();
}

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::I: return "I";
    case Rule::II: return "II";
    case Rule::III: return "III";
    case Rule::IV: return "IV";
    case Rule::V: return "V";
  }
  return "?";
}

PatternVerdict forbidden_pattern(const SymMatrix& m) {
  require_2x2(m);
  const Entry a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 0), d = m.at(1, 1);
  auto reject = [](Rule r) { return PatternVerdict{false, r}; };

  // (x over 1) in a column.
  if ((a == Entry::X && c == Entry::One) || (b == Entry::X && d == Entry::One)) return reject(Rule::I);
  // (1 x) as a row.
  if ((a == Entry::One && b == Entry::X) || (c == Entry::One && d == Entry::X)) return reject(Rule::II);
  const bool exception = m == SymMatrix{"11", "xx"} || m == SymMatrix{"x1", "x1"};
  if (!exception &&
      ((a == Entry::One && d == Entry::X) || (a == Entry::X && d == Entry::One) || (b == Entry::X && c == Entry::One))) {
    return reject(Rule::III);
  }
  const int det = indicator(a) * indicator(d) - indicator(b) * indicator(c);
  if (is_zero_one(a) && is_zero_one(b) && is_zero_one(c) && is_zero_one(d) && det < 0) return reject(Rule::IV);
  if (is_zero_x(a) && is_zero_x(b) && is_zero_x(c) && is_zero_x(d) && det < 0) return reject(Rule::V);
  return {};
}

std::vector<SymMatrix> all_2x2() {
  constexpr Entry kSymbols[] = {Entry::Zero, Entry::One, Entry::X};
  std::vector<SymMatrix> out;
  out.reserve(81);
  for (Entry a : kSymbols)
    for (Entry b : kSymbols)
      for (Entry c : kSymbols)
        for (Entry d : kSymbols) {
          SymMatrix m(2, 2);
          m.set(0, 0, a);
          m.set(0, 1, b);
          m.set(1, 0, c);
          m.set(1, 1, d);
          out.push_back(m);
        }
  return out;
}

Classification classify_all_2x2(std::span<const SamplePair> pairs) {
  if (pairs.empty()) throw Error(ErrorCode::BadParameters, "no (lambda, mu) samples given");
  Classification out;
  for (const auto& m : all_2x2()) {
    const PatternVerdict pattern = forbidden_pattern(m);
    const bool sampled = check_2x2_sampled(m, pairs);
    (pattern.allowed ? out.allowed : out.forbidden).push_back(m);
    if (sampled != pattern.allowed) out.disagreements.push_back({m, sampled, pattern});
  }
  return out;
}

std::vector<SymMatrix> generators() {
  return {
      SymMatrix{"10", "01"}, SymMatrix{"10", "x1"}, SymMatrix{"11", "01"}, SymMatrix{"11", "x1"},
      SymMatrix{"10", "11"}, SymMatrix{"00", "10"}, SymMatrix{"01", "x0"},
  };
}

std::vector<SymMatrix> generator_closure() {
  std::set<SymMatrix> members;
  for (const auto& g : generators()) members.insert(g);
  while (true) {
    std::set<SymMatrix> fresh;
    for (const auto& a : members) {
      for (const auto& b : members) {
        auto p = symbolic_product(a, b);
        if (p && !members.contains(*p)) fresh.insert(*p);
      }
    }
    if (fresh.empty()) break;
    members.insert(fresh.begin(), fresh.end());
  }
  return {members.begin(), members.end()};
}

bool preserves_check(const SymMatrix& g) {
  for (std::size_t k = 0; k < g.rows(); ++k)
    for (std::size_t l = k + 1; l < g.rows(); ++l)
      for (std::size_t i = 0; i < g.cols(); ++i)
        for (std::size_t j = i + 1; j < g.cols(); ++j) {
          if (!forbidden_pattern(g.submatrix(k, l, i, j)).allowed) return false;
        }
  return true;
}

bool ferrers_check(const SymMatrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const Entry e = g.at(i, j);
      // A ONE forces its up-right neighbours, an X its down-left neighbours;
      // checking the immediate neighbours suffices by transitivity.
      if (e == Entry::One) {
        if (i > 0 && g.at(i - 1, j) != Entry::One) return false;
        if (j + 1 < g.cols() && g.at(i, j + 1) != Entry::One) return false;
      } else if (e == Entry::X) {
        if (i + 1 < g.rows() && g.at(i + 1, j) != Entry::X) return false;
        if (j > 0 && g.at(i, j - 1) != Entry::X) return false;
      }
    }
  }
  return true;
}

bool minors_nonneg(const std::vector<std::vector<Rational>>& g) {
  if (g.empty()) return true;
  const std::size_t cols = g.front().size();
  for (const auto& row : g) {
    if (row.size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (const auto& v : row) {
      if (sgn(v) < 0) throw Error(ErrorCode::NegativeEntry, "entry " + rational_to_string(v) + " is negative");
    }
  }
  for (std::size_t k = 0; k < g.size(); ++k)
    for (std::size_t l = k + 1; l < g.size(); ++l)
      for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = i + 1; j < cols; ++j) {
          if (g[k][i] * g[l][j] - g[k][j] * g[l][i] < 0) return false;
        }
  return true;
}

ActionReport action_property_test(const SymMatrix& g, std::span<const Poly> fs) {
  if (!in_fplus(fs)) throw Error(ErrorCode::PreconditionViolated, "input sequence is not in F^+");
  ActionReport report;
  report.output = apply_matrix(g, fs);
  for (const auto& p : report.output) {
    if (!p.has_nonnegative_coeffs()) {
      report.pass = false;
      report.negative_coefficient = true;
      return report;
    }
  }
  for (std::size_t i = 0; i < report.output.size(); ++i) {
    for (std::size_t j = i + 1; j < report.output.size(); ++j) {
      if (!interleaves(report.output[i], report.output[j])) {
        report.pass = false;
        report.violating_pair = std::make_pair(i, j);
        return report;
      }
    }
  }
  return report;
}

}  // namespace interlace
