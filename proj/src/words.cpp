#include "interlace/words.hpp"

#include <cerrno>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace interlace {

namespace {

void check_parameters(int n, int r) {
  if (n < 1 || r < 2) {
    throw Error(ErrorCode::BadParameters, "need n >= 1 and r >= 2, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
}

// (r-1)^n bounds the size of every family enumerated here.
void check_budget(int n, int r, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int k = 0; k < n; ++k) {
    if (total > budget / static_cast<std::uint64_t>(r - 1)) {
      throw Error(ErrorCode::BudgetExceeded, "(r-1)^n exceeds the enumeration budget of " + std::to_string(budget));
    }
    total *= static_cast<std::uint64_t>(r - 1);
  }
}

// Depth-first in lexicographic letter order. `leaf(letters, asc)` sees each word.
template <class Leaf>
void depth_first(int n, int r, const std::vector<int>& gamma, bool closed, Leaf&& leaf) {
  std::vector<int> letters(static_cast<std::size_t>(n) + 1, 0);
  auto step = [&](auto&& self, int pos, int asc) -> void {
    if (pos > n) {
      if (!closed || letters.back() == 0) leaf(letters, asc);
      return;
    }
    const int prev = letters[static_cast<std::size_t>(pos) - 1];
    for (int next = 0; next < r; ++next) {
      if (std::abs(next - prev) <= gamma[static_cast<std::size_t>(next)]) continue;
      letters[static_cast<std::size_t>(pos)] = next;
      self(self, pos + 1, asc + (prev < next ? 1 : 0));
    }
  };
  step(step, 1, 0);
}

void visit_words(int n, int r, const std::vector<int>& gamma, bool closed, const WordVisitor& visit) {
  Word w;
  w.alphabet_size = r;
  depth_first(n, r, gamma, closed, [&](const std::vector<int>& letters, int) {
    w.letters = letters;
    visit(w);
  });
}

std::vector<Poly> bucketed(int n, int r, const std::vector<int>& gamma) {
  // counts[last][asc]; ascents never exceed n.
  std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(r),
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  depth_first(n, r, gamma, false, [&](const std::vector<int>& letters, int asc) {
    ++counts[static_cast<std::size_t>(letters.back())][static_cast<std::size_t>(asc)];
  });
  std::vector<Poly> out;
  out.reserve(counts.size());
  for (const auto& row : counts) {
    std::vector<Integer> coeffs;
    coeffs.reserve(row.size());
    for (auto c : row) coeffs.emplace_back(static_cast<unsigned long>(c));
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

}  // namespace

std::uint64_t budget_from_env() {
  const char* raw = std::getenv("INTERLACE_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultBudget;
  char* end = nullptr;
  errno = 0;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (errno != 0 || *end != '\0' || v == 0 || raw[0] == '-') {
    throw Error(ErrorCode::BadParameters, std::string("INTERLACE_BUDGET must be a positive integer, got '") + raw + "'");
  }
  return static_cast<std::uint64_t>(v);
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(letters[k]);
  }
  return out;
}

int ascents(const Word& w) {
  int asc = 0;
  for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
    if (w.letters[i] < w.letters[i + 1]) ++asc;
  }
  return asc;
}

GammaVector::GammaVector(std::vector<int> values) : values_(std::move(values)) {
  const int r = static_cast<int>(values_.size());
  if (r < 2) throw Error(ErrorCode::InvalidGamma, "gamma needs at least two entries");
  for (int i = 0; i < r; ++i) {
    if (values_[static_cast<std::size_t>(i)] < 0 || values_[static_cast<std::size_t>(i)] > r - 2) {
      throw Error(ErrorCode::InvalidGamma, "gamma_" + std::to_string(i) + " outside [0, r-2] in " + to_string());
    }
    if (i + 1 < r && std::abs(values_[static_cast<std::size_t>(i) + 1] - values_[static_cast<std::size_t>(i)]) > 1) {
      throw Error(ErrorCode::InvalidGamma, "adjacent entries differ by more than 1 in " + to_string());
    }
  }
}

GammaVector GammaVector::zeros(int r) {
  if (r < 2) throw Error(ErrorCode::BadParameters, "r must be at least 2");
  return GammaVector(std::vector<int>(static_cast<std::size_t>(r), 0));
}

std::vector<GammaVector> GammaVector::all_valid(int r) {
  if (r < 2) throw Error(ErrorCode::BadParameters, "r must be at least 2");
  std::vector<GammaVector> out;
  std::vector<int> cur(static_cast<std::size_t>(r));
  auto extend = [&](auto&& self, int pos) -> void {
    if (pos == r) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= r - 2; ++v) {
      if (pos > 0 && std::abs(v - cur[static_cast<std::size_t>(pos) - 1]) > 1) continue;
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
    }
  };
  extend(extend, 0);
  return out;
}

GammaVector GammaVector::parse(const std::string& text) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      values.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad gamma entry '" + tok + "'");
    }
  }
  return GammaVector(std::move(values));
}

bool GammaVector::all_zero() const {
  for (int v : values_) {
    if (v != 0) return false;
  }
  return true;
}

std::string GammaVector::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(values_[k]);
  }
  return out;
}

void enumerate_sw_prime(int n, int r, const WordVisitor& visit, std::uint64_t budget) {
  check_parameters(n, r);
  check_budget(n, r, budget);
  visit_words(n, r, std::vector<int>(static_cast<std::size_t>(r), 0), false, visit);
}

void enumerate_sw(int n, int r, const WordVisitor& visit, std::uint64_t budget) {
  check_parameters(n, r);
  check_budget(n, r, budget);
  visit_words(n, r, std::vector<int>(static_cast<std::size_t>(r), 0), true, visit);
}

void enumerate_sw_gamma(int n, int r, const GammaVector& gamma, bool closed, const WordVisitor& visit,
                        std::uint64_t budget) {
  check_parameters(n, r);
  if (gamma.r() != r) throw Error(ErrorCode::InvalidGamma, "gamma has " + std::to_string(gamma.r()) + " entries, r = " + std::to_string(r));
  check_budget(n, r, budget);
  visit_words(n, r, gamma.values(), closed, visit);
}

std::vector<Word> collect_sw_prime(int n, int r, std::uint64_t budget) {
  std::vector<Word> out;
  enumerate_sw_prime(n, r, [&](const Word& w) { out.push_back(w); }, budget);
  return out;
}

std::vector<Word> collect_sw_gamma(int n, int r, const GammaVector& gamma, bool closed, std::uint64_t budget) {
  std::vector<Word> out;
  enumerate_sw_gamma(n, r, gamma, closed, [&](const Word& w) { out.push_back(w); }, budget);
  return out;
}

std::vector<Poly> oracle_E(int n, int r, std::uint64_t budget) {
  check_parameters(n, r);
  check_budget(n, r, budget);
  return bucketed(n, r, std::vector<int>(static_cast<std::size_t>(r), 0));
}

Poly oracle_local_h(int n, int r, std::uint64_t budget) { return oracle_E(n, r, budget).front(); }

std::vector<Poly> oracle_E_gamma(int n, int r, const GammaVector& gamma, std::uint64_t budget) {
  check_parameters(n, r);
  if (gamma.r() != r) throw Error(ErrorCode::InvalidGamma, "gamma length does not match r");
  check_budget(n, r, budget);
  return bucketed(n, r, gamma.values());
}

Poly oracle_local_h_gamma(int n, int r, const GammaVector& gamma, std::uint64_t budget) {
  return oracle_E_gamma(n, r, gamma, budget).front();
}

}  // namespace interlace
