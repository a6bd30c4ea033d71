#pragma once

// Brute-force enumeration of restricted Smirnov words and their
// ascent-generating polynomials. These are the oracles the recurrences in
// edgewise.hpp are checked against.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "interlace/poly.hpp"

namespace interlace {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Reads INTERLACE_BUDGET; falls back to kDefaultBudget. Throws BadParameters on
// a malformed or zero value.
std::uint64_t budget_from_env();

struct Word {
  std::vector<int> letters;  // w_0, ..., w_n
  int alphabet_size = 2;

  int length() const { return static_cast<int>(letters.size()) - 1; }  // n
  std::string to_string() const;
  friend bool operator==(const Word&, const Word&) = default;
};

// Indices i with w_i < w_{i+1}.
int ascents(const Word& w);

// Jump thresholds (gamma_0, ..., gamma_{r-1}); a step arriving at letter i must
// jump by more than gamma_i. Validated on construction.
class GammaVector {
 public:
  // Throws InvalidGamma unless 0 <= gamma_i <= r-2 and |gamma_{i+1} - gamma_i| <= 1,
  // where r = values.size() >= 2.
  explicit GammaVector(std::vector<int> values);

  static GammaVector zeros(int r);
  static std::vector<GammaVector> all_valid(int r);
  static GammaVector parse(const std::string& text);

  int r() const { return static_cast<int>(values_.size()); }
  int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& values() const { return values_; }
  bool all_zero() const;
  std::string to_string() const;

 private:
  std::vector<int> values_;
};

using WordVisitor = std::function<void(const Word&)>;

// SW'(n, r): w_0 = 0 and consecutive letters distinct, in lexicographic order.
void enumerate_sw_prime(int n, int r, const WordVisitor& visit, std::uint64_t budget = kDefaultBudget);

// SW(n, r): as above with w_n = 0.
void enumerate_sw(int n, int r, const WordVisitor& visit, std::uint64_t budget = kDefaultBudget);

// w_0 = 0 and |w_j - w_{j-1}| > gamma_{w_j}; `closed` additionally requires w_n = 0.
void enumerate_sw_gamma(int n, int r, const GammaVector& gamma, bool closed, const WordVisitor& visit,
                        std::uint64_t budget = kDefaultBudget);

std::vector<Word> collect_sw_prime(int n, int r, std::uint64_t budget = kDefaultBudget);
std::vector<Word> collect_sw_gamma(int n, int r, const GammaVector& gamma, bool closed,
                                   std::uint64_t budget = kDefaultBudget);

// (E^0, ..., E^{r-1}) bucketed by last letter, by full enumeration of SW'(n, r).
std::vector<Poly> oracle_E(int n, int r, std::uint64_t budget = kDefaultBudget);

// Ascent polynomial over SW(n, r).
Poly oracle_local_h(int n, int r, std::uint64_t budget = kDefaultBudget);

std::vector<Poly> oracle_E_gamma(int n, int r, const GammaVector& gamma, std::uint64_t budget = kDefaultBudget);
Poly oracle_local_h_gamma(int n, int r, const GammaVector& gamma, std::uint64_t budget = kDefaultBudget);

}  // namespace interlace
