#pragma once

// Matrices over the symbols {0, 1, x} acting on polynomial sequences, and the
// tests that decide whether such a matrix preserves interlacing sequences.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "interlace/poly.hpp"

namespace interlace {

enum class Entry : unsigned char { Zero, One, X };

char to_char(Entry e);
Entry entry_from_char(char c);  // '0', '1', 'x'; throws ParseError
Poly to_poly(Entry e);
std::optional<Entry> entry_from_poly(const Poly& p);

class SymMatrix {
 public:
  // All-zero m x n matrix. Throws DimensionMismatch unless m, n >= 1.
  SymMatrix(std::size_t rows, std::size_t cols);
  // Rows as strings over "01x", e.g. {"1x", "01"}. Throws on ragged input.
  SymMatrix(std::initializer_list<std::string_view> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Entry at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Entry e) { entries_[i * cols_ + j] = e; }

  // Rows {k, l} and columns {i, j}, in that order.
  SymMatrix submatrix(std::size_t k, std::size_t l, std::size_t i, std::size_t j) const;

  // Compact "1x;01" form.
  std::string to_string() const;
  std::string to_json() const;
  // JSON array of arrays with "0" | "1" | "x" string entries.
  static SymMatrix from_json(const std::string& text);

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;
  friend auto operator<=>(const SymMatrix& a, const SymMatrix& b) {
    return std::tie(a.rows_, a.cols_, a.entries_) <=> std::tie(b.rows_, b.cols_, b.entries_);
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Entry> entries_;
};

// g_k = sum_i G_{ki} f_i. Throws DimensionMismatch.
std::vector<Poly> apply_matrix(const SymMatrix& g, std::span<const Poly> fs);

struct SamplePair {
  Rational lambda;
  Rational mu;
};

// {1/8, 1/2, 1, 2, 8}^2 followed by (64, 1/64) and (1/64, 1/64).
std::vector<SamplePair> default_sample_pairs();

// Both sides of (lambda x + mu) M_{0,1} + M_{1,1} << (lambda x + mu) M_{0,0} + M_{1,0},
// scaled by the common denominator of lambda and mu.
std::pair<Poly, Poly> inequality_sides(const SymMatrix& m, const SamplePair& s);

// First sample at which the inequality fails, if any. Requires a 2x2 matrix.
std::optional<SamplePair> first_failing_sample(const SymMatrix& m, std::span<const SamplePair> pairs);

bool check_2x2_sampled(const SymMatrix& m, std::span<const SamplePair> pairs);

enum class Rule { I, II, III, IV, V };
std::string_view to_string(Rule r);

struct PatternVerdict {
  bool allowed = true;
  std::optional<Rule> rule;
};

// Forbidden 2x2 shapes, tested in order I..V; the first match is reported.
PatternVerdict forbidden_pattern(const SymMatrix& m);

struct Disagreement {
  SymMatrix matrix;
  bool sampled_allowed;
  PatternVerdict pattern;
};

struct Classification {
  std::vector<SymMatrix> allowed;
  std::vector<SymMatrix> forbidden;
  std::vector<Disagreement> disagreements;
};

// All 81 2x2 {0,1,x} matrices in lexicographic order.
std::vector<SymMatrix> all_2x2();

// Classifies by the pattern rules and by sampling; allowed/forbidden follow the
// pattern rules.
Classification classify_all_2x2(std::span<const SamplePair> pairs);

// The seven generating matrices.
std::vector<SymMatrix> generators();

// Products of members closed to a fixed point, keeping only products whose
// entries stay in {0, 1, x}. Sorted.
std::vector<SymMatrix> generator_closure();

// Every 2x2 submatrix passes forbidden_pattern.
bool preserves_check(const SymMatrix& g);

// ONE entries closed up-right, X entries closed down-left.
bool ferrers_check(const SymMatrix& g);

// All 2x2 minors of a nonnegative matrix are >= 0. Throws NegativeEntry.
bool minors_nonneg(const std::vector<std::vector<Rational>>& g);

struct ActionReport {
  bool pass = true;
  std::vector<Poly> output;
  std::optional<std::pair<std::size_t, std::size_t>> violating_pair;  // indices into output
  bool negative_coefficient = false;
};

// Applies g to an F^+ sequence and certifies the image is in F^+.
// Throws PreconditionViolated if fs is not in F^+.
ActionReport action_property_test(const SymMatrix& g, std::span<const Poly> fs);

}  // namespace interlace
