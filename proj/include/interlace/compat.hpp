#pragma once

// Sampled compatibility testing for polynomial families.
//
// A family is compatible when every conic combination is real-rooted. That
// universal statement is only sampled here: PASS_SAMPLED is evidence at grid
// resolution, while FAIL always comes with an exact witness.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "interlace/poly.hpp"

namespace interlace {

class SampleGrid {
 public:
  // Throws BadParameters on an empty grid or a nonpositive weight.
  explicit SampleGrid(std::vector<Rational> weights);

  // {1/8, 1/3, 1/2, 1, 2, 3, 8, 64}
  static SampleGrid default_grid();

  const std::vector<Rational>& weights() const { return weights_; }

 private:
  std::vector<Rational> weights_;
};

enum class CompatStatus { PassSampled, Fail };

struct CompatWitness {
  std::vector<Rational> weights;  // one per combined polynomial
  Poly combination;               // denominators cleared; fails is_real_rooted
  std::string detail;
};

struct CompatVerdict {
  CompatStatus status = CompatStatus::PassSampled;
  std::optional<CompatWitness> witness;

  bool passed() const { return status == CompatStatus::PassSampled; }
  static CompatVerdict pass() { return {}; }
  static CompatVerdict fail(CompatWitness w) { return {CompatStatus::Fail, std::move(w)}; }
};

enum class Precondition { Checked, Unchecked };

// Weighted sum with the weights' denominators cleared by their common
// denominator. The result is a positive multiple of the rational combination.
Poly conic_combination(std::span<const Poly> fs, std::span<const Rational> weights);

CompatVerdict compatible_pair_sampled(const Poly& f, const Poly& g, const SampleGrid& grid,
                                      Precondition pre = Precondition::Checked);

CompatVerdict compatible_family_sampled(std::span<const Poly> fs, const SampleGrid& grid,
                                        Precondition pre = Precondition::Checked);

// Conditions (a) f_i, f_j compatible and (b) x*f_i, f_j compatible, for all i <= j.
CompatVerdict check_conditions_ab(std::span<const Poly> fs, const SampleGrid& grid,
                                  Precondition pre = Precondition::Checked);

// g_k = sum_{h<k} x*f_h + sum_{h>k} f_h.
std::vector<Poly> theorem_comp_transform(std::span<const Poly> fs);

std::string verdict_to_json(const CompatVerdict& v);

}  // namespace interlace
