#include "interlace/compat.hpp"

#include <json.hpp>

#include "interlace/realroots.hpp"

namespace interlace {

namespace {

void require_admissible(const Poly& p, const std::string& name) {
  if (!p.has_nonnegative_coeffs()) {
    throw Error(ErrorCode::PreconditionViolated, name + " = " + p.pretty() + " has a negative coefficient");
  }
  if (!is_real_rooted(p)) throw Error(ErrorCode::NotRealRooted, name + " = " + p.pretty());
}

std::string pair_name(const char* what, std::size_t i, std::size_t j) {
  return std::string(what) + " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Tests f + c*g over the grid; the witness detail is prefixed by `label`.
std::optional<CompatWitness> first_pair_failure(const Poly& f, const Poly& g, const SampleGrid& grid,
                                                const std::string& label) {
  const Poly pair[] = {f, g};
  for (const auto& c : grid.weights()) {
    const Rational weights[] = {Rational(1), c};
    Poly combo = conic_combination(pair, weights);
    if (!is_real_rooted(combo)) {
      return CompatWitness{{Rational(1), c}, std::move(combo), label};
    }
  }
  return std::nullopt;
}

}  // namespace

SampleGrid::SampleGrid(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw Error(ErrorCode::BadParameters, "sample grid is empty");
  for (const auto& w : weights_) {
    if (sgn(w) <= 0) throw Error(ErrorCode::BadParameters, "sample weight " + rational_to_string(w) + " is not positive");
  }
}

SampleGrid SampleGrid::default_grid() {
  return SampleGrid({Rational(1, 8), Rational(1, 3), Rational(1, 2), Rational(1), Rational(2), Rational(3),
                     Rational(8), Rational(64)});
}

Poly conic_combination(std::span<const Poly> fs, std::span<const Rational> weights) {
  if (fs.size() != weights.size()) throw Error(ErrorCode::DimensionMismatch, "weights and polynomials differ in count");
  Integer denom = 1;
  for (const auto& w : weights) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), w.get_den_mpz_t());
  Poly out;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    Integer scale = weights[k].get_num() * (denom / weights[k].get_den());
    out += fs[k] * scale;
  }
  return out;
}

CompatVerdict compatible_pair_sampled(const Poly& f, const Poly& g, const SampleGrid& grid, Precondition pre) {
  if (pre == Precondition::Checked) {
    require_admissible(f, "f");
    require_admissible(g, "g");
  }
  if (auto w = first_pair_failure(f, g, grid, "pair")) return CompatVerdict::fail(std::move(*w));
  return CompatVerdict::pass();
}

CompatVerdict compatible_family_sampled(std::span<const Poly> fs, const SampleGrid& grid, Precondition pre) {
  if (pre == Precondition::Checked) {
    for (std::size_t k = 0; k < fs.size(); ++k) require_admissible(fs[k], "f" + std::to_string(k + 1));
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (auto w = first_pair_failure(fs[i], fs[j], grid, pair_name("pair", i, j))) {
        // Pair weights (1, c) lifted to the whole family.
        std::vector<Rational> weights(fs.size(), Rational(0));
        weights[i] = w->weights[0];
        weights[j] = w->weights[1];
        w->weights = std::move(weights);
        return CompatVerdict::fail(std::move(*w));
      }
    }
  }
  // Cross-check: full combinations with the grid weights assigned cyclically.
  if (fs.size() > 2) {
    const auto& g = grid.weights();
    for (std::size_t shift = 0; shift < g.size(); ++shift) {
      std::vector<Rational> weights(fs.size());
      for (std::size_t j = 0; j < fs.size(); ++j) weights[j] = g[(j + shift) % g.size()];
      Poly combo = conic_combination(fs, weights);
      if (!is_real_rooted(combo)) {
        return CompatVerdict::fail({std::move(weights), std::move(combo), "full combination"});
      }
    }
  }
  return CompatVerdict::pass();
}

CompatVerdict check_conditions_ab(std::span<const Poly> fs, const SampleGrid& grid, Precondition pre) {
  if (pre == Precondition::Checked) {
    for (std::size_t k = 0; k < fs.size(); ++k) require_admissible(fs[k], "f" + std::to_string(k + 1));
  }
  const Poly x = Poly::x();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i; j < fs.size(); ++j) {
      if (auto w = first_pair_failure(fs[i], fs[j], grid, pair_name("condition (a), pair", i, j))) {
        return CompatVerdict::fail(std::move(*w));
      }
      if (auto w = first_pair_failure(x * fs[i], fs[j], grid, pair_name("condition (b), pair", i, j))) {
        return CompatVerdict::fail(std::move(*w));
      }
    }
  }
  return CompatVerdict::pass();
}

std::vector<Poly> theorem_comp_transform(std::span<const Poly> fs) {
  const std::size_t n = fs.size();
  const Poly x = Poly::x();
  // prefix[k] = f_0 + ... + f_{k-1}; the suffix sum follows from the total.
  std::vector<Poly> prefix(n + 1);
  for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + fs[k];
  std::vector<Poly> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = x * prefix[k] + (prefix[n] - prefix[k + 1]);
  return out;
}

std::string verdict_to_json(const CompatVerdict& v) {
  nlohmann::json out;
  out["status"] = v.passed() ? "PASS_SAMPLED" : "FAIL";
  if (v.witness) {
    nlohmann::json weights = nlohmann::json::array();
    for (const auto& w : v.witness->weights) weights.push_back(rational_to_string(w));
    out["witness"] = {{"weights", weights}, {"combination", v.witness->combination.to_string()},
                      {"detail", v.witness->detail}};
  }
  return out.dump();
}

}  // namespace interlace
