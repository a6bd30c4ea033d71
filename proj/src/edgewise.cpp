#include "interlace/edgewise.hpp"

#include <cstdlib>

namespace interlace {

namespace {

void check_parameters(int r, int n) {
  if (r < 2 || n < 1) {
    throw Error(ErrorCode::BadParameters, "need r >= 2 and n >= 1, got r=" + std::to_string(r) + " n=" + std::to_string(n));
  }
}

void check_leading_one(const std::vector<Integer>& v, const char* what) {
  if (v.empty()) throw Error(ErrorCode::MalformedVector, std::string(what) + " is empty");
  if (v.front() != 1) throw Error(ErrorCode::MalformedVector, std::string(what) + " must start with 1");
}

// Coefficient of x^{d-k} for k = 0..d.
std::vector<Integer> descending_coeffs(const Poly& p, std::size_t d) {
  std::vector<Integer> out(d + 1);
  for (std::size_t k = 0; k <= d; ++k) out[k] = p.coeff(d - k);
  return out;
}

}  // namespace

EVector e_base(int r) {
  check_parameters(r, 1);
  EVector v{r, 1, std::vector<Poly>(static_cast<std::size_t>(r), Poly::x())};
  v.polys[0] = Poly();
  return v;
}

EVector e_step(const EVector& v) {
  const std::size_t r = v.polys.size();
  const Poly x = Poly::x();
  // below[i] = E^0 + ... + E^{i-1}; total - below[i+1] is the sum above i.
  std::vector<Poly> below(r + 1);
  for (std::size_t h = 0; h < r; ++h) below[h + 1] = below[h] + v.polys[h];
  EVector out{v.r, v.n + 1, std::vector<Poly>(r)};
  for (std::size_t i = 0; i < r; ++i) out.polys[i] = x * below[i] + (below[r] - below[i + 1]);
  return out;
}

EVector e_vector(int r, int n) {
  check_parameters(r, n);
  EVector v = e_base(r);
  while (v.n < n) v = e_step(v);
  return v;
}

Poly local_h(int r, int n) { return e_vector(r, n).polys.front(); }

SymMatrix gamma_matrix(int r, const GammaVector& gamma) {
  if (gamma.r() != r) throw Error(ErrorCode::InvalidGamma, "gamma length does not match r = " + std::to_string(r));
  SymMatrix a(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      Entry e = Entry::Zero;
      if (j - i > gamma[i]) {
        e = Entry::One;
      } else if (i - j > gamma[i]) {
        e = Entry::X;
      }
      a.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), e);
    }
  }
  return a;
}

EVector e_gamma(int r, int n, const GammaVector& gamma) {
  check_parameters(r, n);
  if (gamma.r() != r) throw Error(ErrorCode::InvalidGamma, "gamma length does not match r = " + std::to_string(r));
  const SymMatrix a = gamma_matrix(r, gamma);
  EVector v{r, 1, oracle_E_gamma(1, r, gamma)};
  while (v.n < n) {
    v.polys = apply_matrix(a, v.polys);
    ++v.n;
  }
  return v;
}

HVector fh_transform(const FVector& f) {
  check_leading_one(f.entries, "f-vector");
  const std::size_t d = f.entries.size() - 1;
  const Poly shifted({-1, 1});
  Poly total;
  for (std::size_t i = 0; i <= d; ++i) total += f.entries[i] * pow(shifted, static_cast<unsigned>(d - i));
  return {descending_coeffs(total, d)};
}

FVector hf_transform(const HVector& h) {
  check_leading_one(h.entries, "h-vector");
  const std::size_t d = h.entries.size() - 1;
  // Substituting x = y + 1 gives sum_i f_{i-1} y^{d-i} = sum_i h_i (y+1)^{d-i}.
  const Poly shifted({1, 1});
  Poly total;
  for (std::size_t i = 0; i <= d; ++i) total += h.entries[i] * pow(shifted, static_cast<unsigned>(d - i));
  return {descending_coeffs(total, d)};
}

}  // namespace interlace
