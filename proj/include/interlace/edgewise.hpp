#pragma once

// Ascent-refined generating polynomials E^i_{r,n} via their linear recurrence,
// the local h-polynomial of the r-th edgewise subdivision of the simplex, the
// gamma-restricted generalization, and the f-vector / h-vector transform.

#include <cstdint>
#include <vector>

#include "interlace/matrices.hpp"
#include "interlace/poly.hpp"
#include "interlace/words.hpp"

namespace interlace {

// polys[i] collects the words ending in letter i.
struct EVector {
  int r = 2;
  int n = 1;
  std::vector<Poly> polys;

  friend bool operator==(const EVector&, const EVector&) = default;
};

// n = 1: (0, x, ..., x).
EVector e_base(int r);

// E^i_{n+1} = sum_{h<i} x E^h_n + sum_{h>i} E^h_n.
EVector e_step(const EVector& v);

// e_step applied n-1 times to e_base(r).
EVector e_vector(int r, int n);

// Local h-polynomial of the r-th edgewise subdivision of the (n-1)-simplex.
Poly local_h(int r, int n);

// a_ij = 0 if |i-j| <= gamma_i, 1 if j-i > gamma_i, x if i-j > gamma_i.
SymMatrix gamma_matrix(int r, const GammaVector& gamma);

// Base case by enumeration of the length-2 words, then gamma_matrix applied n-1 times.
EVector e_gamma(int r, int n, const GammaVector& gamma);

// (f_{-1}, f_0, ..., f_{d-1}) and (h_0, ..., h_d).
struct FVector {
  std::vector<Integer> entries;
};
struct HVector {
  std::vector<Integer> entries;
};

// sum_i f_{i-1} (x-1)^{d-i} = sum_i h_i x^{d-i}. Throws MalformedVector unless
// the vector is nonempty and starts with 1.
HVector fh_transform(const FVector& f);
FVector hf_transform(const HVector& h);

}  // namespace interlace
