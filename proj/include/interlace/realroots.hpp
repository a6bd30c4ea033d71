#pragma once

// Exact real-root counting, isolation and the interleaving relation f << g.
//
// Non-degenerate certificate intervals are open: (lo, hi) with lo < hi holds
// exactly one distinct root. A degenerate interval lo == hi pins an exact
// rational root.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "interlace/poly.hpp"

namespace interlace {

struct RootInterval {
  Rational lo;
  Rational hi;
  unsigned multiplicity = 1;

  bool degenerate() const { return lo == hi; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

struct RootCertificate {
  std::vector<RootInterval> intervals;

  std::size_t distinct_roots() const { return intervals.size(); }
  unsigned total_multiplicity() const;
  friend bool operator==(const RootCertificate&, const RootCertificate&) = default;
};

// Signed remainder sequence of the squarefree part.
class SturmChain {
 public:
  explicit SturmChain(const Poly& f);

  const std::vector<Poly>& chain() const { return chain_; }
  const Poly& squarefree() const { return chain_.front(); }

  int variations_at(const Rational& t) const;
  int variations_at_neg_infinity() const;
  int variations_at_pos_infinity() const;

  // Distinct roots in (lo, hi]; nullopt endpoints stand for -inf / +inf.
  int count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;

  // Distinct roots in the open interval (lo, hi).
  int count_open(const Rational& lo, const Rational& hi) const;

 private:
  std::vector<Poly> chain_;
};

Poly squarefree_part(const Poly& f);

// Number of distinct real roots of f in (lo, hi]. Throws ZeroPolynomial, EmptyInterval.
int count_real_roots(const Poly& f, const std::optional<Rational>& lo = std::nullopt,
                     const std::optional<Rational>& hi = std::nullopt);

RootCertificate isolate_roots(const Poly& f);

// Shrinks every non-degenerate interval below `width`. Throws CertificateMismatch
// if `cert` does not certify f.
RootCertificate refine_certificate(const Poly& f, const RootCertificate& cert, const Rational& width);

// True iff `cert` is a valid certificate of the real roots of f.
bool certifies(const Poly& f, const RootCertificate& cert);

bool is_real_rooted(const Poly& f);

// f << g. Throws NegativeLeadingCoefficient for a nonzero argument with negative
// leading coefficient.
bool interleaves(const Poly& f, const Poly& g);

bool is_interlacing_seq(std::span<const Poly> fs);

// Interlacing and every coefficient nonnegative.
bool in_fplus(std::span<const Poly> fs);

// [{"lo": "p/q", "hi": "p/q", "mult": k}, ...]
std::string certificate_to_json(const RootCertificate& cert);

}  // namespace interlace
