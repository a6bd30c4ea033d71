#include "interlace/realroots.hpp"

#include <json.hpp>

#include <algorithm>
#include <utility>

namespace interlace {

namespace {

Poly exact_quotient(const Poly& a, const Poly& b) {
  DivisionResult d;
  if (!integer_divide(a, b, d) || !d.remainder.is_zero()) {
    throw Error(ErrorCode::PreconditionViolated, "inexact polynomial division");
  }
  return d.quotient;
}

int sign_variations(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Smallest power of two strictly exceeding the Cauchy root bound of f.
Rational root_bound(const Poly& f) {
  Integer lc = abs(f.leading());
  Integer max_ratio = 0;
  for (int k = 0; k < f.degree(); ++k) {
    Integer c = abs(f.coeffs()[static_cast<std::size_t>(k)]);
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), c.get_mpz_t(), lc.get_mpz_t());
    if (q > max_ratio) max_ratio = q;
  }
  Integer bound = 1;
  while (bound <= max_ratio + 1) bound *= 2;
  return Rational(bound);
}

// Multiplicity of a root pinned by an interval, via the repeated-gcd chain
// G_1 = gcd(f, f'), G_{k+1} = gcd(G_k, G_k'). A root of multiplicity m is a
// root of exactly G_1, ..., G_{m-1}.
class MultiplicityProbe {
 public:
  explicit MultiplicityProbe(const Poly& f) : base_(f) {
    Poly g = gcd(f, derivative(f));
    while (g.degree() >= 1) {
      chains_.emplace_back(g);
      g = gcd(g, derivative(g));
    }
  }

  unsigned multiplicity(const RootInterval& iv) const {
    if (!has_root(base_, iv)) return 0;
    unsigned m = 1;
    for (const auto& c : chains_) {
      if (!has_root(c, iv)) break;
      ++m;
    }
    return m;
  }

 private:
  static bool has_root(const SturmChain& c, const RootInterval& iv) {
    if (iv.degenerate()) return sign_at(c.squarefree(), iv.lo) == 0;
    return c.count_open(iv.lo, iv.hi) >= 1;
  }

  SturmChain base_;
  std::vector<SturmChain> chains_;
};

void isolate_range(const SturmChain& sc, const Rational& lo, const Rational& hi, std::vector<RootInterval>& out) {
  int c = sc.count_open(lo, hi);
  if (c == 0) return;
  if (c == 1) {
    out.push_back({lo, hi, 1});
    return;
  }
  Rational mid = (lo + hi) / 2;
  isolate_range(sc, lo, mid, out);
  if (sign_at(sc.squarefree(), mid) == 0) out.push_back({mid, mid, 1});
  isolate_range(sc, mid, hi, out);
}

// One bisection step on an interval holding exactly one root.
void bisect_once(const SturmChain& sc, RootInterval& iv) {
  Rational mid = (iv.lo + iv.hi) / 2;
  if (sign_at(sc.squarefree(), mid) == 0) {
    iv.lo = iv.hi = mid;
  } else if (sc.count_open(iv.lo, mid) == 1) {
    iv.hi = mid;
  } else {
    iv.lo = mid;
  }
}

// A rational root p/q of the primitive squarefree part has q | lc, so it can be
// written k/lc. Once the interval is narrower than 1/lc it holds at most one
// such candidate, which is tested exactly.
void pin_rational_root(const SturmChain& sc, RootInterval& iv) {
  const Poly& s = sc.squarefree();
  Rational step(1, s.leading());
  step.canonicalize();
  while (!iv.degenerate() && iv.hi - iv.lo >= step) bisect_once(sc, iv);
  if (iv.degenerate()) return;
  Rational scaled = iv.lo * s.leading();
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  k += 1;
  Rational candidate(k, s.leading());
  candidate.canonicalize();
  if (candidate < iv.hi && sign_at(s, candidate) == 0) iv.lo = iv.hi = candidate;
}

bool sorted_and_disjoint(const std::vector<RootInterval>& ivs) {
  for (const auto& iv : ivs) {
    if (iv.lo > iv.hi || iv.multiplicity == 0) return false;
  }
  for (std::size_t k = 1; k < ivs.size(); ++k) {
    const auto& a = ivs[k - 1];
    const auto& b = ivs[k];
    if (a.hi > b.lo) return false;
    if (a.hi == b.lo && a.degenerate() && b.degenerate()) return false;
  }
  return true;
}

void check_leading(const Poly& f, const char* name) {
  if (!f.is_zero() && sgn(f.leading()) < 0) {
    throw Error(ErrorCode::NegativeLeadingCoefficient, std::string(name) + " = " + f.pretty());
  }
}

}  // namespace

unsigned RootCertificate::total_multiplicity() const {
  unsigned total = 0;
  for (const auto& iv : intervals) total += iv.multiplicity;
  return total;
}

SturmChain::SturmChain(const Poly& f) {
  chain_.push_back(squarefree_part(f));
  if (chain_.front().degree() < 1) return;
  chain_.push_back(derivative(chain_.front()));
  while (true) {
    const Poly& a = chain_[chain_.size() - 2];
    const Poly& b = chain_.back();
    Poly r = pseudo_remainder(a, b);
    // prem carries lc(b)^(deg a - deg b + 1); undo its sign, then negate.
    const bool flip = sgn(b.leading()) < 0 && ((a.degree() - b.degree() + 1) % 2 != 0);
    if (!flip) r = -r;
    if (r.is_zero()) break;
    r = r.divexact(r.content());
    chain_.push_back(std::move(r));
  }
}

int SturmChain::variations_at(const Rational& t) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sign_at(p, t));
  return sign_variations(signs);
}

int SturmChain::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sgn(p.leading()));
  return sign_variations(signs);
}

int SturmChain::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(p.degree() % 2 == 0 ? sgn(p.leading()) : -sgn(p.leading()));
  return sign_variations(signs);
}

int SturmChain::count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
  if (lo && hi && *lo > *hi) throw Error(ErrorCode::EmptyInterval, "lower bound exceeds upper bound");
  int vlo = lo ? variations_at(*lo) : variations_at_neg_infinity();
  int vhi = hi ? variations_at(*hi) : variations_at_pos_infinity();
  return vlo - vhi;
}

int SturmChain::count_open(const Rational& lo, const Rational& hi) const {
  if (lo >= hi) return 0;
  return count(lo, hi) - (sign_at(squarefree(), hi) == 0 ? 1 : 0);
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of zero");
  Poly g = gcd(f, derivative(f));
  return exact_quotient(f.primitive(), g).primitive();
}

int count_real_roots(const Poly& f, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root count of zero polynomial");
  return SturmChain(f).count(lo, hi);
}

RootCertificate isolate_roots(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot isolate roots of zero");
  SturmChain sc(f);
  RootCertificate cert;
  const Poly& s = sc.squarefree();
  if (s.degree() < 1) return cert;
  Rational bound = root_bound(s);
  isolate_range(sc, -bound, bound, cert.intervals);
  for (auto& iv : cert.intervals) {
    if (!iv.degenerate()) pin_rational_root(sc, iv);
  }
  MultiplicityProbe probe(f);
  for (auto& iv : cert.intervals) iv.multiplicity = probe.multiplicity(iv);
  return cert;
}

bool certifies(const Poly& f, const RootCertificate& cert) {
  if (f.is_zero()) return false;
  if (!sorted_and_disjoint(cert.intervals)) return false;
  SturmChain sc(f);
  const Poly& s = sc.squarefree();
  if (static_cast<int>(cert.intervals.size()) != sc.count(std::nullopt, std::nullopt)) return false;
  MultiplicityProbe probe(f);
  for (const auto& iv : cert.intervals) {
    if (iv.degenerate()) {
      if (sign_at(s, iv.lo) != 0) return false;
    } else if (sc.count_open(iv.lo, iv.hi) != 1) {
      return false;
    }
    if (probe.multiplicity(iv) != iv.multiplicity) return false;
  }
  return true;
}

RootCertificate refine_certificate(const Poly& f, const RootCertificate& cert, const Rational& width) {
  if (sgn(width) <= 0) throw Error(ErrorCode::BadParameters, "refinement width must be positive");
  if (!certifies(f, cert)) throw Error(ErrorCode::CertificateMismatch, "certificate does not certify " + f.pretty());
  SturmChain sc(f);
  RootCertificate out = cert;
  for (auto& iv : out.intervals) {
    while (!iv.degenerate() && iv.hi - iv.lo >= width) bisect_once(sc, iv);
  }
  return out;
}

bool is_real_rooted(const Poly& f) {
  if (f.is_constant()) return true;
  SturmChain sc(f);
  return sc.count(std::nullopt, std::nullopt) == sc.squarefree().degree();
}

bool interleaves(const Poly& f, const Poly& g) {
  check_leading(f, "f");
  check_leading(g, "g");
  if (f.is_zero()) return is_real_rooted(g);
  if (g.is_zero()) return is_real_rooted(f);
  if (!is_real_rooted(f) || !is_real_rooted(g)) return false;
  if (f.degree() != g.degree() && f.degree() != g.degree() - 1) return false;
  if (f.is_constant() && g.is_constant()) return true;

  // Isolate the distinct roots of f*g, then read off multiplicities per factor.
  const Poly product = f * g;
  RootCertificate joint = isolate_roots(product);
  MultiplicityProbe in_f(f);
  MultiplicityProbe in_g(g);
  // Root ids ascend with root value; descending lists hold ids repeated by multiplicity.
  std::vector<std::size_t> alpha;
  std::vector<std::size_t> beta;
  for (std::size_t id = joint.intervals.size(); id-- > 0;) {
    const auto& iv = joint.intervals[id];
    alpha.insert(alpha.end(), in_f.multiplicity(iv), id);
    beta.insert(beta.end(), in_g.multiplicity(iv), id);
  }
  // beta_1 >= alpha_1 >= beta_2 >= alpha_2 >= ...
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (beta[k] < alpha[k]) return false;
    if (k + 1 < beta.size() && alpha[k] < beta[k + 1]) return false;
  }
  return true;
}

bool is_interlacing_seq(std::span<const Poly> fs) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (!interleaves(fs[i], fs[j])) return false;
    }
  }
  return true;
}

bool in_fplus(std::span<const Poly> fs) {
  if (!std::all_of(fs.begin(), fs.end(), [](const Poly& p) { return p.has_nonnegative_coeffs(); })) return false;
  return is_interlacing_seq(fs);
}

std::string certificate_to_json(const RootCertificate& cert) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& iv : cert.intervals) {
    out.push_back({{"lo", rational_to_string(iv.lo)}, {"hi", rational_to_string(iv.hi)}, {"mult", iv.multiplicity}});
  }
  return out.dump();
}

}  // namespace interlace
