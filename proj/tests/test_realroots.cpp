#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "interlace/realroots.hpp"

using namespace interlace;

namespace {

Poly from_roots(const std::vector<int>& roots) {
  Poly p = Poly::constant(1);
  for (int a : roots) p *= Poly({-a, 1});
  return p;
}

// Distinct integer roots found by scanning every integer in [-bound, bound].
int scan_integer_roots(const Poly& p, int bound) {
  int found = 0;
  for (int t = -bound; t <= bound; ++t) found += sign_at(p, Rational(t)) == 0 ? 1 : 0;
  return found;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("squarefree_part") {
  CHECK(squarefree_part(Poly({1, 2, 1})) == Poly({1, 1}));
  CHECK(squarefree_part(Poly({-1, 0, 1})) == Poly({-1, 0, 1}));
  CHECK(squarefree_part(Poly({0, 0, 0, 1})) == Poly({0, 1}));
  CHECK(squarefree_part(Poly({0, 0, -6})) == Poly({0, 1}));
  CHECK(code_of([] { squarefree_part(Poly()); }) == ErrorCode::ZeroPolynomial);
}

TEST_CASE("count_real_roots") {
  CHECK(count_real_roots(Poly({-2, 0, 1})) == 2);
  CHECK(count_real_roots(Poly({1, 0, 1})) == 0);
  // x^3 - 2x has roots -sqrt2, 0, sqrt2.
  CHECK(count_real_roots(Poly({0, -2, 0, 1}), Rational(0), std::nullopt) == 1);
  CHECK(count_real_roots(Poly({0, -2, 0, 1}), Rational(-1), Rational(0)) == 1);  // half-open (lo, hi]
  CHECK(count_real_roots(Poly({0, -2, 0, 1}), std::nullopt, Rational(0)) == 2);
  CHECK(count_real_roots(Poly({5})) == 0);
  CHECK(code_of([] { count_real_roots(Poly()); }) == ErrorCode::ZeroPolynomial);
  CHECK(code_of([] { count_real_roots(Poly({0, 1}), Rational(2), Rational(1)); }) == ErrorCode::EmptyInterval);
}

TEST_CASE("Sturm chain shape") {
  SturmChain sc(Poly({0, -2, 0, 1}));
  CHECK(sc.chain().front() == Poly({0, -2, 0, 1}));
  CHECK(sc.chain().back().degree() == 0);
  CHECK(sc.variations_at_neg_infinity() - sc.variations_at_pos_infinity() == 3);
}

TEST_CASE("count_real_roots agrees with an integer scan on random root products") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> root(-12, 12);
  std::uniform_int_distribution<int> count(1, 7);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<int> roots(static_cast<std::size_t>(count(rng)));
    for (auto& a : roots) a = root(rng);
    Poly p = from_roots(roots);
    // An irreducible quadratic factor adds degree but no real roots.
    if (trial % 3 == 0) p *= Poly({3, 1, 1});
    if (trial % 4 == 0) p *= Integer(-5);
    CHECK(count_real_roots(p) == scan_integer_roots(p, 12));
    CHECK(count_real_roots(p) == static_cast<int>(std::set<int>(roots.begin(), roots.end()).size()));
  }
}

TEST_CASE("isolate_roots") {
  SUBCASE("x^2 - 2") {
    const Poly p{-2, 0, 1};
    const RootCertificate c = isolate_roots(p);
    REQUIRE(c.intervals.size() == 2);
    for (const auto& iv : c.intervals) {
      CHECK(iv.multiplicity == 1);
      CHECK(!iv.degenerate());
      CHECK(sign_at(p, iv.lo) * sign_at(p, iv.hi) < 0);
    }
    CHECK(c.intervals[0].hi <= 0);
    CHECK(c.intervals[1].lo >= 0);
    CHECK(certifies(p, c));
  }
  SUBCASE("(x+1)^2 is pinned exactly") {
    const RootCertificate c = isolate_roots(Poly({1, 2, 1}));
    REQUIRE(c.intervals.size() == 1);
    CHECK(c.intervals[0].lo == -1);
    CHECK(c.intervals[0].hi == -1);
    CHECK(c.intervals[0].multiplicity == 2);
  }
  SUBCASE("no real roots") { CHECK(isolate_roots(Poly({1, 0, 1})).intervals.empty()); }
  SUBCASE("rational roots with multiplicities") {
    // (2x - 1)^3 (x + 3) (x^2 - 5)
    const Poly p = pow(Poly({-1, 2}), 3) * Poly({3, 1}) * Poly({-5, 0, 1});
    const RootCertificate c = isolate_roots(p);
    REQUIRE(c.intervals.size() == 4);
    CHECK(c.intervals[0].degenerate());
    CHECK(c.intervals[0].lo == -3);
    CHECK(c.intervals[2].lo == Rational(1, 2));
    CHECK(c.intervals[2].multiplicity == 3);
    CHECK(c.total_multiplicity() == 6);
    CHECK(certifies(p, c));
  }
  CHECK(code_of([] { isolate_roots(Poly()); }) == ErrorCode::ZeroPolynomial);
}

TEST_CASE("refine_certificate") {
  const Poly p{-2, 0, 1};
  const RootCertificate c = isolate_roots(p);
  const Rational width(1, 100);
  const RootCertificate fine = refine_certificate(p, c, width);
  REQUIRE(fine.intervals.size() == 2);
  for (const auto& iv : fine.intervals) {
    CHECK(iv.hi - iv.lo < width);
    CHECK(sign_at(p, iv.lo) * sign_at(p, iv.hi) < 0);
  }
  CHECK(certifies(p, fine));

  const Poly q{1, 2, 1};
  const RootCertificate exact = isolate_roots(q);
  CHECK(refine_certificate(q, exact, Rational(1, 1000)) == exact);
  CHECK(refine_certificate(p, c, Rational(1000)) == c);

  RootCertificate wrong = c;
  wrong.intervals.pop_back();
  CHECK(code_of([&] { refine_certificate(p, wrong, width); }) == ErrorCode::CertificateMismatch);
  CHECK(code_of([&] { refine_certificate(Poly({-3, 0, 1}), fine, width); }) == ErrorCode::CertificateMismatch);
}

TEST_CASE("is_real_rooted") {
  CHECK_FALSE(is_real_rooted(Poly({1, 0, 1})));
  CHECK(is_real_rooted(Poly({0, 1, 1})));
  CHECK(is_real_rooted(Poly()));
  CHECK(is_real_rooted(Poly({-4})));
  CHECK(is_real_rooted(Poly({1, 2, 1})));
}

TEST_CASE("is_real_rooted is multiplicative") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const Poly f{c(rng), c(rng), 1 + std::abs(c(rng))};
    const Poly g{c(rng), c(rng), c(rng), 1};
    CHECK(is_real_rooted(f * g) == (is_real_rooted(f) && is_real_rooted(g)));
  }
}

TEST_CASE("interleaves") {
  CHECK(interleaves(Poly({0, 1}), Poly({-1, 0, 1})));
  CHECK_FALSE(interleaves(Poly({-1, 0, 1}), Poly({0, 1})));
  CHECK(interleaves(Poly({1, 1}), Poly({0, 1})));
  CHECK_FALSE(interleaves(Poly({0, 1}), Poly({1, 1})));
  CHECK(interleaves(Poly({0, 1, 1}), Poly()));
  CHECK(interleaves(Poly(), Poly({0, 1, 1})));
  CHECK(interleaves(Poly(), Poly()));
  // Zero only pairs with real-rooted partners.
  CHECK_FALSE(interleaves(Poly(), Poly({1, 0, 1})));
  // Shared roots and multiplicities.
  CHECK(interleaves(Poly({0, 2}), Poly({0, 1})));
  CHECK(interleaves(Poly({0, 2}), Poly({0, 0, 1})));
  CHECK(interleaves(Poly({0, 1}), Poly({0, 0, 1})));
  CHECK_FALSE(interleaves(Poly({1, 1}), Poly({0, 0, 1})));  // a double root of g needs a root of f between its copies
  // Constants.
  CHECK(interleaves(Poly({1}), Poly({3, 1})));
  CHECK_FALSE(interleaves(Poly({1}), Poly({0, 0, 1})));
  CHECK(interleaves(Poly({0, 1}), Poly({2})) == false);
  CHECK(interleaves(Poly({2}), Poly({5})));
  CHECK_FALSE(interleaves(Poly({1, 0, 1}), Poly({1, 0, 1})));
  CHECK(code_of([] { interleaves(Poly({0, -1}), Poly({0, 1})); }) == ErrorCode::NegativeLeadingCoefficient);
}

TEST_CASE("interleaves is invariant under positive scaling") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> root(-6, 6);
  std::uniform_int_distribution<int> scale(1, 50);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly f = from_roots({root(rng), root(rng)});
    const Poly g = from_roots({root(rng), root(rng), root(rng)});
    const bool base = interleaves(f, g);
    CHECK(interleaves(f * Integer(scale(rng)), g) == base);
    CHECK(interleaves(f, g * Integer(scale(rng))) == base);
  }
}

TEST_CASE("constructed interleavers") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> gap(2, 5);
  for (int trial = 0; trial < 100; ++trial) {
    // f has roots a_1 < ... < a_n spaced >= 2 apart; g has one root in each gap and one above a_n.
    std::vector<int> a{-10};
    const int n = 1 + trial % 5;
    while (static_cast<int>(a.size()) < n) a.push_back(a.back() + gap(rng));
    std::vector<int> b;
    for (std::size_t k = 0; k + 1 < a.size(); ++k) b.push_back(a[k] + 1);
    b.push_back(a.back() + 1);
    CHECK(interleaves(from_roots(a), from_roots(b)));
    CHECK_FALSE(interleaves(from_roots(b), from_roots(a)));
  }
}

TEST_CASE("is_interlacing_seq and in_fplus") {
  const std::vector<Poly> two{Poly({0, 1}), Poly({-1, 0, 1})};
  CHECK(is_interlacing_seq(two));
  const std::vector<Poly> e32{Poly({0, 2}), Poly({0, 1}), Poly({0, 0, 1})};
  CHECK(is_interlacing_seq(e32));
  const std::vector<Poly> reversed{Poly({-1, 0, 1}), Poly({0, 1})};
  CHECK_FALSE(is_interlacing_seq(reversed));
  CHECK(is_interlacing_seq(std::vector<Poly>{}));
  CHECK(is_interlacing_seq(std::vector<Poly>{Poly({1, 0, 1})}));

  CHECK_FALSE(in_fplus(std::vector<Poly>{Poly({0, 1}), Poly({1, 1})}));
  CHECK(in_fplus(std::vector<Poly>{Poly({1, 1}), Poly({0, 1})}));
  CHECK_FALSE(in_fplus(std::vector<Poly>{Poly({-1, 0, 1}), Poly({0, 1})}));
  CHECK_FALSE(in_fplus(std::vector<Poly>{Poly({-1, 0, 1})}));
  CHECK(in_fplus(e32));
}

TEST_CASE("certificate JSON") {
  CHECK(certificate_to_json(isolate_roots(Poly({1, 2, 1}))) == R"([{"hi":"-1/1","lo":"-1/1","mult":2}])");
  CHECK(certificate_to_json(RootCertificate{}) == "[]");
}
