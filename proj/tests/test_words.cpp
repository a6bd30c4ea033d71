#include <doctest.h>

#include <cstdlib>

#include "interlace/words.hpp"

using namespace interlace;

namespace {

// Independent of the depth-first enumerator: walk all r^(n+1) tuples and filter.
template <class Keep>
std::vector<Word> filter_all_tuples(int n, int r, Keep&& keep) {
  std::vector<Word> out;
  Word w;
  w.alphabet_size = r;
  w.letters.assign(static_cast<std::size_t>(n) + 1, 0);
  while (true) {
    if (keep(w.letters)) out.push_back(w);
    std::size_t k = w.letters.size();
    while (k-- > 0) {
      if (++w.letters[k] < r) break;
      w.letters[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

bool gamma_admissible(const std::vector<int>& w, const std::vector<int>& gamma, bool closed) {
  if (w.front() != 0 || (closed && w.back() != 0)) return false;
  for (std::size_t j = 1; j < w.size(); ++j) {
    if (std::abs(w[j] - w[j - 1]) <= gamma[static_cast<std::size_t>(w[j])]) return false;
  }
  return true;
}

std::vector<Poly> bucket_by_last(const std::vector<Word>& words, int r) {
  std::vector<Poly> out(static_cast<std::size_t>(r));
  for (const auto& w : words) out[static_cast<std::size_t>(w.letters.back())] += Poly::monomial(1, static_cast<std::size_t>(ascents(w)));
  return out;
}

Word word(std::vector<int> letters, int r) { return Word{std::move(letters), r}; }

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

TEST_CASE("ascents") {
  CHECK(ascents(word({0, 1, 0}, 2)) == 1);
  CHECK(ascents(word({0, 2, 0, 1}, 3)) == 2);
  CHECK(ascents(word({0}, 2)) == 0);
}

TEST_CASE("enumerate_sw_prime") {
  CHECK(collect_sw_prime(1, 3) == std::vector<Word>{word({0, 1}, 3), word({0, 2}, 3)});
  CHECK(collect_sw_prime(2, 2) == std::vector<Word>{word({0, 1, 0}, 2)});
  std::uint64_t count = 0;
  enumerate_sw_prime(9, 5, [&](const Word&) { ++count; });
  CHECK(count == 262144);
  CHECK(code_of([] { collect_sw_prime(0, 3); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { collect_sw_prime(2, 1); }) == ErrorCode::BadParameters);
}

TEST_CASE("|SW'(n,r)| = (r-1)^n") {
  for (int r = 2; r <= 6; ++r) {
    for (int n = 1; n <= 9; ++n) {
      std::uint64_t count = 0;
      enumerate_sw_prime(n, r, [&](const Word&) { ++count; });
      std::uint64_t expected = 1;
      for (int k = 0; k < n; ++k) expected *= static_cast<std::uint64_t>(r - 1);
      CHECK(count == expected);
    }
  }
}

TEST_CASE("enumeration matches the tuple filter and is lexicographic") {
  for (int r = 2; r <= 4; ++r) {
    for (int n = 1; n <= 5; ++n) {
      const auto zeros = std::vector<int>(static_cast<std::size_t>(r), 0);
      const auto expected = filter_all_tuples(n, r, [&](const auto& w) { return gamma_admissible(w, zeros, false); });
      CHECK(collect_sw_prime(n, r) == expected);
      for (const auto& g : GammaVector::all_valid(r)) {
        for (bool closed : {false, true}) {
          const auto want = filter_all_tuples(n, r, [&](const auto& w) { return gamma_admissible(w, g.values(), closed); });
          const auto got = collect_sw_gamma(n, r, g, closed);
          CHECK(got == want);
          for (const auto& w : got) CHECK(gamma_admissible(w.letters, g.values(), closed));
        }
      }
    }
  }
}

TEST_CASE("oracle_E") {
  const Poly x = Poly::x();
  CHECK(oracle_E(1, 3) == std::vector<Poly>{Poly(), x, x});
  CHECK(oracle_E(2, 3) == std::vector<Poly>{Poly({0, 2}), x, Poly({0, 0, 1})});
  for (int r = 2; r <= 5; ++r) {
    for (int n = 1; n <= 6; ++n) {
      const auto e = oracle_E(n, r);
      Integer total = 0;
      for (const auto& p : e) total += evaluate(p, Rational(1)).get_num();
      Integer expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(r - 1), static_cast<unsigned long>(n));
      CHECK(total == expected);
      CHECK(e == bucket_by_last(collect_sw_prime(n, r), r));
    }
  }
}

TEST_CASE("oracle_local_h") {
  CHECK(oracle_local_h(3, 3) == Poly({0, 1, 1}));
  CHECK(oracle_local_h(2, 2) == Poly({0, 1}));
  for (int n = 1; n <= 12; ++n) {
    const Poly expected = n % 2 == 0 ? Poly::monomial(1, static_cast<std::size_t>(n / 2)) : Poly();
    CHECK(oracle_local_h(n, 2) == expected);
  }
}

TEST_CASE("local h-polynomials are palindromic of degree n") {
  for (int r = 2; r <= 5; ++r) {
    for (int n = 2; n <= 8; ++n) {
      const Poly p = oracle_local_h(n, r);
      if (p.is_zero()) continue;
      for (int k = 0; k <= n; ++k) {
        CHECK(p.coeff(static_cast<std::size_t>(k)) == p.coeff(static_cast<std::size_t>(n - k)));
      }
    }
  }
}

TEST_CASE("GammaVector validation") {
  CHECK_NOTHROW(GammaVector({1, 1, 1}));
  CHECK_NOTHROW(GammaVector({0, 1, 2, 1}));
  CHECK(code_of([] { GammaVector({2, 0, 0}); }) == ErrorCode::InvalidGamma);       // exceeds r-2
  CHECK(code_of([] { GammaVector({0, 2, 0, 0}); }) == ErrorCode::InvalidGamma);    // jump of 2
  CHECK(code_of([] { GammaVector({-1, 0, 0}); }) == ErrorCode::InvalidGamma);
  CHECK(code_of([] { GammaVector({0}); }) == ErrorCode::InvalidGamma);
  CHECK(GammaVector::all_valid(2).size() == 1);
  CHECK(GammaVector::all_valid(3).size() == 8);
  CHECK(GammaVector::parse("0,1,1").values() == std::vector<int>{0, 1, 1});
  CHECK(code_of([] { GammaVector::parse("0,a"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { collect_sw_gamma(2, 4, GammaVector({0, 0, 0}), true); }) == ErrorCode::InvalidGamma);
}

TEST_CASE("enumerate_sw_gamma") {
  const GammaVector g111({1, 1, 1});
  CHECK(collect_sw_gamma(4, 3, g111, true) == std::vector<Word>{word({0, 2, 0, 2, 0}, 3)});
  for (int n : {1, 3, 5, 7}) CHECK(collect_sw_gamma(n, 3, g111, true).empty());
  for (int r = 2; r <= 4; ++r) {
    for (int n = 1; n <= 5; ++n) {
      CHECK(collect_sw_gamma(n, r, GammaVector::zeros(r), false) == collect_sw_prime(n, r));
    }
  }
}

TEST_CASE("oracle_E_gamma") {
  const GammaVector g111({1, 1, 1});
  // Only (0,2) at n=1 and (0,2,0) at n=2 are admissible.
  CHECK(oracle_E_gamma(1, 3, g111) == std::vector<Poly>{Poly(), Poly(), Poly::x()});
  CHECK(oracle_E_gamma(2, 3, g111) == std::vector<Poly>{Poly::x(), Poly(), Poly()});
  for (int r = 2; r <= 4; ++r) {
    for (int n = 1; n <= 5; ++n) {
      CHECK(oracle_E_gamma(n, r, GammaVector::zeros(r)) == oracle_E(n, r));
      for (const auto& g : GammaVector::all_valid(r)) {
        CHECK(oracle_E_gamma(n, r, g).front() == oracle_local_h_gamma(n, r, g));
        const auto closed = collect_sw_gamma(n, r, g, true);
        CHECK(oracle_local_h_gamma(n, r, g) == bucket_by_last(closed, r).front());
      }
    }
  }
}

TEST_CASE("enumeration budget") {
  CHECK(code_of([] { oracle_E(10, 6, 1000); }) == ErrorCode::BudgetExceeded);
  CHECK(code_of([] { oracle_E(60, 3); }) == ErrorCode::BudgetExceeded);
  CHECK_NOTHROW(oracle_E(3, 3, 8));
  CHECK(code_of([] { oracle_E(4, 3, 15); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("budget_from_env") {
  ::setenv("INTERLACE_BUDGET", "12345", 1);
  CHECK(budget_from_env() == 12345);
  ::setenv("INTERLACE_BUDGET", "zero", 1);
  CHECK(code_of([] { budget_from_env(); }) == ErrorCode::BadParameters);
  ::unsetenv("INTERLACE_BUDGET");
  CHECK(budget_from_env() == kDefaultBudget);
}
