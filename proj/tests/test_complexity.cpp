#include <random>

#include "doctest.h"

#include "abelian/complexity.hpp"
#include "abelian/error.hpp"
#include "abelian/recipe_io.hpp"
#include "oracles.hpp"

using namespace abelian;

namespace {
  WordPrefix digits(std::string const& s, std::size_t p = 0) {
    return WordPrefix::from_digits(s, p);
  }
  WordPrefix preset(std::string const& name, std::size_t len) {
    return prefix_of(*preset_recipe(name), len);
  }
  ParikhVector pv(std::vector<std::uint64_t> c) {
    return ParikhVector(std::move(c));
  }
}  // namespace

TEST_CASE("parikh vectors") {
  CHECK(parikh(std::span<Letter const>{}, 3) == pv({0, 0, 0}));
  CHECK(parikh(digits("012")) == pv({1, 1, 1}));
  CHECK(parikh(digits("0110")) == pv({2, 2}));
  CHECK(parikh(digits("0110")).to_string() == "(2,2)");
  CHECK(parikh(digits("0110")).total() == 4);
  CHECK_THROWS_AS(parikh(digits("012").symbols(), 2), PreconditionError);
}

TEST_CASE("abelian equivalence") {
  auto const a = digits("01"), b = digits("10"), c = digits("11");
  CHECK(abelian_equivalent(a.symbols(), b.symbols(), 2));
  CHECK_FALSE(abelian_equivalent(a.symbols(), c.symbols(), 2));
  CHECK(abelian_equivalent({}, {}, 2));
}

TEST_CASE("abelian profile examples") {
  auto const tm = preset("tm", 4096);
  auto const p  = abelian_profile(tm, 4);
  CHECK(p[0] == 1);
  CHECK(p[3] == 2);
  CHECK(p[4] == 3);

  auto const fib = preset("fibonacci", 4096);
  auto const pf  = abelian_profile(fib, 64);
  for (std::size_t n = 1; n <= 64; ++n) {
    CHECK(pf[n] == 2);
  }
  CHECK(abelian_profile(preset("periodic01", 100), 2)[2] == 1);
  CHECK_THROWS_AS(abelian_profile(digits("0110"), 5), PreconditionError);
  // worker count does not change results
  CHECK(abelian_profile(tm, 200, {4}) == abelian_profile(tm, 200, {1}));
}

TEST_CASE("parikh classes") {
  auto const tm = preset("tm", 4096);
  CHECK(parikh_classes(tm, 3) == std::set<ParikhVector>{pv({2, 1}), pv({1, 2})});
  CHECK(parikh_classes(tm, 2)
        == std::set<ParikhVector>{pv({1, 1}), pv({0, 2}), pv({2, 0})});
  auto const w = digits("0112010", 3);
  CHECK(parikh_classes(w, w.size()) == std::set<ParikhVector>{parikh(w)});
  CHECK_THROWS_AS(parikh_classes(w, 0), PreconditionError);
}

TEST_CASE("Thue-Morse class sets follow the induction shape") {
  auto const tm = preset("tm", 1 << 14);
  for (std::uint64_t k = 0; k <= 100; ++k) {
    CHECK(parikh_classes(tm, 2 * k + 1)
          == std::set<ParikhVector>{pv({k + 1, k}), pv({k, k + 1})});
    CHECK(parikh_classes(tm, 2 * k + 2)
          == std::set<ParikhVector>{pv({k + 1, k + 1}), pv({k, k + 2}),
                                    pv({k + 2, k})});
  }
}

TEST_CASE("subword complexity") {
  auto const fib = preset("fibonacci", 4096);
  auto const rf  = subword_profile(fib, 32);
  for (std::size_t n = 1; n <= 32; ++n) {
    CHECK(rf[n] == n + 1);
  }
  CHECK(subword_profile(preset("periodic01", 64), 5)[5] == 2);
  auto const tm = preset("tm", 4096);
  CHECK(subword_profile(tm, 3)[3] == 6);
  CHECK(subword_profile(digits("0"), 1)[1] == 1);
  CHECK(subword_profile(digits("0110"), 0) == std::vector<std::uint64_t>{1});
}

TEST_CASE("balance bounds") {
  CHECK(balance_bound(preset("fibonacci", 4096), 256) == 1);
  CHECK(balance_bound(preset("tm", 4096), 256) == 2);
  CHECK(balance_bound(preset("const0", 500), 100) == 0);
}

TEST_CASE("max abelian complexity") {
  CHECK(max_abelian_complexity(3, 2) == 4);
  CHECK(max_abelian_complexity(0, 5) == 1);
  CHECK(max_abelian_complexity(5, 3) == 21);
  CHECK(max_abelian_complexity(100, 1) == 1);
  CHECK(max_abelian_complexity(200, 4).str() == "1373701");
  CHECK_THROWS_AS(max_abelian_complexity(3, 0), PreconditionError);
}

TEST_CASE("profiles agree with naive recounts on random words") {
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 200; ++t) {
    std::size_t const p   = 1 + rng() % 4;
    std::size_t const len = 1 + rng() % 512;
    Symbols           s(len);
    for (auto& a : s) {
      a = static_cast<Letter>(rng() % p);
    }
    auto const        w     = WordPrefix::from_symbols(s, p);
    std::size_t const n_max = std::min<std::size_t>(len, 1 + rng() % 64);
    auto const        prof  = compute_profile(w, n_max, true);
    for (std::size_t n = 1; n <= n_max; ++n) {
      REQUIRE(prof.rho_ab[n] == oracle::abelian_complexity(s, n, p));
      REQUIRE((*prof.rho)[n] == oracle::factor_complexity(s, n));
      // rho_ab <= rho <= p^n, rho_ab <= binomial bound
      CHECK(prof.rho_ab[n] <= (*prof.rho)[n]);
      CHECK(BigInt(prof.rho_ab[n]) <= max_abelian_complexity(n, p));
    }
    CHECK(prof.balance_C == oracle::balance(s, n_max, p));
  }
}

TEST_CASE("intermediate counts occur (sliding update lemma)") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 50; ++t) {
    std::size_t const p = 2 + rng() % 3;
    Symbols           s(300);
    for (auto& a : s) {
      a = static_cast<Letter>(rng() % p);
    }
    auto const w = WordPrefix::from_symbols(s, p);
    for (std::size_t n : {1, 5, 17, 60}) {
      auto const classes = parikh_classes(w, n);
      for (std::size_t a = 0; a < p; ++a) {
        std::set<std::uint64_t> values;
        for (auto const& v : classes) {
          values.insert(v[a]);
        }
        CHECK(*values.rbegin() - *values.begin() + 1 == values.size());
      }
    }
  }
}

TEST_CASE("csv") {
  auto const prof = compute_profile(preset("tm", 256), 4, true);
  CHECK(profile_csv(prof)
        == "n,rho_ab,rho,balance_running\n1,2,2,1\n2,3,4,2\n3,2,6,2\n4,3,10,2\n");
  auto const nosub = compute_profile(preset("periodic01", 128), 2, false);
  CHECK(profile_csv(nosub) == "n,rho_ab,rho,balance_running\n1,2,,1\n2,1,,1\n");
  CHECK(prof.running_balance(1) == 1);
}

TEST_CASE("large alphabets and long windows use the fallback sets") {
  std::mt19937_64 rng(5);
  Symbols         s(400);
  for (auto& a : s) {
    a = static_cast<Letter>(rng() % 40);
  }
  auto const w = WordPrefix::from_symbols(s, 40);
  for (std::size_t n : {1, 3, 50, 399}) {
    CHECK(abelian_profile(w, n)[n] == oracle::abelian_complexity(s, n, 40));
  }
}
