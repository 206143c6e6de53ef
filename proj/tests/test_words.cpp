#include "doctest.h"

#include "abelian/complexity.hpp"
#include "abelian/error.hpp"
#include "abelian/recipe_io.hpp"
#include "abelian/words.hpp"
#include "oracles.hpp"

using namespace abelian;

namespace {
  std::string str(WordPrefix const& w) {
    return w.to_string();
  }
  WordPrefix digits(std::string const& s, std::size_t p = 0) {
    return WordPrefix::from_digits(s, p);
  }
}  // namespace

TEST_CASE("fixed points") {
  CHECK(str(fixed_point(Morphism::thue_morse(), 0, 16)) == "0110100110010110");
  CHECK(str(fixed_point(Morphism::abc_growth(), 0, 9)) == "012111222");
  CHECK(fixed_point(Morphism::thue_morse(), 0, 0).empty());
  CHECK(str(fixed_point(Morphism::fibonacci(), 0, 8)) == "01001010");
  // 1 -> 0 does not start with 1
  CHECK_THROWS_AS(fixed_point(Morphism::fibonacci(), 1, 4), PreconditionError);
  // images must stay inside the source alphabet
  CHECK_THROWS_AS(fixed_point(Morphism::ternary_012_021(), 0, 4), PreconditionError);
}

TEST_CASE("morphism validation") {
  CHECK_THROWS_AS(Morphism({{0, 1}, {}}), PreconditionError);
  CHECK_THROWS_AS(Morphism({}), PreconditionError);
  CHECK(Morphism::thue_morse().prolongable_on(0));
  CHECK(Morphism::thue_morse().prolongable_on(1));
  CHECK_FALSE(Morphism::doubling().prolongable_on(2));
  CHECK(Morphism::abc_collapse().target_alphabet() == 2);
}

TEST_CASE("morphic images") {
  CHECK(str(apply_morphism(Morphism::thue_morse(), digits("01"))) == "0110");
  CHECK(str(apply_morphism(Morphism::abc_collapse(), digits("012111222")))
        == "010111000");
  CHECK(str(apply_morphism(Morphism::ternary_012_021(), digits("01"))) == "012021");
  CHECK(str(apply_morphism(Morphism::doubling(), digits("0110"))) == "00111100");
  CHECK_THROWS_AS(apply_morphism(Morphism::thue_morse(), digits("012")),
                  PreconditionError);
}

TEST_CASE("characteristic words") {
  CHECK(str(characteristic_prefix(ContinuedFraction::golden(), 8)) == "01001010");
  // floors of n (sqrt2 - 1), n = 1..8: 0 0 1 1 2 2 2 3
  CHECK(str(characteristic_prefix(ContinuedFraction::sqrt2(), 7)) == "0101001");
  CHECK(characteristic_prefix(ContinuedFraction::golden(), 0).empty());

  auto const g = characteristic_prefix(ContinuedFraction::golden(), 5000);
  auto const s = characteristic_prefix(ContinuedFraction::sqrt2(), 5000);
  CHECK(std::vector<Letter>(g.symbols().begin(), g.symbols().end())
        == oracle::characteristic(oracle::golden256(), 5000));
  CHECK(std::vector<Letter>(s.symbols().begin(), s.symbols().end())
        == oracle::characteristic(oracle::sqrt2_256(), 5000));
  // the golden characteristic word is the Fibonacci fixed point
  CHECK(str(g) == str(fixed_point(Morphism::fibonacci(), 0, 5000)));
}

TEST_CASE("characteristic word agrees with the rotation definition") {
  for (auto const& cf : {ContinuedFraction::golden(), ContinuedFraction::sqrt2(),
                         ContinuedFraction::golden().complement()}) {
    Slope const a(cf);
    auto const  w = characteristic_prefix(a, 10000);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
      // c(n) = 1 iff {n a} >= 1 - a
      bool const one = !a.frac_less_than(BigInt(n), AffineThreshold{1, -1});
      REQUIRE((w[n - 1] == 1) == one);
    }
  }
}

TEST_CASE("Champernowne and maximal-complexity words") {
  CHECK(str(champernowne_prefix(26)) == "01101110010111011110001001");
  CHECK(str(champernowne_prefix(3)) == "011");
  CHECK(champernowne_prefix(0).empty());
  CHECK(str(max_complexity_prefix(9)) == "010111000");
  CHECK(str(max_complexity_prefix(1)) == "0");
  CHECK(max_complexity_prefix(0).empty());
  CHECK(str(max_complexity_prefix(40)) == "0101110001111111110000000001111111111111");
}

TEST_CASE("hubert relabelling") {
  // inner 01001010: zeros become 0 1 0 1 0 in order, ones become 2
  CHECK(str(hubert_ternary(ContinuedFraction::golden(), 8)) == "02102120");
  CHECK(str(hubert_transform(digits("0000"))) == "0101");
  CHECK(hubert_ternary(ContinuedFraction::golden(), 0).empty());
  auto const h = hubert_ternary(ContinuedFraction::golden(), 4096);
  CHECK(h.alphabet() == 3);
  CHECK(balance_bound(h, 256) <= 1);
  auto const h2 = hubert_ternary(ContinuedFraction::sqrt2(), 4096);
  CHECK(balance_bound(h2, 256) <= 1);
}

TEST_CASE("prefix_of dispatch") {
  auto const fib = make_recipe(recipe::Characteristic{ContinuedFraction::golden()});
  CHECK(str(prefix_of(WordRecipe{recipe::LiteralPrepend{{2}, fib}}, 5)) == "20100");
  CHECK(str(prefix_of(WordRecipe{recipe::Explicit{{0, 1, 1, 0}, 0}}, 4)) == "0110");
  CHECK(str(prefix_of(WordRecipe{recipe::Periodic{{0, 1}, 0}}, 5)) == "01010");
  CHECK_THROWS_AS(prefix_of(WordRecipe{recipe::Explicit{{0, 1}, 0}}, 3),
                  PreconditionError);
  CHECK(str(prefix_of(*preset_recipe("rauzy-morphism"), 12)) == "012021012012");
  CHECK(str(prefix_of(WordRecipe{recipe::Shift{3, preset_recipe("tm")}}, 5)) == "01001");
  CHECK(str(prefix_of(*preset_recipe("mu-champernowne"), 8)) == "01101001");
  recipe::FixedPoint fp{Morphism::fibonacci(), 0, Morphism::ternary_012_021()};
  CHECK(str(prefix_of(WordRecipe{fp}, 12)) == "012021012012");
}

TEST_CASE("recipes are deterministic and coherent") {
  for (auto const& name : preset_names()) {
    CAPTURE(name);
    auto const r    = preset_recipe(name);
    auto const full = prefix_of(*r, 3000);
    CHECK(str(full) == str(prefix_of(*r, 3000)));
    for (std::size_t m : {0, 1, 7, 64, 1001, 2999}) {
      auto const part = prefix_of(*r, m);
      CHECK(str(part) == str(full).substr(0, str(part).size()));
      CHECK(part.size() == m);
    }
    CHECK(full.alphabet() == alphabet_of(*r));
    // JSON round trip regenerates the same word
    auto const back = recipe_from_json(recipe_to_json(*r));
    CHECK(str(prefix_of(*back, 3000)) == str(full));
  }
}

TEST_CASE("fixed points are fixed") {
  for (auto const& [m, seed] : {std::pair{Morphism::thue_morse(), Letter(0)},
                                std::pair{Morphism::thue_morse(), Letter(1)},
                                std::pair{Morphism::fibonacci(), Letter(0)},
                                std::pair{Morphism::abc_growth(), Letter(0)}}) {
    auto const w   = fixed_point(m, seed, 2000);
    auto const img = apply_morphism(m, w);
    CHECK(str(img).substr(0, 2000) == str(w));
  }
  auto const tm = fixed_point(Morphism::thue_morse(), 0, 1 << 14);
  CHECK(std::vector<Letter>(tm.symbols().begin(), tm.symbols().end())
        == oracle::thue_morse(1 << 14));
}

TEST_CASE("budgets and bounds") {
  GenerationLimits const small{1000};
  CHECK_THROWS_AS(prefix_of(*preset_recipe("tm"), 1001, small), BudgetError);
  CHECK_THROWS_AS(champernowne_prefix(5000, small), BudgetError);
  CHECK_NOTHROW(prefix_of(*preset_recipe("tm"), 1000, small));
  CHECK_THROWS_AS(digits("0120", 2), PreconditionError);
  auto const w = digits("0110");
  CHECK_THROWS_AS(w.window(2, 3), std::out_of_range);
  CHECK(w.window(1, 3).size() == 3);
}

TEST_CASE("recipe JSON parsing") {
  auto const r = resolve_recipe(R"({"type":"literal-prepend","prefix":"21",
                                    "inner":{"type":"characteristic",
                                             "slope":{"preperiod":[2],"period":[1]}}})");
  CHECK(str(prefix_of(*r, 6)) == "210100");
  auto const s = resolve_slope(R"({"terms":[2,1,1,1,1,1,1,1]})");
  CHECK(s.kind() == ContinuedFraction::Kind::finite);
  CHECK(resolve_slope("sqrt2") == ContinuedFraction::sqrt2());
  CHECK_THROWS_AS(resolve_recipe("no-such-preset"), PreconditionError);
  CHECK_THROWS_AS(resolve_recipe(R"({"type":"bogus"})"), PreconditionError);
  CHECK_THROWS_AS(resolve_recipe(R"({"type":"characteristic"})"), PreconditionError);
  auto const big = resolve_slope(R"({"preperiod":["123456789012345678901234567890"],"period":[1]})");
  CHECK(big.term(1)->str() == "123456789012345678901234567890");
  CHECK(slope_from_json(slope_to_json(big)) == big);
}
