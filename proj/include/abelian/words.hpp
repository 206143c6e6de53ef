#ifndef ABELIAN_WORDS_HPP_
#define ABELIAN_WORDS_HPP_

// Finite prefixes of infinite words, generated from declarative recipes.
//
// Alphabets are always {0, ..., p - 1}. Positions are 0-based everywhere; the
// characteristic word c_alpha(n), n >= 1, is stored at position n - 1.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "abelian/cf.hpp"

namespace abelian {

  using Letter  = std::uint8_t;
  using Symbols = std::vector<Letter>;

  inline constexpr std::size_t kMaxAlphabet = 256;

  // Parses a digit string ("0110") into letters. Throws PreconditionError on
  // anything but 0-9.
  Symbols     symbols_from_digits(std::string const& digits);
  // Digit string for alphabets up to 10, comma separated numbers otherwise.
  std::string symbols_to_string(std::span<Letter const> symbols,
                                std::size_t             alphabet);

  class Morphism {
   public:
    // images[a] is the image of letter a; target alphabet defaults to the
    // largest letter used + 1 (at least 1).
    explicit Morphism(std::vector<Symbols>       images,
                      std::optional<std::size_t> target_alphabet = {});

    // 0 -> 01, 1 -> 10
    static Morphism thue_morse();
    // 0 -> 00, 1 -> 11
    static Morphism doubling();
    // 0 -> 01, 1 -> 0
    static Morphism fibonacci();
    // 0 -> 012, 1 -> 021
    static Morphism ternary_012_021();
    // a -> abc, b -> bbb, c -> ccc with a, b, c = 0, 1, 2
    static Morphism abc_growth();
    // a, c -> 0 and b -> 1
    static Morphism abc_collapse();

    std::size_t source_alphabet() const noexcept {
      return images_.size();
    }
    std::size_t target_alphabet() const noexcept {
      return target_;
    }
    Symbols const& image(Letter a) const;
    std::vector<Symbols> const& images() const noexcept {
      return images_;
    }
    std::size_t min_image_length() const noexcept;
    std::size_t max_image_length() const noexcept;

    // image(seed) starts with seed, has length >= 2, and the morphism maps
    // its alphabet into itself.
    bool prolongable_on(Letter seed) const noexcept;

    bool operator==(Morphism const&) const = default;

   private:
    std::vector<Symbols> images_;
    std::size_t          target_;
  };

  struct WordRecipe;
  using RecipePtr = std::shared_ptr<WordRecipe const>;

  namespace recipe {
    struct FixedPoint {
      Morphism                morphism;
      Letter                  seed = 0;
      std::optional<Morphism> post;
    };
    struct Characteristic {
      ContinuedFraction slope;
    };
    struct Periodic {
      Symbols     pattern;
      std::size_t alphabet = 0;
    };
    struct Explicit {
      Symbols     symbols;
      std::size_t alphabet = 0;
    };
    struct Champernowne {};
    struct MaxComplexity {};
    struct Hubert {
      ContinuedFraction slope;
    };
    struct LiteralPrepend {
      Symbols   prefix;
      RecipePtr inner;
    };
    // morphism applied to an arbitrary inner word
    struct Image {
      Morphism  morphism;
      RecipePtr inner;
    };
    // inner word with its first `offset` letters dropped (the shift T^offset)
    struct Shift {
      std::size_t offset = 0;
      RecipePtr   inner;
    };
  }  // namespace recipe

  struct WordRecipe {
    using Node = std::variant<recipe::FixedPoint,
                              recipe::Characteristic,
                              recipe::Periodic,
                              recipe::Explicit,
                              recipe::Champernowne,
                              recipe::MaxComplexity,
                              recipe::Hubert,
                              recipe::LiteralPrepend,
                              recipe::Image,
                              recipe::Shift>;
    Node node;
  };

  template <typename T>
  RecipePtr make_recipe(T node) {
    return std::make_shared<WordRecipe const>(WordRecipe{std::move(node)});
  }

  // Size of the alphabet the recipe's word is written over.
  std::size_t alphabet_of(WordRecipe const& r);

  struct GenerationLimits {
    std::size_t max_symbols = std::size_t(1) << 26;
  };

  class WordPrefix {
   public:
    WordPrefix(std::size_t alphabet, Symbols symbols, RecipePtr recipe);

    // Wraps explicit symbols; the recipe is recipe::Explicit.
    static WordPrefix from_symbols(Symbols symbols, std::size_t alphabet = 0);
    static WordPrefix from_digits(std::string const& digits,
                                  std::size_t        alphabet = 0);

    std::size_t alphabet() const noexcept {
      return alphabet_;
    }
    std::size_t size() const noexcept {
      return symbols_.size();
    }
    bool empty() const noexcept {
      return symbols_.empty();
    }
    Letter operator[](std::size_t i) const noexcept {
      return symbols_[i];
    }
    std::span<Letter const> symbols() const noexcept {
      return symbols_;
    }
    std::span<Letter const> window(std::size_t start, std::size_t len) const;
    RecipePtr const& recipe() const noexcept {
      return recipe_;
    }

    std::string to_string() const {
      return symbols_to_string(symbols_, alphabet_);
    }

   private:
    std::size_t alphabet_;
    Symbols     symbols_;
    RecipePtr   recipe_;
  };

  WordPrefix fixed_point(Morphism const&  m,
                         Letter           seed,
                         std::size_t      len,
                         GenerationLimits limits = {});

  WordPrefix apply_morphism(Morphism const&   m,
                            WordPrefix const& w,
                            GenerationLimits  limits = {});

  WordPrefix characteristic_prefix(ContinuedFraction const& alpha,
                                   std::size_t              len,
                                   GenerationLimits         limits = {});
  WordPrefix characteristic_prefix(Slope const&     alpha,
                                   std::size_t      len,
                                   GenerationLimits limits = {});

  // 0 1 10 11 100 101 ... concatenated.
  WordPrefix champernowne_prefix(std::size_t      len,
                                 GenerationLimits limits = {});

  // abc_collapse applied to the fixed point of abc_growth on a:
  // 0 1 0 111 000 1^9 0^9 ...
  WordPrefix max_complexity_prefix(std::size_t      len,
                                   GenerationLimits limits = {});

  // Ternary balanced word: the j-th 0 of the inner characteristic word becomes
  // j mod 2 and every 1 becomes 2.
  WordPrefix hubert_ternary(ContinuedFraction const& inner,
                            std::size_t              len,
                            GenerationLimits         limits = {});
  // The same relabelling applied to any binary word.
  WordPrefix hubert_transform(WordPrefix const& binary);

  WordPrefix prefix_of(WordRecipe const& r,
                       std::size_t       len,
                       GenerationLimits  limits = {});

}  // namespace abelian

#endif  // ABELIAN_WORDS_HPP_
