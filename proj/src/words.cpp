#include "abelian/words.hpp"

#include <algorithm>
#include <sstream>

#include "abelian/error.hpp"

namespace abelian {

  namespace {
    void check_budget(std::size_t len, GenerationLimits const& limits) {
      if (len > limits.max_symbols) {
        throw BudgetError("requested prefix of " + std::to_string(len)
                          + " symbols exceeds the budget of "
                          + std::to_string(limits.max_symbols));
      }
    }

    std::size_t alphabet_for(Symbols const& s, std::size_t requested) {
      std::size_t needed = 1;
      for (Letter a : s) {
        needed = std::max<std::size_t>(needed, std::size_t(a) + 1);
      }
      if (requested == 0) {
        return needed;
      }
      if (requested < needed) {
        throw PreconditionError("symbol " + std::to_string(needed - 1)
                                + " outside alphabet of size "
                                + std::to_string(requested));
      }
      return requested;
    }

    template <class... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <class... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;
  }  // namespace

  Symbols symbols_from_digits(std::string const& digits) {
    Symbols out;
    out.reserve(digits.size());
    for (char c : digits) {
      if (c < '0' || c > '9') {
        throw PreconditionError(std::string("not a digit symbol: '") + c
                                + "'");
      }
      out.push_back(static_cast<Letter>(c - '0'));
    }
    return out;
  }

  std::string symbols_to_string(std::span<Letter const> symbols,
                                std::size_t             alphabet) {
    std::string out;
    if (alphabet <= 10) {
      out.reserve(symbols.size());
      for (Letter a : symbols) {
        out.push_back(static_cast<char>('0' + a));
      }
      return out;
    }
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      if (i != 0) {
        out.push_back(',');
      }
      out += std::to_string(symbols[i]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphism
  ////////////////////////////////////////////////////////////////////////

  Morphism::Morphism(std::vector<Symbols>       images,
                     std::optional<std::size_t> target_alphabet)
      : images_(std::move(images)), target_(1) {
    if (images_.empty() || images_.size() > kMaxAlphabet) {
      throw PreconditionError("morphism needs between 1 and 256 images");
    }
    for (auto const& img : images_) {
      if (img.empty()) {
        throw PreconditionError("morphism images must be non-empty");
      }
      for (Letter a : img) {
        target_ = std::max<std::size_t>(target_, std::size_t(a) + 1);
      }
    }
    if (target_alphabet) {
      if (*target_alphabet < target_ || *target_alphabet > kMaxAlphabet) {
        throw PreconditionError("morphism image letter outside target "
                                "alphabet");
      }
      target_ = *target_alphabet;
    }
  }

  Morphism Morphism::thue_morse() {
    return Morphism({{0, 1}, {1, 0}});
  }

  Morphism Morphism::doubling() {
    return Morphism({{0, 0}, {1, 1}});
  }

  Morphism Morphism::fibonacci() {
    return Morphism({{0, 1}, {0}});
  }

  Morphism Morphism::ternary_012_021() {
    return Morphism({{0, 1, 2}, {0, 2, 1}});
  }

  Morphism Morphism::abc_growth() {
    return Morphism({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
  }

  Morphism Morphism::abc_collapse() {
    return Morphism({{0}, {1}, {0}}, 2);
  }

  Symbols const& Morphism::image(Letter a) const {
    if (a >= images_.size()) {
      throw PreconditionError("letter " + std::to_string(a)
                              + " outside morphism domain");
    }
    return images_[a];
  }

  std::size_t Morphism::min_image_length() const noexcept {
    std::size_t m = images_.front().size();
    for (auto const& img : images_) {
      m = std::min(m, img.size());
    }
    return m;
  }

  std::size_t Morphism::max_image_length() const noexcept {
    std::size_t m = 0;
    for (auto const& img : images_) {
      m = std::max(m, img.size());
    }
    return m;
  }

  bool Morphism::prolongable_on(Letter seed) const noexcept {
    if (seed >= images_.size() || target_ > images_.size()) {
      return false;
    }
    auto const& img = images_[seed];
    return img.size() >= 2 && img.front() == seed;
  }

  ////////////////////////////////////////////////////////////////////////
  // WordPrefix
  ////////////////////////////////////////////////////////////////////////

  WordPrefix::WordPrefix(std::size_t alphabet,
                         Symbols     symbols,
                         RecipePtr   recipe)
      : alphabet_(alphabet),
        symbols_(std::move(symbols)),
        recipe_(std::move(recipe)) {
    if (alphabet_ == 0 || alphabet_ > kMaxAlphabet) {
      throw PreconditionError("alphabet size must be in 1..256");
    }
    for (Letter a : symbols_) {
      if (a >= alphabet_) {
        throw PreconditionError("symbol " + std::to_string(a)
                                + " outside alphabet of size "
                                + std::to_string(alphabet_));
      }
    }
  }

  WordPrefix WordPrefix::from_symbols(Symbols symbols, std::size_t alphabet) {
    std::size_t const p = alphabet_for(symbols, alphabet);
    auto r = make_recipe(recipe::Explicit{symbols, p});
    return WordPrefix(p, std::move(symbols), std::move(r));
  }

  WordPrefix WordPrefix::from_digits(std::string const& digits,
                                     std::size_t        alphabet) {
    return from_symbols(symbols_from_digits(digits), alphabet);
  }

  std::span<Letter const> WordPrefix::window(std::size_t start,
                                             std::size_t len) const {
    if (start > symbols_.size() || len > symbols_.size() - start) {
      throw std::out_of_range("window [" + std::to_string(start) + ", "
                              + std::to_string(start + len)
                              + ") outside prefix of length "
                              + std::to_string(symbols_.size()));
    }
    return std::span<Letter const>(symbols_).subspan(start, len);
  }

  ////////////////////////////////////////////////////////////////////////
  // Generators
  ////////////////////////////////////////////////////////////////////////

  WordPrefix fixed_point(Morphism const&  m,
                         Letter           seed,
                         std::size_t      len,
                         GenerationLimits limits) {
    if (!m.prolongable_on(seed)) {
      throw PreconditionError("morphism is not prolongable on letter "
                              + std::to_string(seed));
    }
    check_budget(len, limits);
    // The fixed point x satisfies x = m(x), so x can be produced in place by
    // appending m(x[read]) for read = 1, 2, ...
    Symbols x = m.image(seed);
    x.reserve(len + m.max_image_length());
    for (std::size_t read = 1; x.size() < len; ++read) {
      auto const& img = m.image(x[read]);
      x.insert(x.end(), img.begin(), img.end());
    }
    x.resize(len);
    auto r = make_recipe(recipe::FixedPoint{m, seed, std::nullopt});
    return WordPrefix(m.source_alphabet(), std::move(x), std::move(r));
  }

  WordPrefix apply_morphism(Morphism const&   m,
                            WordPrefix const& w,
                            GenerationLimits  limits) {
    std::size_t total = 0;
    for (Letter a : w.symbols()) {
      total += m.image(a).size();
    }
    check_budget(total, limits);
    Symbols out;
    out.reserve(total);
    for (Letter a : w.symbols()) {
      auto const& img = m.image(a);
      out.insert(out.end(), img.begin(), img.end());
    }
    auto r = make_recipe(recipe::Image{m, w.recipe()});
    return WordPrefix(m.target_alphabet(), std::move(out), std::move(r));
  }

  WordPrefix characteristic_prefix(Slope const&     alpha,
                                   std::size_t      len,
                                   GenerationLimits limits) {
    check_budget(len, limits);
    // Position j holds c(j + 1) = floor((j + 2) alpha) - floor((j + 1) alpha).
    Symbols       out(len);
    std::uint64_t prev = alpha.floor_scaled(std::uint64_t(1));
    for (std::size_t j = 0; j < len; ++j) {
      std::uint64_t const next = alpha.floor_scaled(std::uint64_t(j + 2));
      out[j]                   = static_cast<Letter>(next - prev);
      prev                     = next;
    }
    auto r = make_recipe(recipe::Characteristic{alpha.expansion()});
    return WordPrefix(2, std::move(out), std::move(r));
  }

  WordPrefix characteristic_prefix(ContinuedFraction const& alpha,
                                   std::size_t              len,
                                   GenerationLimits         limits) {
    check_budget(len, limits);
    return characteristic_prefix(Slope(alpha), len, limits);
  }

  WordPrefix champernowne_prefix(std::size_t len, GenerationLimits limits) {
    check_budget(len, limits);
    Symbols out;
    out.reserve(len + 64);
    out.push_back(0);
    for (std::uint64_t k = 1; out.size() < len; ++k) {
      int top = 63;
      while (((k >> top) & 1u) == 0) {
        --top;
      }
      for (int b = top; b >= 0; --b) {
        out.push_back(static_cast<Letter>((k >> b) & 1u));
      }
    }
    out.resize(len);
    return WordPrefix(2, std::move(out), make_recipe(recipe::Champernowne{}));
  }

  WordPrefix max_complexity_prefix(std::size_t len, GenerationLimits limits) {
    check_budget(len, limits);
    auto const x = fixed_point(Morphism::abc_growth(), 0, len, limits);
    auto const y = apply_morphism(Morphism::abc_collapse(), x, limits);
    Symbols    s(y.symbols().begin(), y.symbols().end());
    return WordPrefix(2, std::move(s), make_recipe(recipe::MaxComplexity{}));
  }

  WordPrefix hubert_transform(WordPrefix const& binary) {
    if (binary.alphabet() > 2) {
      throw PreconditionError("hubert_transform needs a binary word");
    }
    Symbols out(binary.size());
    Letter  next_x = 0;
    for (std::size_t j = 0; j < binary.size(); ++j) {
      if (binary[j] == 0) {
        out[j] = next_x;
        next_x ^= 1;
      } else {
        out[j] = 2;
      }
    }
    return WordPrefix::from_symbols(std::move(out), 3);
  }

  WordPrefix hubert_ternary(ContinuedFraction const& inner,
                            std::size_t              len,
                            GenerationLimits         limits) {
    auto const x = characteristic_prefix(inner, len, limits);
    auto const h = hubert_transform(x);
    Symbols    s(h.symbols().begin(), h.symbols().end());
    return WordPrefix(3, std::move(s), make_recipe(recipe::Hubert{inner}));
  }

  std::size_t alphabet_of(WordRecipe const& r) {
    return std::visit(
        overloaded{
            [](recipe::FixedPoint const& n) {
              return n.post ? n.post->target_alphabet()
                            : n.morphism.source_alphabet();
            },
            [](recipe::Characteristic const&) { return std::size_t(2); },
            [](recipe::Periodic const& n) {
              return alphabet_for(n.pattern, n.alphabet);
            },
            [](recipe::Explicit const& n) {
              return alphabet_for(n.symbols, n.alphabet);
            },
            [](recipe::Champernowne const&) { return std::size_t(2); },
            [](recipe::MaxComplexity const&) { return std::size_t(2); },
            [](recipe::Hubert const&) { return std::size_t(3); },
            [](recipe::LiteralPrepend const& n) {
              return std::max(alphabet_of(*n.inner),
                              alphabet_for(n.prefix, 0));
            },
            [](recipe::Image const& n) { return n.morphism.target_alphabet(); },
            [](recipe::Shift const& n) { return alphabet_of(*n.inner); }},
        r.node);
  }

  WordPrefix prefix_of(WordRecipe const& r,
                       std::size_t       len,
                       GenerationLimits  limits) {
    check_budget(len, limits);
    auto self = std::make_shared<WordRecipe const>(r);
    return std::visit(
        overloaded{
            [&](recipe::FixedPoint const& n) {
              if (!n.post) {
                return fixed_point(n.morphism, n.seed, len, limits);
              }
              std::size_t const inner_len
                  = (len + n.post->min_image_length() - 1)
                    / n.post->min_image_length();
              auto x = fixed_point(n.morphism, n.seed, inner_len, limits);
              auto y = apply_morphism(*n.post, x, limits);
              Symbols s(y.symbols().begin(), y.symbols().begin() + len);
              return WordPrefix(n.post->target_alphabet(), std::move(s), self);
            },
            [&](recipe::Characteristic const& n) {
              return characteristic_prefix(n.slope, len, limits);
            },
            [&](recipe::Periodic const& n) {
              if (n.pattern.empty()) {
                throw PreconditionError("periodic pattern must be non-empty");
              }
              Symbols s(len);
              for (std::size_t i = 0; i < len; ++i) {
                s[i] = n.pattern[i % n.pattern.size()];
              }
              return WordPrefix(alphabet_for(n.pattern, n.alphabet),
                                std::move(s), self);
            },
            [&](recipe::Explicit const& n) {
              if (len > n.symbols.size()) {
                throw PreconditionError(
                    "explicit word has only " + std::to_string(n.symbols.size())
                    + " symbols, " + std::to_string(len) + " requested");
              }
              Symbols s(n.symbols.begin(), n.symbols.begin() + len);
              return WordPrefix(alphabet_for(n.symbols, n.alphabet),
                                std::move(s), self);
            },
            [&](recipe::Champernowne const&) {
              return champernowne_prefix(len, limits);
            },
            [&](recipe::MaxComplexity const&) {
              return max_complexity_prefix(len, limits);
            },
            [&](recipe::Hubert const& n) {
              return hubert_ternary(n.slope, len, limits);
            },
            [&](recipe::LiteralPrepend const& n) {
              std::size_t const p = alphabet_of(r);
              Symbols s(n.prefix.begin(),
                        n.prefix.begin() + std::min(len, n.prefix.size()));
              if (len > n.prefix.size()) {
                auto inner = prefix_of(*n.inner, len - n.prefix.size(), limits);
                s.insert(s.end(), inner.symbols().begin(),
                         inner.symbols().end());
              }
              return WordPrefix(p, std::move(s), self);
            },
            [&](recipe::Image const& n) {
              std::size_t const inner_len
                  = (len + n.morphism.min_image_length() - 1)
                    / n.morphism.min_image_length();
              auto x = prefix_of(*n.inner, inner_len, limits);
              auto y = apply_morphism(n.morphism, x, limits);
              Symbols s(y.symbols().begin(), y.symbols().begin() + len);
              return WordPrefix(n.morphism.target_alphabet(), std::move(s),
                                self);
            },
            [&](recipe::Shift const& n) {
              check_budget(len + n.offset, limits);
              auto x = prefix_of(*n.inner, len + n.offset, limits);
              Symbols s(x.symbols().begin() + n.offset, x.symbols().end());
              return WordPrefix(x.alphabet(), std::move(s), self);
            }},
        r.node);
  }

}  // namespace abelian
