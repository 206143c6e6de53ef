#include "abelian/recipe_io.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "abelian/error.hpp"

namespace abelian {

  using nlohmann::json;

  namespace {
    template <class... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <class... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;

    [[noreturn]] void bad(std::string const& msg) {
      throw PreconditionError("recipe: " + msg);
    }

    BigInt term_from_json(json const& j) {
      if (j.is_number_unsigned() || j.is_number_integer()) {
        return BigInt(j.get<std::int64_t>());
      }
      if (j.is_string()) {
        return BigInt(j.get<std::string>());
      }
      bad("continued-fraction terms must be integers or decimal strings");
    }

    json term_to_json(BigInt const& a) {
      if (a <= BigInt(std::numeric_limits<std::int64_t>::max())) {
        return static_cast<std::int64_t>(a);
      }
      return a.str();
    }

    std::vector<BigInt> terms_from_json(json const& j) {
      if (!j.is_array()) {
        bad("expected an array of terms");
      }
      std::vector<BigInt> out;
      for (auto const& t : j) {
        out.push_back(term_from_json(t));
      }
      return out;
    }

    json terms_to_json(std::vector<BigInt> const& ts) {
      json out = json::array();
      for (auto const& t : ts) {
        out.push_back(term_to_json(t));
      }
      return out;
    }

    Symbols symbols_from_json(json const& j) {
      if (j.is_string()) {
        return symbols_from_digits(j.get<std::string>());
      }
      if (j.is_array()) {
        Symbols out;
        for (auto const& v : j) {
          auto const a = v.get<int>();
          if (a < 0 || a >= int(kMaxAlphabet)) {
            bad("letter out of range: " + std::to_string(a));
          }
          out.push_back(static_cast<Letter>(a));
        }
        return out;
      }
      bad("symbols must be a digit string or an integer array");
    }

    json symbols_to_json(Symbols const& s, std::size_t alphabet) {
      if (alphabet <= 10) {
        return symbols_to_string(s, alphabet);
      }
      json out = json::array();
      for (Letter a : s) {
        out.push_back(int(a));
      }
      return out;
    }

    std::size_t max_letter_alphabet(Symbols const& s) {
      std::size_t p = 1;
      for (Letter a : s) {
        p = std::max<std::size_t>(p, std::size_t(a) + 1);
      }
      return p;
    }

    json const& field(json const& j, char const* key) {
      auto it = j.find(key);
      if (it == j.end()) {
        bad(std::string("missing field '") + key + "'");
      }
      return *it;
    }
  }  // namespace

  ContinuedFraction slope_from_json(json const& j) {
    if (j.is_string()) {
      return resolve_slope(j.get<std::string>());
    }
    if (!j.is_object()) {
      bad("slope must be an object or a preset name");
    }
    if (j.contains("terms")) {
      return ContinuedFraction::finite(terms_from_json(j.at("terms")));
    }
    std::vector<BigInt> pre;
    if (j.contains("preperiod")) {
      pre = terms_from_json(j.at("preperiod"));
    }
    return ContinuedFraction::eventually_periodic(
        std::move(pre), terms_from_json(field(j, "period")));
  }

  json slope_to_json(ContinuedFraction const& cf) {
    if (cf.kind() == ContinuedFraction::Kind::finite) {
      return json{{"terms", terms_to_json(cf.preperiod())}};
    }
    return json{{"preperiod", terms_to_json(cf.preperiod())},
                {"period", terms_to_json(cf.period())}};
  }

  Morphism morphism_from_json(json const& j) {
    if (!j.is_object()) {
      bad("morphism must be an object");
    }
    std::vector<Symbols> images;
    for (auto const& img : field(j, "images")) {
      images.push_back(symbols_from_json(img));
    }
    std::optional<std::size_t> target;
    if (j.contains("target_alphabet")) {
      target = j.at("target_alphabet").get<std::size_t>();
    }
    return Morphism(std::move(images), target);
  }

  json morphism_to_json(Morphism const& m) {
    json images = json::array();
    for (auto const& img : m.images()) {
      images.push_back(symbols_to_json(img, m.target_alphabet()));
    }
    json out{{"images", images}};
    std::size_t natural = 1;
    for (auto const& img : m.images()) {
      natural = std::max(natural, max_letter_alphabet(img));
    }
    if (natural != m.target_alphabet()) {
      out["target_alphabet"] = m.target_alphabet();
    }
    return out;
  }

  RecipePtr recipe_from_json(json const& j) {
    if (j.is_string()) {
      return preset_recipe(j.get<std::string>());
    }
    if (!j.is_object()) {
      bad("recipe must be an object or a preset name");
    }
    auto const type = field(j, "type").get<std::string>();
    auto alphabet   = [&] {
      return j.contains("alphabet") ? j.at("alphabet").get<std::size_t>()
                                    : std::size_t(0);
    };
    if (type == "fixed-point") {
      recipe::FixedPoint n{morphism_from_json(field(j, "morphism")),
                           static_cast<Letter>(j.value("seed", 0)),
                           std::nullopt};
      if (j.contains("post") && !j.at("post").is_null()) {
        n.post = morphism_from_json(j.at("post"));
      }
      return make_recipe(std::move(n));
    }
    if (type == "characteristic") {
      return make_recipe(recipe::Characteristic{slope_from_json(field(j, "slope"))});
    }
    if (type == "periodic") {
      return make_recipe(
          recipe::Periodic{symbols_from_json(field(j, "pattern")), alphabet()});
    }
    if (type == "explicit") {
      return make_recipe(
          recipe::Explicit{symbols_from_json(field(j, "symbols")), alphabet()});
    }
    if (type == "champernowne") {
      return make_recipe(recipe::Champernowne{});
    }
    if (type == "max-complexity") {
      return make_recipe(recipe::MaxComplexity{});
    }
    if (type == "hubert") {
      return make_recipe(recipe::Hubert{slope_from_json(field(j, "slope"))});
    }
    if (type == "literal-prepend") {
      return make_recipe(
          recipe::LiteralPrepend{symbols_from_json(field(j, "prefix")),
                                 recipe_from_json(field(j, "inner"))});
    }
    if (type == "image") {
      return make_recipe(recipe::Image{morphism_from_json(field(j, "morphism")),
                                       recipe_from_json(field(j, "inner"))});
    }
    if (type == "shift") {
      return make_recipe(recipe::Shift{field(j, "offset").get<std::size_t>(),
                                       recipe_from_json(field(j, "inner"))});
    }
    bad("unknown recipe type '" + type + "'");
  }

  json recipe_to_json(WordRecipe const& r) {
    return std::visit(
        overloaded{
            [](recipe::FixedPoint const& n) {
              json out{{"type", "fixed-point"},
                       {"morphism", morphism_to_json(n.morphism)},
                       {"seed", int(n.seed)}};
              if (n.post) {
                out["post"] = morphism_to_json(*n.post);
              }
              return out;
            },
            [](recipe::Characteristic const& n) {
              return json{{"type", "characteristic"},
                          {"slope", slope_to_json(n.slope)}};
            },
            [](recipe::Periodic const& n) {
              json out{{"type", "periodic"},
                       {"pattern", symbols_to_json(n.pattern, n.alphabet)}};
              if (n.alphabet != 0) {
                out["alphabet"] = n.alphabet;
              }
              return out;
            },
            [](recipe::Explicit const& n) {
              json out{{"type", "explicit"},
                       {"symbols", symbols_to_json(n.symbols, n.alphabet)}};
              if (n.alphabet != 0) {
                out["alphabet"] = n.alphabet;
              }
              return out;
            },
            [](recipe::Champernowne const&) {
              return json{{"type", "champernowne"}};
            },
            [](recipe::MaxComplexity const&) {
              return json{{"type", "max-complexity"}};
            },
            [](recipe::Hubert const& n) {
              return json{{"type", "hubert"}, {"slope", slope_to_json(n.slope)}};
            },
            [](recipe::LiteralPrepend const& n) {
              return json{
                  {"type", "literal-prepend"},
                  {"prefix", symbols_to_json(n.prefix, max_letter_alphabet(n.prefix))},
                  {"inner", recipe_to_json(*n.inner)}};
            },
            [](recipe::Image const& n) {
              return json{{"type", "image"},
                          {"morphism", morphism_to_json(n.morphism)},
                          {"inner", recipe_to_json(*n.inner)}};
            },
            [](recipe::Shift const& n) {
              return json{{"type", "shift"},
                          {"offset", n.offset},
                          {"inner", recipe_to_json(*n.inner)}};
            }},
        r.node);
  }

  namespace {
    std::map<std::string, RecipePtr> const& presets() {
      static std::map<std::string, RecipePtr> const table = [] {
        std::map<std::string, RecipePtr> t;
        auto tm    = make_recipe(recipe::FixedPoint{Morphism::thue_morse(), 0, std::nullopt});
        auto fib   = make_recipe(recipe::Characteristic{ContinuedFraction::golden()});
        auto champ = make_recipe(recipe::Champernowne{});
        t["tm"]              = tm;
        t["thue-morse"]      = tm;
        t["champernowne"]    = champ;
        t["const0"]          = make_recipe(recipe::Periodic{{0}, 0});
        t["periodic01"]      = make_recipe(recipe::Periodic{{0, 1}, 0});
        t["fibonacci"]       = fib;
        t["golden"]          = fib;
        t["sqrt2"]           = make_recipe(recipe::Characteristic{ContinuedFraction::sqrt2()});
        t["max-complexity"]  = make_recipe(recipe::MaxComplexity{});
        t["hubert"]          = make_recipe(recipe::Hubert{ContinuedFraction::golden()});
        t["rauzy-morphism"]  = make_recipe(recipe::Image{Morphism::ternary_012_021(), fib});
        t["mu-champernowne"] = make_recipe(recipe::Image{Morphism::thue_morse(), champ});
        return t;
      }();
      return table;
    }
  }  // namespace

  RecipePtr preset_recipe(std::string const& name) {
    auto const& t  = presets();
    auto        it = t.find(name);
    if (it == t.end()) {
      bad("unknown preset '" + name + "'");
    }
    return it->second;
  }

  std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (auto const& [name, r] : presets()) {
      out.push_back(name);
    }
    return out;
  }

  RecipePtr resolve_recipe(std::string const& spec) {
    if (presets().count(spec) != 0) {
      return preset_recipe(spec);
    }
    auto const first = spec.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && spec[first] == '{') {
      return recipe_from_json(json::parse(spec));
    }
    std::ifstream in(spec);
    if (!in) {
      bad("'" + spec + "' is neither a preset, inline JSON, nor a readable file");
    }
    return recipe_from_json(json::parse(in));
  }

  ContinuedFraction resolve_slope(std::string const& spec) {
    if (spec == "golden") {
      return ContinuedFraction::golden();
    }
    if (spec == "sqrt2") {
      return ContinuedFraction::sqrt2();
    }
    auto const first = spec.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && spec[first] == '{') {
      return slope_from_json(json::parse(spec));
    }
    std::ifstream in(spec);
    if (!in) {
      bad("unknown slope '" + spec + "'");
    }
    return slope_from_json(json::parse(in));
  }

}  // namespace abelian
