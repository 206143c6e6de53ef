#ifndef ABELIAN_RECIPE_IO_HPP_
#define ABELIAN_RECIPE_IO_HPP_

// Structured-text (JSON) form of slopes and word recipes.
//
//   slope:  {"preperiod": [2], "period": [1]}  |  {"terms": [3, 1, 4]}
//           | "golden" | "sqrt2"
//   recipe: {"type": "fixed-point", "morphism": M, "seed": 0, "post": M}
//           {"type": "characteristic", "slope": S}
//           {"type": "periodic", "pattern": "01"}
//           {"type": "explicit", "symbols": "0110"}
//           {"type": "champernowne"}   {"type": "max-complexity"}
//           {"type": "hubert", "slope": S}
//           {"type": "literal-prepend", "prefix": "2", "inner": R}
//           {"type": "image", "morphism": M, "inner": R}
//           {"type": "shift", "offset": 3, "inner": R}
//   morphism: {"images": ["01", "10"]} (or arrays of integers), with an
//           optional "target_alphabet".
// Symbol strings are digit strings; alphabets above 10 use integer arrays.

#include <string>
#include <vector>

#include "json.hpp"

#include "abelian/cf.hpp"
#include "abelian/words.hpp"

namespace abelian {

  ContinuedFraction slope_from_json(nlohmann::json const& j);
  nlohmann::json    slope_to_json(ContinuedFraction const& cf);

  Morphism       morphism_from_json(nlohmann::json const& j);
  nlohmann::json morphism_to_json(Morphism const& m);

  RecipePtr      recipe_from_json(nlohmann::json const& j);
  nlohmann::json recipe_to_json(WordRecipe const& r);

  // Built-in recipe names: tm, champernowne, const0, periodic01, fibonacci,
  // sqrt2, max-complexity, hubert, rauzy-morphism, mu-champernowne.
  RecipePtr                preset_recipe(std::string const& name);
  std::vector<std::string> preset_names();

  // A preset name, an inline JSON document, or a path to a JSON file.
  RecipePtr resolve_recipe(std::string const& spec);
  // A preset name ("golden", "sqrt2") or an inline JSON document.
  ContinuedFraction resolve_slope(std::string const& spec);

}  // namespace abelian

#endif  // ABELIAN_RECIPE_IO_HPP_
