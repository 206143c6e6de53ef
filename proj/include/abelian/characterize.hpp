#ifndef ABELIAN_CHARACTERIZE_HPP_
#define ABELIAN_CHARACTERIZE_HPP_

// Finite-prefix checkers for structural claims about infinite words. A
// verdict is always about the prefix that was examined: aperiodicity and
// the like cannot be decided from finitely many letters.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelian/complexity.hpp"
#include "abelian/words.hpp"

namespace abelian {

  struct Witness {
    std::size_t               n = 0;      // window length involved
    std::vector<std::size_t>  positions;  // 0-based window starts
    std::vector<ParikhVector> vectors;    // Parikh vector of each window
    std::string               note;

    std::string to_string() const;
  };

  struct CheckReport {
    std::string            claim;
    std::string            range;  // e.g. "n=1..512 |w|=65536"
    bool                   pass = false;
    std::optional<Witness> witness;  // always present when pass is false

    std::string text() const;
    std::string csv_row() const;  // claim,range,verdict,witness
  };

  inline constexpr char const* kReportCsvHeader = "claim,range,verdict,witness";

  // rho_ab(n) is 2 for odd n and 3 for even n, for 1 <= n <= n_max.
  // Requires |w| >= margin * n_max.
  CheckReport tm_profile_check(WordPrefix const& w,
                               std::size_t       n_max,
                               std::size_t       margin = 64);

  // One way of reading w as mu(w'), 0 mu(w') or 1 mu(w'), mu: 0->01, 1->10.
  struct MuDecomposition {
    std::size_t           offset = 0;  // 0 or 1
    std::optional<Letter> prepended;   // the skipped first letter at offset 1
    Symbols               preimage;    // decoded w' prefix
    bool                  dangling = false;  // a final unpaired letter dropped

    bool operator==(MuDecomposition const&) const = default;
  };

  // Every offset (0 then 1) at which each aligned pair is 01 or 10. Empty if
  // neither works or w is not binary.
  std::vector<MuDecomposition> mu_preimage_decompose(WordPrefix const& w);

  // All length-p windows have one Parikh vector. Also compares w_i with
  // w_{i+p} directly and throws InconsistencyError if the two disagree.
  CheckReport periodicity_via_parikh(WordPrefix const& w, std::size_t p);

  // First start of a length-k factor 0...1 and first start of one 1...0.
  std::optional<std::pair<std::size_t, std::size_t>>
  special_factor_witnesses(WordPrefix const& w, std::size_t k);

  // rho_ab(n) = 3 for 1 <= n <= n_max on a prefix of prefix_len letters
  // (default 64 * n_max). The recipe must be a hubert word or the image of
  // a binary word under 0->012, 1->021.
  CheckReport rauzy_constant3_check(WordRecipe const&          recipe,
                                    std::size_t                n_max,
                                    std::optional<std::size_t> prefix_len = {},
                                    GenerationLimits           limits = {});

  // rho_ab(n) = 2 for 1 <= n <= n_max and rho(n) = n + 1 for
  // 1 <= n <= subword_n_max.
  CheckReport sturmian_profile_check(WordPrefix const& w,
                                     std::size_t       n_max,
                                     std::size_t       subword_n_max);

  // rho_ab(n) = binom(n + p - 1, p - 1) for 1 <= n <= n_max, p = alphabet.
  CheckReport max_complexity_check(WordPrefix const& w, std::size_t n_max);

  // With K = max rho_ab and C = max balance over 1..n_max: C <= K - 1, and
  // rho_ab(n) <= (C + 1)^p for every n.
  CheckReport balance_bridge_check(WordPrefix const& w, std::size_t n_max);

  // congo_only_trivial_zero for every 1 <= M <= M_max, 1 <= r <= r_max.
  CheckReport congo_check(std::uint64_t M_max, std::size_t r_max);

}  // namespace abelian

#endif  // ABELIAN_CHARACTERIZE_HPP_
