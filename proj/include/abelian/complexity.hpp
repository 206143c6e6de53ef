#ifndef ABELIAN_COMPLEXITY_HPP_
#define ABELIAN_COMPLEXITY_HPP_

// Parikh vectors, Abelian and subword complexity, balance.
//
// All profiles are exact counts over the given finite prefix, which makes
// them lower bounds for the infinite word the prefix was cut from. Profile
// arrays are indexed by window length n and have n_max + 1 entries, with the
// empty-word convention value[0] = 1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "abelian/bigint.hpp"
#include "abelian/words.hpp"

namespace abelian {

  class ParikhVector {
   public:
    ParikhVector() = default;
    explicit ParikhVector(std::size_t alphabet) : counts_(alphabet, 0) {}
    explicit ParikhVector(std::vector<std::uint64_t> counts)
        : counts_(std::move(counts)) {}

    std::size_t alphabet() const noexcept {
      return counts_.size();
    }
    std::uint64_t operator[](std::size_t a) const noexcept {
      return counts_[a];
    }
    std::uint64_t& operator[](std::size_t a) noexcept {
      return counts_[a];
    }
    std::vector<std::uint64_t> const& counts() const noexcept {
      return counts_;
    }
    // Length of the window it describes.
    std::uint64_t total() const noexcept;

    std::string to_string() const;  // "(2,1)"

    auto operator<=>(ParikhVector const&) const = default;

   private:
    std::vector<std::uint64_t> counts_;
  };

  ParikhVector parikh(std::span<Letter const> w, std::size_t alphabet);
  ParikhVector parikh(WordPrefix const& w);

  bool abelian_equivalent(std::span<Letter const> u,
                          std::span<Letter const> v,
                          std::size_t             alphabet);

  struct ProfileOptions {
    // Worker threads over the n-range; results do not depend on it.
    unsigned jobs = 1;
  };

  // rho_ab(n) for n = 0..n_max.
  std::vector<std::uint64_t> abelian_profile(WordPrefix const& w,
                                             std::size_t       n_max,
                                             ProfileOptions    opts = {});

  // Psi(n): the Parikh vectors of all length-n windows, 1 <= n <= |w|.
  std::set<ParikhVector> parikh_classes(WordPrefix const& w, std::size_t n);

  // rho(n) for n = 0..n_max, from a suffix array over the prefix.
  std::vector<std::uint64_t> subword_profile(WordPrefix const& w,
                                             std::size_t       n_max);

  // Least C with ||U|_a - |V|_a| <= C for all letters a and all windows U, V
  // of equal length n <= n_max.
  std::uint64_t balance_bound(WordPrefix const& w, std::size_t n_max);

  struct ComplexityProfile {
    std::size_t                               n_max      = 0;
    std::size_t                               prefix_len = 0;
    std::vector<std::uint64_t>                rho_ab;   // [0..n_max]
    std::optional<std::vector<std::uint64_t>> rho;      // [0..n_max]
    std::vector<std::uint64_t>                balance;  // per-n, [0..n_max]
    std::uint64_t                             balance_C = 0;

    // max of balance[1..n]
    std::uint64_t running_balance(std::size_t n) const;
  };

  // One pass computing rho_ab and per-n balance, plus rho when asked.
  ComplexityProfile compute_profile(WordPrefix const& w,
                                    std::size_t       n_max,
                                    bool              with_subword,
                                    ProfileOptions    opts = {});

  // CSV with header n,rho_ab,rho,balance_running and one LF-terminated row
  // per n >= 1. The rho column is empty when it was not computed.
  std::string profile_csv(ComplexityProfile const& profile);

  // binom(n + k - 1, k - 1), the number of compositions of n into k parts.
  BigInt max_abelian_complexity(std::uint64_t n, std::uint64_t k);

}  // namespace abelian

#endif  // ABELIAN_COMPLEXITY_HPP_
