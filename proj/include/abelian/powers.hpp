#ifndef ABELIAN_POWERS_HPP_
#define ABELIAN_POWERS_HPP_

// Abelian k-powers: k consecutive blocks of one length that are pairwise
// Abelian equivalent. Found three ways: brute force, the progression search
// on nu(t) = (weighted prefix sum mod N), and the exact locator for
// characteristic Sturmian words.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "abelian/bigint.hpp"
#include "abelian/cf.hpp"
#include "abelian/complexity.hpp"
#include "abelian/words.hpp"

namespace abelian {

  struct AbelianPowerOccurrence {
    std::size_t  start    = 0;  // 0-based
    std::size_t  period   = 0;  // block length
    std::size_t  exponent = 0;  // number of blocks
    ParikhVector block_parikh;

    bool operator==(AbelianPowerOccurrence const&) const = default;
  };

  // True iff the k blocks w[start + j*ell, start + (j+1)*ell) share one Parikh
  // vector. Throws std::out_of_range if they do not fit in the prefix.
  bool verify_abelian_power(WordPrefix const& w,
                            std::size_t       start,
                            std::size_t       ell,
                            std::size_t       k);

  // Smallest ell in 1..ell_max such that an Abelian k-power of period ell
  // starts at `start`; nullopt if none fits in the prefix.
  std::optional<std::size_t> min_abelian_period(WordPrefix const& w,
                                                std::size_t       start,
                                                std::size_t       k,
                                                std::size_t       ell_max);

  // Weights alpha_1..alpha_r and modulus N such that sum c_i alpha_i = 0
  // (mod N) with all |c_i| <= M forces every c_i = 0.
  struct CongoWeights {
    std::uint64_t       M = 1;
    std::size_t         r = 1;
    std::vector<BigInt> alphas;
    BigInt              N;
  };

  // alpha_1 = 1, alpha_{i+1} = M * (alpha_1 + ... + alpha_i) + 1,
  // N = M * (alpha_1 + ... + alpha_r) + 1.
  CongoWeights congo_weights(std::uint64_t M, std::size_t r);

  // Enumerates every (c_1..c_r) with |c_i| <= M and reports whether only the
  // zero vector vanishes mod N. Exponential in r; meant for small M and r.
  bool congo_only_trivial_zero(CongoWeights const& w);

  struct SearchOptions {
    unsigned jobs = 1;
  };

  // Scans s = 1, 2, ... and, for each s, t0 = 0, 1, ... for
  // nu(t0) = nu(t0 + s) = ... = nu(t0 + k s); the first hit (smallest s, then
  // smallest t0) is verified and returned. Throws InconsistencyError if the
  // blocks of a hit are not Abelian equivalent, which means M was smaller
  // than the word's balance.
  std::optional<AbelianPowerOccurrence>
  vdw_power_search(WordPrefix const&   w,
                   std::size_t         k,
                   CongoWeights const& weights,
                   SearchOptions       opts = {});

  // delta = u + v * alpha (for the working slope, alpha < 1/2), required to be
  // strictly between 0 and alpha. Default alpha / 2.
  struct DeltaPolicy {
    Rational u = 0;
    Rational v = Rational(1, 2);
  };

  struct PeriodPair {
    BigInt      short_period;  // q_n, used for Case 1 positions
    BigInt      long_period;   // q_{n+1}, used for Case 2 positions
    std::size_t index = 0;     // the even n
  };

  // Smallest even n >= 0 with q_{n+1} * min(delta, alpha - delta) > k.
  // Requires alpha < 1/2.
  PeriodPair sturmian_period_pair(ContinuedFraction const& alpha,
                                  std::size_t              k,
                                  DeltaPolicy const&       delta = {});

  enum class SturmianCase { one, two };

  struct SturmianPower {
    AbelianPowerOccurrence occurrence;
    SturmianCase           which = SturmianCase::one;
    PeriodPair             pair;
  };

  // Locates Abelian k-powers at positions of the characteristic word c_alpha.
  // Slopes above 1/2 are handled through 1 - alpha, whose characteristic word
  // is c_alpha with letters exchanged.
  class SturmianLocator {
   public:
    struct Options {
      DeltaPolicy delta;
      // Re-derive R^{i + j*ell - 1}(alpha) for j = 1..k and check it is the
      // constant the case analysis predicts, and that consecutive blocks are
      // Abelian equivalent.
      bool check_rotation = false;
    };

    SturmianLocator(ContinuedFraction alpha, Options opts);
    explicit SturmianLocator(ContinuedFraction alpha)
        : SturmianLocator(std::move(alpha), Options{}) {}

    // Position i is 1-based as in c_alpha(i); the returned occurrence starts
    // at 0-based i - 1. Throws InconsistencyError if verification fails.
    SturmianPower at(std::uint64_t i, std::size_t k) const;

    PeriodPair pair(std::size_t k) const;

    bool complemented() const noexcept {
      return complemented_;
    }

   private:
    bool    complemented_;
    Slope   original_;
    Slope   work_;  // alpha or 1 - alpha, below 1/2
    Options opts_;
  };

  SturmianPower sturmian_power_at(ContinuedFraction const& alpha,
                                  std::uint64_t            i,
                                  std::size_t              k,
                                  DeltaPolicy const&       delta = {});

  // Self-contained certificate: start, period, exponent, block_parikh and the
  // generator recipe, enough to regenerate the prefix and re-check it.
  nlohmann::json certificate_json(AbelianPowerOccurrence const& occ,
                                  WordRecipe const&             recipe);

  // Regenerates the prefix from the certificate's recipe and re-verifies it,
  // including the recorded block Parikh vector.
  bool check_certificate(nlohmann::json const& cert,
                         GenerationLimits      limits = {});

}  // namespace abelian

#endif  // ABELIAN_POWERS_HPP_
