#ifndef ABELIAN_CF_HPP_
#define ABELIAN_CF_HPP_

// Exact arithmetic about an irrational slope 0 < alpha < 1 presented by its
// continued-fraction expansion alpha = [0; a_1, a_2, ...].
//
// Every decision (floors, comparisons of fractional parts) is made by
// squeezing alpha between consecutive convergents until the answer is forced.
// Nothing here ever touches floating point.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelian/bigint.hpp"

namespace abelian {

  class ContinuedFraction {
   public:
    enum class Kind { eventually_periodic, finite };

    // [0; preperiod..., period, period, ...]. The period must be non-empty.
    static ContinuedFraction eventually_periodic(std::vector<BigInt> preperiod,
                                                 std::vector<BigInt> period);
    // [0; terms...] treated as the known head of an unknown irrational; any
    // decision that needs more terms fails with PrecisionError.
    static ContinuedFraction finite(std::vector<BigInt> terms);

    // (3 - sqrt 5) / 2 = [0; 2, 1, 1, 1, ...]
    static ContinuedFraction golden();
    // sqrt 2 - 1 = [0; 2, 2, 2, ...]
    static ContinuedFraction sqrt2();

    Kind kind() const noexcept {
      return kind_;
    }
    bool unbounded() const noexcept {
      return kind_ == Kind::eventually_periodic;
    }
    // Number of available terms; nullopt when the stream is unbounded.
    std::optional<std::size_t> length() const noexcept;

    // a_n for n >= 1; nullopt once a finite stream is exhausted.
    std::optional<BigInt> term(std::size_t n) const;

    std::vector<BigInt> const& preperiod() const noexcept {
      return head_;
    }
    std::vector<BigInt> const& period() const noexcept {
      return period_;
    }

    // Expansion of 1 - alpha.
    ContinuedFraction complement() const;
    // Expansion of [0; a_{count+1}, a_{count+2}, ...].
    ContinuedFraction drop(std::size_t count) const;
    // Expansion of [0; terms..., a_1, a_2, ...].
    ContinuedFraction prepend(std::vector<BigInt> const& terms) const;

    // True iff alpha < 1/2, i.e. a_1 >= 2.
    bool below_half() const;

    std::string to_string() const;

    bool operator==(ContinuedFraction const&) const = default;

   private:
    ContinuedFraction(Kind kind, std::vector<BigInt> head,
                      std::vector<BigInt> period);

    Kind                kind_;
    std::vector<BigInt> head_;    // preperiod, or all terms for Kind::finite
    std::vector<BigInt> period_;  // empty for Kind::finite
  };

  // p_n / q_n = [0; a_1, ..., a_n], n >= 0.
  struct Convergent {
    std::size_t index = 0;
    BigInt      p;
    BigInt      q;

    bool operator==(Convergent const&) const = default;
  };

  // The real number u + v * alpha.
  struct AffineThreshold {
    Rational u;
    Rational v;

    bool operator==(AffineThreshold const&) const = default;
  };

  // Convergents with indices 1..count.
  std::vector<Convergent> convergents(ContinuedFraction const& cf,
                                      std::size_t              count);

  // Immutable evaluator for one slope. Holds a precomputed convergent table so
  // that repeated floors and comparisons are cheap; safe to share between
  // threads.
  class Slope {
   public:
    explicit Slope(ContinuedFraction cf);

    ContinuedFraction const& expansion() const noexcept {
      return cf_;
    }

    // p_n / q_n for n >= 0. Throws PrecisionError past the end of a finite
    // stream.
    Convergent convergent(std::size_t n) const;

    // floor(n * alpha), exact.
    BigInt        floor_scaled(BigInt const& n) const;
    std::uint64_t floor_scaled(std::uint64_t n) const;

    // Exact sign (-1, 0, 1) of t.u + t.v * alpha.
    int sign(AffineThreshold const& t) const;

    // Three-way comparison of {i alpha} against t. Equality is reported only
    // when it holds algebraically (then the comparison is an identity).
    std::strong_ordering compare_frac(BigInt const& i,
                                      AffineThreshold const& t) const;

    // {i alpha} < t. Throws PreconditionError if {i alpha} = t identically.
    bool frac_less_than(BigInt const& i, AffineThreshold const& t) const;

   private:
    BigInt floor_refined(BigInt const& n) const;

    // Calls decide(lower, upper) on nested sandwiches lower < alpha < upper,
    // starting from convergent pair (first, first + 1), until it returns true.
    template <typename Decide>
    void refine(std::size_t first, Decide&& decide) const;

    ContinuedFraction       cf_;
    std::vector<Convergent> table_;  // indices 0 .. table_.size() - 1
    bool                    table_complete_ = false;  // finite stream fully tabled
    // Leading part of the table whose entries fit in 63 bits.
    std::vector<std::uint64_t> small_p_;
    std::vector<std::uint64_t> small_q_;
  };

  BigInt floor_scaled(ContinuedFraction const& cf, BigInt const& n);
  bool   frac_less_than(ContinuedFraction const& cf,
                        BigInt const&            i,
                        AffineThreshold const&   t);

}  // namespace abelian

#endif  // ABELIAN_CF_HPP_
