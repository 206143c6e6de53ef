#include "abelian/cf.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <utility>

#include "abelian/error.hpp"

namespace abelian {

  namespace {
    // Convergent tables stop growing once q passes this bound; floors and
    // comparisons needing more precision extend the table locally.
    BigInt const kTableLimit = BigInt(1) << 160;

    BigInt const kSmallLimit = BigInt(1) << 62;

    [[noreturn]] void out_of_precision() {
      throw PrecisionError("insufficient continued-fraction precision");
    }

    int sign_of(BigInt const& x) {
      return x.sign();
    }

    int sign_of(Rational const& x) {
      return x.sign();
    }

    std::strong_ordering ordering_of(int s) {
      if (s < 0) {
        return std::strong_ordering::less;
      } else if (s > 0) {
        return std::strong_ordering::greater;
      }
      return std::strong_ordering::equal;
    }

    Convergent next_convergent(BigInt const&     a,
                               Convergent const& prev,
                               Convergent const& prev2) {
      return Convergent{prev.index + 1, a * prev.p + prev2.p,
                        a * prev.q + prev2.q};
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // ContinuedFraction
  ////////////////////////////////////////////////////////////////////////

  ContinuedFraction::ContinuedFraction(Kind                kind,
                                       std::vector<BigInt> head,
                                       std::vector<BigInt> period)
      : kind_(kind), head_(std::move(head)), period_(std::move(period)) {
    auto positive = [](BigInt const& a) { return a >= 1; };
    if (!std::all_of(head_.begin(), head_.end(), positive)
        || !std::all_of(period_.begin(), period_.end(), positive)) {
      throw PreconditionError(
          "continued-fraction terms a_1, a_2, ... must all be >= 1");
    }
    if (kind_ == Kind::eventually_periodic && period_.empty()) {
      throw PreconditionError("eventually periodic expansion needs a "
                              "non-empty period");
    }
    if (kind_ == Kind::finite && head_.empty()) {
      throw PreconditionError("finite expansion needs at least one term");
    }
  }

  ContinuedFraction
  ContinuedFraction::eventually_periodic(std::vector<BigInt> preperiod,
                                         std::vector<BigInt> period) {
    return ContinuedFraction(
        Kind::eventually_periodic, std::move(preperiod), std::move(period));
  }

  ContinuedFraction ContinuedFraction::finite(std::vector<BigInt> terms) {
    return ContinuedFraction(Kind::finite, std::move(terms), {});
  }

  ContinuedFraction ContinuedFraction::golden() {
    return eventually_periodic({2}, {1});
  }

  ContinuedFraction ContinuedFraction::sqrt2() {
    return eventually_periodic({}, {2});
  }

  std::optional<std::size_t> ContinuedFraction::length() const noexcept {
    if (kind_ == Kind::finite) {
      return head_.size();
    }
    return std::nullopt;
  }

  std::optional<BigInt> ContinuedFraction::term(std::size_t n) const {
    if (n == 0) {
      throw PreconditionError("continued-fraction terms are indexed from 1");
    }
    std::size_t const i = n - 1;
    if (i < head_.size()) {
      return head_[i];
    }
    if (kind_ == Kind::finite) {
      return std::nullopt;
    }
    return period_[(i - head_.size()) % period_.size()];
  }

  ContinuedFraction ContinuedFraction::drop(std::size_t count) const {
    if (kind_ == Kind::finite) {
      if (count >= head_.size()) {
        out_of_precision();
      }
      return finite({head_.begin() + count, head_.end()});
    }
    if (count <= head_.size()) {
      return eventually_periodic({head_.begin() + count, head_.end()},
                                 period_);
    }
    std::size_t const shift = (count - head_.size()) % period_.size();
    std::vector<BigInt> rotated(period_.begin() + shift, period_.end());
    rotated.insert(rotated.end(), period_.begin(), period_.begin() + shift);
    return eventually_periodic({}, std::move(rotated));
  }

  ContinuedFraction
  ContinuedFraction::prepend(std::vector<BigInt> const& terms) const {
    std::vector<BigInt> head(terms);
    head.insert(head.end(), head_.begin(), head_.end());
    return ContinuedFraction(kind_, std::move(head), period_);
  }

  bool ContinuedFraction::below_half() const {
    return *term(1) >= 2;
  }

  ContinuedFraction ContinuedFraction::complement() const {
    // 1 - [0; a, x] = [0; 1, a - 1, x] for a >= 2, and conversely.
    BigInt const a1 = *term(1);
    if (a1 >= 2) {
      if (length() && *length() == 1) {
        return finite({1, a1 - 1});
      }
      return drop(1).prepend({1, a1 - 1});
    }
    auto const a2 = term(2);
    if (!a2) {
      out_of_precision();
    }
    if (length() && *length() == 2) {
      return finite({*a2 + 1});
    }
    return drop(2).prepend({*a2 + 1});
  }

  std::string ContinuedFraction::to_string() const {
    std::ostringstream out;
    out << "[0;";
    char const* sep = " ";
    for (auto const& a : head_) {
      out << sep << a;
      sep = ", ";
    }
    if (!period_.empty()) {
      out << sep << "(";
      sep = "";
      for (auto const& a : period_) {
        out << sep << a;
        sep = ", ";
      }
      out << ")";
    }
    out << "]";
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Convergents
  ////////////////////////////////////////////////////////////////////////

  std::vector<Convergent> convergents(ContinuedFraction const& cf,
                                      std::size_t              count) {
    if (count == 0) {
      throw PreconditionError("convergents: count must be >= 1");
    }
    if (auto len = cf.length(); len && *len < count) {
      throw PrecisionError("continued-fraction stream exhausted: "
                           + std::to_string(count) + " terms requested, "
                           + std::to_string(*len) + " available (short by "
                           + std::to_string(count - *len) + ")");
    }
    std::vector<Convergent> result;
    result.reserve(count);
    Convergent prev2{0, 1, 0};  // the formal p_{-1} / q_{-1} = 1 / 0
    Convergent prev{0, 0, 1};
    for (std::size_t n = 1; n <= count; ++n) {
      Convergent c = next_convergent(*cf.term(n), prev, prev2);
      result.push_back(c);
      prev2 = std::move(prev);
      prev  = std::move(c);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Slope
  ////////////////////////////////////////////////////////////////////////

  Slope::Slope(ContinuedFraction cf) : cf_(std::move(cf)) {
    table_.push_back(Convergent{0, 0, 1});
    Convergent prev2{0, 1, 0};
    while (table_.back().q < kTableLimit) {
      auto a = cf_.term(table_.size());
      if (!a) {
        table_complete_ = true;
        break;
      }
      Convergent c = next_convergent(*a, table_.back(), prev2);
      prev2        = table_.back();
      table_.push_back(std::move(c));
    }
    for (auto const& c : table_) {
      if (c.q >= kSmallLimit) {
        break;
      }
      small_p_.push_back(static_cast<std::uint64_t>(c.p));
      small_q_.push_back(static_cast<std::uint64_t>(c.q));
    }
  }

  Convergent Slope::convergent(std::size_t n) const {
    if (n < table_.size()) {
      return table_[n];
    }
    if (table_complete_) {
      out_of_precision();
    }
    Convergent prev2 = table_[table_.size() - 2];
    Convergent prev  = table_.back();
    while (prev.index < n) {
      auto a = cf_.term(prev.index + 1);
      if (!a) {
        out_of_precision();
      }
      Convergent c = next_convergent(*a, prev, prev2);
      prev2        = std::move(prev);
      prev         = std::move(c);
    }
    return prev;
  }

  template <typename Decide>
  void Slope::refine(std::size_t first, Decide&& decide) const {
    // Convergents past the table are computed into a local window so that
    // the Slope itself stays immutable.
    std::deque<Convergent> extra;
    auto get = [&](std::size_t n) -> Convergent const& {
      if (n < table_.size()) {
        return table_[n];
      }
      while (table_.size() + extra.size() <= n) {
        std::size_t const next = table_.size() + extra.size();
        auto              a    = cf_.term(next);
        if (!a) {
          out_of_precision();
        }
        auto const& p1 = extra.size() >= 1 ? extra[extra.size() - 1]
                                           : table_[table_.size() - 1];
        auto const& p2 = extra.size() >= 2
                             ? extra[extra.size() - 2]
                             : table_[table_.size() + extra.size() - 2];
        extra.push_back(next_convergent(*a, p1, p2));
      }
      return extra[n - table_.size()];
    };
    for (std::size_t m = first;; ++m) {
      Convergent const& c0 = get(m);
      Convergent const& c1 = get(m + 1);
      // Even-indexed convergents lie below alpha, odd ones above.
      bool const done = (m % 2 == 0) ? decide(c0, c1) : decide(c1, c0);
      if (done) {
        return;
      }
    }
  }

  BigInt Slope::floor_scaled(BigInt const& n) const {
    if (n < 0) {
      throw PreconditionError("floor_scaled: n must be >= 0");
    }
    if (n == 0) {
      return 0;
    }
    if (n < kSmallLimit) {
      return floor_scaled(static_cast<std::uint64_t>(n));
    }
    return floor_refined(n);
  }

  BigInt Slope::floor_refined(BigInt const& n) const {
    // The n*alpha interval from pair (m, m+1) has width n / (q_m q_{m+1}).
    std::size_t first = 0;
    while (first + 2 < table_.size()
           && table_[first].q * table_[first + 1].q <= n) {
      ++first;
    }
    BigInt result;
    refine(first, [&](Convergent const& lo, Convergent const& hi) {
      BigInt const f = (n * lo.p) / lo.q;
      if (n * hi.p <= (f + 1) * hi.q) {
        result = f;
        return true;
      }
      return false;
    });
    return result;
  }

  std::uint64_t Slope::floor_scaled(std::uint64_t n) const {
    using u128 = unsigned __int128;
    if (n == 0) {
      return 0;
    }
    if (n < (std::uint64_t(1) << 62)) {
      std::size_t const size = small_q_.size();
      std::size_t       m    = 0;
      while (m + 2 < size && u128(small_q_[m]) * small_q_[m + 1] <= n) {
        ++m;
      }
      for (; m + 1 < size; ++m) {
        std::size_t const lo = (m % 2 == 0) ? m : m + 1;
        std::size_t const hi = (m % 2 == 0) ? m + 1 : m;
        u128 const        f  = (u128(n) * small_p_[lo]) / small_q_[lo];
        if (u128(n) * small_p_[hi] <= (f + 1) * small_q_[hi]) {
          return static_cast<std::uint64_t>(f);
        }
      }
    }
    return static_cast<std::uint64_t>(floor_refined(BigInt(n)));
  }

  int Slope::sign(AffineThreshold const& t) const {
    if (t.v == 0) {
      return sign_of(t.u);
    }
    // sign(u + v p/q) = sign(un vd q + vn ud p) with positive denominators.
    BigInt const un = numerator(t.u), ud = denominator(t.u);
    BigInt const vn = numerator(t.v), vd = denominator(t.v);
    BigInt const a = un * vd, b = vn * ud;
    int          result = 0;
    refine(0, [&](Convergent const& lo, Convergent const& hi) {
      int const s1 = sign_of(BigInt(a * lo.q + b * lo.p));
      int const s2 = sign_of(BigInt(a * hi.q + b * hi.p));
      // alpha lies strictly inside (lo, hi) and the form is strictly
      // monotone in alpha, so agreeing (or zero) endpoint signs decide it.
      if (s1 >= 0 && s2 >= 0) {
        result = 1;
        return true;
      }
      if (s1 <= 0 && s2 <= 0) {
        result = -1;
        return true;
      }
      return false;
    });
    return result;
  }

  std::strong_ordering Slope::compare_frac(BigInt const&          i,
                                           AffineThreshold const& t) const {
    if (i < 0) {
      throw PreconditionError("compare_frac: i must be >= 0");
    }
    // {i alpha} - (u + v alpha) = (-floor(i alpha) - u) + (i - v) alpha
    BigInt const   f = floor_scaled(i);
    Rational const constant = Rational(-f) - t.u;
    Rational const slope    = Rational(i) - t.v;
    return ordering_of(sign(AffineThreshold{constant, slope}));
  }

  bool Slope::frac_less_than(BigInt const&          i,
                             AffineThreshold const& t) const {
    auto const order = compare_frac(i, t);
    if (order == std::strong_ordering::equal) {
      throw PreconditionError(
          "frac_less_than: {i alpha} equals the threshold identically");
    }
    return order == std::strong_ordering::less;
  }

  BigInt floor_scaled(ContinuedFraction const& cf, BigInt const& n) {
    return Slope(cf).floor_scaled(n);
  }

  bool frac_less_than(ContinuedFraction const& cf,
                      BigInt const&            i,
                      AffineThreshold const&   t) {
    return Slope(cf).frac_less_than(i, t);
  }

}  // namespace abelian
