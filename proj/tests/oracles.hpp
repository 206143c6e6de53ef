#ifndef ABELIAN_TESTS_ORACLES_HPP_
#define ABELIAN_TESTS_ORACLES_HPP_

// Slow, independent reference implementations. None of these touch the
// library's continued-fraction or sliding-window code.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

  using boost::multiprecision::cpp_int;

  // alpha enclosed as lo / 2^bits <= alpha <= hi / 2^bits, from an integer
  // square root, so hi - lo <= 2.
  struct FixedPointSlope {
    cpp_int  lo, hi;
    unsigned bits;

    // floor(n * alpha) when both ends agree, otherwise nullopt (uncertified).
    std::optional<cpp_int> floor(cpp_int const& n) const {
      cpp_int const a = (n * lo) >> bits;
      cpp_int const b = (n * hi) >> bits;
      if (a != b) {
        return std::nullopt;
      }
      return a;
    }
    std::uint64_t floor_u64(std::uint64_t n) const {
      auto f = floor(cpp_int(n));
      if (!f) {
        throw std::runtime_error("oracle floor not certified");
      }
      return static_cast<std::uint64_t>(*f);
    }
  };

  // (3 - sqrt 5) / 2 with 256 fractional bits.
  inline FixedPointSlope golden256() {
    unsigned const bits = 257;
    cpp_int const  one  = cpp_int(1) << 256;
    cpp_int const  s    = boost::multiprecision::sqrt(cpp_int(5) << 512);  // floor(sqrt5 * 2^256)
    // sqrt5 in [s, s + 1] / 2^256
    return {3 * one - s - 1, 3 * one - s, bits};
  }

  // sqrt 2 - 1 with 256 fractional bits.
  inline FixedPointSlope sqrt2_256() {
    unsigned const bits = 256;
    cpp_int const  one  = cpp_int(1) << 256;
    cpp_int const  s    = boost::multiprecision::sqrt(cpp_int(2) << 512);
    return {s - one, s + 1 - one, bits};
  }

  // Characteristic word: position j (0-based) holds
  // floor((j + 2) alpha) - floor((j + 1) alpha).
  inline std::vector<std::uint8_t> characteristic(FixedPointSlope const& a,
                                                  std::size_t len) {
    std::vector<std::uint8_t> out;
    for (std::size_t j = 0; j < len; ++j) {
      out.push_back(static_cast<std::uint8_t>(a.floor_u64(j + 2) - a.floor_u64(j + 1)));
    }
    return out;
  }

  inline std::string digits(std::vector<std::uint8_t> const& w) {
    std::string s;
    for (auto a : w) {
      s += char('0' + a);
    }
    return s;
  }

  // Thue-Morse letter n: parity of the binary digit sum.
  inline std::vector<std::uint8_t> thue_morse(std::size_t len) {
    std::vector<std::uint8_t> out(len);
    for (std::size_t n = 0; n < len; ++n) {
      out[n] = static_cast<std::uint8_t>(__builtin_popcountll(n) & 1);
    }
    return out;
  }

  inline std::vector<std::uint64_t> count_letters(std::vector<std::uint8_t> const& w,
                                                  std::size_t from, std::size_t n,
                                                  std::size_t p) {
    std::vector<std::uint64_t> c(p, 0);
    for (std::size_t i = from; i < from + n; ++i) {
      ++c[w[i]];
    }
    return c;
  }

  // Recounts every window from scratch.
  inline std::uint64_t abelian_complexity(std::vector<std::uint8_t> const& w,
                                          std::size_t n, std::size_t p) {
    std::set<std::vector<std::uint64_t>> seen;
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
      seen.insert(count_letters(w, i, n, p));
    }
    return seen.size();
  }

  inline std::uint64_t factor_complexity(std::vector<std::uint8_t> const& w,
                                         std::size_t n) {
    std::set<std::vector<std::uint8_t>> seen;
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
      seen.emplace(w.begin() + i, w.begin() + i + n);
    }
    return seen.size();
  }

  inline std::uint64_t balance(std::vector<std::uint8_t> const& w,
                               std::size_t n_max, std::size_t p) {
    std::uint64_t c = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (std::size_t a = 0; a < p; ++a) {
        std::uint64_t lo = UINT64_MAX, hi = 0;
        for (std::size_t i = 0; i + n <= w.size(); ++i) {
          auto const v = count_letters(w, i, n, p)[a];
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
        c = std::max(c, hi - lo);
      }
    }
    return c;
  }

  // Smallest ell with k equal-count blocks at start, by direct recount.
  inline std::optional<std::size_t> min_period(std::vector<std::uint8_t> const& w,
                                               std::size_t start, std::size_t k,
                                               std::size_t p, std::size_t ell_max) {
    for (std::size_t ell = 1; ell <= ell_max && start + k * ell <= w.size(); ++ell) {
      auto const first = count_letters(w, start, ell, p);
      bool       ok    = true;
      for (std::size_t j = 1; j < k && ok; ++j) {
        ok = count_letters(w, start + j * ell, ell, p) == first;
      }
      if (ok) {
        return ell;
      }
    }
    return std::nullopt;
  }

}  // namespace oracle

#endif  // ABELIAN_TESTS_ORACLES_HPP_
