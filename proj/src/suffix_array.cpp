#include "suffix_array.hpp"

#include <algorithm>
#include <numeric>

namespace abelian::detail {

  std::vector<std::uint32_t> suffix_array(std::span<Letter const> s) {
    std::size_t const n = s.size();
    std::vector<std::uint32_t> sa(n), rank(n), next(n), second(n);
    if (n == 0) {
      return sa;
    }
    std::size_t buckets = 256;
    std::vector<std::uint32_t> count(std::max(buckets, n) + 1);

    for (std::size_t i = 0; i < n; ++i) {
      rank[i] = s[i];
    }
    // Initial order by first letter.
    std::fill(count.begin(), count.begin() + buckets, 0);
    for (std::size_t i = 0; i < n; ++i) {
      ++count[rank[i]];
    }
    std::partial_sum(count.begin(), count.begin() + buckets, count.begin());
    for (std::size_t i = n; i-- > 0;) {
      sa[--count[rank[i]]] = static_cast<std::uint32_t>(i);
    }

    for (std::size_t k = 1;; k <<= 1) {
      // Order by the second key rank[i + k]; suffixes without one come first.
      std::size_t p = 0;
      for (std::size_t i = n - std::min(k, n); i < n; ++i) {
        second[p++] = static_cast<std::uint32_t>(i);
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (sa[j] >= k) {
          second[p++] = static_cast<std::uint32_t>(sa[j] - k);
        }
      }
      // Stable counting sort by the first key.
      std::fill(count.begin(), count.begin() + buckets, 0);
      for (std::size_t i = 0; i < n; ++i) {
        ++count[rank[i]];
      }
      std::partial_sum(count.begin(), count.begin() + buckets, count.begin());
      for (std::size_t j = n; j-- > 0;) {
        sa[--count[rank[second[j]]]] = second[j];
      }
      // Re-rank by (rank[i], rank[i + k]).
      auto key2 = [&](std::uint32_t i) -> std::int64_t {
        return i + k < n ? std::int64_t(rank[i + k]) : -1;
      };
      next[sa[0]] = 0;
      std::uint32_t classes = 0;
      for (std::size_t j = 1; j < n; ++j) {
        std::uint32_t const a = sa[j - 1], b = sa[j];
        if (rank[a] != rank[b] || key2(a) != key2(b)) {
          ++classes;
        }
        next[b] = classes;
      }
      rank.swap(next);
      if (classes + 1 == n) {
        break;
      }
      buckets = classes + 1;
    }
    return sa;
  }

  std::vector<std::uint32_t> lcp_array(std::span<Letter const>          s,
                                       std::vector<std::uint32_t> const& sa) {
    std::size_t const          n = s.size();
    std::vector<std::uint32_t> rank(n), lcp(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      rank[sa[i]] = static_cast<std::uint32_t>(i);
    }
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (rank[i] == 0) {
        h = 0;
        continue;
      }
      std::size_t const j = sa[rank[i] - 1];
      while (i + h < n && j + h < n && s[i + h] == s[j + h]) {
        ++h;
      }
      lcp[rank[i]] = static_cast<std::uint32_t>(h);
      if (h > 0) {
        --h;
      }
    }
    return lcp;
  }

}  // namespace abelian::detail
