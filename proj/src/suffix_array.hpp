#ifndef ABELIAN_SRC_SUFFIX_ARRAY_HPP_
#define ABELIAN_SRC_SUFFIX_ARRAY_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "abelian/words.hpp"

namespace abelian::detail {

  // Suffix array by prefix doubling with counting sorts, O(n log n).
  std::vector<std::uint32_t> suffix_array(std::span<Letter const> s);

  // lcp[i] = longest common prefix of suffixes sa[i - 1] and sa[i]; lcp[0] = 0.
  // Kasai et al.
  std::vector<std::uint32_t> lcp_array(std::span<Letter const>      s,
                                       std::vector<std::uint32_t> const& sa);

}  // namespace abelian::detail

#endif  // ABELIAN_SRC_SUFFIX_ARRAY_HPP_
