#ifndef ABELIAN_BIGINT_HPP_
#define ABELIAN_BIGINT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

namespace abelian {

  using BigInt   = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

}  // namespace abelian

#endif  // ABELIAN_BIGINT_HPP_
