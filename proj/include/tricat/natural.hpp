#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tricat {

/// Arbitrary-precision integer used for every coefficient and count.
/// Values overflow 64-bit words near n ~ 30 already, so machine words are
/// never used for triangle entries.
using Natural = boost::multiprecision::cpp_int;

inline Natural natural_pow(const Natural& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

}  // namespace tricat
