#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace borel {

// Exact integer arithmetic everywhere; diagram entries, Betti numbers and
// series coefficients grow like Catalan numbers, so fixed width is not an
// option.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

BigInt binomial(long long n, long long k);
BigInt catalan_number(long long n);
BigInt factorial(long long n);

} // namespace borel
