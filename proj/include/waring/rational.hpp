/*
   Copyright 2026 The waringff Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WARING_RATIONAL_HPP
#define WARING_RATIONAL_HPP

#include <boost/rational.hpp>
#include <sstream>
#include <string>

namespace waring {

using Rat = boost::rational<long long>;

inline Rat rat_pow(long long base, int e) {
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= Rat(base);
    for (int i = 0; i > e; --i) r /= Rat(base);
    return r;
}

/// floor and ceiling with mathematically correct behavior on negatives
inline long long floor_div(long long a, long long b) {
    if (b < 0) { a = -a; b = -b; }
    long long q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

inline long long rat_floor(const Rat& r) { return floor_div(r.numerator(), r.denominator()); }
inline long long rat_ceil(const Rat& r) { return ceil_div(r.numerator(), r.denominator()); }

inline std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

inline double rat_to_double(const Rat& r) {
    return (double)r.numerator() / (double)r.denominator();
}

}  // namespace waring

#endif  // WARING_RATIONAL_HPP
