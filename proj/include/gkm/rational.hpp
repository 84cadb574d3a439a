/*
   Copyright 2026 The gkmcoh Authors

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

#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "gkm/errors.hpp"

namespace gkm {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar, always kept in lowest terms with positive
// denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "p" for integers, "p/q" otherwise, q > 0.
inline std::string rational_to_string(const Rational& r) {
    return r.str();
}

// Accepts an optional leading sign, digits, and an optional "/digits" part.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] {
        return ValidationError("invalid rational: '" + std::string(text) + "'");
    };
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    auto check_digits = [&](std::string_view part, bool sign_ok) {
        if (sign_ok && !part.empty() && (part[0] == '+' || part[0] == '-'))
            part.remove_prefix(1);
        if (part.empty()) throw bad();
        for (char c : part)
            if (c < '0' || c > '9') throw bad();
    };
    check_digits(num, true);
    if (num[0] == '+') num.remove_prefix(1);
    Integer p{std::string(num)};
    if (den.data() == nullptr) return Rational(p);
    check_digits(den, false);
    Integer q{std::string(den)};
    if (q == 0) throw bad();
    return Rational(p, q);
}

} // namespace gkm
