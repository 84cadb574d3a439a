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

#include <vector>

#include "gkm/gkm.hpp"

namespace testutil {

// integer-coefficient shorthands for fixtures
inline gkm::LinearForm lf(const std::vector<int>& v) {
    std::vector<gkm::Rational> c(v.begin(), v.end());
    return gkm::LinearForm(std::move(c));
}

inline std::vector<gkm::Rational> rats(const std::vector<int>& v) {
    return {v.begin(), v.end()};
}

inline gkm::RationalMatrix mat(const std::vector<std::vector<int>>& rows,
                               std::size_t cols) {
    std::vector<std::vector<gkm::Rational>> r;
    for (const auto& row : rows) r.push_back(rats(row));
    return gkm::RationalMatrix::from_rows(r, cols);
}

inline gkm::Polynomial var(std::size_t nvars, std::size_t i) {
    return gkm::Polynomial::variable(nvars, i);
}

} // namespace testutil
