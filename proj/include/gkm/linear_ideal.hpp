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

#include <map>
#include <vector>

#include "gkm/errors.hpp"
#include "gkm/linalg.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

// Substitution that restricts p to the hyperplane e = 0: the pivot
// variable x_k (first nonzero coefficient of e) is replaced by
// -(1/c_k) * sum_{j != k} c_j x_j.  The result is zero iff e divides p,
// and it depends linearly on the coefficients of p.
inline Polynomial hyperplane_substitute(const LinearForm& e, const Polynomial& p) {
    if (e.nvars() != p.nvars()) throw DimensionError("nvars mismatch");
    std::size_t k = 0;
    while (k < e.nvars() && e.coeffs[k] == 0) ++k;
    if (k == e.nvars()) throw ValidationError("zero linear form");
    Polynomial image(p.nvars());
    for (std::size_t j = 0; j < e.nvars(); ++j) {
        if (j == k || e.coeffs[j] == 0) continue;
        image += Polynomial::variable(p.nvars(), j) * (-e.coeffs[j] / e.coeffs[k]);
    }
    return p.substitute({{k, image}});
}

inline bool divides_linear(const LinearForm& e, const Polynomial& p) {
    return hyperplane_substitute(e, p).is_zero();
}

inline RationalMatrix forms_matrix(const std::vector<LinearForm>& forms,
                                   std::size_t nvars) {
    RationalMatrix m(forms.size(), nvars);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (forms[i].nvars() != nvars) throw DimensionError("linear form nvars mismatch");
        for (std::size_t j = 0; j < nvars; ++j) m.at(i, j) = forms[i].coeffs[j];
    }
    return m;
}

inline bool linear_independent(const std::vector<LinearForm>& forms) {
    if (forms.empty()) return true;
    std::size_t n = forms[0].nvars();
    return rank(forms_matrix(forms, n)) == forms.size();
}

// Membership of p in the ideal generated by linear forms: row reduce the
// forms, then substitute away every pivot variable simultaneously; the
// ideal contains p iff the substituted polynomial vanishes.
inline bool ideal_member_linear(const std::vector<LinearForm>& forms,
                                const Polynomial& p) {
    if (forms.empty()) return p.is_zero();
    std::size_t n = forms[0].nvars();
    if (p.nvars() != n) throw DimensionError("nvars mismatch");
    RrefResult r = rref(forms_matrix(forms, n));
    std::map<std::size_t, Polynomial> images;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
        std::size_t k = r.pivot_cols[i];
        Polynomial image(n);
        for (std::size_t j = k + 1; j < n; ++j) {
            if (r.matrix.at(i, j) == 0) continue;
            image += Polynomial::variable(n, j) * (-r.matrix.at(i, j));
        }
        images.emplace(k, std::move(image));
    }
    return p.substitute(images).is_zero();
}

} // namespace gkm
