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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gkm/errors.hpp"
#include "gkm/rational.hpp"

namespace gkm {

// Exponent vector; its length is the number of variables.
using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

// Graded-lexicographic order, descending: higher total degree first,
// then lexicographically larger exponent vector first.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

// All monomials of total degree d in nvars variables, grlex-descending.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned rest) -> void {
        if (i + 1 == nvars) {
            cur[i] = rest;
            out.push_back(cur);
            return;
        }
        for (unsigned e = rest; e + 1 != 0; --e) {
            cur[i] = e;
            self(self, i + 1, rest - e);
        }
    };
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, d);
    return out;
}

// Sparse multivariate polynomial over Rational in variables x1..xn.
// Terms are stored grlex-descending; zero coefficients are never kept.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial p(nvars);
        p.add_term(Monomial(nvars, 0), c);
        return p;
    }

    // x_{i+1}, i.e. variable with 0-based index i
    static Polynomial variable(std::size_t nvars, std::size_t i) {
        if (i >= nvars) throw DimensionError("variable index out of range");
        Monomial m(nvars, 0);
        m[i] = 1;
        Polynomial p(nvars);
        p.add_term(m, 1);
        return p;
    }

    static Polynomial term(std::size_t nvars, const Monomial& m, const Rational& c) {
        if (m.size() != nvars) throw DimensionError("monomial length mismatch");
        Polynomial p(nvars);
        p.add_term(m, c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    // total degree; 0 for the zero polynomial
    unsigned degree() const {
        return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
    }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.size() != nvars_) throw DimensionError("monomial length mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r(a.nvars_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        Polynomial r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(a.nvars_);
                for (std::size_t i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Rational& s) {
        Polynomial r(a.nvars_);
        if (s == 0) return r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(nvars_, 1);
        for (unsigned k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    // Simultaneous substitution x_{i+1} -> image for each (i, image) in the
    // map; untouched variables stay themselves.  Every image must live in
    // the same variable space.
    Polynomial substitute(const std::map<std::size_t, Polynomial>& images) const {
        for (const auto& [i, img] : images) {
            if (i >= nvars_) throw DimensionError("substitution index out of range");
            if (img.nvars() != nvars_) throw DimensionError("substitution nvars mismatch");
        }
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) {
            Polynomial t = constant(nvars_, c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (m[i] == 0) continue;
                auto it = images.find(i);
                const Polynomial base =
                    it == images.end() ? variable(nvars_, i) : it->second;
                t = t * base.pow(m[i]);
            }
            r += t;
        }
        return r;
    }

    Polynomial homogeneous_component(unsigned d) const {
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_)
            if (total_degree(m) == d) r.terms_.emplace(m, c);
        return r;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = total_degree(terms_.begin()->first);
        return total_degree(terms_.rbegin()->first) == d;
    }

  private:
    void check_same(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw DimensionError("polynomial nvars mismatch");
    }

    std::size_t nvars_;
    TermMap terms_;
};

// Homogeneous linear form sum c_i * x_{i+1}, stored as its coefficient
// vector.  The zero form is representable; operations that need a nonzero
// label check for it explicitly.
struct LinearForm {
    std::vector<Rational> coeffs;

    LinearForm() = default;
    explicit LinearForm(std::vector<Rational> c) : coeffs(std::move(c)) {}

    std::size_t nvars() const { return coeffs.size(); }

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (c != 0) return false;
        return true;
    }

    Polynomial to_polynomial() const {
        Polynomial p(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            Monomial m(coeffs.size(), 0);
            m[i] = 1;
            p.add_term(m, coeffs[i]);
        }
        return p;
    }

    // requires a homogeneous polynomial of degree <= 1 with no constant part
    static LinearForm from_polynomial(const Polynomial& p) {
        std::vector<Rational> c(p.nvars(), Rational(0));
        for (const auto& [m, q] : p.terms()) {
            if (total_degree(m) != 1)
                throw ValidationError("polynomial is not a linear form");
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] == 1) c[i] = q;
        }
        return LinearForm(std::move(c));
    }

    LinearForm negated() const {
        LinearForm r = *this;
        for (auto& c : r.coeffs) c = -c;
        return r;
    }

    // first nonzero coefficient made positive; used when presenting witnesses
    LinearForm sign_normalized() const {
        for (const auto& c : coeffs) {
            if (c == 0) continue;
            return c < 0 ? negated() : *this;
        }
        return *this;
    }

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.coeffs == b.coeffs;
    }

    friend bool operator<(const LinearForm& a, const LinearForm& b) {
        return a.coeffs < b.coeffs;
    }
};

inline bool proportional(const LinearForm& a, const LinearForm& b) {
    if (a.nvars() != b.nvars()) throw DimensionError("linear form nvars mismatch");
    // a and b proportional iff all 2x2 minors vanish
    for (std::size_t i = 0; i < a.nvars(); ++i)
        for (std::size_t j = i + 1; j < a.nvars(); ++j)
            if (a.coeffs[i] * b.coeffs[j] != a.coeffs[j] * b.coeffs[i]) return false;
    return true;
}

inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string vars;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i + 1);
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) {
            out += rational_to_string(a);
        } else {
            if (a != 1) out += rational_to_string(a) + "*";
            out += vars;
        }
    }
    return out;
}

inline std::string to_string(const LinearForm& f) {
    return to_string(f.to_polynomial());
}

} // namespace gkm
