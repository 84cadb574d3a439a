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

#include <bit>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gkm/cohomology.hpp"
#include "gkm/graph.hpp"
#include "gkm/linalg.hpp"
#include "gkm/linear_ideal.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

// Simultaneous congruences f = targets[i] (mod moduli[i]).
struct CongruenceSystem {
    std::vector<LinearForm> moduli;
    std::vector<Polynomial> targets;

    std::size_t size() const { return moduli.size(); }

    std::size_t nvars() const {
        if (moduli.empty()) throw ValidationError("empty congruence system");
        return moduli[0].nvars();
    }

    void validate() const {
        if (moduli.size() != targets.size())
            throw ValidationError("moduli/target count mismatch");
        if (moduli.empty()) return;
        std::size_t n = moduli[0].nvars();
        for (const LinearForm& e : moduli) {
            if (e.nvars() != n) throw DimensionError("moduli nvars mismatch");
            if (e.is_zero()) throw ValidationError("zero modulus");
        }
        for (const Polynomial& a : targets)
            if (a.nvars() != n) throw DimensionError("target nvars mismatch");
    }
};

// First failing pair of the pairwise condition.  difference is
// targets[j] - targets[i] with i < j; the moduli are sign-normalized
// for presentation (divisibility and span are sign-invariant).
struct PairWitness {
    std::size_t i = 0, j = 0;
    Polynomial difference{1};
    LinearForm modulus_i, modulus_j;
};

struct ExtensionCertificate {
    enum class Outcome { solved, obstructed };

    Outcome outcome = Outcome::obstructed;
    std::optional<Polynomial> solution;
    std::optional<PairWitness> witness;

    bool solved() const { return outcome == Outcome::solved; }

    static ExtensionCertificate make_solved(Polynomial f) {
        ExtensionCertificate c;
        c.outcome = Outcome::solved;
        c.solution = std::move(f);
        return c;
    }

    static ExtensionCertificate make_obstructed(std::optional<PairWitness> w) {
        ExtensionCertificate c;
        c.outcome = Outcome::obstructed;
        c.witness = std::move(w);
        return c;
    }
};

// Lexicographically first (i, j) with targets[j] - targets[i] outside
// <moduli[i], moduli[j]>; nullopt when the system is pairwise compatible.
inline std::optional<PairWitness> compatible_witness(const CongruenceSystem& sys) {
    sys.validate();
    for (std::size_t i = 0; i < sys.size(); ++i) {
        for (std::size_t j = i + 1; j < sys.size(); ++j) {
            Polynomial diff = sys.targets[j] - sys.targets[i];
            if (ideal_member_linear({sys.moduli[i], sys.moduli[j]}, diff)) continue;
            PairWitness w;
            w.i = i;
            w.j = j;
            w.difference = std::move(diff);
            w.modulus_i = sys.moduli[i].sign_normalized();
            w.modulus_j = sys.moduli[j].sign_normalized();
            return w;
        }
    }
    return std::nullopt;
}

inline bool crt_compatible(const CongruenceSystem& sys) {
    return !compatible_witness(sys).has_value();
}

namespace detail {

// Completes independent moduli to a square invertible matrix by greedily
// appending unit coordinate forms, lowest index first.
inline RationalMatrix complete_basis(const CongruenceSystem& sys, std::size_t n) {
    std::vector<std::vector<Rational>> rows;
    for (const LinearForm& e : sys.moduli) rows.push_back(e.coeffs);
    for (std::size_t k = 0; k < n && rows.size() < n; ++k) {
        std::vector<Rational> unit(n, Rational(0));
        unit[k] = 1;
        rows.push_back(unit);
        if (rank(RationalMatrix::from_rows(rows, n)) != rows.size()) rows.pop_back();
    }
    return RationalMatrix::from_rows(rows, n);
}

inline std::map<std::size_t, Polynomial> linear_substitution(const RationalMatrix& m) {
    std::map<std::size_t, Polynomial> images;
    std::size_t n = m.cols();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Polynomial img(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (m.at(i, j) == 0) continue;
            img += Polynomial::variable(n, j) * m.at(i, j);
        }
        images.emplace(i, std::move(img));
    }
    return images;
}

// Inclusion-exclusion solver for independent moduli; pick_max switches the
// subset representative from min to max index (used to test representative
// independence).
inline ExtensionCertificate crt_solve_impl(const CongruenceSystem& sys, bool pick_max) {
    sys.validate();
    std::size_t n = sys.nvars(), m = sys.size();
    if (!linear_independent(sys.moduli))
        throw IndependenceError("moduli are linearly dependent");
    if (auto w = compatible_witness(sys))
        return ExtensionCertificate::make_obstructed(std::move(w));

    RationalMatrix M = complete_basis(sys, n);
    RationalMatrix Minv = *inverse(M);

    // y = M x; rewrite each target in the y coordinates, where the i-th
    // modulus is just y_{i+1}
    auto to_y = linear_substitution(Minv);
    std::vector<Polynomial> transformed;
    transformed.reserve(m);
    for (const Polynomial& a : sys.targets) transformed.push_back(a.substitute(to_y));

    Polynomial ft(n);
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::size_t rep = pick_max ? (std::bit_width(mask) - 1)
                                   : std::countr_zero(mask);
        std::map<std::size_t, Polynomial> kill;
        for (std::size_t j = 0; j < m; ++j)
            if (mask & (1u << j)) kill.emplace(j, Polynomial(n));
        Polynomial term = transformed[rep].substitute(kill);
        if (std::popcount(mask) % 2 == 1)
            ft += term;
        else
            ft -= term;
    }

    Polynomial f = ft.substitute(linear_substitution(M));
    for (std::size_t i = 0; i < m; ++i)
        if (!divides_linear(sys.moduli[i], f - sys.targets[i]))
            throw Error("internal: constructed solution fails verification");
    return ExtensionCertificate::make_solved(std::move(f));
}

} // namespace detail

// Constructive solver; requires linearly independent moduli.
inline ExtensionCertificate crt_solve(const CongruenceSystem& sys) {
    return detail::crt_solve_impl(sys, false);
}

inline std::vector<Monomial> monomials_upto(std::size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    for (unsigned k = d; k + 1 != 0; --k) {
        auto layer = monomials_of_degree(nvars, k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

// Bounded-degree solver, valid for arbitrary (possibly dependent) moduli:
// solves the exact linear system in the coefficients of f with deg f <= D.
// D defaults to max target degree + slack.
inline ExtensionCertificate crt_solve_bounded(const CongruenceSystem& sys,
                                              std::optional<unsigned> degree_cap = {},
                                              unsigned slack = 1) {
    sys.validate();
    std::size_t n = sys.nvars();
    unsigned D;
    if (degree_cap) {
        D = *degree_cap;
    } else {
        unsigned dmax = 0;
        for (const Polynomial& a : sys.targets) dmax = std::max(dmax, a.degree());
        D = dmax + slack;
    }
    std::vector<Monomial> mons = monomials_upto(n, D);

    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        std::map<Monomial, std::size_t, GrlexGreater> local;
        std::vector<Polynomial> images;
        images.reserve(mons.size());
        for (const Monomial& m : mons) {
            Polynomial img =
                hyperplane_substitute(sys.moduli[i], Polynomial::term(n, m, 1));
            for (const auto& [mu, c] : img.terms()) local.emplace(mu, 0);
            images.push_back(std::move(img));
        }
        Polynomial target_img = hyperplane_substitute(sys.moduli[i], sys.targets[i]);
        for (const auto& [mu, c] : target_img.terms()) local.emplace(mu, 0);
        std::size_t next = rows.size();
        for (auto& [mu, r] : local) {
            r = next++;
            rows.emplace_back(mons.size(), Rational(0));
            rhs.push_back(0);
        }
        for (std::size_t k = 0; k < mons.size(); ++k)
            for (const auto& [mu, c] : images[k].terms())
                rows[local.at(mu)][k] += c;
        for (const auto& [mu, c] : target_img.terms()) rhs[local.at(mu)] = c;
    }

    auto sol = solve_affine(RationalMatrix::from_rows(rows, mons.size()), rhs);
    if (!sol)
        return ExtensionCertificate::make_obstructed(compatible_witness(sys));
    Polynomial f(n);
    for (std::size_t k = 0; k < mons.size(); ++k) f.add_term(mons[k], sol->particular[k]);
    for (std::size_t i = 0; i < sys.size(); ++i)
        if (!divides_linear(sys.moduli[i], f - sys.targets[i]))
            throw Error("internal: bounded solution fails verification");
    return ExtensionCertificate::make_solved(std::move(f));
}

// Congruence system for assigning a value at v: one congruence per
// neighbor of v inside sub, modulus oriented away from v.
inline CongruenceSystem vertex_system(const LabeledGraph& g, const LabeledGraph& sub,
                                      const GradedClass& cls, const std::string& v) {
    CongruenceSystem sys;
    for (const auto& ie : g.incident(v)) {
        const std::string& w = g.vertex_ids()[ie.neighbor];
        if (!sub.contains(w)) continue;
        sys.moduli.push_back(g.oriented_label(ie));
        sys.targets.push_back(cls.at(w));
    }
    return sys;
}

// Extends cls from sub by one vertex v of g.  Independent incident moduli
// use the constructive solver; dependent ones fall back to the bounded
// solver with D = max target degree + slack.
inline ExtensionCertificate extend_vertex(const LabeledGraph& g, const LabeledGraph& sub,
                                          const GradedClass& cls, const std::string& v,
                                          unsigned slack = 1) {
    if (!g.contains(v)) throw PreconditionError("vertex not in graph: " + v);
    if (sub.contains(v)) throw PreconditionError("vertex already in subgraph: " + v);
    if (!is_induced_subgraph(g, sub))
        throw PreconditionError("not an induced subgraph");
    ClassCheck cc = check_class(sub, cls);
    if (!cc.ok) throw PreconditionError("input is not a class on the subgraph");

    CongruenceSystem sys = vertex_system(g, sub, cls, v);
    if (sys.moduli.empty())
        return ExtensionCertificate::make_solved(Polynomial(g.nvars()));
    if (linear_independent(sys.moduli)) return crt_solve(sys);
    return crt_solve_bounded(sys, std::nullopt, slack);
}

struct SequenceExtension {
    std::optional<GradedClass> result;              // set when fully extended
    std::optional<std::string> failed_at;           // first obstructed vertex
    std::optional<ExtensionCertificate> certificate;

    bool ok() const { return result.has_value(); }
};

// Adds the missing vertices one at a time in the given order; order must
// be exactly V(g) minus V(sub).
inline SequenceExtension extend_sequence(const LabeledGraph& g, const LabeledGraph& sub,
                                         const GradedClass& cls,
                                         const std::vector<std::string>& order,
                                         unsigned slack = 1) {
    std::set<std::string> missing;
    for (const std::string& id : g.vertex_ids())
        if (!sub.contains(id)) missing.insert(id);
    std::set<std::string> given(order.begin(), order.end());
    if (given.size() != order.size() || given != missing)
        throw PreconditionError("order is not a permutation of the missing vertices");

    if (order.empty()) {
        ClassCheck cc = check_class(sub, cls);
        if (!cc.ok) throw PreconditionError("input is not a class on the subgraph");
        SequenceExtension out;
        out.result = cls;
        return out;
    }

    LabeledGraph cur = sub;
    GradedClass values = cls;
    std::set<std::string> have(sub.vertex_ids().begin(), sub.vertex_ids().end());
    for (const std::string& v : order) {
        ExtensionCertificate cert = extend_vertex(g, cur, values, v, slack);
        if (!cert.solved()) {
            SequenceExtension out;
            out.failed_at = v;
            out.certificate = std::move(cert);
            return out;
        }
        values.set(v, *cert.solution);
        have.insert(v);
        cur = g.induced(have);
    }
    SequenceExtension out;
    out.result = std::move(values);
    return out;
}

// One-vertex Chinese remainder pair check: g1 must be g2 minus exactly one
// vertex; true iff every basis class of g1 in degree <= max_degree extends.
inline bool cr_pair_upto(const LabeledGraph& g2, const LabeledGraph& g1,
                         unsigned max_degree, unsigned slack = 1) {
    if (!is_induced_subgraph(g2, g1))
        throw PreconditionError("not an induced subgraph");
    std::vector<std::string> missing;
    for (const std::string& id : g2.vertex_ids())
        if (!g1.contains(id)) missing.push_back(id);
    if (missing.size() != 1)
        throw PreconditionError("subgraph must miss exactly one vertex");
    const std::string& v = missing[0];
    for (unsigned d = 0; d <= max_degree; ++d)
        for (const GradedClass& cls : cohomology_basis(g1, d))
            if (!extend_vertex(g2, g1, cls, v, slack).solved()) return false;
    return true;
}

} // namespace gkm
