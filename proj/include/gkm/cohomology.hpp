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
#include <optional>
#include <string>
#include <vector>

#include "gkm/graph.hpp"
#include "gkm/linalg.hpp"
#include "gkm/linear_ideal.hpp"

namespace gkm {

struct ClassCheck {
    bool ok = false;
    std::optional<Edge> failing_edge;
};

// A class assigns a polynomial to every vertex such that across each edge
// the difference of endpoint values is divisible by the label.
inline ClassCheck check_class(const LabeledGraph& g, const GradedClass& f) {
    for (const std::string& id : g.vertex_ids()) {
        const Polynomial& p = f.at(id);
        if (p.nvars() != g.nvars())
            throw DimensionError("class value has wrong nvars at " + id);
    }
    for (const Edge& e : g.edges()) {
        Polynomial diff = f.at(e.src) - f.at(e.dst);
        if (!divides_linear(e.label, diff)) return {false, e};
    }
    return {true, std::nullopt};
}

inline bool is_class(const LabeledGraph& g, const GradedClass& f) {
    return check_class(g, f).ok;
}

// Coordinates of a degree-d class: one block per vertex in graph order,
// within a block one coefficient per degree-d monomial, grlex-descending.
inline std::vector<Rational> class_to_vector(const LabeledGraph& g,
                                             const GradedClass& f, unsigned d) {
    std::vector<Monomial> mons = monomials_of_degree(g.nvars(), d);
    std::vector<Rational> v;
    v.reserve(g.vertex_count() * mons.size());
    for (const std::string& id : g.vertex_ids()) {
        const Polynomial& p = f.at(id);
        for (const Monomial& m : mons) v.push_back(p.coeff(m));
    }
    return v;
}

inline GradedClass vector_to_class(const LabeledGraph& g,
                                   const std::vector<Rational>& v, unsigned d) {
    std::vector<Monomial> mons = monomials_of_degree(g.nvars(), d);
    GradedClass f;
    std::size_t idx = 0;
    for (const std::string& id : g.vertex_ids()) {
        Polynomial p(g.nvars());
        for (const Monomial& m : mons) p.add_term(m, v[idx++]);
        f.set(id, std::move(p));
    }
    return f;
}

// Divisibility of a difference by an edge label is linear in the class
// coefficients: restrict each monomial to the label's hyperplane and
// require all image coefficients of (f_src - f_dst) to vanish.
inline RationalMatrix class_equations(const LabeledGraph& g, unsigned d) {
    std::vector<Monomial> mons = monomials_of_degree(g.nvars(), d);
    std::size_t cols = g.vertex_count() * mons.size();
    std::vector<std::vector<Rational>> rows;
    for (const Edge& e : g.edges()) {
        std::size_t s = g.vertex_index(e.src), t = g.vertex_index(e.dst);
        std::map<Monomial, std::size_t, GrlexGreater> local;
        std::vector<Polynomial> images;
        images.reserve(mons.size());
        for (const Monomial& m : mons) {
            Polynomial img =
                hyperplane_substitute(e.label, Polynomial::term(g.nvars(), m, 1));
            for (const auto& [mu, c] : img.terms()) local.emplace(mu, 0);
            images.push_back(std::move(img));
        }
        std::size_t next = rows.size();
        for (auto& [mu, r] : local) {
            r = next++;
            rows.emplace_back(cols, Rational(0));
        }
        for (std::size_t k = 0; k < mons.size(); ++k) {
            for (const auto& [mu, c] : images[k].terms()) {
                std::size_t r = local.at(mu);
                rows[r][s * mons.size() + k] += c;
                rows[r][t * mons.size() + k] -= c;
            }
        }
    }
    return RationalMatrix::from_rows(rows, cols);
}

// Basis of the degree-d part, deterministic: canonical rref nullspace in
// the fixed vertex-by-monomial coordinate order.
inline std::vector<GradedClass> cohomology_basis(const LabeledGraph& g, unsigned d) {
    std::vector<std::vector<Rational>> vecs = nullspace(class_equations(g, d));
    std::vector<GradedClass> basis;
    basis.reserve(vecs.size());
    for (const auto& v : vecs) basis.push_back(vector_to_class(g, v, d));
    return basis;
}

inline std::size_t cohomology_dim(const LabeledGraph& g, unsigned d) {
    RationalMatrix eq = class_equations(g, d);
    return eq.cols() - rank(eq);
}

inline GradedClass restrict_class(const GradedClass& f, const LabeledGraph& sub) {
    GradedClass r;
    for (const std::string& id : sub.vertex_ids()) {
        auto it = f.values.find(id);
        if (it == f.values.end())
            throw PreconditionError("class has no value at vertex " + id);
        r.set(id, it->second);
    }
    return r;
}

struct DegreeReport {
    unsigned degree = 0;
    std::size_t dim_full = 0;
    std::size_t dim_sub = 0;
    std::size_t image_dim = 0;
    bool surjective = false;
};

struct SurjectivityReport {
    unsigned max_degree = 0;
    std::vector<DegreeReport> degrees;

    bool all_surjective() const {
        for (const auto& d : degrees)
            if (!d.surjective) return false;
        return true;
    }
};

// Exact graded check of surjectivity of restriction H(g) -> H(sub) in all
// degrees <= max_degree: compare the rank of the restricted full basis
// with the dimension of the subgraph's space.
inline SurjectivityReport surjective_upto(const LabeledGraph& g,
                                          const LabeledGraph& sub,
                                          unsigned max_degree) {
    if (!is_induced_subgraph(g, sub))
        throw PreconditionError("not an induced subgraph");
    SurjectivityReport report;
    report.max_degree = max_degree;
    for (unsigned d = 0; d <= max_degree; ++d) {
        std::vector<GradedClass> full = cohomology_basis(g, d);
        std::size_t dim_sub = cohomology_dim(sub, d);
        std::size_t mcount = monomials_of_degree(g.nvars(), d).size();
        RationalMatrix image(full.size(), sub.vertex_count() * mcount);
        for (std::size_t i = 0; i < full.size(); ++i) {
            std::vector<Rational> v = class_to_vector(sub, restrict_class(full[i], sub), d);
            for (std::size_t j = 0; j < v.size(); ++j) image.at(i, j) = v[j];
        }
        DegreeReport dr;
        dr.degree = d;
        dr.dim_full = full.size();
        dr.dim_sub = dim_sub;
        dr.image_dim = rank(image);
        dr.surjective = dr.image_dim == dr.dim_sub;
        report.degrees.push_back(dr);
    }
    return report;
}

struct GkmReport {
    bool gkm = false;                          // pairwise independent labels everywhere
    std::optional<std::string> offending_vertex;
    bool regular = false;
    std::size_t degree = 0;                    // common valence when regular
};

inline GkmReport validate_gkm(const LabeledGraph& g) {
    GkmReport r;
    r.gkm = true;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        for (std::size_t a = 0; a < inc.size() && r.gkm; ++a)
            for (std::size_t b = a + 1; b < inc.size() && r.gkm; ++b)
                if (proportional(g.edges()[inc[a].edge].label,
                                 g.edges()[inc[b].edge].label)) {
                    r.gkm = false;
                    r.offending_vertex = g.vertex_ids()[v];
                }
    }
    r.regular = true;
    if (g.vertex_count() > 0) {
        r.degree = g.incident(std::size_t(0)).size();
        for (std::size_t v = 1; v < g.vertex_count(); ++v)
            if (g.incident(v).size() != r.degree) r.regular = false;
        if (!r.regular) r.degree = 0;
    }
    return r;
}

} // namespace gkm
