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

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gkm/graph.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

// xi, a linear function evaluated on vertex coordinates.
struct LinearFunctional {
    std::vector<Rational> coeffs;

    LinearFunctional() = default;
    explicit LinearFunctional(std::vector<Rational> c) : coeffs(std::move(c)) {}

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (c != 0) return false;
        return true;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != coeffs.size())
            throw DimensionError("functional/point length mismatch");
        Rational v = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * point[i];
        return v;
    }
};

// Shortest integral vector in the direction of w - v.
inline LinearForm primitive_label(const std::vector<Rational>& v,
                                  const std::vector<Rational>& w) {
    if (v.size() != w.size()) throw DimensionError("coordinate length mismatch");
    std::size_t n = v.size();
    std::vector<Rational> diff(n);
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
        diff[i] = w[i] - v[i];
        if (diff[i] != 0) nonzero = true;
    }
    if (!nonzero) throw DegenerateGeometryError("identical points have no direction");
    Integer lcm = 1;
    for (const auto& d : diff)
        lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(d));
    std::vector<Integer> ints(n);
    Integer g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Rational scaled = diff[i] * lcm;
        ints[i] = boost::multiprecision::numerator(scaled);
        g = boost::multiprecision::gcd(g, ints[i]);
    }
    std::vector<Rational> coeffs(n);
    for (std::size_t i = 0; i < n; ++i) coeffs[i] = Rational(ints[i] / g);
    return LinearForm(std::move(coeffs));
}

// LabeledGraph with mandatory coordinates and 2-faces: labels must be the
// primitive vectors along dst-src, every edge must lie in a 2-face when the
// vertex set is at least 2-dimensional, and each face must be a coplanar
// cycle.
struct PolytopeGraph {
    LabeledGraph graph;

    static PolytopeGraph adopt(LabeledGraph g) {
        if (!g.has_coords() && g.vertex_count() > 0)
            throw ValidationError("polytope graph needs coordinates");
        for (const Edge& e : g.edges())
            if (!(e.label == primitive_label(g.coords(e.src), g.coords(e.dst))))
                throw ValidationError("edge label is not primitive: " + e.src +
                                      " -- " + e.dst);
        if (affine_dimension(g) >= 2) {
            for (const Edge& e : g.edges()) {
                bool covered = false;
                for (const auto& face : g.two_faces()) {
                    bool s = false, d = false;
                    for (const std::string& id : face) {
                        if (id == e.src) s = true;
                        if (id == e.dst) d = true;
                    }
                    if (s && d) {
                        covered = true;
                        break;
                    }
                }
                if (!covered)
                    throw ValidationError("edge outside every 2-face: " + e.src +
                                          " -- " + e.dst);
            }
        }
        for (const auto& face : g.two_faces()) validate_face(g, face);
        return PolytopeGraph{std::move(g)};
    }

    static std::size_t affine_dimension(const LabeledGraph& g) {
        if (g.vertex_count() == 0) return 0;
        const auto& base = g.coords(g.vertex_ids()[0]);
        RationalMatrix m(g.vertex_count() - 1, g.nvars());
        for (std::size_t i = 1; i < g.vertex_count(); ++i) {
            const auto& p = g.coords(g.vertex_ids()[i]);
            for (std::size_t j = 0; j < g.nvars(); ++j)
                m.at(i - 1, j) = p[j] - base[j];
        }
        return rank(m);
    }

  private:
    static void validate_face(const LabeledGraph& g,
                              const std::vector<std::string>& face) {
        if (face.size() < 3) throw ValidationError("2-face needs at least 3 vertices");
        const auto& base = g.coords(face[0]);
        RationalMatrix m(face.size() - 1, g.nvars());
        for (std::size_t i = 1; i < face.size(); ++i) {
            const auto& p = g.coords(face[i]);
            for (std::size_t j = 0; j < g.nvars(); ++j) m.at(i - 1, j) = p[j] - base[j];
        }
        if (rank(m) != 2) throw ValidationError("2-face is not two-dimensional");
        // induced edges must form one cycle: |E| = |V|, all degrees 2, connected
        std::set<std::string> fv(face.begin(), face.end());
        LabeledGraph cyc = g.induced(fv);
        if (cyc.edge_count() != face.size())
            throw ValidationError("2-face edges do not form a cycle");
        for (const std::string& id : cyc.vertex_ids())
            if (cyc.incident(id).size() != 2)
                throw ValidationError("2-face vertex degree is not 2: " + id);
        if (!graph_connected(cyc)) throw ValidationError("2-face cycle is disconnected");
    }
};

inline PolytopeGraph hypercube_graph(std::size_t n) {
    if (n == 0) throw ValidationError("dimension must be at least 1");
    if (n > 16) throw ValidationError("dimension too large");
    auto id_of = [&](std::size_t bits) {
        std::string s(n, '0');
        for (std::size_t i = 0; i < n; ++i)
            if (bits & (std::size_t(1) << i)) s[i] = '1';
        return s;
    };
    std::vector<std::string> vertices;
    std::map<std::string, std::vector<Rational>> coords;
    for (std::size_t b = 0; b < (std::size_t(1) << n); ++b) {
        std::string id = id_of(b);
        std::vector<Rational> c(n);
        for (std::size_t i = 0; i < n; ++i)
            c[i] = (b >> i) & 1 ? Rational(1) : Rational(0);
        vertices.push_back(id);
        coords.emplace(std::move(id), std::move(c));
    }
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < (std::size_t(1) << n); ++b)
        for (std::size_t k = 0; k < n; ++k) {
            if ((b >> k) & 1) continue;
            std::vector<Rational> label(n, Rational(0));
            label[k] = 1;
            edges.push_back({id_of(b), id_of(b | (std::size_t(1) << k)),
                             LinearForm(std::move(label))});
        }
    std::vector<std::vector<std::string>> faces;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            // enumerate assignments of the fixed axes in binary order
            std::size_t free_mask = (std::size_t(1) << i) | (std::size_t(1) << j);
            std::vector<std::size_t> rest;
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && k != j) rest.push_back(k);
            for (std::size_t a = 0; a < (std::size_t(1) << rest.size()); ++a) {
                std::size_t base = 0;
                for (std::size_t r = 0; r < rest.size(); ++r)
                    if ((a >> r) & 1) base |= std::size_t(1) << rest[r];
                faces.push_back({id_of(base), id_of(base | (std::size_t(1) << i)),
                                 id_of(base | free_mask),
                                 id_of(base | (std::size_t(1) << j))});
            }
        }
    return PolytopeGraph::adopt(LabeledGraph::create(n, std::move(vertices),
                                                     std::move(edges), std::move(coords),
                                                     std::move(faces)));
}

inline PolytopeGraph simplex_graph(std::size_t n) {
    if (n == 0) throw ValidationError("dimension must be at least 1");
    std::vector<std::string> vertices;
    std::map<std::string, std::vector<Rational>> coords;
    for (std::size_t v = 0; v <= n; ++v) {
        std::string id = std::to_string(v);
        std::vector<Rational> c(n, Rational(0));
        if (v > 0) c[v - 1] = 1;
        vertices.push_back(id);
        coords.emplace(std::move(id), std::move(c));
    }
    std::vector<Edge> edges;
    for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = a + 1; b <= n; ++b)
            edges.push_back({vertices[a], vertices[b],
                             primitive_label(coords.at(vertices[a]),
                                             coords.at(vertices[b]))});
    std::vector<std::vector<std::string>> faces;
    for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = a + 1; b <= n; ++b)
            for (std::size_t c = b + 1; c <= n; ++c)
                faces.push_back({vertices[a], vertices[b], vertices[c]});
    return PolytopeGraph::adopt(LabeledGraph::create(n, std::move(vertices),
                                                     std::move(edges), std::move(coords),
                                                     std::move(faces)));
}

// Product polytope: vertex pairs "a|b" with concatenated coordinates,
// edges (edge x vertex) and (vertex x edge), 2-faces (face x vertex),
// (vertex x face) and (edge x edge).
inline PolytopeGraph product_graph(const PolytopeGraph& A, const PolytopeGraph& B) {
    const LabeledGraph& a = A.graph;
    const LabeledGraph& b = B.graph;
    std::size_t na = a.nvars(), nb = b.nvars();
    std::size_t n = na + nb;
    auto pid = [](const std::string& x, const std::string& y) { return x + "|" + y; };
    auto lift_a = [&](const LinearForm& f) {
        std::vector<Rational> c(n, Rational(0));
        for (std::size_t i = 0; i < na; ++i) c[i] = f.coeffs[i];
        return LinearForm(std::move(c));
    };
    auto lift_b = [&](const LinearForm& f) {
        std::vector<Rational> c(n, Rational(0));
        for (std::size_t i = 0; i < nb; ++i) c[na + i] = f.coeffs[i];
        return LinearForm(std::move(c));
    };

    std::vector<std::string> vertices;
    std::map<std::string, std::vector<Rational>> coords;
    for (const std::string& va : a.vertex_ids())
        for (const std::string& vb : b.vertex_ids()) {
            std::vector<Rational> c = a.coords(va);
            const auto& cb = b.coords(vb);
            c.insert(c.end(), cb.begin(), cb.end());
            vertices.push_back(pid(va, vb));
            coords.emplace(pid(va, vb), std::move(c));
        }

    std::vector<Edge> edges;
    for (const Edge& e : a.edges())
        for (const std::string& vb : b.vertex_ids())
            edges.push_back({pid(e.src, vb), pid(e.dst, vb), lift_a(e.label)});
    for (const std::string& va : a.vertex_ids())
        for (const Edge& e : b.edges())
            edges.push_back({pid(va, e.src), pid(va, e.dst), lift_b(e.label)});

    std::vector<std::vector<std::string>> faces;
    for (const auto& face : a.two_faces())
        for (const std::string& vb : b.vertex_ids()) {
            std::vector<std::string> f;
            for (const std::string& va : face) f.push_back(pid(va, vb));
            faces.push_back(std::move(f));
        }
    for (const std::string& va : a.vertex_ids())
        for (const auto& face : b.two_faces()) {
            std::vector<std::string> f;
            for (const std::string& vb : face) f.push_back(pid(va, vb));
            faces.push_back(std::move(f));
        }
    for (const Edge& ea : a.edges())
        for (const Edge& eb : b.edges())
            faces.push_back({pid(ea.src, eb.src), pid(ea.dst, eb.src),
                             pid(ea.dst, eb.dst), pid(ea.src, eb.dst)});

    return PolytopeGraph::adopt(LabeledGraph::create(n, std::move(vertices),
                                                     std::move(edges), std::move(coords),
                                                     std::move(faces)));
}

struct FaceCheck {
    bool connected = false;
    std::optional<std::size_t> failing_face;  // index into two_faces()
};

// Intersection with every 2-face must be connected inside that face;
// empty and singleton intersections pass.
inline FaceCheck two_face_connected(const PolytopeGraph& g,
                                    const std::set<std::string>& keep) {
    for (const std::string& id : keep) (void)g.graph.vertex_index(id);
    const auto& faces = g.graph.two_faces();
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        std::set<std::string> cut;
        for (const std::string& id : faces[fi])
            if (keep.count(id)) cut.insert(id);
        if (cut.size() <= 1) continue;
        // walk the face's kept part only through face edges
        std::set<std::string> face_set(faces[fi].begin(), faces[fi].end());
        std::deque<std::string> queue = {*cut.begin()};
        std::set<std::string> seen = {*cut.begin()};
        while (!queue.empty()) {
            std::string v = queue.front();
            queue.pop_front();
            for (const auto& ie : g.graph.incident(v)) {
                const std::string& w = g.graph.vertex_ids()[ie.neighbor];
                if (!face_set.count(w) || !cut.count(w) || seen.count(w)) continue;
                seen.insert(w);
                queue.push_back(w);
            }
        }
        if (seen.size() != cut.size()) return {false, fi};
    }
    return {true, std::nullopt};
}

// xi is generic for g when it separates all vertices (hence is non-constant
// on every edge).
inline void require_generic(const PolytopeGraph& g, const LinearFunctional& xi) {
    if (xi.coeffs.size() != g.graph.nvars())
        throw DimensionError("functional length mismatch");
    if (xi.is_zero()) throw PreconditionError("zero functional is not generic");
    std::set<Rational> values;
    for (const std::string& id : g.graph.vertex_ids())
        if (!values.insert(xi.evaluate(g.graph.coords(id))).second)
            throw PreconditionError("functional is not generic: repeated vertex value");
}

inline LabeledGraph sublevel_subgraph(const PolytopeGraph& g, const LinearFunctional& xi,
                                      const Rational& cutoff) {
    require_generic(g, xi);
    std::set<std::string> keep;
    for (const std::string& id : g.graph.vertex_ids())
        if (xi.evaluate(g.graph.coords(id)) <= cutoff) keep.insert(id);
    return g.graph.induced(keep);
}

// Complement of keep sorted by ascending xi value.
inline std::vector<std::string> sweep_order(const PolytopeGraph& g,
                                            const std::set<std::string>& keep,
                                            const LinearFunctional& xi) {
    require_generic(g, xi);
    std::vector<std::pair<Rational, std::string>> rest;
    for (const std::string& id : g.graph.vertex_ids())
        if (!keep.count(id)) rest.emplace_back(xi.evaluate(g.graph.coords(id)), id);
    std::sort(rest.begin(), rest.end());
    std::vector<std::string> order;
    order.reserve(rest.size());
    for (auto& [val, id] : rest) order.push_back(std::move(id));
    return order;
}

struct SweepStep {
    std::size_t prefix_size = 0;                 // vertices present at this check
    std::optional<std::string> next_vertex;      // vertex added after the check
    bool connected = false;
    std::optional<std::size_t> failing_face;
};

struct SweepReport {
    bool ok = false;
    std::vector<SweepStep> steps;
};

// Certificate: every prefix graph, starting from keep itself, must be
// 2-face connected; order must list exactly the missing vertices.
inline SweepReport sweep_check(const PolytopeGraph& g, const std::set<std::string>& keep,
                               const std::vector<std::string>& order) {
    std::set<std::string> missing;
    for (const std::string& id : g.graph.vertex_ids())
        if (!keep.count(id)) missing.insert(id);
    std::set<std::string> given(order.begin(), order.end());
    if (given.size() != order.size() || given != missing)
        throw PreconditionError("order is not a permutation of the missing vertices");
    for (const std::string& id : keep) (void)g.graph.vertex_index(id);

    SweepReport report;
    report.ok = true;
    std::set<std::string> cur = keep;
    for (std::size_t i = 0; i < order.size(); ++i) {
        FaceCheck fc = two_face_connected(g, cur);
        SweepStep step;
        step.prefix_size = cur.size();
        step.next_vertex = order[i];
        step.connected = fc.connected;
        step.failing_face = fc.failing_face;
        report.steps.push_back(step);
        if (!fc.connected) {
            report.ok = false;
            return report;
        }
        cur.insert(order[i]);
    }
    return report;
}

namespace detail {

// u lies on the affine plane through p0, p1, p2 (which must be honestly
// 2-dimensional)
inline bool on_plane(const std::vector<Rational>& p0, const std::vector<Rational>& p1,
                     const std::vector<Rational>& p2, const std::vector<Rational>& u) {
    std::size_t n = p0.size();
    RationalMatrix m(3, n);
    for (std::size_t j = 0; j < n; ++j) {
        m.at(0, j) = p1[j] - p0[j];
        m.at(1, j) = p2[j] - p0[j];
        m.at(2, j) = u[j] - p0[j];
    }
    return rank(m) <= 2;
}

} // namespace detail

// For every pair of sub-vertices adjacent to v there must be a path
// between them inside sub that stays on the affine plane through v and
// the pair.  Collinear triples are rejected as degenerate.
inline bool plane_path_condition(const LabeledGraph& g, const LabeledGraph& sub,
                                 const std::string& v) {
    if (!g.has_coords()) throw PreconditionError("coordinates required");
    if (!g.contains(v)) throw PreconditionError("vertex not in graph: " + v);
    if (sub.contains(v) || !is_induced_subgraph(g, sub) ||
        sub.vertex_count() + 1 != g.vertex_count())
        throw PreconditionError("subgraph must be the graph minus the vertex");

    std::vector<std::string> nbrs;
    for (const auto& ie : g.incident(v)) {
        const std::string& w = g.vertex_ids()[ie.neighbor];
        if (sub.contains(w)) nbrs.push_back(w);
    }
    const auto& pv = g.coords(v);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
        for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
            const auto& p1 = g.coords(nbrs[a]);
            const auto& p2 = g.coords(nbrs[b]);
            {
                RationalMatrix m(2, g.nvars());
                for (std::size_t j = 0; j < g.nvars(); ++j) {
                    m.at(0, j) = p1[j] - pv[j];
                    m.at(1, j) = p2[j] - pv[j];
                }
                if (rank(m) < 2)
                    throw DegenerateGeometryError(
                        "collinear neighbor pair at vertex " + v);
            }
            // BFS from nbrs[a] to nbrs[b] through on-plane vertices of sub
            std::set<std::string> seen = {nbrs[a]};
            std::deque<std::string> queue = {nbrs[a]};
            bool reached = false;
            while (!queue.empty() && !reached) {
                std::string cur = queue.front();
                queue.pop_front();
                for (const auto& ie : sub.incident(cur)) {
                    const std::string& w = sub.vertex_ids()[ie.neighbor];
                    if (seen.count(w)) continue;
                    if (!detail::on_plane(pv, p1, p2, sub.coords(w))) continue;
                    if (w == nbrs[b]) {
                        reached = true;
                        break;
                    }
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
            if (!reached) return false;
        }
    }
    return true;
}

} // namespace gkm
