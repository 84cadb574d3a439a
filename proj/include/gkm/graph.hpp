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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gkm/errors.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

struct Edge {
    std::string src, dst;
    LinearForm label;
};

// Finite graph with vertices named by strings and edges labeled by nonzero
// linear forms in n variables.  An edge (v, w, e) is the same datum as
// (w, v, -e); all operations are invariant under that flip.  Optional data:
// rational coordinates per vertex (all or none) and a list of 2-faces.
class LabeledGraph {
  public:
    struct IncidentEdge {
        std::size_t neighbor;   // vertex index
        std::size_t edge;       // edge index
        bool reversed;          // true when this vertex is the stored dst
    };

    static LabeledGraph create(std::size_t nvars,
                               std::vector<std::string> vertices,
                               std::vector<Edge> edges,
                               std::map<std::string, std::vector<Rational>> coords = {},
                               std::vector<std::vector<std::string>> two_faces = {}) {
        if (nvars == 0) throw ValidationError("graph needs at least one variable");
        LabeledGraph g;
        g.nvars_ = nvars;
        g.vertices_ = std::move(vertices);
        g.edges_ = std::move(edges);
        g.coords_ = std::move(coords);
        g.two_faces_ = std::move(two_faces);
        g.validate_and_index();
        return g;
    }

    std::size_t nvars() const { return nvars_; }
    const std::vector<std::string>& vertex_ids() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool contains(const std::string& id) const { return index_.count(id) != 0; }

    std::size_t vertex_index(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw ValidationError("unknown vertex: " + id);
        return it->second;
    }

    bool has_coords() const { return !coords_.empty(); }

    const std::vector<Rational>& coords(const std::string& id) const {
        auto it = coords_.find(id);
        if (it == coords_.end())
            throw ValidationError("vertex has no coordinates: " + id);
        return it->second;
    }

    const std::vector<std::vector<std::string>>& two_faces() const { return two_faces_; }

    const std::vector<IncidentEdge>& incident(std::size_t v) const {
        return adjacency_[v];
    }

    const std::vector<IncidentEdge>& incident(const std::string& id) const {
        return adjacency_[vertex_index(id)];
    }

    // label read as pointing away from the vertex this IncidentEdge was
    // looked up from
    LinearForm oriented_label(const IncidentEdge& ie) const {
        const LinearForm& l = edges_[ie.edge].label;
        return ie.reversed ? l.negated() : l;
    }

    bool has_edge(const std::string& a, const std::string& b) const {
        if (!contains(a) || !contains(b)) return false;
        for (const IncidentEdge& ie : incident(a))
            if (vertices_[ie.neighbor] == b) return true;
        return false;
    }

    // Induced subgraph on the given vertex set, preserving vertex and edge
    // order; coords and two-faces restricted (faces keep surviving vertices,
    // empty faces drop out).
    LabeledGraph induced(const std::set<std::string>& keep) const {
        for (const std::string& id : keep) (void)vertex_index(id);
        LabeledGraph g;
        g.nvars_ = nvars_;
        for (const std::string& id : vertices_)
            if (keep.count(id)) g.vertices_.push_back(id);
        for (const Edge& e : edges_)
            if (keep.count(e.src) && keep.count(e.dst)) g.edges_.push_back(e);
        for (const auto& [id, c] : coords_)
            if (keep.count(id)) g.coords_.emplace(id, c);
        for (const auto& face : two_faces_) {
            std::vector<std::string> f;
            for (const std::string& id : face)
                if (keep.count(id)) f.push_back(id);
            if (!f.empty()) g.two_faces_.push_back(std::move(f));
        }
        g.validate_and_index();
        return g;
    }

    LabeledGraph minus(const std::string& v) const {
        std::set<std::string> keep(vertices_.begin(), vertices_.end());
        if (!keep.erase(v)) throw ValidationError("unknown vertex: " + v);
        return induced(keep);
    }

    // Same graph with edge i stored in the opposite orientation.
    LabeledGraph flipped_edge(std::size_t i) const {
        LabeledGraph g = *this;
        Edge& e = g.edges_.at(i);
        std::swap(e.src, e.dst);
        e.label = e.label.negated();
        g.adjacency_.clear();
        g.index_.clear();
        g.validate_and_index();
        return g;
    }

    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
        auto edge_eq = [](const Edge& x, const Edge& y) {
            return x.src == y.src && x.dst == y.dst && x.label == y.label;
        };
        return a.nvars_ == b.nvars_ && a.vertices_ == b.vertices_ &&
               std::equal(a.edges_.begin(), a.edges_.end(), b.edges_.begin(),
                          b.edges_.end(), edge_eq) &&
               a.coords_ == b.coords_ && a.two_faces_ == b.two_faces_;
    }

  private:
    LabeledGraph() = default;

    void validate_and_index() {
        index_.clear();
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (!index_.emplace(vertices_[i], i).second)
                throw ValidationError("duplicate vertex id: " + vertices_[i]);

        std::set<std::pair<std::size_t, std::size_t>> seen;
        adjacency_.assign(vertices_.size(), {});
        for (std::size_t k = 0; k < edges_.size(); ++k) {
            const Edge& e = edges_[k];
            std::size_t s = vertex_index(e.src), d = vertex_index(e.dst);
            if (s == d) throw ValidationError("self loop at " + e.src);
            if (!seen.emplace(std::min(s, d), std::max(s, d)).second)
                throw ValidationError("duplicate edge " + e.src + " -- " + e.dst);
            if (e.label.nvars() != nvars_)
                throw ValidationError("edge label has wrong length on " + e.src +
                                      " -- " + e.dst);
            if (e.label.is_zero())
                throw ValidationError("zero edge label on " + e.src + " -- " + e.dst);
            adjacency_[s].push_back({d, k, false});
            adjacency_[d].push_back({s, k, true});
        }

        if (!coords_.empty()) {
            for (const auto& [id, c] : coords_) {
                if (!index_.count(id))
                    throw ValidationError("coordinates for unknown vertex: " + id);
                if (c.size() != nvars_)
                    throw ValidationError("coordinates of wrong length at " + id);
            }
            if (coords_.size() != vertices_.size())
                throw ValidationError("coordinates must cover all vertices or none");
            for (const Edge& e : edges_) check_collinear(e);
        }

        for (const auto& face : two_faces_) {
            std::set<std::string> distinct;
            for (const std::string& id : face) {
                if (!index_.count(id))
                    throw ValidationError("face lists unknown vertex: " + id);
                if (!distinct.insert(id).second)
                    throw ValidationError("face repeats vertex: " + id);
            }
            if (face.empty()) throw ValidationError("empty face");
        }
    }

    // edge label must be a nonzero rational multiple of dst - src
    void check_collinear(const Edge& e) const {
        const auto& a = coords_.at(e.src);
        const auto& b = coords_.at(e.dst);
        std::vector<Rational> diff(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) diff[i] = b[i] - a[i];
        std::size_t k = 0;
        while (k < nvars_ && diff[k] == 0) ++k;
        if (k == nvars_)
            throw ValidationError("edge endpoints share coordinates: " + e.src +
                                  " -- " + e.dst);
        Rational q = e.label.coeffs[k] / diff[k];
        if (q == 0)
            throw ValidationError("label not parallel to edge " + e.src + " -- " + e.dst);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e.label.coeffs[i] != q * diff[i])
                throw ValidationError("label not parallel to edge " + e.src + " -- " +
                                      e.dst);
    }

    std::size_t nvars_ = 0;
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::map<std::string, std::vector<Rational>> coords_;
    std::vector<std::vector<std::string>> two_faces_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<IncidentEdge>> adjacency_;
};

// Sub must have a subset of g's vertices and exactly the edges g induces
// on them, each matching a g edge up to orientation.
inline bool is_induced_subgraph(const LabeledGraph& g, const LabeledGraph& sub) {
    if (sub.nvars() != g.nvars()) return false;
    std::set<std::string> keep;
    for (const std::string& id : sub.vertex_ids()) {
        if (!g.contains(id)) return false;
        keep.insert(id);
    }
    std::size_t induced_edges = 0;
    for (const Edge& e : g.edges())
        if (keep.count(e.src) && keep.count(e.dst)) ++induced_edges;
    if (induced_edges != sub.edge_count()) return false;
    for (const Edge& e : sub.edges()) {
        bool found = false;
        for (const Edge& f : g.edges()) {
            if (f.src == e.src && f.dst == e.dst && f.label == e.label) found = true;
            if (f.src == e.dst && f.dst == e.src && f.label == e.label.negated())
                found = true;
            if (found) break;
        }
        if (!found) return false;
    }
    return true;
}

inline bool graph_connected(const LabeledGraph& g) {
    if (g.vertex_count() == 0) return true;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<std::size_t> stack = {0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& ie : g.incident(v)) {
            if (seen[ie.neighbor]) continue;
            seen[ie.neighbor] = true;
            ++visited;
            stack.push_back(ie.neighbor);
        }
    }
    return visited == g.vertex_count();
}

// Assignment of one polynomial per vertex.
struct GradedClass {
    std::map<std::string, Polynomial> values;

    bool contains(const std::string& id) const { return values.count(id) != 0; }

    const Polynomial& at(const std::string& id) const {
        auto it = values.find(id);
        if (it == values.end())
            throw ValidationError("class has no value at vertex: " + id);
        return it->second;
    }

    void set(const std::string& id, Polynomial p) {
        values.insert_or_assign(id, std::move(p));
    }

    friend bool operator==(const GradedClass& a, const GradedClass& b) {
        return a.values == b.values;
    }
};

} // namespace gkm
