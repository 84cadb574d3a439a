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
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gkm/graph.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

// Permutation of {1..n} in one-line notation.
class Permutation {
  public:
    explicit Permutation(std::vector<int> one_line) : word_(std::move(one_line)) {
        std::vector<bool> seen(word_.size(), false);
        for (int v : word_) {
            if (v < 1 || v > static_cast<int>(word_.size()) || seen[v - 1])
                throw ValidationError("not a permutation");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(std::size_t n) {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    static Permutation longest(std::size_t n) {
        std::vector<int> w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(n - i);
        return Permutation(std::move(w));
    }

    // one-line digits, e.g. "231"; only n <= 9 is representable
    static Permutation parse(const std::string& text) {
        std::vector<int> w;
        for (char c : text) {
            if (c < '1' || c > '9') throw ValidationError("bad permutation: " + text);
            w.push_back(c - '0');
        }
        if (w.empty()) throw ValidationError("empty permutation");
        return Permutation(std::move(w));
    }

    std::size_t size() const { return word_.size(); }

    int operator()(int i) const { return word_[i - 1]; }

    const std::vector<int>& one_line() const { return word_; }

    std::string str() const {
        std::string s;
        for (int v : word_) s += static_cast<char>('0' + v);
        return s;
    }

    std::size_t length() const {
        std::size_t inv = 0;
        for (std::size_t i = 0; i < word_.size(); ++i)
            for (std::size_t j = i + 1; j < word_.size(); ++j)
                if (word_[i] > word_[j]) ++inv;
        return inv;
    }

    // t_{ab} . w, i.e. the values a and b swapped in one-line notation
    Permutation swap_values(int a, int b) const {
        std::vector<int> w = word_;
        for (int& v : w) {
            if (v == a)
                v = b;
            else if (v == b)
                v = a;
        }
        return Permutation(std::move(w));
    }

    friend bool operator==(const Permutation& x, const Permutation& y) {
        return x.word_ == y.word_;
    }

    friend bool operator<(const Permutation& x, const Permutation& y) {
        return x.word_ < y.word_;
    }

  private:
    std::vector<int> word_;
};

// Bruhat order: w covers-reachability through length-increasing
// transposition moves.
inline bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size()) throw DimensionError("permutation size mismatch");
    if (u == w) return true;
    std::size_t lw = w.length();
    if (u.length() > lw) return false;
    std::set<Permutation> seen = {u};
    std::deque<Permutation> queue = {u};
    int n = static_cast<int>(u.size());
    while (!queue.empty()) {
        Permutation cur = queue.front();
        queue.pop_front();
        std::size_t lc = cur.length();
        for (int a = 1; a <= n; ++a) {
            for (int b = a + 1; b <= n; ++b) {
                Permutation next = cur.swap_values(a, b);
                std::size_t ln = next.length();
                if (ln <= lc || ln > lw) continue;
                if (next == w) return true;
                if (seen.insert(next).second) queue.push_back(next);
            }
        }
    }
    return false;
}

struct BruhatGraph {
    std::size_t n = 0;
    LabeledGraph graph;
};

// Full Bruhat graph of the symmetric group S_n: vertices are one-line
// strings, an edge joins u and t_{ij} u, stored from lower to higher
// length with label x_i - x_j (i < j).
inline BruhatGraph gen_bruhat(std::size_t n) {
    if (n < 2 || n > 5) throw ValidationError("group size out of range (2..5)");
    std::vector<Permutation> perms;
    {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        do {
            perms.emplace_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
    }
    std::stable_sort(perms.begin(), perms.end(),
                     [](const Permutation& a, const Permutation& b) {
                         if (a.length() != b.length()) return a.length() < b.length();
                         return a.one_line() < b.one_line();
                     });
    std::vector<std::string> vertices;
    vertices.reserve(perms.size());
    for (const Permutation& p : perms) vertices.push_back(p.str());

    std::vector<Edge> edges;
    std::set<std::pair<std::string, std::string>> present;
    for (const Permutation& u : perms) {
        for (int i = 1; i <= static_cast<int>(n); ++i) {
            for (int j = i + 1; j <= static_cast<int>(n); ++j) {
                Permutation w = u.swap_values(i, j);
                if (w.length() <= u.length()) continue;
                if (!present.emplace(u.str(), w.str()).second) continue;
                std::vector<Rational> label(n, Rational(0));
                label[i - 1] = 1;
                label[j - 1] = -1;
                edges.push_back({u.str(), w.str(), LinearForm(std::move(label))});
            }
        }
    }
    std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
        std::size_t la = Permutation::parse(a.src).length();
        std::size_t lb = Permutation::parse(b.src).length();
        if (la != lb) return la < lb;
        if (a.src != b.src) return a.src < b.src;
        return a.dst < b.dst;
    });
    return BruhatGraph{n, LabeledGraph::create(n, std::move(vertices), std::move(edges))};
}

// Induced subgraph on the Bruhat interval [u, w]; u <= w required.
inline LabeledGraph interval_subgraph(const BruhatGraph& g, const Permutation& u,
                                      const Permutation& w) {
    if (u.size() != g.n || w.size() != g.n)
        throw DimensionError("permutation size mismatch");
    if (!bruhat_leq(u, w)) throw PreconditionError("empty interval: u is not below w");
    std::set<std::string> keep;
    for (const std::string& id : g.graph.vertex_ids()) {
        Permutation z = Permutation::parse(id);
        if (bruhat_leq(u, z) && bruhat_leq(z, w)) keep.insert(id);
    }
    return g.graph.induced(keep);
}

namespace detail {

inline bool in_span2(const LinearForm& a, const LinearForm& b, const LinearForm& c) {
    std::size_t n = a.nvars();
    RationalMatrix base(2, n), ext(3, n);
    for (std::size_t j = 0; j < n; ++j) {
        base.at(0, j) = a.coeffs[j];
        base.at(1, j) = b.coeffs[j];
        ext.at(0, j) = a.coeffs[j];
        ext.at(1, j) = b.coeffs[j];
        ext.at(2, j) = c.coeffs[j];
    }
    return rank(ext) == rank(base);
}

} // namespace detail

struct SpanStep {
    std::string added;
    bool ok = false;
    std::optional<std::pair<std::string, std::string>> failing_pair;
};

struct SpanReport {
    bool ok = false;
    std::vector<SpanStep> steps;
};

// Stepwise certificate for restriction surjectivity along a completion of
// sub to g: when vertex w_i arrives, every pair (u1, u2) of its already
// present neighbors must admit a third present vertex w' adjacent to both
// through labels inside span(label(u1, w_i), label(u2, w_i)).  Adjacency
// is taken regardless of stored orientation: spans and divisibility are
// sign-invariant, so the certificate stays sound.
inline SpanReport span_condition_check(const LabeledGraph& g, const LabeledGraph& sub,
                                       const std::vector<std::string>& order) {
    if (!is_induced_subgraph(g, sub))
        throw PreconditionError("not an induced subgraph");
    std::set<std::string> missing;
    for (const std::string& id : g.vertex_ids())
        if (!sub.contains(id)) missing.insert(id);
    std::set<std::string> given(order.begin(), order.end());
    if (given.size() != order.size() || given != missing)
        throw PreconditionError("order is not a permutation of the missing vertices");

    SpanReport report;
    report.ok = true;
    std::set<std::string> present(sub.vertex_ids().begin(), sub.vertex_ids().end());
    for (const std::string& wi : order) {
        SpanStep step;
        step.added = wi;
        step.ok = true;

        std::vector<std::pair<std::string, LinearForm>> nbrs;
        for (const auto& ie : g.incident(wi)) {
            const std::string& u = g.vertex_ids()[ie.neighbor];
            if (present.count(u)) nbrs.emplace_back(u, g.oriented_label(ie));
        }
        for (std::size_t a = 0; a < nbrs.size() && step.ok; ++a) {
            for (std::size_t b = a + 1; b < nbrs.size() && step.ok; ++b) {
                const auto& [u1, alpha1] = nbrs[a];
                const auto& [u2, alpha2] = nbrs[b];
                bool found = false;
                for (const std::string& wp : present) {
                    if (wp == u1 || wp == u2) continue;
                    std::optional<LinearForm> l1, l2;
                    for (const auto& ie : g.incident(wp)) {
                        const std::string& t = g.vertex_ids()[ie.neighbor];
                        if (t == u1) l1 = g.oriented_label(ie);
                        if (t == u2) l2 = g.oriented_label(ie);
                    }
                    if (!l1 || !l2) continue;
                    if (detail::in_span2(alpha1, alpha2, *l1) &&
                        detail::in_span2(alpha1, alpha2, *l2)) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    step.ok = false;
                    step.failing_pair = {u1, u2};
                }
            }
        }
        report.steps.push_back(step);
        if (!step.ok) {
            report.ok = false;
            return report;
        }
        present.insert(wi);
    }
    return report;
}

// Path variant: for each pair of sub-neighbors of v with labels e1, e2,
// some path inside sub must join them using only edges whose labels lie in
// span(e1, e2).
inline bool label_span_path_condition(const LabeledGraph& g, const LabeledGraph& sub,
                                      const std::string& v) {
    if (!g.contains(v)) throw PreconditionError("vertex not in graph: " + v);
    if (sub.contains(v) || !is_induced_subgraph(g, sub) ||
        sub.vertex_count() + 1 != g.vertex_count())
        throw PreconditionError("subgraph must be the graph minus the vertex");

    std::vector<std::pair<std::string, LinearForm>> nbrs;
    for (const auto& ie : g.incident(v)) {
        const std::string& w = g.vertex_ids()[ie.neighbor];
        if (sub.contains(w)) nbrs.emplace_back(w, g.oriented_label(ie));
    }
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
        for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
            const auto& [v1, e1] = nbrs[a];
            const auto& [v2, e2] = nbrs[b];
            std::set<std::string> seen = {v1};
            std::deque<std::string> queue = {v1};
            bool reached = false;
            while (!queue.empty() && !reached) {
                std::string cur = queue.front();
                queue.pop_front();
                for (const auto& ie : sub.incident(cur)) {
                    const std::string& w = sub.vertex_ids()[ie.neighbor];
                    if (seen.count(w)) continue;
                    if (!detail::in_span2(e1, e2, sub.edges()[ie.edge].label)) continue;
                    if (w == v2) {
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
