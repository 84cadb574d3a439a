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
#include <string>
#include <vector>

#include <json.hpp>

#include "gkm/cohomology.hpp"
#include "gkm/crt.hpp"
#include "gkm/geometry.hpp"
#include "gkm/graph.hpp"
#include "gkm/polynomial.hpp"

namespace gkm {

using Json = nlohmann::json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ValidationError(std::string("missing field: ") + key);
    return j[key];
}

inline std::string string_field(const Json& j) {
    if (!j.is_string()) throw ValidationError("expected a string");
    return j.get<std::string>();
}

} // namespace detail

inline Json rationals_to_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const Rational& r : v) out.push_back(rational_to_string(r));
    return out;
}

inline std::vector<Rational> rationals_from_json(const Json& j) {
    if (!j.is_array()) throw ValidationError("expected an array of rationals");
    std::vector<Rational> v;
    for (const Json& e : j) v.push_back(parse_rational(detail::string_field(e)));
    return v;
}

inline Json form_to_json(const LinearForm& f) { return rationals_to_json(f.coeffs); }

inline LinearForm form_from_json(const Json& j) {
    return LinearForm(rationals_from_json(j));
}

inline Json poly_to_json(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json term;
        term["exps"] = m;
        term["coef"] = rational_to_string(c);
        out.push_back(std::move(term));
    }
    return out;
}

inline Polynomial poly_from_json(const Json& j, std::size_t nvars) {
    if (!j.is_array()) throw ValidationError("expected an array of terms");
    Polynomial p(nvars);
    for (const Json& t : j) {
        const Json& exps = detail::field(t, "exps");
        if (!exps.is_array() || exps.size() != nvars)
            throw ValidationError("term exponents have wrong length");
        Monomial m;
        for (const Json& e : exps) {
            if (!e.is_number_unsigned()) throw ValidationError("bad exponent");
            m.push_back(e.get<unsigned>());
        }
        p.add_term(m, parse_rational(detail::string_field(detail::field(t, "coef"))));
    }
    return p;
}

inline Json graph_to_json(const LabeledGraph& g) {
    Json out;
    out["n"] = g.nvars();
    Json vertices = Json::array();
    for (const std::string& id : g.vertex_ids()) {
        Json v;
        v["id"] = id;
        if (g.has_coords()) v["coords"] = rationals_to_json(g.coords(id));
        vertices.push_back(std::move(v));
    }
    out["vertices"] = std::move(vertices);
    Json edges = Json::array();
    for (const Edge& e : g.edges()) {
        Json je;
        je["src"] = e.src;
        je["dst"] = e.dst;
        je["label"] = form_to_json(e.label);
        edges.push_back(std::move(je));
    }
    out["edges"] = std::move(edges);
    if (!g.two_faces().empty()) out["two_faces"] = g.two_faces();
    return out;
}

inline LabeledGraph graph_from_json(const Json& j) {
    const Json& jn = detail::field(j, "n");
    if (!jn.is_number_unsigned() || jn.get<std::size_t>() == 0)
        throw ValidationError("n must be a positive integer");
    std::size_t n = jn.get<std::size_t>();

    std::vector<std::string> vertices;
    std::map<std::string, std::vector<Rational>> coords;
    const Json& jv = detail::field(j, "vertices");
    if (!jv.is_array()) throw ValidationError("vertices must be an array");
    for (const Json& v : jv) {
        std::string id = detail::string_field(detail::field(v, "id"));
        if (v.contains("coords")) coords.emplace(id, rationals_from_json(v["coords"]));
        vertices.push_back(std::move(id));
    }

    std::vector<Edge> edges;
    const Json& je = detail::field(j, "edges");
    if (!je.is_array()) throw ValidationError("edges must be an array");
    for (const Json& e : je) {
        edges.push_back({detail::string_field(detail::field(e, "src")),
                         detail::string_field(detail::field(e, "dst")),
                         form_from_json(detail::field(e, "label"))});
    }

    std::vector<std::vector<std::string>> faces;
    if (j.contains("two_faces")) {
        const Json& jf = j["two_faces"];
        if (!jf.is_array()) throw ValidationError("two_faces must be an array");
        for (const Json& f : jf) {
            if (!f.is_array()) throw ValidationError("face must be an array");
            std::vector<std::string> face;
            for (const Json& id : f) face.push_back(detail::string_field(id));
            faces.push_back(std::move(face));
        }
    }
    return LabeledGraph::create(n, std::move(vertices), std::move(edges),
                                std::move(coords), std::move(faces));
}

inline Json class_to_json(const GradedClass& f) {
    Json values = Json::object();
    for (const auto& [id, p] : f.values) values[id] = poly_to_json(p);
    Json out;
    out["values"] = std::move(values);
    return out;
}

inline GradedClass class_from_json(const Json& j, std::size_t nvars) {
    const Json& values = detail::field(j, "values");
    if (!values.is_object()) throw ValidationError("values must be an object");
    GradedClass f;
    for (auto it = values.begin(); it != values.end(); ++it)
        f.set(it.key(), poly_from_json(it.value(), nvars));
    return f;
}

inline Json witness_to_json(const PairWitness& w) {
    Json out;
    out["i"] = w.i;
    out["j"] = w.j;
    out["difference"] = poly_to_json(w.difference);
    out["moduli"] = Json::array({form_to_json(w.modulus_i), form_to_json(w.modulus_j)});
    return out;
}

inline Json certificate_to_json(const ExtensionCertificate& c) {
    Json out;
    out["outcome"] = c.solved() ? "solved" : "obstructed";
    if (c.solution) out["solution"] = poly_to_json(*c.solution);
    if (c.witness) out["witness"] = witness_to_json(*c.witness);
    return out;
}

inline Json class_check_to_json(const ClassCheck& c) {
    Json out;
    out["is_class"] = c.ok;
    if (c.failing_edge) {
        Json e;
        e["src"] = c.failing_edge->src;
        e["dst"] = c.failing_edge->dst;
        e["label"] = form_to_json(c.failing_edge->label);
        out["failing_edge"] = std::move(e);
    }
    return out;
}

inline Json surjectivity_to_json(const SurjectivityReport& r) {
    Json out;
    out["max_degree"] = r.max_degree;
    out["surjective"] = r.all_surjective();
    Json degrees = Json::array();
    for (const DegreeReport& d : r.degrees) {
        Json jd;
        jd["degree"] = d.degree;
        jd["dim_full"] = d.dim_full;
        jd["dim_sub"] = d.dim_sub;
        jd["image_dim"] = d.image_dim;
        jd["surjective"] = d.surjective;
        degrees.push_back(std::move(jd));
    }
    out["degrees"] = std::move(degrees);
    return out;
}

inline Json sweep_to_json(const SweepReport& r) {
    Json out;
    out["ok"] = r.ok;
    Json steps = Json::array();
    for (const SweepStep& s : r.steps) {
        Json js;
        js["prefix_size"] = s.prefix_size;
        if (s.next_vertex) js["next_vertex"] = *s.next_vertex;
        js["connected"] = s.connected;
        if (s.failing_face) js["failing_face"] = *s.failing_face;
        steps.push_back(std::move(js));
    }
    out["steps"] = std::move(steps);
    return out;
}

inline Json gkm_report_to_json(const GkmReport& r) {
    Json out;
    out["gkm"] = r.gkm;
    if (r.offending_vertex) out["offending_vertex"] = *r.offending_vertex;
    out["regular"] = r.regular;
    if (r.regular) out["degree"] = r.degree;
    return out;
}

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

inline std::string to_dot(const LabeledGraph& g) {
    std::string out = "graph G {\n";
    for (const std::string& id : g.vertex_ids()) {
        out += "  \"" + dot_escape(id) + "\"";
        if (g.has_coords()) {
            std::string label = id + " (";
            const auto& c = g.coords(id);
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) label += ", ";
                label += rational_to_string(c[i]);
            }
            label += ")";
            out += " [label=\"" + dot_escape(label) + "\"]";
        }
        out += ";\n";
    }
    for (const Edge& e : g.edges()) {
        out += "  \"" + dot_escape(e.src) + "\" -- \"" + dot_escape(e.dst) +
               "\" [label=\"" + dot_escape(to_string(e.label)) + "\"];\n";
    }
    out += "}\n";
    return out;
}

} // namespace gkm
