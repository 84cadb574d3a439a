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

// Walks through the 3-cube obstruction: a degree-one class on a 5-vertex
// induced subgraph that admits no extension to the full cube, with the
// pairwise congruence witness printed along the way.

#include <iostream>

#include "gkm/gkm.hpp"

using namespace gkm;

int main() {
    PolytopeGraph cube = hypercube_graph(3);
    const LabeledGraph& g = cube.graph;
    std::cout << "3-cube: " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges, " << g.two_faces().size() << " square faces\n";

    LabeledGraph sub = g.induced({"000", "001", "011", "111", "110"});
    Polynomial x = Polynomial::variable(3, 0);
    Polynomial z = Polynomial::variable(3, 2);
    GradedClass cls;
    for (const std::string& id : sub.vertex_ids())
        cls.set(id, id == "110" ? x + z : x);

    std::cout << "subgraph vertices:";
    for (const std::string& id : sub.vertex_ids()) std::cout << " " << id;
    std::cout << "\nassignment: x everywhere except x + z at 110\n";
    std::cout << "is a class on the subgraph: "
              << (is_class(sub, cls) ? "yes" : "no") << "\n\n";

    for (const std::string v : {"010", "100", "101"}) {
        ExtensionCertificate cert = extend_vertex(g, sub, cls, v);
        std::cout << "extend to " << v << ": ";
        if (cert.outcome == ExtensionCertificate::Outcome::solved) {
            std::cout << "solved, value " << to_string(*cert.solution) << "\n";
        } else if (cert.witness) {
            const PairWitness& w = *cert.witness;
            std::cout << "obstructed, neighbors " << w.i << " and " << w.j
                      << " force " << to_string(w.difference)
                      << " into the ideal of " << to_string(w.modulus_i) << " and "
                      << to_string(w.modulus_j) << ", which fails\n";
        } else {
            std::cout << "obstructed with no pairwise witness\n";
        }
    }

    SurjectivityReport rep = surjective_upto(g, sub, 2);
    std::cout << "\ngraded restriction ranks:\n";
    for (const DegreeReport& d : rep.degrees)
        std::cout << "  degree " << d.degree << ": image " << d.image_dim << " of "
                  << d.dim_sub << (d.surjective ? " (onto)" : " (not onto)") << "\n";
    return 0;
}
