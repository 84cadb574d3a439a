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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace gkm;
using testutil::lf;

namespace {

bool satisfies(const CongruenceSystem& sys, const Polynomial& f) {
    for (std::size_t i = 0; i < sys.size(); ++i)
        if (!divides_linear(sys.moduli[i], f - sys.targets[i])) return false;
    return true;
}

Polynomial random_poly(std::size_t nvars, unsigned maxdeg, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    Polynomial p(nvars);
    for (unsigned d = 0; d <= maxdeg; ++d)
        for (const Monomial& m : monomials_of_degree(nvars, d))
            if (rng() % 2 == 0) p.add_term(m, coef(rng));
    return p;
}

} // namespace

TEST_CASE("system validation") {
    CongruenceSystem sys;
    CHECK_NOTHROW(sys.validate());
    CHECK_THROWS_AS(sys.nvars(), ValidationError);
    sys.moduli.push_back(lf({1, 0}));
    CHECK_THROWS_AS(sys.validate(), ValidationError);  // count mismatch
    sys.targets.push_back(Polynomial(2));
    CHECK_NOTHROW(sys.validate());
    sys.moduli.push_back(lf({0, 0}));
    sys.targets.push_back(Polynomial(2));
    CHECK_THROWS_AS(sys.validate(), ValidationError);  // zero modulus
}

TEST_CASE("two-variable worked examples") {
    Polynomial x = Polynomial::variable(2, 0);
    Polynomial y = Polynomial::variable(2, 1);

    // f = 0 mod x1, f = x1 mod x2 has the unique-degree-one answer x1
    CongruenceSystem a{{lf({1, 0}), lf({0, 1})}, {Polynomial(2), x}};
    ExtensionCertificate ca = crt_solve(a);
    REQUIRE(ca.solved());
    CHECK(*ca.solution == x);

    // f = x2 mod x1, f = x1 mod x2 is solved by x1 + x2
    CongruenceSystem b{{lf({1, 0}), lf({0, 1})}, {y, x}};
    ExtensionCertificate cb = crt_solve(b);
    REQUIRE(cb.solved());
    CHECK(*cb.solution == x + y);
    CHECK(satisfies(b, *cb.solution));
}

TEST_CASE("obstructed system yields the lexicographically first witness") {
    Polynomial x = Polynomial::variable(3, 0);
    Polynomial z = Polynomial::variable(3, 2);
    CongruenceSystem sys{{lf({1, 0, 0}), lf({0, 1, 0})}, {x, x + z}};
    ExtensionCertificate c = crt_solve(sys);
    CHECK(!c.solved());
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->i == 0);
    CHECK(c.witness->j == 1);
    CHECK(c.witness->difference == z);
    CHECK(c.witness->modulus_i == lf({1, 0, 0}));
    CHECK(c.witness->modulus_j == lf({0, 1, 0}));
    // the witness is checkable on its own
    CHECK(!ideal_member_linear({c.witness->modulus_i, c.witness->modulus_j},
                               c.witness->difference));

    // the bounded solver reports the same obstruction at any cap
    ExtensionCertificate cb = crt_solve_bounded(sys, 5u);
    CHECK(!cb.solved());
    REQUIRE(cb.witness.has_value());
    CHECK(cb.witness->difference == z);
}

TEST_CASE("witness moduli are sign-normalized") {
    Polynomial x = Polynomial::variable(2, 0);
    CongruenceSystem sys{{lf({-1, 0}), lf({0, -1})}, {Polynomial::constant(2, 2), x * x}};
    std::optional<PairWitness> w = compatible_witness(sys);
    REQUIRE(w.has_value());
    CHECK(w->modulus_i == lf({1, 0}));
    CHECK(w->modulus_j == lf({0, 1}));
    CHECK(w->difference == x * x - Polynomial::constant(2, 2));
}

TEST_CASE("pairwise compatibility") {
    Polynomial x = Polynomial::variable(2, 0);
    Polynomial y = Polynomial::variable(2, 1);
    CHECK(crt_compatible({{lf({1, 0}), lf({0, 1})}, {y, x}}));
    CHECK(!crt_compatible({{lf({1, 0}), lf({0, 1})}, {y, y + Polynomial::constant(2, 1)}}));
    CHECK(crt_compatible(CongruenceSystem{}));  // vacuous
}

TEST_CASE("constructive solver requires independent moduli") {
    Polynomial x = Polynomial::variable(2, 0);
    CongruenceSystem sys{{lf({1, 0}), lf({2, 0})}, {x, x}};
    CHECK_THROWS_AS(crt_solve(sys), IndependenceError);
    CHECK_NOTHROW(crt_solve_bounded(sys));
}

TEST_CASE("single congruence") {
    Polynomial y2 = Polynomial::variable(3, 1).pow(2);
    CongruenceSystem sys{{lf({1, 0, 0})}, {y2}};
    ExtensionCertificate c = crt_solve(sys);
    REQUIRE(c.solved());
    CHECK(satisfies(sys, *c.solution));
}

TEST_CASE("bounded solver degree caps are honest") {
    // f = x2^2 mod x1 needs degree two
    Polynomial y2 = Polynomial::variable(2, 1).pow(2);
    CongruenceSystem sys{{lf({1, 0})}, {y2}};
    ExtensionCertificate low = crt_solve_bounded(sys, 1u);
    CHECK(!low.solved());
    CHECK(!low.witness.has_value());  // pairwise fine, cap is the problem
    ExtensionCertificate high = crt_solve_bounded(sys, 2u);
    REQUIRE(high.solved());
    CHECK(satisfies(sys, *high.solution));
    // default cap = max target degree + slack suffices
    ExtensionCertificate def = crt_solve_bounded(sys);
    REQUIRE(def.solved());
    CHECK(satisfies(sys, *def.solution));
}

TEST_CASE("dependent moduli can be pairwise compatible yet unsolvable") {
    Polynomial x = Polynomial::variable(3, 0);
    CongruenceSystem sys{{lf({1, 0, 0}), lf({0, 1, 0}), lf({1, 1, 0})},
                         {Polynomial(3), Polynomial(3), x}};
    CHECK(crt_compatible(sys));
    ExtensionCertificate c = crt_solve_bounded(sys, 4u);
    CHECK(!c.solved());
    CHECK(!c.witness.has_value());
}

TEST_CASE("solution degree stays at the target degree for independent moduli") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        // compatible by construction: a_i = f + r_i * e_i
        std::vector<LinearForm> moduli = {lf({1, 0, 0}), lf({0, 1, 0}), lf({0, 0, 1})};
        Polynomial f = random_poly(3, 2, rng);
        CongruenceSystem sys;
        sys.moduli = moduli;
        for (const LinearForm& e : moduli)
            sys.targets.push_back(f + e.to_polynomial() * random_poly(3, 1, rng));
        ExtensionCertificate c = crt_solve(sys);
        REQUIRE(c.solved());
        CHECK(satisfies(sys, *c.solution));
        unsigned maxdeg = 0;
        for (const Polynomial& t : sys.targets) maxdeg = std::max(maxdeg, t.degree());
        CHECK(c.solution->degree() <= maxdeg);
    }
}

TEST_CASE("constructive and bounded solvers agree with pairwise compatibility") {
    std::mt19937 rng(9);
    std::vector<std::vector<LinearForm>> bases = {
        {lf({1, 0, 0}), lf({0, 1, 0})},
        {lf({1, 1, 0}), lf({0, 1, 1}), lf({1, 0, 1})},
        {lf({1, 2, 0}), lf({0, 1, -1})},
    };
    int solved_seen = 0, obstructed_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto& moduli = bases[rng() % bases.size()];
        CongruenceSystem sys;
        sys.moduli = moduli;
        bool make_compatible = trial % 2 == 0;
        Polynomial f = random_poly(3, 2, rng);
        for (const LinearForm& e : moduli) {
            sys.targets.push_back(make_compatible
                                      ? f + e.to_polynomial() * random_poly(3, 1, rng)
                                      : random_poly(3, 2, rng));
        }
        bool compatible = crt_compatible(sys);
        ExtensionCertificate fast = crt_solve(sys);
        ExtensionCertificate slow = crt_solve_bounded(sys);
        CHECK(fast.solved() == compatible);
        CHECK(slow.solved() == compatible);
        if (fast.solved()) {
            ++solved_seen;
            CHECK(satisfies(sys, *fast.solution));
            CHECK(satisfies(sys, *slow.solution));
        } else {
            ++obstructed_seen;
            REQUIRE(fast.witness.has_value());
            CHECK(!ideal_member_linear({fast.witness->modulus_i, fast.witness->modulus_j},
                                       fast.witness->difference));
            CHECK(fast.witness->difference ==
                  sys.targets[fast.witness->j] - sys.targets[fast.witness->i]);
        }
    }
    CHECK(solved_seen >= 20);
    CHECK(obstructed_seen >= 10);
}

TEST_CASE("solutions do not depend on the representative choice") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<LinearForm> moduli = {lf({1, 1, 0}), lf({0, 1, 1})};
        Polynomial f = random_poly(3, 2, rng);
        CongruenceSystem sys;
        sys.moduli = moduli;
        for (const LinearForm& e : moduli)
            sys.targets.push_back(f + e.to_polynomial() * random_poly(3, 1, rng));
        ExtensionCertificate lo = detail::crt_solve_impl(sys, false);
        ExtensionCertificate hi = detail::crt_solve_impl(sys, true);
        REQUIRE(lo.solved());
        REQUIRE(hi.solved());
        CHECK(satisfies(sys, *lo.solution));
        CHECK(satisfies(sys, *hi.solution));
    }
}

TEST_CASE("vertex systems read oriented labels and subgraph values") {
    LabeledGraph g = hypercube_graph(3).graph;
    LabeledGraph sub = g.induced({"000", "001", "011", "111", "110"});
    Polynomial x = Polynomial::variable(3, 0);
    Polynomial z = Polynomial::variable(3, 2);
    GradedClass cls;
    for (const std::string& id : sub.vertex_ids())
        cls.set(id, id == "110" ? x + z : x);

    CongruenceSystem sys = vertex_system(g, sub, cls, "010");
    REQUIRE(sys.size() == 3);
    // neighbors in stored edge order: 000, 110, 011
    CHECK(sys.targets[0] == x);
    CHECK(sys.targets[1] == x + z);
    CHECK(sys.targets[2] == x);
    for (const LinearForm& e : sys.moduli) CHECK(!e.is_zero());
}

TEST_CASE("extending one vertex of the cube") {
    LabeledGraph g = hypercube_graph(3).graph;
    LabeledGraph sub = g.induced({"000", "001", "011", "111", "110"});
    Polynomial x = Polynomial::variable(3, 0);
    Polynomial z = Polynomial::variable(3, 2);
    GradedClass cls;
    for (const std::string& id : sub.vertex_ids())
        cls.set(id, id == "110" ? x + z : x);

    ExtensionCertificate c = extend_vertex(g, sub, cls, "010");
    CHECK(!c.solved());
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->i == 0);
    CHECK(c.witness->j == 1);
    CHECK(c.witness->difference == z);
    CHECK(c.witness->modulus_i == lf({0, 1, 0}));
    CHECK(c.witness->modulus_j == lf({1, 0, 0}));

    // 100 sees the same conflict between 000 and 110; only 101 extends
    ExtensionCertificate c100 = extend_vertex(g, sub, cls, "100");
    CHECK(!c100.solved());
    REQUIRE(c100.witness.has_value());
    CHECK(c100.witness->difference == z);
    CHECK(c100.witness->modulus_i == lf({1, 0, 0}));
    CHECK(c100.witness->modulus_j == lf({0, 1, 0}));

    ExtensionCertificate c101 = extend_vertex(g, sub, cls, "101");
    REQUIRE(c101.solved());
    CHECK(*c101.solution == x);
}

TEST_CASE("extend_vertex precondition failures") {
    LabeledGraph g = hypercube_graph(3).graph;
    LabeledGraph sub = g.induced({"000", "001", "011", "111", "110"});
    GradedClass cls;
    for (const std::string& id : sub.vertex_ids()) cls.set(id, Polynomial(3));
    CHECK_THROWS_AS(extend_vertex(g, sub, cls, "zzz"), PreconditionError);
    CHECK_THROWS_AS(extend_vertex(g, sub, cls, "000"), PreconditionError);

    GradedClass notclass = cls;
    notclass.set("000", Polynomial::variable(3, 1));
    CHECK_THROWS_AS(extend_vertex(g, sub, notclass, "010"), PreconditionError);
}

TEST_CASE("sequence extension stops at the first obstruction") {
    LabeledGraph g = hypercube_graph(3).graph;
    LabeledGraph sub = g.induced({"000", "001", "011", "111", "110"});
    Polynomial x = Polynomial::variable(3, 0);
    Polynomial z = Polynomial::variable(3, 2);
    GradedClass cls;
    for (const std::string& id : sub.vertex_ids())
        cls.set(id, id == "110" ? x + z : x);

    SequenceExtension seq = extend_sequence(g, sub, cls, {"010", "100", "101"});
    CHECK(!seq.ok());
    REQUIRE(seq.failed_at.has_value());
    CHECK(*seq.failed_at == "010");
    REQUIRE(seq.certificate.has_value());
    CHECK(seq.certificate->witness.has_value());

    // a genuinely extendable class goes all the way
    GradedClass good = restrict_class(cohomology_basis(g, 1)[2], sub);
    SequenceExtension full = extend_sequence(g, sub, good, {"010", "100", "101"});
    CHECK(full.ok());
    REQUIRE(full.result.has_value());
    CHECK(is_class(g, *full.result));
    for (const std::string& id : sub.vertex_ids())
        CHECK(full.result->at(id) == good.at(id));

    CHECK_THROWS_AS(extend_sequence(g, sub, cls, {"010", "100"}), PreconditionError);
    CHECK_THROWS_AS(extend_sequence(g, sub, cls, {"010", "100", "100"}),
                    PreconditionError);
}

TEST_CASE("one-vertex pair check across low degrees") {
    LabeledGraph g = hypercube_graph(3).graph;
    CHECK(cr_pair_upto(g, g.minus("010"), 2));
    CHECK_THROWS_AS(cr_pair_upto(g, g.induced({"000", "001"}), 2), PreconditionError);
}
