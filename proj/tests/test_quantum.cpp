#include <doctest.h>

#include <sstream>
#include <tuple>

#include "addcyc/json_io.hpp"
#include "addcyc/quantum.hpp"
#include "oracles.hpp"

using namespace addcyc;

TEST_SUITE("quantum") {
    TEST_CASE("zero code gives the trivial stabilizer parameters") {
        for (std::size_t n : {5u, 9u}) {
            auto cs = CosetStructure::get(n, 2);
            QuantumParams q = stabilizer_params(AdditiveCyclicCode::zero_code(cs));
            CHECK(q.n == n);
            CHECK(q.k == n);
            CHECK(q.d_exact == 1);  // the dual is everything; weight-1 vectors exist
        }
    }

    TEST_CASE("stabilizer construction rejects non-self-orthogonal codes") {
        auto cs = CosetStructure::get(7, 2);
        std::vector<ComponentForm> comps(cs->num_cosets(), ComponentForm::zero());
        comps[0] = ComponentForm::full();  // e = 2
        CHECK_THROWS_AS(stabilizer_params(AdditiveCyclicCode::from_components(cs, comps)),
                        std::invalid_argument);
    }

    TEST_CASE("stabilizer distances match a naive filter oracle") {
        auto gen = oracles::rng(71);
        auto cs = CosetStructure::get(5, 2);
        int checked = 0;
        for (int it = 0; it < 200 && checked < 10; ++it) {
            AdditiveCyclicCode C = oracles::random_component_code(gen, cs);
            OrthogonalityReport rep = classify_orthogonality(C);
            if (!rep.is_self_orthogonal || C.dimension() == 0 || C.dimension() == cs->n) continue;
            ++checked;
            QuantumParams q = stabilizer_params(C);
            AdditiveCyclicCode D = dual(C);
            auto expect = oracles::naive_min_weight_outside(D, C);
            REQUIRE(expect.has_value());
            CHECK(q.d_exact == expect);
            CHECK(q.k == cs->n - C.dimension());
        }
        CHECK(checked > 0);
    }

    TEST_CASE("purity flags") {
        // a self-dual code (k = 0) is pure by definition
        auto gen = oracles::rng(72);
        auto cs = CosetStructure::get(7, 2);
        for (int it = 0; it < 400; ++it) {
            AdditiveCyclicCode C = oracles::random_component_code(gen, cs);
            OrthogonalityReport rep = classify_orthogonality(C);
            if (!rep.is_self_dual) continue;
            QuantumParams q = stabilizer_params(C);
            CHECK(q.k == 0);
            CHECK(q.pure == true);
            break;
        }
    }

    TEST_CASE("nearly-self-orthogonal construction requires p = 2") {
        auto cs = CosetStructure::get(8, 3);
        CHECK_THROWS_AS(nearly_self_orthogonal_params(AdditiveCyclicCode::zero_code(cs)),
                        std::invalid_argument);
    }

    TEST_CASE("r = 0 branch reduces to the stabilizer construction") {
        auto gen = oracles::rng(73);
        auto cs = CosetStructure::get(7, 2);
        int checked = 0;
        for (int it = 0; it < 300 && checked < 10; ++it) {
            AdditiveCyclicCode C = oracles::random_component_code(gen, cs);
            if (!classify_orthogonality(C).is_self_orthogonal) continue;
            if (C.dimension() == cs->n) continue;
            ++checked;
            // the dual contains its own dual, so r = 0 there
            AdditiveCyclicCode D = dual(C);
            QuantumParams via_nso = nearly_self_orthogonal_params(D);
            QuantumParams via_stab = stabilizer_params(C);
            CHECK(via_nso.r == 0);
            CHECK(via_nso.n == via_stab.n);
            CHECK(via_nso.k == via_stab.k);
            // the nso distance is a lower bound for the stabilizer distance
            if (via_stab.d_exact) CHECK(via_nso.d_lower <= *via_stab.d_exact);
        }
        CHECK(checked > 0);
    }

    TEST_CASE("padding size is half the defect of the dual") {
        auto gen = oracles::rng(74);
        auto cs = CosetStructure::get(9, 2);
        for (int it = 0; it < 40; ++it) {
            AdditiveCyclicCode C = oracles::random_component_code(gen, cs);
            AdditiveCyclicCode D = dual(C);
            // r measures the defect of the input's dual, here C itself
            const std::size_t e_back = classify_orthogonality(C).e;
            if (D.dimension() + e_back / 2 < cs->n) continue;  // vacuous
            QuantumParams q = nearly_self_orthogonal_params(D);
            CHECK(2 * q.r == e_back);
            CHECK(q.n == cs->n + q.r);
            CHECK(q.k == D.dimension() + q.r - cs->n);
        }
    }

    TEST_CASE("single-application secondary constructions") {
        QuantumParams base;
        base.p = 2;
        base.n = 52;
        base.k = 24;
        base.d_exact = 8;
        base.d_lower = 8;
        auto out = secondary_constructions(base);
        REQUIRE(out.size() == 2);  // purity unknown: no puncturing
        CHECK(out[0].n == 53);
        CHECK(out[0].k == 24);
        CHECK(out[0].best_d() == 8);
        CHECK(out[1].n == 52);
        CHECK(out[1].k == 23);
        CHECK(out[1].best_d() == 8);

        QuantumParams trivial;
        trivial.n = 5;
        trivial.k = 0;
        trivial.d_lower = 1;
        CHECK(secondary_constructions(trivial).empty());

        QuantumParams pure5;
        pure5.n = 5;
        pure5.k = 1;
        pure5.d_exact = 3;
        pure5.d_lower = 3;
        pure5.pure = true;
        auto from_pure = secondary_constructions(pure5);
        bool has_punctured = false;
        for (const auto& q : from_pure)
            if (q.n == 4 && q.k == 2 && q.best_d() == 2 && q.pure == true) has_punctured = true;
        CHECK(has_punctured);
    }

    TEST_CASE("bounded closure from [[52,24,8]]") {
        QuantumParams base;
        base.p = 2;
        base.n = 52;
        base.k = 24;
        base.d_exact = 8;
        base.d_lower = 8;
        auto derived = secondary_closure(base, 1, 21);
        std::set<std::tuple<std::size_t, std::size_t, int>> expect = {
            {52, 21, 8}, {52, 22, 8}, {52, 23, 8}, {53, 21, 8},
            {53, 22, 8}, {53, 23, 8}, {53, 24, 8},
        };
        CHECK(derived == expect);
    }

    TEST_CASE("bundled self-orthogonal rows work through both construction routes") {
#ifdef ADDCYC_DATA_DIR
        // rows 3..5 have e = 0, so the stabilizer construction applies directly
        const std::vector<std::tuple<int, std::size_t, std::size_t>> rows = {
            {3, 45, 6}, {4, 45, 10}, {5, 51, 8}};
        for (const auto& [row, qn, qk] : rows) {
            std::ostringstream path;
            path << ADDCYC_DATA_DIR << "/table2/row0" << row << ".json";
            AdditiveCyclicCode C = code_from_descriptor(load_descriptor(path.str()));
            EnumOptions opts;
            opts.budget_log2 = 16;  // distances out of reach; parameters only
            QuantumParams via_stab = stabilizer_params(C, opts);
            CHECK(via_stab.n == qn);
            CHECK(via_stab.k == qk);
            QuantumParams via_nso = nearly_self_orthogonal_params(dual(C), opts);
            CHECK(via_nso.r == 0);
            CHECK(via_nso.n == qn);
            CHECK(via_nso.k == qk);
        }
#endif
    }

    TEST_CASE("defect of the construction is always even") {
        auto gen = oracles::rng(75);
        for (auto [n, p] : std::vector<std::pair<std::size_t, std::uint32_t>>{{7, 2}, {15, 2}}) {
            auto cs = CosetStructure::get(n, p);
            for (int it = 0; it < 30; ++it) {
                AdditiveCyclicCode C = oracles::random_component_code(gen, cs);
                OrthogonalityReport rep = classify_orthogonality(C);
                CHECK((2 * cs->n - C.dimension() - rep.dim_intersection) % 2 == 0);
            }
        }
    }
}
