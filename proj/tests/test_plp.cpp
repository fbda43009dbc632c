#include <catch2/catch_amalgamated.hpp>
#include <tkring/plp.hpp>

#include "fixtures.hpp"
#include "paper_tuples.hpp"

using namespace tkring;
using fixtures::vec;

namespace {

struct Ex6 {
    Fan fan = fixtures::ex6();
    CellularCertificate cert;
    GkmGraph graph;
    PlpContext ctx;

    Ex6() {
        cert = std::get<CellularCertificate>(certify_cellular(fan, vec({5, 1})));
        graph = build_gkm(fan, cert);
        ctx = make_plp_context(fan);
    }

    std::size_t cone_index(const Cone& c) const {
        auto it = std::find(fan.all_cones.begin(), fan.all_cones.end(), c);
        REQUIRE(it != fan.all_cones.end());
        return std::size_t(it - fan.all_cones.begin());
    }

    KClass paper(int i) const { return make_kclass(graph, fixtures::paper_tuple(i)); }
};

}  // namespace

TEST_CASE("restriction maps") {
    Ex6 fx;
    std::size_t zero_idx = fx.cone_index(cone_from_rays(2, {}));
    std::size_t sigma2_idx = fx.cone_index(fx.fan.max_cones[1]);
    std::size_t wall23_idx = fx.cone_index(cone_from_rays(2, {vec({2, 1})}));

    // identity on sigma = sigma'
    QuotientRingElem x =
        project_to_quotient(fixtures::terms({{{1, -2}, 1}, {{0, 0}, 2}}),
                            fx.ctx.cone_quotients[sigma2_idx]);
    REQUIRE(restriction_map(fx.fan, fx.ctx, sigma2_idx, sigma2_idx, x) == x);

    // the (2,3) wall kills 1 - e^{e1*-2e2*}
    QuotientRingElem f2_at_2 = project_to_quotient(
        euler(vec({1, -2})), fx.ctx.cone_quotients[sigma2_idx]);
    REQUIRE(restriction_map(fx.fan, fx.ctx, wall23_idx, sigma2_idx, f2_at_2).is_zero());

    // restriction to the zero cone is the augmentation
    QuotientRingElem at_zero = restriction_map(fx.fan, fx.ctx, zero_idx, sigma2_idx, x);
    REQUIRE(at_zero.lattice.quotient_rank() == 0);
    REQUIRE(at_zero.terms.size() == 1);
    REQUIRE(at_zero.terms.begin()->second == 3);

    REQUIRE_THROWS_AS(restriction_map(fx.fan, fx.ctx, sigma2_idx, zero_idx, at_zero),
                      std::invalid_argument);
}

TEST_CASE("validation of families") {
    Ex6 fx;
    // image of a member is valid
    PlpFunction good = from_kclass(fx.graph, fx.fan, fx.ctx, fx.paper(4));
    REQUIRE(validate_plp(fx.fan, fx.ctx, good).valid);

    // constant family
    PlpFunction constant =
        from_kclass(fx.graph, fx.fan, fx.ctx,
                    kclass_from_rep(fixtures::terms({{{3, 1}, 2}, {{0, 0}, -5}}), 5));
    REQUIRE(validate_plp(fx.fan, fx.ctx, constant).valid);

    // 1 on sigma_1 and 0 elsewhere fails exactly at sigma_1's facets
    PlpFunction bad;
    bad.components.resize(fx.fan.all_cones.size());
    for (std::size_t i = 0; i < fx.fan.all_cones.size(); ++i)
        bad.components[i] =
            project_to_quotient(laurent_zero(2), fx.ctx.cone_quotients[i]);
    std::size_t sigma1_idx = fx.cone_index(fx.fan.max_cones[0]);
    bad.components[sigma1_idx] =
        project_to_quotient(laurent_one(2), fx.ctx.cone_quotients[sigma1_idx]);
    PlpValidation v = validate_plp(fx.fan, fx.ctx, bad);
    REQUIRE_FALSE(v.valid);
    REQUIRE(v.violations.size() == 2);
    for (const auto& [face_idx, cone_idx] : v.violations) {
        REQUIRE(cone_idx == sigma1_idx);
        REQUIRE(fx.fan.all_cones[face_idx].dim == 1);
    }
}

TEST_CASE("images of members on distinguished cones") {
    Ex6 fx;
    // diag(1) maps to the constant-1 family
    PlpFunction ones = from_kclass(fx.graph, fx.fan, fx.ctx,
                                   kclass_from_rep(laurent_one(2), 5));
    for (const QuotientRingElem& c : ones.components) {
        REQUIRE(c.terms.size() == 1);
        REQUIRE(c.terms.begin()->first == Vec(c.lattice.quotient_rank()));
        REQUIRE(c.terms.begin()->second == 1);
    }

    // f_2 vanishes on the (2,3) wall
    PlpFunction f2 = from_kclass(fx.graph, fx.fan, fx.ctx, fx.paper(2));
    REQUIRE(f2.components[fx.cone_index(cone_from_rays(2, {vec({2, 1})}))].is_zero());

    // f_5 restricts to the common nonzero image on the (4,5) wall
    PlpFunction f5 = from_kclass(fx.graph, fx.fan, fx.ctx, fx.paper(5));
    const QuotientRingElem& on_wall45 =
        f5.components[fx.cone_index(cone_from_rays(2, {vec({-1, -1})}))];
    REQUIRE(on_wall45.terms.size() == 1);
    REQUIRE(on_wall45.terms.begin()->second == 1);
}

TEST_CASE("round trip and multiplicativity") {
    Ex6 fx;
    for (int i = 1; i <= 5; ++i) {
        KClass a = fx.paper(i);
        REQUIRE(to_kclass(fx.graph, fx.fan, fx.ctx,
                          from_kclass(fx.graph, fx.fan, fx.ctx, a)) == a);
    }
    for (int i = 1; i <= 5; ++i)
        for (int j = i; j <= 5; ++j) {
            KClass prod = kclass_mul(fx.paper(i), fx.paper(j));
            PlpFunction image = from_kclass(fx.graph, fx.fan, fx.ctx, prod);
            PlpFunction a = from_kclass(fx.graph, fx.fan, fx.ctx, fx.paper(i));
            PlpFunction b = from_kclass(fx.graph, fx.fan, fx.ctx, fx.paper(j));
            for (std::size_t idx = 0; idx < image.components.size(); ++idx)
                REQUIRE(image.components[idx] ==
                        qmul(a.components[idx], b.components[idx]));
            REQUIRE(to_kclass(fx.graph, fx.fan, fx.ctx, image) == prod);
        }
}

TEST_CASE("non-complete fans are refused") {
    Fan f = fixtures::ex36();
    auto cert = std::get<CellularCertificate>(certify_cellular(f, vec({5, 1})));
    PlpContext ctx = make_plp_context(f);
    GkmGraph fake;  // graph construction itself requires completeness
    fake.m = 3;
    fake.rank = 2;
    REQUIRE_THROWS_AS(
        from_kclass(fake, f, ctx, kclass_from_rep(laurent_one(2), 3)),
        std::domain_error);
}
