#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace vcwb;
using namespace vcwb::fixtures;

TEST_CASE("FIX-TRIV is a V-category") {
    auto T = fix_triv(base_svec());
    CHECK(verify_vcategory(*T).passed());
    auto U = underlying(T);
    CHECK(U.dim(0, 0) == 1);
    CHECK(verify_underlying(U).passed());
    // endo algebra is the ground field: e * e = e for the basis element
    auto e = U.basis_elem(0, 0, 0);
    CHECK(U.compose(0, 0, 0, e, e) == e);
    CHECK(U.id(0) == e);
}

TEST_CASE("self-enrichment hom objects over sVec") {
    auto B = base_svec();
    auto one = obj(B, {1, 0}), Pi = obj(B, {0, 1});
    auto Vhat = self_enrichment(B, {one, Pi});
    CHECK(Vhat->hom_obj(1, 1) == one); // hom(Pi,Pi) = 1_V
    CHECK(Vhat->hom_obj(0, 1) == Pi);  // hom(1,Pi) = Pi
    CHECK(verify_vcategory(*Vhat).passed());
}

TEST_CASE("FIX-VHAT passes verify_vcategory") {
    auto Vhat = fix_vhat();
    CHECK(verify_vcategory(*Vhat).passed());
}

TEST_CASE("FIX-VHAT over Z/4 passes verify_vcategory") {
    auto Vhat = fix_vhat_z4();
    CHECK(verify_vcategory(*Vhat).passed());
}

TEST_CASE("corrupted composition block fails naming the triple") {
    auto Vhat = self_enrichment(base_svec(), objects_up_to(base_svec(), 2));
    auto bad = corrupt_comp(Vhat, 1, 1, 1);
    auto rep = verify_vcategory(*bad);
    CHECK_FALSE(rep.passed());
    const auto* f = rep.first_failure();
    REQUIRE(f != nullptr);
    CHECK(f->witness.find(Vhat->objects[1]) != std::string::npos);
}

TEST_CASE("underlying hom dimensions of V-hat match V") {
    auto Vhat = fix_vhat();
    auto window = window_of(*Vhat);
    auto B = Vhat->base;
    for (size_t i = 0; i < window.size(); ++i)
        for (size_t j = 0; j < window.size(); ++j) {
            size_t expect = 0; // dim V(u -> v) = sum_g u(g) v(g)
            for (auto& [g, m] : window[i].mult) expect += m * window[j].at(g);
            CHECK(Vhat->uhom_dim(i, j) == expect);
        }
    // no even maps into odd: hom(1, Pi) is 0-dimensional
    auto one = obj(B, {1, 0}), Pi = obj(B, {0, 1});
    auto small = self_enrichment(B, {one, Pi});
    CHECK(small->uhom_dim(0, 1) == 0);
}

TEST_CASE("identity functor and corrupted natural transformation") {
    auto Vhat = self_enrichment(base_svec(), objects_up_to(base_svec(), 2));
    auto F = identity_vfunctor(Vhat);
    CHECK(verify_vfunctor(F).passed());

    VNatTransform id_nat;
    id_nat.source = &F;
    id_nat.target = &F;
    for (size_t a = 0; a < Vhat->size(); ++a) id_nat.components.push_back(Vhat->identity_elem(a));
    CHECK(verify_vnat(id_nat).passed());

    // corrupt one component
    auto bad = id_nat;
    bad.components[2] = bad.components[2].scaled(Vhat->base->scalar(Rational(-1)));
    auto rep = verify_vnat(bad);
    CHECK_FALSE(rep.passed());
    CHECK(!rep.first_failure()->witness.empty());
}

TEST_CASE("corrupted functor component fails with witness") {
    auto Vhat = self_enrichment(base_svec(), objects_up_to(base_svec(), 2));
    auto F = identity_vfunctor(Vhat);
    F.mor[{1, 2}] = F.mor[{1, 2}].scaled(Vhat->base->scalar(Rational(2)));
    auto rep = verify_vfunctor(F);
    CHECK_FALSE(rep.passed());
}

TEST_CASE("representable functor on FIX-TRIV is constant at 1_V") {
    auto T = fix_triv(base_svec());
    auto R = representable_vfunctor(T, 0);
    CHECK(verify_vfunctor(R.functor).passed());
    CHECK(R.target->size() == 1);
    CHECK(window_of(*R.target)[0] == unit_object(T->base->group));
    CHECK(R.functor.component(0, 0).is_identity());
}

TEST_CASE("representable functors on V-hat windows verify and match underlying") {
    auto B = base_svec();
    auto Vhat = self_enrichment(B, objects_up_to(B, 2));
    for (size_t a = 0; a < Vhat->size(); ++a) {
        auto R = representable_vfunctor(Vhat, a);
        CHECK(verify_vfunctor(R.functor).passed());
        CHECK(check_representable_underlying_agrees(Vhat, a).passed());
    }
}

TEST_CASE("underlying is functorial on composites") {
    auto B = base_svec();
    auto Vhat = self_enrichment(B, objects_up_to(B, 2));
    auto window = window_of(*Vhat);
    // F = R^a into its window, G = identity of that window category
    auto R = representable_vfunctor(Vhat, 1);
    auto G = identity_vfunctor(R.target);
    auto FG = compose_vfunctors(R.functor, G);
    std::mt19937 rng(11);
    for (size_t b = 0; b < Vhat->size(); ++b)
        for (size_t c = 0; c < Vhat->size(); ++c) {
            MorSpace sp = uhom_space(*Vhat, b, c);
            for (size_t i = 0; i < sp.dim(); ++i) {
                auto f = sp.basis_elem(i);
                auto lhs = underlying_functor_apply(FG, b, c, f);
                auto rhs = underlying_functor_apply(
                    G, R.functor(b), R.functor(c), underlying_functor_apply(R.functor, b, c, f));
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("grassmann point is a V-category") {
    auto C = fix_grassmann();
    CHECK(verify_vcategory(*C).passed());
}
