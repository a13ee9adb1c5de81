#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "g2/chevalley.hpp"
#include "g2/finitegroup.hpp"
#include "g2/subgroups.hpp"

using namespace g2;

TEST_CASE("enumeration of G2(2) and generator-order independence") {
    const Field& F2 = Field::get(2, 1);
    auto gens = g2_generators(F2);
    ElementStore store(gens, 20000);
    CHECK(store.order() == 12096);  // 2^6 (2^6-1)(2^2-1)

    std::vector<Mat> shuffled = gens;
    std::mt19937_64 rng(3);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    ElementStore store2(shuffled, 20000);
    CHECK(store2.order() == 12096);
    for (std::size_t i = 0; i < 100; ++i) CHECK(store2.contains(store.element(i * 7)));
}

TEST_CASE("cap exceeded aborts cleanly") {
    const Field& F2 = Field::get(2, 1);
    CHECK_THROWS_AS(ElementStore(g2_generators(F2), 1000), std::runtime_error);
}

TEST_CASE("element words reconstruct the element") {
    const Field& F2 = Field::get(2, 1);
    auto a2 = [&] {
        SubgroupSpec s;
        s.name = SubgroupName::A2;
        s.field = &F2;
        return subgroup_generators(s);
    }();
    auto gens = a2.small_generators();
    ElementStore store(gens, 1000);
    CHECK(store.order() == 168);
    for (std::size_t i = 0; i < store.order(); i += 13) {
        Mat m = Mat::identity(F2, 7);
        for (int gi : store.word_for(i)) m = m * gens[gi];
        CHECK(m == store.element(i));
    }
}

TEST_CASE("conjugacy search is symmetric and finds identity for equal groups") {
    const Field& F2 = Field::get(2, 1);
    ElementStore g2grp(g2_generators(F2), 20000);

    SubgroupSpec zs;
    zs.name = SubgroupName::Z1;
    zs.field = &F2;
    auto z1 = subgroup_generators(zs).small_generators();
    auto self = conjugacy_search(z1, z1, g2grp);
    CHECK(self.found);

    SubgroupSpec ls;
    ls.name = SubgroupName::Lbar0;
    ls.field = &F2;
    auto lbar = subgroup_generators(ls).small_generators();
    auto fwd = conjugacy_search(z1, lbar, g2grp);
    auto bwd = conjugacy_search(lbar, z1, g2grp);
    CHECK(fwd.found == bwd.found);
    if (fwd.found) {
        ElementStore z1grp(z1, 100);
        ElementStore lbargrp(lbar, 100);
        Mat c = fwd.conjugator, cinv = c.inverse();
        for (std::size_t i = 0; i < z1grp.order(); ++i)
            CHECK(lbargrp.contains(c * z1grp.element(i) * cinv));
    }
}

TEST_CASE("fixed spaces of generator sets") {
    const Field& F2 = Field::get(2, 1);
    CHECK(fixed_space(g2_generators(F2)).rows() == 1);
    for (int p : {3, 5, 7}) {
        const Field& F = Field::get(p, 1);
        CHECK(fixed_space(g2_generators(F)).rows() == 0);
    }
    const Field& F2b = Field::get(2, 1);
    std::vector<Mat> idonly = {Mat::identity(F2b, 7)};
    CHECK(fixed_space(idonly).rows() == 7);
}

TEST_CASE("element store canonical encoding round-trips") {
    const Field& F4 = Field::get(2, 2);
    const Rep& rep = Rep::get(F4);
    Mat m = rep.x(3, F4.primitive()) * rep.n(2, F4.one());
    CHECK(Mat::decode(F4, 7, 7, m.encode()) == m);
}
