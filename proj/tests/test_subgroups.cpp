#include <random>
#include <stdexcept>

#include "doctest.h"
#include "g2/finitegroup.hpp"
#include "g2/subgroups.hpp"

using namespace g2;

namespace {
GeneratorSet make(SubgroupName name, const Field& F) {
    SubgroupSpec s;
    s.name = name;
    s.field = &F;
    return subgroup_generators(s);
}

GeneratorSet make_xkl(const Field& F, const FieldElem& k, const FieldElem& l) {
    SubgroupSpec s;
    s.name = SubgroupName::Xkl;
    s.field = &F;
    s.k = k;
    s.l = l;
    return subgroup_generators(s);
}
}  // namespace

TEST_CASE("characteristic compatibility is enforced") {
    CHECK_THROWS_AS(make(SubgroupName::A2short, Field::get(2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(make(SubgroupName::Z1, Field::get(3, 1)), std::invalid_argument);
    CHECK_THROWS_AS(make(SubgroupName::Z2, Field::get(5, 1)), std::invalid_argument);
    CHECK_THROWS_AS(make(SubgroupName::IrredA1inA2, Field::get(2, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make(SubgroupName::PrincipalA1, Field::get(5, 1)),
                    std::invalid_argument);
    CHECK_NOTHROW(make(SubgroupName::A2short, Field::get(3, 1)));
    CHECK_NOTHROW(make(SubgroupName::PrincipalA1, Field::get(7, 1)));
}

TEST_CASE("xkl words over GF(4) with k=1, l=0") {
    const Field& F4 = Field::get(2, 2);
    auto g = make_xkl(F4, F4.one(), F4.zero());
    FieldElem t = F4.primitive();
    Word w = g.families[0].word(t);
    REQUIRE(w.size() == 3);
    CHECK(w[0].index == 2);
    CHECK(w[0].t == t * t);
    CHECK(w[1].index == 3);
    CHECK(w[1].t == t);
    CHECK(w[2].index == 6);
    CHECK(w[2].t == t);  // k^3 t + l t = t
    // X_{0,0} is flagged as the Levi A1
    auto triv = make_xkl(F4, F4.zero(), F4.zero());
    CHECK(triv.note == "equals Lbar0");
}

TEST_CASE("steinberg relations hold for every X_{k,l} over GF(2) and GF(4)") {
    for (auto [p, n] : {std::pair{2, 1}, {2, 2}}) {
        const Field& F = Field::get(p, n);
        for (const auto& k : F.elements())
            for (const auto& l : F.elements()) {
                auto g = make_xkl(F, k, l);
                auto rel = check_steinberg(g);
                CHECK(rel.all());
                CHECK(check_xkl_closed_forms(g));
            }
    }
}

TEST_CASE("steinberg relations hold for sampled X_{k,l} over GF(8)") {
    const Field& F8 = Field::get(2, 3);
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<std::uint64_t> dist(0, 7);
    for (int it = 0; it < 8; ++it) {
        auto g = make_xkl(F8, F8.element(dist(rng)), F8.element(dist(rng)));
        auto rel = check_steinberg(g, 1, 50);
        CHECK(rel.all());
        CHECK(check_xkl_closed_forms(g));
    }
}

TEST_CASE("xkl relations fail at odd characteristic") {
    const Field& F3 = Field::get(3, 1);
    auto g = make_xkl(F3, F3.one(), F3.zero());
    auto rel = check_steinberg(g);
    CHECK(!rel.all());
    CHECK(!rel.detail.empty());
    // the square in the x2 coordinate already breaks additivity at k = l = 0;
    // the honestly parametrized Levi A1 is fine at any characteristic
    CHECK(!check_steinberg(make_xkl(F3, F3.zero(), F3.zero())).additivity);
    CHECK(check_steinberg(make(SubgroupName::Lbar0, F3)).all());
}

TEST_CASE("steinberg relations for the named A1 families") {
    const Field& F4 = Field::get(2, 2);
    for (auto name : {SubgroupName::Lbar0, SubgroupName::Ltilde0, SubgroupName::Z1,
                      SubgroupName::Z2})
        CHECK(check_steinberg(make(name, F4)).all());
    const Field& F9 = Field::get(3, 2);
    for (auto name : {SubgroupName::Lbar0, SubgroupName::Ltilde0,
                      SubgroupName::IrredA1inA2})
        CHECK(check_steinberg(make(name, F9)).all());
    CHECK(check_steinberg(make(SubgroupName::PrincipalA1, Field::get(7, 1))).all());
    // twisted diagonal at p=3
    SubgroupSpec td;
    td.name = SubgroupName::TwistedDiag;
    td.field = &F9;
    td.r = 1;
    td.s = 0;
    CHECK(check_steinberg(subgroup_generators(td)).all());
}

TEST_CASE("Z2 generator words take the pinned form at p = 2") {
    const Field& F4 = Field::get(2, 2);
    auto g = make(SubgroupName::Z2, F4);
    const Rep& rep = Rep::get(F4);
    for (const auto& t : F4.nonzero_elements()) {
        // x+(t) = x2(t) x6(t^2)
        Word expect = {{LetterKind::X, 2, t}, {LetterKind::X, 6, t * t}};
        CHECK(g.families[0].mat(t) == rep.eval(expect));
        // the mirror runs through the other simple root of the A2
        Word expect_neg = {{LetterKind::X, -5, t}, {LetterKind::X, -6, t * t}};
        CHECK(g.families[1].mat(t) == rep.eval(expect_neg));
    }
}

TEST_CASE("irreducible A1 in A2 has the 2t middle coefficient") {
    const Field& F5 = Field::get(5, 1);
    SubgroupSpec s;
    s.name = SubgroupName::IrredA1inA2;
    s.field = &F5;
    auto g = subgroup_generators(s);
    const Rep& rep = Rep::get(F5);
    for (const auto& t : F5.nonzero_elements()) {
        auto params = rep.factorize_unipotent(g.families[0].mat(t));
        CHECK(params[1] == t);                     // x2 coordinate
        CHECK(params[4] == F5.from_int(2) * t);    // x5 coordinate
        CHECK(params[5] * params[5] == (t * t) * (t * t));  // corner +-t^2
        CHECK(params[0].is_zero());
        CHECK(params[2].is_zero());
        CHECK(params[3].is_zero());
    }
}

TEST_CASE("A1 x ~A1 factors commute elementwise") {
    const Field& F4 = Field::get(2, 2);
    auto g = make(SubgroupName::A1xA1short, F4);
    REQUIRE(g.families.size() == 4);
    for (const auto& t : F4.nonzero_elements())
        for (const auto& u : F4.nonzero_elements())
            for (int a : {0, 1})
                for (int b : {2, 3}) {
                    Mat x = g.families[a].mat(t), y = g.families[b].mat(u);
                    CHECK(x * y == y * x);
                }
}

TEST_CASE("subsystem group orders over small fields") {
    const Field& F2 = Field::get(2, 1);
    auto a2 = make(SubgroupName::A2, F2);
    CHECK(group_order(a2.small_generators(), 1000) == 168);  // SL3(2)
    auto pair = make(SubgroupName::A1xA1short, F2);
    CHECK(group_order(pair.small_generators(), 1000) == 36);  // SL2(2)^2
    const Field& F3 = Field::get(3, 1);
    auto a2s = make(SubgroupName::A2short, F3);
    CHECK(group_order(a2s.small_generators(), 10000) == 5616);  // SL3(3)
}

TEST_CASE("short root subgroups at p=2 generate beyond any A2 image") {
    const Field& F2 = Field::get(2, 1);
    auto g = subsystem_generators({Root{1, 0}, Root{1, 1}, Root{2, 1}}, F2, "short");
    CHECK(group_order(g.small_generators(), 13000) > 168);
}

TEST_CASE("frobenius twist re-parameterizes the family") {
    const Field& F4 = Field::get(2, 2);
    auto g = make(SubgroupName::Z1, F4);
    auto tw0 = frobenius_twist_gens(g, 0);
    auto tw2 = frobenius_twist_gens(g, 2);  // Frobenius order on GF(4)
    for (const auto& t : F4.elements()) {
        CHECK(tw0.families[0].mat(t) == g.families[0].mat(t));
        CHECK(tw2.families[0].mat(t) == g.families[0].mat(t));
    }
    auto tw1 = frobenius_twist_gens(g, 1);
    FieldElem z = F4.primitive();
    CHECK(tw1.families[0].mat(z) == g.families[0].mat(z * z));
    // the generated set of matrices is unchanged under twisting
    ElementStore orig(g.small_generators(), 100);
    ElementStore twisted(tw1.small_generators(), 100);
    CHECK(orig.order() == twisted.order());
    for (std::size_t i = 0; i < twisted.order(); ++i)
        CHECK(orig.contains(twisted.element(i)));
}

TEST_CASE("explicit conjugators onto the canonical X_{1,0} and X_{0,1}") {
    for (auto [p, n] : {std::pair{2, 2}, {2, 3}}) {
        const Field& F = Field::get(p, n);
        const Rep& rep = Rep::get(F);
        for (const auto& k : F.elements())
            for (const auto& l : F.elements()) {
                if (k.is_zero() && l.is_zero()) continue;
                if (k.is_zero() && F.order() == 4 && !l.is_one()) {
                    CHECK_THROWS_AS(conjugator_xkl(k, l), std::domain_error);
                    continue;
                }
                auto conj = conjugator_xkl(k, l);
                Mat w = rep.eval(conj.word);
                Mat winv = w.inverse();
                auto src = make_xkl(F, k, l);
                auto dst = make_xkl(F, conj.target.k, conj.target.l);
                for (const auto& t : F.elements()) {
                    CHECK(w * src.families[0].mat(t) * winv == dst.families[0].mat(t));
                    CHECK(w * src.families[1].mat(t) * winv == dst.families[1].mat(t));
                }
                // letter-exact on the positive family via factorization
                for (const auto& t : F.nonzero_elements()) {
                    auto params = rep.factorize_unipotent(
                        w * src.families[0].mat(t) * winv);
                    CHECK(params[1] == t * t);
                    CHECK(params[2] == conj.target.k * t);
                    CHECK(params[5] ==
                          conj.target.k * conj.target.k * conj.target.k * t +
                              conj.target.l * t);
                }
            }
    }
    // trivial branch
    const Field& F4 = Field::get(2, 2);
    auto conj = conjugator_xkl(F4.one(), F4.zero());
    CHECK(conj.target.k == F4.one());
    CHECK(conj.target.l == F4.zero());
    CHECK_THROWS_AS(conjugator_xkl(F4.zero(), F4.zero()), std::invalid_argument);
}

TEST_CASE("principal A1 words re-evaluate to the divided exponential") {
    const Field& F7 = Field::get(7, 1);
    auto g = make(SubgroupName::PrincipalA1, F7);
    const Rep& rep = Rep::get(F7);
    for (const auto& t : F7.nonzero_elements()) {
        CHECK(rep.eval(g.families[0].word(t)) == g.families[0].mat(t));
        CHECK(rep.eval(g.families[1].word(t)) == g.families[1].mat(t));
    }
}
