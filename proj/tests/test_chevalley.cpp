#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "g2/chevalley.hpp"

using namespace g2;

namespace {
std::vector<const Field*> sample_fields() {
    return {&Field::get(2, 1), &Field::get(2, 2), &Field::get(2, 3),
            &Field::get(3, 1), &Field::get(3, 2), &Field::get(5, 1),
            &Field::get(7, 1)};
}

FieldElem rand_elem(const Field& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, F.order() - 1);
    return F.element(dist(rng));
}
}  // namespace

TEST_CASE("weights of the 7-dimensional module") {
    const Rep& rep = Rep::get(Field::get(2, 1));
    auto w = rep.weights();
    std::vector<Root> expect = {Root{0, 0},  Root{1, 0},  Root{-1, 0}, Root{1, 1},
                                Root{-1, -1}, Root{2, 1}, Root{-2, -1}};
    for (const auto& mu : expect)
        CHECK(std::count(w.begin(), w.end(), mu) == 1);
    // descending height so that U is upper triangular
    for (int i = 0; i + 1 < 7; ++i) CHECK(w[i].height() > w[i + 1].height());
}

TEST_CASE("integer root vectors move weight spaces and are nilpotent") {
    const Rep& rep = Rep::get(Field::get(2, 1));
    auto w = rep.weights();
    for (int idx = 1; idx <= 6; ++idx)
        for (int sgn : {1, -1}) {
            auto e = Rep::integer_action(sgn * idx);
            Root r = root_of_index(sgn * idx);
            bool nonzero = false;
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j)
                    if (e[i][j]) {
                        nonzero = true;
                        CHECK(w[j] + r == w[i]);
                    }
            CHECK(nonzero);
        }
}

TEST_CASE("x matrices: value at zero, additivity, degree, determinant") {
    std::mt19937_64 rng(2024);
    for (const Field* F : sample_fields()) {
        const Rep& rep = Rep::get(*F);
        for (int idx : {1, 2, 3, 4, 5, 6, -1, -4, -6}) {
            CHECK(rep.x(idx, F->zero()) == rep.identity());
            for (int it = 0; it < 8; ++it) {
                FieldElem s = rand_elem(*F, rng), t = rand_elem(*F, rng);
                CHECK(rep.x(idx, s) * rep.x(idx, t) == rep.x(idx, s + t));
            }
            CHECK(rep.x(idx, F->one()).det() == F->one());
        }
    }
    // entries of x_1(t) are polynomials of degree <= 2 with the t^2 part nonzero
    const Field& F7 = Field::get(7, 1);
    const Rep& rep = Rep::get(F7);
    FieldElem t = F7.from_int(3);
    Mat m = rep.x(1, t);
    Mat lin = rep.x(1, F7.one());
    bool saw_quadratic = false;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            FieldElem linear_pred = t * (lin.at(i, j));
            if (m.at(i, j) != linear_pred) saw_quadratic = true;
        }
    CHECK(saw_quadratic);
    // e_r^7 = 0: x_r(t) - 1 is nilpotent, already implied by unitriangularity
    CHECK(rep.is_upper_unipotent(rep.x(3, t)));
}

TEST_CASE("torus elements act by t^<mu,alpha^vee> on weight vectors") {
    for (const Field* F : {&Field::get(2, 2), &Field::get(5, 1), &Field::get(3, 2)}) {
        const Rep& rep = Rep::get(*F);
        auto w = rep.weights();
        for (int idx = 1; idx <= 6; ++idx)
            for (const auto& t : F->nonzero_elements()) {
                Mat h = rep.h(idx, t);
                for (int i = 0; i < 7; ++i) {
                    for (int j = 0; j < 7; ++j) {
                        if (i == j)
                            CHECK(h.at(i, i) ==
                                  t.pow(pairing(w[i], root_of_index(idx))));
                        else
                            CHECK(h.at(i, j).is_zero());
                    }
                }
            }
    }
    // h_2(t) eigenvalue on the (1,0) weight vector is t^-1
    const Field& F4 = Field::get(2, 2);
    const Rep& rep = Rep::get(F4);
    auto w = rep.weights();
    int pos = int(std::find(w.begin(), w.end(), Root{1, 0}) - w.begin());
    FieldElem z = F4.primitive();
    CHECK(rep.h(2, z).at(pos, pos) == z.inv());
}

TEST_CASE("torus multiplicativity and weyl conjugation") {
    std::mt19937_64 rng(77);
    for (const Field* F : sample_fields()) {
        const Rep& rep = Rep::get(*F);
        for (int idx : {1, 2, 4, 6}) {
            for (int it = 0; it < 6; ++it) {
                FieldElem t = rand_elem(*F, rng), u = rand_elem(*F, rng);
                if (t.is_zero() || u.is_zero()) continue;
                CHECK(rep.h(idx, t) * rep.h(idx, u) == rep.h(idx, t * u));
                FieldElem t1 = rand_elem(*F, rng);
                Mat lhs = rep.n(idx, t) * rep.x(idx, t1) * rep.n(idx, t).inverse();
                Mat rhs = rep.x(-idx, -(t.inv() * t.inv()) * t1);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("commutator coefficient table examples") {
    auto& t1 = commutator_coeffs(Root{1, 1}, Root{2, 1});
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].root == Root{3, 2});
    CHECK((t1[0].coeff == 3 || t1[0].coeff == -3));
    CHECK(t1[0].i == 1);
    CHECK(t1[0].j == 1);

    auto& t2 = commutator_coeffs(Root{0, 1}, Root{3, 1});
    REQUIRE(t2.size() == 1);
    CHECK(t2[0].root == Root{3, 2});
    CHECK((t2[0].coeff == 1 || t2[0].coeff == -1));

    CHECK(commutator_coeffs(Root{0, 1}, Root{3, 2}).empty());
    CHECK_THROWS(commutator_coeffs(Root{1, 0}, Root{1, 0}));
    CHECK_THROWS(commutator_coeffs(Root{1, 0}, Root{-1, 0}));
}

TEST_CASE("commutator identity as matrices on every sample field") {
    std::mt19937_64 rng(4242);
    for (const Field* F : sample_fields()) {
        const Rep& rep = Rep::get(*F);
        for (const auto& r : positive_roots())
            for (const auto& s : positive_roots()) {
                if (r == s) continue;
                const auto& terms = commutator_coeffs(r, s);
                for (int it = 0; it < 6; ++it) {
                    FieldElem t = rand_elem(*F, rng), u = rand_elem(*F, rng);
                    Mat xs = rep.x(root_index(s), u), xr = rep.x(root_index(r), t);
                    Mat lhs = xs.inverse() * xr.inverse() * xs * xr;
                    Mat rhs = rep.identity();
                    for (const auto& term : terms) {
                        FieldElem param = F->from_int(term.coeff) *
                                          (-t).pow(term.i) * u.pow(term.j);
                        rhs = rhs * rep.x(root_index(term.root), param);
                    }
                    CHECK(lhs == rhs);
                }
            }
    }
}

TEST_CASE("structure constants are antisymmetric with string magnitudes") {
    for (const auto& r : all_roots())
        for (const auto& s : all_roots()) {
            if (r == s || r == -s) continue;
            long long n1 = structure_constant(r, s);
            long long n2 = structure_constant(s, r);
            CHECK(n1 == -n2);
            if (is_root(r + s)) CHECK(n1 != 0);
            else CHECK(n1 == 0);
        }
    // the (1,0),(0,1) pair has the full length-4 string through (0,1)
    CHECK(std::abs(structure_constant(Root{1, 0}, Root{0, 1})) == 1);
    CHECK(std::abs(structure_constant(Root{1, 0}, Root{1, 1})) == 2);
    CHECK(std::abs(structure_constant(Root{1, 0}, Root{2, 1})) == 3);
}

TEST_CASE("word evaluation") {
    const Field& F4 = Field::get(2, 2);
    const Rep& rep = Rep::get(F4);
    CHECK(rep.eval({}) == rep.identity());

    // x2(t^2) x-2(t^-2) x2(t^2) x2(1) x-2(1) x2(1) = h2(t^2) in characteristic 2
    for (const auto& t : F4.nonzero_elements()) {
        FieldElem t2 = t * t;
        Word w = {{LetterKind::X, 2, t2},        {LetterKind::X, -2, t2.inv()},
                  {LetterKind::X, 2, t2},        {LetterKind::X, 2, F4.one()},
                  {LetterKind::X, -2, F4.one()}, {LetterKind::X, 2, F4.one()}};
        CHECK(rep.eval(w) == rep.h(2, t2));
    }

    // x6 and x2 commute
    FieldElem a = F4.primitive(), b = F4.one();
    Word w1 = {{LetterKind::X, 6, a}, {LetterKind::X, 2, b}};
    Word w2 = {{LetterKind::X, 2, b}, {LetterKind::X, 6, a}};
    CHECK(rep.eval(w1) == rep.eval(w2));

    // inverse word
    Word w3 = {{LetterKind::X, 3, a}, {LetterKind::N, 2, b}, {LetterKind::H, 4, a}};
    CHECK(rep.eval(w3) * rep.eval(inverse_word(w3)) == rep.identity());
}

TEST_CASE("unipotent factorization") {
    std::mt19937_64 rng(31);
    for (const Field* F : {&Field::get(2, 2), &Field::get(3, 2), &Field::get(5, 1)}) {
        const Rep& rep = Rep::get(*F);
        // normal form round trip
        for (int it = 0; it < 10; ++it) {
            std::array<FieldElem, 6> ts;
            Mat m = rep.identity();
            for (int i = 1; i <= 6; ++i) {
                ts[i - 1] = rand_elem(*F, rng);
                m = m * rep.x(i, ts[i - 1]);
            }
            auto got = rep.factorize_unipotent(m);
            for (int i = 0; i < 6; ++i) CHECK(got[i] == ts[i]);
        }
        // identity factors to all zeros
        auto z = rep.factorize_unipotent(rep.identity());
        for (const auto& t : z) CHECK(t.is_zero());

        // out-of-order products pick up commutator corrections; the recovered
        // normal form must re-evaluate to the same matrix
        FieldElem a = rand_elem(*F, rng), b = rand_elem(*F, rng);
        Mat m = rep.x(3, b) * rep.x(1, a);
        auto ts = rep.factorize_unipotent(m);
        CHECK(ts[0] == a);
        CHECK(ts[2] == b);
        Mat re = rep.identity();
        for (int i = 1; i <= 6; ++i) re = re * rep.x(i, ts[i - 1]);
        CHECK(re == m);

        // simple ordered product
        Mat m2 = rep.x(1, a) * rep.x(3, b);
        auto ts2 = rep.factorize_unipotent(m2);
        CHECK(ts2[0] == a);
        CHECK(ts2[2] == b);
        CHECK(ts2[1].is_zero());
        CHECK(ts2[3].is_zero());

        // non-unipotent input is rejected
        CHECK_THROWS_AS(rep.factorize_unipotent(rep.x(-1, F->one())),
                        std::domain_error);
        CHECK_THROWS_AS(rep.factorize_unipotent(rep.h(1, F->primitive())),
                        std::domain_error);
    }
}

TEST_CASE("negative and parabolic factorizations") {
    const Field& F4 = Field::get(2, 2);
    const Rep& rep = Rep::get(F4);
    std::mt19937_64 rng(8);
    for (int it = 0; it < 6; ++it) {
        std::array<FieldElem, 6> ts;
        Mat m = rep.identity();
        for (int i = 1; i <= 6; ++i) {
            ts[i - 1] = rand_elem(F4, rng);
            m = m * rep.x(-i, ts[i - 1]);
        }
        auto got = rep.factorize_negative(m);
        for (int i = 0; i < 6; ++i) CHECK(got[i] == ts[i]);
    }
    FieldElem s = F4.primitive();
    Mat m = rep.x(-2, s) * rep.x(3, F4.one()) * rep.x(6, s);
    auto [s2, ts] = rep.factorize_long_parabolic(m);
    CHECK(s2 == s);
    CHECK(ts[2] == F4.one());
    CHECK(ts[5] == s);
}
