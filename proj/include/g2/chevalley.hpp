#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "g2/gf.hpp"
#include "g2/linalg.hpp"
#include "g2/rootsystem.hpp"

namespace g2 {

// Exact 7x7 matrices for the root elements x_r(t), n_r(t), h_r(t) of G2
// acting on the seven-dimensional Weyl module.
//
// The module is built over the integers once: basis vectors sit at the
// weights (2,1),(1,1),(1,0),(0,0),(-1,0),(-1,-1),(-2,-1) in this order
// (descending height, so positive root elements are upper unitriangular),
// the simple generators act along sl2-strings in the divided-power basis,
// and the remaining root vectors come from exactly divisible brackets.
// Structure constants and the Chevalley commutator coefficients are *defined*
// by this integral form, which keeps every sign-sensitive identity in the
// project internally consistent.  x_r(t) is the truncated divided-power
// exponential 1 + t e_r + t^2 e_r^(2), with integer entries reduced mod p,
// so characteristic 2 and 3 need no division.

enum class LetterKind { X, N, H };

struct Letter {
    LetterKind kind;
    int index;  // signed root index, +-1..+-6
    FieldElem t;
};

using Word = std::vector<Letter>;

Word inverse_word(const Word& w);
std::string word_str(const Word& w);

// One term x_{i r + j s}(coeff * (-t)^i u^j) of the commutator identity
//   [x_s(u), x_r(t)] = prod terms,   [x,y] = x^-1 y^-1 x y,
// taken in ascending (i+j, i) order.
struct CommTerm {
    int i, j;
    Root root;
    long long coeff;
};

// r != +-s; both must be roots.
const std::vector<CommTerm>& commutator_coeffs(const Root& r, const Root& s);

// Structure constant N_{r,s} with [e_r, e_s] = N_{r,s} e_{r+s}; zero when
// r+s is not a root.  r != +-s.
long long structure_constant(const Root& r, const Root& s);

class Rep {
public:
    static const Rep& get(const Field& F);

    const Field& field() const { return *F_; }
    const std::array<Root, 7>& weights() const;

    Mat identity() const { return Mat::identity(*F_, 7); }
    Mat x(int index, const FieldElem& t) const;
    Mat x(const Root& r, const FieldElem& t) const { return x(root_index(r), t); }
    Mat n(int index, const FieldElem& t) const;  // x(t) x_-( -t^-1 ) x(t)
    Mat h(int index, const FieldElem& t) const;  // n(t) n(-1)
    Mat eval(const Word& w) const;

    // Unique parameters with m = x_1(t_1) ... x_6(t_6); throws
    // std::domain_error("not in U") otherwise.
    std::array<FieldElem, 6> factorize_unipotent(const Mat& m) const;
    // mirror image for m = x_-1(t_1) ... x_-6(t_6)
    std::array<FieldElem, 6> factorize_negative(const Mat& m) const;
    // m = x_-2(s) u with u upper unipotent: returns (s, parameters of u)
    std::pair<FieldElem, std::array<FieldElem, 6>> factorize_long_parabolic(
        const Mat& m) const;

    bool is_upper_unipotent(const Mat& m) const;

    // integer action matrix of e_r (entries as signed ints), for tests
    static std::array<std::array<long long, 7>, 7> integer_action(int index);

private:
    explicit Rep(const Field& F);
    const Field* F_;
    // per signed root index: first and second divided power of e_r over F
    struct Pow { Mat m1, m2; };
    std::vector<Pow> pows_;  // index 0..11 <-> +1..+6,-1..-6
    static int slot(int index);
};

}  // namespace g2
