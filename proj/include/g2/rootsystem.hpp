#pragma once

#include <array>
#include <string>
#include <vector>

namespace g2 {

// The G2 root system in the simple-root basis: (a,b) stands for
// a*alpha1 + b*alpha2 with alpha1 short and alpha2 long.  Positive roots are
// indexed 1..6 in the frozen order
//   x1=(1,0) x2=(0,1) x3=(1,1) x4=(2,1) x5=(3,1) x6=(3,2),
// negatives by -1..-6.

struct Root {
    int a = 0, b = 0;
    bool operator==(const Root& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Root& o) const { return !(*this == o); }
    Root operator+(const Root& o) const { return {a + o.a, b + o.b}; }
    Root operator-() const { return {-a, -b}; }
    Root scaled(int k) const { return {k * a, k * b}; }
    int height() const { return a + b; }
    std::string str() const;
};

const std::array<Root, 6>& positive_roots();
const std::array<Root, 12>& all_roots();

bool is_root(const Root& r);
bool is_long(const Root& r);

// index in {+-1..+-6}; throws for non-roots
int root_index(const Root& r);
Root root_of_index(int i);

// Cartan pairing <beta, alpha^vee>
int pairing(const Root& beta, const Root& alpha);

// Weyl group as 2x2 integer matrices acting on (a,b) columns.
struct WeylElem {
    int m[2][2];
    Root apply(const Root& r) const {
        return {m[0][0] * r.a + m[0][1] * r.b, m[1][0] * r.a + m[1][1] * r.b};
    }
    bool operator==(const WeylElem& o) const;
};

// the twelve elements, closed under composition; generated by s1, s2
std::vector<WeylElem> weyl_group();
WeylElem simple_reflection(int i);  // i = 1 or 2
WeylElem longest_element();

// ---------------------------------------------------------------------------
// Height/shape/level combinatorics for the two maximal parabolics.
// J is the set of simple roots in the Levi: Long means J = {alpha2},
// Short means J = {alpha1}.
// ---------------------------------------------------------------------------

enum class Parabolic { Long, Short };

struct RootShapeData {
    Root root;
    int height;
    int level;
    Root shape;  // component of the root outside the Levi span
};

struct LevelModule {
    int level;
    std::vector<Root> roots;
    Root shape;
    int dim;
    int highweight;  // pairing of the unique maximal-height root with the
                     // Levi simple coroot
    Root highroot;
};

std::vector<RootShapeData> shape_data(Parabolic J);
std::vector<LevelModule> abs_filtration(Parabolic J);

// roots of Q(i) (level >= i) for the given parabolic
std::vector<Root> radical_roots(Parabolic J, int min_level);

// Closed maximal-rank subsystems from one extended-diagram step: the long A2
// and the orthogonal long/short A1 pair.
struct Subsystem {
    std::string name;
    std::vector<Root> positive;  // positive roots of the subsystem
};
std::vector<Subsystem> borel_de_siebenthal_subsystems();

}  // namespace g2
