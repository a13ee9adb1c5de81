#include "g2/rootsystem.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace g2 {

std::string Root::str() const {
    std::ostringstream os;
    os << "(" << a << "," << b << ")";
    return os.str();
}

const std::array<Root, 6>& positive_roots() {
    static const std::array<Root, 6> roots = {
        Root{1, 0}, Root{0, 1}, Root{1, 1}, Root{2, 1}, Root{3, 1}, Root{3, 2}};
    return roots;
}

const std::array<Root, 12>& all_roots() {
    static const std::array<Root, 12> roots = [] {
        std::array<Root, 12> r{};
        for (int i = 0; i < 6; ++i) {
            r[i] = positive_roots()[i];
            r[6 + i] = -positive_roots()[i];
        }
        return r;
    }();
    return roots;
}

bool is_root(const Root& r) {
    for (const auto& s : all_roots())
        if (s == r) return true;
    return false;
}

namespace {
// inner products from the Gram matrix (a1,a1)=2, (a2,a2)=6, (a1,a2)=-3
int inner(const Root& x, const Root& y) {
    return 2 * x.a * y.a + 6 * x.b * y.b - 3 * (x.a * y.b + x.b * y.a);
}
}  // namespace

bool is_long(const Root& r) { return inner(r, r) == 6; }

int root_index(const Root& r) {
    for (int i = 0; i < 6; ++i) {
        if (positive_roots()[i] == r) return i + 1;
        if (positive_roots()[i] == -r) return -(i + 1);
    }
    throw std::invalid_argument("not a G2 root: " + r.str());
}

Root root_of_index(int i) {
    if (i == 0 || i > 6 || i < -6) throw std::invalid_argument("root index out of range");
    return i > 0 ? positive_roots()[i - 1] : -positive_roots()[-i - 1];
}

int pairing(const Root& beta, const Root& alpha) {
    if (!is_root(alpha)) throw std::invalid_argument("pairing against a non-root");
    return 2 * inner(beta, alpha) / inner(alpha, alpha);
}

bool WeylElem::operator==(const WeylElem& o) const {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (m[i][j] != o.m[i][j]) return false;
    return true;
}

WeylElem simple_reflection(int i) {
    // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i on columns (a,b)
    if (i == 1) return WeylElem{{{-1, 3}, {0, 1}}};
    if (i == 2) return WeylElem{{{1, 0}, {1, -1}}};
    throw std::invalid_argument("simple reflection index");
}

namespace {
WeylElem compose(const WeylElem& x, const WeylElem& y) {
    WeylElem r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
    return r;
}
}  // namespace

std::vector<WeylElem> weyl_group() {
    static const std::vector<WeylElem> group = [] {
        std::vector<WeylElem> g;
        g.push_back(WeylElem{{{1, 0}, {0, 1}}});
        std::vector<WeylElem> gens = {simple_reflection(1), simple_reflection(2)};
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t i = 0; i < g.size(); ++i)
                for (const auto& s : gens) {
                    WeylElem w = compose(s, g[i]);
                    if (std::find(g.begin(), g.end(), w) == g.end()) {
                        g.push_back(w);
                        grew = true;
                    }
                }
        }
        return g;
    }();
    return group;
}

WeylElem longest_element() { return WeylElem{{{-1, 0}, {0, -1}}}; }

std::vector<RootShapeData> shape_data(Parabolic J) {
    // For J = {alpha2} (long Levi) the outside component of (a,b) is a*alpha1;
    // for J = {alpha1} it is b*alpha2.  Level is the outside coefficient.
    std::vector<RootShapeData> out;
    for (const auto& r : positive_roots()) {
        int level = (J == Parabolic::Long) ? r.a : r.b;
        if (level == 0) continue;  // root of the Levi
        Root shape = (J == Parabolic::Long) ? Root{r.a, 0} : Root{0, r.b};
        out.push_back({r, r.height(), level, shape});
    }
    return out;
}

std::vector<LevelModule> abs_filtration(Parabolic J) {
    Root levi_simple = (J == Parabolic::Long) ? Root{0, 1} : Root{1, 0};
    std::vector<LevelModule> levels;
    for (const auto& d : shape_data(J)) {
        auto it = std::find_if(levels.begin(), levels.end(),
                               [&](const LevelModule& L) { return L.level == d.level; });
        if (it == levels.end()) {
            levels.push_back({d.level, {d.root}, d.shape, 1, 0, d.root});
        } else {
            it->roots.push_back(d.root);
            ++it->dim;
        }
    }
    std::sort(levels.begin(), levels.end(),
              [](const LevelModule& x, const LevelModule& y) { return x.level < y.level; });
    for (auto& L : levels) {
        // unique maximal-height root carries the high weight
        const Root* top = &L.roots.front();
        int ties = 1;
        for (const auto& r : L.roots) {
            if (r.height() > top->height()) { top = &r; ties = 1; }
            else if (&r != top && r.height() == top->height()) ++ties;
        }
        if (ties != 1) throw std::logic_error("level module without unique top root");
        L.highroot = *top;
        L.highweight = pairing(*top, levi_simple);
    }
    return levels;
}

std::vector<Root> radical_roots(Parabolic J, int min_level) {
    std::vector<Root> out;
    for (const auto& d : shape_data(J))
        if (d.level >= min_level) out.push_back(d.root);
    return out;
}

std::vector<Subsystem> borel_de_siebenthal_subsystems() {
    // extended diagram nodes: alpha0 = -(3,2), alpha1, alpha2; removing one
    // interior node at a time and closing under addition
    auto close = [](std::vector<Root> base) {
        std::vector<Root> sys;
        for (const auto& r : base) sys.push_back(r);
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t i = 0; i < sys.size(); ++i)
                for (std::size_t j = 0; j < sys.size(); ++j) {
                    Root s = sys[i] + sys[j];
                    if (is_root(s) && std::find(sys.begin(), sys.end(), s) == sys.end()) {
                        sys.push_back(s);
                        grew = true;
                    }
                }
        }
        // keep positives only
        std::vector<Root> pos;
        for (const auto& r : sys)
            if (r.height() > 0 && std::find(pos.begin(), pos.end(), r) == pos.end())
                pos.push_back(r);
        std::sort(pos.begin(), pos.end(), [](const Root& x, const Root& y) {
            return x.height() < y.height();
        });
        return pos;
    };
    Root alpha0 = Root{-3, -2};
    std::vector<Subsystem> out;
    // drop alpha1: {-theta, alpha2} generates the long A2
    out.push_back({"A2", close({alpha0, Root{0, 1}, -alpha0, Root{0, -1}})});
    // drop alpha2: {-theta, alpha1}, an orthogonal pair
    out.push_back({"A1xA1", close({alpha0, Root{1, 0}, -alpha0, Root{-1, 0}})});
    return out;
}

}  // namespace g2
