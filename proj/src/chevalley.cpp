#include "g2/chevalley.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace g2 {

namespace {

// ---------------------------------------------------------------------------
// Integral form of the 7-dimensional module.
// ---------------------------------------------------------------------------

struct IMat {
    long long a[7][7] = {};
};

IMat imul(const IMat& x, const IMat& y) {
    IMat r;
    for (int i = 0; i < 7; ++i)
        for (int k = 0; k < 7; ++k) {
            if (!x.a[i][k]) continue;
            for (int j = 0; j < 7; ++j)
                if (y.a[k][j]) r.a[i][j] += x.a[i][k] * y.a[k][j];
        }
    return r;
}

IMat ibracket(const IMat& x, const IMat& y) {
    IMat xy = imul(x, y), yx = imul(y, x);
    IMat r;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) r.a[i][j] = xy.a[i][j] - yx.a[i][j];
    return r;
}

bool iis_zero(const IMat& m) {
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (m.a[i][j]) return false;
    return true;
}

bool iequal(const IMat& x, const IMat& y) {
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (x.a[i][j] != y.a[i][j]) return false;
    return true;
}

IMat idiv(const IMat& m, long long d) {
    IMat r;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            if (m.a[i][j] % d) throw std::logic_error("inexact division in integral form");
            r.a[i][j] = m.a[i][j] / d;
        }
    return r;
}

IMat ineg(const IMat& m) {
    IMat r;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) r.a[i][j] = -m.a[i][j];
    return r;
}

struct ZForm {
    std::array<Root, 7> weights;
    // slot k: 0..5 <-> e_1..e_6, 6..11 <-> e_-1..e_-6
    std::array<IMat, 12> e;
    std::array<IMat, 12> e2;  // e^2 / 2 (zero for long roots)
    struct Entry { int row, col; long long sign; };
    std::array<Entry, 12> unit;  // designated +-1 entry of each e
    std::map<std::pair<int, int>, long long> nconst;  // (idx,idx) -> N
};

int zslot(int index) { return index > 0 ? index - 1 : 5 - index; }

// string length parameter: largest k with s - k r a root
int string_down(const Root& r, const Root& s) {
    int k = 0;
    Root cur = s;
    while (true) {
        cur = cur + (-r);
        if (!is_root(cur)) break;
        ++k;
    }
    return k;
}

const ZForm& zform() {
    static const ZForm zf = [] {
        ZForm z;
        z.weights = {Root{2, 1}, Root{1, 1}, Root{1, 0}, Root{0, 0},
                     Root{-1, 0}, Root{-1, -1}, Root{-2, -1}};

        // simple generators along sl2-strings in the divided-power basis
        IMat E1, F1, E2, F2;
        E1.a[0][1] = 1; E1.a[2][3] = 2; E1.a[3][4] = 1; E1.a[5][6] = 1;
        F1.a[1][0] = 1; F1.a[3][2] = 1; F1.a[4][3] = 2; F1.a[6][5] = 1;
        E2.a[1][2] = 1; E2.a[4][5] = 1;
        F2.a[2][1] = 1; F2.a[5][4] = 1;

        auto coroot_diag = [&](const Root& r) {
            IMat h;
            for (int i = 0; i < 7; ++i) h.a[i][i] = pairing(z.weights[i], r);
            return h;
        };
        // fix the sign of a lowering candidate so that [e_r, f_r] = h_r
        auto sign_fix = [&](const IMat& e, IMat f, const Root& r) {
            IMat b = ibracket(e, f);
            IMat h = coroot_diag(r);
            if (iequal(b, h)) return f;
            f = ineg(f);
            b = ibracket(e, f);
            if (!iequal(b, h)) throw std::logic_error("coroot normalization failed");
            return f;
        };

        IMat E3 = ibracket(E1, E2);
        IMat F3 = sign_fix(E3, ibracket(F1, F2), Root{1, 1});
        IMat E4 = idiv(ibracket(E1, E3), 2);
        IMat F4 = sign_fix(E4, idiv(ibracket(F1, F3), 2), Root{2, 1});
        IMat E5 = idiv(ibracket(E1, E4), 3);
        IMat F5 = sign_fix(E5, idiv(ibracket(F1, F4), 3), Root{3, 1});
        IMat E6 = ibracket(E2, E5);
        IMat F6 = sign_fix(E6, ibracket(F2, F5), Root{3, 2});

        z.e[zslot(1)] = E1; z.e[zslot(2)] = E2; z.e[zslot(3)] = E3;
        z.e[zslot(4)] = E4; z.e[zslot(5)] = E5; z.e[zslot(6)] = E6;
        z.e[zslot(-1)] = F1; z.e[zslot(-2)] = F2; z.e[zslot(-3)] = F3;
        z.e[zslot(-4)] = F4; z.e[zslot(-5)] = F5; z.e[zslot(-6)] = F6;

        for (int idx : {1, 2, 3, 4, 5, 6, -1, -2, -3, -4, -5, -6}) {
            const Root r = root_of_index(idx);
            const IMat& e = z.e[zslot(idx)];
            // entries respect the weight grading
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j)
                    if (e.a[i][j] && !(z.weights[j] + r == z.weights[i]))
                        throw std::logic_error("weight-inconsistent entry");
            IMat sq = imul(e, e);
            if (is_long(r)) {
                if (!iis_zero(sq)) throw std::logic_error("long root square nonzero");
                z.e2[zslot(idx)] = IMat{};
            } else {
                z.e2[zslot(idx)] = idiv(sq, 2);
                if (!iis_zero(imul(sq, e)))
                    throw std::logic_error("short root cube nonzero");
            }
            // [e_r, f_r] = h_r
            if (!iequal(ibracket(z.e[zslot(idx)], z.e[zslot(-idx)]),
                        coroot_diag(r)))
                throw std::logic_error("coroot bracket failed");
            // designated unit entry
            bool found = false;
            for (int i = 0; i < 7 && !found; ++i)
                for (int j = 0; j < 7 && !found; ++j)
                    if (e.a[i][j] == 1 || e.a[i][j] == -1) {
                        z.unit[zslot(idx)] = {i, j, e.a[i][j]};
                        found = true;
                    }
            if (!found) throw std::logic_error("no unit entry for root element");
        }

        // structure constants from operator brackets
        for (int ci : {1, 2, 3, 4, 5, 6, -1, -2, -3, -4, -5, -6})
            for (int di : {1, 2, 3, 4, 5, 6, -1, -2, -3, -4, -5, -6}) {
                if (ci == di || ci == -di) continue;
                Root r = root_of_index(ci), s = root_of_index(di);
                IMat b = ibracket(z.e[zslot(ci)], z.e[zslot(di)]);
                if (!is_root(r + s)) {
                    if (!iis_zero(b)) throw std::logic_error("spurious bracket");
                    z.nconst[{ci, di}] = 0;
                    continue;
                }
                const IMat& target = z.e[zslot(root_index(r + s))];
                long long N = 0;
                for (int i = 0; i < 7 && !N; ++i)
                    for (int j = 0; j < 7 && !N; ++j)
                        if (target.a[i][j]) N = b.a[i][j] / target.a[i][j];
                IMat scaled;
                for (int i = 0; i < 7; ++i)
                    for (int j = 0; j < 7; ++j) scaled.a[i][j] = N * target.a[i][j];
                if (!iequal(b, scaled) || N == 0)
                    throw std::logic_error("bracket not proportional to root vector");
                long long expect = string_down(r, s) + 1;
                if (N != expect && N != -expect)
                    throw std::logic_error("structure constant magnitude");
                z.nconst[{ci, di}] = N;
            }
        return z;
    }();
    return zf;
}

// ---------------------------------------------------------------------------
// Bivariate integer polynomials, for extracting commutator coefficients.
// ---------------------------------------------------------------------------

struct ZPoly2 {
    std::map<std::pair<int, int>, long long> m;  // (deg t, deg u) -> coeff

    static ZPoly2 constant(long long c) {
        ZPoly2 p;
        if (c) p.m[{0, 0}] = c;
        return p;
    }
    static ZPoly2 monomial(long long c, int i, int j) {
        ZPoly2 p;
        if (c) p.m[{i, j}] = c;
        return p;
    }
    bool zero() const { return m.empty(); }
    ZPoly2 operator+(const ZPoly2& o) const {
        ZPoly2 r = *this;
        for (const auto& [k, v] : o.m) {
            r.m[k] += v;
            if (!r.m[k]) r.m.erase(k);
        }
        return r;
    }
    ZPoly2 operator-() const {
        ZPoly2 r = *this;
        for (auto& [k, v] : r.m) v = -v;
        return r;
    }
    ZPoly2 operator*(const ZPoly2& o) const {
        ZPoly2 r;
        for (const auto& [k1, v1] : m)
            for (const auto& [k2, v2] : o.m) {
                auto key = std::make_pair(k1.first + k2.first, k1.second + k2.second);
                r.m[key] += v1 * v2;
                if (!r.m[key]) r.m.erase(key);
            }
        return r;
    }
};

using PMat = std::array<std::array<ZPoly2, 7>, 7>;

PMat pidentity() {
    PMat m;
    for (int i = 0; i < 7; ++i) m[i][i] = ZPoly2::constant(1);
    return m;
}

PMat pmulm(const PMat& x, const PMat& y) {
    PMat r;
    for (int i = 0; i < 7; ++i)
        for (int k = 0; k < 7; ++k) {
            if (x[i][k].zero()) continue;
            for (int j = 0; j < 7; ++j)
                if (!y[k][j].zero()) r[i][j] = r[i][j] + x[i][k] * y[k][j];
        }
    return r;
}

// symbolic x_r(phi) = 1 + phi e_r + phi^2 e_r^(2)
PMat pxmat(int index, const ZPoly2& phi) {
    const ZForm& z = zform();
    PMat m = pidentity();
    const IMat& e1 = z.e[zslot(index)];
    const IMat& e2 = z.e2[zslot(index)];
    ZPoly2 phi2 = phi * phi;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            if (e1.a[i][j]) m[i][j] = m[i][j] + phi * ZPoly2::constant(e1.a[i][j]);
            if (e2.a[i][j]) m[i][j] = m[i][j] + phi2 * ZPoly2::constant(e2.a[i][j]);
        }
    return m;
}

bool pis_identity(const PMat& m) {
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            if (i == j) {
                ZPoly2 d = m[i][j] + ZPoly2::constant(-1);
                if (!d.zero()) return false;
            } else if (!m[i][j].zero()) {
                return false;
            }
        }
    return true;
}

// [x_s(u), x_r(t)] factored against the ascending (i+j, i) order
std::vector<CommTerm> extract_comm_terms(const Root& r, const Root& s) {
    ZPoly2 t = ZPoly2::monomial(1, 1, 0);
    ZPoly2 u = ZPoly2::monomial(1, 0, 1);
    int ri = root_index(r), si = root_index(s);
    PMat m = pmulm(pmulm(pxmat(si, -u), pxmat(ri, -t)), pmulm(pxmat(si, u), pxmat(ri, t)));

    // candidate combos ir + js that are roots, in extraction order
    std::vector<std::pair<int, int>> combos;
    for (int g = 2; g <= 10; ++g)
        for (int i = 1; i < g; ++i) {
            int j = g - i;
            if (is_root(r.scaled(i) + s.scaled(j))) combos.emplace_back(i, j);
        }

    const ZForm& z = zform();
    std::vector<CommTerm> terms;
    for (auto [i, j] : combos) {
        Root c = r.scaled(i) + s.scaled(j);
        int ci = root_index(c);
        const auto& ue = z.unit[zslot(ci)];
        ZPoly2 phi = m[ue.row][ue.col] * ZPoly2::constant(ue.sign);
        if (phi.zero()) continue;
        // phi must be a single monomial C (-1)^i t^i u^j
        if (phi.m.size() != 1 || phi.m.begin()->first != std::make_pair(i, j))
            throw std::logic_error("commutator parameter is not the expected monomial");
        long long C = phi.m.begin()->second * ((i % 2) ? -1 : 1);
        terms.push_back({i, j, c, C});
        m = pmulm(pxmat(ci, -phi), m);
    }
    if (!pis_identity(m)) throw std::logic_error("commutator residue not identity");
    return terms;
}

const std::vector<CommTerm>& comm_table(const Root& r, const Root& s) {
    static std::map<std::pair<int, int>, std::vector<CommTerm>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(root_index(r), root_index(s));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, extract_comm_terms(r, s)).first;
    return it->second;
}

}  // namespace

const std::vector<CommTerm>& commutator_coeffs(const Root& r, const Root& s) {
    if (!is_root(r) || !is_root(s)) throw std::invalid_argument("not a root");
    if (r == s || r == -s) throw std::invalid_argument("commutator needs r != +-s");
    return comm_table(r, s);
}

long long structure_constant(const Root& r, const Root& s) {
    if (r == s || r == -s) throw std::invalid_argument("structure constant needs r != +-s");
    return zform().nconst.at({root_index(r), root_index(s)});
}

// ---------------------------------------------------------------------------
// Word utilities
// ---------------------------------------------------------------------------

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        switch (it->kind) {
            case LetterKind::X: out.push_back({LetterKind::X, it->index, -it->t}); break;
            case LetterKind::N: out.push_back({LetterKind::N, it->index, -it->t}); break;
            case LetterKind::H: out.push_back({LetterKind::H, it->index, it->t.inv()}); break;
        }
    }
    return out;
}

std::string word_str(const Word& w) {
    std::ostringstream os;
    if (w.empty()) return "1";
    for (std::size_t k = 0; k < w.size(); ++k) {
        const auto& l = w[k];
        if (k) os << " ";
        os << (l.kind == LetterKind::X ? "x" : l.kind == LetterKind::N ? "n" : "h");
        os << l.index << "(" << l.t.str() << ")";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Rep
// ---------------------------------------------------------------------------

int Rep::slot(int index) { return zslot(index); }

const std::array<Root, 7>& Rep::weights() const { return zform().weights; }

std::array<std::array<long long, 7>, 7> Rep::integer_action(int index) {
    std::array<std::array<long long, 7>, 7> out{};
    const IMat& e = zform().e[zslot(index)];
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) out[i][j] = e.a[i][j];
    return out;
}

Rep::Rep(const Field& F) : F_(&F) {
    const ZForm& z = zform();
    pows_.reserve(12);
    for (int k = 0; k < 12; ++k) {
        Pow p{Mat(F, 7, 7), Mat(F, 7, 7)};
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                p.m1.at(i, j) = F.from_int(z.e[k].a[i][j]);
                p.m2.at(i, j) = F.from_int(z.e2[k].a[i][j]);
            }
        pows_.push_back(std::move(p));
    }
}

const Rep& Rep::get(const Field& F) {
    static std::map<const Field*, Rep*> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(&F);
    if (it == cache.end()) it = cache.emplace(&F, new Rep(F)).first;
    return *it->second;
}

Mat Rep::x(int index, const FieldElem& t) const {
    const Pow& p = pows_[slot(index)];
    Mat m = identity();
    if (t.is_zero()) return m;
    FieldElem t2 = t * t;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            if (!p.m1.at(i, j).is_zero()) m.at(i, j) += t * p.m1.at(i, j);
            if (!p.m2.at(i, j).is_zero()) m.at(i, j) += t2 * p.m2.at(i, j);
        }
    return m;
}

Mat Rep::n(int index, const FieldElem& t) const {
    if (t.is_zero()) throw std::domain_error("n_r(0) undefined");
    return x(index, t) * x(-index, -t.inv()) * x(index, t);
}

Mat Rep::h(int index, const FieldElem& t) const {
    if (t.is_zero()) throw std::domain_error("h_r(0) undefined");
    return n(index, t) * n(index, -F_->one());
}

Mat Rep::eval(const Word& w) const {
    Mat m = identity();
    for (const auto& l : w) {
        if (&l.t.field() != F_) throw std::invalid_argument("word letter from wrong field");
        switch (l.kind) {
            case LetterKind::X: m = m * x(l.index, l.t); break;
            case LetterKind::N: m = m * n(l.index, l.t); break;
            case LetterKind::H: m = m * h(l.index, l.t); break;
        }
    }
    return m;
}

bool Rep::is_upper_unipotent(const Mat& m) const {
    for (int i = 0; i < 7; ++i) {
        if (!m.at(i, i).is_one()) return false;
        for (int j = 0; j < i; ++j)
            if (!m.at(i, j).is_zero()) return false;
    }
    return true;
}

std::array<FieldElem, 6> Rep::factorize_unipotent(const Mat& m) const {
    if (!is_upper_unipotent(m)) throw std::domain_error("not in U");
    const ZForm& z = zform();
    Mat res = m;
    std::array<FieldElem, 6> out;
    for (int i = 1; i <= 6; ++i) {
        const auto& ue = z.unit[slot(i)];
        FieldElem t = res.at(ue.row, ue.col) * F_->from_int(ue.sign);
        out[i - 1] = t;
        if (!t.is_zero()) res = x(i, -t) * res;
    }
    if (!res.is_identity()) throw std::domain_error("not in U");
    return out;
}

std::array<FieldElem, 6> Rep::factorize_negative(const Mat& m) const {
    const ZForm& z = zform();
    Mat res = m;
    std::array<FieldElem, 6> out;
    for (int i = 1; i <= 6; ++i) {
        const auto& ue = z.unit[slot(-i)];
        FieldElem t = res.at(ue.row, ue.col) * F_->from_int(ue.sign);
        out[i - 1] = t;
        if (!t.is_zero()) res = x(-i, -t) * res;
    }
    if (!res.is_identity()) throw std::domain_error("not in U^-");
    return out;
}

std::pair<FieldElem, std::array<FieldElem, 6>> Rep::factorize_long_parabolic(
    const Mat& m) const {
    const ZForm& z = zform();
    const auto& ue = z.unit[slot(-2)];
    FieldElem s = m.at(ue.row, ue.col) * F_->from_int(ue.sign);
    Mat u = x(-2, -s) * m;
    return {s, factorize_unipotent(u)};
}

}  // namespace g2
