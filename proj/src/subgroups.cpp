#include "g2/subgroups.hpp"

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace g2 {

std::string subgroup_name_str(SubgroupName n) {
    switch (n) {
        case SubgroupName::A2: return "A2";
        case SubgroupName::A2short: return "A2short";
        case SubgroupName::A1xA1short: return "A1xA1short";
        case SubgroupName::Lbar0: return "Lbar0";
        case SubgroupName::Ltilde0: return "Ltilde0";
        case SubgroupName::Z1: return "Z1";
        case SubgroupName::Z2: return "Z2";
        case SubgroupName::Xkl: return "Xkl";
        case SubgroupName::TwistedDiag: return "TwistedDiag";
        case SubgroupName::IrredA1inA2: return "IrredA1inA2";
        case SubgroupName::PrincipalA1: return "PrincipalA1";
    }
    return "?";
}

SubgroupName subgroup_name_parse(const std::string& s) {
    for (auto n : {SubgroupName::A2, SubgroupName::A2short, SubgroupName::A1xA1short,
                   SubgroupName::Lbar0, SubgroupName::Ltilde0, SubgroupName::Z1,
                   SubgroupName::Z2, SubgroupName::Xkl, SubgroupName::TwistedDiag,
                   SubgroupName::IrredA1inA2, SubgroupName::PrincipalA1})
        if (subgroup_name_str(n) == s) return n;
    throw std::invalid_argument("unknown subgroup name: " + s);
}

std::vector<std::pair<std::string, Mat>> GeneratorSet::sampled_matrices() const {
    std::vector<std::pair<std::string, Mat>> out;
    const Field& F = *spec.field;
    for (std::size_t fi = 0; fi < families.size(); ++fi)
        for (const auto& t : F.nonzero_elements()) {
            std::ostringstream label;
            label << families[fi].label << "@" << F.index_of(t);
            out.emplace_back(label.str(), families[fi].mat(t));
        }
    return out;
}

std::vector<Mat> GeneratorSet::small_generators() const {
    std::vector<Mat> out;
    const Field& F = *spec.field;
    std::vector<FieldElem> ts = {F.one()};
    if (F.order() > 2) ts.push_back(F.primitive());
    for (const auto& fam : families)
        for (const auto& t : ts) out.push_back(fam.mat(t));
    return out;
}

namespace {

OneParamFamily word_family(const Field& F, const std::string& label,
                           std::function<Word(const FieldElem&)> wfn) {
    const Rep* rep = &Rep::get(F);
    OneParamFamily fam;
    fam.label = label;
    fam.word = wfn;
    fam.mat = [rep, wfn](const FieldElem& t) { return rep->eval(wfn(t)); };
    return fam;
}

OneParamFamily root_family(const Field& F, const Root& r) {
    int idx = root_index(r);
    std::ostringstream label;
    label << "x" << idx;
    return word_family(F, label.str(), [idx](const FieldElem& t) {
        return Word{{LetterKind::X, idx, t}};
    });
}

void require_char(const SubgroupSpec& spec, bool ok, const std::string& why) {
    if (!ok)
        throw std::invalid_argument(subgroup_name_str(spec.name) +
                                    " incompatible with characteristic: " + why);
}

// Divided-power exponential family t -> exp(t N) where N is an integer
// combination of root vectors.  Each N^m / m! is taken exactly over the
// integers when possible, otherwise via the field inverse of m! (valid
// whenever p > m).
OneParamFamily exp_family(const Field& F, const std::string& label,
                          const std::vector<std::pair<long long, int>>& nilpotent,
                          bool positive) {
    long long N[7][7] = {};
    for (auto [c, idx] : nilpotent) {
        auto e = Rep::integer_action(idx);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) N[i][j] += c * e[i][j];
    }
    std::vector<Mat> terms;  // N^m / m! over F
    long long power[7][7] = {};
    for (int i = 0; i < 7; ++i) power[i][i] = 1;
    long long fact = 1;
    for (int m = 0; m <= 6; ++m) {
        if (m) {
            long long next[7][7] = {};
            for (int i = 0; i < 7; ++i)
                for (int k = 0; k < 7; ++k) {
                    if (!power[i][k]) continue;
                    for (int j = 0; j < 7; ++j) next[i][j] += power[i][k] * N[k][j];
                }
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j) power[i][j] = next[i][j];
            fact *= m;
        }
        bool exact = true;
        for (int i = 0; i < 7 && exact; ++i)
            for (int j = 0; j < 7 && exact; ++j)
                if (power[i][j] % fact) exact = false;
        Mat term(F, 7, 7);
        if (exact) {
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j) term.at(i, j) = F.from_int(power[i][j] / fact);
        } else {
            if (fact % F.p() == 0)
                throw std::logic_error("inexact divided power at small characteristic");
            FieldElem finv = F.from_int(fact).inv();
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j)
                    term.at(i, j) = F.from_int(power[i][j]) * finv;
        }
        terms.push_back(std::move(term));
    }
    const Rep* rep = &Rep::get(F);
    OneParamFamily fam;
    fam.label = label;
    const Field* Fp = &F;
    fam.mat = [terms, Fp](const FieldElem& t) {
        Mat m(*Fp, 7, 7);
        FieldElem tm = Fp->one();
        for (const auto& term : terms) {
            m = m + term.scaled(tm);
            tm *= t;
        }
        return m;
    };
    auto matfn = fam.mat;
    fam.word = [matfn, rep, positive](const FieldElem& t) {
        auto params = positive ? rep->factorize_unipotent(matfn(t))
                               : rep->factorize_negative(matfn(t));
        Word w;
        for (int i = 0; i < 6; ++i)
            if (!params[i].is_zero())
                w.push_back({LetterKind::X, positive ? i + 1 : -(i + 1), params[i]});
        return w;
    };
    return fam;
}

// Symmetric-square sl2 inside the long A2 with base ((0,1),(3,1)): the
// raising element e_{b1} + 2 e_{b2} and its triple partner 2 f_{b1} + f_{b2}
// reproduce the monomial-basis matrices with middle coefficient 2t.
OneParamFamily sym_square_family(const Field& F, bool positive) {
    if (positive) return exp_family(F, "x+", {{1, 2}, {2, 5}}, true);
    return exp_family(F, "x-", {{2, -2}, {1, -5}}, false);
}

// principal sl2: raising e_1 + e_2, lowering 6 f_1 + 10 f_2
OneParamFamily principal_family(const Field& F, bool positive) {
    if (positive) return exp_family(F, "x+", {{1, 1}, {1, 2}}, true);
    return exp_family(F, "x-", {{6, -1}, {10, -2}}, false);
}

}  // namespace

GeneratorSet subsystem_generators(const std::vector<Root>& positive, const Field& F,
                                  const std::string& name) {
    GeneratorSet g;
    g.spec.name = SubgroupName::A2;  // callers overwrite
    g.spec.field = &F;
    g.spec.k = F.zero();
    g.spec.l = F.zero();
    g.note = name;
    for (const auto& r : positive) {
        g.families.push_back(root_family(F, r));
        g.families.push_back(root_family(F, -r));
    }
    return g;
}

GeneratorSet subgroup_generators(const SubgroupSpec& spec_in) {
    SubgroupSpec spec = spec_in;
    const Field& F = *spec.field;
    if (!spec.k.initialized()) spec.k = F.zero();
    if (!spec.l.initialized()) spec.l = F.zero();
    if (&spec.k.field() != &F || &spec.l.field() != &F)
        throw std::invalid_argument("subgroup parameters from the wrong field");
    const int p = F.p();
    GeneratorSet g;
    g.spec = spec;

    switch (spec.name) {
        case SubgroupName::A2: {
            g = subsystem_generators({Root{0, 1}, Root{3, 1}, Root{3, 2}}, F, "A2");
            g.spec = spec;
            g.torus_pairs = {{0, 1}, {2, 3}};
            return g;
        }
        case SubgroupName::A2short: {
            require_char(spec, p == 3, "short root subgroups close up only at p = 3");
            g = subsystem_generators({Root{1, 0}, Root{1, 1}, Root{2, 1}}, F, "A2short");
            g.spec = spec;
            g.torus_pairs = {{0, 1}, {2, 3}};
            return g;
        }
        case SubgroupName::A1xA1short: {
            g = subsystem_generators({Root{3, 2}, Root{1, 0}}, F, "A1xA1short");
            g.spec = spec;
            g.torus_pairs = {{0, 1}, {2, 3}};
            return g;
        }
        case SubgroupName::Lbar0: {
            g.families.push_back(root_family(F, Root{0, 1}));
            g.families.push_back(root_family(F, Root{0, -1}));
            break;
        }
        case SubgroupName::Ltilde0: {
            g.families.push_back(root_family(F, Root{1, 0}));
            g.families.push_back(root_family(F, Root{-1, 0}));
            break;
        }
        case SubgroupName::Z1: {
            require_char(spec, p == 2, "Z1 is a p = 2 construction");
            g.families.push_back(word_family(F, "x+", [](const FieldElem& t) {
                return Word{{LetterKind::X, 6, t}, {LetterKind::X, 1, t}};
            }));
            g.families.push_back(word_family(F, "x-", [](const FieldElem& t) {
                return Word{{LetterKind::X, -6, t}, {LetterKind::X, -1, t}};
            }));
            break;
        }
        case SubgroupName::Z2: {
            require_char(spec, p == 2, "Z2 is a p = 2 construction");
            g.families.push_back(sym_square_family(F, true));
            g.families.push_back(sym_square_family(F, false));
            break;
        }
        case SubgroupName::Xkl: {
            FieldElem k = spec.k, l = spec.l;
            if (k.is_zero() && l.is_zero()) g.note = "equals Lbar0";
            g.families.push_back(word_family(F, "x+", [k, l](const FieldElem& t) {
                return Word{{LetterKind::X, 2, t * t},
                            {LetterKind::X, 3, k * t},
                            {LetterKind::X, 6, k * k * k * t + l * t}};
            }));
            g.families.push_back(word_family(F, "x-", [k, l](const FieldElem& t) {
                return Word{{LetterKind::X, -2, t * t},
                            {LetterKind::X, 1, k * t},
                            {LetterKind::X, 5, l * t}};
            }));
            break;
        }
        case SubgroupName::TwistedDiag: {
            std::int64_t pr = 1, ps = 1;
            for (int i = 0; i < spec.r; ++i) pr *= p;
            for (int i = 0; i < spec.s; ++i) ps *= p;
            g.families.push_back(word_family(F, "x+", [pr, ps](const FieldElem& t) {
                return Word{{LetterKind::X, 6, t.pow(pr)}, {LetterKind::X, 1, t.pow(ps)}};
            }));
            g.families.push_back(word_family(F, "x-", [pr, ps](const FieldElem& t) {
                return Word{{LetterKind::X, -6, t.pow(pr)},
                            {LetterKind::X, -1, t.pow(ps)}};
            }));
            break;
        }
        case SubgroupName::IrredA1inA2: {
            require_char(spec, p > 2, "the symmetric square needs 2 invertible");
            g.families.push_back(sym_square_family(F, true));
            g.families.push_back(sym_square_family(F, false));
            break;
        }
        case SubgroupName::PrincipalA1: {
            require_char(spec, p >= 7, "divided powers up to 6! need p >= 7");
            g.families.push_back(principal_family(F, true));
            g.families.push_back(principal_family(F, false));
            break;
        }
    }
    g.a1_type = true;
    g.torus_pairs = {{0, 1}};
    return g;
}

GeneratorSet frobenius_twist_gens(const GeneratorSet& g, int r) {
    GeneratorSet out = g;
    std::int64_t e = 1;
    for (int i = 0; i < r; ++i) e *= g.spec.field->p();
    out.families.clear();
    for (const auto& fam : g.families) {
        OneParamFamily f;
        f.label = fam.label;
        auto base_mat = fam.mat;
        auto base_word = fam.word;
        f.mat = [base_mat, e](const FieldElem& t) { return base_mat(t.pow(e)); };
        if (base_word)
            f.word = [base_word, e](const FieldElem& t) { return base_word(t.pow(e)); };
        out.families.push_back(std::move(f));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {
Mat family_n(const OneParamFamily& xp, const OneParamFamily& xm, const FieldElem& t) {
    return xp.mat(t) * xm.mat(-t.inv()) * xp.mat(t);
}
Mat family_h(const OneParamFamily& xp, const OneParamFamily& xm, const Field& F,
             const FieldElem& t) {
    return family_n(xp, xm, t) * family_n(xp, xm, -F.one());
}
}  // namespace

RelationReport check_steinberg(const GeneratorSet& a1, unsigned seed, int samples) {
    const Field& F = *a1.spec.field;
    const auto& xp = a1.families.at(0);
    const auto& xm = a1.families.at(1);
    RelationReport rep;

    std::vector<std::pair<FieldElem, FieldElem>> pairs;
    if (F.order() <= 8) {
        for (const auto& a : F.elements())
            for (const auto& b : F.elements()) pairs.emplace_back(a, b);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint64_t> dist(0, F.order() - 1);
        for (int i = 0; i < samples; ++i)
            pairs.emplace_back(F.element(dist(rng)), F.element(dist(rng)));
    }

    auto fail = [&](bool& flag, const std::string& what, const FieldElem& a,
                    const FieldElem& b) {
        flag = false;
        if (rep.detail.empty())
            rep.detail = what + " fails at (" + a.str() + "," + b.str() + ")";
    };

    for (const auto& [a, b] : pairs) {
        if (rep.additivity) {
            if (xp.mat(a) * xp.mat(b) != xp.mat(a + b)) fail(rep.additivity, "(i) x+", a, b);
            else if (xm.mat(a) * xm.mat(b) != xm.mat(a + b))
                fail(rep.additivity, "(i) x-", a, b);
        }
        if (rep.torus && !a.is_zero() && !b.is_zero()) {
            if (family_h(xp, xm, F, a) * family_h(xp, xm, F, b) !=
                family_h(xp, xm, F, a * b))
                fail(rep.torus, "(ii)", a, b);
        }
        if (rep.weyl && !a.is_zero()) {
            Mat n = family_n(xp, xm, a);
            if (n * xp.mat(b) * n.inverse() != xm.mat(-(a.inv() * a.inv()) * b))
                fail(rep.weyl, "(iii)", a, b);
        }
    }
    return rep;
}

bool check_xkl_closed_forms(const GeneratorSet& xkl, std::string* detail) {
    if (xkl.spec.name != SubgroupName::Xkl)
        throw std::invalid_argument("closed forms only apply to Xkl");
    const Field& F = *xkl.spec.field;
    const Rep& rep = Rep::get(F);
    const auto& xp = xkl.families[0];
    const auto& xm = xkl.families[1];
    FieldElem k = xkl.spec.k;
    for (const auto& t : F.nonzero_elements()) {
        Mat n = family_n(xp, xm, t);
        Mat expect_n = rep.n(2, t * t) * rep.x(4, k * k);
        if (n != expect_n) {
            if (detail) *detail = "n+(" + t.str() + ") != n2(t^2) x4(k^2)";
            return false;
        }
        Mat h = family_h(xp, xm, F, t);
        if (h != rep.h(2, t * t)) {
            if (detail) *detail = "h+(" + t.str() + ") != h2(t^2)";
            return false;
        }
    }
    return true;
}

Conjugator conjugator_xkl(const FieldElem& k, const FieldElem& l) {
    const Field& F = k.field();
    if (&l.field() != &F) throw std::invalid_argument("mixed-field parameters");
    if (k.is_zero() && l.is_zero())
        throw std::invalid_argument("X_{0,0} needs no conjugator");
    Conjugator out;
    out.target.name = SubgroupName::Xkl;
    out.target.field = &F;
    if (!k.is_zero()) {
        // x4(l/k) carries X_{k,l} to X_{k,0}, then h4(k)^-1 rescales to X_{1,0}
        out.word = {{LetterKind::H, 4, k.inv()}};
        if (!l.is_zero()) out.word.push_back({LetterKind::X, 4, l / k});
        out.target.k = F.one();
        out.target.l = F.zero();
    } else {
        FieldElem c;
        try {
            c = cube_root(l);
        } catch (const std::domain_error&) {
            throw std::domain_error(
                "no rational conjugator in this field; extend the field");
        }
        out.word = {{LetterKind::H, 4, c.inv()}};
        out.target.k = F.zero();
        out.target.l = F.one();
    }
    return out;
}

}  // namespace g2
