#pragma once

#include <string>
#include <vector>

#include "g2/linalg.hpp"
#include "g2/rootsystem.hpp"
#include "g2/subgroups.hpp"

namespace g2 {

// Module analysis over finite fields: spinning, composition factors by a
// randomized chop with Norton's irreducibility certificate, socle series,
// torus-weight labels, and restriction signatures compared against the
// expected decompositions of the 7-dimensional module.

struct ModuleRep {
    const Field* F = nullptr;
    int dim = 0;
    int families = 0;  // generator layout: family-major, then t over F^*
    std::vector<Mat> gens;

    // generator for family fi at parameter t (t != 0)
    const Mat& gen_at(int fi, const FieldElem& t) const;
};

// gens laid out to match GeneratorSet::sampled_matrices()
ModuleRep restriction_module(const GeneratorSet& g);

// Conjugation action of the Levi A1 on Q(level)/Q(level+1), basis the roots
// of that level in index order; generator layout matches the Levi A1
// generator set (x+ family then x- family).
ModuleRep level_module(Parabolic J, int level, const Field& F);

RowSpace spin(const std::vector<Vec>& seeds, const ModuleRep& m);

struct Factor {
    ModuleRep rep;
    int dim = 0;
};

// Jordan-Hoelder factors, each certified irreducible; deterministic given
// the seed.  Throws std::runtime_error("chop failed") past the retry cap.
std::vector<Factor> chop(const ModuleRep& m, unsigned seed = 1);

// largest semisimple submodule, via homomorphism spaces from the factors
RowSpace socle(const ModuleRep& m, unsigned seed = 1);

struct SocleSeries {
    std::vector<std::vector<Factor>> layers;  // bottom-up
};
SocleSeries socle_series(const ModuleRep& m, unsigned seed = 1);

// ---------------------------------------------------------------------------
// Labels and signatures
// ---------------------------------------------------------------------------

// torus eigen-exponents (mod q-1, sorted) of the sl2 pair (fi_plus, fi_minus)
// acting on a factor
std::vector<int> torus_exponents(const Factor& f, int fi_plus, int fi_minus);

struct A1Label {
    std::string name;                    // "1", "1^(2)", "1^(2)*1", "2", ...
    std::vector<std::string> candidates; // all weight-compatible names
    bool ambiguous = false;
};

// Names an irreducible factor of an A1 action by its highest weight, digits
// resolved through the exponents and, when needed, the t-degrees of the
// one-parameter family entries.  Never guesses: multiple surviving
// candidates are reported as ambiguous.
A1Label label_a1_factor(const Factor& f, int fi_plus, int fi_minus);

struct SigFactor {
    int dim = 0;
    std::vector<std::vector<int>> exps;  // one sorted multiset per torus pair
    std::string name;
    bool operator==(const SigFactor& o) const { return dim == o.dim && exps == o.exps; }
};

struct FactorSignature {
    std::vector<SigFactor> factors;              // sorted
    std::vector<std::vector<SigFactor>> socle;   // layers bottom-up, sorted
    bool operator==(const FactorSignature& o) const {
        return factors == o.factors && socle == o.socle;
    }
    std::string str() const;
};

FactorSignature compute_signature(const GeneratorSet& g, unsigned seed = 1);

// the expected restriction for a table subgroup at characteristic p over
// GF(p^n); throws std::invalid_argument when the row does not apply
FactorSignature expected_signature(SubgroupName name, int p, int n, int r = 0,
                                   int s = 0);

struct RestrictionReport {
    FactorSignature computed;
    FactorSignature expected;
    bool match = false;
    std::string detail;
};

RestrictionReport restriction_report(const SubgroupSpec& spec, unsigned seed = 1);

}  // namespace g2
