#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "g2/chevalley.hpp"

namespace g2 {

// Constructors for the distinguished subgroups: generator words and 7x7
// matrices for subsystem subgroups, the Levi A1's, the complements X_{k,l}
// of the long parabolic, the diagonal subgroups Z1/Z2 and their twisted
// relatives, the irreducible A1 of the long A2, and the principal A1.

enum class SubgroupName {
    A2,          // long subsystem, any p
    A2short,     // short-root subsystem closure, p = 3 only
    A1xA1short,  // orthogonal pair (3,2), (1,0)
    Lbar0,       // long-Levi A1, = X_{0,0}
    Ltilde0,     // short-Levi A1
    Z1,          // p = 2 diagonal in A1 x ~A1
    Z2,          // p = 2 symmetric-square image in the long A2
    Xkl,         // the one-parameter complement family
    TwistedDiag, // (x^(p^r), x^(p^s)) diagonal
    IrredA1inA2, // p > 2 symmetric-square image
    PrincipalA1  // p >= 7 regular-nilpotent exponential
};

std::string subgroup_name_str(SubgroupName n);
SubgroupName subgroup_name_parse(const std::string& s);

struct SubgroupSpec {
    SubgroupName name;
    const Field* field = nullptr;
    FieldElem k, l;    // Xkl parameters
    int r = 0, s = 0;  // TwistedDiag exponents
};

struct OneParamFamily {
    std::string label;
    std::function<Mat(const FieldElem&)> mat;
    std::function<Word(const FieldElem&)> word;
};

struct GeneratorSet {
    SubgroupSpec spec;
    std::vector<OneParamFamily> families;
    // indices into families: (positive, negative) pairs forming sl2's whose
    // torus elements label restriction factors
    std::vector<std::pair<int, int>> torus_pairs;
    bool a1_type = false;  // torus_pairs.size() == 1 and families = {x+, x-}
    std::string note;

    // matrices for all t != 0 in every family, labels "<family>@<t index>"
    std::vector<std::pair<std::string, Mat>> sampled_matrices() const;
    // generators over the prime subfield scale: t in {1, primitive}
    std::vector<Mat> small_generators() const;
};

// Throws std::invalid_argument on name/characteristic mismatch.
GeneratorSet subgroup_generators(const SubgroupSpec& spec);

// Root-subgroup generator set for an arbitrary list of roots (no
// characteristic policing); families come in (+r, -r)... order given.
GeneratorSet subsystem_generators(const std::vector<Root>& positive,
                                  const Field& F, const std::string& name);

// Re-parameterizes every family by t -> t^(p^r).
GeneratorSet frobenius_twist_gens(const GeneratorSet& g, int r);

// ---------------------------------------------------------------------------
// Steinberg relation suite for A1-type generator pairs
// ---------------------------------------------------------------------------

struct RelationReport {
    bool additivity = true;  // (i)
    bool torus = true;       // (ii)
    bool weyl = true;        // (iii)
    std::string detail;      // witness of the first failure
    bool all() const { return additivity && torus && weyl; }
};

// exhaustive when the field is small, sampled otherwise
RelationReport check_steinberg(const GeneratorSet& a1, unsigned seed = 1,
                               int samples = 50);

// X_{k,l} closed forms n+(t) = n2(t^2) x4(k^2), h+(t) = h2(t^2); p = 2 facts
bool check_xkl_closed_forms(const GeneratorSet& xkl, std::string* detail = nullptr);

// ---------------------------------------------------------------------------
// Explicit conjugators for the X_{k,l} family
// ---------------------------------------------------------------------------

struct Conjugator {
    Word word;            // w X w^-1 maps the source onto the target
    SubgroupSpec target;  // X_{1,0} or X_{0,1}
};

// (k,l) != (0,0); the k = 0 branch needs l to be a cube in the field.
Conjugator conjugator_xkl(const FieldElem& k, const FieldElem& l);

}  // namespace g2
