#pragma once

#include "pacert/criterion.hpp"
#include "pacert/homology.hpp"

namespace pacert {

enum class Verdict { Certified, Refuted, Inconclusive };
const char* to_string(Verdict v);
int exit_code(Verdict v);  // 0 / 2 / 3

struct CertifyOptions {
    long long budget = kDefaultBudget;
    std::vector<int> block_order;  // empty = canonical 1..g
    bool genus2_flip = false;      // use the genus-2 alternate handle spellings
};

// Machine-checkable record of the full pipeline: criterion report,
// matrix facts, factorization, twist word, and the coset-level verdict.
struct Certificate {
    explicit Certificate(SymplecticPoly rpoly) : r(std::move(rpoly)) {}

    std::string version = "1";

    std::optional<SeedPoly> seed;  // input echo when seeded
    SymplecticPoly r;
    CriterionReport criterion;

    FactorSpec factor_spec;
    IntMatrix companion_matrix;
    IntMatrix bq;

    bool symplectic_ok = false;
    bool charpoly_ok = false;
    bool psi_ok = false;

    MCWord word;
    SpectralRadiusEstimate spectral_radius;

    Verdict verdict = Verdict::Inconclusive;
    std::string coset_note;
    std::string surface;

    std::string to_text() const;
};

Certificate certify(const SeedPoly& seed, const CertifyOptions& opts = {});
Certificate certify(const SymplecticPoly& r, const CertifyOptions& opts = {});

// q(x) = x^4 + a x^3 + b x^2 + a x + 1
struct Genus2Params {
    Int a;
    Int b;
};

struct Genus2Check {
    bool satisfied = false;
    // failing clauses among "a-zero", "cyclotomic-pair", "perfect-square"
    std::vector<std::string> reasons;
};

// Closed-form genus-2 characterization: a != 0, (a,b) not (1,1) or
// (-1,1), and a^2 - 4b + 8 not a perfect square. Agrees with
// check_criterion on the quartic.
Genus2Check genus2_criterion(const Genus2Params& p);

// The explicit genus-2 word
// (T_{x1+x2} T_{x1}^{-1} T_{x2}^{-1})^a (T_{y2} T_{x2} T_{y1+y2} T_{x1} T_{y1})^3
// (T_{y2})^b (T_{x2} T_{y2} T_{x2}), with its certificate. The word is
// emitted even when the criterion refutes; psi of the word always has
// characteristic polynomial x^4+ax^3+bx^2+ax+1.
std::pair<MCWord, Certificate> genus2_word(const Genus2Params& p,
                                           long long budget = kDefaultBudget);

}  // namespace pacert
