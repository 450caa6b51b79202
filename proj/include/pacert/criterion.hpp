#pragma once

#include "pacert/polynomial.hpp"

#include <utility>

namespace pacert {

enum class TriState { Proven, Refuted, Inconclusive };
const char* to_string(TriState s);

inline constexpr long long kDefaultBudget = 2'000'000;

// Outcome of the homological-criterion hypotheses on a symplectic
// polynomial r: symplectic irreducibility (decided on desym(r)), the
// cyclotomic-product test, and the power index.
struct CriterionReport {
    TriState symp_irreducible = TriState::Inconclusive;
    std::optional<Int> eisenstein_prime;      // witness when proven via Eisenstein
    bool proven_by_search = false;            // proven by exhaustive factor search
    std::optional<IntPoly> reducible_factor;  // factor of desym(r) when refuted

    bool cyclotomic = false;
    std::vector<long> cyclotomic_witness;  // r == product of Phi_n over this list

    long power_index = 1;

    std::string note;
    TriState verdict = TriState::Inconclusive;

    // proven iff irreducible proven, not cyclotomic, power index 1;
    // refuted iff irreducible refuted or cyclotomic or power index > 1
    void settle_verdict();
};

// p divides every non-leading coefficient and p^2 does not divide the
// constant term; q monic, p prime.
bool eisenstein_witness(const IntPoly& q, const Int& p);

// Exhaustive factor search by Kronecker interpolation: evaluate at small
// integer points, enumerate divisor tuples, interpolate candidates and
// trial-divide. Inconclusive once the work counter passes `budget`.
TriState kronecker_irreducible(const IntPoly& q, long long budget, IntPoly* factor = nullptr);

// n-th cyclotomic polynomial, by exact division of x^n - 1; memoized,
// thread-safe.
const IntPoly& cyclotomic_poly(long n);

// The list of n with r == prod Phi_n, if r is a product of cyclotomic
// polynomials. Trial-divides by every Phi_n with phi(n) <= deg r,
// n <= 8 deg(r)^2 (safe since phi(n) >= sqrt(n/2)).
std::optional<std::vector<long>> cyclotomic_product_witness(const IntPoly& r);
bool is_cyclotomic_product(const IntPoly& r);

// Largest k >= 1 with r in Z[x^k]: gcd of the exponents with nonzero
// coefficient (1 for constants).
long power_index(const IntPoly& r);

// Full hypothesis check on r. Irreducibility of desym(r) is decided by
// Eisenstein over candidate primes (the hint, or prime divisors of the
// non-leading content), falling back to the Kronecker search.
CriterionReport check_criterion(const SymplecticPoly& r, long long budget = kDefaultBudget,
                                const std::optional<Int>& eisenstein_hint = {});

// Builds sym(q) from the seed and reports on the criterion. When the
// |a_{g-1} p| > 2g bound fails the irreducibility decision is not
// attempted: the seed recipe does not apply, and the report says so
// (cyclotomic and power-index checks still run, so genuine refutations
// are surfaced).
std::pair<SymplecticPoly, CriterionReport> seed_to_symplectic(const SeedPoly& s,
                                                              long long budget = kDefaultBudget);

}  // namespace pacert
