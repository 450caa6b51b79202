#include "pacert/certify.hpp"

#include <sstream>
#include <stdexcept>

namespace pacert {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified-pA-coset";
        case Verdict::Refuted: return "refuted";
        default: return "inconclusive";
    }
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Certified: return 0;
        case Verdict::Refuted: return 2;
        default: return 3;
    }
}

namespace {

Certificate assemble(std::optional<SeedPoly> seed, SymplecticPoly r, CriterionReport rep,
                     const CertifyOptions& opts) {
    Certificate cert(std::move(r));
    cert.seed = std::move(seed);
    cert.criterion = std::move(rep);

    cert.factor_spec = bq_factors(cert.r, opts.block_order);
    cert.companion_matrix = companion(cert.r);
    cert.bq = cert.factor_spec.product();

    // A_q carries the characteristic polynomial but is only conjugate to
    // the symplectic element; B_q is the one inside Sp(2g,Z).
    cert.symplectic_ok = is_symplectic(cert.bq);
    const IntPoly cp_a = charpoly(cert.companion_matrix);
    const IntPoly cp_b = charpoly(cert.bq);
    cert.charpoly_ok = (cp_a == cert.r.poly()) && (cp_b == cert.r.poly());

    cert.word = recipe_word(cert.r, opts.block_order, opts.genus2_flip);
    cert.psi_ok = (psi(cert.word) == cert.bq);

    cert.spectral_radius = spectral_radius_estimate(cert.bq);

    if (cert.criterion.verdict == TriState::Refuted)
        cert.verdict = Verdict::Refuted;
    else if (cert.criterion.verdict == TriState::Proven && cert.symplectic_ok &&
             cert.charpoly_ok && cert.psi_ok)
        cert.verdict = Verdict::Certified;
    else
        cert.verdict = Verdict::Inconclusive;

    cert.coset_note =
        "the verdict applies to every element of the coset f*I(S) of the Torelli group";
    cert.surface = "genus " + std::to_string(cert.r.genus()) + ", at most one boundary component";
    return cert;
}

}  // namespace

Certificate certify(const SeedPoly& seed, const CertifyOptions& opts) {
    auto [r, rep] = seed_to_symplectic(seed, opts.budget);
    return assemble(seed, std::move(r), std::move(rep), opts);
}

Certificate certify(const SymplecticPoly& r, const CertifyOptions& opts) {
    if (r.genus() < 2)
        throw std::invalid_argument("certify: genus >= 2 required (degree >= 4)");
    CriterionReport rep = check_criterion(r, opts.budget);
    return assemble(std::nullopt, r, std::move(rep), opts);
}

std::string Certificate::to_text() const {
    std::ostringstream os;
    if (seed) os << "input: seed " << seed->describe() << "  (q = " << seed->q().pretty() << ")\n";
    else os << "input: polynomial " << r.poly().pretty() << "\n";
    os << "symplectic polynomial: " << r.poly().pretty() << "  [" << r.poly().csv_desc() << "]\n";
    os << "criterion:\n";
    os << "  symplectically irreducible: " << to_string(criterion.symp_irreducible);
    if (criterion.eisenstein_prime) os << " (Eisenstein at p=" << *criterion.eisenstein_prime << ")";
    if (criterion.proven_by_search) os << " (exhaustive factor search)";
    if (criterion.reducible_factor)
        os << " (desym factor " << criterion.reducible_factor->pretty() << ")";
    os << "\n";
    os << "  cyclotomic product: " << (criterion.cyclotomic ? "true" : "false");
    if (criterion.cyclotomic) {
        os << " (Phi_n for n =";
        for (long n : criterion.cyclotomic_witness) os << " " << n;
        os << ")";
    }
    os << "\n";
    os << "  power index: " << criterion.power_index << "\n";
    if (!criterion.note.empty()) os << "  note: " << criterion.note << "\n";
    os << "factor spec: " << factor_spec.to_string() << "\n";
    os << "word: " << render_word(word) << "\n";
    os << "checks: symplectic=" << (symplectic_ok ? "ok" : "FAIL")
       << " charpoly=" << (charpoly_ok ? "ok" : "FAIL") << " psi=" << (psi_ok ? "ok" : "FAIL")
       << "\n";
    os << "spectral radius: " << spectral_radius.value << " (+/- " << spectral_radius.error
       << ", non-certified diagnostic)\n";
    os << "verdict: " << to_string(verdict) << "\n";
    os << "note: " << coset_note << "; surface: " << surface << "\n";
    return os.str();
}

Genus2Check genus2_criterion(const Genus2Params& p) {
    Genus2Check out;
    if (p.a == 0) out.reasons.emplace_back("a-zero");
    if (p.b == 1 && (p.a == 1 || p.a == -1)) out.reasons.emplace_back("cyclotomic-pair");
    if (is_perfect_square(p.a * p.a - 4 * p.b + 8)) out.reasons.emplace_back("perfect-square");
    out.satisfied = out.reasons.empty();
    return out;
}

std::pair<MCWord, Certificate> genus2_word(const Genus2Params& p, long long budget) {
    SymplecticPoly r(IntPoly::from_desc({Int(1), p.a, p.b, p.a, Int(1)}));
    CertifyOptions opts;
    opts.budget = std::max(budget, kDefaultBudget);  // degree-2 search is always conclusive
    opts.genus2_flip = true;
    Certificate cert = certify(r, opts);
    const Genus2Check closed = genus2_criterion(p);
    if (closed.satisfied != (cert.criterion.verdict == TriState::Proven))
        throw std::logic_error("genus-2 closed form disagrees with the criterion checks");
    return {cert.word, std::move(cert)};
}

}  // namespace pacert
