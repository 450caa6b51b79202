// pacert: certified pseudo-Anosov coset words from symplectic polynomials.
#include "pacert/json_render.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace pacert;

namespace {

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string t;
        for (char ch : item)
            if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
        if (t.empty()) throw std::invalid_argument("empty entry in list \"" + text + "\"");
        out.emplace_back(t);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::vector<int> parse_order(const std::string& text) {
    std::vector<int> out;
    for (const Int& v : parse_int_list(text)) out.push_back(v.convert_to<int>());
    return out;
}

struct InputFlags {
    std::string poly;    // descending coefficients of a symplectic polynomial
    std::string coeffs;  // seed coefficients a_{g-1},...,a_0
    int genus = 0;
    long long prime = 0;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
    cmd->add_option("--poly", in.poly,
                    "symplectic polynomial, descending coefficients (e.g. 1,6,5,6,1)");
    cmd->add_option("--genus", in.genus, "seed genus g >= 2");
    cmd->add_option("--coeffs", in.coeffs, "seed coefficients a_{g-1},...,a_0 (descending)");
    cmd->add_option("--prime", in.prime, "Eisenstein prime for the seed");
}

bool has_poly_input(const InputFlags& in) { return !in.poly.empty(); }
bool has_seed_input(const InputFlags& in) {
    return in.genus != 0 || !in.coeffs.empty() || in.prime != 0;
}

SeedPoly seed_from_flags(const InputFlags& in) {
    SeedPoly seed;
    seed.genus = in.genus;
    std::vector<Int> desc = parse_int_list(in.coeffs);
    seed.a.assign(desc.rbegin(), desc.rend());
    if (in.prime != 0) seed.eisenstein_prime = Int(in.prime);
    seed.validate();
    return seed;
}

SymplecticPoly poly_from_flags(const InputFlags& in) {
    return SymplecticPoly(IntPoly::parse_csv_desc(in.poly));
}

SymplecticPoly input_poly(const InputFlags& in) {
    if (has_poly_input(in) == has_seed_input(in))
        throw std::invalid_argument("give exactly one input: --poly, or --genus with --coeffs");
    return has_poly_input(in) ? poly_from_flags(in) : sym_poly(seed_from_flags(in).q());
}

Certificate run_certify(const InputFlags& in, const CertifyOptions& opts) {
    if (has_poly_input(in) == has_seed_input(in))
        throw std::invalid_argument("give exactly one input: --poly, or --genus with --coeffs");
    if (has_poly_input(in)) return certify(poly_from_flags(in), opts);
    return certify(seed_from_flags(in), opts);
}

int emit_certificate(const Certificate& cert, const std::string& format) {
    if (format == "json")
        std::cout << to_json(cert).dump(2) << "\n";
    else
        std::cout << cert.to_text();
    return exit_code(cert.verdict);
}

struct BatchRow {
    std::size_t line = 0;
    std::string error;
    std::optional<Certificate> cert;
};

BatchRow process_row(std::size_t line, const std::string& text, const CertifyOptions& opts) {
    BatchRow row{line, "", std::nullopt};
    try {
        std::vector<std::string> fields;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) fields.push_back(item);
        if (fields.size() < 3) throw std::invalid_argument("expected genus,prime,coefficients");
        SeedPoly seed;
        seed.genus = std::stoi(fields[0]);
        std::string p;
        for (char ch : fields[1])
            if (!std::isspace(static_cast<unsigned char>(ch))) p += ch;
        if (!p.empty()) seed.eisenstein_prime = Int(p);
        std::vector<Int> desc;
        for (std::size_t k = 2; k < fields.size(); ++k) {
            std::string t;
            for (char ch : fields[k])
                if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
            if (!t.empty()) desc.emplace_back(t);
        }
        seed.a.assign(desc.rbegin(), desc.rend());
        seed.validate();
        row.cert = certify(seed, opts);
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

int cmd_batch(const std::string& path, const CertifyOptions& opts, const std::string& format,
              bool parallel) {
    std::ifstream file(path);
    if (!file) {
        std::cerr << "error: cannot open " << path << "\n";
        return 1;
    }
    std::vector<std::pair<std::size_t, std::string>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(file, line)) {
        ++lineno;
        std::string t;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
        if (t.empty() || t[0] == '#') continue;
        if (lineno == 1 && !std::isdigit(static_cast<unsigned char>(t[0]))) continue;  // header
        rows.emplace_back(lineno, line);
    }

    std::vector<BatchRow> results(rows.size());
    if (parallel && rows.size() > 1) {
        std::atomic<std::size_t> next{0};
        const unsigned n = std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t)
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < rows.size(); k = next++)
                    results[k] = process_row(rows[k].first, rows[k].second, opts);
            });
        for (auto& th : pool) th.join();
    } else {
        for (std::size_t k = 0; k < rows.size(); ++k)
            results[k] = process_row(rows[k].first, rows[k].second, opts);
    }

    std::size_t certified = 0, refuted = 0, inconclusive = 0, errors = 0;
    ordered_json jrows = ordered_json::array();
    for (const BatchRow& row : results) {
        if (!row.error.empty()) {
            ++errors;
            if (format == "json")
                jrows.push_back(ordered_json{{"line", row.line}, {"error", row.error}});
            else
                std::cout << "line " << row.line << ": error: " << row.error << "\n";
            continue;
        }
        const Certificate& c = *row.cert;
        switch (c.verdict) {
            case Verdict::Certified: ++certified; break;
            case Verdict::Refuted: ++refuted; break;
            default: ++inconclusive; break;
        }
        if (format == "json")
            jrows.push_back(ordered_json{{"line", row.line},
                                         {"poly", c.r.poly().csv_desc()},
                                         {"verdict", to_string(c.verdict)},
                                         {"word", render_word(c.word)}});
        else
            std::cout << "line " << row.line << ": " << c.r.poly().csv_desc() << " -> "
                      << to_string(c.verdict) << "\n";
    }
    if (format == "json") {
        ordered_json out{{"rows", jrows},
                         {"summary",
                          ordered_json{{"certified", certified},
                                       {"refuted", refuted},
                                       {"inconclusive", inconclusive},
                                       {"errors", errors}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "summary: " << certified << " certified, " << refuted << " refuted, "
                  << inconclusive << " inconclusive, " << errors << " errors\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified pseudo-Anosov mapping-class words via the homological criterion"};
    app.require_subcommand(1);

    std::string format = "text";
    long long budget = kDefaultBudget;
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--budget", budget, "work budget for the exhaustive factor search");

    InputFlags in;
    std::string order_text;
    bool sign_variant = false;

    CLI::App* c_certify =
        app.add_subcommand("certify", "run the full pipeline and emit a certificate");
    add_input_flags(c_certify, in);
    c_certify->add_option("--order", order_text, "block order, e.g. 2,1 (default 1..g)");
    c_certify->add_flag("--sign-variant", sign_variant,
                        "use the genus-2 alternate handle-switch spellings");

    CLI::App* c_matrix = app.add_subcommand("matrix", "emit A_q, the factor spec, and B_q");
    add_input_flags(c_matrix, in);

    CLI::App* c_word = app.add_subcommand("word", "emit the twist word and its homology action");
    add_input_flags(c_word, in);
    c_word->add_option("--order", order_text, "block order, e.g. 2,1 (default 1..g)");
    c_word->add_flag("--sign-variant", sign_variant,
                     "use the genus-2 alternate handle-switch spellings");
    bool expand = false;
    c_word->add_flag("--expand", expand, "render handle switches as twist letters");

    CLI::App* c_genus2 =
        app.add_subcommand("genus2", "genus-2 characterization and explicit word");
    long long g2a = 0, g2b = 0;
    int sweep = -1;
    c_genus2->add_option("--a", g2a, "coefficient a of x^4+ax^3+bx^2+ax+1");
    c_genus2->add_option("--b", g2b, "coefficient b of x^4+ax^3+bx^2+ax+1");
    c_genus2->add_option("--sweep", sweep, "sweep all |a|,|b| <= N and print a summary");

    CLI::App* c_batch =
        app.add_subcommand("batch", "certify a CSV of seeds (genus,prime,coeffs...)");
    std::string input_path;
    bool parallel = false;
    c_batch->add_option("--input", input_path, "CSV path")->required();
    c_batch->add_flag("--parallel", parallel, "process rows in parallel (output order is kept)");

    CLI11_PARSE(app, argc, argv);

    try {
        CertifyOptions opts;
        opts.budget = budget;
        if (!order_text.empty()) opts.block_order = parse_order(order_text);
        opts.genus2_flip = sign_variant;

        if (c_certify->parsed()) return emit_certificate(run_certify(in, opts), format);

        if (c_matrix->parsed()) {
            SymplecticPoly r = input_poly(in);
            BqFactorization f = factored_bq(r);
            IntMatrix aq = companion(r);
            if (format == "json") {
                ordered_json out{{"poly", to_json(r.poly())},
                                 {"companion", to_json(aq)},
                                 {"factor_spec", f.spec.to_string()},
                                 {"bq", to_json(f.product)},
                                 {"charpoly", to_json(charpoly(f.product))},
                                 {"symplectic", is_symplectic(f.product)}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "polynomial: " << r.poly().pretty() << "\n";
                std::cout << "companion A_q:\n" << aq << "\n";
                std::cout << "factor spec: " << f.spec.to_string() << "\n";
                std::cout << "B_q:\n" << f.product << "\n";
                std::cout << "charpoly(B_q): " << charpoly(f.product).pretty() << "\n";
                std::cout << "symplectic: " << (is_symplectic(f.product) ? "yes" : "no") << "\n";
            }
            return 0;
        }

        if (c_word->parsed()) {
            SymplecticPoly r = input_poly(in);
            MCWord w = recipe_word(r, opts.block_order, opts.genus2_flip);
            IntMatrix m = psi(w);
            if (format == "json") {
                ordered_json out{{"poly", to_json(r.poly())},
                                 {"word", render_word(w, !expand)},
                                 {"word_items", to_json(w)},
                                 {"psi", to_json(m)},
                                 {"charpoly", to_json(charpoly(m))}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "polynomial: " << r.poly().pretty() << "\n";
                std::cout << "word: " << render_word(w, !expand) << "\n";
                std::cout << "psi:\n" << m << "\n";
                std::cout << "charpoly(psi): " << charpoly(m).pretty() << "\n";
            }
            return 0;
        }

        if (c_genus2->parsed()) {
            if (sweep >= 0) {
                std::size_t certified = 0, refuted = 0;
                for (long long a = -sweep; a <= sweep; ++a)
                    for (long long b = -sweep; b <= sweep; ++b) {
                        auto [word, cert] = genus2_word({Int(a), Int(b)}, budget);
                        (void)word;
                        (cert.verdict == Verdict::Certified ? certified : refuted)++;
                    }
                std::cout << "sweep |a|,|b| <= " << sweep << ": " << certified << " certified, "
                          << refuted << " refuted\n";
                return 0;
            }
            const Genus2Check check = genus2_criterion({Int(g2a), Int(g2b)});
            auto [word, cert] = genus2_word({Int(g2a), Int(g2b)}, budget);
            (void)word;
            if (format == "json") {
                ordered_json out = to_json(cert);
                out["genus2_criterion"] =
                    ordered_json{{"satisfied", check.satisfied}, {"reasons", check.reasons}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "criterion (closed form): " << (check.satisfied ? "holds" : "fails");
                for (const std::string& rr : check.reasons) std::cout << " [" << rr << "]";
                std::cout << "\n" << cert.to_text();
            }
            return exit_code(cert.verdict);
        }

        if (c_batch->parsed()) return cmd_batch(input_path, opts, format, parallel);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
