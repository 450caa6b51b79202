#include "pacert/json_render.hpp"

#include <climits>

namespace pacert {

ordered_json json_int(const Int& v) {
    if (v >= LLONG_MIN && v <= LLONG_MAX) return v.convert_to<long long>();
    return v.str();
}

ordered_json to_json(const IntPoly& p) {
    ordered_json arr = ordered_json::array();
    for (int k = p.degree(); k >= 0; --k) arr.push_back(json_int(p.coeff(k)));
    if (p.is_zero()) arr.push_back(0);
    return ordered_json{{"coeffs_desc", arr}};
}

ordered_json to_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(json_int(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return ordered_json{{"dim", m.dim()}, {"rows", rows}};
}

ordered_json to_json(const MCWord& w) {
    ordered_json items = ordered_json::array();
    std::size_t pos = 0;
    std::size_t nb = 0;
    while (pos < w.letters.size()) {
        while (nb < w.blocks.size() && w.blocks[nb].first + w.blocks[nb].count <= pos) ++nb;
        if (nb < w.blocks.size() && w.blocks[nb].first == pos &&
            w.blocks[nb].kind == MCWord::Block::Kind::Handle && w.blocks[nb].count > 0) {
            items.push_back(ordered_json{{"handle", w.blocks[nb].index}});
            pos += w.blocks[nb].count;
            ++nb;
            continue;
        }
        const TwistLetter& l = w.letters[pos];
        ordered_json e = ordered_json::array();
        for (const Int& v : l.cls.vec) e.push_back(json_int(v));
        items.push_back(
            ordered_json{{"class", l.cls.label()}, {"e", e}, {"exp", json_int(l.exponent)}});
        ++pos;
    }
    return ordered_json{{"genus", w.genus}, {"items", items}};
}

ordered_json to_json(const Certificate& c) {
    ordered_json input;
    if (c.seed) {
        ordered_json a_desc = ordered_json::array();
        for (auto it = c.seed->a.rbegin(); it != c.seed->a.rend(); ++it)
            a_desc.push_back(json_int(*it));
        input = ordered_json{{"type", "seed"}, {"genus", c.seed->genus}};
        input["prime"] =
            c.seed->eisenstein_prime ? json_int(*c.seed->eisenstein_prime) : ordered_json(nullptr);
        input["a_desc"] = a_desc;
    } else {
        input = ordered_json{{"type", "poly"}};
        input["poly"] = to_json(c.r.poly());
    }

    std::string irreducible_witness;
    if (c.criterion.eisenstein_prime)
        irreducible_witness = "eisenstein:" + c.criterion.eisenstein_prime->str();
    else if (c.criterion.proven_by_search)
        irreducible_witness = "exhaustive-search";
    else if (c.criterion.reducible_factor)
        irreducible_witness = "factor:" + c.criterion.reducible_factor->csv_desc();

    ordered_json criterion{
        {"irreducible", to_string(c.criterion.symp_irreducible)},
        {"irreducible_witness", irreducible_witness},
        {"cyclotomic", c.criterion.cyclotomic},
        {"cyclotomic_witness", c.criterion.cyclotomic_witness},
        {"power_index", c.criterion.power_index},
    };
    if (!c.criterion.note.empty()) criterion["note"] = c.criterion.note;

    return ordered_json{
        {"version", c.version},
        {"input", input},
        {"symplectic_poly", to_json(c.r.poly())},
        {"criterion", criterion},
        {"factor_spec", c.factor_spec.to_string()},
        {"word", render_word(c.word)},
        {"word_items", to_json(c.word)},
        {"checks",
         ordered_json{{"symplectic", c.symplectic_ok},
                      {"charpoly", c.charpoly_ok},
                      {"psi", c.psi_ok}}},
        {"spectral_radius",
         ordered_json{{"value", c.spectral_radius.value},
                      {"error", c.spectral_radius.error},
                      {"certified", false}}},
        {"verdict", to_string(c.verdict)},
        {"coset_note", c.coset_note},
        {"surface", c.surface},
    };
}

}  // namespace pacert
