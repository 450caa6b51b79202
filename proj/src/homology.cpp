#include "pacert/homology.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace pacert {

HClass HClass::zero(int g) {
    if (g < 1) throw std::invalid_argument("genus >= 1 required");
    return {g, std::vector<Int>(2 * g, Int(0))};
}

HClass HClass::e(int g, int i) {
    HClass h = zero(g);
    if (i < 1 || i > 2 * g) throw std::invalid_argument("basis index out of range");
    h.vec[i - 1] = 1;
    return h;
}

HClass HClass::x(int g, int i) {
    if (i < 1 || i > g) throw std::invalid_argument("x index out of range");
    return e(g, i % 2 == 1 ? i : sigma(g, i));
}

HClass HClass::y(int g, int i) {
    if (i < 1 || i > g) throw std::invalid_argument("y index out of range");
    return e(g, i % 2 == 1 ? sigma(g, i) : i);
}

bool HClass::is_zero() const {
    for (const Int& v : vec)
        if (v != 0) return false;
    return true;
}

bool HClass::is_primitive() const {
    Int d = 0;
    for (const Int& v : vec) d = gcd(d, v);
    return d == 1;
}

HClass HClass::operator+(const HClass& o) const {
    if (genus != o.genus) throw std::invalid_argument("class sum: genus mismatch");
    HClass h = *this;
    for (std::size_t k = 0; k < vec.size(); ++k) h.vec[k] += o.vec[k];
    return h;
}

HClass HClass::operator-() const {
    HClass h = *this;
    for (Int& v : h.vec) v = -v;
    return h;
}

std::string HClass::label() const {
    std::string out;
    for (int i = 1; i <= genus; ++i) {
        for (char which : {'x', 'y'}) {
            const HClass basis = (which == 'x') ? x(genus, i) : y(genus, i);
            int idx = 0;
            while (basis.vec[idx] == 0) ++idx;
            const Int& coef = vec[idx];
            if (coef == 0) continue;
            if (!out.empty()) out += (coef > 0) ? "+" : "-";
            else if (coef < 0) out += "-";
            const Int a = abs(coef);
            if (a != 1) out += a.str();
            out += which;
            out += std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

HClass HClass::parse(int g, const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
    HClass h = zero(g);
    std::size_t pos = 0;
    const auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad class \"" + raw + "\": " + why);
    };
    if (text.empty()) fail("empty");
    if (text == "0") return h;
    bool any = false;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = (text[pos] == '-') ? -1 : 1;
            ++pos;
        }
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        if (pos < text.size() && text[pos] == '*') ++pos;
        if (pos >= text.size() || (text[pos] != 'x' && text[pos] != 'y')) fail("expected x or y label");
        const char which = text[pos++];
        std::string idxs;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            idxs += text[pos++];
        if (idxs.empty()) fail("missing label index");
        const int i = std::stoi(idxs);
        if (i < 1 || i > g) fail("label index out of range");
        Int coef = digits.empty() ? Int(1) : Int(digits);
        coef *= sign;
        const HClass basis = (which == 'x') ? x(g, i) : y(g, i);
        for (std::size_t k = 0; k < h.vec.size(); ++k) h.vec[k] += coef * basis.vec[k];
        any = true;
    }
    if (!any) fail("no terms");
    return h;
}

Int pairing(const HClass& u, const HClass& v) {
    if (u.genus != v.genus) throw std::invalid_argument("pairing: genus mismatch");
    const int g = u.genus;
    Int acc = 0;
    // J is anti-diagonal with alternating signs; <u,v> = sum_i u_i (Jv)_i
    for (int i = 1; i <= 2 * g; ++i) {
        const Int& vi = v.vec[sigma(g, i) - 1];
        if (vi == 0 || u.vec[i - 1] == 0) continue;
        acc += (i % 2 == 1 ? 1 : -1) * u.vec[i - 1] * vi;
    }
    return acc;
}

IntMatrix twist_action(const HClass& c, const Int& exponent) {
    if (!c.is_primitive()) throw std::invalid_argument("twist: primitive class required");
    const int g = c.genus;
    const int n = 2 * g;
    IntMatrix m = IntMatrix::identity(n);
    std::vector<Int> jc(n);
    for (int i = 1; i <= n; ++i) jc[i - 1] = (i % 2 == 1 ? 1 : -1) * c.vec[sigma(g, i) - 1];
    for (int s = 0; s < n; ++s) {
        if (c.vec[s] == 0) continue;
        for (int r = 0; r < n; ++r) m.at(s, r) += exponent * c.vec[s] * jc[r];
    }
    return m;
}

MCWord& MCWord::operator+=(const MCWord& o) {
    if (genus != o.genus) throw std::invalid_argument("word concat: genus mismatch");
    const std::size_t base = letters.size();
    letters.insert(letters.end(), o.letters.begin(), o.letters.end());
    for (Block b : o.blocks) {
        b.first += base;
        blocks.push_back(std::move(b));
    }
    return *this;
}

MCWord MCWord::inverse() const {
    MCWord w;
    w.genus = genus;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w.letters.push_back({it->cls, -it->exponent});
    return w;
}

IntMatrix psi(const MCWord& w) {
    if (w.genus < 1) throw std::invalid_argument("psi: genus >= 1 required");
    IntMatrix m = IntMatrix::identity(2 * w.genus);
    for (const TwistLetter& l : w.letters) m = m * twist_action(l.cls, l.exponent);
    return m;
}

MCWord btm_word(int g, int i, int j) { return btm_word_pow(g, i, j, Int(1)); }

MCWord btm_word_pow(int g, int i, int j, const Int& k) {
    if (i < 1 || i > 2 * g || j < 1 || j > 2 * g || i == j)
        throw std::invalid_argument("btm_word: indices in 1..2g with i != j required");
    MCWord w;
    w.genus = g;
    if (k == 0) return w;
    const int t = (j % 2 == 0) ? -1 : 1;  // (-1)^{j+1}
    const Int e = t * k;
    const int sj = sigma(g, j);
    if (i == sj) {
        w.letters.push_back({HClass::e(g, i), e});
    } else {
        w.letters.push_back({HClass::e(g, i) + HClass::e(g, sj), e});
        w.letters.push_back({HClass::e(g, i), -e});
        w.letters.push_back({HClass::e(g, sj), -e});
    }
    return w;
}

MCWord handle_switch_word(int g, int i, bool genus2_flip) {
    if (i < 1 || i > g) throw std::invalid_argument("handle_switch_word: index in 1..g required");
    MCWord w;
    w.genus = g;
    if (genus2_flip) {
        if (g != 2) throw std::invalid_argument("sign-flip variant is defined for genus 2 only");
        if (i == 1) {
            for (int rep = 0; rep < 3; ++rep)
                for (const HClass& c : {HClass::y(g, 2), HClass::x(g, 2),
                                        HClass::y(g, 1) + HClass::y(g, 2), HClass::x(g, 1),
                                        HClass::y(g, 1)})
                    w.letters.push_back({c, Int(1)});
        } else {
            for (const HClass& c : {HClass::x(g, 2), HClass::y(g, 2), HClass::x(g, 2)})
                w.letters.push_back({c, Int(1)});
        }
        return w;
    }
    const int t = (i % 2 == 1) ? 1 : -1;  // (-1)^{i+1}
    const int si = sigma(g, i);
    if (i == g) {
        for (int idx : {i, si, i}) w.letters.push_back({HClass::e(g, idx), Int(1)});
    } else {
        const int si1 = sigma(g, i + 1);
        const HClass mixed = HClass::e(g, si) + HClass::e(g, i + 1);
        for (int rep = 0; rep < 3; ++rep) {
            w.letters.push_back({HClass::e(g, si), Int(1)});
            w.letters.push_back({HClass::e(g, i), Int(1)});
            w.letters.push_back({mixed, Int(1)});
            w.letters.push_back({HClass::e(g, si1), Int(1)});
            w.letters.push_back({HClass::e(g, i + 1), Int(1)});
        }
        for (int rep = 0; rep < 3; ++rep) {
            w.letters.push_back({HClass::e(g, si), Int(1)});
            w.letters.push_back({HClass::e(g, i), Int(1)});
        }
    }
    return (t == 1) ? w : w.inverse();
}

MCWord recipe_word(const SymplecticPoly& r, const std::vector<int>& block_order, bool genus2_flip) {
    const int g = r.genus();
    std::vector<int> order = block_order;
    if (order.empty()) {
        order.resize(g);
        std::iota(order.begin(), order.end(), 1);
    }
    std::vector<bool> seen(g + 1, false);
    for (int i : order) {
        if (i < 1 || i > g || seen[i])
            throw std::invalid_argument("block order must be a permutation of 1..g");
        seen[i] = true;
    }
    if (static_cast<int>(order.size()) != g)
        throw std::invalid_argument("block order must be a permutation of 1..g");
    if (genus2_flip) {
        if (g != 2) throw std::invalid_argument("sign-flip variant is defined for genus 2 only");
        for (int i = 0; i < g; ++i)
            if (order[i] != i + 1)
                throw std::invalid_argument("sign-flip variant requires the canonical block order");
    }

    MCWord w;
    w.genus = g;
    for (int i : order) {
        const Int ti = r.t(i);
        MCWord block = btm_word_pow(g, i, i + 1, ti);
        w.blocks.push_back(
            {MCWord::Block::Kind::Btm, i, ti, w.letters.size(), block.letters.size()});
        w += block;
        MCWord hw = handle_switch_word(g, i, genus2_flip);
        // the alternate genus-2 spellings are not the canonical H_i, so
        // they stay inline instead of compacting to an "H<i>" token
        if (!genus2_flip) {
            w.blocks.push_back({MCWord::Block::Kind::Handle, i, Int(0), w.letters.size(),
                                hw.letters.size()});
        }
        w += hw;
    }
    return w;
}

std::string render_word(const MCWord& w, bool compact_handles) {
    std::string out;
    const auto append = [&](const std::string& tok) {
        if (!out.empty()) out += " . ";
        out += tok;
    };
    std::size_t pos = 0;
    std::size_t nb = 0;
    // blocks annotate disjoint ascending ranges; find handle runs by start
    while (pos < w.letters.size()) {
        while (nb < w.blocks.size() && w.blocks[nb].first + w.blocks[nb].count <= pos) ++nb;
        if (compact_handles && nb < w.blocks.size() && w.blocks[nb].first == pos &&
            w.blocks[nb].kind == MCWord::Block::Kind::Handle && w.blocks[nb].count > 0) {
            append("H" + std::to_string(w.blocks[nb].index));
            pos += w.blocks[nb].count;
            ++nb;
            continue;
        }
        const TwistLetter& l = w.letters[pos];
        std::string tok = "T[" + l.cls.label() + "]";
        if (l.exponent != 1) tok += "^" + l.exponent.str();
        append(tok);
        ++pos;
    }
    return out;
}

MCWord parse_word(int g, const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    MCWord w;
    w.genus = g;
    if (s.empty()) return w;
    std::size_t pos = 0;
    const auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad word at position " + std::to_string(pos) + ": " + why);
    };
    while (true) {
        if (pos >= s.size()) fail("expected a letter");
        if (s[pos] == 'H') {
            ++pos;
            std::string digits;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                digits += s[pos++];
            if (digits.empty()) fail("missing handle index");
            const int i = std::stoi(digits);
            MCWord hw = handle_switch_word(g, i);
            w.blocks.push_back({MCWord::Block::Kind::Handle, i, Int(0), w.letters.size(),
                                hw.letters.size()});
            w += hw;
        } else if (s[pos] == 'T') {
            ++pos;
            if (pos >= s.size() || s[pos] != '[') fail("expected '[' after T");
            const std::size_t close = s.find(']', ++pos);
            if (close == std::string::npos) fail("missing ']'");
            const HClass cls = HClass::parse(g, s.substr(pos, close - pos));
            pos = close + 1;
            Int exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::string digits;
                if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) digits += s[pos++];
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    digits += s[pos++];
                if (digits.empty() || digits == "-" || digits == "+") fail("bad exponent");
                exponent = Int(digits);
            }
            if (exponent == 0) fail("zero exponent");
            if (!cls.is_primitive()) fail("twist class must be primitive");
            w.letters.push_back({cls, exponent});
        } else {
            fail("expected T[...] or H<i>");
        }
        if (pos == s.size()) break;
        if (s[pos] != '.') fail("expected '.' separator");
        ++pos;
    }
    return w;
}

}  // namespace pacert
