#pragma once

#include "pacert/symplectic.hpp"

namespace pacert {

// Integral homology class in the e-basis. The symplectic labels follow
// the ordering e_1, e_{2g}, e_{2g-1}, e_2, e_3, e_{2g-2}, ... =
// x_1, y_1, x_2, y_2, ...; so x_i = e_i for odd i and e_{sigma(i)} for
// even i, and y_i the other one of the pair.
struct HClass {
    int genus = 0;
    std::vector<Int> vec;  // length 2g

    static HClass zero(int g);
    static HClass e(int g, int i);  // 1-based basis vector
    static HClass x(int g, int i);
    static HClass y(int g, int i);

    bool is_zero() const;
    bool is_primitive() const;  // gcd of entries is 1

    HClass operator+(const HClass& o) const;
    HClass operator-() const;
    bool operator==(const HClass& o) const { return genus == o.genus && vec == o.vec; }

    // canonical label form, e.g. "x1+x2", "y1-y2", "2x1"
    std::string label() const;
    static HClass parse(int g, const std::string& text);
};

// <u, v> = u^T J v
Int pairing(const HClass& u, const HClass& v);

// Matrix of v -> v + exponent * <v, c> * c; the transvection induced by
// the Dehn twist T_c^exponent. The sign convention is fixed so that
// psi(btm_word(g,i,j)) = SE_{i,j} holds (checked in the tests against
// the explicit genus-2 matrices).
IntMatrix twist_action(const HClass& c, const Int& exponent);

struct TwistLetter {
    HClass cls;
    Int exponent;  // nonzero
};

// Word in Dehn-twist letters, with optional annotations marking which
// contiguous runs realize the bounding-triple blocks B_i^{t} and handle
// switches H_i.
struct MCWord {
    struct Block {
        enum class Kind { Btm, Handle };
        Kind kind;
        int index = 0;
        Int exponent;  // Btm only
        std::size_t first = 0;
        std::size_t count = 0;
    };

    int genus = 0;
    std::vector<TwistLetter> letters;
    std::vector<Block> blocks;

    MCWord& operator+=(const MCWord& o);  // concatenation
    MCWord inverse() const;               // annotations dropped
};

// Product of the letter transvections in word order.
IntMatrix psi(const MCWord& w);

// B_{i,j}: T_{e_i}^t when i = sigma(j), else
// (T_{e_i+e_{sigma(j)}} T_{e_i}^{-1} T_{e_{sigma(j)}}^{-1})^t with
// t = (-1)^{j+1}. The three twist classes are disjoint, so powers
// collapse onto the letter exponents.
MCWord btm_word(int g, int i, int j);
MCWord btm_word_pow(int g, int i, int j, const Int& k);  // B_{i,j}^k

// H_i with psi(H_i) = W_{i,i+1}: a quarter-turn word
// (T_{e_i} T_{e_{sigma(i)}} T_{e_i})^{(-1)^{i+1}} for i = g, and the
// handle-swap-times-half-turn word for i < g. With genus2_flip set
// (g = 2 only) the alternate spellings are used, whose images are
// W_{i,i+1} with the middle two columns negated.
MCWord handle_switch_word(int g, int i, bool genus2_flip = false);

// f = B_1^{t_1} H_1 ... B_g^{t_g} H_g, blocks taken in block_order
// (default 1..g); psi(f) equals the factored product for that order.
// genus2_flip requires g = 2 and the default order.
MCWord recipe_word(const SymplecticPoly& r, const std::vector<int>& block_order = {},
                   bool genus2_flip = false);

// Text grammar: word := block ("." block)*, block := "T[" class "]"
// ("^" int)? | "H" index. Whitespace-insensitive.
std::string render_word(const MCWord& w, bool compact_handles = true);
MCWord parse_word(int g, const std::string& text);

}  // namespace pacert
