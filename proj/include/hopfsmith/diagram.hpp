#pragma once

#include <string>
#include <vector>

#include "hopfsmith/presentation.hpp"

namespace hopfsmith {

struct Letter {
    std::string name;
    bool inv = false;
    bool operator==(const Letter&) const = default;
};

// A 1-cell as a word of letters from the 0-cell `base`.
struct Word {
    std::string base;
    std::vector<Letter> letters;
    bool operator==(const Word&) const = default;
};

// One whiskered 2-generator acting on positions [pos, pos + in.size()).
struct Layer2 {
    std::size_t pos = 0;
    std::string gen;
    bool inv = false;
    std::vector<Letter> in, out;
    bool operator==(const Layer2&) const = default;
};

struct Diagram2 {
    Word src;
    std::vector<Layer2> layers;
    bool operator==(const Diagram2&) const = default;
};

// One whiskered 3-generator: below ; (p . gin . s) ; above, p of length pos.
struct Layer3 {
    Diagram2 below;
    std::size_t pos = 0;
    std::string gen;
    bool inv = false;
    Diagram2 gin, gout;
    Diagram2 above;
};

struct Diagram3 {
    Diagram2 src;
    std::vector<Layer3> layers;
};

Word flatten1(const Presentation& P, const TermP& t);
std::string word_target(const Presentation& P, const Word& w);
Word free_reduce(Word w);
std::string word_key(const Word& w);

Diagram2 flatten2(const Presentation& P, const TermP& t);
Diagram2 identity2(const Word& w);
Word target_word(const Diagram2& d);
Diagram2 concat2(const Diagram2& x, const Diagram2& y);
Diagram2 comp0_2(const Diagram2& x, const Diagram2& y);
Diagram2 inverse2(const Diagram2& d);
// Layer list as the whiskered 2-cell word it spells, for diagnostics.
std::string diagram_key(const Diagram2& d);

// Interchange of adjacent layers l1 then l2. Fills the swapped pair
// (applied in the new order) and returns false when the layers overlap.
// `right` selects the alternative placement for zero-width contacts.
bool swap_layers(const Layer2& l1, const Layer2& l2, Layer2& n2, Layer2& n1, bool right = false);
bool zero_contact(const Layer2& l1, const Layer2& l2);

// Greedy rightmost-first schedule: repeatedly takes, among layers that can
// slide to the front, the one sitting at the smallest position. Returns the
// canonical diagram; `order` receives the original layer index of each step.
Diagram2 canonical(const Diagram2& d, std::vector<std::size_t>* order = nullptr);

Diagram3 flatten3(const Presentation& P, const TermP& t);
Diagram2 layer_source(const Layer3& l);
Diagram2 layer_target(const Layer3& l);
Diagram2 target2(const Diagram3& d);

}  // namespace hopfsmith
