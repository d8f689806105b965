#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfsmith/diagram.hpp"

namespace hopfsmith {

enum class Verdict { Equal, Distinct, Unknown };
const char* verdict_name(Verdict v);

// HOPFSMITH_BUDGET when set, else 10000.
long default_budget();

struct EqStats {
    long steps = 0;
};

Verdict eq(const Presentation& P, const TermP& a, const TermP& b, long budget = default_budget(),
           EqStats* stats = nullptr);
Verdict eq2(const Presentation& P, const Diagram2& a, const Diagram2& b, long budget = default_budget(),
            EqStats* stats = nullptr);

// Greedy canonical form followed by oriented 2-rules and inverse cancellation,
// searching over interchange linearizations for redexes. `complete` is false
// when the search ran out of budget.
Diagram2 normalize2(const Presentation& P, const Diagram2& d, long budget, bool* complete = nullptr,
                    EqStats* stats = nullptr);

struct CompositionError : TermError {
    TermP left, right;
    CompositionError(const std::string& what, TermP l, TermP r)
        : TermError(what), left(std::move(l)), right(std::move(r)) {}
};

// Checked k-composite. The lower-dimensional operand is padded with
// identities, so compose(0, alpha, g) whiskers.
TermP compose(const Presentation& P, int k, TermP a, TermP b, long budget = default_budget());
// Left-to-right chain of compose(k, ...).
TermP compose_all(const Presentation& P, int k, const std::vector<TermP>& ts, long budget = default_budget());

struct Violation {
    std::string where;
    std::string what;
};

std::optional<std::string> check_term(const Presentation& P, const TermP& t, long budget = default_budget());
std::vector<Violation> validate_presentation(const Presentation& P, long budget = default_budget());

}  // namespace hopfsmith
