#pragma once

#include <vector>

#include <og/cell.hpp>

namespace og {

// A rewrite rule is a globular cell whose interface feet are edgeless: the
// top apex is the pattern, the middle apex the preserved part, the bottom
// apex the replacement.
struct OpenGraphRule {
    TwoCell cell;

    friend auto operator<=>(const OpenGraphRule&, const OpenGraphRule&) = default;
};

// Feet carry no edges, so the interfaces are pure boundary points.
bool is_open_graph(const Cospan& c);

void validate(const OpenGraphRule& r);

// A place to apply a rule: a monic embedding of the pattern apex plus monic
// embeddings of the rule feet into the host feet, commuting with the legs.
struct MatchResult {
    GraphMorphism match;            // pattern apex -> host apex
    GraphMorphism left_alignment;   // rule left foot -> host left foot
    GraphMorphism right_alignment;  // rule right foot -> host right foot

    friend auto operator<=>(const MatchResult&, const MatchResult&) = default;
};

// All matches in deterministic order: by apex embedding first, then left,
// then right alignment.
std::vector<MatchResult> find_matches(const OpenGraphRule& r, const Cospan& host,
                                      std::uint64_t cap = k_enumeration_cap);

struct ApplyResult {
    Cospan result;
    TwoCell witness;       // host => result, with the retained context as middle
    GraphMorphism comatch;  // replacement apex -> result apex
};

// Double-pushout application: carve out the matched pattern down to the
// preserved part, then glue in the replacement. Throws DanglingError when
// deletion would strand a host edge and RewriteError when it would delete
// the image of a host interface point.
ApplyResult apply_rule(const OpenGraphRule& r, const Cospan& host,
                       const MatchResult& at);

// Exchange the input/output roles of the interfaces.
OpenGraphRule dualize_rule(const OpenGraphRule& r);

// Exchange pattern and replacement.
OpenGraphRule invert_rule(const OpenGraphRule& r);

}  // namespace og
