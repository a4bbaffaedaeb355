#pragma once

#include <og/cospan.hpp>

namespace og {

// A rewrite square: a middle cospan included monically into a top and a
// bottom cospan. The six maps are grouped as an upward triple and a downward
// triple; each triple must commute with the cospan legs.
struct TwoCell {
    Cospan top;
    Cospan bottom;
    Cospan middle;
    GraphMorphism up_left;     // middle.left_foot  -> top.left_foot
    GraphMorphism up_apex;     // middle.apex       -> top.apex
    GraphMorphism up_right;    // middle.right_foot -> top.right_foot
    GraphMorphism down_left;   // middle.left_foot  -> bottom.left_foot
    GraphMorphism down_apex;   // middle.apex       -> bottom.apex
    GraphMorphism down_right;  // middle.right_foot -> bottom.right_foot

    friend auto operator<=>(const TwoCell&, const TwoCell&) = default;
};

void validate(const TwoCell& c);

VerticalSpan left_span(const TwoCell& c);
VerticalSpan right_span(const TwoCell& c);
VerticalSpan apex_span(const TwoCell& c);

// A cell is globular when both side boundaries are identity spans.
bool is_globular(const TwoCell& c);

TwoCell identity_cell(const Cospan& m);

// The square witnessing a vertical interface map as a cell between the
// identity cospans on its feet.
TwoCell unit_cell(const VerticalSpan& f);

// Stack two cells; the lower boundary of the first must equal the upper
// boundary of the second on the nose. Stacking with an identity cell returns
// the other cell unchanged.
TwoCell vertical_compose(const TwoCell& c, const TwoCell& d);

// Glue two cells side by side; the right boundary of the first must equal
// the left boundary of the second on the nose.
TwoCell horizontal_compose(const TwoCell& c, const TwoCell& d);

TwoCell tensor_cells(const TwoCell& c, const TwoCell& d);

// Exchange top and bottom. This inverts a cell precisely when all six maps
// are isomorphisms.
TwoCell flip_cell(const TwoCell& c);

Cospan mirror_cospan(const Cospan& m);
TwoCell mirror_cell(const TwoCell& c);

// Same outer boundary and an isomorphism of middle rows commuting with all
// six maps and the middle legs.
bool cells_isomorphic(const TwoCell& c, const TwoCell& d);

// Canonical comparison cells. Each has identity upward maps and an
// isomorphism in the downward apex position.
TwoCell associator_cell(const Cospan& m, const Cospan& n, const Cospan& p);
TwoCell left_unitor_cell(const Cospan& m);
TwoCell right_unitor_cell(const Cospan& m);

// Comparison between gluing two tensors and tensoring two gluings.
TwoCell interchanger_cell(const Cospan& m1, const Cospan& n1, const Cospan& m2,
                          const Cospan& n2);

// With the summand-wise tensor the two ways to view the empty interface
// coincide, so this comparison is an identity cell.
TwoCell unit_interchanger_cell(const Graph& x, const Graph& y);

// A horizontal 1-cell tracking a vertical interface map whose upper leg is
// invertible, together with its two binding squares.
struct CompanionCells {
    Cospan companion;
    TwoCell unit;    // identity cospan on the top foot => companion
    TwoCell counit;  // companion => identity cospan on the bottom foot
};

CompanionCells companion_of(const VerticalSpan& f);
CompanionCells conjoint_of(const VerticalSpan& f);

}  // namespace og
