#pragma once

#include <og/cell.hpp>

namespace og {

// Cap both ends of a doubled wire: x + x -> x <- 0.
Cospan counit_cospan(const Graph& x);

// The reverse: 0 -> x <- x + x.
Cospan unit_cospan(const Graph& x);

// The square with legs (id + fold) and (fold + id) out of the triple copy,
// closed by folding everything to a single copy. The claim that this closure
// is a pushout carries the zig-zag cancellation; it is checked here against
// the search oracle.
bool verify_fold_pushout(const Graph& x, std::uint64_t cap = k_universal_cap);

// The zig-zag composites, each delivered as a cell down to the identity
// cospan on x. Construction fails if the comparison map is not invertible.
TwoCell snake_right_cell(const Graph& x);
TwoCell snake_left_cell(const Graph& x);

}  // namespace og
