#pragma once

#include <atomic>
#include <cstdint>

#include "og/graph.hpp"

namespace og {

struct CoconeResult {
  Graph object;
  GraphMorphism left_inclusion;
  GraphMorphism right_inclusion;
};

struct ConeResult {
  Graph object;
  GraphMorphism left_projection;
  GraphMorphism right_projection;
};

// disjoint union. The left operand keeps its ids; the right operand's node ids
// are shifted by the left node bound and its edge ids by the left edge bound,
// so the empty graph is a unit on the nose and nesting is associative on the nose.
CoconeResult coproduct(const Graph& g, const Graph& h);

// componentwise action on morphisms, f+g
GraphMorphism coproduct_of_morphisms(const GraphMorphism& f, const GraphMorphism& g);

// fold X+X -> X; composing with either inclusion gives the identity exactly
GraphMorphism codiagonal(const Graph& g);

// pushout of cospan legs f, g with a shared domain: quotient of the coproduct
// by the relation generated by f(a) ~ g(a), representatives being the minimum
// id of each class
CoconeResult pushout(const GraphMorphism& f, const GraphMorphism& g);

// pullback of f, g with a shared codomain: agreeing pairs, with ids assigned
// 0,1,2,... in lexicographic order of the pair
ConeResult pullback(const GraphMorphism& f, const GraphMorphism& g);

// mediating map out of a pushout, determined by a commuting cocone (u, v)
GraphMorphism induced_from_pushout(const CoconeResult& po, const GraphMorphism& u,
                                   const GraphMorphism& v);

// mediating map into a pullback, determined by a commuting cone (u, v)
GraphMorphism induced_into_pullback(const ConeResult& pb, const GraphMorphism& u,
                                    const GraphMorphism& v);

enum class SquareKind { pushout, pullback };

inline constexpr std::uint64_t k_universal_cap = 4'000'000;

// Brute-force oracle for "this commuting square is a (co)limit", independent of
// the constructions above. Pushout squares (f: A->B, g: A->C, h1: B->P, h2: C->P)
// are probed with the canonical cocone into P, the cocone into the joint image
// subgraph, and every commuting cocone into the two classifying targets (two
// nodes with one edge per ordered pair; one node with two parallel loops);
// each probed cocone must admit exactly one mediating morphism. Pullback squares
// (f: B->D, g: C->D, h1: P->B, h2: P->C) are probed with the representables:
// every commuting node pair and edge pair must be hit by exactly one element of P,
// plus the canonical cone. Work is charged against cap; exceeding it raises
// BudgetError rather than answering.
bool verify_universal_property(SquareKind kind, const GraphMorphism& f, const GraphMorphism& g,
                               const GraphMorphism& h1, const GraphMorphism& h2,
                               std::uint64_t cap = k_universal_cap);

// fault injection points for the self-check suite; see the mutation tests.
// Production code never sets these.
namespace fault {
extern std::atomic<bool> disable_pushout_quotient;
extern std::atomic<bool> corrupt_pullback_pairing;
}  // namespace fault

}  // namespace og
