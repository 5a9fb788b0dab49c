// The classification posets T(I,2).
//
// Fix a support I inside the simple roots with alpha_r outside I and let
// lambda_I be the sum of the fundamental weights over I.  The vectors
//
//   T(I,2) = { theta in N-Delta : Supp(theta^+) inside I, a_r odd,
//              a_r < 2 min{ r - l(theta), r - q(I) } }
//
// are the possible "second generators" of the non-normal simple
// compactifications with support I: the isomorphism classes correspond to
// the antichains of T(I,2) under the lambda_I-order.  The poset is usually
// infinite, so every enumeration carries an explicit coefficient bound and
// reports which vertices might still acquire covering edges beyond it.

#pragma once

#include <string>
#include <utility>

#include "orthocompact/orders.hpp"

namespace orthocompact {

// theta_I = alpha_{q(I)} + ... + alpha_r, the minimal element of T(I,2).
// Requires I nonempty without alpha_r; errors OutOfRange otherwise.
RootVec theta_I(const RankedContext& ctx, const IndexSet& I);

// All members of T(I,2) with every coefficient at most bound, sorted by
// (coefficient sum, lexicographic).  I must be a nonempty valid support;
// alpha_r in I yields the empty set (the corresponding varieties are all
// normal), which is returned, not raised.
std::vector<RootVec> enum_T2(const RankedContext& ctx, const IndexSet& I, int bound);

struct HassePoset {
  int r = 0;
  IndexSet support;
  int bound = 0;
  bool truncated = false;                   // more vertices exist beyond the bound
  std::vector<RootVec> vertices;            // canonical order
  std::vector<std::pair<int, int>> edges;   // covering pairs (from, to), vertex indices
  std::vector<int> boundary;                // vertices whose covers may exceed the bound
};

// Covering edges of the lambda_I-order on the given vertices (as produced
// by enum_T2).  Edges between in-bound vertices are exact: any chain
// between them stays componentwise below its top endpoint.
HassePoset hasse(const RankedContext& ctx, const IndexSet& I,
                 const std::vector<RootVec>& vertices);

// enum_T2 + hasse + boundary marking in one step, the CLI's poset command.
// Boundary vertices are those with a coefficient at bound-1 or above, or
// with a cover inside the enlarged working set (bound + 2) that the bound
// cut off.
HassePoset poset_T2(const RankedContext& ctx, const IndexSet& I, int bound);

// All antichains of size at most max_size (the empty one included),
// as sorted vertex-index lists in lexicographic order.  Each antichain A
// is the classification datum of one isomorphism class, the compactification
// generated by lambda_I and the classes of A.
std::vector<std::vector<int>> enum_antichains(const RankedContext& ctx,
                                              const HassePoset& poset, int max_size);

enum class RenderFormat { Text, Dot, Json };

// Deterministic rendering.  Text mimics the tabular layout (tuples and
// arrows); dot is a digraph; json carries the schema header plus vertices,
// edges and boundary.
std::string render(const HassePoset& poset, RenderFormat format);

}  // namespace orthocompact
