// Text round-trips for the public grammar and the subset file format.
//
// Weights print as `w:[n1,...,nr]`, root-coordinate vectors as
// `a:[a1,...,ar]` where spin-coset entries appear as halves `p/2`.
// Simple subsets travel as JSON objects
//   {"schema":"orthocompact/1","r":r,"weights":[[n1..nr],...],"max":[n1..nr]}
// where "max" is redundant and cross-checked on input.

#pragma once

#include <string>

#include "orthocompact/compactify.hpp"
#include "orthocompact/lattice.hpp"

namespace orthocompact {

// Parses `w:[n1,...,nr]` (integer entries, at least one).
// Errors: BadFormat.
Weight parse_weight(const std::string& text);

// Parses `a:[a1,...,ar]`; entries are integers or halves written `p/2`.
// Errors: BadFormat.
RootVec parse_rootvec(const std::string& text);

// Inverse formatters; format_rootvec prints halves as `p/2`.
std::string format_weight(const Weight& w);
std::string format_rootvec(const RootVec& v);

// Parses a comma-separated list of 1-based indices, e.g. "1,2".
// Errors: BadFormat.
IndexSet parse_index_list(const std::string& text);

// A subset file carries its own rank.
struct ParsedSubset {
    int r = 0;
    SimpleSubset pi;
};

// Serializes a subset to the JSON file format (canonical key order,
// weights sorted as stored, two-space indent, trailing newline).
std::string subset_to_json_text(const RankedContext& ctx, const SimpleSubset& pi);

// Parses and validates a subset file.  Structural problems (bad JSON,
// wrong shapes, rank out of range, inconsistent "max") report BadFormat;
// semantic problems surface as the usual domain errors from
// make_simple_subset.
ParsedSubset subset_from_json_text(const std::string& text);

} // namespace orthocompact
