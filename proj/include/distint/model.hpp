#pragma once

#include "distint/bigint.hpp"

#include <string>
#include <utility>
#include <vector>

namespace distint {

// One group of equal-size parts: `count` parts of `size` vertices each.
struct PartGroup {
  BigInt size;
  BigInt count;

  friend bool operator==(const PartGroup&, const PartGroup&) = default;
};

// Grouped complete multipartite graph K_{a1*p1,...,as*ps}.
// Invariants: sizes strictly increasing, all sizes and counts >= 1,
// n and part_count always consistent with parts.
struct PartitionSpec {
  std::vector<PartGroup> parts;
  BigInt n;           // total vertices
  BigInt part_count;  // total number of parts

  std::size_t s() const { return parts.size(); }

  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

struct ScaleFactor {
  BigInt q;  // >= 1
};

// Validates parts and fills in the derived totals. Throws InvalidSpec.
PartitionSpec make_spec(std::vector<PartGroup> parts);

// Convenience: build from parallel size/count vectors.
PartitionSpec make_spec(const std::vector<BigInt>& sizes,
                        const std::vector<BigInt>& counts);

// Groups a multiset of part sizes into a PartitionSpec (sizes sorted
// ascending, counts = multiplicities). Throws InvalidSpec on empty input or
// non-positive entries.
PartitionSpec group(const std::vector<BigInt>& multiset);

// Expands back to the sorted multiset of part sizes. Only sensible for
// specs small enough to materialize.
std::vector<BigInt> ungroup(const PartitionSpec& spec);

// Multiplies every part size by q.
PartitionSpec scale(const PartitionSpec& spec, const ScaleFactor& q);

struct PrimitiveReduction {
  PartitionSpec spec;  // sizes divided by their GCD
  BigInt q;            // the GCD; scale(spec, q) reproduces the input
};

PrimitiveReduction primitive_reduce(const PartitionSpec& spec);

// Parses the textual forms "a1xp1,a2xp2,..." (grouped, sizes strictly
// increasing) and "p1,p2,..." (ungrouped multiset, any order). Throws
// ParseError naming the offending token.
PartitionSpec parse_spec(const std::string& text);

// Grouped textual form, e.g. "1302x1,254x3,185x5,70x12,132x20".
std::string format_spec(const PartitionSpec& spec);

}  // namespace distint
