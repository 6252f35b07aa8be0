#pragma once

#include <string>
#include <vector>

#include "wht/error.hpp"

namespace wht {

enum class SliceKind { Cup, Cap, CrossPos, CrossNeg, VertexMerge, VertexSplit, DiskGate };

// One horizontal slice of a sliced diagram. Positions are 0-based strand
// indices in the width profile below the slice.
// Crossing convention: CrossPos means the strand entering from the lower
// left exits upper right passing over.
struct Slice {
  SliceKind kind = SliceKind::Cup;
  int pos = 0;
  int color = 0;        // Cup
  int a = 0, b = 0, c = 0;  // VertexMerge (a,b)->c, VertexSplit c->(a,b)
  int span = 0;         // DiskGate
  std::string disk_id;  // DiskGate

  static Slice cup(int pos, int color);
  static Slice cap(int pos);
  static Slice cross(int pos, int sign);
  static Slice vmerge(int pos, int a, int b, int c);
  static Slice vsplit(int pos, int c, int a, int b);
  static Slice disk(std::string id, int pos, int span);
};

// Sliced presentation of a colored banded trivalent graph in a wormhole
// space; DiskGate slices mark the dotted surgery circles. Framing is the
// blackboard framing.
struct Diagram {
  std::vector<int> bottom_colors;
  std::vector<int> top_colors;
  std::vector<Slice> slices;

  bool closed() const { return bottom_colors.empty() && top_colors.empty(); }
  int gate_count() const;
  std::vector<std::string> gate_ids() const;
};

Diagram parse_dsl(const std::string& text);
std::string pretty_dsl(const Diagram& d);

// Re-checks all slice invariants; throws the first violation.
void validate(const Diagram& d);
// Collects all violations instead of throwing.
std::vector<Error> validate_all(const Diagram& d);

// Color profile before each slice plus the final profile
// (size slices.size() + 1). Throws on an inconsistent diagram.
std::vector<std::vector<int>> width_profile(const Diagram& d);

Diagram mirror(const Diagram& d);
Diagram disjoint_union(const Diagram& d1, const Diagram& d2);
Diagram compose_vertical(const Diagram& d1, const Diagram& d2);
// Reflection across a horizontal line; swaps cups/caps and vertex kinds,
// preserves crossing signs, reverses the slice order.
Diagram vertical_flip(const Diagram& d);
// Closed diagram joining bottom point i to top point i by nested side arcs.
Diagram closure_of_tangle(const Diagram& d);

// Replace the named DiskGate by an encircling belt colored belt_color:
// a round unknot whose front arc passes over the spanned strands and whose
// back arc passes under (mirror_belt swaps over/under).
Diagram expand_gate_to_belt(const Diagram& d, const std::string& disk_id,
                            int belt_color, bool mirror_belt = false);

}  // namespace wht
