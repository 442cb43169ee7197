#pragma once

// The four infinite families H1..H4 and the generalized Petersen testbed
// GP(n,2). Vertex names: "u^(i)_j", "v_h", "w^(i)_j",
// "v^(i)_j,h", "~u^(i)_j", "z"; GP uses "u_i" (outer) and "v_i" (inner).

#include <string>
#include <span>
#include <string_view>
#include <utility>

#include "gfree/patterns.hpp"

namespace gfree {

enum class Family : std::uint8_t { H1, H2, H3, H4, GP };

struct FamilyGraph {
  Family family = Family::H1;
  int param = 0;
  LabeledGraph labeled;

  const Graph& graph() const { return labeled.graph; }
};

/// s 6-cycles plus v_1, v_2, v_3 with u^(i)_j ~ v_h iff j = h (mod 3).
/// Order 6s+3. Connected, {C3,C4}-free, min degree 3 for s >= 2.
FamilyGraph h1(int s);
/// s copies of A (two 5-cycles joined by w_j) plus hub z. Order 15s+1.
FamilyGraph h2(int s);
/// s copies of A' joined in a ring by u^(i)_2 - u^(i+1)_1. Order 14s,
/// 3-regular. Throws ConstructionError for s < 4.
FamilyGraph h3(int s);
/// s copies B_i of H1_1 plus hub z adjacent to every v^(i)_h. Order 9s+1.
FamilyGraph h4(int s);
/// GP(n,2): u_i = i, v_i = n+i. Throws ConstructionError unless n is odd,
/// n >= 5, and the result is {C3,C4}-free and 3-regular.
FamilyGraph gp(int n);

/// "h1:5", "h2:3", "h3:4", "h4:3", "gp:25". Unknown prefixes and malformed
/// parameters throw UsageError.
FamilyGraph make_family(std::string_view spec);
std::string family_name(Family f);

/// The 20 edges of A' as (name, name) pairs, without the copy superscript.
std::span<const std::pair<const char*, const char*>> a_prime_edges();

}  // namespace gfree
