#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vdw/ffpoly.hpp"

namespace vdw {

/// Permutation of {0, ..., n-1} as its image list.
using Perm = std::vector<std::uint8_t>;

Perm perm_identity(int n);
/// (a·b)(i) = a(b(i)).
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
/// Cycle type as a splitting type: r_j cycles of length j.
SplittingType cycle_type(const Perm& a);
/// All n! permutations in lexicographic order.
std::vector<Perm> all_perms(int n);
/// Parses cycle notation with 1-based points, e.g. "(1 2 3)(4 5)" or "(1,2)".
Perm parse_cycles(const std::string& s, int n);
std::string cycles_str(const Perm& a);

/// Group generated by gens, elements sorted.
std::vector<Perm> perm_closure(const std::vector<Perm>& gens, int n);
bool is_transitive(const std::vector<Perm>& group, int n);

/// Named subgroups: S_n, A_n, C_n (cyclic), D_n (dihedral), V_4; or explicit
/// generators in cycle notation separated by ';'.
std::vector<Perm> named_group_generators(const std::string& name, int n);

}  // namespace vdw
