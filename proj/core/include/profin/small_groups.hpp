#pragma once

#include <cstdint>

#include "profin/group.hpp"

namespace profin::groups {

GroupPtr cyclic(std::size_t n);
GroupPtr symmetric(std::size_t n);
GroupPtr alternating(std::size_t n);
/// Dihedral group of order 2n acting on an n-gon.
GroupPtr dihedral(std::size_t n);
GroupPtr klein_four();
GroupPtr quaternion();
GroupPtr elementary_abelian(std::uint32_t p, std::size_t rank);
/// Upper unitriangular 3x3 matrices over GF(p); order p^3, class 2.
/// Elements (a, b, c) are encoded as a + p b + p^2 c with
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b').
GroupPtr heisenberg(std::uint32_t p);
/// Z_{p^2} x| Z_p with the generator of Z_p acting as multiplication by 1+p.
/// For p = 2 this is the dihedral group of order 8.
GroupPtr extraspecial_cyclic(std::uint32_t p);

}  // namespace profin::groups
