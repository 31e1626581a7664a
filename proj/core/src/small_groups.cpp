#include "profin/small_groups.hpp"

#include "profin/errors.hpp"
#include "profin/structure.hpp"

namespace profin::groups {

namespace {

Permutation cycle_on(std::size_t degree, std::uint32_t first, std::uint32_t last) {
  std::vector<std::uint32_t> cycle;
  for (auto i = first; i <= last; ++i) cycle.push_back(i);
  return Permutation::from_cycles(degree, {cycle});
}

std::vector<std::vector<ElementId>> table_from(std::size_t n, auto&& mul) {
  std::vector<std::vector<ElementId>> table(n, std::vector<ElementId>(n));
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) table[a][b] = mul(a, b);
  }
  return table;
}

}  // namespace

GroupPtr cyclic(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic group of order 0");
  std::vector<Permutation> gens;
  if (n > 1) gens.push_back(cycle_on(n, 0, static_cast<std::uint32_t>(n - 1)));
  return FiniteGroup::from_permutations("Z" + std::to_string(n), n, gens);
}

GroupPtr symmetric(std::size_t n) {
  if (n == 0) throw InvalidInput("symmetric group on 0 points");
  std::vector<Permutation> gens;
  if (n > 1) {
    gens.push_back(cycle_on(n, 0, 1));
    gens.push_back(cycle_on(n, 0, static_cast<std::uint32_t>(n - 1)));
  }
  return FiniteGroup::from_permutations("S" + std::to_string(n), n, gens);
}

GroupPtr alternating(std::size_t n) {
  if (n == 0) throw InvalidInput("alternating group on 0 points");
  std::vector<Permutation> gens;
  for (std::uint32_t k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return FiniteGroup::from_permutations("A" + std::to_string(n), n, gens);
}

GroupPtr dihedral(std::size_t n) {
  if (n < 3) throw InvalidInput("dihedral group needs n >= 3");
  std::vector<std::uint32_t> reflection(n);
  for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<std::uint32_t>((n - i) % n);
  std::vector<Permutation> gens{cycle_on(n, 0, static_cast<std::uint32_t>(n - 1)),
                                Permutation(reflection)};
  return FiniteGroup::from_permutations("D" + std::to_string(2 * n), n, gens);
}

GroupPtr klein_four() {
  std::vector<Permutation> gens{Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                Permutation::from_cycles(4, {{0, 2}, {1, 3}})};
  return FiniteGroup::from_permutations("V4", 4, gens);
}

GroupPtr quaternion() {
  std::vector<Permutation> gens{Permutation::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}),
                                Permutation::from_cycles(8, {{0, 4, 2, 6}, {1, 7, 3, 5}})};
  return FiniteGroup::from_permutations("Q8", 8, gens);
}

GroupPtr elementary_abelian(std::uint32_t p, std::size_t rank) {
  if (!is_prime(p)) throw InvalidInput("elementary_abelian: p must be prime");
  auto base = cyclic(p);
  return direct_power(base, rank)->renamed("E" + std::to_string(p) + "^" + std::to_string(rank));
}

GroupPtr heisenberg(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidInput("heisenberg: p must be prime");
  const std::size_t n = std::size_t{p} * p * p;
  auto mul = [p](ElementId x, ElementId y) {
    ElementId a = x % p, b = (x / p) % p, c = x / (p * p);
    ElementId a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
    ElementId ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
    return ra + p * rb + p * p * rc;
  };
  return FiniteGroup::from_table("Heis" + std::to_string(n), table_from(n, mul));
}

GroupPtr extraspecial_cyclic(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidInput("extraspecial_cyclic: p must be prime");
  const std::uint32_t m = p * p;
  const std::size_t n = std::size_t{m} * p;
  // (a, b) encoded as a + m b; (a,b)(a',b') = (a + a' (1+p)^b, b + b').
  auto mul = [p, m](ElementId x, ElementId y) {
    ElementId a = x % m, b = x / m, a2 = y % m, b2 = y / m;
    ElementId twist = 1;
    for (ElementId i = 0; i < b; ++i) twist = twist * (1 + p) % m;
    return (a + a2 * twist) % m + m * ((b + b2) % p);
  };
  return FiniteGroup::from_table("Ext" + std::to_string(n) + "c", table_from(n, mul));
}

}  // namespace profin::groups
