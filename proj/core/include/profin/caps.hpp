#pragma once

#include <cstddef>

namespace profin {

/// Size limits for the exhaustive algorithms. All are configuration; the
/// defaults are the desk-scale values the tool is tuned for.
struct Caps {
  /// Largest group order that may be built or materialized.
  std::size_t order = 10000;
  /// Largest group order on which all subgroups may be enumerated.
  std::size_t subgroup_order = 512;
  /// Hard limit on the number of subgroups produced by one enumeration.
  std::size_t subgroup_count = 200000;
  /// Largest group order for conjugate spread.
  std::size_t spread_order = 512;
  /// Largest group order for automorphism enumeration.
  std::size_t automorphism_order = 64;
  /// Hard limit on the number of automorphisms listed.
  std::size_t automorphism_count = 100000;
  /// Largest ring that is stored with full addition/multiplication tables.
  std::size_t algebra_order = 4096;

  static constexpr std::size_t kMaxOrder = 65535;
};

inline const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

}  // namespace profin
