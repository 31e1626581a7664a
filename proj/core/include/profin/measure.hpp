#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "profin/group.hpp"
#include "profin/rational.hpp"

namespace profin {

struct CommutingStats {
  std::string name;
  std::size_t order = 0;
  BigInt pairs;
  Rational fraction;
  std::size_t class_count = 0;
};

/// Counts commuting pairs as the sum of centralizer sizes and cross-checks
/// the total against order x class count.
CommutingStats commuting_pairs(const GroupPtr& group, const Caps& caps = default_caps());

struct NeumannWitness {
  std::string group;
  Subgroup k;
  Subgroup n;
  /// |K| * |L:N|^2
  BigInt value;
  std::size_t k_size = 0;
  std::size_t n_index = 0;
  /// |[N, N]|
  std::size_t n_commutator = 0;
  std::size_t admissible_pairs = 0;
  BigInt pairs;
  /// pairs * value >= |L|^2
  bool bound_holds = false;
};

/// Normal K <= N with N/K abelian minimising |K| * |L:N|^2. Ties go to the
/// smaller K, then the larger N, then the lexicographically smaller element
/// lists (K first). K = N is admissible.
NeumannWitness neumann_search(const GroupPtr& group, const Caps& caps = default_caps());

/// Max over subgroups H of the Pruefer rank of H / core(H).
std::size_t core_quotient_rank(const GroupPtr& group, const Caps& caps = default_caps());

struct ExteriorReport {
  std::string group;
  std::uint32_t p = 0;
  std::vector<ElementId> w_elements;
  std::size_t dim_u = 0;
  std::size_t dim_wedge = 0;
  std::size_t dim_w = 0;
  std::size_t rank_f = 0;
  std::size_t dim_kernel = 0;
  /// Lifts of the chosen basis of U = L/W.
  std::vector<ElementId> basis_lifts;
  /// floor(dim_kernel / dim_u); empty when dim_u = 0 (no finite maximum).
  std::optional<std::size_t> k;
};

/// Builds f_L : Lambda^2(L/W) -> W for W = [L, L] and reports its kernel.
/// Throws PreconditionFailed unless L is a p-group with W central and both
/// W and L/W elementary abelian.
ExteriorReport rho_wedge(const GroupPtr& group);

/// Whether rho_wedge's hypotheses hold (without throwing).
bool wedge_applicable(const GroupPtr& group);

enum class RhoKind { com, r, wedge };

struct RhoEntry {
  std::size_t order = 0;
  /// Empty means infinity: no applicable corpus group of this order.
  std::optional<BigInt> value;
  std::vector<std::string> groups;
};

struct RhoTable {
  RhoKind kind = RhoKind::com;
  std::string mode;
  std::vector<RhoEntry> entries;
};

/// Entries for every order 1..max_order (max_order = 0 means the largest
/// corpus order).
///   com:   min over groups of order i of the commuting-pair count;
///   r:     max over groups of order i of core_quotient_rank;
///   wedge: min over groups of order i satisfying rho_wedge's hypotheses
///          with dim U > 0 of the k value.
RhoTable rho_table(const std::vector<GroupPtr>& corpus, RhoKind kind, std::size_t max_order = 0,
                   const std::string& mode = "quotients", const Caps& caps = default_caps());

std::string to_string(RhoKind kind);
RhoKind parse_rho_kind(const std::string& text);

struct InequalityOneRow {
  std::size_t order = 0;
  std::size_t rho_r = 0;
  BigInt beta;
  /// beta^-2 * i^2
  Rational lhs;
  BigInt rho_com;
  bool holds = false;
};

struct InequalityTwoRow {
  std::size_t order = 0;
  std::uint32_t p = 0;
  std::size_t log_p_order = 0;
  std::size_t rho_wedge = 0;
  /// The left side is p^(exponent2 / 2).
  std::int64_t exponent2 = 0;
  Rational lhs_squared;
  BigInt rho_com;
  /// min over groups of order i of i^2 / |W|
  Rational intermediate;
  bool lhs_below_intermediate = false;
  bool intermediate_holds = false;
  bool holds = false;
};

struct InequalityReport {
  std::vector<InequalityOneRow> one;
  std::vector<InequalityTwoRow> two;
  /// Orders skipped for (2), with the reason.
  std::vector<std::pair<std::size_t, std::string>> two_skipped;
  bool all_hold = true;
};

/// (1) for every corpus order when `beta` is given (throws InvalidInput on a
/// missing entry); (2) for every order whose groups all satisfy rho_wedge's
/// hypotheses with dim U > 0.
InequalityReport verify_inequalities(const std::vector<GroupPtr>& corpus,
                                     const std::optional<std::map<std::size_t, BigInt>>& beta,
                                     const Caps& caps = default_caps());

struct EpsilonMember {
  std::string name;
  std::size_t order = 0;
  Rational fraction;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

struct EpsilonReport {
  Rational epsilon;
  std::vector<EpsilonMember> members;
  /// Fractions strictly decrease along the family.
  bool fraction_decay = false;
  /// n1^2 * n2 strictly increases along the family.
  bool witness_growth = false;
};

EpsilonReport epsilon_evidence(const std::vector<GroupPtr>& family, const Caps& caps = default_caps());

}  // namespace profin
