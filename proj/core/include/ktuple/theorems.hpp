#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ktuple/domatic.hpp"
#include "ktuple/graph.hpp"
#include "ktuple/invariants.hpp"

namespace ktuple {

enum class CheckStatus { holds, sharp, violated, not_applicable };

std::string_view to_string(CheckStatus status);

/// One evaluated bound. lhs/rhs are exact rationals rendered as "p" or "p/q".
struct CheckRecord {
  std::string id;
  std::string statement;
  std::string lhs;
  std::string rhs;
  CheckStatus status = CheckStatus::not_applicable;
  std::string notes;
};

/// Identifiers of the evaluated checks, in report order:
///   C1        γ×k·d×k <= n; at equality every witness class is minimum
///   C2        d×k <= (δ+1)/k; at equality minimum-degree closed
///             neighborhoods meet each class in exactly k vertices
///   C3        d×k <= n/(k-1), k >= 2; at equality γ×k = k-1
///   C4        bipartite: d×k <= n/(2k-2), equality iff K_{k-1,k-1}
///   C5        γ×k + d×k <= n+1
///   C5b       γ×k + d×k <= n/2+2 when d×k >= 2
///   C6        k-1 <= δ <= 2k-2 forces d×k = 1
///   C7        d×k(G) + d×k(Ḡ) <= (n+1)/k, with the regularity and class
///             size consequences at exact equality
///   C8        d×k >= ⌊n/(k(n-δ))⌋
///   C9.lower  d×k,t <= d×k
///   C9.upper  d×k <= 2·d×k,t
///   C10       bipartite: γ×k >= 2k-2, equality iff K_{k-1,k-1}
///   C11       least t admitting a k-join decomposition equals γ×k
inline constexpr std::string_view kCheckIds[] = {"C1", "C2", "C3",       "C4",       "C5",  "C5b", "C6",
                                                 "C7", "C8", "C9.lower", "C9.upper", "C10", "C11"};

struct TheoremReport {
  InvariantReport invariants;
  std::size_t complement_min_degree = 0;
  std::optional<DomaticResult> complement_domatic;
  /// Smallest class of the witness partition used in the C7 equality
  /// analysis; set only when that analysis ran.
  std::optional<std::size_t> r;
  std::vector<CheckRecord> checks;

  const CheckRecord& check(std::string_view id) const;
  bool has_violation() const;
  std::size_t count(CheckStatus status) const;
};

/// Computes every invariant the checks need and evaluates C1..C11. Checks
/// whose hypotheses fail are recorded as not_applicable; nothing throws for
/// a degree gate. All comparisons are in exact rationals.
TheoremReport verify_all(const Graph& g, int k);

/// (k-1)-regular bipartite graph on 2k-2 vertices with (k-1)^2 edges.
bool has_kk_minus_one_signature(const Graph& g, int k);

}  // namespace ktuple
