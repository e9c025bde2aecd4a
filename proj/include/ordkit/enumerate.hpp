#pragma once

#include "ordkit/setoid.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ordkit {

enum class EqualityMode
{
    Identity,
    AllPartitions,
};

std::string to_string(EqualityMode m);
/// Accepts "identity" and "all-partitions".
EqualityMode parse_equality_mode(std::string_view s);

/// Largest carrier size enumerate() accepts: 4 for identity, 3 for all
/// partitions, or the integer in ORDKIT_MAX_ENUM when set.
std::size_t enumeration_bound(EqualityMode mode);

/// Setoids on n elements labelled a, b, c, ...: the identity only, or one
/// per set partition in restricted-growth order.
std::vector<Setoid> setoids_of_size(std::size_t n, EqualityMode mode);

/// Visits every well-defined relation on every setoid of size n, in setoid
/// order then matrix bit order. Returns the number of raw matrices seen.
std::uint64_t for_each_relation(std::size_t n, EqualityMode mode, const std::function<void(const StrictRel &)> &visit);

struct TheoremTally
{
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
};

struct TheoremViolation
{
    std::string theorem;
    std::string instance;
};

/// A named search result: how many instances matched and the canonical
/// first one (smallest carrier, then smallest matrix bit string, per
/// operand for pairs).
struct InventoryEntry
{
    std::string name;
    std::uint64_t count = 0;
    std::uint64_t searched = 0;
    std::vector<StrictRel> example;
};

struct EnumerationSummary
{
    std::size_t carrier_size = 0;
    EqualityMode equality_mode = EqualityMode::Identity;
    std::size_t setoid_count = 0;
    std::uint64_t total_relations = 0;
    std::uint64_t well_defined_count = 0;
    std::uint64_t generalized_ordered_count = 0;
    std::uint64_t ordered_set_count = 0;
    std::uint64_t poset_count = 0;
    std::map<std::string, std::uint64_t> counts_by_axiom_profile;
    std::vector<TheoremTally> tallies;
    std::vector<TheoremViolation> theorem_violations;
    std::vector<InventoryEntry> counterexample_inventory;

    const TheoremTally *tally(std::string_view name) const;
    const InventoryEntry *inventory(std::string_view name) const;
    bool operator==(const EnumerationSummary &) const;
};

/// Exhaustive theorem battery over carriers of exactly `n` elements.
/// Product batteries pair structures of every size up to n whose product
/// has at most kMaxProductSize elements. Throws OrdError above the bound.
EnumerationSummary enumerate(std::size_t n, EqualityMode mode);

inline constexpr std::size_t kMaxProductSize = 9;
/// Largest factor drawn from the unrestricted population when an arbitrary
/// relation is paired with an ordered set in the coarse-product battery.
inline constexpr std::size_t kMaxArbitraryFactor = 3;

} // namespace ordkit
