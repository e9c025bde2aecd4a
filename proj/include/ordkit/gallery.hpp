#pragma once

#include "ordkit/axioms.hpp"
#include "ordkit/setoid.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ordkit {

/// Classical stand-in for an arbitrary proposition P.
struct OracleBool
{
    bool value = false;
};

struct GalleryCheck
{
    std::string name;
    bool holds = false;
};

struct GalleryInstance
{
    std::string name;
    std::variant<StrictRel, PosetRel> relation;
};

/// Result of one gallery run. For parameterised galleries `oracle` holds the
/// value of P and `revealed` names the proposition the decision procedure
/// selected ("P", "not P", "not not P"); `consistent` records that it agrees
/// with the oracle.
struct GalleryReport
{
    std::string name;
    std::optional<bool> oracle;
    std::string revealed;
    std::string detail;
    bool consistent = true;
    std::vector<GalleryCheck> checks;
    std::vector<GalleryInstance> instances;

    bool passed() const;
};

/// {a,b,c} with only a < b: generalized ordered but not cotransitive.
struct NonCotransitiveExample
{
    StrictRel relation;
    AxiomProfile profile;
    GalleryReport report;
};

NonCotransitiveExample gallery_non_cotransitive();

/// {a,b,c} with a<b, a<c iff P, c<b iff not P. ≤_N ⊆ ≤_P holds either way;
/// deciding cotransitivity of a<b at c reveals not-not-P or not-P.
GalleryReport gallery_weak_orders_cotransitivity(OracleBool p);

/// X = {0,1} ordered by P, Y = {0<1}; cotransitivity of (0,0) < (0,1) in
/// the lexicographic product at a point of S×Y decides P.
GalleryReport gallery_lex_cotransitivity(OracleBool p);

/// {a,b} with a<b iff P and a=b iff not P. a ≤_P b always; when a ≠ b the
/// strictness rule yields a<b, which reveals P.
GalleryReport gallery_strict_from_leq(OracleBool p);

/// Two-element poset with a∼b iff not P and b∼a iff P. The star condition
/// holds; the totality disjunct that fires reveals not-P or not-not-P.
GalleryReport gallery_star_totality(OracleBool p);

/// Discrete poset on {a,b}: the bridge relation is empty, a ≤_P b and
/// b ≤_P a hold, and positive antisymmetry fails at (a,b).
GalleryReport gallery_poset_bridge_failure();

/// Classical two-point model of propositions: {0,1} with 0<1.
GalleryReport gallery_two_point_prop();

std::vector<std::string_view> gallery_names();
/// Runs one named gallery (both oracle values where applicable). Throws
/// OrdError for an unknown name.
std::vector<GalleryReport> run_gallery(std::string_view name);
std::vector<GalleryReport> run_all_galleries();

} // namespace ordkit
