#pragma once

#include "ordkit/setoid.hpp"

#include <string>

namespace ordkit {

/// Verdicts for every order axiom on one strict relation. Witness tuples:
/// asymmetry (x, y), transitivity (x, y, z), cotransitivity (x, y, z),
/// both antisymmetries (x, y), discreteness (x, y).
struct AxiomProfile
{
    Verdict asymmetric;
    Verdict transitive;
    Verdict cotransitive;
    Verdict neg_antisymmetric;
    Verdict pos_antisymmetric;
    Verdict discrete;

    /// Asymmetric, transitive and positively antisymmetric.
    bool is_generalized_ordered() const;
    /// Asymmetric, cotransitive and negatively antisymmetric.
    bool is_ordered_set() const;
    /// Letters "ATCNPD" in field order, '-' where the axiom fails.
    std::string key() const;

    bool same_verdicts(const AxiomProfile &other) const;
};

Verdict check_asymmetry(const StrictRel &r);
Verdict check_transitivity(const StrictRel &r);
Verdict check_cotransitivity(const StrictRel &r);
Verdict check_neg_antisymmetry(const StrictRel &r);
/// Recomputes ≤_P on every call.
Verdict check_pos_antisymmetry(const StrictRel &r);
Verdict check_discrete(const StrictRel &r);

AxiomProfile classify(const StrictRel &r);

/// Verdicts for the poset axioms of a `∼` relation.
struct PosetProfile
{
    Verdict reflexive;     // witness (x)
    Verdict transitive;    // witness (x, y, z)
    Verdict antisymmetric; // witness (x, y)

    bool is_poset() const { return reflexive.holds && transitive.holds && antisymmetric.holds; }
};

PosetProfile check_poset(const PosetRel &p);
Verdict check_total(const PosetRel &p);

/// Always holds: equality on a finite carrier given as a class map is
/// decided by comparing representatives. Kept so that the totality and
/// decidability hypotheses can be stated side by side.
Verdict check_decidable_eq(const Setoid &s);

/// Re-evaluates the named axiom at the witness tuple; true iff the tuple
/// really violates it.
bool witness_violates_asymmetry(const StrictRel &r, const std::vector<Index> &w);
bool witness_violates_transitivity(const StrictRel &r, const std::vector<Index> &w);
bool witness_violates_cotransitivity(const StrictRel &r, const std::vector<Index> &w);
bool witness_violates_neg_antisymmetry(const StrictRel &r, const std::vector<Index> &w);
bool witness_violates_pos_antisymmetry(const StrictRel &r, const std::vector<Index> &w);
bool witness_violates_discrete(const StrictRel &r, const std::vector<Index> &w);

} // namespace ordkit
