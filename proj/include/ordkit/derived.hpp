#pragma once

#include "ordkit/setoid.hpp"

namespace ordkit {

/// x ≤_N y iff not y < x.
BoolMatrix derive_leq_n(const StrictRel &r);

/// x ≤_P y iff for every z: z < x implies z < y, and y < z implies x < z.
/// The quantifier ranges over every carrier element.
BoolMatrix derive_leq_p(const StrictRel &r);

struct DerivedOrder
{
    StrictRel base;
    BoolMatrix leq_n;
    BoolMatrix leq_p;
};

DerivedOrder derive(const StrictRel &r);

/// Elementwise inclusions between the two weak orders. Witnesses are the
/// first differing pair in row-major order.
struct WeakOrderComparison
{
    Verdict n_subset_of_p;
    Verdict p_subset_of_n;

    bool equal() const { return n_subset_of_p.holds && p_subset_of_n.holds; }
};

WeakOrderComparison compare_weak_orders(const StrictRel &r);

/// The poset (X, ≤_P). Throws OrdError naming the failed axiom unless `r`
/// is a generalized ordered set.
PosetRel gord_to_poset(const StrictRel &r);

} // namespace ordkit
