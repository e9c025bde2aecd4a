#include "ordkit/derived.hpp"

#include "ordkit/axioms.hpp"

namespace ordkit {

BoolMatrix derive_leq_n(const StrictRel &r)
{
    const std::size_t n = r.size();
    BoolMatrix m(n);
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            m.set(x, y, !r.less(y, x));
    return m;
}

BoolMatrix derive_leq_p(const StrictRel &r)
{
    const std::size_t n = r.size();
    BoolMatrix m(n);
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            bool holds = true;
            for (Index z = 0; z < n && holds; ++z) {
                if (r.less(z, x) && !r.less(z, y))
                    holds = false;
                else if (r.less(y, z) && !r.less(x, z))
                    holds = false;
            }
            m.set(x, y, holds);
        }
    return m;
}

DerivedOrder derive(const StrictRel &r)
{
    return DerivedOrder{r, derive_leq_n(r), derive_leq_p(r)};
}

WeakOrderComparison compare_weak_orders(const StrictRel &r)
{
    auto leq_n = derive_leq_n(r);
    auto leq_p = derive_leq_p(r);
    return WeakOrderComparison{leq_n.subset_of(leq_p), leq_p.subset_of(leq_n)};
}

PosetRel gord_to_poset(const StrictRel &r)
{
    auto profile = classify(r);
    if (!profile.asymmetric)
        throw OrdError("not a generalized ordered set: asymmetry fails");
    if (!profile.transitive)
        throw OrdError("not a generalized ordered set: transitivity fails");
    if (!profile.pos_antisymmetric)
        throw OrdError("not a generalized ordered set: positive antisymmetry fails");
    return PosetRel(r.base(), derive_leq_p(r));
}

} // namespace ordkit
