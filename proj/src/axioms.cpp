#include "ordkit/axioms.hpp"

#include "ordkit/derived.hpp"

namespace ordkit {

namespace {

    Verdict transitive_matrix(const BoolMatrix &m)
    {
        const std::size_t n = m.size();
        for (Index x = 0; x < n; ++x)
            for (Index y = 0; y < n; ++y) {
                if (!m(x, y))
                    continue;
                for (Index z = 0; z < n; ++z)
                    if (m(y, z) && !m(x, z))
                        return Verdict::fail({x, y, z});
            }
        return Verdict::pass();
    }

    // Mutual membership in `m` forces equality.
    Verdict antisymmetric_matrix(const Setoid &base, const BoolMatrix &m)
    {
        const std::size_t n = m.size();
        for (Index x = 0; x < n; ++x)
            for (Index y = 0; y < n; ++y)
                if (m(x, y) && m(y, x) && !base.eq(x, y))
                    return Verdict::fail({x, y});
        return Verdict::pass();
    }

} // namespace

bool AxiomProfile::is_generalized_ordered() const
{
    return asymmetric.holds && transitive.holds && pos_antisymmetric.holds;
}

bool AxiomProfile::is_ordered_set() const
{
    return asymmetric.holds && cotransitive.holds && neg_antisymmetric.holds;
}

std::string AxiomProfile::key() const
{
    std::string k = "ATCNPD";
    const Verdict *vs[] = {&asymmetric, &transitive, &cotransitive, &neg_antisymmetric, &pos_antisymmetric, &discrete};
    for (std::size_t i = 0; i < 6; ++i)
        if (!vs[i]->holds)
            k[i] = '-';
    return k;
}

bool AxiomProfile::same_verdicts(const AxiomProfile &other) const
{
    return key() == other.key();
}

Verdict check_asymmetry(const StrictRel &r)
{
    for (Index x = 0; x < r.size(); ++x)
        for (Index y = 0; y < r.size(); ++y)
            if (r.less(x, y) && r.less(y, x))
                return Verdict::fail({x, y});
    return Verdict::pass();
}

Verdict check_transitivity(const StrictRel &r)
{
    return transitive_matrix(r.matrix());
}

Verdict check_cotransitivity(const StrictRel &r)
{
    const std::size_t n = r.size();
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            if (!r.less(x, y))
                continue;
            for (Index z = 0; z < n; ++z)
                if (!r.less(x, z) && !r.less(z, y))
                    return Verdict::fail({x, y, z});
        }
    return Verdict::pass();
}

Verdict check_neg_antisymmetry(const StrictRel &r)
{
    for (Index x = 0; x < r.size(); ++x)
        for (Index y = 0; y < r.size(); ++y)
            if (!r.less(x, y) && !r.less(y, x) && !r.eq(x, y))
                return Verdict::fail({x, y});
    return Verdict::pass();
}

Verdict check_pos_antisymmetry(const StrictRel &r)
{
    return antisymmetric_matrix(r.base(), derive_leq_p(r));
}

Verdict check_discrete(const StrictRel &r)
{
    for (Index x = 0; x < r.size(); ++x)
        for (Index y = 0; y < r.size(); ++y)
            if (!r.less(x, y) && !r.eq(x, y) && !r.less(y, x))
                return Verdict::fail({x, y});
    return Verdict::pass();
}

AxiomProfile classify(const StrictRel &r)
{
    return AxiomProfile{
        check_asymmetry(r),
        check_transitivity(r),
        check_cotransitivity(r),
        check_neg_antisymmetry(r),
        check_pos_antisymmetry(r),
        check_discrete(r),
    };
}

PosetProfile check_poset(const PosetRel &p)
{
    PosetProfile out;
    for (Index x = 0; x < p.size(); ++x)
        if (!p.sim(x, x)) {
            out.reflexive = Verdict::fail({x});
            break;
        }
    out.transitive = transitive_matrix(p.matrix());
    out.antisymmetric = antisymmetric_matrix(p.base(), p.matrix());
    return out;
}

Verdict check_total(const PosetRel &p)
{
    for (Index x = 0; x < p.size(); ++x)
        for (Index y = 0; y < p.size(); ++y)
            if (!p.sim(x, y) && !p.sim(y, x))
                return Verdict::fail({x, y});
    return Verdict::pass();
}

Verdict check_decidable_eq(const Setoid &)
{
    return Verdict::pass();
}

namespace {

    bool in_range(const StrictRel &r, const std::vector<Index> &w, std::size_t arity)
    {
        if (w.size() != arity)
            return false;
        for (Index i : w)
            if (i >= r.size())
                return false;
        return true;
    }

} // namespace

bool witness_violates_asymmetry(const StrictRel &r, const std::vector<Index> &w)
{
    return in_range(r, w, 2) && r.less(w[0], w[1]) && r.less(w[1], w[0]);
}

bool witness_violates_transitivity(const StrictRel &r, const std::vector<Index> &w)
{
    return in_range(r, w, 3) && r.less(w[0], w[1]) && r.less(w[1], w[2]) && !r.less(w[0], w[2]);
}

bool witness_violates_cotransitivity(const StrictRel &r, const std::vector<Index> &w)
{
    return in_range(r, w, 3) && r.less(w[0], w[1]) && !r.less(w[0], w[2]) && !r.less(w[2], w[1]);
}

bool witness_violates_neg_antisymmetry(const StrictRel &r, const std::vector<Index> &w)
{
    return in_range(r, w, 2) && !r.less(w[0], w[1]) && !r.less(w[1], w[0]) && !r.eq(w[0], w[1]);
}

bool witness_violates_pos_antisymmetry(const StrictRel &r, const std::vector<Index> &w)
{
    if (!in_range(r, w, 2))
        return false;
    auto leq_p = derive_leq_p(r);
    return leq_p(w[0], w[1]) && leq_p(w[1], w[0]) && !r.eq(w[0], w[1]);
}

bool witness_violates_discrete(const StrictRel &r, const std::vector<Index> &w)
{
    return in_range(r, w, 2) && !r.less(w[0], w[1]) && !r.eq(w[0], w[1]) && !r.less(w[1], w[0]);
}

} // namespace ordkit
