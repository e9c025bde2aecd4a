#include "ordkit/products.hpp"

#include "ordkit/derived.hpp"

#include <numeric>

namespace ordkit {

namespace {

    std::vector<std::string> pair_labels(const Setoid &a, const Setoid &b)
    {
        std::vector<std::string> labels;
        labels.reserve(a.size() * b.size());
        for (Index x = 0; x < a.size(); ++x)
            for (Index y = 0; y < b.size(); ++y)
                labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
        return labels;
    }

    Setoid pair_setoid(const Setoid &a, const Setoid &b)
    {
        const std::size_t nb = b.size();
        std::vector<Index> cls(a.size() * nb);
        for (Index x = 0; x < a.size(); ++x)
            for (Index y = 0; y < nb; ++y)
                cls[flatten({x, y}, nb)] = flatten({a.representative(x), b.representative(y)}, nb);
        return Setoid(pair_labels(a, b), std::move(cls));
    }

    template <typename Pred>
    BoolMatrix pair_matrix(std::size_t na, std::size_t nb, Pred pred)
    {
        BoolMatrix m(na * nb);
        for (Index i = 0; i < na * nb; ++i)
            for (Index j = 0; j < na * nb; ++j)
                m.set(i, j, pred(unflatten(i, nb), unflatten(j, nb)));
        return m;
    }

} // namespace

StrictRel lex_product(const StrictRel &a, const StrictRel &b)
{
    auto m = pair_matrix(a.size(), b.size(), [&](ProductElement p, ProductElement q) {
        return a.less(p.left, q.left) || (a.eq(p.left, q.left) && b.less(p.right, q.right));
    });
    return StrictRel(pair_setoid(a.base(), b.base()), std::move(m));
}

StrictRel lex_product_n(std::span<const StrictRel> parts)
{
    if (parts.empty())
        return StrictRel(Setoid::identity({"()"}), BoolMatrix(1));

    StrictRel folded = parts.back();
    std::vector<std::vector<Index>> tuples(folded.size());
    for (Index i = 0; i < folded.size(); ++i)
        tuples[i] = {i};

    for (std::size_t k = parts.size() - 1; k-- > 0;) {
        const std::size_t inner = folded.size();
        std::vector<std::vector<Index>> next;
        next.reserve(parts[k].size() * inner);
        for (Index x = 0; x < parts[k].size(); ++x)
            for (Index t = 0; t < inner; ++t) {
                std::vector<Index> tuple{x};
                tuple.insert(tuple.end(), tuples[t].begin(), tuples[t].end());
                next.push_back(std::move(tuple));
            }
        folded = lex_product(parts[k], folded);
        tuples = std::move(next);
    }

    std::vector<std::string> labels;
    labels.reserve(tuples.size());
    for (const auto &tuple : tuples) {
        std::string l = "(";
        for (std::size_t k = 0; k < tuple.size(); ++k) {
            if (k)
                l += ',';
            l += parts[k].base().label(tuple[k]);
        }
        labels.push_back(l + ")");
    }
    return StrictRel(Setoid(std::move(labels), folded.base().eq_classes()), folded.matrix());
}

StrictRel weak_lex_product(const StrictRel &a, const StrictRel &b)
{
    const auto leq_p = derive_leq_p(a);
    auto m = pair_matrix(a.size(), b.size(), [&](ProductElement p, ProductElement q) {
        if (!leq_p(p.left, q.left))
            return false;
        if (a.eq(p.left, q.left))
            return b.less(p.right, q.right);
        return a.less(p.left, q.left);
    });
    return StrictRel(pair_setoid(a.base(), b.base()), std::move(m));
}

StrictRel coarse_product(const StrictRel &a, const StrictRel &b, CoarseSide side)
{
    const std::size_t na = a.size(), nb = b.size();
    std::vector<Index> cls(na * nb);
    for (Index x = 0; x < na; ++x)
        for (Index y = 0; y < nb; ++y)
            cls[flatten({x, y}, nb)] = side == CoarseSide::Left ? flatten({a.base().representative(x), 0}, nb)
                                                                : flatten({0, b.base().representative(y)}, nb);

    auto m = pair_matrix(na, nb, [&](ProductElement p, ProductElement q) {
        return side == CoarseSide::Left ? a.less(p.left, q.left) : b.less(p.right, q.right);
    });
    return StrictRel(Setoid(pair_labels(a.base(), b.base()), std::move(cls)), std::move(m));
}

StrictRel poset_to_strict(const PosetRel &p)
{
    BoolMatrix m(p.size());
    for (Index x = 0; x < p.size(); ++x)
        for (Index y = 0; y < p.size(); ++y)
            m.set(x, y, p.sim(x, y) && !p.eq(x, y));
    return StrictRel(p.base(), std::move(m));
}

Verdict check_star_condition(const PosetRel &p)
{
    const auto strict = poset_to_strict(p);
    for (Index x = 0; x < p.size(); ++x)
        for (Index y = 0; y < p.size(); ++y)
            if (!strict.less(y, x) && !p.sim(x, y))
                return Verdict::fail({x, y});
    return Verdict::pass();
}

Verdict check_embedding(const StrictRel &source, const StrictRel &target, std::span<const Index> map)
{
    if (map.size() != source.size())
        throw OrdError("embedding map is not total on the source carrier");
    for (Index i : map)
        if (i >= target.size())
            throw OrdError("embedding map leaves the target carrier");

    for (Index x = 0; x < source.size(); ++x)
        for (Index y = 0; y < source.size(); ++y) {
            if (source.less(x, y) != target.less(map[x], map[y]))
                return Verdict::fail({x, y});
            if (source.eq(x, y) && !target.eq(map[x], map[y]))
                return Verdict::fail({x, y});
        }
    return Verdict::pass();
}

Verdict check_isomorphism(const StrictRel &source, const StrictRel &target, std::span<const Index> map)
{
    auto v = check_embedding(source, target, map);
    if (!v)
        return v;
    std::vector<bool> hit(target.size(), false);
    for (Index i : map)
        hit[target.base().representative(i)] = true;
    for (Index t = 0; t < target.size(); ++t)
        if (target.base().representative(t) == t && !hit[t])
            return Verdict::fail({t});
    return Verdict::pass();
}

std::vector<Index> identity_map(std::size_t n)
{
    std::vector<Index> m(n);
    std::iota(m.begin(), m.end(), Index{0});
    return m;
}

} // namespace ordkit
