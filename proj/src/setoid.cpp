#include "ordkit/setoid.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace ordkit {

BoolMatrix BoolMatrix::from_bits(std::size_t n, std::uint64_t bits)
{
    if (n * n > 64)
        throw OrdError("BoolMatrix::from_bits: matrix too large for a 64-bit mask");
    BoolMatrix m(n);
    for (std::size_t k = 0; k < n * n; ++k)
        m.cells_[k] = (bits >> k) & 1U;
    return m;
}

BoolMatrix BoolMatrix::transposed() const
{
    BoolMatrix t(n_);
    for (Index i = 0; i < n_; ++i)
        for (Index j = 0; j < n_; ++j)
            t.set(j, i, (*this)(i, j));
    return t;
}

Verdict BoolMatrix::subset_of(const BoolMatrix &other) const
{
    for (Index i = 0; i < n_; ++i)
        for (Index j = 0; j < n_; ++j)
            if ((*this)(i, j) && !other(i, j))
                return Verdict::fail({i, j});
    return Verdict::pass();
}

std::string BoolMatrix::bit_string() const
{
    std::string s;
    s.reserve(cells_.size());
    for (auto c : cells_)
        s.push_back(c ? '1' : '0');
    return s;
}

Setoid::Setoid(std::vector<std::string> labels, std::vector<Index> eq_class)
    : labels_(std::move(labels)), eq_class_(std::move(eq_class))
{
    if (labels_.size() != eq_class_.size())
        throw OrdError("setoid: label count and class map size differ");

    std::unordered_set<std::string_view> seen;
    for (const auto &l : labels_)
        if (!seen.insert(l).second)
            throw OrdError("duplicate label '" + l + "'");

    for (Index i = 0; i < eq_class_.size(); ++i) {
        Index r = eq_class_[i];
        if (r > i || eq_class_[r] != r)
            throw OrdError("setoid: class map is not in canonical representative form");
    }
}

Setoid Setoid::identity(std::vector<std::string> labels)
{
    std::vector<Index> cls(labels.size());
    std::iota(cls.begin(), cls.end(), Index{0});
    return Setoid(std::move(labels), std::move(cls));
}

std::optional<Index> Setoid::find(std::string_view label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<Index>(it - labels_.begin());
}

Index Setoid::index_of(std::string_view label) const
{
    if (auto i = find(label))
        return *i;
    throw OrdError("unknown label '" + std::string(label) + "'");
}

std::size_t Setoid::class_count() const
{
    std::size_t c = 0;
    for (Index i = 0; i < eq_class_.size(); ++i)
        if (eq_class_[i] == i)
            ++c;
    return c;
}

bool Setoid::is_identity() const
{
    for (Index i = 0; i < eq_class_.size(); ++i)
        if (eq_class_[i] != i)
            return false;
    return true;
}

StrictRel::StrictRel(Setoid base, BoolMatrix rel) : base_(std::move(base)), rel_(std::move(rel))
{
    if (rel_.size() != base_.size())
        throw OrdError("relation matrix size does not match carrier");
}

PosetRel::PosetRel(Setoid base, BoolMatrix rel) : base_(std::move(base)), rel_(std::move(rel))
{
    if (rel_.size() != base_.size())
        throw OrdError("relation matrix size does not match carrier");
}

namespace {

    // Union-find where the root is always the smallest index of its class.
    class MinRootForest
    {
    public:
        explicit MinRootForest(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Index{0}); }

        Index find(Index x)
        {
            Index root = x;
            while (parent_[root] != root)
                root = parent_[root];
            while (parent_[x] != root) {
                Index next = parent_[x];
                parent_[x] = root;
                x = next;
            }
            return root;
        }

        void merge(Index x, Index y)
        {
            Index rx = find(x), ry = find(y);
            if (rx == ry)
                return;
            if (ry < rx)
                std::swap(rx, ry);
            parent_[ry] = rx;
        }

    private:
        std::vector<Index> parent_;
    };

    BoolMatrix saturate(const Setoid &base, std::span<const LabelPair> pairs)
    {
        BoolMatrix m(base.size());
        for (const auto &[l, r] : pairs) {
            Index x = base.index_of(l), y = base.index_of(r);
            for (Index i = 0; i < base.size(); ++i)
                if (base.eq(i, x))
                    for (Index j = 0; j < base.size(); ++j)
                        if (base.eq(j, y))
                            m.set(i, j);
        }
        return m;
    }

} // namespace

Setoid make_setoid(std::vector<std::string> labels, std::span<const LabelPair> equal_pairs)
{
    std::unordered_set<std::string_view> seen;
    for (const auto &l : labels)
        if (!seen.insert(l).second)
            throw OrdError("duplicate label '" + l + "'");

    auto index = [&](const std::string &l) -> Index {
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end())
            throw OrdError("unknown label '" + l + "'");
        return static_cast<Index>(it - labels.begin());
    };

    MinRootForest forest(labels.size());
    for (const auto &[l, r] : equal_pairs)
        forest.merge(index(l), index(r));

    std::vector<Index> cls(labels.size());
    for (Index i = 0; i < cls.size(); ++i)
        cls[i] = forest.find(i);
    return Setoid(std::move(labels), std::move(cls));
}

StrictRel make_strict_rel(Setoid base, std::span<const LabelPair> less_pairs)
{
    auto m = saturate(base, less_pairs);
    return StrictRel(std::move(base), std::move(m));
}

PosetRel make_poset_rel(Setoid base, std::span<const LabelPair> sim_pairs)
{
    auto m = saturate(base, sim_pairs);
    return PosetRel(std::move(base), std::move(m));
}

Verdict check_well_defined(const Setoid &base, const BoolMatrix &rel)
{
    const std::size_t n = base.size();
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            if (!rel(x, y))
                continue;
            for (Index x2 = 0; x2 < n; ++x2)
                if (base.eq(x, x2) && !rel(x2, y))
                    return Verdict::fail({x, x2, y, y});
            for (Index y2 = 0; y2 < n; ++y2)
                if (base.eq(y, y2) && !rel(x, y2))
                    return Verdict::fail({x, x, y, y2});
        }
    return Verdict::pass();
}

StrictRel dual(const StrictRel &r)
{
    return StrictRel(r.base(), r.matrix().transposed());
}

std::string describe(const StrictRel &r)
{
    std::string s = "n=" + std::to_string(r.size()) + " eq=[";
    for (Index i = 0; i < r.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(r.base().representative(i));
    }
    s += "] rel=" + r.matrix().bit_string();
    return s;
}

} // namespace ordkit
