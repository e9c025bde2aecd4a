#include "ordkit/lazy_seq.hpp"

#include <algorithm>

namespace ordkit {

std::string to_string(SeqOutcome o)
{
    switch (o) {
    case SeqOutcome::Less:
        return "Less";
    case SeqOutcome::Greater:
        return "Greater";
    case SeqOutcome::Equal:
        return "Equal";
    case SeqOutcome::Incomparable:
        return "Incomparable";
    case SeqOutcome::UnknownAfter:
        return "UnknownAfter";
    }
    return "?";
}

namespace {

    void require_in_range(const EvConstSeq &s)
    {
        if (!s.base)
            throw OrdError("sequence has no base structure");
        const std::size_t n = s.base->size();
        if (s.tail >= n)
            throw OrdError("sequence tail index out of range");
        for (Index i : s.prefix)
            if (i >= n)
                throw OrdError("sequence prefix index out of range");
    }

    SeqCompareVerdict decide_at(const StrictRel &base, Index fk, Index gk, std::size_t k)
    {
        if (base.less(fk, gk))
            return {SeqOutcome::Less, k, std::nullopt};
        if (base.less(gk, fk))
            return {SeqOutcome::Greater, k, std::nullopt};
        return {SeqOutcome::Incomparable, k, std::nullopt};
    }

} // namespace

EvConstSeq seq_normalize(const EvConstSeq &s)
{
    require_in_range(s);
    EvConstSeq out = s;
    while (!out.prefix.empty() && s.base->eq(out.prefix.back(), out.tail))
        out.prefix.pop_back();
    return out;
}

SeqCompareVerdict seq_compare(const EvConstSeq &f, const EvConstSeq &g)
{
    require_in_range(f);
    require_in_range(g);
    if (f.base != g.base && !(*f.base == *g.base))
        throw OrdError("sequences compared over different base structures");

    const StrictRel &base = *f.base;
    const std::size_t last = std::max(f.prefix.size(), g.prefix.size());
    for (std::size_t k = 0; k <= last; ++k) {
        Index fk = f.at(k), gk = g.at(k);
        if (!base.eq(fk, gk))
            return decide_at(base, fk, gk, k);
    }
    return {SeqOutcome::Equal, std::nullopt, std::nullopt};
}

SeqCompareVerdict seq_compare_bounded(const StrictRel &base, const SeqGenerator &f, const SeqGenerator &g,
                                      std::size_t fuel)
{
    for (std::size_t k = 0; k < fuel; ++k) {
        Index fk = f(k), gk = g(k);
        if (fk >= base.size() || gk >= base.size())
            throw OrdError("generator produced an index out of range");
        if (!base.eq(fk, gk)) {
            auto v = decide_at(base, fk, gk, k);
            v.fuel = fuel;
            return v;
        }
    }
    return {SeqOutcome::UnknownAfter, std::nullopt, fuel};
}

std::vector<EvConstSeq> seq_universe(std::shared_ptr<const StrictRel> base, std::size_t max_prefix_len)
{
    std::vector<Index> reps;
    for (Index i = 0; i < base->size(); ++i)
        if (base->base().representative(i) == i)
            reps.push_back(i);

    std::vector<EvConstSeq> out;
    if (reps.empty())
        return out;

    for (Index tail : reps)
        for (std::size_t len = 0; len <= max_prefix_len; ++len) {
            // Odometer over prefixes of exactly `len` representatives whose
            // last entry differs from the tail.
            std::vector<std::size_t> digits(len, 0);
            while (true) {
                if (len == 0 || reps[digits.back()] != tail) {
                    EvConstSeq s{base, {}, tail};
                    s.prefix.reserve(len);
                    for (auto d : digits)
                        s.prefix.push_back(reps[d]);
                    out.push_back(std::move(s));
                }
                std::size_t pos = 0;
                while (pos < len && ++digits[pos] == reps.size())
                    digits[pos++] = 0;
                if (pos == len)
                    break;
            }
        }
    return out;
}

bool seq_pointwise_equal(const EvConstSeq &f, const EvConstSeq &g)
{
    return seq_compare(f, g).outcome == SeqOutcome::Equal;
}

} // namespace ordkit
