#include "ordkit/lazy_seq.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ordkit;

namespace {

std::shared_ptr<const StrictRel> shared(StrictRel r) { return std::make_shared<const StrictRel>(std::move(r)); }

EvConstSeq seq(const std::shared_ptr<const StrictRel> &b, std::vector<Index> prefix, Index tail)
{
    return {b, std::move(prefix), tail};
}

} // namespace

TEST_CASE("seq_normalize trims trailing tail entries")
{
    auto b = shared(fixtures::chain(2));
    auto s = seq_normalize(seq(b, {0, 1, 1}, 1));
    CHECK(s.prefix == std::vector<Index>{0});
    CHECK(s.tail == 1);
    CHECK(seq_normalize(seq(b, {}, 0)).prefix.empty());
    CHECK(seq_normalize(seq(b, {1, 0}, 0)).prefix == std::vector<Index>{1});
    CHECK_THROWS_AS(seq_normalize(seq(b, {2}, 0)), OrdError);
    CHECK_THROWS_AS(seq_normalize(seq(b, {}, 5)), OrdError);

    auto merged = shared(fixtures::rel({"a", "b"}, {}, {{"a", "b"}}));
    CHECK(seq_normalize(seq(merged, {0, 1}, 0)).prefix.empty());
}

TEST_CASE("seq_compare")
{
    auto b = shared(fixtures::chain(2));
    auto v = seq_compare(seq(b, {}, 0), seq(b, {0, 0, 1}, 1));
    CHECK(v.outcome == SeqOutcome::Less);
    CHECK(v.witness == std::optional<std::size_t>(2));

    CHECK(seq_compare(seq(b, {}, 0), seq(b, {}, 0)).outcome == SeqOutcome::Equal);
    CHECK(seq_compare(seq(b, {1}, 0), seq(b, {0}, 1)).outcome == SeqOutcome::Greater);

    auto arrow = shared(fixtures::one_arrow());
    auto inc = seq_compare(seq(arrow, {}, 0), seq(arrow, {}, 2));
    CHECK(inc.outcome == SeqOutcome::Incomparable);
    CHECK(inc.witness == std::optional<std::size_t>(0));

    auto other = shared(fixtures::one_arrow());
    CHECK(seq_compare(seq(arrow, {}, 0), seq(other, {}, 1)).outcome == SeqOutcome::Less);
    auto different = shared(fixtures::chain(3));
    CHECK_THROWS_AS(seq_compare(seq(arrow, {}, 0), seq(different, {}, 1)), OrdError);
}

TEST_CASE("seq_compare_bounded")
{
    auto c = fixtures::chain(2);
    auto zero = [](std::size_t) -> Index { return 0; };
    auto v = seq_compare_bounded(c, zero, zero, 5);
    CHECK(v.outcome == SeqOutcome::UnknownAfter);
    CHECK(v.fuel == std::optional<std::size_t>(5));

    auto bump = [](std::size_t n) -> Index { return n == 3 ? 1 : 0; };
    auto w = seq_compare_bounded(c, zero, bump, 10);
    CHECK(w.outcome == SeqOutcome::Less);
    CHECK(w.witness == std::optional<std::size_t>(3));

    CHECK(seq_compare_bounded(c, zero, bump, 0).outcome == SeqOutcome::UnknownAfter);
    CHECK(seq_compare_bounded(c, zero, bump, 3).outcome == SeqOutcome::UnknownAfter);
}

TEST_CASE("seq_universe sizes")
{
    auto b = shared(fixtures::chain(2));
    CHECK(seq_universe(b, 0).size() == 2);
    CHECK(seq_universe(b, 1).size() == 4);
    for (std::size_t len = 0; len <= 4; ++len)
        CHECK(seq_universe(b, len).size() == oracle::eventually_constant_count(2, len));

    auto single = shared(fixtures::empty({"s"}));
    for (std::size_t len = 0; len <= 3; ++len)
        CHECK(seq_universe(single, len).size() == 1);

    auto merged = shared(fixtures::rel({"a", "b", "c"}, {}, {{"a", "b"}}));
    CHECK(seq_universe(merged, 2).size() == oracle::eventually_constant_count(2, 2));
}

TEST_CASE("seq_universe members are normalised and pairwise distinct")
{
    auto b = shared(fixtures::one_arrow());
    auto u = seq_universe(b, 2);
    CHECK(u.size() == oracle::eventually_constant_count(3, 2));
    for (std::size_t i = 0; i < u.size(); ++i) {
        CHECK(seq_normalize(u[i]).prefix == u[i].prefix);
        for (std::size_t j = i + 1; j < u.size(); ++j)
            CHECK_FALSE(seq_pointwise_equal(u[i], u[j]));
    }
}

TEST_CASE("seq_compare is invariant under normalisation and agrees with bounded scans")
{
    auto b = shared(fixtures::one_arrow());
    auto u = seq_universe(b, 2);
    for (const auto &f : u)
        for (const auto &g : u) {
            auto exact = seq_compare(f, g);
            auto padded = f;
            padded.prefix.push_back(f.tail);
            padded.prefix.push_back(f.tail);
            CHECK(seq_compare(padded, g) == exact);

            auto bounded = seq_compare_bounded(
                *b, [&](std::size_t n) { return f.at(n); }, [&](std::size_t n) { return g.at(n); }, 4);
            if (exact.outcome == SeqOutcome::Equal) {
                CHECK(bounded.outcome == SeqOutcome::UnknownAfter);
            } else {
                CHECK(bounded.outcome == exact.outcome);
                CHECK(bounded.witness == exact.witness);
            }
            CHECK((exact.outcome == SeqOutcome::Equal) == seq_pointwise_equal(f, g));
        }
}
