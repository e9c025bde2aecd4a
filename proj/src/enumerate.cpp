#include "ordkit/enumerate.hpp"

#include "ordkit/axioms.hpp"
#include "ordkit/derived.hpp"
#include "ordkit/products.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <tuple>

namespace ordkit {

namespace {

    // Masks are counted in a 64-bit word, so n*n must stay below 64.
    constexpr std::size_t kHardCarrierLimit = 7;
    constexpr std::size_t kStoredViolationsPerTheorem = 16;

    const char *const kTheorems[] = {
        "ordered-implies-generalized-ordered",
        "cotransitive-leqN-within-leqP",
        "asymmetric-leqP-within-leqN",
        "asym-cotransitive-weak-orders-coincide",
        "leqP-dual-transpose",
        "leqP-reflexive-transitive",
        "transitive-less-within-leqP",
        "transitive-discrete-cotransitive",
        "asym-discrete-strict-from-leqP",
        "profile-self-dual",
        "derived-orders-well-defined",
        "gord-to-poset-is-poset",
        "poset-bridge-asym-transitive",
        "star-leqP-within-sim",
        "star-positive-antisymmetry",
        "total-decidable-implies-star",
        "lex-product-generalized-ordered",
        "weak-lex-asym-pos-antisymmetric",
        "weak-lex-discrete-generalized-ordered",
        "weak-lex-equals-lex-discrete",
        "weak-lex-identity-isomorphism",
        "coarse-left-ordered",
        "coarse-right-ordered",
    };

    constexpr std::string_view kMinimalNonOrdered = "minimal-generalized-ordered-not-ordered";
    constexpr std::string_view kLexNotCotransitive = "lex-product-of-ordered-sets-not-cotransitive";
    constexpr std::string_view kWeakLexIntransitive = "weak-lex-intransitive-without-discreteness";
    constexpr std::string_view kWeakLexNotPosAnti = "weak-lex-not-pos-antisymmetric-intransitive-left";

    class Battery
    {
    public:
        Battery()
        {
            for (const char *name : kTheorems) {
                tallies_.push_back({name, 0, 0});
            }
        }

        template <typename Describe>
        void record(std::string_view name, bool ok, Describe &&describe)
        {
            auto &t = find(name);
            ++t.checked;
            if (ok)
                return;
            ++t.violations;
            if (t.violations <= kStoredViolationsPerTheorem)
                violations_.push_back({t.name, describe()});
        }

        std::vector<TheoremTally> take_tallies() { return std::move(tallies_); }
        std::vector<TheoremViolation> take_violations() { return std::move(violations_); }

    private:
        TheoremTally &find(std::string_view name)
        {
            for (auto &t : tallies_)
                if (t.name == name)
                    return t;
            tallies_.push_back({std::string(name), 0, 0});
            return tallies_.back();
        }

        std::vector<TheoremTally> tallies_;
        std::vector<TheoremViolation> violations_;
    };

    using CanonicalKey = std::tuple<std::size_t, std::string, std::vector<Index>>;

    CanonicalKey key_of(const StrictRel &r)
    {
        return {r.size(), r.matrix().bit_string(), r.base().eq_classes()};
    }

    // Keeps the canonically smallest example of a search.
    class Inventory
    {
    public:
        Inventory(std::string_view name) { entry_.name = name; }

        void searched() { ++entry_.searched; }

        void found(std::vector<StrictRel> example)
        {
            ++entry_.count;
            std::vector<CanonicalKey> key;
            for (const auto &r : example)
                key.push_back(key_of(r));
            if (!best_ || key < *best_) {
                best_ = std::move(key);
                entry_.example = std::move(example);
            }
        }

        InventoryEntry take() { return std::move(entry_); }

    private:
        InventoryEntry entry_;
        std::optional<std::vector<CanonicalKey>> best_;
    };

    std::string pair_description(const StrictRel &a, const StrictRel &b)
    {
        return "A: " + describe(a) + "; B: " + describe(b);
    }

    struct Population
    {
        std::vector<StrictRel> generalized_ordered;
        std::vector<StrictRel> ordered;
        std::vector<StrictRel> asym_pos_anti;
        std::vector<StrictRel> arbitrary;
    };

    void single_relation_battery(const StrictRel &r, const AxiomProfile &p, Battery &battery)
    {
        auto desc = [&] { return describe(r); };
        const auto leq_n = derive_leq_n(r);
        const auto leq_p = derive_leq_p(r);
        const bool n_in_p = bool(leq_n.subset_of(leq_p));
        const bool p_in_n = bool(leq_p.subset_of(leq_n));

        if (p.is_ordered_set())
            battery.record("ordered-implies-generalized-ordered", p.is_generalized_ordered(), desc);
        if (p.cotransitive)
            battery.record("cotransitive-leqN-within-leqP", n_in_p, desc);
        if (p.asymmetric)
            battery.record("asymmetric-leqP-within-leqN", p_in_n, desc);
        if (p.asymmetric && p.cotransitive)
            battery.record("asym-cotransitive-weak-orders-coincide", n_in_p && p_in_n, desc);

        const auto d = dual(r);
        battery.record("leqP-dual-transpose", derive_leq_p(d) == leq_p.transposed(), desc);

        {
            bool reflexive = true;
            for (Index x = 0; x < r.size(); ++x)
                reflexive = reflexive && leq_p(x, x);
            const PosetRel as_pre(r.base(), leq_p);
            battery.record("leqP-reflexive-transitive", reflexive && check_poset(as_pre).transitive.holds, desc);
        }

        if (p.transitive)
            battery.record("transitive-less-within-leqP", bool(r.matrix().subset_of(leq_p)), desc);
        if (p.transitive && p.discrete)
            battery.record("transitive-discrete-cotransitive", p.cotransitive.holds, desc);
        if (p.asymmetric && p.discrete) {
            bool ok = true;
            for (Index x = 0; x < r.size(); ++x)
                for (Index y = 0; y < r.size(); ++y)
                    if (!r.eq(x, y) && leq_p(x, y) && !r.less(x, y))
                        ok = false;
            battery.record("asym-discrete-strict-from-leqP", ok, desc);
        }

        battery.record("profile-self-dual", classify(d).same_verdicts(p), desc);
        battery.record("derived-orders-well-defined",
                       check_well_defined(r.base(), leq_n).holds && check_well_defined(r.base(), leq_p).holds, desc);

        if (p.is_generalized_ordered()) {
            const auto poset = gord_to_poset(r);
            battery.record("gord-to-poset-is-poset", check_poset(poset).is_poset(), desc);
        }
    }

    void poset_battery(const StrictRel &raw, Battery &battery)
    {
        const PosetRel poset(raw.base(), raw.matrix());
        if (!check_poset(poset).is_poset())
            return;
        auto desc = [&] { return "sim " + describe(raw); };

        const auto strict = poset_to_strict(poset);
        battery.record("poset-bridge-asym-transitive",
                       check_asymmetry(strict).holds && check_transitivity(strict).holds, desc);

        const bool star = bool(check_star_condition(poset));
        if (star) {
            battery.record("star-leqP-within-sim", bool(derive_leq_p(strict).subset_of(poset.matrix())), desc);
            battery.record("star-positive-antisymmetry", bool(check_pos_antisymmetry(strict)), desc);
        }
        if (check_total(poset) && check_decidable_eq(poset.base()))
            battery.record("total-decidable-implies-star", star, desc);
    }

    template <typename Visit>
    void for_each_pair(const std::vector<std::vector<StrictRel>> &left, const std::vector<std::vector<StrictRel>> &right,
                       Visit &&visit)
    {
        for (std::size_t sa = 0; sa < left.size(); ++sa)
            for (std::size_t sb = 0; sb < right.size(); ++sb) {
                if (sa * sb > kMaxProductSize)
                    continue;
                for (const auto &a : left[sa])
                    for (const auto &b : right[sb])
                        visit(a, b);
            }
    }

} // namespace

std::string to_string(EqualityMode m)
{
    return m == EqualityMode::Identity ? "identity" : "all-partitions";
}

EqualityMode parse_equality_mode(std::string_view s)
{
    if (s == "identity")
        return EqualityMode::Identity;
    if (s == "all-partitions")
        return EqualityMode::AllPartitions;
    throw OrdError("unknown equality mode '" + std::string(s) + "' (expected identity or all-partitions)");
}

std::size_t enumeration_bound(EqualityMode mode)
{
    if (const char *env = std::getenv("ORDKIT_MAX_ENUM")) {
        std::size_t value = 0;
        std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw OrdError("ORDKIT_MAX_ENUM is not an integer: '" + std::string(s) + "'");
        return std::min(value, kHardCarrierLimit);
    }
    return mode == EqualityMode::Identity ? 4 : 3;
}

std::vector<Setoid> setoids_of_size(std::size_t n, EqualityMode mode)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(i < 26 ? std::string(1, char('a' + i)) : "e" + std::to_string(i));

    if (mode == EqualityMode::Identity)
        return {Setoid::identity(labels)};

    // Restricted growth strings: block[0] = 0, block[i] <= max(block[..i]) + 1.
    std::vector<Setoid> out;
    std::vector<std::size_t> block(n, 0);
    while (true) {
        std::vector<Index> first_of_block;
        std::vector<Index> cls(n);
        for (Index i = 0; i < n; ++i) {
            if (block[i] == first_of_block.size())
                first_of_block.push_back(i);
            cls[i] = first_of_block[block[i]];
        }
        out.emplace_back(labels, std::move(cls));

        bool advanced = false;
        for (std::size_t i = n; i-- > 1;) {
            std::size_t max_before = *std::max_element(block.begin(), block.begin() + i);
            if (block[i] <= max_before) {
                ++block[i];
                std::fill(block.begin() + i + 1, block.end(), 0);
                advanced = true;
                break;
            }
        }
        if (!advanced)
            break;
    }
    return out;
}

std::uint64_t for_each_relation(std::size_t n, EqualityMode mode, const std::function<void(const StrictRel &)> &visit)
{
    if (n > kHardCarrierLimit)
        throw OrdError("carrier size " + std::to_string(n) + " exceeds the hard limit of " +
                       std::to_string(kHardCarrierLimit));
    std::uint64_t seen = 0;
    const std::uint64_t masks = std::uint64_t{1} << (n * n);
    for (const auto &s : setoids_of_size(n, mode))
        for (std::uint64_t bits = 0; bits < masks; ++bits) {
            ++seen;
            auto m = BoolMatrix::from_bits(n, bits);
            if (!check_well_defined(s, m))
                continue;
            visit(StrictRel(s, std::move(m)));
        }
    return seen;
}

const TheoremTally *EnumerationSummary::tally(std::string_view name) const
{
    for (const auto &t : tallies)
        if (t.name == name)
            return &t;
    return nullptr;
}

const InventoryEntry *EnumerationSummary::inventory(std::string_view name) const
{
    for (const auto &e : counterexample_inventory)
        if (e.name == name)
            return &e;
    return nullptr;
}

bool EnumerationSummary::operator==(const EnumerationSummary &o) const
{
    auto tally_eq = [](const TheoremTally &a, const TheoremTally &b) {
        return a.name == b.name && a.checked == b.checked && a.violations == b.violations;
    };
    auto viol_eq = [](const TheoremViolation &a, const TheoremViolation &b) {
        return a.theorem == b.theorem && a.instance == b.instance;
    };
    auto inv_eq = [](const InventoryEntry &a, const InventoryEntry &b) {
        return a.name == b.name && a.count == b.count && a.searched == b.searched && a.example == b.example;
    };
    return carrier_size == o.carrier_size && equality_mode == o.equality_mode && setoid_count == o.setoid_count &&
           total_relations == o.total_relations && well_defined_count == o.well_defined_count &&
           generalized_ordered_count == o.generalized_ordered_count && ordered_set_count == o.ordered_set_count &&
           poset_count == o.poset_count && counts_by_axiom_profile == o.counts_by_axiom_profile &&
           std::equal(tallies.begin(), tallies.end(), o.tallies.begin(), o.tallies.end(), tally_eq) &&
           std::equal(theorem_violations.begin(), theorem_violations.end(), o.theorem_violations.begin(),
                      o.theorem_violations.end(), viol_eq) &&
           std::equal(counterexample_inventory.begin(), counterexample_inventory.end(),
                      o.counterexample_inventory.begin(), o.counterexample_inventory.end(), inv_eq);
}

EnumerationSummary enumerate(std::size_t n, EqualityMode mode)
{
    const std::size_t bound = enumeration_bound(mode);
    if (n > bound)
        throw OrdError("carrier size " + std::to_string(n) + " exceeds the enumeration bound " +
                       std::to_string(bound) + " for " + to_string(mode) + " (set ORDKIT_MAX_ENUM to override)");

    EnumerationSummary summary;
    summary.carrier_size = n;
    summary.equality_mode = mode;
    summary.setoid_count = setoids_of_size(n, mode).size();

    Battery battery;
    Inventory minimal_non_ordered(kMinimalNonOrdered);
    std::vector<Population> by_size(n + 1);

    for (std::size_t s = 0; s <= n; ++s) {
        auto &pop = by_size[s];
        const bool main_size = s == n;
        auto seen = for_each_relation(s, mode, [&](const StrictRel &r) {
            const auto profile = classify(r);
            if (profile.is_generalized_ordered())
                pop.generalized_ordered.push_back(r);
            if (profile.is_ordered_set())
                pop.ordered.push_back(r);
            if (profile.asymmetric && profile.pos_antisymmetric)
                pop.asym_pos_anti.push_back(r);
            if (s <= kMaxArbitraryFactor)
                pop.arbitrary.push_back(r);
            if (!main_size)
                return;

            ++summary.well_defined_count;
            ++summary.counts_by_axiom_profile[profile.key()];
            if (profile.is_generalized_ordered())
                ++summary.generalized_ordered_count;
            if (profile.is_ordered_set())
                ++summary.ordered_set_count;
            if (check_poset(PosetRel(r.base(), r.matrix())).is_poset())
                ++summary.poset_count;

            minimal_non_ordered.searched();
            if (profile.is_generalized_ordered() && !profile.is_ordered_set())
                minimal_non_ordered.found({r});

            single_relation_battery(r, profile, battery);
            poset_battery(r, battery);
        });
        if (main_size)
            summary.total_relations = seen;
    }

    auto column = [&](auto member) {
        std::vector<std::vector<StrictRel>> out;
        for (auto &pop : by_size)
            out.push_back(pop.*member);
        return out;
    };
    const auto gords = column(&Population::generalized_ordered);
    const auto ordered = column(&Population::ordered);
    const auto asym_pos = column(&Population::asym_pos_anti);
    const auto arbitrary = column(&Population::arbitrary);

    for_each_pair(gords, gords, [&](const StrictRel &a, const StrictRel &b) {
        auto lex = lex_product(a, b);
        battery.record("lex-product-generalized-ordered", classify(lex).is_generalized_ordered(),
                       [&] { return pair_description(a, b); });
    });

    // The preservation argument needs z<x to imply z leq_P x in the first
    // factor, i.e. a transitive A; pairs with an intransitive A go to the
    // inventory.
    Inventory weak_lex_not_pos_anti(kWeakLexNotPosAnti);
    for_each_pair(asym_pos, asym_pos, [&](const StrictRel &a, const StrictRel &b) {
        auto wl = weak_lex_product(a, b);
        const bool preserved = check_asymmetry(wl).holds && check_pos_antisymmetry(wl).holds;
        if (check_transitivity(a)) {
            battery.record("weak-lex-asym-pos-antisymmetric", preserved, [&] { return pair_description(a, b); });
            return;
        }
        weak_lex_not_pos_anti.searched();
        if (!preserved)
            weak_lex_not_pos_anti.found({a, b});
    });

    Inventory weak_lex_intransitive(kWeakLexIntransitive);
    for_each_pair(gords, gords, [&](const StrictRel &a, const StrictRel &b) {
        auto desc = [&] { return pair_description(a, b); };
        auto wl = weak_lex_product(a, b);
        if (!check_discrete(a)) {
            weak_lex_intransitive.searched();
            if (!check_transitivity(wl))
                weak_lex_intransitive.found({a, b});
            return;
        }
        auto lex = lex_product(a, b);
        battery.record("weak-lex-discrete-generalized-ordered", classify(wl).is_generalized_ordered(), desc);
        battery.record("weak-lex-equals-lex-discrete", wl.matrix() == lex.matrix(), desc);
        battery.record("weak-lex-identity-isomorphism", bool(check_isomorphism(lex, wl, identity_map(lex.size()))),
                       desc);
    });

    Inventory lex_not_cotransitive(kLexNotCotransitive);
    for_each_pair(ordered, ordered, [&](const StrictRel &a, const StrictRel &b) {
        lex_not_cotransitive.searched();
        if (!check_cotransitivity(lex_product(a, b)))
            lex_not_cotransitive.found({a, b});
    });

    for_each_pair(ordered, arbitrary, [&](const StrictRel &x, const StrictRel &y) {
        battery.record("coarse-left-ordered", classify(coarse_product(x, y, CoarseSide::Left)).is_ordered_set(),
                       [&] { return pair_description(x, y); });
    });
    for_each_pair(arbitrary, ordered, [&](const StrictRel &x, const StrictRel &y) {
        battery.record("coarse-right-ordered", classify(coarse_product(x, y, CoarseSide::Right)).is_ordered_set(),
                       [&] { return pair_description(x, y); });
    });

    summary.tallies = battery.take_tallies();
    summary.theorem_violations = battery.take_violations();
    summary.counterexample_inventory.push_back(minimal_non_ordered.take());
    summary.counterexample_inventory.push_back(lex_not_cotransitive.take());
    summary.counterexample_inventory.push_back(weak_lex_intransitive.take());
    summary.counterexample_inventory.push_back(weak_lex_not_pos_anti.take());
    return summary;
}

} // namespace ordkit
