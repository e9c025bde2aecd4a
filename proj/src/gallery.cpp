#include "ordkit/gallery.hpp"

#include "ordkit/derived.hpp"
#include "ordkit/products.hpp"

#include <algorithm>

namespace ordkit {

namespace {

    constexpr std::string_view kNotP = "not P";
    constexpr std::string_view kNotNotP = "not not P";
    constexpr std::string_view kP = "P";

    std::vector<LabelPair> pairs(std::initializer_list<LabelPair> ps) { return ps; }

    StrictRel chain2()
    {
        return make_strict_rel(Setoid::identity({"0", "1"}), pairs({{"0", "1"}}));
    }

} // namespace

bool GalleryReport::passed() const
{
    return consistent && std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.holds; });
}

NonCotransitiveExample gallery_non_cotransitive()
{
    auto rel = make_strict_rel(Setoid::identity({"a", "b", "c"}), pairs({{"a", "b"}}));
    auto profile = classify(rel);
    auto cmp = compare_weak_orders(rel);

    GalleryReport report;
    report.name = "non-cotransitive";
    report.checks = {
        {"generalized ordered", profile.is_generalized_ordered()},
        {"not an ordered set", !profile.is_ordered_set()},
        {"cotransitivity fails at (a,b,c)", profile.cotransitive.witness == std::vector<Index>{0, 1, 2}},
        {"leq_N not within leq_P at (b,c)", cmp.n_subset_of_p.witness == std::vector<Index>{1, 2}},
    };
    report.detail = "a<b but neither a<c nor c<b";
    report.instances.push_back({"non-cotransitive", rel});
    return {rel, profile, report};
}

GalleryReport gallery_weak_orders_cotransitivity(OracleBool p)
{
    std::vector<LabelPair> less{{"a", "b"}};
    less.push_back(p.value ? LabelPair{"a", "c"} : LabelPair{"c", "b"});
    auto rel = make_strict_rel(Setoid::identity({"a", "b", "c"}), less);
    const Index a = 0, b = 1, c = 2;

    GalleryReport report;
    report.name = "weak-orders-cotransitivity";
    report.oracle = p.value;
    report.checks = {
        {"a<b", rel.less(a, b)},
        {"leq_N within leq_P on the instance", bool(compare_weak_orders(rel).n_subset_of_p)},
        {"cotransitive on the instance", bool(check_cotransitivity(rel))},
    };

    // Cotransitivity of a<b at z = c.
    if (rel.less(a, c)) {
        report.revealed = kNotNotP;
        report.detail = "a<c";
    } else if (rel.less(c, b)) {
        report.revealed = kNotP;
        report.detail = "c<b";
    } else {
        report.revealed = "none";
        report.detail = "neither a<c nor c<b";
    }
    report.consistent = p.value ? report.revealed == kNotNotP : report.revealed == kNotP;
    report.instances.push_back({p.value ? "weak-orders-cotransitivity-P" : "weak-orders-cotransitivity-notP", rel});
    return report;
}

GalleryReport gallery_lex_cotransitivity(OracleBool p)
{
    auto x = make_strict_rel(Setoid::identity({"0", "1"}), pairs({p.value ? LabelPair{"0", "1"} : LabelPair{"1", "0"}}));
    auto y = chain2();
    auto lex = lex_product(x, y);
    const Index s = p.value ? 1 : 0; // the single element of S
    auto at = [&](Index u, Index v) { return flatten({u, v}, y.size()); };

    GalleryReport report;
    report.name = "lex-cotransitivity";
    report.oracle = p.value;
    report.checks = {
        {"X is an ordered set", classify(x).is_ordered_set()},
        {"Y is an ordered set", classify(y).is_ordered_set()},
        {"(0,0)<(0,1) in the product", lex.less(at(0, 0), at(0, 1))},
        {"product cotransitive (classical)", bool(check_cotransitivity(lex))},
    };

    struct Extraction
    {
        std::string revealed;
        std::string detail;
    };
    auto extract = [&](Index q) -> Extraction {
        if (lex.less(at(0, 0), at(s, q))) {
            if (x.less(0, s))
                return {std::string(kP), "first case, 0<p"};
            if (x.eq(0, s) && y.less(0, q))
                return {std::string(kNotP), "first case, 0=p so 0 in S"};
        } else if (lex.less(at(s, q), at(0, 1))) {
            if (x.less(s, 0))
                return {std::string(kNotP), "second case, p<0"};
            if (x.eq(s, 0))
                return {std::string(kNotP), "second case, p=0 so 0 in S"};
        }
        return {"none", "cotransitivity disjunction failed"};
    };

    auto expected = p.value ? kP : kNotP;
    auto primary = extract(0);
    report.revealed = primary.revealed;
    report.detail = primary.detail + " (q=0)";
    auto other = extract(1);
    report.checks.push_back({"extraction at q=1 agrees", other.revealed == expected});
    report.consistent = primary.revealed == expected;

    const std::string suffix = p.value ? "-P" : "-notP";
    report.instances.push_back({"lex-cotransitivity-X" + suffix, x});
    report.instances.push_back({"lex-cotransitivity-Y" + suffix, y});
    report.instances.push_back({"lex-cotransitivity-product" + suffix, lex});
    return report;
}

GalleryReport gallery_strict_from_leq(OracleBool p)
{
    auto base = p.value ? Setoid::identity({"a", "b"})
                        : make_setoid({"a", "b"}, pairs({{"a", "b"}}));
    auto rel = p.value ? make_strict_rel(base, pairs({{"a", "b"}})) : StrictRel(base, BoolMatrix(2));
    const Index a = 0, b = 1;

    GalleryReport report;
    report.name = "strict-from-leq";
    report.oracle = p.value;
    report.checks = {
        {"asymmetric", bool(check_asymmetry(rel))},
        {"a leq_P b", derive_leq_p(rel)(a, b)},
    };

    if (!rel.eq(a, b)) {
        // not a=b and a ≤_P b; the strictness rule would conclude a<b.
        report.revealed = rel.less(a, b) ? kP : "none";
        report.detail = "a differs from b, so a<b";
        report.consistent = p.value && report.revealed == kP;
    } else {
        report.revealed = "none";
        report.detail = "a=b, rule not triggered";
        report.consistent = !p.value;
    }
    report.instances.push_back({p.value ? "strict-from-leq-P" : "strict-from-leq-notP", rel});
    return report;
}

GalleryReport gallery_star_totality(OracleBool p)
{
    std::vector<LabelPair> sim{{"a", "a"}, {"b", "b"}};
    sim.push_back(p.value ? LabelPair{"b", "a"} : LabelPair{"a", "b"});
    auto poset = make_poset_rel(Setoid::identity({"a", "b"}), sim);
    const Index a = 0, b = 1;

    GalleryReport report;
    report.name = "star-totality";
    report.oracle = p.value;
    report.checks = {
        {"partially ordered", check_poset(poset).is_poset()},
        {"star condition holds", bool(check_star_condition(poset))},
        {"total", bool(check_total(poset))},
    };

    if (poset.sim(a, b)) {
        report.revealed = kNotP;
        report.detail = "a~b";
    } else if (poset.sim(b, a)) {
        report.revealed = kNotNotP;
        report.detail = "b~a";
    } else {
        report.revealed = "none";
        report.detail = "incomparable";
    }
    report.consistent = p.value ? report.revealed == kNotNotP : report.revealed == kNotP;
    report.instances.push_back({p.value ? "star-totality-P" : "star-totality-notP", poset});
    return report;
}

GalleryReport gallery_poset_bridge_failure()
{
    auto poset = make_poset_rel(Setoid::identity({"a", "b"}), pairs({{"a", "a"}, {"b", "b"}}));
    auto strict = poset_to_strict(poset);
    auto leq_p = derive_leq_p(strict);
    auto pos_anti = check_pos_antisymmetry(strict);

    GalleryReport report;
    report.name = "poset-bridge-failure";
    report.checks = {
        {"partially ordered", check_poset(poset).is_poset()},
        {"bridge relation is empty", strict.matrix() == BoolMatrix(2)},
        {"asymmetric", bool(check_asymmetry(strict))},
        {"transitive", bool(check_transitivity(strict))},
        {"a leq_P b", leq_p(0, 1)},
        {"b leq_P a", leq_p(1, 0)},
        {"positive antisymmetry fails at (a,b)", !pos_anti.holds && pos_anti.witness == std::vector<Index>{0, 1}},
    };
    report.detail = "a and b are mutually leq_P yet distinct";
    report.instances.push_back({"poset-bridge-failure-poset", poset});
    report.instances.push_back({"poset-bridge-failure-strict", strict});
    return report;
}

GalleryReport gallery_two_point_prop()
{
    auto rel = chain2();
    auto profile = classify(rel);

    GalleryReport report;
    report.name = "two-point-prop";
    report.checks = {
        {"0<1", rel.less(0, 1)},
        {"generalized ordered", profile.is_generalized_ordered()},
        {"cotransitive in the classical model", bool(profile.cotransitive)},
    };
    report.detail = "0 = False, 1 = True, P<Q iff not P and Q";
    report.instances.push_back({"two-point-prop", rel});
    return report;
}

std::vector<std::string_view> gallery_names()
{
    return {"non-cotransitive", "weak-orders-cotransitivity", "lex-cotransitivity", "strict-from-leq",
            "star-totality",    "poset-bridge-failure",       "two-point-prop"};
}

std::vector<GalleryReport> run_gallery(std::string_view name)
{
    using Param = GalleryReport (*)(OracleBool);
    Param param = nullptr;
    if (name == "non-cotransitive")
        return {gallery_non_cotransitive().report};
    if (name == "poset-bridge-failure")
        return {gallery_poset_bridge_failure()};
    if (name == "two-point-prop")
        return {gallery_two_point_prop()};
    if (name == "weak-orders-cotransitivity")
        param = gallery_weak_orders_cotransitivity;
    else if (name == "lex-cotransitivity")
        param = gallery_lex_cotransitivity;
    else if (name == "strict-from-leq")
        param = gallery_strict_from_leq;
    else if (name == "star-totality")
        param = gallery_star_totality;
    else
        throw OrdError("unknown gallery '" + std::string(name) + "'");
    return {param(OracleBool{true}), param(OracleBool{false})};
}

std::vector<GalleryReport> run_all_galleries()
{
    std::vector<GalleryReport> out;
    for (auto name : gallery_names())
        for (auto &r : run_gallery(name))
            out.push_back(std::move(r));
    return out;
}

} // namespace ordkit
