#include "ordkit/axioms.hpp"
#include "ordkit/gallery.hpp"
#include "ordkit/products.hpp"
#include "ordkit/relation_io.hpp"

#include "cli.hpp"
#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ordkit;

namespace {

const std::string kFixtures = ORDKIT_FIXTURES;

std::string fixture(const std::string &name) { return kFixtures + "/" + name; }

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string &name)
{
    auto dir = std::filesystem::temp_directory_path() / "ordkit-tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("parse_relation")
{
    auto doc = parse_relation(R"({"elements": ["a", "b"], "equal": [["b", "a"]], "less": []})");
    CHECK(doc.kind == RelationKind::Less);
    CHECK(doc.base.eq(0, 1));

    auto sim = parse_relation(R"({"elements": ["a"], "sim": [["a", "a"]]})");
    CHECK(sim.kind == RelationKind::Sim);
    CHECK(sim.as_poset().sim(0, 0));

    auto empty = parse_relation(R"({"elements": []})");
    CHECK(empty.base.size() == 0);
}

TEST_CASE("parse errors name the line or the field")
{
    CHECK_THROWS_WITH_AS(parse_relation("{\n  \"elements\": [\"a\",\n}"), doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_WITH_AS(parse_relation(R"({"less": []})"), doctest::Contains("'elements'"), ParseError);
    CHECK_THROWS_WITH_AS(parse_relation(R"({"elements": ["a"], "less": [["a", "z"]]})"), doctest::Contains("'less'"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_relation(R"({"elements": ["a", "a"]})"), doctest::Contains("duplicate"), ParseError);
    CHECK_THROWS_AS(parse_relation(R"({"elements": ["a"], "less": [], "sim": []})"), ParseError);
    CHECK_THROWS_AS(parse_relation(R"({"elements": [1]})"), ParseError);
    CHECK_THROWS_AS(parse_relation(R"([])"), ParseError);
    CHECK_THROWS_AS(read_relation_file(fixture("does-not-exist.json")), ParseError);
}

TEST_CASE("relation files are read without saturation")
{
    auto doc = read_relation_file(fixture("ill_defined.json"));
    CHECK_FALSE(check_well_defined(doc.base, doc.rel));
}

TEST_CASE("emit and parse round-trip")
{
    std::vector<StrictRel> samples{fixtures::one_arrow(), fixtures::chain(3),
                                   fixtures::rel({"u", "v", "w"}, {{"w", "u"}}, {{"u", "v"}}),
                                   lex_product(fixtures::chain(2), fixtures::one_arrow())};
    for (const auto &r : samples) {
        auto back = parse_relation(emit_relation(r));
        CHECK(back.as_strict() == r);
        CHECK(classify(back.as_strict()).key() == classify(r).key());
    }
    auto poset = make_poset_rel(Setoid::identity({"a", "b"}), std::vector<LabelPair>{{"a", "a"}, {"b", "b"}});
    CHECK(parse_relation(emit_relation(poset)).as_poset() == poset);
}

TEST_CASE("gallery instances round-trip")
{
    for (const auto &report : run_all_galleries())
        for (const auto &inst : report.instances)
            std::visit(
                [&](const auto &rel) {
                    CAPTURE(inst.name);
                    auto back = parse_relation(emit_relation(rel));
                    if constexpr (std::is_same_v<std::decay_t<decltype(rel)>, StrictRel>) {
                        CHECK(back.as_strict() == rel);
                        CHECK(classify(back.as_strict()).key() == classify(rel).key());
                    } else {
                        CHECK(back.as_poset() == rel);
                    }
                },
                inst.relation);
}

TEST_CASE("seq-compare documents")
{
    auto in = parse_seq_compare(R"({"base": {"elements": ["0", "1"], "less": [["0", "1"]]},
                                   "f": {"tail": "0"}, "g": {"prefix": ["1"], "tail": "0"}})");
    CHECK(in.f.tail == 0);
    CHECK(in.g.prefix == std::vector<Index>{1});
    CHECK_THROWS_AS(parse_seq_compare(R"({"base": {"elements": ["0"]}, "f": {"tail": "0"}})"), ParseError);
    CHECK_THROWS_AS(parse_seq_compare(R"({"base": {"elements": ["0"]}, "f": {}, "g": {"tail": "0"}})"), ParseError);
}

TEST_CASE("cli check")
{
    auto ok = run({"check", fixture("one_arrow.json")});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("generalized ordered: yes; ordered set: no") != std::string::npos);
    CHECK(ok.out.find("cotransitive: no, witness (a, b, c)") != std::string::npos);
    CHECK(ok.out.find("leq_N:") != std::string::npos);
    CHECK(ok.out.find("leq_P:") != std::string::npos);

    auto json = run({"--format", "json", "check", fixture("one_arrow.json")});
    CHECK(json.code == 0);
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["profile"]["generalized_ordered"] == true);
    CHECK(j["profile"]["cotransitive"]["witness"] == nlohmann::json({"a", "b", "c"}));

    auto poset = run({"check", fixture("discrete_poset.json")});
    CHECK(poset.code == 0);
    CHECK(poset.out.find("star condition: no, witness (a, b)") != std::string::npos);
}

TEST_CASE("cli exit codes")
{
    auto malformed = run({"check", fixture("malformed.json")});
    CHECK(malformed.code == 1);
    CHECK(malformed.out.empty());
    CHECK(malformed.err.find("elements") != std::string::npos);

    auto syntax = run({"check", fixture("bad_syntax.json")});
    CHECK(syntax.code == 1);
    CHECK(syntax.err.find("line") != std::string::npos);

    auto ill = run({"check", fixture("ill_defined.json")});
    CHECK(ill.code == 2);
    CHECK(ill.out.empty());
    CHECK(ill.err.find("(a, b, b, b)") != std::string::npos);

    CHECK(run({"product", fixture("ill_defined.json"), fixture("chain2.json"), "--kind", "lex"}).code == 2);
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"check"}).code == 1);
    CHECK(run({"enumerate", "--size", "9"}).code == 1);
    CHECK(run({"enumerate", "--size", "2", "--equality", "sometimes"}).code == 1);
    CHECK(run({"--help"}).code == 0);

    auto unknown = run({"gallery", "nope"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("two-point-prop") != std::string::npos);
}

TEST_CASE("cli derive")
{
    auto pp = run({"derive", fixture("one_arrow.json"), "--order", "pp"});
    CHECK(pp.code == 0);
    CHECK(pp.out.find("leq_N") == std::string::npos);
    auto j = nlohmann::json::parse(run({"--format", "json", "derive", fixture("one_arrow.json"), "--order", "pp"}).out);
    CHECK(j["leq_p"][1] == "010");
    CHECK_FALSE(j.contains("leq_n"));
}

TEST_CASE("cli product and dual emit relation files")
{
    auto lex = run({"product", fixture("chain2.json"), fixture("chain2.json"), "--kind", "lex"});
    REQUIRE(lex.code == 0);
    auto r = parse_relation(lex.out).as_strict();
    CHECK(r.size() == 4);
    CHECK(r.matrix().bit_string() == "0111001100010000");

    for (std::string kind : {"weaklex", "coarse-left", "coarse-right"}) {
        auto p = run({"product", fixture("chain2.json"), fixture("one_arrow.json"), "--kind", kind});
        CHECK(p.code == 0);
        CHECK_NOTHROW(parse_relation(p.out));
    }
    CHECK(run({"product", fixture("chain2.json"), fixture("chain2.json"), "--kind", "tensor"}).code == 1);

    auto d = run({"dual", fixture("one_arrow.json")});
    REQUIRE(d.code == 0);
    CHECK(parse_relation(d.out).as_strict().less(1, 0));
}

TEST_CASE("cli output file")
{
    auto path = scratch("product.json");
    std::filesystem::remove(path);
    auto res = run({"-o", path.string(), "product", fixture("chain2.json"), fixture("chain2.json"), "--kind", "lex"});
    CHECK(res.code == 0);
    CHECK(res.out.empty());
    auto checked = run({"check", path.string()});
    CHECK(checked.code == 0);
    CHECK(checked.out.find("ordered set: yes") != std::string::npos);
}

TEST_CASE("cli enumerate")
{
    auto e = run({"enumerate", "--size", "2"});
    CHECK(e.code == 0);
    CHECK(e.out.find("2 generalized ordered, 2 ordered, 0 violations") != std::string::npos);

    auto report = scratch("summary.json");
    auto r = run({"enumerate", "--size", "2", "--equality", "all-partitions", "--report", report.string()});
    CHECK(r.code == 0);
    std::ifstream in(report);
    auto j = nlohmann::json::parse(in);
    CHECK(j["carrier_size"] == 2);
    CHECK(j["equality_mode"] == "all-partitions");
    CHECK(j["theorem_violations"].empty());
    CHECK(j["well_defined_count"] == 18);

    auto js = run({"--format", "json", "enumerate", "--size", "2"});
    CHECK(nlohmann::json::parse(js.out)["total_relations"] == 16);
}

TEST_CASE("cli gallery")
{
    auto all = run({"gallery"});
    CHECK(all.code == 0);
    CHECK(all.out.find("FAIL") == std::string::npos);
    auto one = run({"--format", "json", "gallery", "lex-cotransitivity"});
    CHECK(one.code == 0);
    auto j = nlohmann::json::parse(one.out);
    CHECK(j.size() == 2);
    CHECK(j[0]["consistent"] == true);
    CHECK(j[1]["revealed"] == "not P");
}

TEST_CASE("cli seq-compare")
{
    auto r = run({"seq-compare", fixture("seq_less.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("Less at position 2") != std::string::npos);
    auto j = nlohmann::json::parse(run({"--format", "json", "seq-compare", fixture("seq_less.json")}).out);
    CHECK(j["outcome"] == "Less");
    CHECK(j["witness"] == 2);
}
