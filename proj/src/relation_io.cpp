#include "ordkit/relation_io.hpp"

#include <fstream>
#include <sstream>

namespace ordkit {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

    json parse_json(std::string_view text)
    {
        try {
            return json::parse(text.begin(), text.end());
        } catch (const json::parse_error &e) {
            std::size_t line = 1, column = 1;
            for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
                if (text[i] == '\n') {
                    ++line;
                    column = 1;
                } else {
                    ++column;
                }
            }
            throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": invalid JSON");
        }
    }

    std::vector<std::string> string_array(const json &j, const std::string &field)
    {
        if (!j.is_array())
            throw ParseError("field '" + field + "': expected an array of strings");
        std::vector<std::string> out;
        for (const auto &e : j) {
            if (!e.is_string())
                throw ParseError("field '" + field + "': expected an array of strings");
            out.push_back(e.get<std::string>());
        }
        return out;
    }

    std::vector<LabelPair> pair_array(const json &j, const std::string &field)
    {
        if (!j.is_array())
            throw ParseError("field '" + field + "': expected an array of label pairs");
        std::vector<LabelPair> out;
        for (const auto &e : j) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError("field '" + field + "': each entry must be a pair of labels");
            out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        return out;
    }

    Index label_index(const Setoid &s, const std::string &label, const std::string &field)
    {
        if (auto i = s.find(label))
            return *i;
        throw ParseError("field '" + field + "': unknown label '" + label + "'");
    }

    ordered_json to_json(const Setoid &base, const BoolMatrix &rel, const char *key)
    {
        ordered_json j;
        j["elements"] = base.labels();
        auto equal = ordered_json::array();
        for (Index i = 0; i < base.size(); ++i)
            if (base.representative(i) != i)
                equal.push_back({base.label(base.representative(i)), base.label(i)});
        j["equal"] = equal;
        auto pairs = ordered_json::array();
        for (Index x = 0; x < base.size(); ++x)
            for (Index y = 0; y < base.size(); ++y)
                if (rel(x, y))
                    pairs.push_back({base.label(x), base.label(y)});
        j[key] = pairs;
        return j;
    }

    std::string slurp(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ParseError("cannot read '" + path.string() + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    EvConstSeq seq_from_json(const json &j, const std::string &field, std::shared_ptr<const StrictRel> base)
    {
        if (!j.is_object())
            throw ParseError("field '" + field + "': expected an object");
        if (!j.contains("tail") || !j["tail"].is_string())
            throw ParseError("field '" + field + ".tail': expected a label");
        EvConstSeq s{base, {}, label_index(base->base(), j["tail"].get<std::string>(), field + ".tail")};
        if (j.contains("prefix"))
            for (const auto &l : string_array(j["prefix"], field + ".prefix"))
                s.prefix.push_back(label_index(base->base(), l, field + ".prefix"));
        return s;
    }

} // namespace

RelationDoc relation_from_json(const json &j)
{
    if (!j.is_object())
        throw ParseError("relation document must be a JSON object");
    if (!j.contains("elements"))
        throw ParseError("field 'elements': missing");
    if (j.contains("less") && j.contains("sim"))
        throw ParseError("fields 'less' and 'sim' are mutually exclusive");

    auto labels = string_array(j["elements"], "elements");
    std::vector<LabelPair> equal;
    if (j.contains("equal"))
        equal = pair_array(j["equal"], "equal");

    RelationDoc doc;
    try {
        doc.base = make_setoid(std::move(labels), equal);
    } catch (const OrdError &e) {
        throw ParseError(std::string("field 'elements'/'equal': ") + e.what());
    }

    const char *key = j.contains("sim") ? "sim" : "less";
    doc.kind = j.contains("sim") ? RelationKind::Sim : RelationKind::Less;
    doc.rel = BoolMatrix(doc.base.size());
    if (j.contains(key))
        for (const auto &[l, r] : pair_array(j[key], key))
            doc.rel.set(label_index(doc.base, l, key), label_index(doc.base, r, key));
    return doc;
}

RelationDoc parse_relation(std::string_view text)
{
    return relation_from_json(parse_json(text));
}

RelationDoc read_relation_file(const std::filesystem::path &path)
{
    auto text = slurp(path);
    try {
        return parse_relation(text);
    } catch (const ParseError &e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

ordered_json relation_to_json(const StrictRel &r)
{
    return to_json(r.base(), r.matrix(), "less");
}

ordered_json relation_to_json(const PosetRel &p)
{
    return to_json(p.base(), p.matrix(), "sim");
}

std::string emit_relation(const StrictRel &r)
{
    return relation_to_json(r).dump(2) + "\n";
}

std::string emit_relation(const PosetRel &p)
{
    return relation_to_json(p).dump(2) + "\n";
}

SeqCompareInput parse_seq_compare(std::string_view text, const std::filesystem::path &dir)
{
    auto j = parse_json(text);
    if (!j.is_object())
        throw ParseError("seq-compare document must be a JSON object");
    if (!j.contains("base"))
        throw ParseError("field 'base': missing");

    RelationDoc doc;
    if (j["base"].is_string())
        doc = read_relation_file(dir / j["base"].get<std::string>());
    else
        doc = relation_from_json(j["base"]);
    if (doc.kind != RelationKind::Less)
        throw ParseError("field 'base': expected a strict relation");

    auto base = std::make_shared<const StrictRel>(doc.as_strict());
    for (const char *f : {"f", "g"})
        if (!j.contains(f))
            throw ParseError(std::string("field '") + f + "': missing");
    return {base, seq_from_json(j["f"], "f", base), seq_from_json(j["g"], "g", base)};
}

} // namespace ordkit
