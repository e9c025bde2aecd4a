#pragma once

#include "ordkit/lazy_seq.hpp"
#include "ordkit/setoid.hpp"

#include <json.hpp>

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

namespace ordkit {

/// Malformed input: bad JSON syntax (message carries line and column) or a
/// schema violation (message names the field).
class ParseError : public OrdError
{
public:
    using OrdError::OrdError;
};

enum class RelationKind
{
    Less,
    Sim,
};

/// A relation file as written: the matrix holds exactly the listed pairs,
/// with no saturation, so well-definedness can be checked afterwards.
struct RelationDoc
{
    RelationKind kind = RelationKind::Less;
    Setoid base;
    BoolMatrix rel;

    StrictRel as_strict() const { return StrictRel(base, rel); }
    PosetRel as_poset() const { return PosetRel(base, rel); }
};

/// { "elements": [...], "equal": [[l, r], ...], "less" | "sim": [[l, r], ...] }
/// "equal" is optional; a document without "sim" is a strict relation and
/// "less" defaults to empty.
RelationDoc parse_relation(std::string_view text);
RelationDoc relation_from_json(const nlohmann::json &j);
RelationDoc read_relation_file(const std::filesystem::path &path);

nlohmann::ordered_json relation_to_json(const StrictRel &r);
nlohmann::ordered_json relation_to_json(const PosetRel &p);
/// Pretty-printed with a trailing newline.
std::string emit_relation(const StrictRel &r);
std::string emit_relation(const PosetRel &p);

struct SeqCompareInput
{
    std::shared_ptr<const StrictRel> base;
    EvConstSeq f;
    EvConstSeq g;
};

/// { "base": <relation object or path>, "f": {"prefix": [...], "tail": l},
///   "g": {...} }. A string base is resolved against `dir`.
SeqCompareInput parse_seq_compare(std::string_view text, const std::filesystem::path &dir = {});

} // namespace ordkit
