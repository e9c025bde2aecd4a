#pragma once

#include "ordkit/setoid.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ordkit {

/// An element of X^ℕ that is constant from position |prefix| onwards.
struct EvConstSeq
{
    std::shared_ptr<const StrictRel> base;
    std::vector<Index> prefix;
    Index tail = 0;

    Index at(std::size_t position) const { return position < prefix.size() ? prefix[position] : tail; }
};

enum class SeqOutcome
{
    Less,
    Greater,
    Equal,
    Incomparable,
    UnknownAfter,
};

std::string to_string(SeqOutcome o);

struct SeqCompareVerdict
{
    SeqOutcome outcome = SeqOutcome::Equal;
    /// First position where the sequences differ under base equality.
    std::optional<std::size_t> witness;
    /// Set only by the bounded comparison.
    std::optional<std::size_t> fuel;

    bool operator==(const SeqCompareVerdict &) const = default;
};

/// Drops trailing prefix entries equal to the tail. Throws OrdError on an
/// index outside the base carrier.
EvConstSeq seq_normalize(const EvConstSeq &s);

/// Exact lexicographic comparison; both sequences are constant past the
/// longer prefix, so the scan is finite. Throws OrdError when the sequences
/// live over different structures.
SeqCompareVerdict seq_compare(const EvConstSeq &f, const EvConstSeq &g);

using SeqGenerator = std::function<Index(std::size_t)>;

/// Scans positions 0..fuel-1 only. Equality is never affirmed: if every
/// inspected position agrees the outcome is UnknownAfter(fuel).
SeqCompareVerdict seq_compare_bounded(const StrictRel &base, const SeqGenerator &f, const SeqGenerator &g,
                                      std::size_t fuel);

/// Every normalised sequence with |prefix| <= max_prefix_len, one per
/// pointwise-equality class (entries are class representatives).
std::vector<EvConstSeq> seq_universe(std::shared_ptr<const StrictRel> base, std::size_t max_prefix_len);

/// Pointwise equality under base equality.
bool seq_pointwise_equal(const EvConstSeq &f, const EvConstSeq &g);

} // namespace ordkit
