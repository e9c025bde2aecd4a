#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordkit {

/// Dense element index into a finite carrier.
using Index = std::size_t;
using LabelPair = std::pair<std::string, std::string>;

class OrdError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Outcome of a universally quantified check. A failing verdict always
/// carries the tuple of element indices that violates the property.
struct Verdict
{
    bool holds = true;
    std::vector<Index> witness;

    static Verdict pass() { return {}; }
    static Verdict fail(std::vector<Index> w) { return {false, std::move(w)}; }

    explicit operator bool() const { return holds; }
    bool operator==(const Verdict &) const = default;
};

/// Square boolean matrix stored row-major.
class BoolMatrix
{
public:
    BoolMatrix() = default;
    explicit BoolMatrix(std::size_t n, bool value = false)
        : n_(n), cells_(n * n, value ? 1 : 0)
    {
    }

    /// Cell (i, j) takes bit i*n + j of `bits`; requires n*n <= 64.
    static BoolMatrix from_bits(std::size_t n, std::uint64_t bits);

    std::size_t size() const { return n_; }
    bool operator()(Index i, Index j) const { return cells_[i * n_ + j] != 0; }
    void set(Index i, Index j, bool value = true) { cells_[i * n_ + j] = value ? 1 : 0; }

    BoolMatrix transposed() const;
    /// Elementwise inclusion; on failure the witness is the first (i, j) in
    /// row-major order set here but not in `other`.
    Verdict subset_of(const BoolMatrix &other) const;
    /// Row-major '0'/'1' string; the canonical key for tie-breaking.
    std::string bit_string() const;

    bool operator==(const BoolMatrix &) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// Finite carrier with an equivalence relation serving as equality. Each
/// class is represented by its smallest member.
class Setoid
{
public:
    Setoid() = default;
    /// `eq_class` must be in canonical form: eq_class[i] <= i and
    /// eq_class[eq_class[i]] == eq_class[i]. Labels must be distinct.
    Setoid(std::vector<std::string> labels, std::vector<Index> eq_class);

    static Setoid identity(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string &label(Index i) const { return labels_.at(i); }
    const std::vector<std::string> &labels() const { return labels_; }
    std::optional<Index> find(std::string_view label) const;
    /// Throws OrdError on an unknown label.
    Index index_of(std::string_view label) const;

    Index representative(Index i) const { return eq_class_[i]; }
    const std::vector<Index> &eq_classes() const { return eq_class_; }
    bool eq(Index i, Index j) const { return eq_class_[i] == eq_class_[j]; }
    std::size_t class_count() const;
    bool is_identity() const;

    bool operator==(const Setoid &) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<Index> eq_class_;
};

/// A strict relation `<` over a setoid. Construction does not saturate;
/// use make_strict_rel for a relation that is well defined by construction.
class StrictRel
{
public:
    StrictRel() = default;
    StrictRel(Setoid base, BoolMatrix rel);

    const Setoid &base() const { return base_; }
    const BoolMatrix &matrix() const { return rel_; }
    std::size_t size() const { return base_.size(); }
    bool less(Index i, Index j) const { return rel_(i, j); }
    bool eq(Index i, Index j) const { return base_.eq(i, j); }

    bool operator==(const StrictRel &) const = default;

private:
    Setoid base_;
    BoolMatrix rel_;
};

/// A weak relation `∼` over a setoid; poset axioms are checked, not assumed.
class PosetRel
{
public:
    PosetRel() = default;
    PosetRel(Setoid base, BoolMatrix rel);

    const Setoid &base() const { return base_; }
    const BoolMatrix &matrix() const { return rel_; }
    std::size_t size() const { return base_.size(); }
    bool sim(Index i, Index j) const { return rel_(i, j); }
    bool eq(Index i, Index j) const { return base_.eq(i, j); }

    bool operator==(const PosetRel &) const = default;

private:
    Setoid base_;
    BoolMatrix rel_;
};

/// Equivalence closure of identity plus `equal_pairs`, canonicalised.
Setoid make_setoid(std::vector<std::string> labels, std::span<const LabelPair> equal_pairs);

/// Relation containing every pair eq-related to a listed pair.
StrictRel make_strict_rel(Setoid base, std::span<const LabelPair> less_pairs);
PosetRel make_poset_rel(Setoid base, std::span<const LabelPair> sim_pairs);

/// Checks that `rel` respects `base` equality in each argument. Witness is
/// (x, x', y, y') with rel(x, y), eq(x, x'), eq(y, y') and not rel(x', y').
Verdict check_well_defined(const Setoid &base, const BoolMatrix &rel);
inline Verdict check_well_defined(const StrictRel &r) { return check_well_defined(r.base(), r.matrix()); }
inline Verdict check_well_defined(const PosetRel &p) { return check_well_defined(p.base(), p.matrix()); }

StrictRel dual(const StrictRel &r);

/// Short deterministic description, e.g. "n=3 eq=[0,1,2] rel=010000000".
std::string describe(const StrictRel &r);

} // namespace ordkit
