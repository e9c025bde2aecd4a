#pragma once

#include "ordkit/setoid.hpp"

#include <span>
#include <vector>

namespace ordkit {

/// A pair (left, right) of a product carrier; flattened as left*|B| + right.
struct ProductElement
{
    Index left = 0;
    Index right = 0;

    bool operator==(const ProductElement &) const = default;
};

inline Index flatten(ProductElement e, std::size_t right_size) { return e.left * right_size + e.right; }
inline ProductElement unflatten(Index i, std::size_t right_size) { return {i / right_size, i % right_size}; }

/// Lexicographic order: (x,y) < (x',y') iff x < x', or x = x' and y < y'.
/// Pair equality is componentwise; labels are "(x,y)".
StrictRel lex_product(const StrictRel &a, const StrictRel &b);

/// Right fold of lex_product, relabelled with flat tuple labels "(x,y,z)".
/// The empty product is a one-element carrier labelled "()".
StrictRel lex_product_n(std::span<const StrictRel> parts);

/// Weak lexicographic order: x ≤_P x', x = x' forces y < y', and x ≠ x'
/// forces x < x'. The implications are read materially.
StrictRel weak_lex_product(const StrictRel &a, const StrictRel &b);

enum class CoarseSide
{
    Left,
    Right,
};

/// All |A|·|B| pairs; equality and order both look only at the chosen side.
StrictRel coarse_product(const StrictRel &a, const StrictRel &b, CoarseSide side);

/// x < y iff x ∼ y and not x = y.
StrictRel poset_to_strict(const PosetRel &p);

/// With < = poset_to_strict(p): not y < x implies x ∼ y, for all x, y.
/// Witness (x, y).
Verdict check_star_condition(const PosetRel &p);

/// `map[i]` is the image of source element i. Order embedding: x < y iff
/// f(x) < f(y), and equal elements map to equal elements. Witness (x, y).
/// Throws OrdError if the map is not total or leaves the target carrier.
Verdict check_embedding(const StrictRel &source, const StrictRel &target, std::span<const Index> map);

/// An embedding that hits every equality class of the target. A
/// surjectivity failure has the one-element witness (t) of the first missed
/// target representative.
Verdict check_isomorphism(const StrictRel &source, const StrictRel &target, std::span<const Index> map);

std::vector<Index> identity_map(std::size_t n);

} // namespace ordkit
