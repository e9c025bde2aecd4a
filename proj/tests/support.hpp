#pragma once

#include "ordkit/setoid.hpp"

#include <string>
#include <vector>

namespace fixtures {

using ordkit::LabelPair;
using ordkit::Setoid;
using ordkit::StrictRel;

inline StrictRel rel(std::vector<std::string> labels, std::vector<LabelPair> less, std::vector<LabelPair> equal = {})
{
    return ordkit::make_strict_rel(ordkit::make_setoid(std::move(labels), equal), less);
}

// {a,b,c} with only a<b.
inline StrictRel one_arrow() { return rel({"a", "b", "c"}, {{"a", "b"}}); }

// 0 < 1 < ... < n-1, transitively closed.
inline StrictRel chain(std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(std::to_string(i));
    std::vector<LabelPair> less;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            less.emplace_back(labels[i], labels[j]);
    return rel(labels, less);
}

inline StrictRel empty(std::vector<std::string> labels) { return rel(std::move(labels), {}); }

inline std::vector<ordkit::Index> idx(std::initializer_list<ordkit::Index> xs) { return xs; }

} // namespace fixtures
