#pragma once

// Named fixture spaces and a letter-based subset shorthand for tests.

#include <string_view>
#include <vector>

#include "topoideal/core.hpp"

namespace fixture {

using topoideal::FiniteTopology;
using topoideal::Ideal;
using topoideal::IdealSpace;
using topoideal::SubsetMask;

/// set("acd") is {a,c,d}.
inline SubsetMask set(std::string_view letters) {
    SubsetMask m;
    for (char c : letters) m |= SubsetMask::singleton(c - 'a');
    return m;
}

inline FiniteTopology topo(int n, std::initializer_list<std::string_view> opens) {
    std::vector<SubsetMask> family;
    for (std::string_view o : opens) family.push_back(set(o));
    return topoideal::make_topology(n, family);
}

inline FiniteTopology tau1() { return topo(4, {"", "ac", "d", "acd", "abcd"}); }
inline FiniteTopology tau2() { return topo(3, {"", "ab", "abc"}); }
inline FiniteTopology tau3() { return topo(3, {"", "b", "abc"}); }
inline FiniteTopology sigma3() { return topo(3, {"", "c", "abc"}); }
inline FiniteTopology nu3() { return topo(3, {"", "a", "abc"}); }
inline FiniteTopology sigma4() { return topo(4, {"", "acd", "abcd"}); }

inline IdealSpace s1() { return IdealSpace(tau1(), Ideal(4, set("cd"))); }
inline IdealSpace s2() { return IdealSpace(tau2(), Ideal(3, set("c"))); }
inline IdealSpace s3_tau() { return IdealSpace(tau3(), Ideal(3, set("c"))); }
inline IdealSpace s3_sigma() { return IdealSpace(sigma3(), Ideal(3, set("c"))); }

inline std::vector<int> identity(int n) {
    std::vector<int> f;
    for (int i = 0; i < n; ++i) f.push_back(i);
    return f;
}

} // namespace fixture
