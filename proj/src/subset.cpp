#include "topoideal/subset.hpp"

namespace topoideal {

std::string default_point_name(int index) {
    return std::string(1, static_cast<char>('a' + index));
}

std::string to_string(SubsetMask s) {
    std::string out = "{";
    bool first = true;
    for (int x : s.points()) {
        if (!first) out += ',';
        out += default_point_name(x);
        first = false;
    }
    out += '}';
    return out;
}

std::string to_string(SubsetMask s, const std::vector<std::string>& names) {
    std::string out = "{";
    bool first = true;
    for (int x : s.points()) {
        if (!first) out += ',';
        out += names.at(static_cast<std::size_t>(x));
        first = false;
    }
    out += '}';
    return out;
}

} // namespace topoideal
