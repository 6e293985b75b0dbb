#include "fb/rational.hpp"

#include <ostream>

namespace fb {

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long p = std::stoll(s.substr(0, slash));
        long long q = std::stoll(s.substr(slash + 1));
        return Rat(p, q);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

} // namespace fb
