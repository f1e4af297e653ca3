#include "sandtile/exact.hpp"

namespace sandtile {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    std::string t = s;
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            Int num(t);
            return Rat(num);
        }
        Int num(t.substr(0, slash));
        Int den(t.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator in '" + s + "'");
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational literal '" + s + "'");
    }
}

std::string format_rational(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace sandtile
