#include "riesz/rational.hpp"

#include <algorithm>
#include <cctype>

namespace riesz {

std::string format_rat(const Rat& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) {
        s += '/';
        s += q.get_den().get_str();
    }
    return s;
}

Rat parse_rat(const std::string& s) {
    size_t i = 0;
    auto digits = [&](size_t from) {
        size_t k = from;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        return k;
    };
    if (i < s.size() && s[i] == '-') ++i;
    size_t num_end = digits(i);
    if (num_end == i) fail(Errc::ParseError, "bad rational: '" + s + "'");
    i = num_end;
    if (i < s.size()) {
        if (s[i] != '/') fail(Errc::ParseError, "bad rational: '" + s + "'");
        size_t den_end = digits(i + 1);
        if (den_end != s.size() || den_end == i + 1)
            fail(Errc::ParseError, "bad rational: '" + s + "'");
    }
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        fail(Errc::ParseError, "bad rational: '" + s + "'");
    if (q.get_den() == 0) fail(Errc::ParseError, "zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

QInterval iadd(const QInterval& a, const QInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

QInterval isub(const QInterval& a, const QInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

QInterval ineg(const QInterval& a) { return {-a.hi, -a.lo}; }

QInterval imul(const QInterval& a, const QInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

QInterval iscale(const Rat& c, const QInterval& a) {
    if (sgn(c) >= 0) return {c * a.lo, c * a.hi};
    return {c * a.hi, c * a.lo};
}

} // namespace riesz
