#include "nakayama/literal.hpp"

#include <cctype>
#include <sstream>

#include "nakayama/errors.hpp"
#include "nakayama/hom.hpp"
#include "nakayama/translate.hpp"

namespace nakayama {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat_arrow() {
        skip_ws();
        if (i + 1 < s.size() && s[i] == '-' && s[i + 1] == '>') {
            i += 2;
            return true;
        }
        return false;
    }
    int integer() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == start || (i == start + 1 && !std::isdigit((unsigned char)s[start])))
            throw ParameterError("object literal: expected integer at position " +
                                 std::to_string(start));
        return std::stoi(s.substr(start, i - start));
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
};

Interval parse_one_interval(const AlgebraDesc& desc, Cursor& c) {
    c.skip_ws();
    if (c.i >= c.s.size()) throw ParameterError("object literal: expected interval");
    char k = c.s[c.i];
    Interval iv{0, 0};
    if (k == 'M') {
        ++c.i;
        int a = c.integer();
        if (!c.eat(',')) throw ParameterError("object literal: M<a>,<b> needs a comma");
        int b = c.integer();
        iv = Interval{a, b};
    } else if (k == 'P') {
        ++c.i;
        iv = projective_interval(desc, c.integer());
    } else if (k == 'I') {
        ++c.i;
        iv = injective_interval(desc, c.integer());
    } else if (k == 'S') {
        ++c.i;
        iv = simple_interval(c.integer());
    } else {
        throw ParameterError(std::string("object literal: unexpected character '") + k + "'");
    }
    if (!valid_interval(desc, iv)) throw ParameterError("object literal: invalid interval");
    return iv;
}

ModuleObject parse_sum(const AlgebraDesc& desc, Cursor& c) {
    std::vector<Interval> ivs{parse_one_interval(desc, c)};
    while (c.eat('+')) ivs.push_back(parse_one_interval(desc, c));
    return ModuleObject(std::move(ivs));
}

// coefficient 1 on every cell with a basis hom; rejects genuinely ambiguous
// shapes where repeated summands face a hom
ModMorphism canonical_differential(const ModuleObject& src, const ModuleObject& tgt) {
    ModMorphism d(src, tgt);
    for (std::size_t t = 0; t < tgt.count(); ++t)
        for (std::size_t s = 0; s < src.count(); ++s) {
            if (!hom_nonzero(src.summands()[s], tgt.summands()[t])) continue;
            bool dup_src = false, dup_tgt = false;
            for (std::size_t s2 = 0; s2 < src.count(); ++s2)
                dup_src |= s2 != s && src.summands()[s2] == src.summands()[s];
            for (std::size_t t2 = 0; t2 < tgt.count(); ++t2)
                dup_tgt |= t2 != t && tgt.summands()[t2] == tgt.summands()[t];
            if (dup_src || dup_tgt)
                throw ParameterError("object literal: ambiguous canonical differential");
            d.entry(t, s) = 1;
        }
    return d;
}

}  // namespace

Interval parse_interval(const AlgebraDesc& desc, const std::string& text) {
    Cursor c{text};
    Interval iv = parse_one_interval(desc, c);
    if (!c.done()) throw ParameterError("interval literal: trailing input");
    return iv;
}

Complex parse_complex(const AlgebraDesc& desc, const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    if (c.i < c.s.size() && c.s[c.i] == '0') {
        ++c.i;
        if (!c.done()) throw ParameterError("object literal: trailing input after 0");
        return Complex::zero(desc);
    }
    std::vector<ModuleObject> terms;
    if (c.eat('[')) {
        terms.push_back(parse_sum(desc, c));
        while (c.eat_arrow()) terms.push_back(parse_sum(desc, c));
        if (!c.eat(']')) throw ParameterError("object literal: missing ']'");
    } else {
        terms.push_back(parse_sum(desc, c));
    }
    int shift_k = 0;
    if (c.eat('[')) {
        shift_k = c.integer();
        if (!c.eat(']')) throw ParameterError("object literal: missing ']' after shift");
    }
    if (!c.done()) throw ParameterError("object literal: trailing input");

    Complex x(desc);
    int top = 0;  // right-most term in degree 0
    for (std::size_t k = 0; k < terms.size(); ++k)
        x.set_term(top - (int)(terms.size() - 1 - k), terms[k]);
    for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
        int p = top - (int)(terms.size() - 1 - k);
        ModMorphism d = canonical_differential(x.term(p), x.term(p + 1));
        x.set_diff(p, d);
    }
    x.normalize();
    try {
        x.validate();
    } catch (const InternalError& e) {
        throw ParameterError(std::string("object literal: ") + e.what());
    }
    return shift_k == 0 ? x : shift(x, shift_k);
}

std::string print_complex(const Complex& x, std::uint64_t seed) {
    const AlgebraDesc& desc = x.desc();
    Complex c = canonical_form(x);
    if (c.is_zero()) return "0";

    auto sum_name = [&](const ModuleObject& m) {
        std::ostringstream os;
        for (std::size_t k = 0; k < m.count(); ++k) {
            if (k) os << "+";
            os << interval_name(desc, m.summands()[k]);
        }
        return os.str();
    };

    // shifted module: single cohomology degree
    auto prof = cohomology_profile(c);
    if (prof.size() == 1) {
        int p = prof.begin()->first;
        std::string body = sum_name(prof.begin()->second);
        if (p != 0) body += "[" + std::to_string(-p) + "]";
        return body;
    }

    // minimal projective complex literal
    std::ostringstream os;
    os << "[";
    for (int p = c.min_degree(); p <= c.max_degree(); ++p) {
        if (p != c.min_degree()) os << " -> ";
        os << sum_name(c.term(p));
    }
    os << "]";
    if (c.max_degree() != 0) os << "[" << -c.max_degree() << "]";
    std::string lit = os.str();
    // the all-ones convention may in principle lose scalar information;
    // flag a literal that does not reparse to the same object
    try {
        if (is_isomorphic(parse_complex(desc, lit), c, seed)) return lit;
    } catch (const ParameterError&) {
    }
    return lit + "(*)";
}

}  // namespace nakayama
