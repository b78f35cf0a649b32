#include "gamma3/element_text.hpp"

#include <cctype>
#include <cstdlib>

#include "gamma3/errors.hpp"

namespace gamma3 {

namespace {

void skip_ws(std::string_view t, std::size_t* pos) {
    while (*pos < t.size() && std::isspace(static_cast<unsigned char>(t[*pos]))) ++*pos;
}

void expect(std::string_view t, std::size_t* pos, char c) {
    skip_ws(t, pos);
    if (*pos >= t.size() || t[*pos] != c)
        throw ParseError(std::string("expected '") + c + "'", *pos);
    ++*pos;
}

std::string identifier(std::string_view t, std::size_t* pos) {
    skip_ws(t, pos);
    std::size_t start = *pos;
    while (*pos < t.size() && std::isalnum(static_cast<unsigned char>(t[*pos]))) ++*pos;
    if (*pos == start) throw ParseError("expected name", start);
    return std::string(t.substr(start, *pos - start));
}

long long parse_int(std::string_view t, std::size_t* pos) {
    skip_ws(t, pos);
    std::size_t i = *pos;
    bool neg = false;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) {
        neg = t[i] == '-';
        ++i;
    }
    if (i >= t.size() || !std::isdigit(static_cast<unsigned char>(t[i])))
        throw ParseError("expected integer", i);
    long long v = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
        v = v * 10 + (t[i] - '0');
        if (v > 1000000) throw ParseError("integer out of range", i);
        ++i;
    }
    *pos = i;
    return neg ? -v : v;
}

TriadicHalf coefficient(std::string_view t, std::size_t* pos) {
    skip_ws(t, pos);
    return TriadicHalf::parse(t, pos);
}

}  // namespace

WaveletElement parse_element(const GroupData& gd, std::string_view text) {
    std::size_t pos = 0;
    expect(text, &pos, '(');
    expect(text, &pos, '[');

    const TriadicHalf cu = coefficient(text, &pos);
    skip_ws(text, &pos);
    if (pos >= text.size() || text[pos] != 'u') throw ParseError("expected 'u' term", pos);
    ++pos;

    skip_ws(text, &pos);
    if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
        throw ParseError("expected 'v' term", pos);
    const bool v_neg = text[pos] == '-';
    ++pos;
    TriadicHalf cv = coefficient(text, &pos);
    if (v_neg) cv = -cv;
    skip_ws(text, &pos);
    if (pos >= text.size() || text[pos] != 'v') throw ParseError("expected 'v' term", pos);
    ++pos;

    LatticeVector x{cu, cv};

    // Optional glide term, literally "+ 1/2 z".
    skip_ws(text, &pos);
    if (pos < text.size() && text[pos] == '+') {
        ++pos;
        const std::size_t coeff_pos = pos;
        const TriadicHalf q = coefficient(text, &pos);
        skip_ws(text, &pos);
        if (pos >= text.size() || text[pos] != 'z') throw ParseError("expected 'z'", pos);
        ++pos;
        if (!(q == TriadicHalf::one_half()))
            throw ParseError("glide term must be exactly 1/2 z", coeff_pos);
        if (!gd.glide_z())
            throw InvalidElement("group " + gd.name() + " has no glide vector z");
        x = x + gd.glide_z()->halved();
    }

    expect(text, &pos, ',');
    const std::string name = identifier(text, &pos);
    const int L = gd.find_name(name);
    if (L < 0)
        throw InvalidElement("point element '" + name + "' not in group " + gd.name());
    expect(text, &pos, ']');
    expect(text, &pos, ',');
    const long long ell = parse_int(text, &pos);
    expect(text, &pos, ')');
    skip_ws(text, &pos);
    if (pos != text.size()) throw ParseError("trailing characters after element", pos);

    const WaveletElement g{x, L, static_cast<int>(ell)};
    require_valid(gd, g);
    return g;
}

std::string print_element(const GroupData& gd, const WaveletElement& g) {
    const TriadicHalf& b = g.x.b;
    std::string out = "([" + g.x.a.str() + " u ";
    if (b.num() < 0)
        out += "- " + (-b).str();
    else
        out += "+ " + b.str();
    out += " v, " + gd.point(g.point).name + "], " + std::to_string(g.ell) + ")";
    return out;
}

FinSuppVector parse_finsupp(const GroupData& gd, std::string_view text) {
    FinSuppVector f;
    std::size_t pos = 0;
    skip_ws(text, &pos);
    while (pos < text.size()) {
        expect(text, &pos, '(');
        const std::string name = identifier(text, &pos);
        const int L = gd.find_name(name);
        if (L < 0)
            throw InvalidElement("point element '" + name + "' not in group " + gd.name());
        expect(text, &pos, ',');
        const long long m = parse_int(text, &pos);
        expect(text, &pos, ')');
        expect(text, &pos, ':');
        skip_ws(text, &pos);
        char* end = nullptr;
        const double re = std::strtod(text.data() + pos, &end);
        if (end == text.data() + pos) throw ParseError("expected real part", pos);
        pos = static_cast<std::size_t>(end - text.data());
        expect(text, &pos, ',');
        skip_ws(text, &pos);
        const double im = std::strtod(text.data() + pos, &end);
        if (end == text.data() + pos) throw ParseError("expected imaginary part", pos);
        pos = static_cast<std::size_t>(end - text.data());
        f.add(L, static_cast<int>(m), Complex{re, im});
        skip_ws(text, &pos);
        if (pos < text.size()) {
            expect(text, &pos, ';');
            skip_ws(text, &pos);
        }
    }
    return f;
}

}  // namespace gamma3
