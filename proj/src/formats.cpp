#include "asqf/formats.hpp"

#include <algorithm>
#include <cctype>

namespace asqf {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

uint64_t parse_uint(const std::string& s, const char* what) {
    if (!all_digits(s) || s.size() > 18)
        throw Error(ErrorKind::InvalidInput, std::string("expected a number for ") + what);
    return std::stoull(s);
}

std::vector<uint16_t> parse_uint_list(const std::string& s, const char* what) {
    std::vector<uint16_t> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        uint64_t v = parse_uint(s.substr(pos, comma - pos), what);
        if (v > UINT16_MAX)
            throw Error(ErrorKind::InvalidInput, std::string("coefficient out of range in ") + what);
        out.push_back(uint16_t(v));
        pos = comma + 1;
        if (comma == s.size()) break;
    }
    return out;
}

std::string join_uint_list(const std::vector<uint16_t>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

} // namespace

FieldSpec parse_field_spec(const std::string& text) {
    FieldSpec spec;
    bool have_p = false, have_s = false, have_n = false, have_base = false, have_top = false;
    size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
        if (pos >= text.size()) break;
        size_t end = pos;
        while (end < text.size() && !std::isspace((unsigned char)text[end])) ++end;
        std::string tok = text.substr(pos, end - pos);
        pos = end;
        size_t eq = tok.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::InvalidInput, "field spec token without '=': " + tok);
        std::string key = tok.substr(0, eq);
        std::string val = tok.substr(eq + 1);
        auto claim = [&](bool& seen) {
            if (seen) throw Error(ErrorKind::InvalidInput, "duplicate field spec key: " + key);
            seen = true;
        };
        if (key == "p") {
            claim(have_p);
            spec.p = uint32_t(parse_uint(val, "p"));
        } else if (key == "s") {
            claim(have_s);
            spec.s = uint32_t(parse_uint(val, "s"));
        } else if (key == "n") {
            claim(have_n);
            spec.n = uint32_t(parse_uint(val, "n"));
        } else if (key == "base") {
            claim(have_base);
            if (!val.empty()) spec.base = parse_uint_list(val, "base");
        } else if (key == "top") {
            claim(have_top);
            if (!val.empty()) spec.top = parse_uint_list(val, "top");
        } else {
            throw Error(ErrorKind::InvalidInput, "unknown field spec key: " + key);
        }
    }
    if (!have_p || !have_n)
        throw Error(ErrorKind::InvalidInput, "field spec needs at least p= and n=");
    return spec;
}

Ctx field_from_spec(const FieldSpec& spec, uint64_t budget) {
    return make_field(spec.p, spec.s, spec.n, spec.base, spec.top, budget);
}

std::string field_spec_text(const FieldCtx& K) {
    std::string out = "p=" + std::to_string(K.p) + " s=" + std::to_string(K.s) +
                      " n=" + std::to_string(K.n);
    out += " base=" + join_uint_list(K.fq.modulus);
    out += " top=" + join_uint_list(K.top_modulus);
    return out;
}

LinPoly parse_linpoly(const Ctx& K, const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace((unsigned char)ch)) s += ch;
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']')
            throw Error(ErrorKind::InvalidInput, "unbalanced brackets in coefficient list");
        s = s.substr(1, s.size() - 2);
    }

    std::vector<FFElem> coeffs;
    size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == '(') {
            size_t close = s.find(')', pos);
            if (close == std::string::npos)
                throw Error(ErrorKind::InvalidInput, "unbalanced parentheses in coefficient");
            std::vector<uint16_t> c = parse_uint_list(s.substr(pos + 1, close - pos - 1), "coefficient");
            if (c.size() > K->n)
                throw Error(ErrorKind::InvalidInput, "coordinate tuple longer than n");
            for (uint16_t v : c)
                if (v >= K->q)
                    throw Error(ErrorKind::InvalidInput, "coordinate not an F_q value");
            c.resize(K->n, 0);
            coeffs.push_back(K->from_coords(c));
            pos = close + 1;
            if (pos < s.size()) {
                if (s[pos] != ',')
                    throw Error(ErrorKind::InvalidInput, "expected ',' after coefficient");
                ++pos;
                if (pos == s.size())
                    throw Error(ErrorKind::InvalidInput, "trailing ',' in coefficient list");
            }
        } else {
            size_t comma = s.find(',', pos);
            size_t end = (comma == std::string::npos) ? s.size() : comma;
            uint64_t v = parse_uint(s.substr(pos, end - pos), "coefficient");
            if (v >= K->q)
                throw Error(ErrorKind::InvalidInput, "coefficient not an F_q value");
            coeffs.push_back(K->from_fq(uint16_t(v)));
            pos = end;
            if (comma != std::string::npos) {
                ++pos;
                if (pos == s.size())
                    throw Error(ErrorKind::InvalidInput, "trailing ',' in coefficient list");
            }
        }
    }
    return make_linpoly(K, coeffs);
}

std::string linpoly_text(const LinPoly& L) {
    const FieldCtx& K = *L.ctx;
    std::string out = "[";
    for (uint32_t i = 0; i < K.n; ++i) {
        if (i) out += ',';
        const FFElem& a = L.a[i];
        if (K.is_in_base_field(a)) {
            out += std::to_string(K.as_fq(a));
        } else {
            out += '(';
            out += join_uint_list(a.coords());
            out += ')';
        }
    }
    out += ']';
    return out;
}

} // namespace asqf
