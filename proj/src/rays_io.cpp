#include "contextlab/rays_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace contextlab {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

const std::regex kExactRe(R"(^([+-]?\d+(?:/\d+)?)?(?:([+-]\d+(?:/\d+)?|[+-]?\d+(?:/\d+)?(?=i$))i)?$)");
const std::regex kFloatNum(R"([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)");

}  // namespace

ExactScalar parse_exact_component(const std::string& tok) {
    std::string s = strip(tok);
    if (s.empty()) throw error("empty component");
    if (s.back() == 'i') {
        // pure imaginary or real+imag
        std::smatch m;
        if (!std::regex_match(s, m, kExactRe) || !m[2].matched)
            throw error("bad exact component: " + tok);
        Rational re = m[1].matched && m[1].length() > 0 ? parse_rational(m[1].str()) : Rational(0);
        return {re, parse_rational(m[2].str())};
    }
    return {parse_rational(s), Rational(0)};
}

FloatScalar parse_float_component(const std::string& tok) {
    std::string s = strip(tok);
    if (s.empty()) throw error("empty component");
    if (s.back() == 'i') {
        std::string body = s.substr(0, s.size() - 1);
        // split at the sign of the imaginary part (not at position 0, not
        // right after an exponent marker)
        for (size_t i = body.size(); i-- > 1;) {
            if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                std::string re = body.substr(0, i), im = body.substr(i);
                if (std::regex_match(re, kFloatNum) && std::regex_match(im, kFloatNum))
                    return {std::stod(re), std::stod(im)};
                break;
            }
        }
        if (std::regex_match(body, kFloatNum)) return {0.0, std::stod(body)};
        throw error("bad float component: " + tok);
    }
    if (!std::regex_match(s, kFloatNum)) throw error("bad float component: " + tok);
    return {std::stod(s), 0.0};
}

ModalRaySet parse_rays(std::istream& in) {
    std::string line;
    bool have_header = false;
    int dim = 0;
    bool exact = true;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> labels;
    bool any_label = false;

    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = strip(line);
        if (line.empty()) continue;

        std::istringstream toks(line);
        std::string first;
        toks >> first;
        if (!have_header) {
            std::smatch m;
            static const std::regex hdr(R"(^dim=(\d+)$)");
            if (!std::regex_match(first, m, hdr))
                throw error("rays file must start with `dim=<d> mode=<exact|float>`");
            dim = std::stoi(m[1].str());
            std::string modetok;
            toks >> modetok;
            if (modetok == "mode=exact")
                exact = true;
            else if (modetok == "mode=float")
                exact = false;
            else
                throw error("bad mode in rays header");
            if (dim < 2) throw error("rays header needs dim >= 2");
            have_header = true;
            continue;
        }
        std::vector<std::string> comps = split(first, ',');
        if (static_cast<int>(comps.size()) != dim)
            throw error("component count does not match dim: " + line);
        std::string label;
        std::string rest;
        while (toks >> rest) {
            if (rest.rfind("label=", 0) == 0) {
                label = rest.substr(6);
                any_label = true;
            } else {
                throw error("unexpected token in rays file: " + rest);
            }
        }
        rows.push_back(std::move(comps));
        labels.push_back(std::move(label));
    }
    if (!have_header) throw error("empty rays file");
    if (rows.empty()) throw error("rays file has no vectors");
    if (!any_label) labels.clear();

    if (exact) {
        std::vector<ExactVec> vecs;
        for (const auto& row : rows) {
            std::vector<ExactScalar> cs;
            for (const auto& t : row) cs.push_back(parse_exact_component(t));
            vecs.emplace_back(std::move(cs));
        }
        return ExactRaySet::from_vectors(vecs, std::move(labels));
    }
    std::vector<FloatVec> vecs;
    for (const auto& row : rows) {
        std::vector<FloatScalar> cs;
        for (const auto& t : row) cs.push_back(parse_float_component(t));
        vecs.emplace_back(std::move(cs));
    }
    return FloatRaySet::from_vectors(vecs, std::move(labels));
}

ModalRaySet read_rays_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open rays file: " + path);
    return parse_rays(in);
}

namespace {

std::string format_component(const ExactScalar& z) {
    if (z.im == 0) return z.re.get_str();
    std::string s = z.re == 0 ? "" : z.re.get_str();
    std::string im = z.im.get_str();
    if (!s.empty() && im[0] != '-') s += '+';
    return s + im + "i";
}

std::string format_component(const FloatScalar& z) {
    char buf[96];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", z.real());
    } else {
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    }
    return buf;
}

template <class S>
std::string format_set(const RaySet<S>& rs, const char* mode) {
    std::string out = "dim=" + std::to_string(rs.dim) + " mode=" + mode + "\n";
    for (int i = 0; i < rs.size(); ++i) {
        const auto& v = rs.rays[static_cast<size_t>(i)].vec();
        for (int j = 0; j < rs.dim; ++j) {
            if (j) out += ',';
            out += format_component(v[j]);
        }
        if (!rs.labels.empty() && !rs.labels[static_cast<size_t>(i)].empty())
            out += " label=" + rs.labels[static_cast<size_t>(i)];
        out += '\n';
    }
    return out;
}

}  // namespace

std::string format_rays(const ModalRaySet& rays) {
    if (const auto* e = std::get_if<ExactRaySet>(&rays)) return format_set(*e, "exact");
    return format_set(std::get<FloatRaySet>(rays), "float");
}

void write_rays_file(const std::string& path, const ModalRaySet& rays) {
    std::ofstream out(path);
    if (!out) throw error("cannot write rays file: " + path);
    out << format_rays(rays);
}

}  // namespace contextlab
