#pragma once

/*
 * descriptor.hpp — the textual function grammar used by the CLI
 *
 *   one | id | log
 *   arith:<w> | harmonic:<w> | geom:<w>
 *   power:r=<r>,a=<w>
 *   ph:<p> | stolarsky:<a> | alg:<p>
 *   transpose(<fn>) | adjoint(<fn>) | dual(<fn>)
 */

#include <charconv>
#include <string>

#include "opmean/errors.hpp"
#include "opmean/functions.hpp"

namespace opmean {

inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace detail {

inline double parse_number(const std::string &s, const std::string &ctx) {
    double v = 0.0;
    const char *first = s.data();
    const char *last = s.data() + s.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last)
        throw ParseError("bad number '" + s + "' in descriptor '" + ctx + "'");
    return v;
}

} // namespace detail

inline RepFunction parse_function(const std::string &spec) {
    std::string s;
    for (char c : spec)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty function descriptor");

    for (const char *xf : {"transpose", "adjoint", "dual"}) {
        const std::string prefix = std::string(xf) + "(";
        if (s.rfind(prefix, 0) == 0) {
            if (s.back() != ')')
                throw ParseError("unbalanced parentheses in descriptor '" + spec + "'");
            const RepFunction inner = parse_function(s.substr(prefix.size(), s.size() - prefix.size() - 1));
            if (prefix[0] == 't') return RepFunction::transpose_of(inner);
            if (prefix[0] == 'a') return RepFunction::adjoint_of(inner);
            return RepFunction::dual_of(inner);
        }
    }

    std::string name = s;
    std::string arg;
    if (const auto colon = s.find(':'); colon != std::string::npos) {
        name = s.substr(0, colon);
        arg = s.substr(colon + 1);
    }

    if (name == "one") return RepFunction::constant_one();
    if (name == "id") return RepFunction::identity();
    if (name == "log") return RepFunction::logarithmic();
    if (name == "arith") return RepFunction::arithmetic(detail::parse_number(arg, spec));
    if (name == "harmonic") return RepFunction::harmonic(detail::parse_number(arg, spec));
    if (name == "geom") return RepFunction::geometric(detail::parse_number(arg, spec));
    if (name == "ph") return RepFunction::petz_hasegawa(detail::parse_number(arg, spec));
    if (name == "stolarsky") return RepFunction::stolarsky(detail::parse_number(arg, spec));
    if (name == "alg") return RepFunction::power_difference(detail::parse_number(arg, spec));
    if (name == "power") {
        double r = 0.0, a = 0.0;
        bool have_r = false, have_a = false;
        std::size_t pos = 0;
        while (pos < arg.size()) {
            const auto comma = arg.find(',', pos);
            const std::string part = arg.substr(pos, comma == std::string::npos ? arg.size() - pos
                                                                                : comma - pos);
            const auto eq = part.find('=');
            if (eq == std::string::npos)
                throw ParseError("expected r=<num>,a=<num> in descriptor '" + spec + "'");
            const std::string key = part.substr(0, eq);
            const double val = detail::parse_number(part.substr(eq + 1), spec);
            if (key == "r") { r = val; have_r = true; }
            else if (key == "a") { a = val; have_a = true; }
            else throw ParseError("unknown power parameter '" + key + "' in '" + spec + "'");
            pos = comma == std::string::npos ? arg.size() : comma + 1;
        }
        if (!have_r || !have_a)
            throw ParseError("power descriptor needs both r= and a= in '" + spec + "'");
        return RepFunction::power_mean(r, a);
    }
    throw ParseError("unknown function family '" + name + "' in descriptor '" + spec + "'");
}

inline std::string format_function(const RepFunction &f) {
    switch (f.family()) {
        case Family::ConstantOne: return "one";
        case Family::Identity: return "id";
        case Family::Logarithmic: return "log";
        case Family::Arithmetic: return "arith:" + format_double(f.param1());
        case Family::Harmonic: return "harmonic:" + format_double(f.param1());
        case Family::Geometric: return "geom:" + format_double(f.param1());
        case Family::PowerMean:
            return "power:r=" + format_double(f.param1()) + ",a=" + format_double(f.param2());
        case Family::PetzHasegawa: return "ph:" + format_double(f.param1());
        case Family::Stolarsky: return "stolarsky:" + format_double(f.param1());
        case Family::PowerDifference: return "alg:" + format_double(f.param1());
        case Family::Transposed: return "transpose(" + format_function(f.inner()) + ")";
        case Family::Adjointed: return "adjoint(" + format_function(f.inner()) + ")";
        case Family::Dualized: return "dual(" + format_function(f.inner()) + ")";
    }
    throw ParseError("format_function: unreachable");
}

} // namespace opmean
