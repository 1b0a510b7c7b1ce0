#include "simplexforge/body_spec.hpp"

#include <cmath>
#include <cstdlib>

#include "simplexforge/errors.hpp"

namespace simplexforge {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool eat(const std::string& token) {
        if (text.compare(pos, token.size(), token) == 0) {
            pos += token.size();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw SpecParseError(pos, "body spec at position " + std::to_string(pos) + ": " +
                                      message + " in '" + text + "'");
    }

    double number(const char* what) {
        if (text.compare(pos, 3, "inf") == 0) {
            pos += 3;
            return INFINITY;
        }
        const char* begin = text.c_str() + pos;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) fail(std::string("expected ") + what);
        pos += static_cast<std::size_t>(end - begin);
        return v;
    }

    long integer(const char* what) {
        const char* begin = text.c_str() + pos;
        char* end = nullptr;
        const long v = std::strtol(begin, &end, 10);
        if (end == begin) fail(std::string("expected ") + what);
        pos += static_cast<std::size_t>(end - begin);
        return v;
    }

    void colon() {
        if (!eat(":")) fail("expected ':'");
    }

    /// Path component: everything up to the next ':' (profile files).
    std::string path() {
        const std::size_t cut = text.find(':', pos);
        if (cut == std::string::npos || cut == pos) fail("expected file path");
        std::string p = text.substr(pos, cut - pos);
        pos = cut;
        return p;
    }
};

LayeredBody parse_tower(Cursor& c);

LayeredBody parse_tower(Cursor& c) {
    if (c.eat("seg")) return LayeredBody::segment();
    if (c.eat("lp:")) {
        const std::size_t at = c.pos;
        const double p = c.number("exponent p");
        if (!(p >= 1.0)) {
            throw SpecParseError(at, "body spec at position " + std::to_string(at) +
                                         ": p < 1 is not a norm");
        }
        c.colon();
        const long n = c.integer("dimension n");
        if (n < 1) c.fail("dimension must be positive");
        return LayeredBody::lp_ball(p, static_cast<int>(n));
    }
    if (c.eat("cone:")) return parse_tower(c).extend(Profile::cone());
    if (c.eat("prism:")) return parse_tower(c).extend(Profile::prism());
    if (c.eat("profile:")) {
        const std::string file = c.path();
        c.colon();
        const Profile profile = load_profile_json(file);
        return parse_tower(c).extend(profile);
    }
    c.fail("unknown body kind");
}

}  // namespace

ParsedBody parse_body_spec(const std::string& spec) {
    if (spec.empty()) throw SpecParseError(0, "body spec is empty");
    Cursor c{spec};
    ParsedBody out;
    out.spec = spec;

    if (c.eat("smoothed:")) {
        const std::size_t core_at = c.pos;
        // The smoothing needs an exact distance-to-core oracle; the doubled
        // cone over the Euclidean disk is the supported core.
        if (!c.eat("cone:lp:2:2")) {
            throw SpecParseError(core_at,
                                 "body spec at position " + std::to_string(core_at) +
                                     ": smoothed bodies require the core cone:lp:2:2 "
                                     "(no distance oracle for other cores)");
        }
        c.colon();
        const double eps = c.number("epsilon");
        if (!(eps > 0.0) || !(eps < 1.0)) c.fail("epsilon must lie in (0, 1)");
        if (c.pos != spec.size()) c.fail("trailing characters");
        out.smoothed = make_smoothed_doubled_cone(eps);
        out.gauge = out.smoothed->gauge_view();
        return out;
    }

    const LayeredBody tower = parse_tower(c);
    if (c.pos != spec.size()) c.fail("trailing characters");
    out.layered = tower;
    out.gauge = tower.gauge_view();
    return out;
}

}  // namespace simplexforge
