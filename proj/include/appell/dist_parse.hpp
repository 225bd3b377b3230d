#pragma once

// Parser for the distribution mini-language:
//
//   uniform | bernoulli[:p=<rat>] | normal[:mu=<rat>,sigma2=<rat>]
//   | gamma:beta=<rat>[,alpha=<rat>] | exp[:alpha=<rat>] | lognormal
//   | point:c=<rat> | sum(<spec>,<spec>) | affine:a=<rat>,b=<rat>(<spec>)
//   | moments:[<rat>,<rat>,...]

#include <cctype>
#include <map>
#include <string>
#include <string_view>

#include "distribution.hpp"

namespace appell {

namespace detail {

class DistParser {
public:
    explicit DistParser(std::string_view text) : text_(text) {}

    DistSpec parse_all() {
        DistSpec spec = parse_spec();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return spec;
    }

private:
    using Params = std::map<std::string, Rational>;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("distribution '" + std::string(text_) + "': " + what + " at offset " +
                         std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string identifier() {
        skip_ws();
        const auto start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    Rational rational() {
        skip_ws();
        const auto start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
                text_[pos_] == '-' || text_[pos_] == '+'))
            ++pos_;
        try {
            return parse_rational(text_.substr(start, pos_ - start));
        } catch (const ParseError&) {
            pos_ = start;
            fail("expected a rational");
        }
    }

    // key=value pairs after ':'; stops before a name not followed by '='
    // so that "sum(normal:mu=1,uniform)" parses.
    Params params() {
        Params out;
        if (!accept(':')) return out;
        for (;;) {
            const std::string key = identifier();
            if (!accept('=')) fail("expected key=value");
            if (out.count(key)) fail("duplicate parameter '" + key + "'");
            out.emplace(key, rational());
            const auto before_comma = pos_;
            if (!accept(',')) break;
            // a following name without '=' belongs to the enclosing list
            const auto after_comma = pos_;
            identifier();
            const bool is_param = accept('=');
            pos_ = is_param ? after_comma : before_comma;
            if (!is_param) break;
        }
        return out;
    }

    static void allow(const Params& p, std::initializer_list<const char*> keys, const std::string& name,
                      const DistParser& self) {
        for (const auto& [k, v] : p) {
            bool ok = false;
            for (const char* allowed : keys) ok = ok || k == allowed;
            if (!ok) self.fail("unknown parameter '" + k + "' for " + name);
        }
    }

    static Scalar get(const Params& p, const char* key, const Rational& fallback) {
        const auto it = p.find(key);
        return Scalar(it == p.end() ? fallback : it->second);
    }

    Scalar require(const Params& p, const char* key, const std::string& name) const {
        const auto it = p.find(key);
        if (it == p.end()) fail(name + " requires parameter '" + key + "'");
        return Scalar(it->second);
    }

    DistSpec parse_spec() {
        const std::string name = identifier();
        if (name == "uniform") return DistSpec::uniform();
        if (name == "lognormal") return DistSpec::lognormal();
        if (name == "moments") {
            expect(':');
            expect('[');
            std::vector<Scalar> mu;
            if (!accept(']')) {
                do mu.emplace_back(rational());
                while (accept(','));
                expect(']');
            }
            return DistSpec::raw_moments(std::move(mu));
        }
        if (name == "sum") {
            expect('(');
            DistSpec a = parse_spec();
            expect(',');
            DistSpec b = parse_spec();
            expect(')');
            return DistSpec::sum(a, b);
        }
        const Params p = params();
        if (name == "bernoulli") {
            allow(p, {"p"}, name, *this);
            return DistSpec::bernoulli(get(p, "p", Rational(1, 2)));
        }
        if (name == "normal") {
            allow(p, {"mu", "sigma2"}, name, *this);
            return DistSpec::normal(get(p, "mu", 0), get(p, "sigma2", 1));
        }
        if (name == "gamma") {
            allow(p, {"beta", "alpha"}, name, *this);
            return DistSpec::gamma(require(p, "beta", name), get(p, "alpha", 1));
        }
        if (name == "exp") {
            allow(p, {"alpha"}, name, *this);
            return DistSpec::exponential(get(p, "alpha", 1));
        }
        if (name == "point") {
            allow(p, {"c"}, name, *this);
            return DistSpec::point_mass(require(p, "c", name));
        }
        if (name == "affine") {
            allow(p, {"a", "b"}, name, *this);
            const Scalar a = require(p, "a", name), b = require(p, "b", name);
            expect('(');
            DistSpec inner = parse_spec();
            expect(')');
            return DistSpec::affine(a, b, inner);
        }
        fail("unknown distribution '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses the mini-language.  Throws ParseError on syntax problems and
/// InvalidParameter on out-of-range values.
inline DistSpec parse_dist(std::string_view text) { return detail::DistParser(text).parse_all(); }

} // namespace appell
