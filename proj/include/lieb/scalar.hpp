#pragma once

// Exact coefficients: polynomials with rational coefficients in named
// formal parameters (e.g. a deformation parameter "z").

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lieb {

using Integer = boost::multiprecision::cpp_int;
/// Arbitrary precision rational, always normalized (lowest terms, positive
/// denominator, zero as 0/1).
using Rational = boost::multiprecision::cpp_rational;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownParameterError : public std::runtime_error {
public:
    explicit UnknownParameterError(const std::string& name)
        : std::runtime_error("unknown parameter '" + name + "'"), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Product of parameter powers; exponents are always positive.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const std::string& name, unsigned power = 1) {
        if (power > 0) powers_.emplace(name, power);
    }

    const std::map<std::string, unsigned>& powers() const noexcept { return powers_; }
    unsigned degree() const noexcept {
        unsigned d = 0;
        for (const auto& [_, p] : powers_) d += p;
        return d;
    }
    bool is_one() const noexcept { return powers_.empty(); }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out = a;
        for (const auto& [name, p] : b.powers_) out.powers_[name] += p;
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string render() const {
        std::string out;
        for (const auto& [name, p] : powers_) {
            if (!out.empty()) out += '*';
            out += name;
            if (p != 1) out += '^' + std::to_string(p);
        }
        return out;
    }

private:
    std::map<std::string, unsigned> powers_;
};

/// Graded order: lower total degree first, then lexicographic on the
/// (name, power) sequence.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.powers() < b.powers();
    }
};

class Scalar {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    Scalar() = default;
    Scalar(long long value) : Scalar(Rational(value)) {}  // NOLINT(implicit)
    Scalar(const Rational& value) {                        // NOLINT(implicit)
        if (value != 0) terms_.emplace(Monomial{}, value);
    }
    Scalar(const Rational& coefficient, const Monomial& monomial) {
        if (coefficient != 0) terms_.emplace(monomial, coefficient);
    }

    static Scalar parameter(const std::string& name, unsigned power = 1) {
        return Scalar(Rational(1), Monomial(name, power));
    }

    static Scalar parse(std::string_view text, const std::vector<std::string>& params);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    /// Constant term if the scalar is a pure rational.
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Scalar operator-() const {
        Scalar out = *this;
        for (auto& [_, c] : out.terms_) c = -c;
        return out;
    }

    Scalar& operator+=(const Scalar& other) {
        for (const auto& [m, c] : other.terms_) accumulate(m, c);
        return *this;
    }
    Scalar& operator-=(const Scalar& other) {
        for (const auto& [m, c] : other.terms_) accumulate(m, -c);
        return *this;
    }
    Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar out;
        if (a.is_zero() || b.is_zero()) return out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.accumulate(ma * mb, ca * cb);
        return out;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
            if (!(ia->first == ib->first) || ia->second != ib->second) return false;
        return true;
    }

    /// Canonical text form; accepted back by parse().
    std::string render() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool negative = c < 0;
            const Rational magnitude = negative ? Rational(-c) : c;
            if (first) {
                if (negative) out += '-';
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            if (m.is_one()) {
                out += magnitude.str();
            } else if (magnitude == 1) {
                out += m.render();
            } else {
                out += magnitude.str() + "*" + m.render();
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.render(); }

private:
    void accumulate(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

namespace detail {

class ScalarParser {
public:
    ScalarParser(std::string_view text, const std::vector<std::string>& params)
        : text_(text), params_(params) {}

    Scalar run() {
        skip_ws();
        if (at_end()) throw ParseError("empty coefficient", pos_);
        Scalar sum;
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        for (;;) {
            Scalar term = parse_term();
            sum += negate ? -term : term;
            skip_ws();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-')
                throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
            negate = peek() == '-';
            ++pos_;
        }
        return sum;
    }

private:
    Scalar parse_term() {
        Scalar product = parse_factor();
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*') return product;
            ++pos_;
            product *= parse_factor();
        }
    }

    Scalar parse_factor() {
        skip_ws();
        if (at_end()) throw ParseError("expected number or parameter", pos_);
        const char ch = peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            Integer num = parse_integer();
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t at = pos_;
                Integer den = parse_integer();
                if (den == 0) throw ParseError("zero denominator", at);
                return Scalar(Rational(num, den));
            }
            return Scalar(Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            bool known = false;
            for (const auto& p : params_) known = known || p == name;
            if (!known) throw UnknownParameterError(name);
            unsigned power = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                const std::size_t at = pos_;
                Integer p = parse_integer();
                if (p > 1000) throw ParseError("exponent too large", at);
                power = p.convert_to<unsigned>();
            }
            if (power == 0) return Scalar(1);
            return Scalar::parameter(name, power);
        }
        throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
    }

    Integer parse_integer() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer", pos_);
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    const std::vector<std::string>& params_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: sums ("+"/"-") of products ("*") of rational literals ("3",
/// "3/2") and parameter powers ("z", "z^2"). Whitespace is ignored.
inline Scalar Scalar::parse(std::string_view text, const std::vector<std::string>& params) {
    return detail::ScalarParser(text, params).run();
}

}  // namespace lieb
