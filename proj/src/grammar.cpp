#include "sturmkit/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sturmkit/morphism.hpp"

namespace sturmkit {

namespace {

std::string strip_spaces(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    return s;
}

class Cursor {
public:
    explicit Cursor(std::string text) : text_(std::move(text)) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' in \"" + text_ + "\"");
    }

    void expect(std::string_view lit) {
        for (char c : lit) expect(c);
    }

    BigInt integer() {
        std::size_t begin = pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        std::size_t digits = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_, ++digits;
        if (digits == 0) throw ParseError("expected an integer in \"" + text_ + "\"");
        return BigInt(text_.substr(begin, pos_ - begin));
    }

    void expect_end() {
        if (!done()) throw ParseError("trailing characters in \"" + text_ + "\"");
    }

private:
    std::string text_;
    std::size_t pos_ = 0;
};

} // namespace

QuadraticNumber parse_quadratic(std::string_view text) {
    Cursor cur(strip_spaces(text));
    if (cur.eat('(')) {
        BigInt a = cur.integer();
        int join;
        if (cur.eat('+')) join = 1;
        else if (cur.eat('-')) join = -1;
        else throw ParseError("expected '+' or '-' after the rational part");
        BigInt b = cur.integer() * join;
        cur.expect("*sqrt(");
        BigInt d = cur.integer();
        if (d < 0) throw ParseError("radicand must be non-negative");
        cur.expect(')');
        cur.expect(')');
        BigInt den = 1;
        if (cur.eat('/')) den = cur.integer();
        cur.expect_end();
        if (den == 0) throw ParseError("zero denominator");
        return QuadraticNumber(Rational(a, den), Rational(b, den), d);
    }
    BigInt num = cur.integer();
    BigInt den = 1;
    if (cur.eat('/')) den = cur.integer();
    cur.expect_end();
    if (den == 0) throw ParseError("zero denominator");
    return QuadraticNumber(Rational(num, den));
}

Rational parse_rational(std::string_view text) {
    QuadraticNumber x = parse_quadratic(text);
    if (!x.is_rational()) throw ParseError("expected a rational number");
    return x.rational_part();
}

std::string format_rational(const Rational& r) {
    std::string s = r.numerator().str();
    if (!r.is_integer()) s += "/" + r.denominator().str();
    return s;
}

std::string format_quadratic(const QuadraticNumber& x) {
    if (x.is_rational()) return format_rational(x.rational_part());
    const Rational& a = x.rational_part();
    const Rational& b = x.radical_coefficient();
    BigInt ad = a.denominator();
    BigInt bd = b.denominator();
    BigInt g = big_gcd(ad, bd);
    BigInt den = ad / g * bd;
    BigInt na = a.numerator() * (den / ad);
    BigInt nb = b.numerator() * (den / bd);
    std::string s = "(" + na.str();
    s += nb < 0 ? "-" : "+";
    s += (nb < 0 ? -nb : nb).str();
    s += "*sqrt(" + x.radicand().str() + "))/" + den.str();
    return s;
}

BinaryMorphism parse_morphism(std::string_view text) {
    std::string s = strip_spaces(text);
    auto comma = s.find(',');
    if (comma == std::string::npos || s.rfind("0->", 0) != 0 ||
        s.compare(comma + 1, 3, "1->") != 0)
        throw ParseError("morphism must have the form 0->WORD,1->WORD");
    std::string w0 = s.substr(3, comma - 3);
    std::string w1 = s.substr(comma + 4);
    if (w0.empty() || w1.empty()) throw ParseError("morphism images must be nonempty");
    return BinaryMorphism::from_images(w0, w1);
}

std::string format_morphism(const BinaryMorphism& m) {
    return "0->" + m.image(0).str() + ",1->" + m.image(1).str();
}

std::vector<int> parse_generator_word(std::string_view text) {
    std::string s = strip_spaces(text);
    std::vector<int> word;
    if (s.empty()) return word;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = s.find(',', pos);
        std::string label = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (label == "phi0") word.push_back(3);
        else if (label == "phi1") word.push_back(1);
        else if (label.size() == 4 && label.rfind("psi", 0) == 0 && label[3] >= '1' && label[3] <= '8')
            word.push_back(label[3] - '0');
        else throw ParseError("unknown generator label \"" + label + "\"");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return word;
}

std::string format_generator_word(const std::vector<int>& psi, bool phi_names) {
    std::string s;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if (i) s += ",";
        if (phi_names && psi[i] == 3) s += "phi0";
        else if (phi_names && psi[i] == 1) s += "phi1";
        else s += "psi" + std::to_string(psi[i]);
    }
    return s;
}

} // namespace sturmkit
