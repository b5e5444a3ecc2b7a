#include "qpoints/parser.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "qpoints/errors.hpp"

namespace qpoints {

namespace {

// x^(p/q). Exact on symbols and primes; on the torsion part this picks the
// branch given by the canonical phase representative.
UnitMonomial rational_pow(const UnitMonomial& x, const Rational& r) {
    const Rational ph = frac(x.phase() * r);
    UnitMonomial out = UnitMonomial::root_of_unity(ph.numerator(), ph.denominator());
    for (const auto& [g, e] : x.exponents())
        out = out * UnitMonomial::generator_power(g, e * r);
    return out;
}

class ScalarParser {
public:
    ScalarParser(const std::string& text, std::size_t base_offset)
        : text_(text), base_(base_offset) {}

    UnitMonomial parse() {
        UnitMonomial v = parse_expr();
        skip_ws();
        if (!eof()) fail("unexpected trailing input");
        return v;
    }

private:
    UnitMonomial parse_expr() {
        UnitMonomial v = parse_term();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                v = v * parse_term();
            } else if (accept('/')) {
                v = v * inv(parse_term());
            } else {
                return v;
            }
        }
    }

    UnitMonomial parse_term() {
        UnitMonomial a = parse_atom();
        skip_ws();
        if (!accept('^')) return a;
        const Rational e = parse_exponent();
        if (e.denominator() == 1) return pow(a, e.numerator());
        return rational_pow(a, e);
    }

    UnitMonomial parse_atom() {
        skip_ws();
        if (eof()) fail("expected an expression");
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return UnitMonomial::root_of_unity(1, 2) * parse_atom();
        }
        if (c == '(') {
            ++pos_;
            UnitMonomial v = parse_expr();
            skip_ws();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t at = pos_;
            const std::int64_t value = parse_natural();
            if (value == 0)
                throw ZeroScalarError("literal 0 at position " + std::to_string(base_ + at) +
                                      ": scalars are non-zero");
            return UnitMonomial::from_rational(value, 1);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::string name = scan_identifier();
            if (name == "i") return UnitMonomial::root_of_unity(1, 4);
            if (name == "zeta") {
                skip_ws();
                expect('(');
                skip_ws();
                const std::size_t at = pos_;
                const std::int64_t order = parse_natural();
                if (order == 0) fail_at("zeta(0) is undefined", at);
                skip_ws();
                expect(')');
                return UnitMonomial::root_of_unity(1, order);
            }
            return UnitMonomial::symbol(name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Rational parse_exponent() {
        skip_ws();
        if (accept('(')) {
            skip_ws();
            const std::int64_t num = parse_signed_integer();
            skip_ws();
            expect('/');
            skip_ws();
            const std::size_t at = pos_;
            const std::int64_t den = parse_natural();
            if (den == 0) fail_at("zero denominator in exponent", at);
            skip_ws();
            expect(')');
            return Rational(num, den);
        }
        return Rational(parse_signed_integer());
    }

    std::int64_t parse_signed_integer() {
        skip_ws();
        const bool negative = accept('-');
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an integer exponent after '^'");
        const std::int64_t v = parse_natural();
        return negative ? -v : v;
    }

    std::int64_t parse_natural() {
        const std::size_t at = pos_;
        std::uint64_t v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
                fail_at("number too large", at);
            ++pos_;
        }
        if (pos_ == at) fail("expected a number");
        return static_cast<std::int64_t>(v);
    }

    std::string scan_identifier() {
        const std::size_t at = pos_;
        while (!eof()) {
            const char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ++pos_;
            else break;
        }
        return text_.substr(at, pos_ - at);
    }

    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
    }

    bool accept(char c) {
        if (!eof() && peek() == c) { ++pos_; return true; }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
    [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
        throw SyntaxError(message, base_ + at);
    }

    std::string text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

UnitMonomial parse_scalar(const std::string& text) {
    return ScalarParser(text, 0).parse();
}

std::string format_scalar(const UnitMonomial& x) {
    if (is_one(x)) return "1";
    std::vector<std::string> parts;
    if (x.phase() != Rational(0)) {
        const auto num = x.phase().numerator();
        const auto den = x.phase().denominator();
        if (den == 2) {
            parts.push_back("-1");
        } else if (num == 1) {
            parts.push_back("zeta(" + std::to_string(den) + ")");
        } else {
            parts.push_back("zeta(" + std::to_string(den) + ")^" + std::to_string(num));
        }
    }
    for (const auto& [g, e] : x.exponents()) {
        std::string base = g.is_symbol() ? g.name() : std::to_string(g.prime_value());
        if (e == Rational(1)) {
            parts.push_back(std::move(base));
        } else if (e.denominator() == 1) {
            parts.push_back(base + "^" + std::to_string(e.numerator()));
        } else {
            parts.push_back(base + "^(" + std::to_string(e.numerator()) + "/" +
                            std::to_string(e.denominator()) + ")");
        }
    }
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
    return out;
}

MatrixDocument parse_matrix_document(const std::string& text) {
    MatrixDocument doc;
    bool have_size = false;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string::npos) line_end = text.size();
        std::string line = text.substr(line_start, line_end - line_start);
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        const std::size_t here = line_start;
        line_start = line_end + 1;
        if (line.empty()) {
            if (line_end == text.size()) break;
            continue;
        }

        std::istringstream in(line);
        std::string head;
        in >> head;
        if (!have_size) {
            std::string eq;
            long long size = -1;
            if (head != "n" || !(in >> eq) || eq != "=" || !(in >> size) || size < 0 ||
                (in >> eq))
                throw SyntaxError("expected 'n = <size>'", here);
            doc.n = static_cast<int>(size);
            have_size = true;
            continue;
        }
        if (head != "q")
            throw SyntaxError("expected 'q <i> <j> = <expr>'", here);
        long long i = -1, j = -1;
        std::string eq;
        if (!(in >> i >> j >> eq) || eq != "=")
            throw SyntaxError("expected 'q <i> <j> = <expr>'", here);
        if (i < 0 || j < 0 || i > doc.n || j > doc.n)
            throw IndexOutOfRangeError("entry q " + std::to_string(i) + " " + std::to_string(j) +
                                       " outside 0.." + std::to_string(doc.n));
        if (i >= j)
            throw SyntaxError("only upper-triangle entries are stored (need i < j)", here);
        std::string expr;
        std::getline(in, expr);
        expr = trim(expr);
        if (expr.empty())
            throw SyntaxError("missing expression after '='", here + line.size());
        const auto key = std::make_pair(static_cast<int>(i), static_cast<int>(j));
        if (doc.entries.count(key))
            throw DuplicateEntryError(key.first, key.second);
        doc.entries.emplace(key, expr);
        if (line_end == text.size()) break;
    }
    if (!have_size) throw SyntaxError("empty matrix document, expected 'n = <size>'", 0);
    return doc;
}

QuantumMatrix matrix_from_document(const MatrixDocument& doc) {
    for (const auto& [key, expr] : doc.entries) {
        (void)expr;
        if (key.first < 0 || key.second > doc.n || key.first >= key.second)
            throw IndexOutOfRangeError("entry q " + std::to_string(key.first) + " " +
                                       std::to_string(key.second) +
                                       " is not an upper-triangle position");
    }
    std::vector<UnitMonomial> upper;
    upper.reserve(static_cast<std::size_t>(doc.n) * (doc.n + 1) / 2);
    for (int i = 0; i <= doc.n; ++i) {
        for (int j = i + 1; j <= doc.n; ++j) {
            const auto it = doc.entries.find({i, j});
            if (it == doc.entries.end()) throw MissingEntryError(i, j);
            const std::string where =
                "entry q " + std::to_string(i) + " " + std::to_string(j);
            try {
                upper.push_back(parse_scalar(it->second));
            } catch (const SyntaxError& e) {
                throw SyntaxError(where + ": " + e.message(), e.position());
            } catch (const ZeroScalarError& e) {
                throw ZeroScalarError(where + ": " + e.what());
            }
        }
    }
    return QuantumMatrix::from_upper_triangle(doc.n, upper);
}

QuantumMatrix parse_matrix_file(const std::string& text) {
    return matrix_from_document(parse_matrix_document(text));
}

std::string format_matrix_file(const QuantumMatrix& q) {
    std::string out = "n = " + std::to_string(q.n()) + "\n";
    for (int i = 0; i <= q.n(); ++i)
        for (int j = i + 1; j <= q.n(); ++j)
            out += "q " + std::to_string(i) + " " + std::to_string(j) + " = " +
                   format_scalar(q.at(i, j)) + "\n";
    return out;
}

std::string variety_to_json(const PointVariety& v) {
    nlohmann::ordered_json j;
    j["n"] = v.n();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : v.components()) arr.push_back(s.indices());
    j["components"] = std::move(arr);
    j["dimension"] = v.dimension();
    j["is_full_space"] = v.is_full_space();
    return j.dump(2);
}

}  // namespace qpoints
