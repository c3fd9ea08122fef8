#include "fspec/vector_io.hpp"

#include <cctype>
#include <fstream>

namespace fspec {
namespace {

// Hand-rolled scanner shared by the vector and trig-poly grammars. Numbers
// deliberately have no exponent notation: `e` always introduces a basis
// vector.
struct Scanner {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw parse_error(std::string("expected ") + what, pos);
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

    bool at_digit() {
        const char c = peek();
        return c >= '0' && c <= '9';
    }

    // Unsigned decimal integer of arbitrary length.
    BigInt parse_digits() {
        skip_ws();
        if (!at_digit()) fail("expected digits");
        BigInt v = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return v;
    }

    BigInt parse_int() {
        skip_ws();
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        BigInt v = parse_digits();
        return neg ? BigInt(-v) : v;
    }

    // Plain decimal real: [sign] digits [. digits] — no exponent form.
    double parse_real() {
        skip_ws();
        const std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        std::size_t digits = 0;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos, ++digits;
        if (pos < s.size() && s[pos] == '.') {
            ++pos;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos, ++digits;
        }
        if (digits == 0) fail("expected a number");
        return std::stod(std::string(s.substr(start, pos - start)));
    }

    // number, number 'i', 'i', or '(' re [sign im 'i'] ')'.
    Complex parse_complex() {
        skip_ws();
        if (accept('(')) {
            const double re = parse_real();
            Complex out{re, 0.0};
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                double im = parse_real();
                expect('i', "'i' after the imaginary part");
                out.imag(im);
            } else if (accept('i')) {
                out = Complex{0.0, re};
            }
            expect(')', "')'");
            return out;
        }
        if (accept('i')) return Complex{0.0, 1.0};
        const double x = parse_real();
        if (accept('i')) return Complex{0.0, x};
        return Complex{x, 0.0};
    }
};

} // namespace

FreqVector parse_vector_expr(std::string_view expr) {
    Scanner sc{expr};
    FreqVector out;
    bool first = true;
    while (!sc.eof()) {
        double sign = 1.0;
        if (sc.accept('-')) sign = -1.0;
        else if (sc.accept('+')) sign = 1.0;
        else if (!first) sc.fail("expected '+' or '-' between terms");

        Complex coef{1.0, 0.0};
        if (sc.peek() != 'e') {
            coef = sc.parse_complex();
            sc.expect('*', "'*' between coefficient and basis vector");
        }
        sc.expect('e', "basis vector 'e<index>'");
        sc.skip_ws();
        if (!sc.at_digit() && sc.peek() != '-' && sc.peek() != '+')
            sc.fail("expected an integer index after 'e'");
        const BigInt n = sc.parse_int();
        out.add_term(n, sign * coef);
        first = false;
    }
    if (first) throw parse_error("empty vector expression", 0);
    return out;
}

FreqVector vector_from_json(const nlohmann::json& j) {
    if (!j.contains("entries") || !j["entries"].is_array())
        throw parse_error("vector JSON must contain an \"entries\" array", 0);
    FreqVector out;
    for (const auto& e : j["entries"]) {
        const std::string idx = e.at("index").get<std::string>();
        BigInt n;
        try {
            n = BigInt(idx);
        } catch (const std::exception&) {
            throw parse_error("bad index string \"" + idx + "\"", 0);
        }
        out.add_term(n, Complex{e.at("re").get<double>(), e.at("im").get<double>()});
    }
    return out;
}

nlohmann::json vector_to_json(const FreqVector& f) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [n, a] : f.entries()) {
        entries.push_back(
            {{"index", n.str()}, {"re", a.real()}, {"im", a.imag()}});
    }
    return {{"entries", entries}};
}

FreqVector load_vector_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open vector file " + path, 0);
    nlohmann::json j;
    in >> j;
    return vector_from_json(j);
}

void save_vector_file(const FreqVector& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write vector file " + path, 0);
    out << vector_to_json(f).dump(2) << '\n';
}

FreqVector resolve_vector_argument(const std::string& arg) {
    if (std::ifstream probe(arg); probe.good()) return load_vector_file(arg);
    return parse_vector_expr(arg);
}

TrigPoly parse_trig_poly(std::string_view expr) {
    Scanner sc{expr};
    TrigPoly out;
    bool first = true;
    while (!sc.eof()) {
        double sign = 1.0;
        if (sc.accept('-')) sign = -1.0;
        else if (sc.accept('+')) sign = 1.0;
        else if (!first) sc.fail("expected '+' or '-' between terms");

        Complex coef{1.0, 0.0};
        bool saw_coef = false;
        if (sc.peek() != 'z') {
            coef = sc.parse_complex();
            saw_coef = true;
        }
        int power = 0;
        if (saw_coef ? sc.accept('*') : true) {
            if (sc.peek() == 'z') {
                sc.expect('z', "'z'");
                power = 1;
                if (sc.accept('^')) {
                    const BigInt p = sc.parse_int();
                    if (p > 64 || p < -64) sc.fail("trig power out of range");
                    power = static_cast<int>(p);
                }
            } else if (saw_coef) {
                sc.fail("expected 'z' after '*'");
            }
        }
        out.set(power, out.coefficient(power) + sign * coef);
        first = false;
    }
    if (first) throw parse_error("empty trig polynomial", 0);
    return out;
}

} // namespace fspec
