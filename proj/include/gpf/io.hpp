#pragma once
// Text interface: a small recursive-descent parser for exact values and
// rational functions of w ("4/3", "1+2*sqrt(5)", "(w+1)/w"), the parameter
// tuple grammar "(p,q,r;a,b;x)", and round-trippable serializers plus JSON
// views of the main result records.

#include "gpf/analysis.hpp"

#include <json.hpp>

#include <cctype>

namespace gpf {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// expressions over Q(sqrt(D))(w): +, -, *, /, ^, sqrt(rational), w
class ExprParser {
  public:
    explicit ExprParser(std::string text) : s(std::move(text)) {}

    RatFunc<Fe> parse() {
        RatFunc<Fe> v = expr();
        skip();
        if (pos != s.size()) fail("trailing input");
        return v;
    }

  private:
    std::string s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw parse_error("parse error at position " + std::to_string(pos) + ": " + why);
    }
    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    RatFunc<Fe> expr() {
        RatFunc<Fe> v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }
    RatFunc<Fe> term() {
        RatFunc<Fe> v = factor();
        for (;;) {
            if (eat('*')) v = v * factor();
            else if (eat('/')) {
                RatFunc<Fe> d = factor();
                if (d.is_zero()) fail("division by zero");
                v = v / d;
            } else {
                return v;
            }
        }
    }
    RatFunc<Fe> factor() {
        if (eat('-')) return -factor();
        RatFunc<Fe> v = primary();
        if (eat('^')) {
            bool neg = eat('-');
            long e = integer();
            if (neg && v.is_zero()) fail("zero to a negative power");
            v = pow_fe(v, neg ? -e : e);
        }
        return v;
    }
    long integer() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stol(s.substr(start, pos - start));
    }
    RatFunc<Fe> primary() {
        char c = peek();
        if (c == '(') {
            ++pos;
            RatFunc<Fe> v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return RatFunc<Fe>(Fe(Rat(Int(s.substr(start, pos - start)))));
        }
        if (c == 'w') {
            ++pos;
            return RatFunc<Fe>(Poly<Fe>::var());
        }
        if (s.compare(pos, 4, "sqrt") == 0) {
            pos += 4;
            if (!eat('(')) fail("expected '(' after sqrt");
            RatFunc<Fe> v = expr();
            if (!eat(')')) fail("expected ')'");
            if (v.num.deg() > 0 || v.den.deg() > 0) fail("sqrt of a non-constant");
            Fe inner = v.num.coeff(0) / v.den.coeff(0);
            auto root = sqrt_exact_fe(inner);
            if (!root) fail("sqrt argument is not representable exactly");
            return RatFunc<Fe>(*root);
        }
        fail("unexpected character");
    }
};

}  // namespace detail

inline RatFunc<Fe> parse_ratfunc(const std::string& s) {
    return detail::ExprParser(s).parse();
}

inline Fe parse_exact(const std::string& s) {
    RatFunc<Fe> v = parse_ratfunc(s);
    if (v.num.deg() > 0 || v.den.deg() > 0)
        throw parse_error("expected a constant, got a function of w: " + s);
    if (v.is_zero()) return Fe(0);
    return v.num.coeff(0) / v.den.coeff(0);
}

inline Rat parse_rational(const std::string& s) {
    Fe v = parse_exact(s);
    if (!v.is_rational()) throw parse_error("expected a rational value: " + s);
    return v.a;
}

// "(p,q,r;a,b;x)"
inline Lambda parse_lambda(const std::string& s) {
    size_t lo = s.find('('), hi = s.rfind(')');
    if (lo == std::string::npos || hi == std::string::npos || hi <= lo)
        throw parse_error("expected a tuple (p,q,r;a,b;x)");
    std::string body = s.substr(lo + 1, hi - lo - 1);
    // split into fields at top-level ',' and ';', tracking paren depth
    std::vector<std::string> parts;
    std::vector<char> seps;
    int depth = 0;
    std::string cur;
    for (char c : body) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == ',' || c == ';')) {
            parts.push_back(cur);
            seps.push_back(c);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 6 || seps != std::vector<char>{',', ',', ';', ',', ';'})
        throw parse_error("tuple must have the shape (p,q,r;a,b;x)");
    Lambda l;
    l.p = parse_rational(parts[0]);
    l.q = parse_rational(parts[1]);
    l.r = parse_rational(parts[2]);
    l.a = parse_exact(parts[3]);
    l.b = parse_exact(parts[4]);
    l.x = parse_exact(parts[5]);
    return l;
}

// ---------------------------------------------------------------------------
// serialization, inverse to the grammar above

inline std::string fe_s(const Fe& v) {
    if (v.b == 0) return rat_str(v.a);
    std::string root = "sqrt(" + std::to_string(v.D) + ")";
    std::string tail;
    if (v.b == 1) tail = root;
    else if (v.b == -1) tail = "-" + root;
    else tail = rat_str(v.b) + "*" + root;
    if (v.a == 0) return tail;
    return rat_str(v.a) + (tail[0] == '-' ? "" : "+") + tail;
}

inline std::string poly_s(const Poly<Fe>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (long k = f.deg(); k >= 0; --k) {
        Fe c = f.coeff(k);
        if (c.is_zero()) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? "w" : "w^" + std::to_string(k));
        std::string cs;
        if (k > 0 && c == Fe(1)) cs = mono;
        else if (k > 0 && c == Fe(-1)) cs = "-" + mono;
        else {
            cs = fe_s(c);
            if (!c.is_rational()) cs = "(" + cs + ")";
            if (k > 0) cs += "*" + mono;
        }
        if (!out.empty() && cs[0] != '-') out += "+";
        out += cs;
    }
    return out;
}

inline std::string rf_s(const RatFunc<Fe>& f) {
    if (f.den.deg() <= 0 && f.den.coeff(0) == Fe(1)) return poly_s(f.num);
    return "(" + poly_s(f.num) + ")/(" + poly_s(f.den) + ")";
}

inline std::string lambda_s(const Lambda& l) {
    return "(" + rat_str(l.p) + "," + rat_str(l.q) + "," + rat_str(l.r) + ";" +
           fe_s(l.a) + "," + fe_s(l.b) + ";" + fe_s(l.x) + ")";
}

// ---------------------------------------------------------------------------
// JSON views

inline nlohmann::json lambda_json(const Lambda& l) {
    return {{"pqr", {rat_str(l.p), rat_str(l.q), rat_str(l.r)}},
            {"a", fe_s(l.a)},
            {"b", fe_s(l.b)},
            {"x", fe_s(l.x)}};
}

inline nlohmann::json solution_json(const Solution& s, long prec = default_prec()) {
    nlohmann::json j;
    j["pqr"] = {rat_str(s.half_p), rat_str(s.half_q), rat_str(s.half_r)};
    j["a"] = fe_s(s.a);
    j["b"] = fe_s(s.b);
    j["x"] = fe_s(s.x);
    j["R"] = rf_s(s.R);
    j["type"] = s.type;
    BigFloat disc = ratio_discrepancy(to_lambda(s), s.R, BigFloat(1.3, prec), prec);
    bool lead = false;
    try {
        auto d = dilation(to_lambda(s), prec);
        lead = d.exact && d.value == s.R.num.lc();
    } catch (const std::exception&) {
    }
    j["certificates"] = {{"phi_vanishes", s.phi_vanishes},
                         {"ratio_check", disc.str(6)},
                         {"lead_is_dilation", lead}};
    return j;
}

inline nlohmann::json gamma_product_json(const GammaProduct& g) {
    nlohmann::json j;
    j["S"] = rf_s(g.S);
    j["d"] = fe_s(g.d);
    j["u"] = nlohmann::json::array();
    for (auto& u : g.u) j["u"].push_back(rat_str(u));
    j["v"] = nlohmann::json::array();
    for (auto& v : g.v) j["v"].push_back(rat_str(v));
    j["s"] = g.s;
    j["r"] = g.r;
    return j;
}

}  // namespace gpf
