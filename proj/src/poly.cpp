#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace cd4 {

namespace {
constexpr std::uint32_t kMaxExponent = 1u << 24;
}

Ring::Ring(std::vector<std::string> vars) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].empty()) throw DomainError("empty variable name");
        if (vars[i] == "i") throw DomainError("'i' is reserved for the imaginary unit");
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw DomainError("duplicate variable '" + vars[i] + "'");
    }
    vars_ = std::make_shared<const std::vector<std::string>>(std::move(vars));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_->size(); ++i)
        if ((*vars_)[i] == name) return i;
    return std::nullopt;
}

Ring Ring::extended(const std::string& name) const {
    auto v = *vars_;
    v.push_back(name);
    return Ring(std::move(v));
}

Ring Ring::without(const std::vector<std::string>& names) const {
    std::vector<std::string> v;
    for (const auto& n : *vars_)
        if (std::find(names.begin(), names.end(), n) == names.end()) v.push_back(n);
    return Ring(std::move(v));
}

std::uint32_t exps_degree(const Exps& e) {
    std::uint32_t d = 0;
    for (auto x : e) d += x;
    return d;
}

bool exps_divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exps exps_lcm(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exps exps_add(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
        if (r[i] > kMaxExponent) throw DomainError("exponent overflow");
    }
    return r;
}

Exps exps_sub(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) throw DomainError("negative exponent in monomial quotient");
        r[i] = a[i] - b[i];
    }
    return r;
}

Poly Poly::constant(const Ring& r, GaussRational c) {
    Poly p(r);
    if (!c.is_zero()) p.terms_.emplace(Exps(r.size(), 0), std::move(c));
    return p;
}

Poly Poly::variable(const Ring& r, std::string_view name) {
    auto idx = r.index_of(name);
    if (!idx) throw DomainError("unknown variable '" + std::string(name) + "'");
    Exps e(r.size(), 0);
    e[*idx] = 1;
    Poly p(r);
    p.terms_.emplace(std::move(e), GaussRational(1));
    return p;
}

Poly Poly::term(const Ring& r, Exps e, GaussRational c) {
    if (e.size() != r.size()) throw DomainError("exponent vector length mismatch");
    Poly p(r);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exps_degree(terms_.begin()->first) == 0);
}

GaussRational Poly::constant_term() const {
    if (terms_.empty()) return GaussRational(0);
    auto it = terms_.find(Exps(ring_.size(), 0));
    return it == terms_.end() ? GaussRational(0) : it->second;
}

GaussRational Poly::coefficient(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussRational(0) : it->second;
}

std::uint32_t Poly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, exps_degree(e));
    return d;
}

std::uint32_t Poly::degree_in(std::string_view var) const {
    auto idx = ring_.index_of(var);
    if (!idx) throw DomainError("unknown variable '" + std::string(var) + "'");
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
    return d;
}

void Poly::insert_term(const Exps& e, GaussRational c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::require_same_ring(const Poly& a, const Poly& b) {
    if (a.ring_ != b.ring_) throw RingMismatch("polynomials live in different rings");
}

namespace {
// Lift constants into the other operand's ring so that e.g. p + 1 works
// across helper-built constants.
const Poly& align(const Poly& p, const Poly& other, Poly& storage) {
    if (p.ring() == other.ring()) return p;
    if (p.is_constant()) {
        storage = Poly::constant(other.ring(), p.constant_term());
        return storage;
    }
    return p;
}
} // namespace

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    Poly tmp;
    const Poly& rhs = align(o, *this, tmp);
    if (is_constant() && ring_ != rhs.ring()) *this = Poly::constant(rhs.ring(), constant_term());
    require_same_ring(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    Poly tmp;
    const Poly& rhs = align(o, *this, tmp);
    if (is_constant() && ring_ != rhs.ring()) *this = Poly::constant(rhs.ring(), constant_term());
    require_same_ring(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) insert_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly ta, tb;
    const Poly& lhs = align(a, b, ta);
    const Poly& rhs = align(b, lhs, tb);
    Poly::require_same_ring(lhs, rhs);
    Poly r = Poly::zero(lhs.ring());
    for (const auto& [ea, ca] : lhs.terms())
        for (const auto& [eb, cb] : rhs.terms()) r.insert_term(exps_add(ea, eb), ca * cb);
    return r;
}

Poly Poly::scaled(const GaussRational& c) const {
    Poly r = Poly::zero(ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly acc = Poly::constant(ring_, GaussRational(1));
    Poly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

std::optional<Poly> Poly::exact_divide(const Poly& divisor) const {
    Poly tmp;
    const Poly& d = align(divisor, *this, tmp);
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    if (is_zero()) return Poly::zero(ring_);
    require_same_ring(*this, d);
    // Long division by the lex-leading term; remainder must come out zero.
    Poly rem = *this;
    Poly quot = Poly::zero(ring_);
    const auto& dlead = *d.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        if (!exps_divides(dlead.first, rlead.first)) return std::nullopt;
        Exps q = exps_sub(rlead.first, dlead.first);
        GaussRational cf = rlead.second / dlead.second;
        Poly piece = Poly::term(ring_, std::move(q), std::move(cf));
        quot += piece;
        rem -= piece * d;
    }
    return quot;
}

Poly Poly::substitute(const std::map<std::string, Poly>& images) const {
    // Pick the target ring: the first non-constant image's ring, else ours.
    const Ring* target = &ring_;
    for (const auto& [name, img] : images)
        if (!img.is_constant()) {
            target = &img.ring();
            break;
        }
    return substitute(images, *target);
}

Poly Poly::substitute(const std::map<std::string, Poly>& images, const Ring& target) const {
    std::vector<Poly> image_of(ring_.size());
    for (std::size_t v = 0; v < ring_.size(); ++v) {
        auto it = images.find(ring_.var(v));
        if (it != images.end()) {
            if (!it->second.is_constant() && it->second.ring() != target)
                throw RingMismatch("substitution image not in the target ring");
            image_of[v] = it->second.is_constant()
                              ? Poly::constant(target, it->second.constant_term())
                              : it->second;
        } else {
            image_of[v] = Poly::variable(target, ring_.var(v));
        }
    }
    Poly out = Poly::zero(target);
    for (const auto& [e, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v]) t = t * image_of[v].pow(e[v]);
        out += t;
    }
    return out;
}

Poly Poly::partial(std::string_view var) const {
    auto idx = ring_.index_of(var);
    if (!idx) throw DomainError("unknown variable '" + std::string(var) + "'");
    Poly r = Poly::zero(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[*idx] == 0) continue;
        Exps d = e;
        d[*idx] -= 1;
        r.insert_term(d, c * GaussRational(static_cast<long>(e[*idx])));
    }
    return r;
}

std::optional<std::uint32_t> Poly::order_in(std::string_view var) const {
    auto idx = ring_.index_of(var);
    if (!idx) throw DomainError("unknown variable '" + std::string(var) + "'");
    if (terms_.empty()) return std::nullopt;
    std::uint32_t o = std::numeric_limits<std::uint32_t>::max();
    for (const auto& [e, c] : terms_) o = std::min(o, e[*idx]);
    return o;
}

GaussRational Poly::evaluate(const std::map<std::string, GaussRational>& values) const {
    std::vector<GaussRational> val(ring_.size());
    for (std::size_t v = 0; v < ring_.size(); ++v) {
        auto it = values.find(ring_.var(v));
        if (it == values.end())
            throw DomainError("no value for variable '" + ring_.var(v) + "'");
        val[v] = it->second;
    }
    GaussRational sum(0);
    for (const auto& [e, c] : terms_) {
        GaussRational t = c;
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v]) t *= val[v].pow(e[v]);
        sum += t;
    }
    return sum;
}

double Poly::eval_double(const std::vector<double>& values) const {
    if (values.size() != ring_.size()) throw DomainError("value count mismatch");
    double sum = 0;
    for (const auto& [e, c] : terms_) {
        double t = c.to_double();
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v]) t *= std::pow(values[v], static_cast<int>(e[v]));
        sum += t;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Canonical printer
// ---------------------------------------------------------------------------

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Iterate in descending lex order of exponent vectors.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (!e[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_.var(v);
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        // Coefficient rendering with sign pulled out where unambiguous.
        GaussRational coef = c;
        std::string sign = first ? "" : " + ";
        if (coef.is_real() && coef.re() < 0) {
            sign = first ? "-" : " - ";
            coef = -coef;
        } else if (!coef.is_real() && coef.re() == 0 && coef.im() < 0) {
            sign = first ? "-" : " - ";
            coef = -coef;
        }
        std::string cs;
        if (mono.empty()) {
            cs = coef.is_real() || coef.re() == 0 ? coef.str() : "(" + coef.str() + ")";
        } else if (coef.is_one()) {
            cs = mono;
        } else if (coef.is_real() || coef.re() == 0) {
            cs = coef.str() + "*" + mono;
        } else {
            cs = "(" + coef.str() + ")*" + mono;
        }
        os << sign << cs;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parser: identifiers, '^' powers, 'i' imaginary unit, rationals p/q,
// parentheses, explicit '*' and juxtaposition products.
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string integer() {
        skip_ws();
        std::size_t s = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (s == pos) throw ParseError("expected a number at position " + std::to_string(pos));
        return std::string(text.substr(s, pos - s));
    }
    std::string identifier() {
        skip_ws();
        std::size_t s = pos;
        if (pos < text.size() &&
            (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        return std::string(text.substr(s, pos - s));
    }
    bool starts_factor() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }
};

class Parser {
public:
    Parser(const Ring& r, std::string_view text) : ring_(r), lex_{text} {}

    Poly run() {
        Poly p = expr();
        lex_.skip_ws();
        if (lex_.pos != lex_.text.size())
            throw ParseError("trailing input at position " + std::to_string(lex_.pos));
        return p;
    }

private:
    Poly expr() {
        bool neg = false;
        if (lex_.eat('-'))
            neg = true;
        else
            lex_.eat('+');
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (lex_.eat('+'))
                acc += term();
            else if (lex_.eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (lex_.eat('*'))
                acc = acc * factor();
            else if (lex_.starts_factor())
                acc = acc * factor(); // juxtaposition, e.g. "2t"
            else
                break;
        }
        return acc;
    }

    Poly factor() {
        Poly base = primary();
        if (lex_.eat('^')) {
            std::string e = lex_.integer();
            if (e.size() > 8) throw ParseError("exponent too large");
            unsigned long v = std::stoul(e);
            if (v > (1u << 24)) throw ParseError("exponent too large");
            base = base.pow(static_cast<std::uint32_t>(v));
        }
        return base;
    }

    Poly primary() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.eat('(');
            Poly p = expr();
            if (!lex_.eat(')')) throw ParseError("missing ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lex_.integer();
            if (lex_.peek() == '/') {
                lex_.eat('/');
                std::string den = lex_.integer();
                Rational q(mpz_class(num), mpz_class(den));
                if (q.get_den() == 0) throw ParseError("zero denominator");
                q.canonicalize();
                return Poly::constant(ring_, GaussRational(q));
            }
            return Poly::constant(ring_, GaussRational(Rational(mpz_class(num))));
        }
        std::string id = lex_.identifier();
        if (id.empty()) throw ParseError("unexpected character at position " +
                                         std::to_string(lex_.pos));
        if (id == "i") return Poly::constant(ring_, GaussRational::imaginary_unit());
        if (!ring_.has(id)) throw ParseError("unknown variable '" + id + "'");
        return Poly::variable(ring_, id);
    }

    const Ring& ring_;
    Lexer lex_;
};

} // namespace

Poly Poly::parse(const Ring& r, std::string_view text) { return Parser(r, text).run(); }

Poly lift_to_ring(const Poly& p, const Ring& target) {
    if (p.ring() == target) return p;
    std::map<std::string, Poly> identity;
    return p.substitute(identity, target);
}

} // namespace cd4
