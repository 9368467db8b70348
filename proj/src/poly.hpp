#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gauss.hpp"

namespace cd4 {

/// Ordered list of variable names. Value object: two rings are equal iff
/// their variable lists are equal. The name "i" is reserved for the
/// imaginary unit and rejected.
class Ring {
public:
    Ring() : vars_(std::make_shared<const std::vector<std::string>>()) {}
    explicit Ring(std::vector<std::string> vars);

    std::size_t size() const { return vars_->size(); }
    const std::vector<std::string>& vars() const { return *vars_; }
    const std::string& var(std::size_t idx) const { return (*vars_)[idx]; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    bool has(std::string_view name) const { return index_of(name).has_value(); }

    /// New ring with one extra variable appended.
    Ring extended(const std::string& name) const;
    /// New ring with the named variables removed.
    Ring without(const std::vector<std::string>& names) const;

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    std::shared_ptr<const std::vector<std::string>> vars_;
};

/// Exponent vector; length always equals the ring's variable count.
using Exps = std::vector<std::uint32_t>;

std::uint32_t exps_degree(const Exps& e);
bool exps_divides(const Exps& a, const Exps& b); // a | b
Exps exps_lcm(const Exps& a, const Exps& b);
Exps exps_add(const Exps& a, const Exps& b); // overflow-checked
Exps exps_sub(const Exps& a, const Exps& b); // requires a >= b

/// Sparse multivariate polynomial over the Gaussian rationals, in canonical
/// form: no zero coefficients are stored and the term map is ordered, so two
/// polynomials are equal iff their rings and term maps are equal.
class Poly {
public:
    using TermMap = std::map<Exps, GaussRational>;

    Poly() = default; // zero polynomial of the empty ring

    static Poly zero(const Ring& r) { return Poly(r); }
    static Poly constant(const Ring& r, GaussRational c);
    static Poly variable(const Ring& r, std::string_view name);
    static Poly term(const Ring& r, Exps e, GaussRational c);

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussRational constant_term() const;
    GaussRational coefficient(const Exps& e) const;
    std::size_t term_count() const { return terms_.size(); }
    std::uint32_t total_degree() const; // 0 for the zero polynomial
    std::uint32_t degree_in(std::string_view var) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const GaussRational& c) const;
    Poly pow(std::uint32_t e) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Exact quotient if the divisor divides this polynomial, nullopt
    /// otherwise. Division by zero throws.
    std::optional<Poly> exact_divide(const Poly& divisor) const;

    /// Ring homomorphism: each assigned variable goes to its image, every
    /// other variable goes to the variable of the same name in the target
    /// ring. The target is the common ring of the images (or this ring when
    /// all images are constants / the map is empty).
    Poly substitute(const std::map<std::string, Poly>& images) const;
    Poly substitute(const std::map<std::string, Poly>& images, const Ring& target) const;

    Poly partial(std::string_view var) const;

    /// Least exponent of var over all terms; nullopt (= infinity) for 0.
    std::optional<std::uint32_t> order_in(std::string_view var) const;

    /// Full evaluation; every ring variable must be assigned.
    GaussRational evaluate(const std::map<std::string, GaussRational>& values) const;
    /// Double-precision evaluation, one value per ring variable in order.
    double eval_double(const std::vector<double>& values) const;

    /// Canonical printer; parse(ring, str()) reproduces the polynomial.
    std::string str() const;
    static Poly parse(const Ring& r, std::string_view text);

private:
    explicit Poly(Ring r) : ring_(std::move(r)) {}
    void insert_term(const Exps& e, GaussRational c);
    static void require_same_ring(const Poly& a, const Poly& b);

    Ring ring_;
    TermMap terms_;
};

/// Lift a polynomial into a larger ring containing all its variables.
Poly lift_to_ring(const Poly& p, const Ring& target);

} // namespace cd4
