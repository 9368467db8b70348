#include "gauss.hpp"

namespace cd4 {

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

std::optional<GaussRational> GaussRational::sqrt() const {
    if (im_ == 0) {
        if (re_ >= 0) {
            auto r = rational_sqrt(re_);
            if (!r) return std::nullopt;
            return GaussRational(*r);
        }
        auto r = rational_sqrt(-re_);
        if (!r) return std::nullopt;
        return GaussRational(Rational(0), *r);
    }
    // (p + qi)^2 = re + im*i  <=>  p^2 - q^2 = re, 2pq = im.
    // Then p^2 = (re + |w|)/2 with |w| = sqrt(re^2 + im^2).
    auto mod = rational_sqrt(norm());
    if (!mod) return std::nullopt;
    Rational p2 = (re_ + *mod) / 2;
    auto p = rational_sqrt(p2);
    if (!p || *p == 0) return std::nullopt;
    Rational q = im_ / (2 * *p);
    GaussRational root(*p, q);
    if (root * root == *this) return root;
    return std::nullopt;
}

std::string GaussRational::str() const {
    auto rat = [](const Rational& q) { return q.get_str(); };
    if (im_ == 0) return rat(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rat(im_) + "*i";
    if (re_ == 0) return imag;
    if (im_ > 0) return rat(re_) + "+" + imag;
    return rat(re_) + imag; // imag already carries the sign
}

} // namespace cd4
