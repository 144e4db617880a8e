#include "posetcalc/field.hpp"

namespace posetcalc {

Field Field::prime(unsigned long p) {
    if (p < 2) throw std::invalid_argument("field: modulus must be a prime >= 2");
    mpz_class m(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("field: modulus " + std::to_string(p) + " is not prime");
    return Field{p};
}

Field Field::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    const std::string prefix = "gfp:";
    if (text.rfind(prefix, 0) == 0) {
        unsigned long p = std::stoul(text.substr(prefix.size()));
        return prime(p);
    }
    throw std::invalid_argument("field: expected 'q' or 'gfp:<p>', got '" + text + "'");
}

std::string Field::name() const {
    return is_rational() ? "q" : "gfp:" + std::to_string(p);
}

Scalar::Scalar(mpq_class v, unsigned long p) : v_(std::move(v)), p_(p) { reduce(); }

void Scalar::reduce() {
    v_.canonicalize();
    if (p_ == 0) return;
    mpz_class p(p_);
    if (v_.get_den() != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), v_.get_den().get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("scalar: denominator not invertible mod p");
        v_ = v_.get_num() * inv;
    }
    mpz_class r = v_.get_num() % p;
    if (r < 0) r += p;
    v_ = r;
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("scalar: mixed fields");
}

Scalar Scalar::of_int(long n, const Field& f) { return Scalar(mpq_class(n), f.p); }

Scalar Scalar::parse(const std::string& text, const Field& f) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("scalar: cannot parse '" + text + "'");
    return Scalar(v, f.p);
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(*this, o);
    return Scalar(v_ + o.v_, p_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(*this, o);
    return Scalar(v_ - o.v_, p_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(*this, o);
    return Scalar(v_ * o.v_, p_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return Scalar(-v_, p_); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("scalar: division by zero");
    if (p_ == 0) return Scalar(1 / v_, 0);
    mpz_class p(p_), inv;
    mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
    return Scalar(mpq_class(inv), p_);
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(*this, o);
    return v_ == o.v_;
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace posetcalc
