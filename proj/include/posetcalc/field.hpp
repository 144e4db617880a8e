#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace posetcalc {

// Coefficient field: the rationals (p == 0) or the prime field GF(p).
// All arithmetic in the library is exact; there are no tolerances anywhere.
struct Field {
    unsigned long p = 0;

    static Field rationals() { return Field{0}; }
    static Field prime(unsigned long p);
    // "q" or "gfp:<p>"
    static Field parse(const std::string& text);

    bool is_rational() const { return p == 0; }
    std::string name() const;
    bool operator==(const Field&) const = default;
};

constexpr unsigned long kDefaultPrime = 1000003;

// One field element. Rationals are kept canonical (lowest terms, positive
// denominator, handled by GMP); prime-field residues live in [0, p).
class Scalar {
  public:
    Scalar() : p_(0) {}

    static Scalar zero(const Field& f) { return Scalar(mpq_class(0), f.p); }
    static Scalar one(const Field& f) { return Scalar(mpq_class(1), f.p); }
    static Scalar of_int(long n, const Field& f);
    // Accepts "7", "-7", "3/2"; over GF(p) a denominator is inverted mod p.
    static Scalar parse(const std::string& text, const Field& f);

    const Field field() const { return Field{p_}; }
    bool is_zero() const { return v_ == 0; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const mpq_class& value() const { return v_; }
    std::string str() const;

  private:
    Scalar(mpq_class v, unsigned long p);
    void reduce();
    static void check_same(const Scalar& a, const Scalar& b);

    mpq_class v_;
    unsigned long p_;
};

}  // namespace posetcalc
