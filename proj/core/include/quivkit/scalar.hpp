#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace qk {

/* Coefficient field: the rationals (p == 0) or a prime field GF(p). */
struct Field {
    long p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field&) const = default;

    std::string name() const {
        return is_rational() ? "Q" : ("GF(" + std::to_string(p) + ")");
    }

    static Field rationals() { return Field{0}; }
    static Field prime(long p) {
        if (p < 2) throw std::invalid_argument("prime field needs p >= 2");
        return Field{p};
    }
};

/* Exact field element.  Over GF(p) the value is kept as the canonical
   representative in [0, p).  Mixing fields in one operation is a bug. */
class Scalar {
  public:
    Scalar() : v_(0), p_(0) {}
    explicit Scalar(const Field& f) : v_(0), p_(f.p) {}
    Scalar(const Field& f, const mpq_class& v) : v_(v), p_(f.p) { reduce(); }
    Scalar(const Field& f, long num, long den = 1) : v_(num, den), p_(f.p) {
        v_.canonicalize();
        reduce();
    }

    static Scalar zero(const Field& f) { return Scalar(f); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }

    /* Parses "a" or "a/b". */
    static Scalar parse(const Field& f, const std::string& s) {
        mpq_class q(s);
        q.canonicalize();
        return Scalar(f, q);
    }

    Field field() const { return Field{p_}; }
    const mpq_class& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const { return make(p_, -v_); }

    Scalar operator+(const Scalar& o) const { check(o); return make(p_, v_ + o.v_); }
    Scalar operator-(const Scalar& o) const { check(o); return make(p_, v_ - o.v_); }
    Scalar operator*(const Scalar& o) const { check(o); return make(p_, v_ * o.v_); }

    Scalar operator/(const Scalar& o) const {
        check(o);
        if (o.is_zero()) throw std::domain_error("division by zero");
        if (p_ == 0) return make(0, v_ / o.v_);
        return *this * o.inverse();
    }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        if (p_ == 0) return make(0, 1 / v_);
        mpz_class r, m(p_);
        if (mpz_invert(r.get_mpz_t(), v_.get_num().get_mpz_t(), m.get_mpz_t()) == 0)
            throw std::domain_error("non-invertible element mod p");
        return make(p_, mpq_class(r));
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const { return v_.get_str(); }

  private:
    static Scalar make(long p, const mpq_class& v) {
        Scalar s;
        s.p_ = p;
        s.v_ = v;
        s.reduce();
        return s;
    }

    void check(const Scalar& o) const {
        if (p_ != o.p_) throw std::logic_error("scalar field mismatch");
    }

    void reduce() {
        if (p_ == 0) return;
        mpz_class m(p_);
        if (v_.get_den() != 1) {
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), v_.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
                throw std::domain_error("denominator not invertible mod p");
            v_ = mpq_class(v_.get_num() * inv);
        }
        mpz_class n = v_.get_num() % m;
        if (n < 0) n += m;
        v_ = mpq_class(n);
    }

    mpq_class v_;
    long p_;
};

}  // namespace qk
