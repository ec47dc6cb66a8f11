#include "adr/field.hpp"

namespace adr {

Field Field::prime(unsigned long p) {
    mpz_class m(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
        throw input_error("field characteristic must be prime, got " + std::to_string(p));
    return Field(p);
}

mpq_class Field::from_long(long v) const { return reduce(mpq_class(v)); }

mpq_class Field::from_mpz(const mpz_class& v) const { return reduce(mpq_class(v)); }

mpq_class Field::reduce(const mpq_class& v) const {
    if (p_ == 0) return v;
    mpz_class p(p_);
    mpz_class den = v.get_den();
    mpz_class num = v.get_num();
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw input_error("denominator not invertible mod " + std::to_string(p_));
    mpz_class r = (num * dinv) % p;
    if (r < 0) r += p;
    return mpq_class(r);
}

mpq_class Field::add(const mpq_class& a, const mpq_class& b) const {
    if (p_ == 0) return a + b;
    mpz_class r = (a.get_num() + b.get_num()) % mpz_class(p_);
    if (r < 0) r += p_;
    return mpq_class(r);
}

mpq_class Field::sub(const mpq_class& a, const mpq_class& b) const {
    if (p_ == 0) return a - b;
    mpz_class r = (a.get_num() - b.get_num()) % mpz_class(p_);
    if (r < 0) r += p_;
    return mpq_class(r);
}

mpq_class Field::mul(const mpq_class& a, const mpq_class& b) const {
    if (p_ == 0) return a * b;
    mpz_class r = (a.get_num() * b.get_num()) % mpz_class(p_);
    if (r < 0) r += p_;
    return mpq_class(r);
}

mpq_class Field::neg(const mpq_class& a) const {
    if (p_ == 0) return -a;
    if (sgn(a) == 0) return a;
    return mpq_class(mpz_class(p_) - a.get_num());
}

mpq_class Field::inv(const mpq_class& a) const {
    if (sgn(a) == 0) throw input_error("division by zero");
    if (p_ == 0) return 1 / a;
    mpz_class p(p_), r;
    mpz_class num = a.get_num();
    if (mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
        throw input_error("element not invertible mod " + std::to_string(p_));
    return mpq_class(r);
}

mpq_class Field::div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

std::string Field::str() const {
    return p_ == 0 ? std::string("Q") : "Fp:" + std::to_string(p_);
}

std::string scalar_str(const mpq_class& v) { return v.get_str(); }

}  // namespace adr
