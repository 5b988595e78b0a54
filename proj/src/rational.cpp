#include "qv/rational.hpp"

#include "qv/errors.hpp"

namespace qv {

Rational rat_parse(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw BadParams("cannot parse rational: " + text);
    if (r.get_den() == 0) throw DivisionByZero();
    r.canonicalize();
    return r;
}

std::string rat_str(const Rational& x) { return x.get_str(); }

bool rat_is_integer(const Rational& x) { return x.get_den() == 1; }

int64_t rat_floor(const Rational& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q.get_si();
}

int64_t rat_ceil(const Rational& x) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q.get_si();
}

int64_t rat_to_i64(const Rational& x) {
    if (!rat_is_integer(x)) throw BadParams("expected an integer, got " + rat_str(x));
    return x.get_num().get_si();
}

std::optional<Rational> nth_root_if_exact(const Rational& x, unsigned n) {
    if (n == 0) throw BadParams("0-th root");
    if (n == 1) return x;
    if (x == 0) return Rational(0);
    const bool negative = x < 0;
    if (negative && n % 2 == 0) return std::nullopt;

    mpz_class num = abs(x.get_num());
    mpz_class den = x.get_den();
    mpz_class rnum, rden;
    const bool num_ok = mpz_root(rnum.get_mpz_t(), num.get_mpz_t(), n) != 0;
    if (!num_ok) return std::nullopt;
    const bool den_ok = mpz_root(rden.get_mpz_t(), den.get_mpz_t(), n) != 0;
    if (!den_ok) return std::nullopt;

    Rational r(negative ? mpz_class(-rnum) : rnum, rden);
    r.canonicalize();
    return r;
}

}  // namespace qv
