#include "lorenz/ratpoly.hpp"

#include "lorenz/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lorenz {

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b)
{
    return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b)
{
    return {a.lo - b.hi, a.hi - b.lo};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b)
{
    if (sgn(a.lo) >= 0 && sgn(b.lo) >= 0) {
        return {a.lo * b.lo, a.hi * b.hi};
    }
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

long ilog2(const Rational& q)
{
    mpz_class num = abs(q.get_num());
    const mpz_class& den = q.get_den();
    long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    // 2^e <= |q| < 2^(e+2) at this point; settle which.
    Rational pow2(1);
    if (e >= 0) {
        mpq_mul_2exp(pow2.get_mpq_t(), pow2.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpq_div_2exp(pow2.get_mpq_t(), pow2.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    }
    Rational aq = abs(q);
    if (aq < pow2) {
        return e - 1;
    }
    Rational twice = pow2 * 2;
    if (aq >= twice) {
        return e + 1;
    }
    return e;
}

namespace {

Rational scale2(const Rational& q, long k)
{
    Rational r;
    if (k >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
    } else {
        mpq_div_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
    }
    return r;
}

Rational round_dir(const Rational& q, unsigned bits, bool up)
{
    if (sgn(q) == 0) {
        return q;
    }
    long k = static_cast<long>(bits) - 1 - ilog2(q);
    Rational scaled = scale2(q, k);
    mpz_class z;
    if (up) {
        mpz_cdiv_q(z.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    } else {
        mpz_fdiv_q(z.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    }
    return scale2(Rational(z), -k);
}

} // namespace

Rational round_down(const Rational& q, unsigned bits) { return round_dir(q, bits, false); }
Rational round_up(const Rational& q, unsigned bits) { return round_dir(q, bits, true); }

Rational parse_rational(const std::string& raw)
{
    std::string text;
    for (char ch : raw) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            text.push_back(ch);
        }
    }
    if (text.empty()) {
        throw LorenzError(ErrorKind::ConfigParse, "empty rational literal");
    }
    try {
        if (auto slash = text.find('/'); slash != std::string::npos) {
            Rational q(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
            if (q.get_den() == 0) {
                throw LorenzError(ErrorKind::ConfigParse, "zero denominator in '" + raw + "'");
            }
            q.canonicalize();
            return q;
        }
        long exponent = 0;
        if (auto e = text.find_first_of("eE"); e != std::string::npos) {
            exponent = std::stol(text.substr(e + 1));
            text = text.substr(0, e);
        }
        bool negative = !text.empty() && text[0] == '-';
        if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
            text = text.substr(1);
        }
        std::string digits = text;
        if (auto dot = text.find('.'); dot != std::string::npos) {
            digits = text.substr(0, dot) + text.substr(dot + 1);
            exponent -= static_cast<long>(text.size() - dot - 1);
        }
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            throw LorenzError(ErrorKind::ConfigParse, "bad rational literal '" + raw + "'");
        }
        mpz_class ten_pow;
        mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
        Rational q{mpz_class(digits)};
        if (exponent < 0) {
            q /= Rational(ten_pow);
        } else {
            q *= Rational(ten_pow);
        }
        return negative ? Rational(-q) : q;
    } catch (const std::invalid_argument&) {
        throw LorenzError(ErrorKind::ConfigParse, "bad rational literal '" + raw + "'");
    }
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::from_integers(std::span<const Integer> coeffs)
{
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& z : coeffs) {
        c.emplace_back(z);
    }
    return RatPoly(std::move(c));
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(std::size_t degree, const Rational& c)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return RatPoly(std::move(v));
}

void RatPoly::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

Rational RatPoly::eval(const Rational& x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

RationalInterval RatPoly::eval(const RationalInterval& x) const
{
    if (coeffs_.empty()) {
        return {0, 0};
    }
    RationalInterval acc{coeffs_.back(), coeffs_.back()};
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
        acc = acc * x;
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

RatPoly RatPoly::derivative() const
{
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * static_cast<long>(i);
    }
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const
{
    if (coeffs_.empty()) {
        return {};
    }
    Rational inv = 1 / coeffs_.back();
    return inv * *this;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b)
{
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a.coeff(i) + b.coeff(i);
    }
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b)
{
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a.coeff(i) - b.coeff(i);
    }
    return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return RatPoly(std::move(c));
}

RatPoly operator*(const Rational& s, const RatPoly& a)
{
    std::vector<Rational> c = a.coeffs_;
    for (auto& x : c) {
        x *= s;
    }
    return RatPoly(std::move(c));
}

std::string RatPoly::to_string() const
{
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& q = coeffs_[static_cast<std::size_t>(i)];
        if (sgn(q) == 0) {
            continue;
        }
        if (!first) {
            out << (sgn(q) > 0 ? " + " : " - ");
        } else if (sgn(q) < 0) {
            out << "-";
        }
        Rational a = abs(q);
        if (a != 1 || i == 0) {
            out << a.get_str();
            if (i > 0) {
                out << "*";
            }
        }
        if (i >= 1) {
            out << "x";
        }
        if (i >= 2) {
            out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b)
{
    if (b.is_zero()) {
        throw LorenzError(ErrorKind::DivisionByZero, "polynomial division by zero");
    }
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) {
        return {RatPoly{}, a};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
    Rational inv_lead = 1 / b.lead();
    for (int i = a.degree(); i >= db; --i) {
        const Rational factor = rem[static_cast<std::size_t>(i)] * inv_lead;
        if (sgn(factor) == 0) {
            continue;
        }
        quot[static_cast<std::size_t>(i - db)] = factor;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

RatPoly gcd(const RatPoly& a, const RatPoly& b)
{
    RatPoly x = a;
    RatPoly y = b;
    while (!y.is_zero()) {
        RatPoly r = x % y;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

std::pair<RatPoly, RatPoly> half_gcdext(const RatPoly& a, const RatPoly& m)
{
    // Invariant: s0*a = r0, s1*a = r1 (mod m).
    RatPoly r0 = a % m;
    RatPoly r1 = m;
    RatPoly s0 = RatPoly::constant(1);
    RatPoly s1;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.is_zero()) {
        return {RatPoly{}, RatPoly{}};
    }
    Rational inv = 1 / r0.lead();
    return {inv * r0, (inv * s0) % m};
}

namespace {

std::vector<RatPoly> sturm_sequence(const RatPoly& p)
{
    std::vector<RatPoly> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        RatPoly r = seq[seq.size() - 2] % seq.back();
        if (r.is_zero()) {
            break;
        }
        seq.push_back(Rational(-1) * r);
    }
    if (seq.back().is_zero()) {
        seq.pop_back();
    }
    return seq;
}

int sign_variations(const std::vector<RatPoly>& seq, const Rational& x)
{
    int changes = 0;
    int last = 0;
    for (const auto& q : seq) {
        int s = sgn(q.eval(x));
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

} // namespace

std::size_t count_roots(const RatPoly& p, const Rational& lo, const Rational& hi)
{
    if (p.degree() <= 0 || lo > hi) {
        return 0;
    }
    auto seq = sturm_sequence(p);
    int in_half_open = sign_variations(seq, lo) - sign_variations(seq, hi);
    return static_cast<std::size_t>(in_half_open + (sgn(p.eval(lo)) == 0 ? 1 : 0));
}

} // namespace lorenz
