#include "lorenz/numberfield.hpp"

#include "lorenz/error.hpp"

#include <cctype>
#include <mutex>

namespace lorenz {

struct FieldContext::Impl {
    RatPoly defining;
    unsigned float_bits = 0;

    mutable std::mutex mu;
    RatPoly modulus;
    RationalInterval root;
    int sign_at_lo = 0;  // sign of modulus at root.lo; 0 when the root is rational and pinned
    RationalInterval float_beta;

    // Callers hold mu.
    void pin_if_rational()
    {
        if (sgn(modulus.eval(root.lo)) == 0) {
            root.hi = root.lo;
        } else if (sgn(modulus.eval(root.hi)) == 0) {
            root.lo = root.hi;
        }
        sign_at_lo = root.lo == root.hi ? 0 : sgn(modulus.eval(root.lo));
    }

    void refine(unsigned bits)
    {
        Rational target(1);
        mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), bits);
        while (root.width() > target) {
            Rational mid = (root.lo + root.hi) / 2;
            int s = sgn(modulus.eval(mid));
            if (s == 0) {
                root.lo = root.hi = mid;
                sign_at_lo = 0;
                return;
            }
            if (s == sign_at_lo) {
                root.lo = mid;
            } else {
                root.hi = mid;
            }
        }
    }

    // Replaces the modulus by the factor g or modulus/g, whichever vanishes at
    // beta. Returns true when g was kept.
    bool split(const RatPoly& g)
    {
        bool keep_g = count_roots(g, root.lo, root.hi) > 0;
        modulus = keep_g ? g.monic() : divmod(modulus, g).first.monic();
        pin_if_rational();
        return keep_g;
    }
};

namespace {

std::shared_ptr<FieldContext::Impl> make_impl(const RatPoly& poly, const Rational& lo, const Rational& hi,
                                              unsigned float_bits)
{
    auto impl = std::make_shared<FieldContext::Impl>();
    impl->defining = poly;
    impl->float_bits = float_bits;
    impl->modulus = poly.monic();
    impl->root = {lo, hi};
    impl->pin_if_rational();
    if (float_bits > 0) {
        impl->refine(float_bits + 8);
        impl->float_beta = {round_down(impl->root.lo, float_bits), round_up(impl->root.hi, float_bits)};
    }
    return impl;
}

RationalInterval round_out(const RationalInterval& iv, unsigned bits)
{
    return {round_down(iv.lo, bits), round_up(iv.hi, bits)};
}

// Interval Horner with every intermediate rounded outward to `bits` bits.
RationalInterval eval_rounded(const RatPoly& p, const RationalInterval& x, unsigned bits)
{
    if (p.is_zero()) {
        return {0, 0};
    }
    const auto& c = p.coeffs();
    RationalInterval acc = round_out({c.back(), c.back()}, bits);
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
        acc = round_out(acc * x, bits) + round_out({*it, *it}, bits);
    }
    return acc;
}

Rational pow2_neg(unsigned bits)
{
    Rational r(1);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
    return r;
}

constexpr unsigned kMaxBits = 1u << 16;

void check_same(const FieldContext& a, const FieldContext& b)
{
    if (!(a == b)) {
        throw LorenzError(ErrorKind::FieldMismatch, "operands belong to different fields");
    }
}

} // namespace

FieldContext FieldContext::create(std::span<const Integer> poly, const Rational& lo, const Rational& hi,
                                  unsigned float_bits)
{
    RatPoly p = RatPoly::from_integers(poly);
    if (p.degree() < 1) {
        throw LorenzError(ErrorKind::NoRootInInterval, "defining polynomial must be nonconstant");
    }
    if (lo > hi) {
        throw LorenzError(ErrorKind::NoRootInInterval, "empty isolating interval");
    }
    RatPoly g = gcd(p, p.derivative());
    if (g.degree() >= 1) {
        throw LorenzError(ErrorKind::NonSquarefree, "repeated factor " + g.to_string());
    }
    std::size_t n = count_roots(p, lo, hi);
    if (n == 0) {
        throw LorenzError(ErrorKind::NoRootInInterval,
                          p.to_string() + " has no root in [" + lo.get_str() + ", " + hi.get_str() + "]");
    }
    if (n > 1) {
        throw LorenzError(ErrorKind::MultipleRootsInInterval,
                          p.to_string() + " has " + std::to_string(n) + " roots in [" + lo.get_str() + ", " +
                              hi.get_str() + "]");
    }
    return FieldContext(make_impl(p, lo, hi, float_bits));
}

FieldContext FieldContext::rationals(unsigned float_bits)
{
    std::vector<Integer> x{0, 1};
    return create(x, -1, 1, float_bits);
}

FieldContext field_new(std::span<const Integer> poly, const Rational& lo, const Rational& hi)
{
    return FieldContext::create(poly, lo, hi);
}

const RatPoly& FieldContext::defining_poly() const { return impl_->defining; }

RatPoly FieldContext::modulus() const
{
    std::lock_guard lock(impl_->mu);
    return impl_->modulus;
}

int FieldContext::degree() const
{
    std::lock_guard lock(impl_->mu);
    return impl_->modulus.degree();
}

bool FieldContext::is_float() const { return impl_->float_bits > 0; }

unsigned FieldContext::float_bits() const { return impl_->float_bits; }

RationalInterval FieldContext::root_interval(unsigned bits) const
{
    std::lock_guard lock(impl_->mu);
    impl_->refine(bits);
    return impl_->root;
}

FieldElement FieldContext::zero() const { return from_rational(0); }

FieldElement FieldContext::one() const { return from_rational(1); }

FieldElement FieldContext::generator() const { return from_coeffs({0, 1}); }

FieldElement FieldContext::from_rational(const Rational& q) const
{
    if (is_float()) {
        return FieldElement(*this, round_out({q, q}, impl_->float_bits));
    }
    return FieldElement(*this, RatPoly::constant(q));
}

FieldElement FieldContext::from_coeffs(const std::vector<Rational>& coeffs) const
{
    RatPoly p(coeffs);
    if (is_float()) {
        return FieldElement(*this, eval_rounded(p, impl_->float_beta, impl_->float_bits));
    }
    return FieldElement(*this, p % modulus());
}

namespace {

// Recursive-descent parser for expressions in the generator `b`.
class ExprParser {
public:
    ExprParser(const FieldContext& ctx, const std::string& text) : ctx_(ctx), text_(text) {}

    FieldElement run()
    {
        FieldElement e = sum();
        skip();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return e;
    }

private:
    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char ch)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw LorenzError(ErrorKind::ConfigParse, "expression '" + text_ + "': " + msg);
    }

    FieldElement sum()
    {
        FieldElement acc = product();
        for (;;) {
            if (eat('+')) {
                acc = acc + product();
            } else if (eat('-')) {
                acc = acc - product();
            } else {
                return acc;
            }
        }
    }

    FieldElement product()
    {
        FieldElement acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                acc = acc / unary();
            } else {
                return acc;
            }
        }
    }

    FieldElement unary()
    {
        if (eat('-')) {
            return -unary();
        }
        if (eat('+')) {
            return unary();
        }
        return power();
    }

    FieldElement power()
    {
        FieldElement base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                fail("exponent must be a nonnegative integer");
            }
            unsigned long e = std::stoul(text_.substr(start, pos_ - start));
            FieldElement acc = ctx_.one();
            for (unsigned long i = 0; i < e; ++i) {
                acc = acc * base;
            }
            return acc;
        }
        return base;
    }

    FieldElement atom()
    {
        skip();
        if (eat('(')) {
            FieldElement e = sum();
            if (!eat(')')) {
                fail("missing ')'");
            }
            return e;
        }
        if (pos_ < text_.size() && text_[pos_] == 'b') {
            ++pos_;
            return ctx_.generator();
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected number, 'b' or '('");
        }
        return ctx_.from_rational(parse_rational(text_.substr(start, pos_ - start)));
    }

    const FieldContext& ctx_;
    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

FieldElement FieldContext::parse(const std::string& expr) const { return ExprParser(*this, expr).run(); }

std::vector<Rational> FieldElement::coeffs() const
{
    if (ctx_.is_float()) {
        return {(iv_.lo + iv_.hi) / 2};
    }
    RatPoly m = ctx_.modulus();
    RatPoly r = value_ % m;
    std::vector<Rational> out = r.coeffs();
    out.resize(static_cast<std::size_t>(m.degree()));
    return out;
}

bool FieldElement::is_rational() const
{
    if (ctx_.is_float()) {
        return iv_.lo == iv_.hi;
    }
    return (value_ % ctx_.modulus()).degree() <= 0;
}

int FieldElement::sign() const
{
    auto& impl = *ctx_.impl_;
    if (impl.float_bits > 0) {
        if (sgn(iv_.lo) > 0) {
            return 1;
        }
        if (sgn(iv_.hi) < 0) {
            return -1;
        }
        if (iv_.width() <= pow2_neg(impl.float_bits / 2)) {
            return 0;
        }
        throw LorenzError(ErrorKind::PrecisionExhausted,
                          "sign undecided at " + std::to_string(impl.float_bits) + " bits");
    }
    std::lock_guard lock(impl.mu);
    RatPoly v = value_ % impl.modulus;
    if (v.degree() <= 0) {
        return v.is_zero() ? 0 : sgn(v.coeffs()[0]);
    }
    bool gcd_checked = false;
    for (unsigned bits = 64; bits <= kMaxBits; bits *= 2) {
        impl.refine(bits);
        RationalInterval iv = eval_rounded(v, impl.root, bits + 16);
        if (sgn(iv.lo) > 0) {
            return 1;
        }
        if (sgn(iv.hi) < 0) {
            return -1;
        }
        if (!gcd_checked && bits >= 128) {
            gcd_checked = true;
            RatPoly g = gcd(v, impl.modulus);
            if (g.degree() >= 1) {
                if (impl.split(g)) {
                    return 0;
                }
                v = v % impl.modulus;
                if (v.degree() <= 0) {
                    return v.is_zero() ? 0 : sgn(v.coeffs()[0]);
                }
            }
        }
    }
    throw LorenzError(ErrorKind::PrecisionExhausted, "sign refinement exceeded " + std::to_string(kMaxBits) + " bits");
}

RationalInterval FieldElement::approx(unsigned bits) const
{
    auto& impl = *ctx_.impl_;
    if (impl.float_bits > 0) {
        return iv_;
    }
    std::lock_guard lock(impl.mu);
    RatPoly v = value_ % impl.modulus;
    if (v.degree() <= 0) {
        Rational q = v.is_zero() ? Rational(0) : v.coeffs()[0];
        return {q, q};
    }
    Rational target = pow2_neg(bits);
    for (unsigned p = bits + 8;; p *= 2) {
        impl.refine(p);
        RationalInterval iv = eval_rounded(v, impl.root, p + 16);
        if (iv.width() <= target) {
            return iv;
        }
        if (p > kMaxBits) {
            throw LorenzError(ErrorKind::PrecisionExhausted, "approx exceeded precision cap");
        }
    }
}

double FieldElement::to_double() const
{
    RationalInterval iv = approx(60);
    return lorenz::to_double((iv.lo + iv.hi) / 2);
}

std::string FieldElement::to_string() const
{
    if (ctx_.is_float()) {
        RationalInterval iv = iv_;
        return "[" + lorenz::to_string(iv.lo) + ", " + lorenz::to_string(iv.hi) + "]";
    }
    return (value_ % ctx_.modulus()).to_string();
}

FieldElement FieldElement::inverse() const
{
    auto& impl = *ctx_.impl_;
    if (impl.float_bits > 0) {
        if (iv_.lo == 0 && iv_.hi == 0) {
            throw LorenzError(ErrorKind::DivisionByZero, "inverse of zero");
        }
        if (iv_.contains_zero()) {
            throw LorenzError(ErrorKind::PrecisionExhausted, "inverse of an interval containing zero");
        }
        return FieldElement(ctx_, round_out({1 / iv_.hi, 1 / iv_.lo}, impl.float_bits));
    }
    std::lock_guard lock(impl.mu);
    for (;;) {
        RatPoly v = value_ % impl.modulus;
        if (v.is_zero()) {
            throw LorenzError(ErrorKind::DivisionByZero, "inverse of zero");
        }
        auto [g, s] = half_gcdext(v, impl.modulus);
        if (g.degree() == 0) {
            return FieldElement(ctx_, s);
        }
        if (impl.split(g)) {
            throw LorenzError(ErrorKind::DivisionByZero, "inverse of an element vanishing at the root");
        }
    }
}

FieldElement operator+(const FieldElement& a, const FieldElement& b)
{
    check_same(a.ctx_, b.ctx_);
    if (a.ctx_.is_float()) {
        return FieldElement(a.ctx_, round_out(a.iv_ + b.iv_, a.ctx_.float_bits()));
    }
    return FieldElement(a.ctx_, a.value_ + b.value_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b)
{
    check_same(a.ctx_, b.ctx_);
    if (a.ctx_.is_float()) {
        return FieldElement(a.ctx_, round_out(a.iv_ - b.iv_, a.ctx_.float_bits()));
    }
    return FieldElement(a.ctx_, a.value_ - b.value_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
    check_same(a.ctx_, b.ctx_);
    if (a.ctx_.is_float()) {
        return FieldElement(a.ctx_, round_out(a.iv_ * b.iv_, a.ctx_.float_bits()));
    }
    if (a.value_.degree() <= 0 || b.value_.degree() <= 0) {
        return FieldElement(a.ctx_, a.value_ * b.value_);
    }
    return FieldElement(a.ctx_, (a.value_ * b.value_) % a.ctx_.modulus());
}

FieldElement operator/(const FieldElement& a, const FieldElement& b)
{
    check_same(a.ctx_, b.ctx_);
    return a * b.inverse();
}

FieldElement operator-(const FieldElement& a)
{
    if (a.ctx_.is_float()) {
        return FieldElement(a.ctx_, RationalInterval{-a.iv_.hi, -a.iv_.lo});
    }
    return FieldElement(a.ctx_, Rational(-1) * a.value_);
}

int compare(const FieldElement& a, const FieldElement& b) { return (a - b).sign(); }

FieldElement abs(const FieldElement& a) { return a.sign() < 0 ? -a : a; }

} // namespace lorenz
