#pragma once

// Hand-rolled random generators for maps and points.

#include "lorenz/error.hpp"
#include "lorenz/lorenzmap.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace gen {

using namespace lorenz;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long uniform_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

    // p/q with q <= max_den, strictly inside (lo, hi); nullopt when 64 draws of q find none.
    std::optional<Rational> rational_in(const Rational& lo, const Rational& hi, long max_den)
    {
        for (int tries = 0; tries < 64; ++tries) {
            long q = uniform_int(1, max_den);
            Rational a = lo * q;
            Rational b = hi * q;
            mpz_class first = a.get_num() / a.get_den() + 1;
            mpz_class last = b.get_num() / b.get_den();
            if (Rational(last) == b) {
                last -= 1;
            }
            if (first > last) {
                continue;
            }
            long span = mpz_class(last - first).get_si();
            Rational x(mpz_class(first + uniform_int(0, span)), mpz_class(q));
            x.canonicalize();
            return x;
        }
        return std::nullopt;
    }

    // k / 2^bits in (0, 1).
    Rational dyadic(unsigned bits = 20)
    {
        long k = uniform_int(1, (1L << bits) - 1);
        Rational x(k, 1L << bits);
        x.canonicalize();
        return x;
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

// Slopes of random maps stay above this margin.
inline const Rational kMinSlope(5, 4);

// Rational ModOne map: beta in (5/4, 2), alpha in (0, 2 - beta).
inline LorenzMap mod_one_rational(Rng& rng, const FieldContext& k, long max_den = 40)
{
    for (;;) {
        std::optional<Rational> beta = rng.rational_in(kMinSlope, Rational(2), max_den);
        if (!beta) {
            continue;
        }
        std::optional<Rational> alpha = rng.rational_in(Rational(0), Rational(2) - *beta, max_den);
        if (!alpha) {
            continue;
        }
        try {
            return LorenzMap::mod_one(k.from_rational(*beta), k.from_rational(*alpha));
        } catch (const LorenzError&) {
        }
    }
}

// Rational two-slope map: c in (1/4, 3/4), a in (5/4, 1/c), b in (5/4, 1/(1-c)).
inline LorenzMap two_slope_rational(Rng& rng, const FieldContext& k, long max_den = 40)
{
    for (;;) {
        std::optional<Rational> c = rng.rational_in(Rational(1, 4), Rational(3, 4), max_den);
        if (!c) {
            continue;
        }
        std::optional<Rational> a = rng.rational_in(kMinSlope, 1 / *c, max_den);
        std::optional<Rational> b = rng.rational_in(kMinSlope, 1 / (1 - *c), max_den);
        if (!a || !b) {
            continue;
        }
        try {
            return LorenzMap::two_slope(k.from_rational(*a), k.from_rational(*b), k.from_rational(*c));
        } catch (const LorenzError&) {
        }
    }
}

inline LorenzMap rational_map(Rng& rng, const FieldContext& k, long max_den = 40)
{
    return rng.uniform_int(0, 1) == 0 ? mod_one_rational(rng, k, max_den) : two_slope_rational(rng, k, max_den);
}

struct PisotField {
    std::vector<Integer> poly;
    Rational lo, hi;
};

// Pisot units in (1, 2): golden ratio, plastic number, tribonacci and two quartic/cubic Pisot roots.
inline const std::vector<PisotField>& pisot_fields()
{
    static const std::vector<PisotField> fields{
        {{-1, -1, 1}, Rational(3, 2), Rational(17, 10)},
        {{-1, -1, 0, 1}, Rational(13, 10), Rational(14, 10)},
        {{-1, -1, -1, 1}, Rational(18, 10), Rational(19, 10)},
        {{-1, 0, -1, 1}, Rational(14, 10), Rational(15, 10)},
        {{-1, 0, 0, -1, 1}, Rational(13, 10), Rational(14, 10)},
    };
    return fields;
}

// ModOne map with Pisot beta and rational alpha in (0, 2 - beta); critical orbits are eventually periodic.
inline LorenzMap mod_one_pisot(Rng& rng, long max_den = 12)
{
    const auto& fields = pisot_fields();
    const PisotField& pf = fields[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(fields.size()) - 1))];
    FieldContext k = FieldContext::create(pf.poly, pf.lo, pf.hi);
    FieldElement beta = k.generator();
    Rational top = Rational(2) - parse_rational(std::to_string(beta.to_double()));
    for (;;) {
        std::optional<Rational> alpha = rng.rational_in(Rational(0), top, max_den);
        if (!alpha) {
            continue;
        }
        try {
            return LorenzMap::mod_one(beta, k.from_rational(*alpha));
        } catch (const LorenzError&) {
        }
    }
}

// Random plain point k/2^20 that is not c.
inline SidedPoint plain_point(Rng& rng, const LorenzMap& f)
{
    for (;;) {
        FieldElement x = f.context().from_rational(rng.dyadic());
        if (x != f.c()) {
            return SidedPoint::plain(x);
        }
    }
}

} // namespace gen
