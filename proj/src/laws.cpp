#include "wgcalc/laws.hpp"

#include "wgcalc/asymptotics.hpp"
#include "wgcalc/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace wgc {

namespace {

void check_nonnegative(const Rational& value, const char* what)
{
    if (sgn(value) < 0)
        fail(ErrorKind::invalid_argument, std::string(what) + " must be nonnegative");
}

// Moments from cumulants over all partitions (classical) or noncrossing ones (free).
std::vector<Rational> moments_from_cumulants(const std::vector<Rational>& kappa, bool free)
{
    std::vector<Rational> out;
    for (int r = 1; r <= static_cast<int>(kappa.size()); ++r) {
        Rational m = 0;
        for_each_partition(r, [&](const Partition& p) {
            if (free && !is_noncrossing(p))
                return;
            Rational term = 1;
            for (int size : p.block_sizes())
                term *= kappa[size - 1];
            m += term;
        });
        out.push_back(m);
    }
    return out;
}

Rational power(const Rational& x, int e)
{
    Rational out = 1;
    for (int i = 0; i < e; ++i)
        out *= x;
    return out;
}

struct Factor {
    int k;
    Color e;
};

std::string describe(const std::vector<Factor>& spec)
{
    std::string out = "(";
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(spec[i].k);
        if (spec[i].e == Color::star)
            out += "*";
    }
    return out + ")";
}

// kappa_r of a circular element evaluated at the given star pattern.
Rational circular_cumulant(const LawDescriptor& law, const std::vector<Factor>& spec)
{
    if (spec.size() == 1)
        return law.mean;
    if (spec.size() == 2 && spec[0].e != spec[1].e)
        return law.variance;
    return 0;
}

Rational decomposition_cumulant(Kind group, const std::vector<Factor>& spec)
{
    const int r = static_cast<int>(spec.size());
    int g = 0;
    for (const auto& f : spec)
        g = std::gcd(g, f.k);
    const bool equal = std::all_of(spec.begin(), spec.end(), [&](const Factor& f) { return f.k == spec[0].k; });
    Rational total = 0;
    switch (group) {
    case Kind::S:
        for (int l = 1; l <= g; ++l)
            if (g % l == 0)
                total += power(l, r) * law_cumulants(LawDescriptor::poisson(make_rational(1, l)), r)[r - 1];
        return total;
    case Kind::H:
        for (int l = 1; l <= g; ++l) {
            if (g % l != 0)
                continue;
            const Rational c = law_cumulants(LawDescriptor::poisson(make_rational(1, 2 * l)), r)[r - 1];
            int sign = 1;
            for (const auto& f : spec)
                sign *= (f.k / l) % 2 == 0 ? 1 : -1;
            total += power(l, r) * (c + sign * c);
        }
        return total;
    case Kind::S_plus: {
        total += law_cumulants(LawDescriptor::free_poisson(1), r)[r - 1];
        const int k = spec[0].k;
        if (equal && k == 2)
            total += law_cumulants(LawDescriptor::semicircular(1, 1), r)[r - 1];
        else if (equal && k >= 3)
            total += circular_cumulant(LawDescriptor::circular(1, 1), spec);
        return total;
    }
    case Kind::H_plus: {
        const Rational c = law_cumulants(LawDescriptor::free_poisson(make_rational(1, 2)), r)[r - 1];
        int sign = 1;
        for (const auto& f : spec)
            sign *= f.k % 2 == 0 ? 1 : -1;
        total += c + sign * c;
        const int k = spec[0].k;
        if (equal && k == 2)
            total += law_cumulants(LawDescriptor::semicircular(0, 1), r)[r - 1];
        else if (equal && k >= 3)
            total += circular_cumulant(LawDescriptor::circular(1, 0), spec);
        return total;
    }
    default:
        fail(ErrorKind::unsupported_category, "cycle decompositions exist only for S, H, S+ and H+");
    }
}

} // namespace

LawDescriptor LawDescriptor::gaussian(Rational mean, Rational variance)
{
    check_nonnegative(variance, "variance");
    LawDescriptor d;
    d.family = LawFamily::gaussian;
    d.mean = std::move(mean);
    d.variance = std::move(variance);
    return d;
}

LawDescriptor LawDescriptor::poisson(Rational lambda)
{
    check_nonnegative(lambda, "lambda");
    LawDescriptor d;
    d.family = LawFamily::poisson;
    d.lambda = std::move(lambda);
    return d;
}

LawDescriptor LawDescriptor::semicircular(Rational mean, Rational variance)
{
    LawDescriptor d = gaussian(std::move(mean), std::move(variance));
    d.family = LawFamily::semicircular;
    return d;
}

LawDescriptor LawDescriptor::circular(Rational covariance, Rational mean)
{
    LawDescriptor d = gaussian(std::move(mean), std::move(covariance));
    d.family = LawFamily::circular;
    return d;
}

LawDescriptor LawDescriptor::free_poisson(Rational lambda)
{
    LawDescriptor d = poisson(std::move(lambda));
    d.family = LawFamily::free_poisson;
    return d;
}

LawDescriptor LawDescriptor::compound_poisson(Rational lambda, std::vector<Rational> jump_moments)
{
    LawDescriptor d = poisson(std::move(lambda));
    d.family = LawFamily::compound_poisson;
    d.jump_moments = std::move(jump_moments);
    return d;
}

LawDescriptor LawDescriptor::symmetrized_rayleigh(Rational variance)
{
    LawDescriptor d = gaussian(0, std::move(variance));
    d.family = LawFamily::symmetrized_rayleigh;
    return d;
}

std::string LawDescriptor::name() const
{
    switch (family) {
    case LawFamily::gaussian: return "gaussian";
    case LawFamily::poisson: return "poisson";
    case LawFamily::semicircular: return "semicircular";
    case LawFamily::circular: return "circular";
    case LawFamily::free_poisson: return "free-poisson";
    case LawFamily::compound_poisson: return "compound-poisson";
    case LawFamily::symmetrized_rayleigh: return "symmetrized-rayleigh";
    }
    return "?";
}

bool LawDescriptor::is_free() const
{
    return family == LawFamily::semicircular || family == LawFamily::circular || family == LawFamily::free_poisson;
}

std::vector<Rational> law_cumulants(const LawDescriptor& law, int r_max)
{
    if (r_max < 1)
        fail(ErrorKind::invalid_argument, "r_max must be at least 1");
    std::vector<Rational> out(static_cast<std::size_t>(r_max), Rational(0));
    switch (law.family) {
    case LawFamily::gaussian:
    case LawFamily::semicircular:
    case LawFamily::circular:
        out[0] = law.mean;
        if (r_max >= 2)
            out[1] = law.variance;
        break;
    case LawFamily::poisson:
    case LawFamily::free_poisson:
        for (auto& c : out)
            c = law.lambda;
        break;
    case LawFamily::compound_poisson:
        if (static_cast<int>(law.jump_moments.size()) < r_max)
            fail(ErrorKind::invalid_argument, "compound Poisson law needs " + std::to_string(r_max) + " jump moments");
        for (int r = 0; r < r_max; ++r)
            out[r] = law.lambda * law.jump_moments[r];
        break;
    case LawFamily::symmetrized_rayleigh:
        fail(ErrorKind::unsupported_category, "symmetrized Rayleigh laws are described by moments only");
    }
    return out;
}

std::vector<Rational> law_moments(const LawDescriptor& law, int r_max)
{
    if (r_max < 1)
        fail(ErrorKind::invalid_argument, "r_max must be at least 1");
    if (law.family == LawFamily::symmetrized_rayleigh) {
        std::vector<Rational> out;
        Rational factorial = 1;
        for (int r = 1; r <= r_max; ++r) {
            if (r % 2 == 1) {
                out.push_back(0);
                continue;
            }
            factorial *= r / 2;
            out.push_back(factorial * power(law.variance, r / 2));
        }
        return out;
    }
    if (law.family == LawFamily::circular) {
        // Powers of c alone: kappa_2(c, c) = 0, so only the mean survives.
        std::vector<Rational> out;
        for (int r = 1; r <= r_max; ++r)
            out.push_back(power(law.mean, r));
        return out;
    }
    return moments_from_cumulants(law_cumulants(law, r_max), law.is_free());
}

LawDescriptor trace_law(const Category& cat, int k, int r_max)
{
    if (k < 1 || r_max < 1)
        fail(ErrorKind::invalid_argument, "k and r_max must be at least 1");
    const int shift = cat.kind == Kind::B || cat.kind == Kind::B_plus ? 1 : 0;
    switch (cat.kind) {
    case Kind::O:
    case Kind::B:
        return LawDescriptor::gaussian(k % 2 == 0 ? 1 + shift : shift, k);
    case Kind::O_plus:
    case Kind::B_plus:
        if (k <= 2)
            return LawDescriptor::semicircular(k == 2 ? 1 + shift : shift, 1);
        return LawDescriptor::circular(1, shift);
    case Kind::S:
    case Kind::H: {
        // u_k = sum over l | k of l times the (signed) l-cycle counts.
        Rational lambda = 0;
        std::vector<Rational> weighted(static_cast<std::size_t>(r_max), 0);
        for (int l = 1; l <= k; ++l) {
            if (k % l != 0)
                continue;
            lambda += Rational(1, l);
            for (int p = 1; p <= r_max; ++p) {
                if (cat.kind == Kind::S) {
                    weighted[p - 1] += Rational(1, l) * power(l, p);
                } else {
                    const int sign = (k / l) % 2 == 0 ? 1 : -1;
                    weighted[p - 1] += Rational(1, 2 * l) * (power(l, p) + power(sign * l, p));
                }
            }
        }
        for (auto& m : weighted)
            m /= lambda;
        return LawDescriptor::compound_poisson(lambda, std::move(weighted));
    }
    default:
        fail(ErrorKind::unsupported_category, "no single-family limit law for " + cat.name());
    }
}

DecompositionReport cycle_decomposition_check(Kind group, int k_max)
{
    if (k_max < 1)
        fail(ErrorKind::invalid_argument, "k_max must be at least 1");
    const Category cat = Category::of(group);
    const bool free = cat.is_free();
    DecompositionReport report;
    std::vector<Factor> spec;
    std::function<void(int)> rec = [&](int r) {
        if (static_cast<int>(spec.size()) == r) {
            MomentSpec ms;
            for (const auto& f : spec) {
                ms.lengths.push_back(f.k);
                ms.stars.push_back(f.e);
            }
            const Rational lhs = decomposition_cumulant(group, spec);
            const Rational rhs = closed_form_cumulant(cat, ms);
            ++report.checks;
            if (lhs != rhs)
                report.mismatches.push_back(cat.name() + " " + describe(spec) + ": decomposition " + to_string(lhs) +
                                            ", closed form " + to_string(rhs));
            return;
        }
        for (int k = 1; k <= k_max; ++k)
            for (Color e : {Color::one, Color::star}) {
                if (e == Color::star && !free)
                    continue;
                spec.push_back({k, e});
                rec(r);
                spec.pop_back();
            }
    };
    for (int r = 1; r <= 3; ++r)
        rec(r);
    return report;
}

} // namespace wgc
