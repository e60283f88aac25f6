#pragma once

// Normalized-form trigonometric expressions: an expression is an ordered
// sum of terms, each term an exact coefficient in Q[sqrt2,sqrt3] times a
// product of sin/cos powers of integer-coefficient angles.
//
// Canonical form: within a term, factors are distinct, sorted, and have
// positive x coefficient; constant factors are folded into the
// coefficient; like terms are merged; zero terms are dropped. The
// explicit term order of an Expression is observable state (action
// indices depend on it); canonicalize() sorts into the default order.

#include "trigprove/rational.hpp"
#include "trigprove/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trigprove {

struct UnfoldableConstant : std::runtime_error {
    explicit UnfoldableConstant(const std::string& what) : std::runtime_error(what) {}
};

enum class TrigKind : std::uint8_t { Sin = 0, Cos = 1 };

// Angle c*x + r*pi; the phase is stored as the rational multiple r of pi.
struct Angle {
    std::int64_t x_coef = 0;
    Rational phase;  // multiple of pi

    friend Angle operator+(const Angle& a, const Angle& b) {
        return {a.x_coef + b.x_coef, a.phase + b.phase};
    }
    friend Angle operator-(const Angle& a, const Angle& b) {
        return {a.x_coef - b.x_coef, a.phase - b.phase};
    }
    bool operator==(const Angle& o) const { return x_coef == o.x_coef && phase == o.phase; }
};

// Reduce a phase (multiple of pi) mod 2 into (-1, 1].
inline Rational normalize_phase(const Rational& r) {
    BigInt q = ceil_rational((r - 1) / 2);
    return r - Rational(2) * Rational(q);
}

// Exact value of sin/cos at phase r*pi when r has denominator dividing 12.
inline SurdScalar fold_constant(TrigKind kind, const Rational& phase) {
    static const Rational kHalf(1, 2);
    static const Rational kQuarter(1, 4);
    // sin(k*pi/12) for k = 0..6; the rest by symmetry.
    static const SurdScalar kSinTable[7] = {
        SurdScalar(Rational(0)),
        SurdScalar(Rational(0), -kQuarter, Rational(0), kQuarter),  // (sqrt6-sqrt2)/4
        SurdScalar(kHalf),
        SurdScalar(Rational(0), kHalf, Rational(0), Rational(0)),   // sqrt2/2
        SurdScalar(Rational(0), Rational(0), kHalf, Rational(0)),   // sqrt3/2
        SurdScalar(Rational(0), kQuarter, Rational(0), kQuarter),   // (sqrt6+sqrt2)/4
        SurdScalar(Rational(1)),
    };
    Rational r = normalize_phase(phase);
    const BigInt num = numerator(r), den = denominator(r);
    if (den > 12 || 12 % den != 0) {
        std::ostringstream os;
        os << "cannot fold constant phase " << num << "*pi/" << den;
        throw UnfoldableConstant(os.str());
    }
    long long k = (num * (12 / den)).convert_to<long long>();  // in (-12, 12]
    if (kind == TrigKind::Cos) k = 6 - k;                      // cos t = sin(pi/2 - t)
    // sin is odd and 2*pi periodic; map k into [0, 6].
    bool neg = false;
    if (k < 0) { k = -k; neg = !neg; }          // k in [0, 18]
    if (k > 12) { k = k - 12; neg = !neg; }     // sin(t - pi) = -sin(pi - t)... k now in [0,12]
    if (k > 6) k = 12 - k;                      // sin(pi - t) = sin t
    SurdScalar v = kSinTable[k];
    return neg ? -v : v;
}

// One sin/cos power. Canonical factors always have x_coef >= 1.
struct Factor {
    TrigKind kind = TrigKind::Sin;
    Angle angle;
    std::uint32_t exponent = 1;

    bool same_base(const Factor& o) const {
        return kind == o.kind && angle == o.angle;
    }
    bool operator==(const Factor& o) const { return same_base(o) && exponent == o.exponent; }

    // Base order: sin before cos, then x coefficient, then phase.
    int compare_base(const Factor& o) const {
        if (kind != o.kind) return kind == TrigKind::Sin ? -1 : 1;
        if (angle.x_coef != o.angle.x_coef) return angle.x_coef < o.angle.x_coef ? -1 : 1;
        if (angle.phase != o.angle.phase) return angle.phase < o.angle.phase ? -1 : 1;
        return 0;
    }
    int compare(const Factor& o) const {
        if (int c = compare_base(o)) return c;
        if (exponent != o.exponent) return exponent < o.exponent ? -1 : 1;
        return 0;
    }
};

struct Term {
    SurdScalar coef;
    std::vector<Factor> factors;  // strictly increasing in base order

    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (const auto& f : factors) d += f.exponent;
        return d;
    }
    bool is_constant() const { return factors.empty(); }
    bool same_factors(const Term& o) const {
        return factors.size() == o.factors.size() &&
               std::equal(factors.begin(), factors.end(), o.factors.begin());
    }
    bool operator==(const Term& o) const { return coef == o.coef && same_factors(o); }

    // Default term order: descending degree, then factor list, then coefficient.
    int compare(const Term& o) const {
        const std::uint32_t da = degree(), db = o.degree();
        if (da != db) return da > db ? -1 : 1;
        const std::size_t n = std::min(factors.size(), o.factors.size());
        for (std::size_t i = 0; i < n; ++i)
            if (int c = factors[i].compare(o.factors[i])) return c;
        if (factors.size() != o.factors.size())
            return factors.size() < o.factors.size() ? -1 : 1;
        return coef.compare(o.coef);
    }
};

struct Expression {
    std::vector<Term> terms;  // explicit order; empty list is the zero expression

    bool is_zero() const { return terms.empty(); }
    std::size_t n_terms() const { return terms.size(); }
    bool operator==(const Expression& o) const { return terms == o.terms; }

    std::uint32_t max_degree() const {
        std::uint32_t d = 0;
        for (const auto& t : terms) d = std::max(d, t.degree());
        return d;
    }
};

// ---------------------------------------------------------------------------
// Term construction

// Accumulates factor powers and scalar folds while building a term.
class TermBuilder {
public:
    explicit TermBuilder(SurdScalar coef = SurdScalar::one()) : coef_(std::move(coef)) {}

    void multiply_scalar(const SurdScalar& s) { coef_ *= s; }

    // Multiply by trig(angle)^exponent, folding constants and flipping
    // negative arguments by parity: sin(-t) = -sin t, cos(-t) = cos t.
    void multiply_power(TrigKind kind, Angle angle, std::uint32_t exponent) {
        if (exponent == 0) return;
        angle.phase = normalize_phase(angle.phase);
        if (angle.x_coef == 0) {
            SurdScalar v = fold_constant(kind, angle.phase);
            for (std::uint32_t i = 0; i < exponent; ++i) coef_ *= v;
            return;
        }
        if (angle.x_coef < 0) {
            angle.x_coef = -angle.x_coef;
            angle.phase = normalize_phase(-angle.phase);
            if (kind == TrigKind::Sin && exponent % 2 == 1) coef_ = -coef_;
        }
        for (auto& f : factors_) {
            if (f.kind == kind && f.angle == angle) {
                f.exponent += exponent;
                return;
            }
        }
        factors_.push_back(Factor{kind, std::move(angle), exponent});
    }

    void multiply_term(const Term& t) {
        coef_ *= t.coef;
        for (const auto& f : t.factors) multiply_power(f.kind, f.angle, f.exponent);
    }

    // Finished canonical term; zero coefficient yields an empty optional-like
    // zero term (coef 0, no factors).
    Term build() && {
        Term t;
        if (coef_.is_zero()) return t;  // zero term
        t.coef = std::move(coef_);
        std::sort(factors_.begin(), factors_.end(),
                  [](const Factor& a, const Factor& b) { return a.compare_base(b) < 0; });
        t.factors = std::move(factors_);
        return t;
    }

private:
    SurdScalar coef_;
    std::vector<Factor> factors_;
};

// ---------------------------------------------------------------------------
// Canonicalization

// Merge like terms, drop zeros, and sort into the default order.
inline Expression canonicalize(const Expression& e) {
    std::vector<Term> canon;
    canon.reserve(e.terms.size());
    for (const auto& raw : e.terms) {
        TermBuilder b(raw.coef);
        for (const auto& f : raw.factors) b.multiply_power(f.kind, f.angle, f.exponent);
        Term t = std::move(b).build();
        if (t.coef.is_zero()) continue;
        bool merged = false;
        for (auto& existing : canon) {
            if (existing.same_factors(t)) {
                existing.coef += t.coef;
                merged = true;
                break;
            }
        }
        if (!merged) canon.push_back(std::move(t));
    }
    std::erase_if(canon, [](const Term& t) { return t.coef.is_zero(); });
    std::sort(canon.begin(), canon.end(),
              [](const Term& a, const Term& b) { return a.compare(b) < 0; });
    return Expression{std::move(canon)};
}

// Equality modulo term order (both sides brought to canonical order).
inline bool equivalent(const Expression& a, const Expression& b) {
    return canonicalize(a) == canonicalize(b);
}

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline void append_phase(std::string& out, const Rational& phase) {
    const BigInt num = numerator(phase), den = denominator(phase);
    const BigInt mag = num < 0 ? BigInt(-num) : num;
    out += (num < 0) ? " - " : " + ";
    if (mag != 1) {
        out += mag.str();
        out += "*pi";
    } else {
        out += "pi";
    }
    if (den != 1) {
        out += '/';
        out += den.str();
    }
}

inline void append_factor(std::string& out, const Factor& f) {
    out += (f.kind == TrigKind::Sin) ? "sin(" : "cos(";
    if (f.angle.x_coef != 1) {
        out += std::to_string(f.angle.x_coef);
        out += '*';
    }
    out += 'x';
    if (f.angle.phase != 0) append_phase(out, f.angle.phase);
    out += ')';
    if (f.exponent > 1) {
        out += "**";
        out += std::to_string(f.exponent);
    }
}

struct CoefParts {
    bool negative = false;
    std::string numerator;  // "", "2", "sqrt(3)", "3*sqrt(2)", "(1 + sqrt(2))"
    BigInt denominator{1};
};

inline CoefParts split_coefficient(const SurdScalar& c) {
    CoefParts parts;
    const Rational comps[4] = {c.c1, c.c2, c.c3, c.c6};
    BigInt common_den = 1;
    for (const auto& q : comps) common_den = lcm(common_den, denominator(q));
    BigInt nums[4];
    int n_nonzero = 0, first = -1;
    for (int i = 0; i < 4; ++i) {
        nums[i] = numerator(comps[i]) * (common_den / denominator(comps[i]));
        if (nums[i] != 0) {
            ++n_nonzero;
            if (first < 0) first = i;
        }
    }
    parts.denominator = common_den;
    if (n_nonzero == 0) return parts;  // caller never prints a zero coefficient
    if (nums[first] < 0) {
        parts.negative = true;
        for (auto& n : nums) n = -n;
    }
    static const char* kRadicals[4] = {nullptr, "sqrt(2)", "sqrt(3)", "sqrt(6)"};
    auto atom = [&](int i) {
        std::string s;
        const BigInt mag = nums[i] < 0 ? BigInt(-nums[i]) : nums[i];
        if (i == 0) return mag.str();
        if (mag != 1) {
            s += mag.str();
            s += '*';
        }
        s += kRadicals[i];
        return s;
    };
    if (n_nonzero == 1) {
        if (first == 0 && nums[0] == 1) {
            parts.numerator.clear();  // implicit 1
        } else {
            parts.numerator = atom(first);
        }
        return parts;
    }
    std::string s = "(";
    bool emitted = false;
    for (int i = 0; i < 4; ++i) {
        if (nums[i] == 0) continue;
        if (emitted) s += (nums[i] < 0) ? " - " : " + ";
        s += atom(i);
        emitted = true;
    }
    s += ')';
    parts.numerator = std::move(s);
    return parts;
}

inline std::string print_term_magnitude(const Term& t, bool* negative) {
    CoefParts parts = split_coefficient(t.coef);
    *negative = parts.negative;
    std::string out;
    if (t.factors.empty()) {
        out = parts.numerator.empty() ? "1" : parts.numerator;
    } else {
        if (!parts.numerator.empty()) {
            out = parts.numerator;
            out += '*';
        }
        bool first = true;
        for (const auto& f : t.factors) {
            if (!first) out += '*';
            append_factor(out, f);
            first = false;
        }
    }
    if (parts.denominator != 1) {
        out += '/';
        out += parts.denominator.str();
    }
    return out;
}

}  // namespace detail

// Deterministic printed form; pad_to appends "+ 0" until that many terms
// are printed (the zero expression counts as one printed term).
inline std::string print(const Expression& e, std::size_t pad_to = 0) {
    std::string out;
    std::size_t printed = 0;
    if (e.terms.empty()) {
        out = "0";
        printed = 1;
    } else {
        for (std::size_t i = 0; i < e.terms.size(); ++i) {
            bool neg = false;
            std::string mag = detail::print_term_magnitude(e.terms[i], &neg);
            if (i == 0) {
                if (neg) out += '-';
            } else {
                out += neg ? " - " : " + ";
            }
            out += mag;
            ++printed;
        }
    }
    for (; printed < pad_to; ++printed) out += " + 0";
    return out;
}

// ---------------------------------------------------------------------------
// Numeric evaluation (soundness oracle only; never used for zero tests)

inline double eval_numeric(const Term& t, double x) {
    double v = t.coef.to_double();
    for (const auto& f : t.factors) {
        const double arg =
            static_cast<double>(f.angle.x_coef) * x + to_double(f.angle.phase) * M_PI;
        const double base = (f.kind == TrigKind::Sin) ? std::sin(arg) : std::cos(arg);
        for (std::uint32_t i = 0; i < f.exponent; ++i) v *= base;
    }
    return v;
}

inline double eval_numeric(const Expression& e, double x) {
    double v = 0;
    for (const auto& t : e.terms) v += eval_numeric(t, x);
    return v;
}

// ---------------------------------------------------------------------------
// Misc expression operations

// Divide out the largest factor multiset common to all terms
// (componentwise minimum of exponents). Coefficients are untouched.
inline Expression remove_common_factors(const Expression& e) {
    if (e.terms.empty()) return e;
    std::vector<Factor> common = e.terms.front().factors;
    for (std::size_t i = 1; i < e.terms.size() && !common.empty(); ++i) {
        std::vector<Factor> next;
        for (const auto& c : common) {
            for (const auto& f : e.terms[i].factors) {
                if (f.same_base(c)) {
                    Factor kept = c;
                    kept.exponent = std::min(c.exponent, f.exponent);
                    next.push_back(kept);
                    break;
                }
            }
        }
        common = std::move(next);
    }
    if (common.empty()) return e;
    Expression out = e;
    for (auto& t : out.terms) {
        std::vector<Factor> reduced;
        for (const auto& f : t.factors) {
            std::uint32_t drop = 0;
            for (const auto& c : common)
                if (c.same_base(f)) drop = c.exponent;
            if (f.exponent > drop) {
                Factor kept = f;
                kept.exponent -= drop;
                reduced.push_back(kept);
            }
        }
        t.factors = std::move(reduced);
    }
    return canonicalize(out);
}

// Substitute x <- a*x + b (b a rational multiple of pi): every factor
// trig(c*x + d) becomes trig(c*a*x + (d + c*b)). Returns nullopt when a
// resulting phase leaves the foldable alphabet (denominator dividing 12),
// since rule application could then hit unfoldable constants.
inline std::optional<Expression> substitute_linear(const Expression& e, std::int64_t a,
                                                   const Rational& b) {
    if (a == 0) return std::nullopt;
    Expression out;
    out.terms.reserve(e.terms.size());
    for (const auto& t : e.terms) {
        TermBuilder builder(t.coef);
        for (const auto& f : t.factors) {
            const Rational new_phase =
                normalize_phase(f.angle.phase + Rational(f.angle.x_coef) * b);
            if (12 % denominator(new_phase) != 0) return std::nullopt;
            builder.multiply_power(f.kind, Angle{f.angle.x_coef * a, new_phase}, f.exponent);
        }
        out.terms.push_back(std::move(builder).build());
    }
    return canonicalize(out);
}

// Permute the explicit term order; returns p with p[old_index] = new_index.
inline std::pair<Expression, std::vector<std::size_t>> shuffle_terms(const Expression& e,
                                                                     Rng& rng) {
    std::vector<std::size_t> p = rng.permutation(e.terms.size());
    Expression out;
    out.terms.resize(e.terms.size());
    for (std::size_t i = 0; i < e.terms.size(); ++i) out.terms[p[i]] = e.terms[i];
    return {std::move(out), std::move(p)};
}

}  // namespace trigprove
