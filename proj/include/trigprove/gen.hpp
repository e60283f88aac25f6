#pragma once

// Bottom-up identity synthesis: build a random sum E0, rewrite it t times
// into an equivalent Et by sound transforms, emit Et - E0 = 0, strip
// common factors, then filter out trivial or oversized results.

#include "trigprove/expr.hpp"
#include "trigprove/rng.hpp"
#include "trigprove/rules.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

namespace trigprove {

struct GeneratorConfig {
    std::vector<int> n_choices{1, 2, 3, 4};
    std::vector<std::int64_t> a_choices{0, 1, 2, 3, 4, 5, 6};
    std::vector<Rational> b_choices{Rational(0),  Rational(1, 2), Rational(-1, 2),
                                    Rational(1, 3), Rational(-1, 3), Rational(1, 4),
                                    Rational(-1, 4), Rational(1, 6), Rational(-1, 6)};
    std::vector<int> c_choices{0, 1, -1, 2, -2, 3, -3, 4, -4};
    std::vector<int> m_choices{1, 2, 3};
    std::vector<int> t_choices{2, 3, 4, 5, 6};
    std::vector<std::int64_t> split_a_choices{0, 1, 2, 3, 4, 5, 6};
    std::vector<Rational> split_b_choices{Rational(0),  Rational(1, 2), Rational(-1, 2),
                                          Rational(1, 3), Rational(-1, 3), Rational(1, 4),
                                          Rational(-1, 4), Rational(1, 6), Rational(-1, 6)};
    std::size_t max_terms = 8;
    std::uint32_t max_degree = 4;
};

struct IdentityRecord {
    std::uint64_t id = 0;
    std::uint64_t seed = 0;
    Expression identity;
    std::vector<std::string> trace;  // generation provenance, not a proof
};

// One random product term C * prod trig_i(A_i x + B_i). Constant elements
// (A = 0) fold into the coefficient; the zero coefficient draw is redrawn,
// but a term can still collapse to zero through a sin(0) element.
inline Term random_term(Rng& rng, const GeneratorConfig& cfg) {
    int c = 0;
    do {
        c = rng.pick(cfg.c_choices);
    } while (c == 0);
    TermBuilder b(SurdScalar(Rational(c)));
    const int n = rng.pick(cfg.n_choices);
    for (int i = 0; i < n; ++i) {
        const TrigKind kind = rng.uniform(2) == 0 ? TrigKind::Sin : TrigKind::Cos;
        const std::int64_t a = rng.pick(cfg.a_choices);
        const Rational phase = rng.pick(cfg.b_choices);
        b.multiply_power(kind, Angle{a, phase}, 1);
    }
    return std::move(b).build();
}

// Apply one random sound transform (product-to-sum on a factor pair, or
// an angle split trig(Ax+B) -> trig(((A-a)x+(B-b)) + (ax+b))). Degenerate
// draws are retried; after 20 failed attempts the input is returned.
inline Expression random_transform(Rng& rng, const Expression& e, const GeneratorConfig& cfg,
                                   std::string* description = nullptr) {
    const Expression canon_input = canonicalize(e);
    for (int attempt = 0; attempt < 20; ++attempt) {
        struct PairSite { std::size_t term, j, k; };
        struct SingleSite { std::size_t term, j; };
        std::vector<PairSite> pair_sites;
        std::vector<SingleSite> single_sites;
        for (std::size_t ti = 0; ti < e.terms.size(); ++ti) {
            const auto& fs = e.terms[ti].factors;
            for (std::size_t j = 0; j < fs.size(); ++j) {
                single_sites.push_back({ti, j});
                if (fs[j].exponent >= 2) pair_sites.push_back({ti, j, j});
                for (std::size_t k = 0; k < j; ++k) pair_sites.push_back({ti, j, k});
            }
        }
        if (pair_sites.empty() && single_sites.empty()) return e;

        const bool use_pair =
            !pair_sites.empty() && (single_sites.empty() || rng.uniform(2) == 0);
        Expression result;
        std::string desc;
        if (use_pair) {
            const PairSite site = pair_sites[rng.uniform(pair_sites.size())];
            result = splice_term(e, site.term,
                                 product_to_sum(e.terms[site.term], site.j, site.k));
            desc = "P term=" + std::to_string(site.term) + " j=" + std::to_string(site.j) +
                   " k=" + std::to_string(site.k);
        } else {
            const SingleSite site = single_sites[rng.uniform(single_sites.size())];
            const Factor& f = e.terms[site.term].factors[site.j];
            const std::int64_t a = rng.pick(cfg.split_a_choices);
            const Rational b = rng.pick(cfg.split_b_choices);
            if (a == 0 && b == 0) continue;
            if (a == f.angle.x_coef && b == f.angle.phase) continue;
            const Angle alpha{f.angle.x_coef - a, f.angle.phase - b};
            const Angle beta{a, b};
            try {
                result = splice_term(e, site.term,
                                     angle_split(e.terms[site.term], site.j, alpha, beta));
            } catch (const UnfoldableConstant&) {
                continue;
            }
            std::ostringstream os;
            os << "A term=" << site.term << " j=" << site.j << " a=" << a << " b="
               << numerator(b) << "/" << denominator(b) << "*pi";
            desc = os.str();
        }
        if (result == canon_input) continue;
        if (description) *description = desc;
        return result;
    }
    return e;
}

// One synthesis attempt; nullopt is a normal rejection (trivial result,
// too many terms, or degree above the action space).
inline std::optional<IdentityRecord> generate_identity(Rng& rng, const GeneratorConfig& cfg) {
    const int m = rng.pick(cfg.m_choices);
    Expression e0;
    for (int i = 0; i < m; ++i) {
        Term t;
        for (int attempt = 0; attempt < 20; ++attempt) {
            t = random_term(rng, cfg);
            if (!t.coef.is_zero()) break;
        }
        if (!t.coef.is_zero()) e0.terms.push_back(std::move(t));
    }
    e0 = canonicalize(e0);
    if (e0.is_zero()) return std::nullopt;

    IdentityRecord rec;
    const int t_steps = rng.pick(cfg.t_choices);
    Expression e = e0;
    for (int s = 0; s < t_steps; ++s) {
        std::string desc;
        e = random_transform(rng, e, cfg, &desc);
        if (!desc.empty()) rec.trace.push_back(desc);
    }

    Expression diff = e;
    for (const auto& t : e0.terms) {
        Term negated = t;
        negated.coef = -negated.coef;
        diff.terms.push_back(std::move(negated));
    }
    diff = canonicalize(diff);
    if (diff.is_zero()) return std::nullopt;
    diff = remove_common_factors(diff);
    if (diff.n_terms() > cfg.max_terms) return std::nullopt;
    for (const auto& t : diff.terms)
        if (t.degree() > cfg.max_degree) return std::nullopt;
    rec.identity = std::move(diff);
    return rec;
}

// Deterministic corpus: sub-seed per attempt index, duplicates removed on
// canonical form, generation continues past rejections until `count`.
inline std::vector<IdentityRecord> generate_corpus(std::size_t count, std::uint64_t seed,
                                                   const GeneratorConfig& cfg) {
    std::vector<IdentityRecord> out;
    std::unordered_set<std::string> seen;
    out.reserve(count);
    std::uint64_t index = 0;
    const std::uint64_t attempt_cap = count * 1000 + 100000;
    while (out.size() < count) {
        if (index > attempt_cap)
            throw std::runtime_error("identity generation is not converging; check config");
        const std::uint64_t sub_seed = derive_seed(seed, index++);
        Rng rng(sub_seed);
        auto rec = generate_identity(rng, cfg);
        if (!rec) continue;
        if (!seen.insert(print(rec->identity)).second) continue;
        rec->seed = sub_seed;
        rec->id = out.size();
        out.push_back(std::move(*rec));
    }
    return out;
}

}  // namespace trigprove
