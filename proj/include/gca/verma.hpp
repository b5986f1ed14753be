#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gca/algebra.hpp"
#include "gca/rational.hpp"
#include "gca/weight_poly.hpp"

namespace gca {

// Ordered product of lowering generators applied to the vacuum. Factors are
// sorted ascending by (family, mode), which puts larger |mode| first within
// a family; the empty product is the vacuum.
class PBWMonomial {
  public:
    PBWMonomial() = default;
    explicit PBWMonomial(std::vector<GenLabel> factors);

    static const PBWMonomial& vacuum();

    const std::vector<GenLabel>& factors() const { return factors_; }
    bool is_vacuum() const { return factors_.empty(); }
    int level() const;

    // "L[-2]*L[-1]" ; the vacuum renders as "1".
    std::string str() const;

    auto operator<=>(const PBWMonomial&) const = default;

  private:
    std::vector<GenLabel> factors_;
};

// All canonical monomials of the given level in deterministic order
// (lexicographic in the factor sequence). The count is the coefficient of
// q^level in prod_{k>=1} (1-q^k)^{-4}.
std::vector<PBWMonomial> pbw_basis(int level);

// Graded vector with coefficients in Coeff (WeightPolynomial for the
// symbolic module, Rational for a module evaluated at a weight point).
template <class Coeff>
using VermaVector = std::map<PBWMonomial, Coeff>;

template <class Coeff>
struct HighestWeight {
    Coeff h, mu, rho1, rho2, alpha, beta;

    const Coeff& value_for(const GenLabel& g) const {
        switch (g.family) {
            case Family::L: return h;
            case Family::J: return mu;
            case Family::P1: return rho1;
            case Family::P2: return rho2;
            case Family::Ca: return alpha;
            case Family::Cb: return beta;
        }
        throw std::logic_error("highest weight: bad label");
    }
};

inline HighestWeight<WeightPolynomial> symbolic_weights() {
    return {WeightPolynomial::symbol(WeightSymbol::h),
            WeightPolynomial::symbol(WeightSymbol::mu),
            WeightPolynomial::symbol(WeightSymbol::rho1),
            WeightPolynomial::symbol(WeightSymbol::rho2),
            WeightPolynomial::symbol(WeightSymbol::alpha),
            WeightPolynomial::symbol(WeightSymbol::beta)};
}

inline HighestWeight<Rational> weights_at(const WeightPoint& p) {
    return {p[0], p[1], p[2], p[3], p[4], p[5]};
}

// Verma module V^chi over the coefficient ring Coeff. Carries the
// highest-weight assignment and a memo cache of single-generator actions;
// instances are not safe for concurrent use, give each worker its own.
template <class Coeff>
class VermaModule {
  public:
    explicit VermaModule(HighestWeight<Coeff> weights) : weights_(std::move(weights)) {}

    // Normal-orders g applied to m|0>. Positive modes annihilate the
    // vacuum, zero modes and central labels evaluate to their weights.
    const VermaVector<Coeff>& apply(const GenLabel& g, const PBWMonomial& m);

    VermaVector<Coeff> apply(const GenLabel& g, const VermaVector<Coeff>& v);
    VermaVector<Coeff> act(const AlgebraElement& x, const VermaVector<Coeff>& v);

    // <u|v> = <0| omega(u) v |0>, zero when levels differ.
    Coeff inner(const PBWMonomial& u, const PBWMonomial& v);
    Coeff inner(const VermaVector<Coeff>& u, const VermaVector<Coeff>& v);

    // Full Gram matrix of the level's canonical basis; every entry is
    // computed independently (no symmetry shortcut).
    std::vector<std::vector<Coeff>> gram(int level);

  private:
    struct CacheKey {
        GenLabel g;
        PBWMonomial m;
        bool operator==(const CacheKey&) const = default;
    };
    struct CacheKeyHash {
        std::size_t operator()(const CacheKey& k) const {
            std::uint64_t h = 1469598103934665603ull;
            auto mix = [&h](std::uint64_t v) {
                h ^= v;
                h *= 1099511628211ull;
            };
            mix(static_cast<std::uint64_t>(k.g.family) * 131 + static_cast<std::uint64_t>(
                static_cast<std::int64_t>(k.g.mode) + (1ll << 32)));
            for (const auto& f : k.m.factors()) {
                mix(static_cast<std::uint64_t>(f.family));
                mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(f.mode) + (1ll << 32)));
            }
            return static_cast<std::size_t>(h);
        }
    };

    static void accumulate(VermaVector<Coeff>& v, const PBWMonomial& m, const Coeff& c) {
        if (c == Coeff(0)) return;
        auto [it, inserted] = v.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == Coeff(0)) v.erase(it);
        }
    }

    HighestWeight<Coeff> weights_;
    std::unordered_map<CacheKey, VermaVector<Coeff>, CacheKeyHash> cache_;
};

// --- implementation ---

template <class Coeff>
const VermaVector<Coeff>& VermaModule<Coeff>::apply(const GenLabel& g, const PBWMonomial& m) {
    const CacheKey key{g, m};
    auto hit = cache_.find(key);
    if (hit != cache_.end()) return hit->second;

    VermaVector<Coeff> out;
    if (g.central()) {
        accumulate(out, m, weights_.value_for(g));
    } else if (m.is_vacuum()) {
        if (g.mode < 0) {
            accumulate(out, PBWMonomial({g}), Coeff(1));
        } else if (g.mode == 0) {
            accumulate(out, m, weights_.value_for(g));
        }
        // positive modes annihilate the vacuum
    } else {
        const GenLabel front = m.factors().front();
        if (g.mode < 0 && g <= front) {
            std::vector<GenLabel> widened;
            widened.reserve(m.factors().size() + 1);
            widened.push_back(g);
            widened.insert(widened.end(), m.factors().begin(), m.factors().end());
            accumulate(out, PBWMonomial(std::move(widened)), Coeff(1));
        } else {
            const PBWMonomial rest(
                std::vector<GenLabel>(m.factors().begin() + 1, m.factors().end()));
            // g X rest = X (g rest) + [g, X] rest
            VermaVector<Coeff> tail = apply(g, rest);
            for (const auto& [mono, c] : tail) {
                const VermaVector<Coeff>& shifted = apply(front, mono);
                for (const auto& [m2, c2] : shifted) accumulate(out, m2, c * c2);
            }
            const AlgebraElement br = bracket(g, front);
            for (const auto& [label, rc] : br.terms()) {
                const VermaVector<Coeff>& acted = apply(label, rest);
                for (const auto& [m2, c2] : acted) accumulate(out, m2, c2 * Coeff(rc));
            }
        }
    }

    auto [it, inserted] = cache_.emplace(key, std::move(out));
    (void)inserted;
    return it->second;
}

template <class Coeff>
VermaVector<Coeff> VermaModule<Coeff>::apply(const GenLabel& g, const VermaVector<Coeff>& v) {
    VermaVector<Coeff> out;
    for (const auto& [mono, c] : v) {
        const VermaVector<Coeff>& applied = apply(g, mono);
        for (const auto& [m2, c2] : applied) accumulate(out, m2, c * c2);
    }
    return out;
}

template <class Coeff>
VermaVector<Coeff> VermaModule<Coeff>::act(const AlgebraElement& x, const VermaVector<Coeff>& v) {
    VermaVector<Coeff> out;
    for (const auto& [label, rc] : x.terms()) {
        VermaVector<Coeff> part = apply(label, v);
        for (const auto& [m2, c2] : part) accumulate(out, m2, c2 * Coeff(rc));
    }
    return out;
}

template <class Coeff>
Coeff VermaModule<Coeff>::inner(const PBWMonomial& u, const PBWMonomial& v) {
    if (u.level() != v.level()) return Coeff(0);
    // <0| omega(f1)...omega(fk) applied right-to-left, i.e. omega(f1) first.
    VermaVector<Coeff> w;
    accumulate(w, v, Coeff(1));
    for (const GenLabel& f : u.factors()) {
        if (w.empty()) break;
        w = apply(omega(f), w);
    }
    auto it = w.find(PBWMonomial::vacuum());
    return it == w.end() ? Coeff(0) : it->second;
}

template <class Coeff>
Coeff VermaModule<Coeff>::inner(const VermaVector<Coeff>& u, const VermaVector<Coeff>& v) {
    Coeff sum(0);
    for (const auto& [mu, cu] : u) {
        for (const auto& [mv, cv] : v) sum += cu * cv * inner(mu, mv);
    }
    return sum;
}

template <class Coeff>
std::vector<std::vector<Coeff>> VermaModule<Coeff>::gram(int level) {
    const std::vector<PBWMonomial> basis = pbw_basis(level);
    std::vector<std::vector<Coeff>> entries(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        entries[i].reserve(basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            entries[i].push_back(inner(basis[i], basis[j]));
        }
    }
    return entries;
}

}  // namespace gca
