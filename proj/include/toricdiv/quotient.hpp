#pragma once

#include "toricdiv/fan.hpp"

#include <string>
#include <vector>

namespace toricdiv {

/// The cyclic quotient C^n / Z_r acting with weights (w_1, ..., w_n).
struct CyclicQuotientType {
    long long order = 1;
    std::vector<long long> weights;  ///< residues in [0, order)
    bool normalized = false;

    /// Reduces the weights mod r. Throws unless r >= 1 and gcd(r, weights) = 1 for r > 1.
    static CyclicQuotientType make(long long r, std::vector<long long> weights);

    /// Parses "1/r(w1,...,wn)"; negative weights are reduced mod r.
    static CyclicQuotientType parse(const std::string& text);

    /// Lexicographically least representative over unit multiples and permutations.
    CyclicQuotientType normalize() const;

    std::string str() const;

    friend bool operator==(const CyclicQuotientType& a, const CyclicQuotientType& b) {
        return a.order == b.order && a.weights == b.weights;
    }
    friend auto operator<=>(const CyclicQuotientType& a, const CyclicQuotientType& b) {
        if (auto c = a.order <=> b.order; c != 0) return c;
        return a.weights <=> b.weights;
    }
};

enum class SingularityClass { Smooth, Terminal, CanonicalNotTerminal, NotCanonical };

std::string to_string(SingularityClass c);

/// r * age(k) for k = 1 .. r-1.
std::vector<long long> age_numerators(const CyclicQuotientType& t);

/// age(k) for k = 1 .. r-1.
std::vector<Rational> ages(const CyclicQuotientType& t);

SingularityClass reid_tai_classify(const CyclicQuotientType& t);

/// The chart of a simplicial full-dimensional cone as a cyclic quotient.
/// Throws for degenerate cones and for non-cyclic quotient groups.
CyclicQuotientType cone_to_quotient(const Cone& cone);

/// Normalized form of 1/r(1,-q,q).
CyclicQuotientType standard_terminal_type(long long r, long long q);

struct TerminalLemmaReport {
    struct OrderEntry {
        long long order;
        std::vector<CyclicQuotientType> terminal_types;  ///< normalized, sorted
        std::vector<CyclicQuotientType> expected;        ///< normalized 1/r(1,-q,q), sorted
    };
    long long r_max = 0;
    long long types_checked = 0;
    std::vector<OrderEntry> orders;
    std::vector<CyclicQuotientType> counterexamples;  ///< sorted

    bool ok() const { return counterexamples.empty(); }
};

/// Exhaustive check over 2 <= r <= r_max of: terminal iff 1/r(1,-q,q) up to normalization.
/// workers = 0 uses the hardware concurrency.
TerminalLemmaReport verify_terminal_lemma(long long r_max, unsigned workers = 0);

}  // namespace toricdiv
