#include "toricdiv/quotient.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace toricdiv {

namespace {

long long mod(long long a, long long r) {
    long long m = a % r;
    return m < 0 ? m + r : m;
}

long long to_ll(const Integer& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw Error("value " + v.str() + " does not fit in 64 bits");
    return static_cast<long long>(v);
}

}  // namespace

CyclicQuotientType CyclicQuotientType::make(long long r, std::vector<long long> weights) {
    if (r < 1) throw Error("quotient order must be positive");
    if (weights.empty()) throw Error("quotient type needs at least one weight");
    long long g = r;
    for (auto& w : weights) {
        w = mod(w, r);
        g = std::gcd(g, w);
    }
    if (r > 1 && g != 1)
        throw Error("weights of 1/" + std::to_string(r) + "(...) share a factor with the order");
    return {r, std::move(weights), false};
}

CyclicQuotientType CyclicQuotientType::parse(const std::string& text) {
    auto bad = [&] { return Error("cannot parse quotient type '" + text + "' (expected 1/r(w1,...,wn))"); };
    if (text.rfind("1/", 0) != 0) throw bad();
    auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')') throw bad();
    try {
        std::size_t used = 0;
        std::string rs = text.substr(2, open - 2);
        long long r = std::stoll(rs, &used);
        if (used != rs.size()) throw bad();
        std::vector<long long> ws;
        std::string body = text.substr(open + 1, text.size() - open - 2);
        std::size_t pos = 0;
        while (true) {
            auto comma = body.find(',', pos);
            std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            ws.push_back(std::stoll(item, &used));
            if (used != item.size()) throw bad();
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return make(r, std::move(ws));
    } catch (const std::logic_error&) {
        throw bad();
    }
}

CyclicQuotientType CyclicQuotientType::normalize() const {
    CyclicQuotientType best = *this;
    std::sort(best.weights.begin(), best.weights.end());
    if (order == 1) {
        std::fill(best.weights.begin(), best.weights.end(), 0);
    } else {
        std::vector<long long> cand(weights.size());
        for (long long u = 1; u < order; ++u) {
            if (std::gcd(u, order) != 1) continue;
            for (std::size_t i = 0; i < weights.size(); ++i) cand[i] = (u * weights[i]) % order;
            std::sort(cand.begin(), cand.end());
            if (cand < best.weights) best.weights = cand;
        }
    }
    best.normalized = true;
    return best;
}

std::string CyclicQuotientType::str() const {
    std::string s = "1/" + std::to_string(order) + "(";
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(weights[i]);
    }
    return s + ")";
}

std::string to_string(SingularityClass c) {
    switch (c) {
        case SingularityClass::Smooth: return "Smooth";
        case SingularityClass::Terminal: return "Terminal";
        case SingularityClass::CanonicalNotTerminal: return "CanonicalNotTerminal";
        case SingularityClass::NotCanonical: return "NotCanonical";
    }
    return "?";
}

std::vector<long long> age_numerators(const CyclicQuotientType& t) {
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(t.order > 0 ? t.order - 1 : 0));
    for (long long k = 1; k < t.order; ++k) {
        long long s = 0;
        for (long long w : t.weights) s += (k * w) % t.order;
        out.push_back(s);
    }
    return out;
}

std::vector<Rational> ages(const CyclicQuotientType& t) {
    std::vector<Rational> out;
    for (long long n : age_numerators(t)) out.emplace_back(Integer(n), Integer(t.order));
    return out;
}

SingularityClass reid_tai_classify(const CyclicQuotientType& t) {
    if (t.order == 1) return SingularityClass::Smooth;
    bool tight = false;
    for (long long k = 1; k < t.order; ++k) {
        long long s = 0;
        for (long long w : t.weights) s += (k * w) % t.order;
        if (s < t.order) return SingularityClass::NotCanonical;
        if (s == t.order) tight = true;
    }
    return tight ? SingularityClass::CanonicalNotTerminal : SingularityClass::Terminal;
}

CyclicQuotientType cone_to_quotient(const Cone& cone) {
    const std::size_t n = cone.rank();
    if (n == 0 || !cone.simplicial()) throw Error("cone_to_quotient needs a simplicial full-dimensional cone");
    IntegerMatrix g = cone.matrix();
    Integer det = determinant(g);
    if (det == 0) throw Error("degenerate cone");
    long long r = to_ll(det < 0 ? Integer(-det) : det);
    if (r == 1) return CyclicQuotientType::make(1, std::vector<long long>(n, 0));

    SmithForm snf = smith_normal_form(g);
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (snf.diagonal[i] != 1) throw Error("quotient group of the cone is not cyclic");
    IntegerMatrix rinv = unimodular_inverse(snf.right);
    LatticeVector gen = rinv.row(n - 1);
    RationalVector c = solve_row_combination(g, gen);
    std::vector<long long> ws;
    for (const auto& ci : c) {
        Rational scaled = ci * Rational(r);
        if (!scaled.is_integer()) throw Error("internal: generator coefficients not in (1/r)Z");
        ws.push_back(mod(to_ll(scaled.num() % r), r));
    }
    return CyclicQuotientType::make(r, std::move(ws));
}

CyclicQuotientType standard_terminal_type(long long r, long long q) {
    return CyclicQuotientType::make(r, {1, -q, q}).normalize();
}

TerminalLemmaReport verify_terminal_lemma(long long r_max, unsigned workers) {
    if (r_max < 2) throw Error("r_max must be at least 2");
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

    TerminalLemmaReport report;
    report.r_max = r_max;
    report.orders.resize(static_cast<std::size_t>(r_max - 1));
    std::atomic<long long> next{2};
    std::atomic<long long> checked{0};
    std::mutex mu;

    auto work = [&] {
        for (long long r = next++; r <= r_max; r = next++) {
            TerminalLemmaReport::OrderEntry entry{r, {}, {}};
            std::set<CyclicQuotientType> expected;
            for (long long q = 1; q < r; ++q)
                if (std::gcd(q, r) == 1) expected.insert(standard_terminal_type(r, q));
            std::set<CyclicQuotientType> found;
            std::vector<CyclicQuotientType> bad;
            long long count = 0;
            // classification is permutation invariant, so sorted triples suffice
            for (long long a = 0; a < r; ++a)
                for (long long b = a; b < r; ++b)
                    for (long long c = b; c < r; ++c) {
                        if (std::gcd(std::gcd(a, b), std::gcd(c, r)) != 1) continue;
                        ++count;
                        CyclicQuotientType t{r, {a, b, c}, false};
                        bool term = reid_tai_classify(t) == SingularityClass::Terminal;
                        if (!term) {
                            if (expected.count(t)) bad.push_back(t);
                            continue;
                        }
                        auto nt = t.normalize();
                        found.insert(nt);
                        if (!expected.count(nt)) bad.push_back(nt);
                    }
            for (const auto& e : expected)
                if (!found.count(e)) bad.push_back(e);
            entry.terminal_types.assign(found.begin(), found.end());
            entry.expected.assign(expected.begin(), expected.end());
            checked += count;
            std::lock_guard lock(mu);
            report.orders[static_cast<std::size_t>(r - 2)] = std::move(entry);
            report.counterexamples.insert(report.counterexamples.end(), bad.begin(), bad.end());
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();

    report.types_checked = checked;
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    report.counterexamples.erase(std::unique(report.counterexamples.begin(), report.counterexamples.end()),
                                 report.counterexamples.end());
    return report;
}

}  // namespace toricdiv
