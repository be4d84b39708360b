/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "shiftlab/bfree.hpp"

#include "shiftlab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace shiftlab {

namespace {

void check_generators(const std::vector<std::uint64_t>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i] < 2)
            throw ValidationError("BSet: generators must be >= 2 (1 would empty F_B)");
        if (i > 0 && gens[i] <= gens[i - 1])
            throw ValidationError("BSet: generators must be strictly increasing");
    }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<char> sieve(static_cast<std::size_t>(n) + 1, 1);
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (!sieve[static_cast<std::size_t>(p)]) continue;
        out.push_back(p);
        for (std::uint64_t q = p * p; q <= n; q += p) sieve[static_cast<std::size_t>(q)] = 0;
    }
    return out;
}

} // namespace

BSet BSet::explicit_list(std::vector<std::uint64_t> generators) {
    check_generators(generators);
    BSet b;
    b.kind_ = Kind::ExplicitList;
    b.gens_ = std::move(generators);
    return b;
}

BSet BSet::prime_squares() {
    BSet b;
    b.kind_ = Kind::PrimeSquares;
    return b;
}

BSet BSet::arithmetic(std::uint64_t first, std::uint64_t step) {
    if (first < 2) throw ValidationError("BSet: arithmetic stream must start at >= 2");
    if (step == 0) throw ValidationError("BSet: arithmetic step must be positive");
    BSet b;
    b.kind_ = Kind::ArithmeticProgression;
    b.ap_first_ = first;
    b.ap_step_ = step;
    return b;
}

const std::vector<std::uint64_t>& BSet::generators() const {
    if (!is_finite()) throw ValidationError("BSet: generator list requested from a stream");
    return gens_;
}

std::vector<std::uint64_t> BSet::generators_up_to(std::uint64_t n) const {
    switch (kind_) {
    case Kind::ExplicitList: {
        std::vector<std::uint64_t> out;
        for (auto g : gens_)
            if (g <= n) out.push_back(g);
        return out;
    }
    case Kind::PrimeSquares: {
        std::vector<std::uint64_t> out;
        if (n < 4) return out;
        std::uint64_t root = 2;
        while ((root + 1) * (root + 1) <= n) ++root;
        for (auto p : primes_up_to(root)) out.push_back(p * p);
        return out;
    }
    case Kind::ArithmeticProgression: {
        std::vector<std::uint64_t> out;
        for (std::uint64_t g = ap_first_; g <= n; g += ap_step_) out.push_back(g);
        return out;
    }
    }
    return {};
}

std::string BSet::describe() const {
    switch (kind_) {
    case Kind::ExplicitList: {
        std::string s = "{";
        for (std::size_t i = 0; i < gens_.size(); ++i)
            s += (i ? "," : "") + std::to_string(gens_[i]);
        return s + "}";
    }
    case Kind::PrimeSquares:
        return "squares-of-primes";
    case Kind::ArithmeticProgression:
        return "arithmetic(" + std::to_string(ap_first_) + "," + std::to_string(ap_step_) + ")";
    }
    return "";
}

Word bfree_indicator(const BSet& b, std::uint64_t n) {
    if (n < 1) throw ValidationError("bfree_indicator: horizon must be >= 1");
    std::string bits(static_cast<std::size_t>(n), '1');
    for (auto g : b.generators_up_to(n - 1))
        for (std::uint64_t i = 0; i < n; i += g) bits[static_cast<std::size_t>(i)] = '0';
    // Index 0 is a multiple of every generator, including ones beyond the
    // horizon.
    if (!b.is_empty()) bits[0] = '0';
    return {Alphabet::binary(), bits};
}

namespace {

// lcm with a 2^63 cap; 0 signals overflow.
std::uint64_t capped_lcm(std::uint64_t a, std::uint64_t b) {
    std::uint64_t g = std::gcd(a, b);
    unsigned __int128 l = static_cast<unsigned __int128>(a / g) * b;
    if (l > (static_cast<unsigned __int128>(1) << 63)) return 0;
    return static_cast<std::uint64_t>(l);
}

} // namespace

ExactRational density_union(const BSet& b) {
    const auto& gens = b.generators();
    if (gens.empty()) return {0};
    if (gens.size() > 24) throw ResourceError("density_union: more than 24 generators");

    // Density = count / lcm(B) with count accumulated by inclusion-exclusion:
    // every subset S contributes sign(|S|) * lcm(B) / lcm(S).
    std::uint64_t lcm_all = 1;
    for (auto g : gens) {
        lcm_all = capped_lcm(lcm_all, g);
        if (lcm_all == 0) throw ResourceError("density_union: lcm exceeds 2^63");
    }
    BigInt count = 0;
    const auto m = gens.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        std::uint64_t l = 1;
        int bits = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::uint64_t{1} << i)) {
                ++bits;
                l = capped_lcm(l, gens[i]);
            }
        BigInt term = BigInt(lcm_all / l);
        count += (bits % 2 == 1) ? term : -term;
    }
    return {count, BigInt(lcm_all)};
}

BClassification bset_classify(const BSet& b) {
    const auto& gens = b.generators();
    BClassification c;
    c.primitive = true;
    for (std::size_t i = 0; i < gens.size() && c.primitive; ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j && gens[j] % gens[i] == 0) {
                c.primitive = false;
                break;
            }
    c.taut = true;
    ExactRational full = density_union(b);
    for (std::size_t drop = 0; drop < gens.size() && c.taut; ++drop) {
        std::vector<std::uint64_t> rest;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (i != drop) rest.push_back(gens[i]);
        if (!(density_union(BSet::explicit_list(rest)) < full)) c.taut = false;
    }
    return c;
}

namespace {

// Unreduced fraction for balanced summation: one gcd at the very end
// instead of one per accumulated term.
struct RawFraction {
    BigInt num, den;
};

RawFraction sum_reciprocals(const std::vector<std::uint64_t>& gens, std::size_t lo,
                            std::size_t hi) {
    if (hi == lo) return {BigInt(0), BigInt(1)};
    if (hi - lo == 1) return {BigInt(1), BigInt(gens[lo])};
    std::size_t mid = lo + (hi - lo) / 2;
    RawFraction a = sum_reciprocals(gens, lo, mid);
    RawFraction b = sum_reciprocals(gens, mid, hi);
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

} // namespace

std::vector<DeRow> de_table(const BSet& b, std::uint64_t k_lo, std::uint64_t k_hi,
                            std::uint64_t n) {
    if (k_lo < 1 || k_lo > k_hi) throw ValidationError("de_table: bad k range");
    if (n < 1) throw ValidationError("de_table: bad horizon");
    auto gens = b.generators_up_to(n);

    // min_idx[i] = 1-based index of the smallest generator dividing i, or 0.
    std::vector<std::uint32_t> min_idx(static_cast<std::size_t>(n), 0);
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::uint64_t i = 0; i < n; i += gens[j]) {
            auto& slot = min_idx[static_cast<std::size_t>(i)];
            if (slot == 0) slot = static_cast<std::uint32_t>(j + 1);
        }
    // suffix_count[j] = #{i : min_idx[i] > j}
    std::vector<std::uint64_t> by_idx(gens.size() + 2, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
        auto s = min_idx[static_cast<std::size_t>(i)];
        if (s > 0) ++by_idx[s];
    }

    // Tails walk down from k_hi so the long suffix is summed only once.
    const std::size_t tail_start = std::min(static_cast<std::size_t>(k_hi), gens.size());
    RawFraction tail = sum_reciprocals(gens, tail_start, gens.size());

    std::vector<DeRow> rows(static_cast<std::size_t>(k_hi - k_lo + 1));
    for (std::uint64_t k = k_hi;; --k) {
        DeRow& row = rows[static_cast<std::size_t>(k - k_lo)];
        std::uint64_t deficient = 0;
        for (std::size_t j = static_cast<std::size_t>(k) + 1; j <= gens.size(); ++j)
            deficient += by_idx[j];
        row.k = k;
        row.deficiency = ExactRational(BigInt(deficient), BigInt(n));
        row.tail_bound = ExactRational(tail.num, tail.den);
        row.boundary = ExactRational(BigInt(k), BigInt(n));
        if (k == k_lo) break;
        if (k - 1 < gens.size()) {
            BigInt g(gens[static_cast<std::size_t>(k - 1)]);
            tail = {tail.num * g + tail.den, tail.den * g};
        }
    }
    return rows;
}

DeRow de_deficiency(const BSet& b, std::uint64_t k, std::uint64_t n) {
    return de_table(b, k, k, n).front();
}

LabeledGraph hereditary_orbit_graph(const PeriodicPoint& x) {
    if (x.alphabet() != Alphabet::binary())
        throw ValidationError("hereditary_orbit_graph: point must be over {0,1}");
    if (!x.preperiod().empty())
        throw ValidationError("hereditary_orbit_graph: point must be purely periodic");
    const auto& w = x.period();
    const int n = static_cast<int>(w.size());
    LabeledGraph g;
    g.alphabet = Alphabet::binary();
    g.vertex_count = n;
    for (int j = 0; j < n; ++j) {
        g.edges.push_back({j, (j + 1) % n, '0'});
        if (w[static_cast<std::size_t>(j)] == '1') g.edges.push_back({j, (j + 1) % n, '1'});
    }
    canonicalize(g);
    return g;
}

namespace {

struct IndicatorPair {
    std::vector<char> truncated; // eta_{B|k} bits on [0, len)
    std::vector<char> full;      // eta_B bits on [0, len)
};

IndicatorPair indicators(const BSet& b, std::uint64_t k, std::uint64_t len) {
    auto gens = b.generators_up_to(len == 0 ? 0 : len - 1);
    IndicatorPair p;
    p.truncated.assign(static_cast<std::size_t>(len), 1);
    p.full.assign(static_cast<std::size_t>(len), 1);
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::uint64_t i = 0; i < len; i += gens[j]) {
            p.full[static_cast<std::size_t>(i)] = 0;
            if (j < k) p.truncated[static_cast<std::size_t>(i)] = 0;
        }
    if (len > 0 && !b.is_empty()) {
        p.full[0] = 0;
        if (k >= 1) p.truncated[0] = 0;
    }
    return p;
}

} // namespace

DominanceProjection<Word> dominance_projection(const Word& x, const BSet& b, std::uint64_t k,
                                               std::uint64_t m) {
    if (x.alphabet != Alphabet::binary())
        throw ValidationError("dominance_projection: word must be over {0,1}");
    const std::uint64_t n = x.length();
    auto ind = indicators(b, k, n + m);
    DominanceProjection<Word> out{x, 0, 0};
    std::string y = x.text;
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto pos = static_cast<std::size_t>(i + m);
        if (x.text[static_cast<std::size_t>(i)] == '1' && !ind.truncated[pos])
            throw ValidationError("dominance_projection: x is not dominated by the shifted "
                                  "truncated indicator at position " + std::to_string(i));
        if (ind.truncated[pos] != ind.full[pos]) {
            ++out.deficiency_positions;
            if (y[static_cast<std::size_t>(i)] == '1') {
                y[static_cast<std::size_t>(i)] = '0';
                ++out.changed;
            }
        }
    }
    out.projected = Word(x.alphabet, y);
    return out;
}

DominanceProjection<PeriodicPoint> dominance_projection(const PeriodicPoint& x, const BSet& b,
                                                        std::uint64_t k, std::uint64_t m) {
    if (!b.is_finite())
        throw ValidationError("dominance_projection: periodic output requires finite B");
    if (!x.preperiod().empty())
        throw ValidationError("dominance_projection: point must be purely periodic");
    std::uint64_t period_b = 1;
    for (auto g : b.generators()) {
        period_b = capped_lcm(period_b, g);
        if (period_b == 0) throw ResourceError("dominance_projection: lcm exceeds 2^63");
    }
    const auto px = static_cast<std::uint64_t>(x.period().size());
    const std::uint64_t g = std::gcd(px, period_b);
    const unsigned __int128 span128 = static_cast<unsigned __int128>(px / g) * period_b;
    if (span128 > (std::uint64_t{1} << 22))
        throw ResourceError("dominance_projection: combined period exceeds the 2^22 cap");
    const auto span = static_cast<std::uint64_t>(span128);

    auto ind = indicators(b, k, span + m);
    DominanceProjection<PeriodicPoint> out{x, 0, 0};
    std::string y(static_cast<std::size_t>(span), '0');
    for (std::uint64_t i = 0; i < span; ++i) {
        const auto pos = static_cast<std::size_t>(i + m);
        const char xi = x.at(i);
        if (xi == '1' && !ind.truncated[pos])
            throw ValidationError("dominance_projection: x is not dominated by the shifted "
                                  "truncated indicator at position " + std::to_string(i));
        char yi = xi;
        if (ind.truncated[pos] != ind.full[pos]) {
            ++out.deficiency_positions;
            if (xi == '1') {
                yi = '0';
                ++out.changed;
            }
        }
        y[static_cast<std::size_t>(i)] = yi;
    }
    out.projected = PeriodicPoint(Alphabet::binary(), "", y);
    return out;
}

} // namespace shiftlab
