/*
 * shiftlab — symbolic dynamics toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "shiftlab/sgap.hpp"

#include "shiftlab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace shiftlab {

SGapSet::SGapSet(std::vector<std::uint64_t> gap_list, bool allow_zero_gap) : gaps(std::move(gap_list)) {
    if (gaps.empty()) throw ValidationError("SGapSet: empty gap set");
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (gaps[i] == 0 && !allow_zero_gap)
            throw ValidationError("SGapSet: gap 0 requires the allow_zero flag");
        if (i > 0 && gaps[i] <= gaps[i - 1])
            throw ValidationError("SGapSet: gaps must be strictly increasing");
    }
}

SGapSet SGapSet::truncated(std::size_t k) const {
    if (k == 0) throw ValidationError("SGapSet: empty truncation");
    std::vector<std::uint64_t> head(gaps.begin(),
                                    gaps.begin() + static_cast<std::ptrdiff_t>(std::min(k, gaps.size())));
    SGapSet out(std::move(head), /*allow_zero_gap=*/true);
    return out;
}

LabeledGraph sgap_graph(const SGapSet& s) {
    const std::uint64_t top = s.gaps.back();
    if (top > 100000) throw ResourceError("sgap_graph: largest gap exceeds the vertex cap");
    LabeledGraph g;
    g.alphabet = Alphabet::binary();
    g.vertex_count = static_cast<int>(top) + 1;
    for (std::uint64_t i = 0; i < top; ++i)
        g.edges.push_back({static_cast<int>(i), static_cast<int>(i) + 1, '0'});
    for (auto gap : s.gaps) g.edges.push_back({static_cast<int>(gap), 0, '1'});
    g = trim(g);
    canonicalize(g);
    return g;
}

SGapClassification sgap_classify(const SGapSet& s) {
    std::uint64_t g = 0;
    for (auto gap : s.gaps) g = std::gcd(g, gap + 1);
    SGapClassification c;
    c.mixing = g == 1;
    if (!s.is_stream) {
        c.specification = c.mixing; // finite S has bounded successive gaps
    } else {
        if (!s.declared_diff_bound)
            throw ValidationError("sgap_classify: stream without a declared gap-difference bound");
        c.specification = c.mixing && *s.declared_diff_bound < std::uint64_t(-1);
    }
    return c;
}

std::uint64_t frobenius_L(const std::vector<std::uint64_t>& parts) {
    if (parts.empty()) throw ValidationError("frobenius_L: no parts");
    std::uint64_t g = 0, lo = std::uint64_t(-1), hi = 0;
    for (auto p : parts) {
        if (p == 0) throw ValidationError("frobenius_L: zero part");
        g = std::gcd(g, p);
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    if (g != 1)
        throw ValidationError("frobenius_L: gcd of parts is " + std::to_string(g) + ", not 1");
    // The DP horizon lo*hi covers the Frobenius number; the window check
    // below certifies that independently of any bound argument.
    const std::uint64_t bound = lo * hi + lo + 1;
    if (bound > 100'000'000) throw ResourceError("frobenius_L: DP bound too large");
    std::vector<char> rep(static_cast<std::size_t>(bound), 0);
    rep[0] = 1;
    for (std::uint64_t v = 1; v < bound; ++v)
        for (auto p : parts)
            if (p <= v && rep[static_cast<std::size_t>(v - p)]) {
                rep[static_cast<std::size_t>(v)] = 1;
                break;
            }
    std::uint64_t L = 0;
    for (std::uint64_t v = 0; v + lo + 1 < bound; ++v)
        if (!rep[static_cast<std::size_t>(v)]) L = v + 1;
    // lo consecutive representable values starting at L close the induction:
    // everything above them is reachable by adding copies of the part lo.
    for (std::uint64_t v = L; v < L + lo; ++v)
        if (!rep[static_cast<std::size_t>(v)])
            throw InternalError("frobenius_L: DP horizon too small");
    return L;
}

namespace {

// Deterministic decomposition of ell into as few parts as possible (each
// part contributes one 1 to the rewritten gap, so fewer parts means a
// smaller realized Hamming distance). Ties broken toward smaller parts.
std::vector<std::uint64_t> decompose(std::uint64_t ell, const std::vector<std::uint64_t>& parts) {
    constexpr std::uint64_t unreachable = std::uint64_t(-1);
    std::vector<std::uint64_t> cnt(static_cast<std::size_t>(ell) + 1, unreachable);
    cnt[0] = 0;
    for (std::uint64_t v = 1; v <= ell; ++v)
        for (auto p : parts)
            if (p <= v && cnt[static_cast<std::size_t>(v - p)] != unreachable)
                cnt[static_cast<std::size_t>(v)] = std::min(
                    cnt[static_cast<std::size_t>(v)], cnt[static_cast<std::size_t>(v - p)] + 1);
    if (cnt[static_cast<std::size_t>(ell)] == unreachable)
        throw InternalError("inner_approx_point: ell not representable");
    std::vector<std::uint64_t> used;
    std::uint64_t v = ell;
    while (v > 0)
        for (auto p : parts)
            if (p <= v && cnt[static_cast<std::size_t>(v - p)] != unreachable &&
                cnt[static_cast<std::size_t>(v - p)] + 1 == cnt[static_cast<std::size_t>(v)]) {
                used.push_back(p);
                v -= p;
                break;
            }
    return used;
}

} // namespace

InnerApproxResult inner_approx_point(const std::vector<std::uint64_t>& gap_cycle, const SGapSet& s,
                                     std::size_t k) {
    if (gap_cycle.empty()) throw ValidationError("inner_approx_point: empty gap cycle");
    for (auto t : gap_cycle)
        if (!std::binary_search(s.gaps.begin(), s.gaps.end(), t))
            throw ValidationError("inner_approx_point: gap " + std::to_string(t) + " not in S");

    SGapSet sk = s.truncated(k);
    std::vector<std::uint64_t> parts;
    for (auto gap : sk.gaps) parts.push_back(gap + 1);
    {
        std::uint64_t g = 0;
        for (auto p : parts) g = std::gcd(g, p);
        if (g != 1)
            throw ValidationError("inner_approx_point: S[k] is not mixing (gcd of gaps+1 is " +
                                  std::to_string(g) + ")");
    }
    const std::uint64_t s_max = sk.gaps.back();
    const std::uint64_t L = frobenius_L(parts);

    InnerApproxResult result{PeriodicPoint(Alphabet::binary(), "", "1"), ExactRational(0), {}, s_max, L};
    std::string period;
    for (auto t : gap_cycle) {
        GapSurgery surg;
        surg.gap = t;
        surg.formula_bound = ExactRational(1, static_cast<long long>(s_max) + 1) +
                           ExactRational(static_cast<long long>(L + s_max), 1) /
                               ExactRational(static_cast<long long>(std::max<std::uint64_t>(t, 1)), 1);
        std::string v;
        if (std::binary_search(sk.gaps.begin(), sk.gaps.end(), t)) {
            v.assign(static_cast<std::size_t>(t), '0');
            surg.replaced = false;
            surg.realized = ExactRational(0);
        } else {
            // ell in [L, L + s_max + 1) with (s_max + 1) | (t + 1 - ell).
            const std::uint64_t mod = s_max + 1;
            if (t + 1 < L)
                throw ValidationError("inner_approx_point: gap " + std::to_string(t) +
                                      " too short to cut (t + 1 < L = " + std::to_string(L) + ")");
            std::uint64_t ell = L + (t + 1 - L) % mod;
            if (t + 1 < ell)
                throw ValidationError("inner_approx_point: gap " + std::to_string(t) +
                                      " too short to cut within the residue window");
            const std::uint64_t p = (t + 1 - ell) / mod;
            // v = (0^{s_max} 1)^p  followed by  0^{q_1} 1 ... 0^{q_r} 1
            // with the final closing 1 dropped (it is the next cycle 1).
            std::string w;
            for (auto part : decompose(ell, parts))
                w += std::string(static_cast<std::size_t>(part - 1), '0') + '1';
            for (std::uint64_t rep = 0; rep < p; ++rep)
                v += std::string(static_cast<std::size_t>(s_max), '0') + '1';
            v += w;
            v.pop_back(); // |v| = p (s_max+1) + ell - 1 = t
            if (v.size() != t) throw InternalError("inner_approx_point: surgery length mismatch");
            surg.replaced = true;
            long long ones = static_cast<long long>(std::count(v.begin(), v.end(), '1'));
            surg.realized = ExactRational(ones, static_cast<long long>(t));
            if (!(surg.realized <= surg.formula_bound))
                throw InternalError("inner_approx_point: realized distance exceeds the bound");
        }
        if (surg.realized > result.sup_realized) result.sup_realized = surg.realized;
        result.per_gap.push_back(std::move(surg));
        period += v + '1';
    }
    result.point = PeriodicPoint(Alphabet::binary(), "", period);

    // The output must be accepted by the truncated automaton: starting after
    // a 1 (vertex 0) the period word must run deterministically back to 0.
    LabeledGraph gk = sgap_graph(sk);
    DfaView dfa(gk);
    auto end = dfa.run(0, period);
    if (!end || *end != 0)
        throw InternalError("inner_approx_point: output rejected by the S[k] automaton");
    return result;
}

} // namespace shiftlab
