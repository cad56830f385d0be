#include "odiam/analysis.hpp"

#include "odiam/error.hpp"

#include <algorithm>
#include <functional>

namespace odiam {

SignVector SignVector::parse(std::string_view text) {
    if (text.size() != 3)
        throw std::invalid_argument("sign vector needs three characters");
    std::uint8_t bits = 0;
    for (int k = 0; k < 3; ++k) {
        if (text[k] == '+')
            bits |= static_cast<std::uint8_t>(1U << k);
        else if (text[k] != '-')
            throw std::invalid_argument("sign vector characters must be '+' or '-'");
    }
    return SignVector(bits);
}

std::string SignVector::to_string() const {
    std::string s(3, '-');
    for (int k = 0; k < 3; ++k)
        if (from_anchor(k))
            s[k] = '+';
    return s;
}

int SignPartition::total() const {
    int sum = 0;
    for (const auto &c : classes)
        sum += static_cast<int>(c.size());
    return sum;
}

const std::array<SignVector, 8> &sign_vectors_in_display_order() {
    static const std::array<SignVector, 8> order = {
        SignVector::parse("+++"), SignVector::parse("++-"), SignVector::parse("+-+"),
        SignVector::parse("-++"), SignVector::parse("+--"), SignVector::parse("-+-"),
        SignVector::parse("--+"), SignVector::parse("---")};
    return order;
}

std::vector<SignPartition> sign_partition(const Orientation &d, int anchor_part) {
    const Topology &t = d.topology();
    if (anchor_part < 0 || anchor_part >= t.n_parts())
        throw Error(ErrorKind::AnchorNotSize3, "no part " + std::to_string(anchor_part));
    if (t.part_size(anchor_part) != 3)
        throw Error(ErrorKind::AnchorNotSize3,
                    "part " + std::to_string(anchor_part) + " has " +
                        std::to_string(t.part_size(anchor_part)) + " vertices");
    const int x0 = t.part_begin(anchor_part);
    std::vector<SignPartition> result;
    for (int p = 0; p < t.n_parts(); ++p) {
        if (p == anchor_part)
            continue;
        SignPartition sp;
        sp.part_index = p;
        for (int v = t.part_begin(p); v < t.part_begin(p) + t.part_size(p); ++v) {
            std::uint8_t bits = 0;
            for (int k = 0; k < 3; ++k)
                if (d.has_arc(x0 + k, v))
                    bits |= static_cast<std::uint8_t>(1U << k);
            sp.classes[bits].push_back(v);
        }
        result.push_back(std::move(sp));
    }
    return result;
}

std::vector<LemmaViolation> lemma21_check(const Orientation &d, int anchor_part) {
    const Topology &t = d.topology();
    if (t.n_parts() != 3)
        throw Error(ErrorKind::NotTripartite, std::to_string(t.n_parts()) + " parts");
    auto parts = sign_partition(d, anchor_part);
    Distance diam = diameter(d);
    if (diam != Distance(2))
        throw Error(ErrorKind::DiameterNotTwo, "diameter is " + diam.to_string());

    const SignVector all_in = SignVector::parse("+++");
    const SignVector all_out = SignVector::parse("---");
    std::vector<LemmaViolation> violations;

    auto names = [&](const std::vector<int> &vs) {
        std::string s;
        for (int v : vs)
            s += (s.empty() ? "" : ",") + vertex_name(t, v);
        return "{" + s + "}";
    };

    for (int side = 0; side < 2; ++side) {
        const SignPartition &vi = parts[side];
        const SignPartition &vj = parts[1 - side];
        const VertexSet vj_mask = t.part_mask(vj.part_index);
        const std::string label = "V" + std::to_string(vi.part_index + 1);

        const auto &plus = vi[all_in];
        if (!plus.empty()) {
            if (plus.size() != 1)
                violations.push_back({"1a", label + "^{+++} = " + names(plus) + " is not a singleton"});
            for (int y : plus)
                if ((d.out(y) & vj_mask) != vj_mask)
                    violations.push_back({"1a", vertex_name(t, y) + " does not dominate V" +
                                                    std::to_string(vj.part_index + 1)});
        }
        const auto &minus = vi[all_out];
        if (!minus.empty()) {
            if (minus.size() != 1)
                violations.push_back({"1b", label + "^{---} = " + names(minus) + " is not a singleton"});
            for (int y : minus)
                if ((d.in(y) & vj_mask) != vj_mask)
                    violations.push_back({"1b", "V" + std::to_string(vj.part_index + 1) +
                                                    " does not dominate " + vertex_name(t, y)});
        }
    }
    if (!parts[0][all_in].empty() && !parts[1][all_in].empty())
        violations.push_back({"2a", "both non-anchor parts have a +++ class"});
    if (!parts[0][all_out].empty() && !parts[1][all_out].empty())
        violations.push_back({"2b", "both non-anchor parts have a --- class"});
    return violations;
}

DegreeTuple canonical_case(DegreeTuple degrees, int p) {
    std::ranges::sort(degrees);
    DegreeTuple flipped;
    flipped.reserve(degrees.size());
    for (int d : degrees)
        flipped.push_back(p - d);
    std::ranges::sort(flipped);
    return std::min(degrees, flipped);
}

std::vector<DegreeTuple> canonical_case_classes(int m, int p) {
    std::vector<DegreeTuple> out;
    DegreeTuple cur(m, 0);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == m) {
            if (canonical_case(cur, p) == cur)
                out.push_back(cur);
            return;
        }
        for (int v = lo; v <= p; ++v) {
            cur[pos] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, 0);
    return out;
}

CaseSignature case_signature(const Orientation &d) {
    const Topology &t = d.topology();
    if (t.n_parts() < 2 || t.part_size(0) != 3)
        throw Error(ErrorKind::FirstPartNotSize3, "the first part must have exactly 3 vertices");
    CaseSignature sig;
    sig.p = t.part_size(1);
    DegreeTuple deg;
    for (int k = 0; k < 3; ++k) {
        sig.raw[k] = set_size(d.out(k) & t.part_mask(1));
        deg.push_back(sig.raw[k]);
    }
    auto canon = canonical_case(deg, sig.p);
    std::ranges::copy(canon, sig.canonical.begin());
    return sig;
}

bool is_antichain(std::span<const VertexSet> family, std::pair<int, int> *violation) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j)
            if (i != j && (family[i] & ~family[j]) == 0) {
                if (violation)
                    *violation = {static_cast<int>(i), static_cast<int>(j)};
                return false;
            }
    return true;
}

AntichainReport out_neighborhood_family(const Orientation &bipartite, int big_side) {
    const Topology &t = bipartite.topology();
    if (t.n_parts() != 2)
        throw Error(ErrorKind::NotBipartite, std::to_string(t.n_parts()) + " parts");
    if (big_side < 0 || big_side > 1)
        throw std::invalid_argument("big_side must be 0 or 1");
    const int small = 1 - big_side;
    const VertexSet small_mask = t.part_mask(small);
    const VertexSet full = small_mask >> t.part_begin(small);
    AntichainReport report;
    for (int z = t.part_begin(big_side); z < t.part_begin(big_side) + t.part_size(big_side); ++z) {
        VertexSet s = (bipartite.out(z) & small_mask) >> t.part_begin(small);
        report.family.push_back(s);
        if (s == 0 || s == full)
            report.all_nonempty_proper = false;
    }
    std::pair<int, int> bad;
    report.is_antichain = is_antichain(report.family, &bad);
    if (!report.is_antichain)
        report.violating_pair = bad;
    return report;
}

MaxAntichain max_antichain(int p) {
    if (p < 1)
        throw std::invalid_argument("ground set must be non-empty");
    if (p > 5)
        throw Error(ErrorKind::PTooLarge, "exhaustive antichain search is limited to p <= 5");
    const int universe = 1 << p;
    MaxAntichain best;
    std::vector<VertexSet> chosen;
    // Each antichain is generated once: subsets are considered in increasing order.
    std::function<void(int)> rec = [&](int next) {
        ++best.antichains_enumerated;
        const int size = static_cast<int>(chosen.size());
        if (size > best.size) {
            best.size = size;
            best.witness = chosen;
            best.maximum_count = 1;
        } else if (size == best.size) {
            ++best.maximum_count;
        }
        for (int s = next; s < universe; ++s) {
            const VertexSet cand = static_cast<VertexSet>(s);
            bool ok = true;
            for (VertexSet c : chosen)
                if ((c & ~cand) == 0 || (cand & ~c) == 0) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            chosen.push_back(cand);
            rec(s + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return best;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

SpernerBound sperner_bound(int p) {
    SpernerBound b;
    if (p >= 1 && p <= 5) {
        b.value = static_cast<std::uint64_t>(max_antichain(p).size);
        b.verified = true;
    } else {
        b.value = binomial(p, p / 2);
    }
    return b;
}

} // namespace odiam
