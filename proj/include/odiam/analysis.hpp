#pragma once

#include "odiam/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace odiam {

// Bit k set iff anchor x_{k+1} -> v. Rendered as "+-+" with x1 first.
class SignVector {
public:
    constexpr SignVector() = default;
    constexpr explicit SignVector(std::uint8_t bits) : bits_(bits & 7U) {}
    static SignVector parse(std::string_view text);

    constexpr std::uint8_t bits() const { return bits_; }
    constexpr bool from_anchor(int k) const { return ((bits_ >> k) & 1U) != 0; }
    constexpr SignVector complement() const { return SignVector(static_cast<std::uint8_t>(~bits_)); }
    std::string to_string() const;

    constexpr bool operator==(const SignVector &) const = default;

private:
    std::uint8_t bits_ = 0;
};

struct SignPartition {
    int part_index = 0;
    std::array<std::vector<int>, 8> classes; // indexed by SignVector::bits()

    const std::vector<int> &operator[](SignVector s) const { return classes[s.bits()]; }
    int size(SignVector s) const { return static_cast<int>(classes[s.bits()].size()); }
    int total() const;
};

// Display order used in reports: +++, ++-, +-+, -++, +--, -+-, --+, ---.
const std::array<SignVector, 8> &sign_vectors_in_display_order();

// One partition per non-anchor part, in part order.
std::vector<SignPartition> sign_partition(const Orientation &d, int anchor_part);

struct LemmaViolation {
    std::string clause; // "1a", "1b", "2a", "2b"
    std::string detail;
};

// Checks both halves of the all-plus / all-minus class lemma for a diameter-2
// orientation of a complete tripartite graph anchored at a part of size 3.
std::vector<LemmaViolation> lemma21_check(const Orientation &d, int anchor_part);

using DegreeTuple = std::vector<int>;

// Sorted tuple or its reversal image (i -> p - i, sorted), whichever is lexicographically smaller.
DegreeTuple canonical_case(DegreeTuple degrees, int p);
// All canonical classes of m anchor out-degrees into a part of size p, lexicographic order.
std::vector<DegreeTuple> canonical_case_classes(int m, int p);

struct CaseSignature {
    std::array<int, 3> raw{};
    std::array<int, 3> canonical{};
    int p = 0;
};

// Parts must be (3, p, q); i, j, k are the out-degrees of x1, x2, x3 into V2.
CaseSignature case_signature(const Orientation &d);

struct AntichainReport {
    std::vector<VertexSet> family; // out-sets on the small side, one per big-side vertex
    bool is_antichain = true;
    bool all_nonempty_proper = true;
    std::optional<std::pair<int, int>> violating_pair; // (i, j) with family[i] subset of family[j]
};

bool is_antichain(std::span<const VertexSet> family, std::pair<int, int> *violation = nullptr);

AntichainReport out_neighborhood_family(const Orientation &bipartite, int big_side);

struct MaxAntichain {
    int size = 0;
    std::vector<VertexSet> witness;
    std::uint64_t maximum_count = 0; // number of antichains attaining size
    std::uint64_t antichains_enumerated = 0;
};

// Exhaustive over all antichains of the power set of a p-set, p <= 5.
MaxAntichain max_antichain(int p);

struct SpernerBound {
    std::uint64_t value = 0;
    bool verified = false; // true only when max_antichain confirmed the value
};

std::uint64_t binomial(int n, int k);
SpernerBound sperner_bound(int p);

} // namespace odiam
