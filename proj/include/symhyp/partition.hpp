#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "symhyp/errors.hpp"

namespace symhyp {

// Weakly decreasing vector of nonnegative integers, stored without trailing
// zeros. The ambient length n is contextual and passed to operations that
// need it; a value embeds in any Lambda_n with n >= length() by zero parts.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    // Total number of boxes |lambda|.
    int size() const;
    // 1-based part access; indices past the length read as zero.
    int part(int j) const {
        return (j >= 1 && j <= length()) ? parts_[static_cast<size_t>(j - 1)] : 0;
    }
    int first() const { return part(1); }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    std::vector<int> padded(int n) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    // Lexicographic on padded parts; used only as an arbitrary total order.
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string str() const;

  private:
    std::vector<int> parts_;
};

// J/J^c/J+/J- index sets of a pair (lambda, mu) in Lambda_n, 1-based, with the
// sign vector eps (+1 on J+, -1 on J-, 0 elsewhere).
struct IndexSets {
    std::vector<int> J, Jc, Jplus, Jminus;
    std::vector<int> eps;  // length n

    int eps_at(int j) const { return eps[static_cast<size_t>(j - 1)]; }
};

Partition conjugate(const Partition& lam);

// Nonhomogeneous dominance order: all partial sums of mu bounded by those of
// lambda (no requirement that |mu| = |lambda|).
bool dominance_leq(const Partition& mu, const Partition& lam, int n);

bool contains(const Partition& outer, const Partition& inner);

// lambda/mu has at most one box per column: lambda_1 >= mu_1 >= lambda_2 >= ...
bool is_horizontal_strip(const Partition& lam, const Partition& mu);

// lambda/mu has at most one box per row: mu_j <= lambda_j <= mu_j + 1.
bool is_vertical_strip(const Partition& lam, const Partition& mu);

// Branching order: mu in Lambda_n precedes lambda in Lambda_{n+1} iff some nu
// with mu c nu c lambda splits lambda/mu into two horizontal strips.
bool precedes(const Partition& mu, const Partition& lam, int n);

// Pieri proximity: lambda and mu share a sub-partition nu with both skew
// diagrams vertical strips and at most r boxes in total.
bool proximity(const Partition& lam, const Partition& mu, int r, int n);

IndexSets index_sets(const Partition& lam, const Partition& mu, int n);

// Box complement: (m^n - mu)_j = m - mu_{n+1-j}, for mu inside the n x m box.
Partition complement(int m, int n, const Partition& mu);

// Number of columns j <= lambda_1 where the conjugates differ by exactly one,
// i.e. the degree bound d(lambda, mu) of the branching polynomial.
int d_count(const Partition& lam, const Partition& mu);

// All partitions inside the box n^m (at most m parts, each at most n), in a
// deterministic order: ascending by size, lexicographically descending within
// a size grade.
std::vector<Partition> enumerate_subpartitions(int m, int n);

// Term order for polynomial output and leading-term extraction: larger size
// first, lexicographically larger first within a grade. This is a linear
// extension of (descending) dominance, so the first term of a map ordered by
// it is always dominance-maximal.
struct TermOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

// All distinct permutations of the padded part vector of a partition.
std::vector<std::vector<int>> orbit_of(const Partition& p, int nvars);

// All mu in Lambda_n preceding lam (in Lambda_{n+1}) in the branching order.
std::vector<Partition> preceding_partitions(const Partition& lam, int n);

}  // namespace symhyp
