#include "symhyp/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace symhyp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t j = 0; j + 1 < parts_.size(); ++j) {
        if (parts_[j] < parts_[j + 1]) throw BadInput("partition parts must be weakly decreasing");
    }
    if (!parts_.empty() && parts_.back() < 0) throw BadInput("partition parts must be nonnegative");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int n) const {
    std::vector<int> out(static_cast<size_t>(n), 0);
    for (int j = 0; j < std::min(n, length()); ++j) out[static_cast<size_t>(j)] = parts_[static_cast<size_t>(j)];
    return out;
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t j = 0; j < parts_.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(parts_[j]);
    }
    return s + ")";
}

Partition conjugate(const Partition& lam) {
    std::vector<int> out(static_cast<size_t>(lam.first()), 0);
    for (int j = 1; j <= lam.first(); ++j) {
        int count = 0;
        for (int k = 1; k <= lam.length(); ++k)
            if (lam.part(k) >= j) ++count;
        out[static_cast<size_t>(j - 1)] = count;
    }
    return Partition(out);
}

bool dominance_leq(const Partition& mu, const Partition& lam, int n) {
    int smu = 0, slam = 0;
    for (int k = 1; k <= n; ++k) {
        smu += mu.part(k);
        slam += lam.part(k);
        if (smu > slam) return false;
    }
    // Parts beyond the ambient length must be zero for both.
    return mu.length() <= n && lam.length() <= n;
}

bool contains(const Partition& outer, const Partition& inner) {
    for (int j = 1; j <= inner.length(); ++j)
        if (inner.part(j) > outer.part(j)) return false;
    return true;
}

bool is_horizontal_strip(const Partition& lam, const Partition& mu) {
    if (!contains(lam, mu)) return false;
    int len = std::max(lam.length(), mu.length());
    for (int j = 1; j <= len; ++j) {
        if (lam.part(j) < mu.part(j)) return false;
        if (mu.part(j) < lam.part(j + 1)) return false;
    }
    return true;
}

bool is_vertical_strip(const Partition& lam, const Partition& mu) {
    int len = std::max(lam.length(), mu.length());
    for (int j = 1; j <= len; ++j) {
        int l = lam.part(j), m = mu.part(j);
        if (l < m || l > m + 1) return false;
    }
    return true;
}

namespace {

// Enumerates weakly decreasing nonnegative vectors nu with lo_j <= nu_j <= hi_j.
void each_between(const std::vector<int>& lo, const std::vector<int>& hi, size_t j,
                  std::vector<int>& cur, const std::function<bool(const std::vector<int>&)>& fn,
                  bool& stop) {
    if (stop) return;
    if (j == lo.size()) {
        if (fn(cur)) stop = true;
        return;
    }
    int cap = (j == 0) ? hi[j] : std::min(hi[j], cur[j - 1]);
    for (int v = lo[j]; v <= cap; ++v) {
        cur[j] = v;
        each_between(lo, hi, j + 1, cur, fn, stop);
        if (stop) return;
    }
}

}  // namespace

bool precedes(const Partition& mu, const Partition& lam, int n) {
    if (mu.length() > n || lam.length() > n + 1) return false;
    if (!contains(lam, mu)) return false;
    std::vector<int> lo(static_cast<size_t>(n)), hi(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) {
        lo[static_cast<size_t>(j - 1)] = mu.part(j);
        hi[static_cast<size_t>(j - 1)] = lam.part(j);
    }
    bool found = false, stop = false;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    each_between(lo, hi, 0, cur, [&](const std::vector<int>& parts) {
        Partition nu(parts);
        if (is_horizontal_strip(lam, nu) && is_horizontal_strip(nu, mu)) {
            found = true;
            return true;
        }
        return false;
    }, stop);
    return found;
}

bool proximity(const Partition& lam, const Partition& mu, int r, int n) {
    if (lam.length() > n || mu.length() > n) return false;
    // nu_j must lie within one box of both lambda_j and mu_j from below.
    for (int j = 1; j <= n; ++j)
        if (std::abs(lam.part(j) - mu.part(j)) > 1) return false;
    int count = 1 << n;
    for (int mask = 0; mask < count; ++mask) {
        std::vector<int> parts(static_cast<size_t>(n));
        bool ok = true;
        for (int j = 1; j <= n && ok; ++j) {
            int base = std::min(lam.part(j), mu.part(j));
            int v = base - ((mask >> (j - 1)) & 1);
            if (v < 0) {
                ok = false;
                break;
            }
            parts[static_cast<size_t>(j - 1)] = v;
            if (j > 1 && parts[static_cast<size_t>(j - 2)] < v) ok = false;
        }
        if (!ok) continue;
        Partition nu(parts);
        if (!is_vertical_strip(lam, nu) || !is_vertical_strip(mu, nu)) continue;
        int boxes = (lam.size() - nu.size()) + (mu.size() - nu.size());
        if (boxes <= r) return true;
    }
    return false;
}

IndexSets index_sets(const Partition& lam, const Partition& mu, int n) {
    IndexSets s;
    s.eps.assign(static_cast<size_t>(n), 0);
    for (int j = 1; j <= n; ++j) {
        int l = lam.part(j), m = mu.part(j);
        if (m > l) {
            s.J.push_back(j);
            s.Jplus.push_back(j);
            s.eps[static_cast<size_t>(j - 1)] = 1;
        } else if (m < l) {
            s.J.push_back(j);
            s.Jminus.push_back(j);
            s.eps[static_cast<size_t>(j - 1)] = -1;
        } else {
            s.Jc.push_back(j);
        }
    }
    return s;
}

Partition complement(int m, int n, const Partition& mu) {
    if (mu.length() > n || mu.first() > m)
        throw BadInput("complement: partition does not fit in the box");
    std::vector<int> out(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) out[static_cast<size_t>(j - 1)] = m - mu.part(n + 1 - j);
    return Partition(out);
}

int d_count(const Partition& lam, const Partition& mu) {
    int n = std::max(lam.length() - 1, mu.length());
    if (!precedes(mu, lam, n)) throw BadInput("d_count: mu does not precede lambda");
    int m = lam.first();
    Partition lc = conjugate(lam), mc = conjugate(mu);
    int d = 0;
    for (int j = 1; j <= m; ++j)
        if (lc.part(j) == mc.part(j) + 1) ++d;
    return d;
}

namespace {

void gather_box(int maxparts, int maxval, std::vector<int>& cur, std::vector<Partition>& out) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == maxparts) return;
    int cap = cur.empty() ? maxval : cur.back();
    for (int v = cap; v >= 1; --v) {
        cur.push_back(v);
        gather_box(maxparts, maxval, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_subpartitions(int m, int n) {
    if (m < 0 || n < 0) throw BadInput("enumerate_subpartitions: negative box");
    std::vector<Partition> out;
    std::vector<int> cur;
    gather_box(m, n, cur, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return b.parts() < a.parts();  // lexicographically descending within a grade
    });
    return out;
}

bool TermOrder::operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.parts() > b.parts();
}

std::vector<std::vector<int>> orbit_of(const Partition& p, int nvars) {
    if (p.length() > nvars) throw BadInput("partition too long for the variable count");
    std::vector<int> e = p.padded(nvars);
    std::sort(e.begin(), e.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

namespace {

void gather_preceding(const Partition& lam, int n, size_t j, std::vector<int>& cur,
                      std::vector<Partition>& out) {
    if (static_cast<int>(j) == n) {
        Partition mu(cur);
        if (precedes(mu, lam, n)) out.push_back(mu);
        return;
    }
    int cap = j == 0 ? lam.part(1) : std::min(cur[j - 1], lam.part(static_cast<int>(j) + 1));
    for (int v = 0; v <= cap; ++v) {
        cur[j] = v;
        gather_preceding(lam, n, j + 1, cur, out);
    }
}

}  // namespace

std::vector<Partition> preceding_partitions(const Partition& lam, int n) {
    std::vector<Partition> out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    gather_preceding(lam, n, 0, cur, out);
    return out;
}

}  // namespace symhyp
