#pragma once

#include <vector>

#include "symhyp/scalar.hpp"

namespace symhyp {

// Shifted factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
template <class K>
K pochhammer(const K& a, int k) {
    if (k < 0) throw BadInput("pochhammer: negative length");
    K r(1);
    for (int j = 0; j < k; ++j) r *= a + K(j);
    return r;
}

// q-shifted factorial (a;q)_k = (1-a)(1-aq)...(1-aq^{k-1}), with (a;q)_0 = 1.
template <class K>
K q_pochhammer(const K& a, const K& q, int k) {
    if (k < 0) throw BadInput("q_pochhammer: negative length");
    K r(1);
    K aq = a;
    for (int j = 0; j < k; ++j) {
        r *= K(1) - aq;
        aq *= q;
    }
    return r;
}

// Elementary symmetric polynomial e_m of a list of scalar values.
template <class K>
K elementary_sym(const std::vector<K>& vals, int m) {
    if (m < 0 || m > static_cast<int>(vals.size())) return K(0);
    std::vector<K> e(static_cast<size_t>(m) + 1, K(0));
    e[0] = K(1);
    for (const K& v : vals)
        for (int k = m; k >= 1; --k) e[static_cast<size_t>(k)] += v * e[static_cast<size_t>(k - 1)];
    return e[static_cast<size_t>(m)];
}

// Complete homogeneous symmetric polynomial h_m of a list of scalar values.
template <class K>
K complete_sym(const std::vector<K>& vals, int m) {
    if (m < 0) return K(0);
    if (vals.empty()) return m == 0 ? K(1) : K(0);
    std::vector<K> h(static_cast<size_t>(m) + 1, K(0));
    h[0] = K(1);
    // h_k(x_1..x_s) = h_k(x_1..x_{s-1}) + x_s h_{k-1}(x_1..x_s)
    for (const K& v : vals)
        for (int k = 1; k <= m; ++k)
            h[static_cast<size_t>(k)] += v * h[static_cast<size_t>(k - 1)];
    return h[static_cast<size_t>(m)];
}

}  // namespace symhyp
