// Test-side reference computations. Written from the definitions and kept
// free of library calls so they can referee the library.
#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace oracle {

using Pairing = std::vector<int>;  // 1-based partner table, p[a] == a for a fixed point

inline long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Unit steps of the spiral: leaving label l or label n crosses the y-axis once,
// and leaving n crosses it twice when one side is empty.
inline int sector_count(int l, int r, int a, int i) {
    const int n = l + r;
    int total = 0, cur = a;
    for (int k = 0; k < i; ++k) {
        if (l == 0 || r == 0)
            total += cur == n ? 2 : 0;
        else
            total += (cur == l) + (cur == n);
        cur = cur % n + 1;
    }
    return total;
}

inline int degree(const std::vector<int>& mu, int l, int r, int a, int i) {
    const int n = l + r;
    int b = (a - 1 + i) % n + 1;
    return mu[a - 1] - mu[b - 1] + sector_count(l, r, a, i) - 1;
}

// every involution of {1..n}; fixed points optional, pairs need mu(a) - mu(b) = 1
inline std::vector<Pairing> involutions(const std::vector<int>& mu, bool fixed_points) {
    const int n = static_cast<int>(mu.size());
    std::vector<Pairing> out;
    Pairing p(n + 1, 0);
    std::function<void()> rec = [&]() {
        int a = 1;
        while (a <= n && p[a]) ++a;
        if (a > n) {
            out.push_back(p);
            return;
        }
        if (fixed_points) {
            p[a] = a;
            rec();
            p[a] = 0;
        }
        for (int b = a + 1; b <= n; ++b) {
            if (p[b] || mu[a - 1] - mu[b - 1] != 1) continue;
            p[a] = b;
            p[b] = a;
            rec();
            p[a] = p[b] = 0;
        }
    };
    rec();
    return out;
}

inline int A_b(const Pairing& p, const std::vector<int>& mu) {
    const int n = static_cast<int>(mu.size());
    auto rho = [&](int i) { return p[i] == i ? 1000000 : p[i]; };
    int total = 0;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> I;
        for (int j = i + 1; j <= n; ++j)
            if (mu[j - 1] == mu[i - 1]) I.push_back(j);
        if (p[i] < i) {
            total += static_cast<int>(I.size());
        } else {
            for (int j : I)
                if (p[j] > j && rho(j) < rho(i)) ++total;
        }
    }
    return total;
}

// every strictly upper triangular matrix over F_p supported on degree-0 slots,
// counted when d^2 = 0 (and, if asked, rank n/2)
inline long long morse_complexes(const std::vector<int>& mu, int p, bool acyclic) {
    const int n = static_cast<int>(mu.size());
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mu[a] - mu[b] == 1) slots.emplace_back(a, b);
    long long total = 0, combos = ipow(p, static_cast<int>(slots.size()));
    for (long long code = 0; code < combos; ++code) {
        std::vector<std::vector<long long>> d(n, std::vector<long long>(n, 0));
        long long c = code;
        for (auto [a, b] : slots) {
            d[a][b] = c % p;
            c /= p;
        }
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) {
                long long s = 0;
                for (int k = 0; k < n; ++k) s += d[a][k] * d[k][b];
                ok = s % p == 0;
            }
        if (!ok) continue;
        if (acyclic) {
            // Gaussian elimination mod p
            auto m = d;
            int rank = 0;
            for (int col = 0; col < n && rank < n; ++col) {
                int piv = -1;
                for (int row = rank; row < n; ++row)
                    if (m[row][col] % p) piv = row;
                if (piv < 0) continue;
                std::swap(m[piv], m[rank]);
                long long inv = 1;
                while ((m[rank][col] * inv) % p != 1) ++inv;
                for (int row = 0; row < n; ++row) {
                    if (row == rank || m[row][col] % p == 0) continue;
                    long long f = (m[row][col] * inv) % p;
                    for (int k = 0; k < n; ++k) m[row][k] = ((m[row][k] - f * m[rank][k]) % p + p) % p;
                }
                ++rank;
            }
            if (2 * rank != n) continue;
        }
        ++total;
    }
    return total;
}

// closed form for the six-valent example: numerator over q^12
inline std::pair<long long, long long> lambda_aug(long long q) {
    long long a = q - 1;
    long long num = (a * a * a + q * a) * a * a * a * ipow(q, 6) + 2 * ipow(a, 5) * ipow(q, 6) +
                    2 * ipow(a, 4) * ipow(q, 6) + ipow(a, 3) * ipow(q, 6);
    return {num, ipow(q, 12)};
}

}  // namespace oracle
