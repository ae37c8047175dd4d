#include "legr/augcount.hpp"

#include "legr/dga.hpp"
#include "legr/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace legr {

namespace {

void need_prime(std::uint32_t p) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
}

BigInt bpow(long long b, int e) { return ipow(BigInt(b), static_cast<unsigned>(e)); }

}  // namespace

BigInt brute_count_trivial(const std::vector<int>& mu, std::uint32_t p, bool acyclic_only) {
    need_prime(p);
    const int n = static_cast<int>(mu.size());
    if (n > 6) throw Error(ErrorCode::InvalidArgument, "brute force limited to n <= 6");
    if (acyclic_only && n % 2) return 0;
    PrimeField f(p);
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mu[a] - mu[b] - 1 == 0) slots.emplace_back(a, b);
    std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n, 0));
    BigInt count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == slots.size()) {
            for (int a = 0; a < n; ++a)
                for (int b = a + 2; b < n; ++b) {
                    std::uint32_t s = 0;
                    for (int c = a + 1; c < b; ++c) s = f.add(s, f.mul(m[a][c], m[c][b]));
                    if (s) return;
                }
            if (acyclic_only && 2 * rank_mod_p(m, f) != n) return;
            ++count;
            return;
        }
        auto [a, b] = slots[k];
        for (std::uint32_t x = 0; x < p; ++x) {
            m[a][b] = x;
            rec(k + 1);
        }
        m[a][b] = 0;
    };
    rec(0);
    return count;
}

BigInt formula_count_trivial(const std::vector<int>& mu, std::uint32_t p, bool acyclic_only) {
    BigInt total = 0;
    for (const auto& partner : enumerate_involutions(mu, !acyclic_only)) {
        int lower = 0;
        for (int a = 1; a < static_cast<int>(partner.size()); ++a) lower += partner[a] < a;
        total += bpow(p - 1, lower) * bpow(p, A_b(partner, mu));
    }
    return total;
}

BigInt brute_count_vertex(int l, int r, const std::vector<int>& mu_v, std::uint32_t p) {
    need_prime(p);
    if ((l + r) % 2) return 0;
    return count_augmentations(build_internal_dga(l, r, mu_v).dga, p);
}

BigInt formula_count_vertex(int l, int r, const std::vector<int>& mu_v, std::uint32_t p) {
    const int n = l + r;
    if (n % 2) return 0;
    BigInt total = 0;
    for (const auto& rho : enumerate_vertex_rulings(l, r, mu_v)) total += bpow(p - 1, n / 2) * bpow(p, A_v(rho, mu_v));
    return total;
}

std::vector<std::string> normal_form_violations(const FrontDiagram& d) {
    SliceTrace t = validate(d);
    std::vector<std::string> out;
    for (std::size_t k = 0; k < d.events.size(); ++k) {
        const SliceEvent& e = d.events[k];
        std::string at = "event " + std::to_string(k);
        if (e.kind == EventKind::RightCusp && !e.basepoint) out.push_back(at + ": right cusp without base point");
        if (e.kind == EventKind::Vertex) {
            if (e.left != 0) out.push_back(at + ": vertex of type (" + std::to_string(e.left) + "," + std::to_string(e.right) + ")");
            if (e.pos + e.left - 1 != static_cast<int>(t.mu[k].size()))
                out.push_back(at + ": vertex is not at the bottom of its slice");
        }
    }
    return out;
}

bool in_normal_form(const FrontDiagram& d) { return normal_form_violations(d).empty(); }

AugReport aug_number(const FrontDiagram& d, const BorderRuling& rho_L, const BorderRuling& rho_R, long long q) {
    if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be at least 2");
    AugReport rep;
    rep.q = q;
    for (const auto& w : normal_form_violations(d)) rep.warnings.push_back("normal-form assumption violated: " + w);
    const int hb = b_hat(d);
    Rational qr(q), qm1(q - 1);
    for (const auto& ru : enumerate_rulings(d, rho_L, rho_R)) {
        Stratum s;
        s.phi = ru.phi;
        s.switches = ru.switches;
        s.chi = ru.chi;
        s.r = ru.r;
        s.A = ru.A;
        s.dim = -ru.chi + hb + ru.r + ru.A;
        s.count = qm1.pow(hb - ru.chi) * qr.pow(ru.r + ru.A);
        rep.count += s.count;
        rep.dim = std::max(rep.dim, s.dim);
        rep.strata.push_back(std::move(s));
    }
    rep.aug = rep.strata.empty() ? Rational(0) : rep.count * qr.pow(-rep.dim);
    return rep;
}

namespace {

// multiply an element of Q(sqrt q) by q^{h/2}
SqrtQValue times_q_half(const SqrtQValue& v, int h, long long q) {
    Rational qr(q);
    int e = h >= 0 ? h / 2 : -((-h + 1) / 2);
    SqrtQValue out{v.a * qr.pow(e), v.b * qr.pow(e)};
    if (h - 2 * e == 1) out = SqrtQValue{out.b * qr, out.a};
    return out;
}

}  // namespace

SqrtQValue normalized_aug(const FrontDiagram& d, const BorderRuling& rho_L, const BorderRuling& rho_R, long long q) {
    AugReport rep = aug_number(d, rho_L, rho_R, q);
    if (rep.strata.empty()) return {Rational(0), Rational(0)};
    QZPolynomial R = ruling_polynomial(d, rho_L, rho_R);
    int dd = max_deg_z_after_q_eq_z2(R), hb = b_hat(d);
    // q^{(d+B)/2} z^{-B} = q^{(d+2B)/2} (q-1)^{-B}
    SqrtQValue v{rep.aug * Rational(q - 1).pow(-hb), Rational(0)};
    return times_q_half(v, dd + 2 * hb, q);
}

TheoremReport verify_main_theorem(const FrontDiagram& d, const BorderRuling& rho_L, const BorderRuling& rho_R,
                                  const std::vector<long long>& qs) {
    TheoremReport rep;
    rep.R = ruling_polynomial(d, rho_L, rho_R);
    rep.b_hat = b_hat(d);
    if (!rep.R.is_zero()) rep.d = max_deg_z_after_q_eq_z2(rep.R);
    for (long long q : qs) {
        TheoremRow row;
        row.q = q;
        row.aug = aug_number(d, rho_L, rho_R, q).aug;
        if (rep.R.is_zero()) {
            row.predicted = {Rational(0), Rational(0)};
        } else {
            QZPolynomial scaled = rep.R * QZPolynomial::monomial(-(rep.d + rep.b_hat), rep.b_hat);
            row.predicted = eval_at_q_sqrt(scaled, q);
        }
        row.ok = row.predicted.b.is_zero() && row.predicted.a == row.aug;
        rep.ok = rep.ok && row.ok;
        rep.rows.push_back(row);
    }
    return rep;
}

BasepointReport verify_basepoint_independence(const FrontDiagram& d, const Site& site, const BorderRuling& rho_L,
                                              const BorderRuling& rho_R, long long q) {
    FrontDiagram split = split_basepoint(d, site);
    BasepointReport rep;
    rep.b_hat_before = b_hat(d);
    rep.b_hat_after = b_hat(split);
    rep.before = normalized_aug(d, rho_L, rho_R, q);
    rep.after = normalized_aug(split, rho_L, rho_R, q);
    rep.ok = rep.before == rep.after && rep.b_hat_after == rep.b_hat_before + 1;
    return rep;
}

PolynomialityReport verify_polynomiality(const FrontDiagram& d, const BorderRuling& rho_L,
                                         const BorderRuling& rho_R, const std::vector<long long>& qs) {
    PolynomialityReport rep;
    rep.qs = qs;
    AugReport first = aug_number(d, rho_L, rho_R, qs.empty() ? 2 : qs.front());
    rep.dim = first.dim;
    // one spare point beyond what the degree needs
    std::uint32_t next = qs.empty() ? 2 : static_cast<std::uint32_t>(*std::max_element(qs.begin(), qs.end())) + 1;
    while (static_cast<int>(rep.qs.size()) < rep.dim + 2) {
        while (!is_prime(next)) ++next;
        rep.qs.push_back(next++);
    }
    std::vector<Rational> xs;
    for (long long q : rep.qs) {
        xs.emplace_back(q);
        rep.counts.push_back(aug_number(d, rho_L, rho_R, q).count);
    }
    rep.coefficients = interpolate(xs, rep.counts);
    for (int k = static_cast<int>(rep.coefficients.size()) - 1; k >= 0; --k)
        if (!rep.coefficients[k].is_zero()) {
            rep.degree = k;
            break;
        }
    rep.ok = rep.degree == rep.dim;
    return rep;
}

}  // namespace legr
