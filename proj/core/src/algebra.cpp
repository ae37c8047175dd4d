#include "legr/algebra.hpp"

#include "legr/errors.hpp"

#include <sstream>

namespace legr {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::InvalidArgument, "coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::InvalidArgument, "coefficient overflow");
    return r;
}

std::int64_t binom(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

// floor division for exponent halving
int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

}  // namespace

BigInt ipow(const BigInt& base, unsigned e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}
Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::pow(int e) const {
    if (e >= 0) return Rational(ipow(num_, unsigned(e)), ipow(den_, unsigned(e)));
    if (num_ == 0) throw Error(ErrorCode::InvalidArgument, "zero to a negative power");
    return Rational(ipow(den_, unsigned(-e)), ipow(num_, unsigned(-e)));
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

QZPolynomial QZPolynomial::constant(std::int64_t c) { return monomial(0, 0, c); }

QZPolynomial QZPolynomial::monomial(int h, int k, std::int64_t c) {
    QZPolynomial p;
    p.add_term(h, k, c);
    return p;
}

QZPolynomial QZPolynomial::z() { return monomial(0, 1); }
QZPolynomial QZPolynomial::q_half() { return monomial(1, 0); }

std::int64_t QZPolynomial::coeff(int h, int k) const {
    auto it = terms_.find({h, k});
    return it == terms_.end() ? 0 : it->second;
}

void QZPolynomial::add_term(int h, int k, std::int64_t c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(Key{h, k}, c);
    if (fresh) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

QZPolynomial& QZPolynomial::operator+=(const QZPolynomial& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

QZPolynomial QZPolynomial::operator+(const QZPolynomial& o) const {
    QZPolynomial r = *this;
    r += o;
    return r;
}

QZPolynomial QZPolynomial::operator-(const QZPolynomial& o) const {
    QZPolynomial r = *this;
    for (const auto& [key, c] : o.terms_) r.add_term(key.first, key.second, -c);
    return r;
}

QZPolynomial QZPolynomial::operator*(const QZPolynomial& o) const {
    QZPolynomial r;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_)
            r.add_term(a.first + b.first, a.second + b.second, checked_mul(ca, cb));
    return r;
}

QZPolynomial QZPolynomial::pow(unsigned e) const {
    QZPolynomial r = constant(1), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

std::string QZPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        auto [h, k] = key;
        std::int64_t mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool unit = (h == 0 && k == 0);
        if (mag != 1 || unit) os << mag;
        bool need_dot = (mag != 1 && !unit);
        if (h != 0) {
            if (need_dot) os << "*";
            if (h % 2 == 0) {
                os << "q";
                if (h != 2) os << "^" << h / 2;
            } else {
                os << "q^(" << h << "/2)";
            }
            need_dot = true;
        }
        if (k != 0) {
            if (need_dot) os << "*";
            os << "z";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

QZPolynomial substitute_z(const QZPolynomial& p) {
    QZPolynomial r;
    for (const auto& [key, c] : p.terms()) {
        auto [h, k] = key;
        if (k < 0) throw Error(ErrorCode::InvalidArgument, "substitute_z needs nonnegative z powers");
        for (int j = 0; j <= k; ++j) {
            std::int64_t b = binom(k, j);
            if (j % 2) b = -b;
            r.add_term(h + k - 2 * j, 0, checked_mul(c, b));
        }
    }
    return r;
}

SqrtQValue eval_at_q_sqrt(const QZPolynomial& p, long long q) {
    if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be at least 2");
    SqrtQValue v{Rational(0), Rational(0)};
    Rational qr(q), qm1(q - 1);
    for (const auto& [key, c] : p.terms()) {
        auto [h, k] = key;
        int e = h - k;  // exponent of q^{1/2} after z = (q-1) q^{-1/2}
        Rational t = Rational(c) * qm1.pow(k) * qr.pow(floor_div2(e));
        if (e % 2 == 0)
            v.a += t;
        else
            v.b += t;
    }
    return v;
}

Rational eval_at_q(const QZPolynomial& p, long long q) {
    SqrtQValue v = eval_at_q_sqrt(p, q);
    if (v.b.is_zero()) return v.a;
    long long s = 0;
    while ((s + 1) * (s + 1) <= q) ++s;
    if (s * s != q)
        throw Error(ErrorCode::IrrationalEvaluation,
                    "half-integer power of q survives at q=" + std::to_string(q));
    return v.a + v.b * Rational(s);
}

int max_deg_z_after_q_eq_z2(const QZPolynomial& p) {
    std::map<int, std::int64_t> byz;
    for (const auto& [key, c] : p.terms()) byz[key.first + key.second] += c;
    for (auto it = byz.rbegin(); it != byz.rend(); ++it)
        if (it->second != 0) return it->first;
    throw Error(ErrorCode::ZeroPolynomial, "polynomial vanishes under q = z^2");
}

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
    // Fermat
    std::uint64_t r = 1, b = a % p_;
    std::uint32_t e = p_ - 2;
    while (e) {
        if (e & 1u) r = r * b % p_;
        b = b * b % p_;
        e >>= 1u;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += p_;
    return static_cast<std::uint32_t>(m);
}

int rank_mod_p(std::vector<std::vector<std::uint32_t>> m, const PrimeField& f) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        std::uint32_t inv = f.inv(m[rank][c]);
        for (auto& x : m[rank]) x = f.mul(x, inv);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || !m[r][c]) continue;
            std::uint32_t factor = m[r][c];
            for (int k = 0; k < cols; ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[rank][k]));
        }
        ++rank;
    }
    return rank;
}

std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        // basis polynomial for node i
        std::vector<Rational> basis{Rational(1)};
        Rational denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] += -(basis[k] * xs[j]);
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        Rational scale = ys[i] / denom;
        for (std::size_t k = 0; k < n; ++k) out[k] += basis[k] * scale;
    }
    return out;
}

const char* error_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::PotentialMismatchAtRightCusp: return "PotentialMismatchAtRightCusp";
    case ErrorCode::EmptyVertex: return "EmptyVertex";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::PotentialMismatch: return "PotentialMismatch";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::InvalidSite: return "InvalidSite";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::IrrationalEvaluation: return "IrrationalEvaluation";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::InvalidInvolution: return "InvalidInvolution";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace legr
