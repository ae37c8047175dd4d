#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace legr {

using BigInt = boost::multiprecision::cpp_int;

BigInt ipow(const BigInt& base, unsigned e);

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
    Rational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }

    // integer powers, negative allowed for nonzero values
    Rational pow(int e) const;
    std::string str() const;

private:
    void normalize();
    BigInt num_;
    BigInt den_;
};

// Laurent polynomial in q^{1/2} and z. A term (h, k) means q^{h/2} z^k.
class QZPolynomial {
public:
    using Key = std::pair<int, int>;

    QZPolynomial() = default;
    static QZPolynomial constant(std::int64_t c);
    static QZPolynomial monomial(int h, int k, std::int64_t c = 1);
    static QZPolynomial z();
    static QZPolynomial q_half();

    const std::map<Key, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t coeff(int h, int k) const;
    void add_term(int h, int k, std::int64_t c);

    QZPolynomial operator+(const QZPolynomial& o) const;
    QZPolynomial operator-(const QZPolynomial& o) const;
    QZPolynomial operator*(const QZPolynomial& o) const;
    QZPolynomial& operator+=(const QZPolynomial& o);
    bool operator==(const QZPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const QZPolynomial& o) const { return terms_ != o.terms_; }

    QZPolynomial pow(unsigned e) const;
    std::string str() const;

private:
    std::map<Key, std::int64_t> terms_;
};

// z -> q^{1/2} - q^{-1/2}. Needs nonnegative z powers (InvalidArgument otherwise).
QZPolynomial substitute_z(const QZPolynomial& p);

// Element a + b*sqrt(q) of Q(sqrt q).
struct SqrtQValue {
    Rational a;
    Rational b;
    bool operator==(const SqrtQValue& o) const { return a == o.a && b == o.b; }
};

// Exact value at a numeric q, with z read as (q - 1)/sqrt(q).
SqrtQValue eval_at_q_sqrt(const QZPolynomial& p, long long q);
// Same but rational; IrrationalEvaluation if a sqrt(q) part survives and q is not a square.
Rational eval_at_q(const QZPolynomial& p, long long q);

// q -> z^2, top z degree. ZeroPolynomial if p == 0.
int max_deg_z_after_q_eq_z2(const QZPolynomial& p);

// prime field arithmetic, residues kept in [0, p)
bool is_prime(std::uint32_t p);

class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);
    std::uint32_t p() const { return p_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
    std::uint32_t neg(std::uint32_t a) const { return (p_ - a) % p_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t from_int(long long v) const;

private:
    std::uint32_t p_;
};

// rank of a matrix over F_p (rows of residues)
int rank_mod_p(std::vector<std::vector<std::uint32_t>> m, const PrimeField& f);

// rational Lagrange interpolation through (x_i, y_i); coefficients low to high
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace legr
