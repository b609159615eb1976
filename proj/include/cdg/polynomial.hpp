#ifndef CDG_POLYNOMIAL_HPP
#define CDG_POLYNOMIAL_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "cdg/rational.hpp"

namespace cdg {

/* Dense polynomial over a commutative ring R (R = Rational, or Polynomial
 * again for extra variables). Trailing zeros are trimmed, so the zero
 * polynomial has an empty coefficient vector and degree() == -1. */
template <class R>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<R> cs) : coeffs_(cs) { trim(); }
    explicit Polynomial(std::vector<R> cs) : coeffs_(std::move(cs)) { trim(); }

    static Polynomial monomial(const R& c, int k) {
        std::vector<R> cs(static_cast<size_t>(k) + 1, R{});
        cs.back() = c;
        return Polynomial(std::move(cs));
    }
    static Polynomial constant(const R& c) { return Polynomial(std::vector<R>{c}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    const R& coeff(int k) const {
        static const R zero{};
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
        return coeffs_[static_cast<size_t>(k)];
    }
    void set_coeff(int k, R v) {
        if (k >= static_cast<int>(coeffs_.size())) coeffs_.resize(static_cast<size_t>(k) + 1, R{});
        coeffs_[static_cast<size_t>(k)] = std::move(v);
        trim();
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<R> out(std::max(a.coeffs_.size(), b.coeffs_.size()), R{});
        for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] = out[i] + b.coeffs_[i];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<R> out(std::max(a.coeffs_.size(), b.coeffs_.size()), R{});
        for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] = out[i] - b.coeffs_[i];
        return Polynomial(std::move(out));
    }
    Polynomial operator-() const {
        std::vector<R> out(coeffs_.size());
        for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R{});
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == R{}) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const R& c, const Polynomial& p) {
        std::vector<R> out(p.coeffs_.size());
        for (size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = c * p.coeffs_[i];
        return Polynomial(std::move(out));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<R> out(coeffs_.size() - 1);
        for (size_t k = 1; k < coeffs_.size(); ++k)
            out[k - 1] = int_scale(coeffs_[k], static_cast<long>(k));
        return Polynomial(std::move(out));
    }

    /* drop the polynomial's t-degrees above cap (used by genus-capped series work) */
    Polynomial truncated(int cap) const {
        if (degree() <= cap) return *this;
        std::vector<R> out(coeffs_.begin(), coeffs_.begin() + cap + 1);
        return Polynomial(std::move(out));
    }

private:
    static R int_scale(const R& v, long k) {
        R acc{};
        R kv = v;  // v * k by repeated doubling to stay ring-generic
        long n = k;
        while (n > 0) {
            if (n & 1) acc = acc + kv;
            kv = kv + kv;
            n >>= 1;
        }
        return acc;
    }
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == R{}) coeffs_.pop_back();
    }
    std::vector<R> coeffs_;
};

using Poly = Polynomial<Rational>;       // polynomial in one variable (y or t)
using Poly2 = Polynomial<Poly>;          // polynomial in two variables (t outer, e inner)

inline Poly poly_from_ints(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    v.reserve(cs.size());
    for (long c : cs) v.emplace_back(c);
    return Poly(std::move(v));
}

inline Rational eval_rational(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k);
    return acc;
}

inline long double eval_long_double(const Poly& p, long double x) {
    long double acc = 0;
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + to_long_double(p.coeff(k));
    return acc;
}

}  // namespace cdg

#endif
