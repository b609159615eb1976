#ifndef CDG_SERIES_HPP
#define CDG_SERIES_HPP

#include <functional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cdg/errors.hpp"
#include "cdg/polynomial.hpp"

namespace cdg {

namespace ring {

template <class R>
struct traits;

template <>
struct traits<Rational> {
    static Rational one() { return Rational(1); }
    static Rational scale(const Rational& v, long k) { return Rational(k) * v; }
};
template <>
struct traits<long double> {
    static long double one() { return 1.0L; }
    static long double scale(long double v, long k) { return static_cast<long double>(k) * v; }
};
template <class R>
struct traits<Polynomial<R>> {
    static Polynomial<R> one() { return Polynomial<R>::constant(traits<R>::one()); }
    static Polynomial<R> scale(const Polynomial<R>& v, long k) {
        std::vector<R> out;
        out.reserve(static_cast<size_t>(v.degree()) + 1);
        for (int i = 0; i <= v.degree(); ++i) out.push_back(traits<R>::scale(v.coeff(i), k));
        return Polynomial<R>(std::move(out));
    }
};

/* trim products of genus-marking polynomials to a cap; pass-through for scalars */
template <class R>
inline R cap(R v, int /*tcap*/) { return v; }
template <class R>
inline Polynomial<R> cap(Polynomial<R> v, int tcap) {
    return tcap < 0 ? v : v.truncated(tcap);
}

inline Rational reciprocal(const Rational& c, int /*tcap*/) {
    if (sgn(c) == 0) throw ZeroConstantTerm("series constant term is zero");
    return 1 / c;
}
inline long double reciprocal(long double c, int /*tcap*/) {
    if (c == 0.0L) throw ZeroConstantTerm("series constant term is zero");
    return 1.0L / c;
}
/* the constant term may be a polynomial in the genus marker; it is invertible
 * as a t-truncated series when its own constant coefficient is nonzero */
template <class R>
inline Polynomial<R> reciprocal(const Polynomial<R>& c, int tcap) {
    if (c.coeff(0) == R{})
        throw ZeroConstantTerm("bivariate constant term has zero t^0 coefficient");
    R lead = reciprocal(c.coeff(0), -1);
    if (c.degree() <= 0) return Polynomial<R>::constant(lead);
    if (tcap < 0)
        throw ZeroConstantTerm("non-scalar constant term needs a finite t-cap to invert");
    std::vector<R> out(static_cast<size_t>(tcap) + 1, R{});
    out[0] = lead;
    for (int n = 1; n <= tcap; ++n) {
        R s{};
        for (int k = 1; k <= n && k <= c.degree(); ++k)
            s = s + c.coeff(k) * out[static_cast<size_t>(n - k)];
        out[static_cast<size_t>(n)] = -(lead * s);
    }
    return Polynomial<R>(std::move(out));
}

}  // namespace ring

/* Truncated power series over ring R: coefficients for exponents 0..order().
 * The order is part of the value; binary operations truncate to the smaller
 * order, and coeff() refuses to read past it instead of inventing zeros. */
template <class R>
class Series {
public:
    Series() : coeffs_(1, R{}) {}
    explicit Series(int order) {
        if (order < 0) throw BadInput("negative series order");
        coeffs_.assign(static_cast<size_t>(order) + 1, R{});
    }
    Series(std::vector<R> cs, int order) : coeffs_(std::move(cs)) {
        if (order < 0) throw BadInput("negative series order");
        coeffs_.resize(static_cast<size_t>(order) + 1, R{});
    }

    static Series constant(const R& c, int order) {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }
    static Series identity(int order) {  // the series "u"
        Series s(order);
        if (order >= 1) s.coeffs_[1] = ring::traits<R>::one();
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const R& coeff(int k) const {
        if (k < 0 || k > order())
            throw OrderTooLow("coefficient index " + std::to_string(k) +
                              " beyond series order " + std::to_string(order()));
        return coeffs_[static_cast<size_t>(k)];
    }
    void set_coeff(int k, R v) {
        if (k < 0 || k > order()) throw OrderTooLow("coefficient index beyond order");
        coeffs_[static_cast<size_t>(k)] = std::move(v);
    }
    const std::vector<R>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const R& c : coeffs_)
            if (!(c == R{})) return false;
        return true;
    }

    Series truncated(int new_order) const {
        if (new_order >= order()) return *this;
        return Series(std::vector<R>(coeffs_.begin(), coeffs_.begin() + new_order + 1), new_order);
    }

    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    std::vector<R> coeffs_;
};

template <class R>
Series<R> add(const Series<R>& a, const Series<R>& b) {
    int n = std::min(a.order(), b.order());
    Series<R> out(n);
    for (int k = 0; k <= n; ++k) out.set_coeff(k, a.coeff(k) + b.coeff(k));
    return out;
}

template <class R>
Series<R> sub(const Series<R>& a, const Series<R>& b) {
    int n = std::min(a.order(), b.order());
    Series<R> out(n);
    for (int k = 0; k <= n; ++k) out.set_coeff(k, a.coeff(k) - b.coeff(k));
    return out;
}

template <class R>
Series<R> neg(const Series<R>& a) {
    Series<R> out(a.order());
    for (int k = 0; k <= a.order(); ++k) out.set_coeff(k, -a.coeff(k));
    return out;
}

/* tcap < 0 means "no genus cap"; for scalar rings it is ignored */
template <class R>
Series<R> mul(const Series<R>& a, const Series<R>& b, int tcap = -1) {
    int n = std::min(a.order(), b.order());
    std::vector<R> out(static_cast<size_t>(n) + 1, R{});
    for (int i = 0; i <= n; ++i) {
        const R& ai = a.coeff(i);
        if (ai == R{}) continue;
        for (int j = 0; j + i <= n; ++j) {
            const R& bj = b.coeff(j);
            if (bj == R{}) continue;
            out[static_cast<size_t>(i + j)] = out[static_cast<size_t>(i + j)] + ring::cap(ai * bj, tcap);
        }
    }
    return Series<R>(std::move(out), n);
}

template <class R>
Series<R> invert(const Series<R>& a, int tcap = -1) {
    int n = a.order();
    R lead = ring::reciprocal(a.coeff(0), tcap);
    std::vector<R> out(static_cast<size_t>(n) + 1, R{});
    out[0] = lead;
    for (int k = 1; k <= n; ++k) {
        R s{};
        for (int j = 1; j <= k; ++j) {
            const R& aj = a.coeff(j);
            if (aj == R{}) continue;
            s = s + ring::cap(aj * out[static_cast<size_t>(k - j)], tcap);
        }
        out[static_cast<size_t>(k)] = -ring::cap(lead * s, tcap);
    }
    return Series<R>(std::move(out), n);
}

/* compose(outer, inner): formal substitution via Horner; inner must have zero
 * constant term. outer may be any coefficient list (polynomial or series). */
template <class R>
Series<R> compose(const std::vector<R>& outer, const Series<R>& inner, int tcap = -1) {
    if (!(inner.coeff(0) == R{}))
        throw NonzeroConstantTerm("composition inner series has nonzero constant term");
    Series<R> out(inner.order());
    for (size_t i = outer.size(); i-- > 0;) {
        out = mul(out, inner, tcap);
        out.set_coeff(0, out.coeff(0) + outer[i]);
    }
    return out;
}

template <class R>
Series<R> compose(const Series<R>& outer, const Series<R>& inner, int tcap = -1) {
    return compose(outer.coeffs(), inner, tcap);
}

template <class R>
Series<R> derivative(const Series<R>& a) {
    if (a.order() == 0) return Series<R>(0);
    Series<R> out(a.order() - 1);
    for (int k = 1; k <= a.order(); ++k)
        out.set_coeff(k - 1, ring::traits<R>::scale(a.coeff(k), k));
    return out;
}

/* Fixed-point solve of H = step(H) by plain iteration. The u-adic contraction
 * fixes at least one more coefficient per pass, so the working order can ramp
 * with the pass number; the last pass at full order must reproduce its input
 * exactly, otherwise the equation was mis-specified. */
template <class R>
Series<R> solve_fixed_point(const std::function<Series<R>(const Series<R>&)>& step,
                            const Series<R>& seed, int target_order, bool ramp = true) {
    Series<R> h = seed.truncated(0);
    for (int k = 1; k <= target_order + 1; ++k) {
        int ord = ramp ? std::min(k, target_order) : target_order;
        Series<R> padded(h.coeffs(), ord);
        Series<R> next = step(padded);
        if (ord == target_order && next == padded) return next;
        h = next;
    }
    Series<R> last(h.coeffs(), target_order);
    if (step(last) == last) return last;
    throw NoConvergence("fixed point did not stabilize within " +
                        std::to_string(target_order + 2) + " iterations");
}

using SeriesQ = Series<Rational>;
using SeriesB = Series<Poly>;        // series in u, coefficients polynomials in t
using SeriesT = Series<Poly2>;       // series in u, coefficients polynomials in (t, e)
using SeriesF = Series<long double>;

/* ---- helpers specific to the bivariate shape ---- */

inline SeriesB lift(const SeriesQ& a) {
    SeriesB out(a.order());
    for (int k = 0; k <= a.order(); ++k)
        if (sgn(a.coeff(k)) != 0) out.set_coeff(k, Poly::constant(a.coeff(k)));
    return out;
}

/* [t^g] slice as a univariate series */
inline SeriesQ t_slice(const SeriesB& a, int g) {
    SeriesQ out(a.order());
    for (int k = 0; k <= a.order(); ++k) out.set_coeff(k, a.coeff(k).coeff(g));
    return out;
}

inline SeriesQ eval_t(const SeriesB& a, const Rational& t) {
    SeriesQ out(a.order());
    for (int k = 0; k <= a.order(); ++k) out.set_coeff(k, eval_rational(a.coeff(k), t));
    return out;
}

/* p(u) * t^j as a bivariate series */
inline SeriesB t_weighted(const Poly& p_of_u, int j, int order) {
    SeriesB out(order);
    for (int k = 0; k <= std::min(order, p_of_u.degree()); ++k)
        if (sgn(p_of_u.coeff(k)) != 0) out.set_coeff(k, Poly::monomial(p_of_u.coeff(k), j));
    return out;
}

/* compose a univariate polynomial with a bivariate inner series */
inline SeriesB compose_poly(const Poly& outer, const SeriesB& inner, int tcap = -1) {
    std::vector<Poly> cs;
    cs.reserve(static_cast<size_t>(outer.degree() < 0 ? 0 : outer.degree()) + 1);
    for (int k = 0; k <= outer.degree(); ++k) cs.push_back(Poly::constant(outer.coeff(k)));
    return compose(cs, inner, tcap);
}

inline void assert_integral(const SeriesQ& s, const char* what) {
    for (int k = 0; k <= s.order(); ++k)
        if (!is_integer(s.coeff(k)))
            throw InconsistentSystem(std::string(what) + ": non-integer coefficient at index " +
                                     std::to_string(k));
}

}  // namespace cdg

#endif
