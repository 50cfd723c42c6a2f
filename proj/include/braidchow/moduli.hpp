#pragma once

// The series M = sum_{n>=2} M_n(t) of genus-zero open moduli spaces,
// built from twisted point counts of configuration spaces of the affine
// line.  Fixing marking 0 at infinity identifies M_{0,n+1} with
// Conf_n(A^1) modulo the affine group, which acts freely and contributes
// the factor q(q-1).  The weight variable q is read as t.

#include <braidchow/combinatorics.hpp>
#include <braidchow/graded_series.hpp>
#include <braidchow/symseries.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace braidchow {

inline int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

/// Number of monic irreducible degree-d polynomials over F_q:
/// (1/d) sum_{e|d} mu(e) q^{d/e}.  Integer-valued, though the coefficients
/// themselves need not be integers.
inline Poly necklace(int d) {
    if (d < 1) throw std::invalid_argument("necklace: d must be positive");
    Poly sum;
    for (int e = 1; e <= d; ++e)
        if (d % e == 0 && mobius(e) != 0) sum += Poly::monomial(Rational(mobius(e)), static_cast<std::size_t>(d / e));
    Poly out = sum * Rational(1, d);
    // A degree-d polynomial is integer-valued iff it is so at d+1 consecutive integers.
    for (int q = 0; q <= d; ++q)
        if (!is_integer(out.eval(Rational(q))))
            throw divisibility_error("necklace(" + std::to_string(d) + ") is not integer-valued");
    return out;
}

/// Points of Conf_n(A^1) fixed by sigma composed with Frobenius, sigma of
/// cycle type lambda: prod_d d^{m_d} prod_{i<m_d} (necklace(d) - i).
inline Poly twisted_count(const Partition& lambda) {
    Poly out(1);
    auto m = lambda.multiplicities();
    for (std::size_t d = 1; d < m.size(); ++d) {
        if (m[d] == 0) continue;
        const Poly orbits = necklace(static_cast<int>(d));
        for (int i = 0; i < m[d]; ++i) out *= (orbits - Poly(i)) * Rational(static_cast<long>(d));
    }
    return out;
}

/// M_n = sum_{lambda |- n} twisted_count(lambda) / (q(q-1)) * p_lambda / z_lambda.
inline SymSeries m_component(int n, int n_max) {
    if (n < 2) throw std::invalid_argument("m_component: n must be at least 2");
    SymSeries out(n_max);
    for (const auto& lam : partitions_of(n)) {
        Poly count = twisted_count(lam);
        auto by_q = count.exact_divide_linear(Rational(0), "twisted count");
        auto quotient = by_q.exact_divide_linear(Rational(1), "twisted count");
        out.add_term(lam, quotient * (Rational(1) / Rational(z_lambda(lam))));
    }
    return out;
}
inline SymSeries m_component(int n) { return m_component(n, n); }

/// Throws std::logic_error if the structural invariants of M fail.
inline void check_m_series(const GradedSeries& m) {
    for (int n = 2; n <= m.n_max(); ++n) {
        const auto& mn = m.component(n);
        if (mn.t_degree() != n - 2)
            throw std::logic_error("M_" + std::to_string(n) + " has t-degree " + std::to_string(mn.t_degree()));
        Poly expected = omega(n).shift(Rational(-1)).exact_divide_linear(Rational(1), "omega_n(t-1)") *
                        (Rational(1) / Rational(factorial(static_cast<unsigned>(n))));
        if (mn.coefficient(Partition::ones(n)) != expected)
            throw std::logic_error("M_" + std::to_string(n) + " has the wrong p_(1^n) coefficient");
    }
    if (!m.component(0).is_zero() || (m.n_max() >= 1 && !m.component(1).is_zero()))
        throw std::logic_error("M has components below degree 2");
}

inline GradedSeries m_series(int n_max) {
    if (n_max < 2) throw std::invalid_argument("m_series: n_max must be at least 2");
    GradedSeries m(n_max);
    for (int n = 2; n <= n_max; ++n) m.set_component(n, m_component(n, n_max));
    check_m_series(m);
    return m;
}

}  // namespace braidchow
