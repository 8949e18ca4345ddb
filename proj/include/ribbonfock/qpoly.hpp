// Dense univariate polynomials over the rationals and their fraction field.
// Internal utility for solving the bar involution; results are converted
// back to exact Laurent polynomials (the conversion asserts integrality).
#pragma once

#include <stdexcept>
#include <vector>

#include "ribbonfock/ints.hpp"
#include "ribbonfock/laurent.hpp"

namespace ribbonfock {

struct QPoly {
    std::vector<BigRat> c;  // c[i] is the coefficient of v^i

    QPoly() = default;
    explicit QPoly(const BigRat& a) {
        if (a != 0) c = {a};
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        QPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), BigRat(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        QPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), BigRat(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        QPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, BigRat(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }

    /// Euclidean division; returns {quotient, remainder}.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
        if (d.is_zero()) throw std::domain_error("QPoly: division by zero");
        QPoly r = *this, q;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int sh = r.degree() - d.degree();
            BigRat f = r.c.back() / d.c.back();
            if (static_cast<int>(q.c.size()) < sh + 1) q.c.resize(sh + 1, BigRat(0));
            q.c[sh] += f;
            for (size_t i = 0; i < d.c.size(); ++i) r.c[i + sh] -= f * d.c[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    static QPoly gcd(QPoly a, QPoly b) {
        while (!b.is_zero()) {
            QPoly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) {  // monic normalization
            BigRat lead = a.c.back();
            for (auto& x : a.c) x /= lead;
        }
        return a;
    }
};

/// Fraction num/den of rational polynomials in v, gcd-reduced with monic
/// denominator.  Embeds Laurent polynomials via v^k denominators.
struct QRat {
    QPoly num, den;

    QRat() : den(QPoly(BigRat(1))) {}
    explicit QRat(const BigRat& a) : num(QPoly(a)), den(QPoly(BigRat(1))) {}
    QRat(QPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    static QRat from_laurent(const Laurent& p) {
        QRat r(BigRat(0));
        int shift = std::min(0, p.min_exp());
        QPoly n;
        n.c.assign(p.max_exp() - shift + 1, BigRat(0));
        for (const auto& [e, a] : p.terms()) n.c[e - shift] = BigRat(a);
        n.trim();
        QPoly d;
        d.c.assign(-shift + 1, BigRat(0));
        d.c[-shift] = 1;
        return QRat(std::move(n), std::move(d));
    }

    /// Conversion back to Laurent; throws unless den is a monomial and all
    /// resulting coefficients are integers.
    Laurent to_laurent() const {
        if (num.is_zero()) return {};
        int k = 0;
        for (int i = 0; i <= den.degree(); ++i) {
            if (den.c[i] != 0) {
                if (i != den.degree()) throw std::domain_error("QRat: denominator not a monomial");
                k = i;
            }
        }
        BigRat lead = den.c[k];
        Laurent out;
        for (int i = 0; i <= num.degree(); ++i) {
            BigRat q = num.c[i] / lead;
            if (q == 0) continue;
            if (q.get_den() != 1) throw std::domain_error("QRat: non-integral coefficient");
            out += Laurent::monomial(BigInt(q.get_num()), i - k);
        }
        return out;
    }

    bool is_zero() const { return num.is_zero(); }

    void reduce() {
        if (den.is_zero()) throw std::domain_error("QRat: zero denominator");
        if (num.is_zero()) {
            den = QPoly(BigRat(1));
            return;
        }
        QPoly g = QPoly::gcd(num, den);
        if (g.degree() > 0) {
            num = num.divmod(g).first;
            den = den.divmod(g).first;
        }
        BigRat lead = den.c.back();
        if (lead != 1) {
            for (auto& x : num.c) x /= lead;
            for (auto& x : den.c) x /= lead;
        }
    }

    friend QRat operator+(const QRat& a, const QRat& b) {
        return QRat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend QRat operator-(const QRat& a, const QRat& b) {
        return QRat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend QRat operator*(const QRat& a, const QRat& b) {
        return QRat(a.num * b.num, a.den * b.den);
    }
    friend QRat operator/(const QRat& a, const QRat& b) {
        if (b.is_zero()) throw std::domain_error("QRat: division by zero");
        return QRat(a.num * b.den, a.den * b.num);
    }
};

/// Solves A X = B over the fraction field by Gaussian elimination.
/// A is square; throws if singular.
inline std::vector<std::vector<QRat>> qrat_solve(std::vector<std::vector<QRat>> a,
                                                 std::vector<std::vector<QRat>> b) {
    const size_t n = a.size();
    const size_t m = b.empty() ? 0 : b[0].size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("qrat_solve: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        QRat inv = QRat(BigRat(1)) / a[col][col];
        for (size_t j = col; j < n; ++j) a[col][j] = a[col][j] * inv;
        for (size_t j = 0; j < m; ++j) b[col][j] = b[col][j] * inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            QRat f = a[row][col];
            for (size_t j = col; j < n; ++j) a[row][j] = a[row][j] - f * a[col][j];
            for (size_t j = 0; j < m; ++j) b[row][j] = b[row][j] - f * b[col][j];
        }
    }
    return b;
}

} // namespace ribbonfock
