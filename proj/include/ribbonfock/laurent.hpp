// Laurent polynomials in one variable v over arbitrary-precision integers.
//
// Canonical form: a sorted exponent -> coefficient map holding no zero
// coefficients, so structural equality is mathematical equality.
#pragma once

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

#include "ribbonfock/ints.hpp"

namespace ribbonfock {

class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const BigInt& constant) {
        if (constant != 0) c_[0] = constant;
    }
    explicit Laurent(long constant) : Laurent(BigInt(constant)) {}

    /// c * v^k
    static Laurent monomial(const BigInt& c, int k) {
        Laurent p;
        if (c != 0) p.c_[k] = c;
        return p;
    }
    static Laurent one() { return Laurent(1); }

    bool is_zero() const { return c_.empty(); }
    bool operator==(const Laurent& o) const { return c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    const std::map<int, BigInt>& terms() const { return c_; }

    BigInt coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? BigInt(0) : it->second;
    }

    int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, a] : o.c_) add_term(e, a);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, a] : o.c_) add_term(e, -a);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    Laurent operator-() const {
        Laurent r;
        for (const auto& [e, a] : c_) r.c_[e] = -a;
        return r;
    }

    /// Substitution v -> v^-1.
    Laurent bar() const {
        Laurent r;
        for (const auto& [e, a] : c_) r.c_[-e] = a;
        return r;
    }

    /// Sum of all coefficients (evaluation at v = 1).
    BigInt eval_one() const {
        BigInt s = 0;
        for (const auto& [e, a] : c_) s += a;
        return s;
    }

    /// Exact division; throws if the divisor does not divide exactly.
    Laurent exact_div(const Laurent& d) const {
        if (d.is_zero()) throw std::domain_error("Laurent: division by zero");
        Laurent rem = *this, q;
        // Peel leading terms against the divisor's leading term.
        const int de = d.max_exp();
        const BigInt& dc = d.c_.rbegin()->second;
        while (!rem.is_zero()) {
            const int re = rem.max_exp();
            const BigInt rc = rem.coeff(re);
            BigInt qc, r;
            mpz_fdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rc.get_mpz_t(), dc.get_mpz_t());
            if (r != 0) throw std::domain_error("Laurent: inexact division");
            Laurent t = monomial(qc, re - de);
            q += t;
            rem -= t * d;
            if (!rem.is_zero() && rem.max_exp() >= re)
                throw std::domain_error("Laurent: inexact division");
        }
        return q;
    }

    /// Quantum integer [k] = v^{k-1} + v^{k-3} + ... + v^{1-k}.
    static Laurent quantum_int(int k) {
        Laurent r;
        for (int e = k - 1; e >= 1 - k; e -= 2) r.add_term(e, 1);
        return r;
    }
    /// [k]! = [1][2]...[k]
    static Laurent quantum_factorial(int k) {
        Laurent r = one();
        for (int i = 2; i <= k; ++i) r *= quantum_int(i);
        return r;
    }

    /// Rendering like "1 - v^-1 + 2v^3", terms in ascending exponent order.
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, a] : c_) {
            BigInt mag = abs(a);
            if (first) {
                if (a < 0) s += "-";
                first = false;
            } else {
                s += (a < 0) ? " - " : " + ";
            }
            std::string mono;
            if (e == 0) {
                mono = mag.get_str();
            } else {
                if (mag != 1) mono += mag.get_str();
                mono += "v";
                if (e != 1) mono += "^" + std::to_string(e);
            }
            s += mono;
        }
        return s;
    }

    /// Inverse of to_string (also accepts "*" between coefficient and v).
    static Laurent parse(const std::string& text);

private:
    void add_term(int e, const BigInt& a) {
        if (a == 0) return;
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_[e] = a;
        } else {
            it->second += a;
            if (it->second == 0) c_.erase(it);
        }
    }

    std::map<int, BigInt> c_;
};

inline Laurent Laurent::parse(const std::string& text) {
    Laurent r;
    size_t i = 0;
    const size_t n = text.size();
    auto skip_ws = [&] { while (i < n && text[i] == ' ') ++i; };
    skip_ws();
    if (i == n) return r;
    bool any = false;
    int sign = 1;
    if (text[i] == '-') { sign = -1; ++i; } else if (text[i] == '+') ++i;
    for (;;) {
        skip_ws();
        std::string digits;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        bool has_coeff = !digits.empty();
        if (i < n && text[i] == '*') ++i;
        int exp = 0;
        bool has_v = false;
        if (i < n && text[i] == 'v') {
            has_v = true;
            ++i;
            exp = 1;
            if (i < n && text[i] == '^') {
                ++i;
                int esign = 1;
                if (i < n && (text[i] == '-' || text[i] == '+')) {
                    if (text[i] == '-') esign = -1;
                    ++i;
                }
                std::string ed;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ed += text[i++];
                if (ed.empty()) throw std::invalid_argument("Laurent::parse: missing exponent");
                exp = esign * std::atoi(ed.c_str());
            }
        }
        if (!has_coeff && !has_v) throw std::invalid_argument("Laurent::parse: empty term");
        BigInt c = has_coeff ? BigInt(digits) : BigInt(1);
        r += monomial(sign * c, has_v ? exp : 0);
        any = true;
        skip_ws();
        if (i == n) break;
        if (text[i] == '+') { sign = 1; ++i; }
        else if (text[i] == '-') { sign = -1; ++i; }
        else throw std::invalid_argument("Laurent::parse: unexpected character");
    }
    if (!any) throw std::invalid_argument("Laurent::parse: no terms");
    return r;
}

} // namespace ribbonfock
