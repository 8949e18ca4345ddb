// Partitions and their e-core / e-quotient combinatorics.
//
// The abacus convention used throughout: a partition with p parts is placed
// on b beads where b is the smallest multiple of e with b >= p, via beta
// numbers beta_i = lambda_i + b - i.  Runner r holds the beads congruent to
// r mod e and quotient component r is read off runner r.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ribbonfock {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : p_(std::move(parts)) {
        while (!p_.empty() && p_.back() == 0) p_.pop_back();
        for (size_t i = 0; i < p_.size(); ++i) {
            if (p_[i] <= 0 || (i > 0 && p_[i] > p_[i - 1]))
                throw std::invalid_argument("Partition: parts must be positive and weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return p_; }
    size_t length() const { return p_.size(); }
    bool empty() const { return p_.empty(); }
    int part(size_t i) const { return i < p_.size() ? p_[i] : 0; }  // 0-based
    int size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

    bool operator==(const Partition& o) const { return p_ == o.p_; }
    bool operator!=(const Partition& o) const { return p_ != o.p_; }
    // Container order only; output order is desc_lex_less below.
    bool operator<(const Partition& o) const { return p_ < o.p_; }

    bool contains(const Partition& o) const {
        if (o.length() > length()) return false;
        for (size_t i = 0; i < o.length(); ++i)
            if (p_[i] < o.p_[i]) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < p_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(p_[i]);
        }
        return s;
    }

    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        size_t i = 0;
        while (i < text.size()) {
            size_t j = text.find(',', i);
            if (j == std::string::npos) j = text.size();
            std::string tok = text.substr(i, j - i);
            if (tok.empty()) throw std::invalid_argument("Partition::parse: empty part");
            for (char c : tok)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw std::invalid_argument("Partition::parse: bad character");
            parts.push_back(std::atoi(tok.c_str()));
            i = j + 1;
        }
        return Partition(parts);
    }

private:
    std::vector<int> p_;
};

/// Descending lexicographic order: (n), (n-1,1), ... come first among
/// partitions of n; refines dominance.
inline bool desc_lex_less(const Partition& a, const Partition& b) {
    return b.parts() < a.parts();
}

inline Partition conjugate(const Partition& l) {
    std::vector<int> q;
    if (l.empty()) return Partition{};
    q.resize(l.parts()[0], 0);
    for (int part : l.parts())
        for (int j = 0; j < part; ++j) ++q[j];
    return Partition(q);
}

/// mu + e*alpha computed part-wise.
inline Partition add_scaled(const Partition& mu, const Partition& alpha, int e) {
    size_t n = std::max(mu.length(), alpha.length());
    std::vector<int> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = mu.part(i) + e * alpha.part(i);
    return Partition(out);
}

inline void require_modulus(int e) {
    if (e < 2) throw std::invalid_argument("modulus e must be >= 2");
}

/// True iff no part value occurs e or more times.
inline bool is_e_regular(const Partition& l, int e) {
    require_modulus(e);
    size_t i = 0;
    const auto& p = l.parts();
    while (i < p.size()) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if (j - i >= static_cast<size_t>(e)) return false;
        i = j;
    }
    return true;
}

/// Splits each part-value multiplicity m = r + e*q: mu keeps r copies, alpha
/// keeps q copies.  mu is e-regular and parts(l) = parts(mu) + e*parts(alpha)
/// as multisets.
inline std::pair<Partition, Partition> decompose_singular(const Partition& l, int e) {
    require_modulus(e);
    std::vector<int> mu, alpha;
    const auto& p = l.parts();
    size_t i = 0;
    while (i < p.size()) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        int m = static_cast<int>(j - i);
        for (int t = 0; t < m % e; ++t) mu.push_back(p[i]);
        for (int t = 0; t < m / e; ++t) alpha.push_back(p[i]);
        i = j;
    }
    return {Partition(mu), Partition(alpha)};
}

/// Multiset of node residues (j - i) mod e, returned as counts per class.
inline std::vector<long> residues(const Partition& l, int e) {
    require_modulus(e);
    std::vector<long> cnt(e, 0);
    for (size_t i = 0; i < l.length(); ++i)
        for (int j = 0; j < l.parts()[i]; ++j)
            ++cnt[((j - static_cast<int>(i)) % e + e) % e];
    return cnt;
}

struct QuotientTuple {
    std::vector<Partition> components;  // length e

    bool operator==(const QuotientTuple& o) const { return components == o.components; }
    bool operator<(const QuotientTuple& o) const { return components < o.components; }
    int total_size() const {
        int s = 0;
        for (const auto& c : components) s += c.size();
        return s;
    }
    bool all_empty() const {
        for (const auto& c : components)
            if (!c.empty()) return false;
        return true;
    }
    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < components.size(); ++i) {
            if (i) s += ",";
            s += "[" + components[i].to_string() + "]";
        }
        return s + "]";
    }
};

struct CoreQuotient {
    Partition core;
    QuotientTuple quotient;
    int spin_sign;  // (-1)^(total leg length over any full e-ribbon peeling)
};

inline std::vector<long long> beta_numbers(const Partition& l, int beads) {
    std::vector<long long> b(beads);
    for (int i = 1; i <= beads; ++i) b[i - 1] = l.part(i - 1) + beads - i;
    return b;
}

inline Partition partition_from_beta(std::vector<long long> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    std::vector<int> parts;
    const int b = static_cast<int>(beta.size());
    for (int i = 1; i <= b; ++i) {
        long long v = beta[i - 1] - (b - i);
        if (v < 0) throw std::logic_error("partition_from_beta: invalid beta set");
        if (v > 0) parts.push_back(static_cast<int>(v));
    }
    return Partition(parts);
}

inline int default_bead_count(const Partition& l, int e) {
    int p = static_cast<int>(l.length());
    return ((p + e - 1) / e) * e;
}

/// Core, quotient and peeling sign on a b-bead abacus (b must be a multiple
/// of e and at least the number of parts).  The quotient depends on b only
/// through b mod e, so any valid b gives the same answer; the sign and core
/// do not depend on b at all.
inline CoreQuotient core_quotient_b(const Partition& l, int e, int beads) {
    require_modulus(e);
    if (beads % e != 0 || beads < static_cast<int>(l.length()))
        throw std::invalid_argument("core_quotient_b: bad bead count");
    auto beta = beta_numbers(l, beads);
    // Split beads onto runners; runner r keeps bead levels floor(beta/e).
    std::vector<std::vector<long long>> runner(e);
    for (long long x : beta) runner[x % e].push_back(x / e);

    QuotientTuple quot;
    quot.components.resize(e);
    long long total_spin = 0;
    std::vector<long long> core_beta;
    for (int r = 0; r < e; ++r) {
        auto& lv = runner[r];
        std::sort(lv.begin(), lv.end(), std::greater<>());
        const int c = static_cast<int>(lv.size());
        std::vector<int> comp;
        for (int j = 1; j <= c; ++j) {
            long long part = lv[j - 1] - (c - j);
            if (part > 0) comp.push_back(static_cast<int>(part));
        }
        quot.components[r] = Partition(comp);
        // Pushing a bead down k levels removes k e-ribbons; each level step
        // past an occupied position changes nothing, past a hole costs legs.
        for (int j = 0; j < c; ++j) core_beta.push_back(static_cast<long long>(j) * e + r);
        // Spin bookkeeping is done globally below via explicit peeling.
        (void)total_spin;
    }
    CoreQuotient out;
    out.core = partition_from_beta(core_beta);
    out.quotient = quot;

    // Total leg length of a full peeling, computed by repeatedly removing an
    // e-rim-hook (bead move x -> x - e onto a free slot).  Leg length of the
    // removed hook equals the number of occupied beads strictly between the
    // two positions.
    std::set<long long> pos(beta.begin(), beta.end());
    long long legs = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
            long long x = *it;
            if (x - e >= 0 && !pos.count(x - e)) {
                long long between = 0;
                for (long long y = x - e + 1; y < x; ++y)
                    if (pos.count(y)) ++between;
                pos.erase(x);
                pos.insert(x - e);
                legs += between;
                moved = true;
                break;
            }
        }
    }
    out.spin_sign = (legs % 2 == 0) ? 1 : -1;
    return out;
}

inline CoreQuotient core_quotient(const Partition& l, int e) {
    return core_quotient_b(l, e, default_bead_count(l, e));
}

inline Partition e_core(const Partition& l, int e) { return core_quotient(l, e).core; }

inline bool is_e_core(const Partition& l, int e) {
    return e_core(l, e) == l;
}

/// Inverse of core_quotient.  Rejects a core argument with an e-hook.
inline Partition from_core_quotient(const Partition& core, const QuotientTuple& quot, int e) {
    require_modulus(e);
    if (static_cast<int>(quot.components.size()) != e)
        throw std::invalid_argument("from_core_quotient: quotient length != e");
    if (!is_e_core(core, e))
        throw std::invalid_argument("from_core_quotient: first argument is not an e-core");
    int need = 1;
    for (const auto& c : quot.components)
        need = std::max(need, static_cast<int>(c.length()) + 1);
    int m = need + (static_cast<int>(core.length()) + e - 1) / e + 1;
    int beads = m * e;
    auto cq = core_quotient_b(core, e, beads);
    // Runner bead counts of the flush core abacus.
    auto beta = beta_numbers(core, beads);
    std::vector<int> count(e, 0);
    for (long long x : beta) ++count[x % e];
    std::vector<long long> out_beta;
    for (int r = 0; r < e; ++r) {
        const int c = count[r];
        const auto& comp = quot.components[r];
        for (int j = 1; j <= c; ++j) {
            long long level = comp.part(j - 1) + c - j;
            out_beta.push_back(level * e + r);
        }
    }
    return partition_from_beta(out_beta);
}

struct ChargeVector {
    std::vector<int> charges;  // length e
    int d = 0;

    bool operator==(const ChargeVector& o) const { return charges == o.charges && d == o.d; }
    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < charges.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(charges[i]);
        }
        return s + "]";
    }
};

/// Charge vector of an e-core: per-runner bead count less the baseline b/e,
/// then translated by the offset d (position p -> p + d on the abacus).
inline ChargeVector core_to_charge(const Partition& core, int e, int d = 0) {
    require_modulus(e);
    if (!is_e_core(core, e))
        throw std::invalid_argument("core_to_charge: not an e-core");
    int beads = default_bead_count(core, e);
    if (beads == 0) beads = e;
    auto beta = beta_numbers(core, beads);
    std::vector<int> s0(e, 0);
    for (long long x : beta) ++s0[x % e];
    for (int r = 0; r < e; ++r) s0[r] -= beads / e;
    ChargeVector out;
    out.charges.assign(e, 0);
    out.d = d;
    for (int r = 0; r < e; ++r) {
        int rr = ((r + d) % e + e) % e;
        out.charges[rr] = s0[r] + (r + d - rr) / e;
    }
    return out;
}

/// Inverse of core_to_charge; rejects charge vectors whose entries do not sum
/// to the stored offset d.
inline Partition charge_to_core(const ChargeVector& s, int e) {
    require_modulus(e);
    if (static_cast<int>(s.charges.size()) != e)
        throw std::invalid_argument("charge_to_core: charge length != e");
    int sum = std::accumulate(s.charges.begin(), s.charges.end(), 0);
    if (sum != s.d) throw std::invalid_argument("charge_to_core: charges do not sum to d");
    // Undo the d-translation.
    std::vector<int> s0(e, 0);
    for (int r = 0; r < e; ++r) {
        int rr = ((r + s.d) % e + e) % e;
        s0[r] = s.charges[rr] - (r + s.d - rr) / e;
    }
    int lo = 0;
    for (int x : s0) lo = std::min(lo, x);
    int base = -lo + 1;  // beads per runner added so every count is positive
    std::vector<long long> beta;
    for (int r = 0; r < e; ++r) {
        int c = s0[r] + base;
        for (int j = 0; j < c; ++j) beta.push_back(static_cast<long long>(j) * e + r);
    }
    // partition_from_beta expects bead count = len(beta); counts differ per
    // runner so normalize: total beads = e*base + sum(s0) may not be e*base.
    return partition_from_beta(std::move(beta));
}

/// Dominance order on partitions of equal size.
inline bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominance_leq: sizes differ");
    long sa = 0, sb = 0;
    size_t n = std::max(a.length(), b.length());
    for (size_t i = 0; i < n; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

/// All partitions of n, in descending lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (n < 0) return out;
    rec(n, n == 0 ? 1 : n);
    return out;
}

struct Box {
    int row;  // 0-based
    int col;  // 0-based
    bool operator==(const Box& o) const { return row == o.row && col == o.col; }
    bool operator<(const Box& o) const { return std::tie(row, col) < std::tie(o.row, o.col); }
};

inline int box_residue(const Box& b, int e) {
    return ((b.col - b.row) % e + e) % e;
}

/// Boxes that can be added keeping a partition shape, top row first.
inline std::vector<Box> addable_boxes(const Partition& l) {
    std::vector<Box> out;
    const int len = static_cast<int>(l.length());
    for (int i = 0; i <= len; ++i) {
        int row_len = l.part(i);
        int above = (i == 0) ? -1 : l.part(i - 1);
        if (i == 0 || row_len < above) out.push_back({i, row_len});
    }
    return out;
}

/// Boxes that can be removed keeping a partition shape, top row first.
inline std::vector<Box> removable_boxes(const Partition& l) {
    std::vector<Box> out;
    const int len = static_cast<int>(l.length());
    for (int i = 0; i < len; ++i) {
        int row_len = l.parts()[i];
        int below = (i + 1 < len) ? l.parts()[i + 1] : 0;
        if (row_len > below) out.push_back({i, row_len - 1});
    }
    return out;
}

inline Partition add_box(const Partition& l, const Box& b) {
    std::vector<int> p(l.parts());
    if (b.row == static_cast<int>(p.size()))
        p.push_back(1);
    else
        ++p[b.row];
    return Partition(p);
}

} // namespace ribbonfock
