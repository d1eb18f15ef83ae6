#include "bcdcat/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace bcdcat {

namespace {

// ---- dense polynomial helpers over the rationals (lowest degree first) ----

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

// Remainder of a modulo the monic polynomial m.
QPoly mod(QPoly a, const QPoly& m) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const Rational lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t i = 0; i < dm; ++i) a[shift + i] -= lead * m[i];
        }
        a.pop_back();
        trim(a);
        if (a.size() <= dm) break;
    }
    return a;
}

// Extended gcd in Q[x]: returns (g, u) with u*a = g mod m, g the monic gcd.
std::pair<QPoly, QPoly> ext_gcd_mod(const QPoly& a, const QPoly& m) {
    QPoly r0 = m, r1 = a;
    QPoly u0 = {}, u1 = {Rational(1)};
    trim(r1);
    while (!r1.empty()) {
        // divide r0 by r1
        QPoly q;
        QPoly rem = r0;
        trim(rem);
        if (rem.size() >= r1.size()) {
            q.assign(rem.size() - r1.size() + 1, Rational(0));
            while (rem.size() >= r1.size() && !rem.empty()) {
                Rational c = rem.back() / r1.back();
                std::size_t shift = rem.size() - r1.size();
                q[shift] = c;
                for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
                trim(rem);
            }
        }
        trim(q);
        QPoly u2 = u0;
        QPoly qu1 = mul(q, u1);
        if (u2.size() < qu1.size()) u2.resize(qu1.size(), Rational(0));
        for (std::size_t i = 0; i < qu1.size(); ++i) u2[i] -= qu1[i];
        trim(u2);
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = u2;
    }
    // r0 = gcd, u0 the cofactor; make monic
    QPoly g = r0, u = u0;
    trim(g);
    if (!g.empty() && g.back() != 1) {
        Rational lead = g.back();
        for (auto& c : g) c /= lead;
        for (auto& c : u) c /= lead;
    }
    return {g, u};
}

// Integer polynomial division (exact) used by the cyclotomic recurrence.
std::vector<Integer> zdiv_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    std::vector<Integer> q(num.size() - den.size() + 1, Integer(0));
    for (std::size_t step = q.size(); step-- > 0;) {
        Integer c = num[step + den.size() - 1] / den.back();
        q[step] = c;
        if (c != 0) {
            for (std::size_t i = 0; i < den.size(); ++i) num[step + i] -= c * den[i];
        }
    }
    for (const auto& r : num) {
        if (r != 0) throw ConsistencyError("cyclotomic polynomial division left a remainder");
    }
    return q;
}

struct CycloCache {
    std::shared_mutex mtx;
    std::map<unsigned, std::vector<Integer>> polys;
};

CycloCache& cyclo_cache() {
    static CycloCache cache;
    return cache;
}

const std::vector<Integer>& cyclotomic_polynomial_locked(unsigned m);

std::vector<Integer> compute_cyclotomic(unsigned m) {
    if (m == 1) return {Integer(-1), Integer(1)};  // x - 1
    // x^m - 1
    std::vector<Integer> num(m + 1, Integer(0));
    num[0] = -1;
    num[m] = 1;
    std::vector<Integer> den = {Integer(1)};
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const auto& phi_d = cyclotomic_polynomial_locked(d);
        std::vector<Integer> next(den.size() + phi_d.size() - 1, Integer(0));
        for (std::size_t i = 0; i < den.size(); ++i)
            for (std::size_t j = 0; j < phi_d.size(); ++j) next[i + j] += den[i] * phi_d[j];
        den = std::move(next);
    }
    return zdiv_exact(std::move(num), den);
}

const std::vector<Integer>& cyclotomic_polynomial_locked(unsigned m) {
    auto& cache = cyclo_cache();
    {
        std::shared_lock lock(cache.mtx);
        auto it = cache.polys.find(m);
        if (it != cache.polys.end()) return it->second;
    }
    // Compute outside the lock; divisors recurse into this function.
    auto poly = compute_cyclotomic(m);
    std::unique_lock lock(cache.mtx);
    auto [it, inserted] = cache.polys.emplace(m, std::move(poly));
    (void)inserted;  // populate-once: first writer wins
    return it->second;
}

QPoly phi_as_qpoly(unsigned m) {
    const auto& z = cyclotomic_polynomial(m);
    QPoly q(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) q[i] = Rational(z[i]);
    return q;
}

void check_same_order(const CycNum& a, const CycNum& b) {
    if (a.order() != b.order())
        throw OrderMismatchError("cyclotomic order mismatch: " + std::to_string(a.order()) +
                                 " vs " + std::to_string(b.order()));
}

}  // namespace

unsigned euler_phi(unsigned m) {
    unsigned result = m, n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<Integer>& cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw InvalidParameterError("cyclotomic order must be positive");
    return cyclotomic_polynomial_locked(m);
}

CycNum CycNum::zero(unsigned order) {
    return CycNum(order, std::vector<Rational>(euler_phi(order), Rational(0)));
}

CycNum CycNum::one(unsigned order) { return from_integer(order, 1); }

CycNum CycNum::from_rational(unsigned order, const Rational& value) {
    std::vector<Rational> c(euler_phi(order), Rational(0));
    c[0] = value;
    return CycNum(order, std::move(c));
}

CycNum CycNum::from_integer(unsigned order, long value) {
    return from_rational(order, Rational(value));
}

CycNum CycNum::from_coeffs(unsigned order, std::vector<Rational> coeffs) {
    const unsigned deg = euler_phi(order);
    if (coeffs.size() > deg) throw InvalidParameterError("coefficient vector longer than phi(order)");
    coeffs.resize(deg, Rational(0));
    for (auto& c : coeffs) c.canonicalize();
    return CycNum(order, std::move(coeffs));
}

CycNum CycNum::root(unsigned order, long exponent) {
    if (order == 0) throw InvalidParameterError("cyclotomic order must be positive");
    long e = exponent % static_cast<long>(order);
    if (e < 0) e += order;
    const unsigned deg = euler_phi(order);
    QPoly p(static_cast<std::size_t>(e) + 1, Rational(0));
    p.back() = 1;
    p = mod(std::move(p), phi_as_qpoly(order));
    p.resize(deg, Rational(0));
    return CycNum(order, std::move(p));
}

bool CycNum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycNum::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycNum::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycNum::is_integer() const {
    return is_rational() && coeffs_[0].get_den() == 1;
}

Rational CycNum::rational_value() const {
    if (!is_rational()) throw DomainError("value is not rational: " + str());
    return coeffs_[0];
}

Integer CycNum::integer_value() const {
    if (!is_integer()) throw DomainError("value is not an integer: " + str());
    return coeffs_[0].get_num();
}

CycNum CycNum::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return CycNum(order_, std::move(c));
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
    check_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
    check_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& rhs) {
    check_same_order(*this, rhs);
    QPoly prod = mul(coeffs_, rhs.coeffs_);
    prod = mod(std::move(prod), phi_as_qpoly(order_));
    prod.resize(coeffs_.size(), Rational(0));
    coeffs_ = std::move(prod);
    return *this;
}

CycNum& CycNum::operator/=(const CycNum& rhs) { return *this *= rhs.inv(); }

CycNum CycNum::inv() const {
    if (is_zero()) throw DivisionByZeroError("division by zero in Q(zeta_" + std::to_string(order_) + ")");
    if (is_rational()) return from_rational(order_, 1 / coeffs_[0]);
    auto [g, u] = ext_gcd_mod(coeffs_, phi_as_qpoly(order_));
    // Phi_M is irreducible over Q, so gcd must be 1.
    if (g.size() != 1 || g[0] != 1)
        throw ConsistencyError("nonunit gcd while inverting in Q(zeta_" + std::to_string(order_) + ")");
    QPoly r = mod(std::move(u), phi_as_qpoly(order_));
    r.resize(coeffs_.size(), Rational(0));
    return CycNum(order_, std::move(r));
}

std::complex<double> CycNum::approx() const {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const double angle = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(order_);
        acc += coeffs_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::string CycNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        const bool unit = (c == 1) && i > 0;
        if (!unit) os << rational_str(c);
        if (i > 0) {
            if (!unit) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CycNum pow(const CycNum& base, long exponent) {
    if (exponent < 0) return pow(base.inv(), -exponent);
    CycNum acc = CycNum::one(base.order());
    CycNum b = base;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e > 0) {
        if (e & 1UL) acc *= b;
        if (e >>= 1UL) b *= b;
    }
    return acc;
}

namespace {
// Evaluate the coefficient polynomial of a at the element t (a ring map
// determined by zeta_{order(a)} -> t; the caller guarantees t is a primitive
// root of the right order, which we verify via the cyclotomic polynomial).
CycNum evaluate_at(const CycNum& a, const CycNum& t, bool verify) {
    if (verify) {
        const auto& phi = cyclotomic_polynomial(a.order());
        CycNum acc = CycNum::zero(t.order());
        for (std::size_t i = phi.size(); i-- > 0;) {
            acc *= t;
            acc += CycNum::from_rational(t.order(), Rational(phi[i]));
        }
        if (!acc.is_zero())
            throw DomainError("target element is not a primitive root of order " +
                              std::to_string(a.order()));
    }
    CycNum acc = CycNum::zero(t.order());
    const auto& c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= t;
        acc += CycNum::from_rational(t.order(), c[i]);
    }
    return acc;
}
}  // namespace

CycNum conj(const CycNum& a) {
    return galois(a, static_cast<long>(a.order()) - 1);
}

CycNum galois(const CycNum& a, long e) {
    long m = static_cast<long>(a.order());
    long r = ((e % m) + m) % m;
    if (std::gcd(r, m) != 1)
        throw InvalidParameterError("galois exponent not coprime to the order");
    return evaluate_at(a, CycNum::root(a.order(), r), false);
}

CycNum embed(const CycNum& a, unsigned new_order) {
    if (new_order % a.order() != 0)
        throw InvalidParameterError("embed requires the old order to divide the new one");
    if (new_order == a.order()) return a;
    return evaluate_at(a, CycNum::root(new_order, new_order / a.order()), false);
}

CycNum descend(const CycNum& a, unsigned new_order) {
    const unsigned big = a.order();
    if (big % new_order != 0)
        throw InvalidParameterError("descend requires the new order to divide the old one");
    if (big == new_order) return a;
    const unsigned dn = euler_phi(new_order), db = euler_phi(big);
    // Solve B x = a where the columns of B are the canonical coordinates of
    // the embedded subfield basis zeta_new^j, j < phi(new_order).
    std::vector<std::vector<Rational>> aug(db, std::vector<Rational>(dn + 1, Rational(0)));
    for (unsigned j = 0; j < dn; ++j) {
        CycNum basis = pow(CycNum::root(big, big / new_order), j);
        for (unsigned i = 0; i < db; ++i) aug[i][j] = basis.coeffs()[i];
    }
    for (unsigned i = 0; i < db; ++i) aug[i][dn] = a.coeffs()[i];
    // Gaussian elimination.
    unsigned row = 0;
    std::vector<int> pivot_col(db, -1);
    for (unsigned col = 0; col < dn && row < db; ++col) {
        unsigned sel = row;
        while (sel < db && aug[sel][col] == 0) ++sel;
        if (sel == db) continue;
        std::swap(aug[sel], aug[row]);
        const Rational p = aug[row][col];
        for (unsigned j = col; j <= dn; ++j) aug[row][j] /= p;
        for (unsigned i = 0; i < db; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            const Rational f = aug[i][col];
            for (unsigned j = col; j <= dn; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_col[row] = static_cast<int>(col);
        ++row;
    }
    std::vector<Rational> x(dn, Rational(0));
    for (unsigned i = 0; i < row; ++i) x[static_cast<unsigned>(pivot_col[i])] = aug[i][dn];
    for (unsigned i = row; i < db; ++i) {
        if (aug[i][dn] != 0)
            throw NotInSubfieldError("value does not lie in Q(zeta_" + std::to_string(new_order) + ")");
    }
    // Rows below the pivots were eliminated to zero; verify the residual.
    CycNum rebuilt = CycNum::zero(big);
    for (unsigned j = 0; j < dn; ++j) {
        if (x[j] == 0) continue;
        rebuilt += CycNum::from_rational(big, x[j]) * pow(CycNum::root(big, big / new_order), j);
    }
    if (rebuilt != a)
        throw NotInSubfieldError("value does not lie in Q(zeta_" + std::to_string(new_order) + ")");
    return CycNum::from_coeffs(new_order, std::move(x));
}

CycNum qint(const CycNum& s, long n) {
    const CycNum s2 = s * s;
    if (s2.is_one()) throw DomainError("quantum integer requires s^2 != 1");
    const CycNum num = pow(s, n) - pow(s, -n);
    return num / (s - s.inv());
}

CycNum qint_alpha(const CycNum& alpha, const CycNum& s, long n) {
    if (alpha.is_zero()) throw DomainError("[n]_alpha requires alpha != 0");
    const CycNum s2 = s * s;
    if (s2.is_one()) throw DomainError("quantum integer requires s^2 != 1");
    const CycNum num = alpha * pow(s, n) - alpha.inv() * pow(s, -n);
    return num / (s - s.inv());
}

CycNum bracket_s(const CycNum& s, long n) { return pow(s, n) - pow(s, -n); }

CycNum qfactorial(const CycNum& s, long n) {
    CycNum acc = CycNum::one(s.order());
    for (long i = 1; i <= n; ++i) acc *= qint(s, i);
    return acc;
}

long multiplicative_order(const CycNum& a, long bound) {
    for (long e = 1; e <= bound; ++e) {
        if (bound % e != 0) continue;
        if (pow(a, e).is_one()) return e;
    }
    return 0;
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

}  // namespace bcdcat
