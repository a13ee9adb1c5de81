#include "g2/gf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace g2 {

namespace {

// ---------------------------------------------------------------------------
// GF(p)[x] helpers.  Polynomials are little-endian uint8 vectors, normalized
// so that the leading coefficient is nonzero (the zero polynomial is empty).
// ---------------------------------------------------------------------------

using PPoly = std::vector<std::uint8_t>;

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int pdeg(const PPoly& f) { return static_cast<int>(f.size()) - 1; }

PPoly pmul(const PPoly& a, const PPoly& b, int p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint8_t>((r[i + j] + a[i] * b[j]) % p);
    ptrim(r);
    return r;
}

PPoly psub(PPoly a, const PPoly& b, int p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = static_cast<std::uint8_t>((a[i] + p - b[i]) % p);
    ptrim(a);
    return a;
}

// remainder of a modulo monic-normalizable f
PPoly pmod(PPoly a, const PPoly& f, int p) {
    int df = pdeg(f);
    int lead_inv = 1;
    for (int i = 1; i < p; ++i)
        if (i * f[df] % p == 1) { lead_inv = i; break; }
    while (pdeg(a) >= df) {
        int k = pdeg(a) - df;
        int c = a.back() * lead_inv % p;
        for (int i = 0; i <= df; ++i)
            a[i + k] = static_cast<std::uint8_t>((a[i + k] + p - c * f[i] % p) % p);
        ptrim(a);
    }
    return a;
}

PPoly pgcd(PPoly a, PPoly b, int p) {
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

PPoly ppowmod(PPoly base, std::uint64_t e, const PPoly& f, int p) {
    PPoly r = {1};
    base = pmod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = pmod(pmul(r, base, p), f, p);
        base = pmod(pmul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

// g(h) mod f for g over GF(p), h a residue mod f
PPoly pcompose(const PPoly& g, const PPoly& h, const PPoly& f, int p) {
    PPoly r;
    for (std::size_t i = g.size(); i-- > 0;) {
        r = pmod(pmul(r, h, p), f, p);
        if (g[i]) {
            if (r.empty()) r = {g[i]};
            else r[0] = static_cast<std::uint8_t>((r[0] + g[i]) % p);
            ptrim(r);
        }
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

std::uint64_t upow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

bool pirreducible(const PPoly& f, int p) {
    int n = pdeg(f);
    if (n < 1) return false;
    PPoly x = {0, 1};
    // x^(p^n) == x mod f
    PPoly t = x;
    for (int i = 0; i < n; ++i) t = ppowmod(t, static_cast<std::uint64_t>(p), f, p);
    if (psub(t, x, p) != PPoly{}) return false;
    for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(n))) {
        PPoly u = x;
        for (int i = 0; i < n / static_cast<int>(r); ++i)
            u = ppowmod(u, static_cast<std::uint64_t>(p), f, p);
        PPoly g = pgcd(psub(u, x, p), f, p);
        if (pdeg(g) != 0) return false;
    }
    return true;
}

bool pprimitive(const PPoly& f, int p, int n) {
    std::uint64_t m = upow(static_cast<std::uint64_t>(p), n) - 1;
    PPoly x = {0, 1};
    for (std::uint64_t d : prime_factors(m)) {
        if (ppowmod(x, m / d, f, p) == PPoly{1}) return false;
    }
    return true;
}

int smallest_primitive_root(int p) {
    if (p == 2) return 1;
    std::uint64_t m = static_cast<std::uint64_t>(p) - 1;
    auto fac = prime_factors(m);
    for (int g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t d : fac) {
            std::uint64_t e = m / d, r = 1, b = static_cast<std::uint64_t>(g);
            while (e) {
                if (e & 1) r = r * b % p;
                b = b * b % p;
                e >>= 1;
            }
            if (r == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root mod p");
}

const std::vector<int> kSupportedPrimes = {2, 3, 5, 7, 11, 13};

PPoly conway_impl(int p, int n);

// compatibility with every proper subfield Conway polynomial
bool conway_compatible(const PPoly& f, int p, int n) {
    std::uint64_t qn = upow(static_cast<std::uint64_t>(p), n) - 1;
    for (int m = 1; m < n; ++m) {
        if (n % m) continue;
        std::uint64_t e = qn / (upow(static_cast<std::uint64_t>(p), m) - 1);
        PPoly h = ppowmod({0, 1}, e, f, p);
        if (!pcompose(conway_impl(p, m), h, f, p).empty()) return false;
    }
    return true;
}

PPoly conway_impl(int p, int n) {
    static std::map<std::pair<int, int>, PPoly> cache;
    static std::recursive_mutex mtx;  // compatibility checks recurse into subfields
    std::lock_guard<std::recursive_mutex> lock(mtx);
    auto it = cache.find({p, n});
    if (it != cache.end()) return it->second;

    PPoly result;
    if (n == 1) {
        int g = smallest_primitive_root(p);
        result = {static_cast<std::uint8_t>((p - g % p) % p), 1};  // x - g
    } else {
        // words (c_{n-1},...,c_0) in lexicographic order, c_0 fastest;
        // f = x^n + sum (-1)^(n-i) c_i x^i
        std::vector<int> w(n, 0);
        bool found = false;
        for (std::uint64_t iter = 0; iter < upow(static_cast<std::uint64_t>(p), n); ++iter) {
            PPoly f(n + 1, 0);
            f[n] = 1;
            for (int i = 0; i < n; ++i) {
                int c = w[n - 1 - i];  // w[0] is c_{n-1}
                f[i] = static_cast<std::uint8_t>(((n - i) % 2 == 0) ? c % p : (p - c % p) % p);
            }
            if (f[0] != 0 && pirreducible(f, p) && pprimitive(f, p, n) &&
                conway_compatible(f, p, n)) {
                result = f;
                found = true;
                break;
            }
            // odometer on w, rightmost digit fastest
            int k = n - 1;
            while (k >= 0 && w[k] == p - 1) w[k--] = 0;
            if (k < 0) break;
            ++w[k];
        }
        if (!found) throw std::logic_error("conway polynomial search exhausted");
    }
    cache[{p, n}] = result;
    return result;
}

}  // namespace

std::vector<std::uint8_t> conway_polynomial(int p, int n) { return conway_impl(p, n); }

// ---------------------------------------------------------------------------
// Field
// ---------------------------------------------------------------------------

Field::Field(int p, int n) : p_(p), n_(n) {
    q_ = upow(static_cast<std::uint64_t>(p), n);
    if (n == 1) {
        modulus_ = {0, 1};  // x
        primitive_[0] = static_cast<std::uint8_t>(smallest_primitive_root(p));
    } else {
        modulus_ = conway_impl(p, n);
        primitive_[1] = 1;  // the class of x is primitive by construction
    }
    // reduction table for x^k, k = n .. 2n-2
    xpow_.resize(std::max(0, n - 1));
    PPoly f = modulus_;
    for (int k = n; k <= 2 * n - 2; ++k) {
        PPoly xk(k + 1, 0);
        xk[k] = 1;
        PPoly r = pmod(xk, f, p);
        r.resize(n, 0);
        xpow_[k - n] = r;
    }
}

const Field& Field::get(int p, int n) {
    if (std::find(kSupportedPrimes.begin(), kSupportedPrimes.end(), p) ==
            kSupportedPrimes.end() ||
        n < 1 || n > 8)
        throw std::invalid_argument("unsupported field GF(" + std::to_string(p) + "^" +
                                    std::to_string(n) + ")");
    static std::map<std::pair<int, int>, Field*> registry;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = registry.find({p, n});
    if (it == registry.end())
        it = registry.emplace(std::make_pair(p, n), new Field(p, n)).first;
    return *it->second;
}

FieldElem Field::make(const std::array<std::uint8_t, 8>& c) const {
    FieldElem e;
    e.field_ = this;
    e.c_ = c;
    return e;
}

FieldElem Field::zero() const { return make({}); }

FieldElem Field::one() const {
    std::array<std::uint8_t, 8> c{};
    c[0] = 1;
    return make(c);
}

FieldElem Field::from_int(std::int64_t k) const {
    std::array<std::uint8_t, 8> c{};
    std::int64_t r = k % p_;
    if (r < 0) r += p_;
    c[0] = static_cast<std::uint8_t>(r);
    return make(c);
}

FieldElem Field::from_coeffs(const std::vector<int>& v) const {
    if (static_cast<int>(v.size()) > n_)
        throw std::invalid_argument("coefficient vector longer than field degree");
    std::array<std::uint8_t, 8> c{};
    for (std::size_t i = 0; i < v.size(); ++i) {
        int r = v[i] % p_;
        if (r < 0) r += p_;
        c[i] = static_cast<std::uint8_t>(r);
    }
    return make(c);
}

FieldElem Field::element(std::uint64_t index) const {
    if (index >= q_) throw std::out_of_range("field element index");
    std::array<std::uint8_t, 8> c{};
    for (int i = 0; i < n_; ++i) {
        c[i] = static_cast<std::uint8_t>(index % p_);
        index /= p_;
    }
    return make(c);
}

std::uint64_t Field::index_of(const FieldElem& a) const {
    std::uint64_t idx = 0;
    for (int i = n_ - 1; i >= 0; --i) idx = idx * p_ + a.c_[i];
    return idx;
}

FieldElem Field::primitive() const { return make(primitive_); }

std::vector<FieldElem> Field::elements() const {
    std::vector<FieldElem> out;
    out.reserve(q_);
    for (std::uint64_t i = 0; i < q_; ++i) out.push_back(element(i));
    return out;
}

std::vector<FieldElem> Field::nonzero_elements() const {
    std::vector<FieldElem> out;
    out.reserve(q_ - 1);
    for (std::uint64_t i = 1; i < q_; ++i) out.push_back(element(i));
    return out;
}

FieldElem Field::reduce_product(const int* conv, int len) const {
    // conv has length <= 2n-1 with entries already reduced mod p
    std::array<std::uint8_t, 8> c{};
    for (int i = 0; i < std::min(len, n_); ++i) c[i] = static_cast<std::uint8_t>(conv[i]);
    for (int k = n_; k < len; ++k) {
        if (!conv[k]) continue;
        const auto& red = xpow_[k - n_];
        for (int i = 0; i < n_; ++i)
            c[i] = static_cast<std::uint8_t>((c[i] + conv[k] * red[i]) % p_);
    }
    return make(c);
}

// ---------------------------------------------------------------------------
// FieldElem
// ---------------------------------------------------------------------------

const Field& FieldElem::field() const {
    if (!field_) throw std::logic_error("uninitialized field element");
    return *field_;
}

bool FieldElem::is_zero() const {
    for (int i = 0; i < field().n(); ++i)
        if (c_[i]) return false;
    return true;
}

bool FieldElem::is_one() const {
    if (c_[0] != 1) return false;
    for (int i = 1; i < field().n(); ++i)
        if (c_[i]) return false;
    return true;
}

namespace {
void check_same_field(const FieldElem& a, const FieldElem& b, const Field* fa,
                      const Field* fb) {
    (void)a;
    (void)b;
    if (fa != fb) throw std::invalid_argument("mixed-field arithmetic");
}
}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_field(*this, o, field_, o.field_);
    const int p = field_->p();
    std::array<std::uint8_t, 8> c{};
    for (int i = 0; i < field_->n(); ++i)
        c[i] = static_cast<std::uint8_t>((c_[i] + o.c_[i]) % p);
    return field_->make(c);
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator-() const {
    const int p = field().p();
    std::array<std::uint8_t, 8> c{};
    for (int i = 0; i < field_->n(); ++i)
        c[i] = static_cast<std::uint8_t>((p - c_[i]) % p);
    return field_->make(c);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_field(*this, o, field_, o.field_);
    const int p = field_->p();
    const int n = field_->n();
    int conv[15] = {0};
    for (int i = 0; i < n; ++i) {
        if (!c_[i]) continue;
        for (int j = 0; j < n; ++j)
            conv[i + j] = (conv[i + j] + c_[i] * o.c_[j]) % p;
    }
    return field_->reduce_product(conv, 2 * n - 1);
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem& FieldElem::operator+=(const FieldElem& o) { return *this = *this + o; }
FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this = *this - o; }
FieldElem& FieldElem::operator*=(const FieldElem& o) { return *this = *this * o; }

FieldElem FieldElem::inv() const {
    if (is_zero()) throw std::domain_error("inversion of zero");
    const int p = field().p();
    // extended Euclid in GF(p)[x] against the modulus
    PPoly r0 = field_->modulus();
    PPoly r1(c_.begin(), c_.begin() + field_->n());
    ptrim(r1);
    PPoly s0 = {}, s1 = {1};
    while (pdeg(r1) > 0) {
        // r0 = q*r1 + r2
        PPoly q;
        PPoly rem = r0;
        int d1 = pdeg(r1);
        int lead_inv = 1;
        for (int i = 1; i < p; ++i)
            if (i * r1[d1] % p == 1) { lead_inv = i; break; }
        q.assign(std::max(0, pdeg(r0) - d1 + 1), 0);
        while (pdeg(rem) >= d1) {
            int k = pdeg(rem) - d1;
            int c = rem.back() * lead_inv % p;
            q[k] = static_cast<std::uint8_t>(c);
            for (int i = 0; i <= d1; ++i)
                rem[i + k] = static_cast<std::uint8_t>((rem[i + k] + p - c * r1[i] % p) % p);
            ptrim(rem);
        }
        ptrim(q);
        PPoly s2 = psub(s0, pmul(q, s1, p), p);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r1.empty()) throw std::domain_error("element not invertible");
    // normalize: r1 is a nonzero constant
    int cinv = 1;
    for (int i = 1; i < p; ++i)
        if (i * r1[0] % p == 1) { cinv = i; break; }
    std::array<std::uint8_t, 8> c{};
    for (std::size_t i = 0; i < s1.size() && i < 8; ++i)
        c[i] = static_cast<std::uint8_t>(s1[i] * cinv % p);
    return field_->make(c);
}

FieldElem FieldElem::pow(std::int64_t e) const {
    const Field& F = field();
    if (is_zero()) {
        if (e < 0) throw std::domain_error("inversion of zero");
        return e == 0 ? F.one() : F.zero();
    }
    std::uint64_t m = F.order() - 1;
    std::int64_t r = e % static_cast<std::int64_t>(m);
    if (r < 0) r += static_cast<std::int64_t>(m);
    FieldElem acc = F.one(), b = *this;
    std::uint64_t ee = static_cast<std::uint64_t>(r);
    while (ee) {
        if (ee & 1) acc = acc * b;
        b = b * b;
        ee >>= 1;
    }
    return acc;
}

FieldElem FieldElem::frobenius(int r) const {
    if (r < 0) throw std::invalid_argument("negative frobenius power");
    const Field& F = field();
    if (is_zero()) return F.zero();
    std::uint64_t m = F.order() - 1;
    std::uint64_t e = 1;
    for (int i = 0; i < r; ++i) e = e * F.p() % m;
    return pow(static_cast<std::int64_t>(e));
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (field_ != o.field_) return false;
    for (int i = 0; i < field().n(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::vector<int> FieldElem::coeffs() const {
    std::vector<int> v(field().n());
    for (int i = 0; i < field_->n(); ++i) v[i] = c_[i];
    return v;
}

std::string FieldElem::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < field().n(); ++i) {
        if (i) os << ",";
        os << int(c_[i]);
    }
    os << "]";
    return os.str();
}

std::size_t FieldElemHash::operator()(const FieldElem& a) const {
    std::size_t h = std::hash<const void*>()(static_cast<const void*>(&a.field()));
    for (int i = 0; i < a.field().n(); ++i) h = h * 1099511628211ULL + a.c_[i];
    return h;
}

// ---------------------------------------------------------------------------
// cube roots and embeddings
// ---------------------------------------------------------------------------

namespace {
// baby-step giant-step discrete log base g
std::uint64_t discrete_log(const FieldElem& g, const FieldElem& a) {
    const Field& F = a.field();
    std::uint64_t m = F.order() - 1;
    std::uint64_t s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(m))) + 1;
    std::unordered_map<FieldElem, std::uint64_t, FieldElemHash> baby;
    FieldElem cur = F.one();
    for (std::uint64_t j = 0; j < s; ++j) {
        baby.emplace(cur, j);
        cur = cur * g;
    }
    FieldElem giant_step = g.pow(static_cast<std::int64_t>(s)).inv();
    FieldElem x = a;
    for (std::uint64_t i = 0; i <= s; ++i) {
        auto it = baby.find(x);
        if (it != baby.end()) return (i * s + it->second) % m;
        x = x * giant_step;
    }
    throw std::logic_error("discrete log failed");
}
}  // namespace

FieldElem cube_root(const FieldElem& a) {
    const Field& F = a.field();
    if (a.is_zero()) return F.zero();
    std::uint64_t m = F.order() - 1;
    if (m == 1) return a;  // GF(2)
    if (m % 3 != 0) {
        // 3 invertible mod m: unique cube root a^(3^-1 mod m)
        std::int64_t t0 = 0, t1 = 1, r0 = static_cast<std::int64_t>(m), r1 = 3;
        while (r1) {
            std::int64_t q = r0 / r1;
            std::int64_t tmp = t0 - q * t1;
            t0 = t1; t1 = tmp;
            tmp = r0 - q * r1;
            r0 = r1; r1 = tmp;
        }
        std::int64_t e = t0 % static_cast<std::int64_t>(m);
        if (e < 0) e += static_cast<std::int64_t>(m);
        return a.pow(e);
    }
    FieldElem g = F.primitive();
    std::uint64_t dl = discrete_log(g, a);
    if (dl % 3 != 0) throw std::domain_error("no cube root");
    return g.pow(static_cast<std::int64_t>(dl / 3));
}

FieldElem embed(const FieldElem& a, const Field& target) {
    const Field& src = a.field();
    if (&src == &target) return a;
    if (src.p() != target.p() || target.n() % src.n() != 0)
        throw std::invalid_argument("no subfield embedding");
    std::uint64_t e = (target.order() - 1) / (src.order() - 1);
    FieldElem h = target.primitive().pow(static_cast<std::int64_t>(e));
    FieldElem out = target.zero();
    FieldElem hpow = target.one();
    auto cs = a.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        out += target.from_int(cs[i]) * hpow;
        hpow = hpow * h;
    }
    return out;
}

}  // namespace g2
