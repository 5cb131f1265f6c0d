#include "lrc/field.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace lrc {

namespace {

using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_rem(Poly a, const Poly& b, uint32_t p) {
    trim(a);
    const size_t db = b.size() - 1;
    while (a.size() > db) {
        uint64_t lead = a.back();
        size_t shift = a.size() - 1 - db;
        for (size_t i = 0; i <= db; ++i) {
            uint64_t t = lead * b[i] % p;
            a[shift + i] = uint32_t((a[shift + i] + p - t) % p);
        }
        trim(a);
    }
    return a;
}

bool poly_irreducible(const Poly& f, uint32_t p) {
    const uint32_t m = uint32_t(f.size() - 1);
    if (m <= 1) return true;
    for (uint32_t e = 1; e <= m / 2; ++e) {
        Poly g(e + 1, 0);
        g[e] = 1;
        while (true) {
            if (poly_rem(f, g, p).empty()) return false;
            uint32_t i = 0;
            while (i < e && ++g[i] == p) g[i++] = 0;
            if (i == e) break;
        }
    }
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

struct Key {
    uint32_t p, m;
    Poly poly;
    bool operator<(const Key& o) const { return std::tie(p, m, poly) < std::tie(o.p, o.m, o.poly); }
};

std::mutex& registry_mutex() {
    static std::mutex mu;
    return mu;
}

std::map<Key, std::weak_ptr<const detail::FieldData>>& registry() {
    static std::map<Key, std::weak_ptr<const detail::FieldData>> r;
    return r;
}

uint32_t slow_pow(const detail::FieldData& d, uint32_t a, uint64_t e) {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = d.mul_slow(r, a);
        a = d.mul_slow(a, a);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace detail {

uint32_t FieldData::add_slow(uint32_t a, uint32_t b, bool subtract) const {
    uint64_t out = 0;
    for (uint32_t i = 0; i < m; ++i) {
        uint32_t x = a % p, y = b % p;
        a /= p;
        b /= p;
        uint32_t z = subtract ? (x + p - y) % p : (x + y) % p;
        out += uint64_t(z) * pow_p[i];
    }
    return uint32_t(out);
}

uint32_t FieldData::mul_slow(uint32_t a, uint32_t b) const {
    if (m == 1) return uint32_t(uint64_t(a) * b % p);
    Poly x(m), y(m);
    for (uint32_t i = 0; i < m; ++i) {
        x[i] = a % p;
        a /= p;
        y[i] = b % p;
        b /= p;
    }
    Poly z(2 * m - 1, 0);
    for (uint32_t i = 0; i < m; ++i) {
        if (!x[i]) continue;
        for (uint32_t j = 0; j < m; ++j) z[i + j] = uint32_t((z[i + j] + uint64_t(x[i]) * y[j]) % p);
    }
    z = poly_rem(z, poly, p);
    uint64_t out = 0;
    for (size_t i = 0; i < z.size(); ++i) out += uint64_t(z[i]) * pow_p[i];
    return uint32_t(out);
}

}  // namespace detail

Field::Field() : Field(make(2)) {}

Field Field::make(uint32_t p, uint32_t m, const std::optional<std::vector<uint32_t>>& poly) {
    if (!is_prime(p)) throw Error(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    if (m < 1) throw Error(Errc::PreconditionViolated, "extension degree must be at least 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > 0xFFFFFFFFull) throw Error(Errc::FieldTooLarge, "field order exceeds 2^32");
    }

    Poly f;
    if (poly) {
        f = *poly;
        if (f.size() != m + 1 || f.back() != 1)
            throw Error(Errc::PreconditionViolated, "reduction polynomial must be monic of degree m");
        for (uint32_t c : f)
            if (c >= p) throw Error(Errc::PreconditionViolated, "polynomial coefficient out of range");
        if (!poly_irreducible(f, p)) throw Error(Errc::ReduciblePolynomial, "given polynomial is reducible");
    } else if (m == 1) {
        f = {0, 1};
    } else {
        if (m > 16) throw Error(Errc::PreconditionViolated, "default polynomial search limited to m <= 16");
        for (uint64_t v = 1; v < q; ++v) {
            if (v % p == 0) continue;
            Poly g(m + 1, 0);
            uint64_t t = v;
            for (uint32_t i = 0; i < m; ++i) {
                g[i] = uint32_t(t % p);
                t /= p;
            }
            g[m] = 1;
            if (poly_irreducible(g, p)) {
                f = g;
                break;
            }
        }
    }

    Key key{p, m, f};
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto& reg = registry();
    if (auto it = reg.find(key); it != reg.end())
        if (auto sp = it->second.lock()) return Field(sp);

    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->m = m;
    d->q = q;
    d->poly = f;
    d->binary = (p == 2);
    d->pow_p.resize(m + 1);
    d->pow_p[0] = 1;
    for (uint32_t i = 1; i <= m; ++i) d->pow_p[i] = d->pow_p[i - 1] * p;

    if (m > 1 && q <= 65536) {
        auto factors = prime_factors(q - 1);
        uint32_t g = 0;
        for (uint32_t c = 2; c < q && !g; ++c) {
            bool ok = true;
            for (uint64_t pf : factors)
                if (slow_pow(*d, c, (q - 1) / pf) == 1) ok = false;
            if (ok) g = c;
        }
        if (q == 2) g = 1;
        d->exp.resize(2 * (q - 1));
        d->log.assign(q, 0);
        uint32_t x = 1;
        for (uint64_t i = 0; i < q - 1; ++i) {
            d->exp[i] = x;
            d->exp[i + q - 1] = x;
            d->log[x] = uint32_t(i);
            x = d->mul_slow(x, g);
        }
        d->tables = true;
    }
    reg[key] = d;
    return Field(std::shared_ptr<const detail::FieldData>(d));
}

std::string Field::name() const {
    if (d_->m == 1) return "GF(" + std::to_string(d_->p) + ")";
    return "GF(" + std::to_string(d_->p) + "^" + std::to_string(d_->m) + ")";
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw Error(Errc::DivideByZero, "inverse of zero in " + name());
    if (d_->tables) return d_->exp[(d_->q - 1 - d_->log[a]) % (d_->q - 1)];
    if (d_->m == 1) {
        int64_t t = 0, nt = 1, r = d_->p, nr = a;
        while (nr) {
            int64_t qt = r / nr;
            std::tie(t, nt) = std::make_tuple(nt, t - qt * nt);
            std::tie(r, nr) = std::make_tuple(nr, r - qt * nr);
        }
        if (t < 0) t += d_->p;
        return uint32_t(t);
    }
    return pow(a, d_->q - 2);
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (d_->tables) return d_->exp[(uint64_t(d_->log[a]) * (e % (d_->q - 1))) % (d_->q - 1)];
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint32_t Field::primitive() const {
    if (d_->tables) return d_->exp[1];
    if (d_->q == 2) return 1;
    auto factors = prime_factors(d_->q - 1);
    for (uint64_t c = 2; c < d_->q; ++c) {
        bool ok = true;
        for (uint64_t pf : factors)
            if (pow(uint32_t(c), (d_->q - 1) / pf) == 1) ok = false;
        if (ok) return uint32_t(c);
    }
    return 1;
}

Element Field::operator()(uint32_t v) const { return Element(*this, v); }

bool Field::operator==(const Field& o) const {
    if (d_ == o.d_) return true;
    return d_->p == o.d_->p && d_->m == o.d_->m && d_->poly == o.d_->poly;
}

Element::Element(Field f, uint32_t v) : f_(std::move(f)), v_(v) {
    if (v >= f_.order()) throw Error(Errc::PreconditionViolated, "element value out of range for " + f_.name());
}

void Element::check(const Element& o) const {
    if (f_ != o.f_) throw Error(Errc::FieldMismatch, f_.name() + " vs " + o.f_.name());
}

Element Element::operator+(const Element& o) const {
    check(o);
    return Element(f_, f_.add(v_, o.v_));
}
Element Element::operator-(const Element& o) const {
    check(o);
    return Element(f_, f_.sub(v_, o.v_));
}
Element Element::operator*(const Element& o) const {
    check(o);
    return Element(f_, f_.mul(v_, o.v_));
}
Element Element::operator/(const Element& o) const {
    check(o);
    return Element(f_, f_.div(v_, o.v_));
}
Element Element::inverse() const { return Element(f_, f_.inv(v_)); }
bool Element::operator==(const Element& o) const {
    check(o);
    return v_ == o.v_;
}

}  // namespace lrc
