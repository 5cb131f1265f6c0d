#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lrc/error.hpp"

namespace lrc {

namespace detail {

struct FieldData {
    uint32_t p = 2;
    uint32_t m = 1;
    uint64_t q = 2;
    std::vector<uint32_t> poly;  // m+1 coefficients, constant term first, monic
    bool binary = true;
    bool tables = false;
    std::vector<uint32_t> exp;  // length 2(q-1)
    std::vector<uint32_t> log;  // length q
    std::vector<uint64_t> pow_p;

    uint32_t add_slow(uint32_t a, uint32_t b, bool subtract) const;
    uint32_t mul_slow(uint32_t a, uint32_t b) const;
};

}  // namespace detail

class Element;

// GF(p^m). Values are packed base-p coefficient vectors in [0, q).
// Copies share the same immutable tables.
class Field {
public:
    Field();

    static Field make(uint32_t p, uint32_t m = 1,
                      const std::optional<std::vector<uint32_t>>& poly = std::nullopt);

    uint32_t characteristic() const { return d_->p; }
    uint32_t degree() const { return d_->m; }
    uint64_t order() const { return d_->q; }
    const std::vector<uint32_t>& poly() const { return d_->poly; }
    std::string name() const;

    uint32_t add(uint32_t a, uint32_t b) const {
        if (d_->binary) return a ^ b;
        if (d_->m == 1) {
            uint64_t s = uint64_t(a) + b;
            return uint32_t(s >= d_->p ? s - d_->p : s);
        }
        return d_->add_slow(a, b, false);
    }
    uint32_t sub(uint32_t a, uint32_t b) const {
        if (d_->binary) return a ^ b;
        if (d_->m == 1) return a >= b ? a - b : uint32_t(uint64_t(a) + d_->p - b);
        return d_->add_slow(a, b, true);
    }
    uint32_t neg(uint32_t a) const { return sub(0, a); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        if (d_->tables) return d_->exp[d_->log[a] + d_->log[b]];
        if (d_->m == 1) return uint32_t(uint64_t(a) * b % d_->p);
        return d_->mul_slow(a, b);
    }
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, uint64_t e) const;

    // Smallest generator of the multiplicative group.
    uint32_t primitive() const;

    Element operator()(uint32_t v) const;

    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }
    bool same(const Field& o) const { return d_ == o.d_; }

private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> d_;
};

class Element {
public:
    Element(Field f, uint32_t v);

    uint32_t value() const { return v_; }
    const Field& field() const { return f_; }

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element operator/(const Element& o) const;
    Element operator-() const { return Element(f_, f_.neg(v_)); }
    Element inverse() const;
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

private:
    void check(const Element& o) const;
    Field f_;
    uint32_t v_;
};

bool is_prime(uint64_t n);

}  // namespace lrc
