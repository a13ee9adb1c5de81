#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace g2 {

// Exact arithmetic in GF(p^n) for p in {2,3,5,7,11,13} and n <= 8.
//
// Fields are interned singletons keyed by (p,n).  Extension fields take the
// Conway polynomial as modulus; it is computed on first use from the
// canonical definition (lexicographically least primitive polynomial, in the
// alternating-sign coefficient order, compatible with the Conway polynomials
// of all proper subfields) and cached, so the same (p,n) always yields the
// identical modulus.  Prime fields use modulus x and hold plain scalars.
//
// Elements are immutable values carrying a pointer to their field; mixing
// fields in arithmetic is an error, not an implicit embedding.  The explicit
// embedding GF(p^m) -> GF(p^n) for m | n is `embed`.

class Field;

class FieldElem {
public:
    FieldElem() = default;

    bool initialized() const { return field_ != nullptr; }
    const Field& field() const;
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);

    FieldElem inv() const;
    FieldElem pow(std::int64_t e) const;
    FieldElem square() const { return *this * *this; }
    // a -> a^(p^r), the r-th power of the absolute Frobenius
    FieldElem frobenius(int r) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // little-endian coefficients in the polynomial basis, length n
    std::vector<int> coeffs() const;
    std::string str() const;

private:
    friend class Field;
    friend struct FieldElemHash;
    const Field* field_ = nullptr;
    std::array<std::uint8_t, 8> c_{};
};

struct FieldElemHash {
    std::size_t operator()(const FieldElem& a) const;
};

class Field {
public:
    // Throws std::invalid_argument for unsupported (p,n).
    static const Field& get(int p, int n);

    int p() const { return p_; }
    int n() const { return n_; }
    std::uint64_t order() const { return q_; }
    // monic modulus, little-endian, length n+1
    const std::vector<std::uint8_t>& modulus() const { return modulus_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(std::int64_t k) const;  // scalar k mod p
    FieldElem from_coeffs(const std::vector<int>& c) const;
    FieldElem element(std::uint64_t index) const;  // base-p digits, index < q
    std::uint64_t index_of(const FieldElem& a) const;
    FieldElem primitive() const;  // fixed generator of the unit group
    std::vector<FieldElem> elements() const;
    std::vector<FieldElem> nonzero_elements() const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    friend class FieldElem;
    Field(int p, int n);

    FieldElem make(const std::array<std::uint8_t, 8>& c) const;
    FieldElem reduce_product(const int* conv, int len) const;

    int p_, n_;
    std::uint64_t q_;
    std::vector<std::uint8_t> modulus_;
    std::array<std::uint8_t, 8> primitive_{};
    // x^k mod modulus for k = n .. 2n-2, each length n
    std::vector<std::vector<std::uint8_t>> xpow_;
};

// Cube root in the field; throws std::domain_error when a is not a cube.
FieldElem cube_root(const FieldElem& a);

// Conway-compatible embedding GF(p^m) -> GF(p^n) for m | n.
FieldElem embed(const FieldElem& a, const Field& target);

// Exposed for tests: the Conway polynomial used as modulus for n >= 2.
std::vector<std::uint8_t> conway_polynomial(int p, int n);

}  // namespace g2
