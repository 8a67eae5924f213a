#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lgdiv/errors.hpp"

namespace lgdiv {

// Exact arithmetic in Z/p^n.  Residues live in [0, p^n) as uint64_t; every
// product goes through a 128-bit intermediate, so any p^n that fits in 64 bits
// is safe.

class Modulus {
public:
    Modulus(uint64_t p, unsigned n);

    uint64_t p() const { return p_; }
    unsigned n() const { return n_; }
    uint64_t value() const { return pn_; }
    uint64_t pow_p(unsigned t) const; // p^t, t <= n

    uint64_t reduce(uint64_t x) const { return x % pn_; }
    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t sub(uint64_t a, uint64_t b) const;
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : pn_ - a; }
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t pow(uint64_t a, uint64_t e) const;

    // p-adic valuation in [0, n]; val(0) = n.
    unsigned val(uint64_t x) const;
    // x / p^val(x); unit for x != 0, by convention 1 for x == 0.
    uint64_t unit_part(uint64_t x) const;
    bool is_unit(uint64_t x) const { return x % p_ != 0; }
    uint64_t inv_unit(uint64_t x) const; // errc::non_unit if p | x
    // multiplicative order of a unit
    uint64_t unit_order(uint64_t x) const;

    friend bool operator==(const Modulus& a, const Modulus& b) {
        return a.p_ == b.p_ && a.n_ == b.n_;
    }
    friend bool operator!=(const Modulus& a, const Modulus& b) { return !(a == b); }

private:
    uint64_t p_;
    unsigned n_;
    uint64_t pn_;
};

class ResidueInt {
public:
    ResidueInt(uint64_t value, const Modulus& m) : v_(m.reduce(value)), m_(m) {}

    uint64_t value() const { return v_; }
    const Modulus& modulus() const { return m_; }

    ResidueInt operator+(const ResidueInt& o) const { return ResidueInt(m_.add(v_, check(o)), m_); }
    ResidueInt operator-(const ResidueInt& o) const { return ResidueInt(m_.sub(v_, check(o)), m_); }
    ResidueInt operator*(const ResidueInt& o) const { return ResidueInt(m_.mul(v_, check(o)), m_); }
    ResidueInt operator-() const { return ResidueInt(m_.neg(v_), m_); }
    bool operator==(const ResidueInt& o) const { return v_ == check(o); }
    bool operator!=(const ResidueInt& o) const { return !(*this == o); }

    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return m_.is_unit(v_); }
    ResidueInt pow(uint64_t e) const { return ResidueInt(m_.pow(v_, e), m_); }

private:
    uint64_t check(const ResidueInt& o) const {
        if (m_ != o.m_) fail(errc::modulus_mismatch, "residues with different moduli");
        return o.v_;
    }
    uint64_t v_;
    Modulus m_;
};

unsigned val_p(const ResidueInt& x);
ResidueInt inv(const ResidueInt& x);

class ModMatrix {
public:
    ModMatrix(size_t rows, size_t cols, const Modulus& m);
    static ModMatrix identity(size_t k, const Modulus& m);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Modulus& modulus() const { return m_; }

    uint64_t at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    void set(size_t i, size_t j, uint64_t v) { e_[i * cols_ + j] = m_.reduce(v); }
    ResidueInt entry(size_t i, size_t j) const { return ResidueInt(at(i, j), m_); }

    std::span<const uint64_t> row(size_t i) const { return {e_.data() + i * cols_, cols_}; }

    ModMatrix mul(const ModMatrix& o) const; // errc::dimension_mismatch
    bool operator==(const ModMatrix& o) const;

private:
    size_t rows_, cols_;
    Modulus m_;
    std::vector<uint64_t> e_;
};

// Streaming row-space accumulator in Howell echelon form.  Rows are kept with
// strictly increasing pivot columns, pivots normalized to p^e, and the span is
// closed under the annihilator completions that make membership by reduction
// exact over Z/p^n.
class HowellAccumulator {
public:
    HowellAccumulator(size_t cols, const Modulus& m);

    void insert(std::span<const uint64_t> row);
    size_t row_count() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    const std::vector<std::vector<uint64_t>>& rows() const { return rows_; }
    const std::vector<size_t>& pivot_cols() const { return pivot_col_; }

    // Reduces v against the accumulated rows; returns true if it reaches zero
    // (i.e. v is in the row space).  When coeffs is non-null it receives the
    // combination over the accumulator rows that was subtracted.
    bool reduce(std::vector<uint64_t>& v, std::vector<uint64_t>* coeffs = nullptr) const;
    bool contains(std::span<const uint64_t> v) const;

    // Canonical Howell normal form: entries above each pivot reduced mod the
    // pivot.  Idempotent.
    ModMatrix canonical() const;

private:
    void place(std::vector<uint64_t>&& row);

    size_t cols_;
    Modulus m_;
    std::vector<std::vector<uint64_t>> rows_;
    std::vector<size_t> pivot_col_;
    std::vector<unsigned> pivot_val_;
    std::vector<std::vector<uint64_t>> pending_;
};

struct HowellForm {
    ModMatrix h; // Howell normal form of the input's row space
    ModMatrix u; // combination matrix with u * a = h (a zero-padded if needed)
};
HowellForm howell_form(const ModMatrix& a);

bool in_row_space(const ModMatrix& howell_h, std::span<const uint64_t> v);

// Generators of { x : rows . x = 0 } (x a column vector of length cols).
std::vector<std::vector<uint64_t>> kernel_generators(
    const std::vector<std::vector<uint64_t>>& rows, size_t cols, const Modulus& m);

// Streaming accumulator for A x = b with many equations and few unknowns.
class LinearSystem {
public:
    LinearSystem(size_t unknowns, const Modulus& m);

    void add_equation(std::span<const uint64_t> coeffs, uint64_t rhs);

    struct Solution {
        std::vector<uint64_t> particular;
        std::vector<std::vector<uint64_t>> kernel;
    };
    std::optional<Solution> solve() const;

private:
    size_t unknowns_;
    Modulus m_;
    HowellAccumulator acc_; // width unknowns + 1, rows (coeffs | rhs)
    mutable std::vector<uint64_t> scratch_;
};

struct SolutionSet {
    std::vector<ResidueInt> particular;
    std::vector<std::vector<ResidueInt>> kernel;
};
std::optional<SolutionSet> solve_linear(const ModMatrix& a, const std::vector<ResidueInt>& b);

// Structure of span(gens) / span(modulo) as a product of cyclic p-groups,
// reported as the ascending list of cyclic orders (> 1).  Valid over Z/p^n
// because the ring is local; pivots are chosen by minimal valuation.
std::vector<uint64_t> abelian_structure(const std::vector<std::vector<uint64_t>>& gens,
                                        size_t dim, const Modulus& m,
                                        const std::vector<std::vector<uint64_t>>& modulo = {});

struct QuotientStructure {
    std::vector<uint64_t> orders;                        // ascending, all > 1
    std::vector<std::vector<uint64_t>> representatives;  // lifts, one per order
};
QuotientStructure quotient_structure(const std::vector<std::vector<uint64_t>>& gens,
                                     size_t dim, const Modulus& m,
                                     const std::vector<std::vector<uint64_t>>& modulo = {});

} // namespace lgdiv
