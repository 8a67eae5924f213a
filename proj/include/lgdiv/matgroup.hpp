#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lgdiv/modring.hpp"

namespace lgdiv {

// 2x2 matrix over Z/p^n, entries row-major (a11, a12, a21, a22).
struct Mat2 {
    Mat2(const Modulus& m) : mod(m), e{0, 0, 0, 0} {}
    Mat2(const Modulus& m, uint64_t a11, uint64_t a12, uint64_t a21, uint64_t a22)
        : mod(m), e{m.reduce(a11), m.reduce(a12), m.reduce(a21), m.reduce(a22)} {}

    static Mat2 identity(const Modulus& m) { return Mat2(m, 1, 0, 0, 1); }
    static Mat2 diagonal(const Modulus& m, uint64_t d1, uint64_t d2) { return Mat2(m, d1, 0, 0, d2); }

    ResidueInt entry(size_t r, size_t c) const { return ResidueInt(e[2 * r + c], mod); }

    Mat2 operator*(const Mat2& o) const;
    bool operator==(const Mat2& o) const { return mod == o.mod && e == o.e; }
    bool operator!=(const Mat2& o) const { return !(*this == o); }

    uint64_t det() const;
    bool invertible() const { return mod.is_unit(det()); }
    Mat2 inverse() const; // errc::non_invertible
    Mat2 pow(uint64_t k) const;
    Mat2 reduced(const Modulus& target) const;

    std::array<uint64_t, 2> apply(const std::array<uint64_t, 2>& v) const;

    bool is_identity() const { return e[0] == 1 && e[1] == 0 && e[2] == 0 && e[3] == 1; }
    bool is_diagonal() const { return e[1] == 0 && e[2] == 0; }
    bool is_upper() const { return e[2] == 0; }
    bool is_lower() const { return e[1] == 0; }
    // strictly upper/lower unipotent
    bool is_unipotent_upper() const { return e[0] == 1 && e[3] == 1 && e[2] == 0; }
    bool is_unipotent_lower() const { return e[0] == 1 && e[3] == 1 && e[1] == 0; }

    Modulus mod;
    std::array<uint64_t, 4> e;
};

// A point of (Z/p^n)^2 in the fixed basis.
struct TorsionPoint {
    TorsionPoint(const Modulus& m, uint64_t x_, uint64_t y_) : mod(m), x(m.reduce(x_)), y(m.reduce(y_)) {}

    // smallest e with e.P = 0; equals p^(n - min(val x, val y))
    uint64_t exact_order() const {
        unsigned v = std::min(mod.val(x), mod.val(y));
        return mod.pow_p(mod.n() - v);
    }
    bool is_zero() const { return x == 0 && y == 0; }
    bool operator==(const TorsionPoint& o) const { return mod == o.mod && x == o.x && y == o.y; }

    Modulus mod;
    uint64_t x, y;
};

enum class Triangularity { diagonal, upper, lower, none };
const char* to_string(Triangularity t);

constexpr uint64_t kDefaultGroupCap = 1000000;

// Finite subgroup of GL2(Z/p^n) closed from its generators by breadth-first
// search over the Cayley graph.  Element 0 is the identity; each element
// carries the BFS tree edge (parent, generator) so a shortest word is
// recoverable.
class MatrixGroup {
public:
    MatrixGroup(const Modulus& m, std::vector<Mat2> generators, uint64_t cap);

    const Modulus& modulus() const { return mod_; }
    const std::vector<Mat2>& generators() const { return gens_; }
    size_t generator_count() const { return gens_.size(); }
    size_t order() const { return elems_.size(); }

    Mat2 element(size_t i) const;
    const std::array<uint64_t, 4>& element_entries(size_t i) const { return elems_[i]; }
    std::optional<size_t> find(const Mat2& x) const;
    bool contains(const Mat2& x) const { return find(x).has_value(); }

    // index of element(a) * element(b)
    size_t product_index(size_t a, size_t b) const;
    // index of element(a) * generators()[g]
    size_t step_index(size_t a, size_t g) const;
    size_t inverse_index(size_t a) const;
    uint64_t element_order(size_t a) const;

    // BFS-shortest word (ties broken lexicographically by generator index)
    std::vector<uint32_t> word(size_t i) const;
    uint32_t parent(size_t i) const { return parent_[i]; }
    uint32_t parent_generator(size_t i) const { return parent_gen_[i]; }

private:
    std::optional<size_t> lookup(const std::array<uint64_t, 4>& k) const;
    void rehash(size_t want);
    size_t mul_entries(const std::array<uint64_t, 4>& a, const std::array<uint64_t, 4>& b,
                       std::array<uint64_t, 4>& out) const;

    Modulus mod_;
    std::vector<Mat2> gens_;
    std::vector<std::array<uint64_t, 4>> elems_;
    std::vector<uint32_t> parent_;
    std::vector<uint8_t> parent_gen_;
    std::vector<uint32_t> slots_; // open addressing, value = index + 1
    uint64_t mask_ = 0;
};

using GroupPtr = std::shared_ptr<const MatrixGroup>;

GroupPtr close_group(const Modulus& m, const std::vector<Mat2>& generators,
                     uint64_t cap = kDefaultGroupCap);

// Image of the group over Z/p^l (generators reduced, closure recomputed).
GroupPtr reduce_mod(const MatrixGroup& g, unsigned l);

Triangularity triangularity(const MatrixGroup& g);

struct FixedSubmodule {
    std::vector<TorsionPoint> generators;
    uint64_t max_exact_order; // 1 when only the origin is fixed
};
FixedSubmodule fixed_points(const MatrixGroup& g);

struct CyclicSubgroup {
    size_t generator_index;
    uint64_t order;
};
// one representative generator per cyclic subgroup of g (trivial one included)
std::vector<CyclicSubgroup> cyclic_subgroups(const MatrixGroup& g);

} // namespace lgdiv
