#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "lgdiv/matgroup.hpp"
#include "lgdiv/structure.hpp"

namespace lgdiv {

// A 1-cocycle: one value in (Z/p^n)^2 per group element, indexed like the
// group's element list.
class Cocycle {
public:
    Cocycle(GroupPtr g, std::vector<std::array<uint64_t, 2>> values);
    static Cocycle zero(GroupPtr g);

    const GroupPtr& group() const { return g_; }
    size_t size() const { return values_.size(); }
    const std::array<uint64_t, 2>& value(size_t i) const { return values_[i]; }
    const std::vector<std::array<uint64_t, 2>>& values() const { return values_; }
    TorsionPoint at(size_t i) const { return {g_->modulus(), values_[i][0], values_[i][1]}; }
    void set(size_t i, std::array<uint64_t, 2> v);

    Cocycle scaled(uint64_t k) const;
    Cocycle operator+(const Cocycle& o) const;
    Cocycle operator-(const Cocycle& o) const;
    bool is_zero() const;

private:
    GroupPtr g_;
    std::vector<std::array<uint64_t, 2>> values_;
};

enum class CohomologyBackend {
    generator_values, // unknowns on the generators, Cayley-edge constraints
    enumeration,      // unknowns on every element, all-pairs constraints
};

constexpr size_t kEnumerationLimit = 512;

// Decides the cocycle identity.  Checking Z(sg) = Z(s) + s.Z(g) over all
// (element, generator) pairs is equivalent to the all-pairs identity.
bool is_cocycle(const Cocycle& z);
bool is_cocycle_all_pairs(const Cocycle& z);

Cocycle coboundary(const GroupPtr& g, const TorsionPoint& w);

struct CocycleModule {
    GroupPtr group;
    std::vector<Cocycle> basis;
    std::vector<uint64_t> structure; // cyclic orders, ascending
};

CocycleModule cocycle_space(const GroupPtr& g,
                            CohomologyBackend backend = CohomologyBackend::generator_values);
CocycleModule coboundary_space(const GroupPtr& g);

struct LocalConditions {
    bool satisfied = false;
    size_t first_failure = SIZE_MAX;                  // element index, when not satisfied
    std::vector<std::array<uint64_t, 2>> witnesses;   // per element, valid when satisfied
};
// For every s, solvability of (s - 1) W = Z_s.  Throws errc::not_a_cocycle.
LocalConditions satisfies_local_conditions(const Cocycle& z, bool keep_witnesses = true);

std::vector<uint64_t> h1(const GroupPtr& g,
                         CohomologyBackend backend = CohomologyBackend::generator_values);

struct H1Report {
    std::vector<uint64_t> h1_structure;
    std::vector<uint64_t> h1loc_structure;
    std::vector<Cocycle> representatives; // lifts of a generating set of H1_loc
};
H1Report h1_loc(const GroupPtr& g,
                CohomologyBackend backend = CohomologyBackend::generator_values);

struct CoboundaryWitness {
    bool is_coboundary = false;
    std::array<uint64_t, 2> witness{0, 0};
};
CoboundaryWitness is_coboundary(const Cocycle& z); // throws errc::not_a_cocycle

// smallest p-power e with e.[Z] trivial in H1
uint64_t class_order(const Cocycle& z);

// Adjusts Z by a coboundary so that the distinguished generators take the
// shape values: zero on tau_u, tau_l, rho and (p^m b, 0) on delta.
Cocycle normalize_cocycle(const Cocycle& z, const ParameterProfile& profile);

} // namespace lgdiv
