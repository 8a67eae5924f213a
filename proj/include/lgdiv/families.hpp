#pragma once

#include <optional>
#include <string_view>

#include "lgdiv/cohomology.hpp"

namespace lgdiv {

// The counterexample families, keyed by the relation between the strict-lower
// level j and the diagonal level m they realize.
enum class FamilyCase { j_lt_m, j_ge_m_eq, j_ge_m_gt, n3_j_eq_m, n3_j_gt_m };
const char* to_string(FamilyCase c);
std::optional<FamilyCase> family_case_from_string(std::string_view s);

struct FamilySpec {
    uint64_t p = 5;
    unsigned n = 3;
    FamilyCase kind = FamilyCase::j_lt_m;
    unsigned i = 0;     // 0 picks the default (= n, no upper generator)
    uint64_t alpha = 0; // 0 picks the smallest unit of order >= 3 mod p
    uint64_t theta = 0;
    std::optional<uint64_t> lambda_override; // n3_j_gt_m: unit of order dividing p-1

    void validate() const; // errc::spec_violated
    unsigned effective_i() const;
    unsigned level_j() const;
    unsigned level_m() const;
    unsigned level_h() const;
    uint64_t effective_alpha() const;
    uint64_t lambda_value(const Modulus& mod) const;
    std::vector<Mat2> generators(const Modulus& mod) const;
};

struct FamilyBuild {
    GroupPtr group;
    Cocycle witness;
};
FamilyBuild build_family(const FamilySpec& spec, uint64_t cap = kDefaultGroupCap);

struct CounterexampleCertificate {
    GroupPtr group;
    Cocycle witness;
    bool cocycle_ok = false;
    bool local_ok = false;
    bool not_coboundary = false;
    bool p_witness_zero = false;
    uint64_t class_order = 0;
    std::optional<ParameterProfile> profile;
    std::string profile_error;
    uint64_t fixed_point_max_order = 0;

    bool valid() const { return cocycle_ok && local_ok && not_coboundary; }
};
CounterexampleCertificate verify_counterexample(const GroupPtr& g, const Cocycle& witness);

struct GridTuple {
    uint64_t p = 5;
    unsigned n = 2, i = 1, j = 1, m = 1, h = 1;
    uint64_t d = 1, lambda1 = 2;
};

struct GridCase {
    GridTuple requested;
    bool skipped = false; // closure exceeded the per-tuple cap
    uint64_t group_order = 0;
    std::optional<ParameterProfile> profile;
    bool no_diagonal_deviation = false;
    bool checked = false; // vanishing is asserted for this case
    std::vector<uint64_t> h1loc;
    bool violation = false;
};

struct GridConfig {
    std::vector<uint64_t> p_list{5};
    std::vector<unsigned> n_list{2};
    uint64_t seed = 0;
    unsigned samples_per_tuple = 1; // (d, lambda1) draws per (i, j, m, h)
    uint64_t group_cap = 300000;
    uint64_t budget = 100000; // max cases overall
    bool predicate_true_only = true;
};

struct GridReport {
    std::vector<GridCase> cases;
    size_t checked = 0;
    size_t violations = 0;
    bool budget_exceeded = false;
};
GridReport vanishing_grid(const GridConfig& config);

enum class SearchShape { lower, upper, diagonal };
const char* to_string(SearchShape s);
std::optional<SearchShape> search_shape_from_string(std::string_view s);

struct SearchOptions {
    uint64_t p = 5;
    unsigned n = 2;
    SearchShape shape = SearchShape::lower;
    std::optional<unsigned> j; // triangular level; enumerated over [1, n) when absent
    std::optional<unsigned> m; // diagonal level; enumerated over [1, n) when absent
    uint64_t cap = 100000;     // bounds both group size and candidate count
};
// Enumerates generator tuples of the given shape, computes H1_loc of each
// closed group and certifies every nontrivial hit, deduplicated under
// diagonal basis changes.
std::vector<CounterexampleCertificate> search_counterexamples(const SearchOptions& opt);

struct IsogenyLevel {
    unsigned level;
    Triangularity shape;
    bool stable_line; // upper or diagonal: the image of Q1 spans a stable cyclic submodule
};
struct IsogenyReport {
    std::vector<IsogenyLevel> levels;
};
IsogenyReport isogeny_report(const MatrixGroup& g);

} // namespace lgdiv
