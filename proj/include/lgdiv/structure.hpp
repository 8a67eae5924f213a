#pragma once

#include <optional>
#include <string>

#include "lgdiv/matgroup.hpp"

namespace lgdiv {

// Reading of "the smallest power of p dividing the entries c" for the strict
// triangular parts: either every nonzero entry counts, or only entries whose
// representative exceeds 1.  Under the preconditions the two agree.
enum class LowerEntryRule { nonzero_entries, entries_above_one };

struct PreconditionReport {
    bool g1_cyclic = false;
    bool basis_ok = false; // every mod-p element of the form diag(1, *)
    uint64_t ord_lambda1 = 0;
    std::optional<Mat2> g1_generator;
    Triangularity g2_triangularity = Triangularity::none;
    bool satisfied = false;
    std::string notes;
};

// Reduces mod p and mod p^2 and checks the shape assumptions under which the
// parameter extraction below makes sense.  A failed report is not an error:
// it means the vanishing of H1_loc is already known by coarser criteria.
PreconditionReport check_preconditions(const MatrixGroup& g);

struct ParameterProfile {
    explicit ParameterProfile(const Modulus& mm)
        : delta(Mat2::identity(mm)), tau_l(Mat2::identity(mm)), tau_u(Mat2::identity(mm)),
          rho(Mat2::identity(mm)) {}

    uint64_t p = 0;
    unsigned n = 0;
    unsigned i = 0, j = 0, m = 0, h = 0; // each in [1, n]; n means "absent"
    uint64_t d = 1;                      // delta22 = 1 + p^h d
    uint64_t lambda1 = 1;                // generator of the mod-p action
    unsigned k_exp = 0;                  // mu = lambda1^k mod p in the delta construction
    Mat2 delta, tau_l, tau_u, rho;
    bool su_trivial = false; // i == n
    bool sl_trivial = false; // j == n
    bool unit_diagonals_excluded = false;
};

ParameterProfile extract_parameters(const MatrixGroup& g,
                                    LowerEntryRule rule = LowerEntryRule::nonzero_entries);

// i <= h + |j - m|; when it holds, H1_loc vanishes.
bool vanishing_criterion(const ParameterProfile& profile);

GroupPtr conjugate(const MatrixGroup& g, const Mat2& m);

} // namespace lgdiv
