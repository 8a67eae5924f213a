#include "lgdiv/structure.hpp"

#include <algorithm>

namespace lgdiv {

PreconditionReport check_preconditions(const MatrixGroup& g) {
    PreconditionReport rep;
    const Modulus& mod = g.modulus();
    GroupPtr g1 = reduce_mod(g, 1);

    uint64_t maxord = 1;
    for (size_t i = 0; i < g1->order(); ++i) maxord = std::max(maxord, g1->element_order(i));
    rep.g1_cyclic = (maxord == g1->order());

    rep.basis_ok = true;
    for (size_t i = 0; i < g1->order(); ++i) {
        const auto& e = g1->element_entries(i);
        if (e[0] != 1 || e[1] != 0 || e[2] != 0) {
            rep.basis_ok = false;
            break;
        }
    }

    if (rep.g1_cyclic && rep.basis_ok) {
        rep.ord_lambda1 = g1->order();
        uint64_t best = 0;
        for (size_t i = 0; i < g1->order(); ++i) {
            if (g1->element_order(i) != g1->order()) continue;
            uint64_t v = g1->element_entries(i)[3];
            if (best == 0 || v < best) best = v;
        }
        rep.g1_generator = Mat2::diagonal(Modulus(mod.p(), 1), 1, best);
    }

    GroupPtr g2 = reduce_mod(g, std::min(2u, mod.n()));
    rep.g2_triangularity = triangularity(*g2);

    rep.satisfied = rep.g1_cyclic && rep.basis_ok && rep.ord_lambda1 >= 3 &&
                    rep.g2_triangularity != Triangularity::none;

    if (!rep.basis_ok)
        rep.notes += "mod-p image is not of the form diag(1, *); vanishing known already. ";
    else if (!rep.g1_cyclic)
        rep.notes += "mod-p image is not cyclic; vanishing known already. ";
    else if (rep.ord_lambda1 < 3)
        rep.notes += "mod-p action has order < 3; outside the analyzed range. ";
    if (rep.g2_triangularity == Triangularity::none)
        rep.notes += "mod-p^2 image is not triangular; vanishing known already. ";
    return rep;
}

namespace {

bool entry_counts(uint64_t v, LowerEntryRule rule) {
    if (v == 0) return false;
    return rule == LowerEntryRule::nonzero_entries || v > 1;
}

} // namespace

ParameterProfile extract_parameters(const MatrixGroup& g, LowerEntryRule rule) {
    PreconditionReport pre = check_preconditions(g);
    if (!pre.satisfied)
        fail(errc::precondition_violated, "group does not satisfy the shape preconditions: " + pre.notes);

    const Modulus& mod = g.modulus();
    unsigned n = mod.n();
    ParameterProfile prof{mod};
    prof.p = mod.p();
    prof.n = n;
    prof.lambda1 = pre.g1_generator->e[3];

    unsigned ival = n, jval = n;
    size_t su_idx = 0, sl_idx = 0;
    unsigned mval = n;
    size_t dtilde_idx = 0;
    bool have_dtilde = false;

    for (size_t idx = 0; idx < g.order(); ++idx) {
        const auto& e = g.element_entries(idx);
        if (e[0] == 1 && e[3] == 1 && e[1] == 0 && entry_counts(e[2], rule)) {
            unsigned v = mod.val(e[2]);
            if (v < jval) {
                jval = v;
                sl_idx = idx;
            }
        }
        if (e[0] == 1 && e[3] == 1 && e[2] == 0 && entry_counts(e[1], rule)) {
            unsigned v = mod.val(e[1]);
            if (v < ival) {
                ival = v;
                su_idx = idx;
            }
        }
        if (e[1] == 0 && e[2] == 0) {
            if (e[0] == 1) {
                if (e[3] != 1) prof.unit_diagonals_excluded = true;
            } else {
                unsigned v = mod.val(mod.sub(e[0], 1));
                if (v < mval) {
                    mval = v;
                    dtilde_idx = idx;
                    have_dtilde = true;
                }
            }
        }
    }

    prof.i = ival;
    prof.j = jval;
    prof.su_trivial = (ival == n);
    prof.sl_trivial = (jval == n);

    if (!prof.sl_trivial) {
        // normalize the minimizing element to lower-left entry exactly p^j
        uint64_t c = g.element_entries(sl_idx)[2];
        uint64_t k = mod.inv_unit(mod.unit_part(c));
        prof.tau_l = g.element(sl_idx).pow(k);
        if (!g.contains(prof.tau_l) || prof.tau_l.e[2] != mod.pow_p(jval))
            fail(errc::internal, "tau_l normalization failed");
    }
    if (!prof.su_trivial) {
        uint64_t b = g.element_entries(su_idx)[1];
        uint64_t k = mod.inv_unit(mod.unit_part(b));
        prof.tau_u = g.element(su_idx).pow(k);
        if (!g.contains(prof.tau_u) || prof.tau_u.e[1] != mod.pow_p(ival))
            fail(errc::internal, "tau_u normalization failed");
    }

    // rho: a diagonal element diag(1, v) with v = lambda1 mod p
    bool have_rho = false;
    for (size_t idx = 0; idx < g.order(); ++idx) {
        const auto& e = g.element_entries(idx);
        if (e[1] != 0 || e[2] != 0 || e[0] != 1) continue;
        if (e[3] % mod.p() == prof.lambda1) {
            prof.rho = g.element(idx);
            have_rho = true;
            break;
        }
    }
    if (!have_rho)
        fail(errc::precondition_violated, "no diagonal lift diag(1, *) of the mod-p generator");

    if (!have_dtilde)
        fail(errc::no_diagonal_deviation,
             "all diagonal elements have trivial (1,1) entry; every normalized cocycle vanishes");
    prof.m = mval;

    const auto& dt = g.element_entries(dtilde_idx);
    uint64_t mu = dt[3];
    uint64_t ordl = pre.ord_lambda1;
    bool found_k = false;
    for (unsigned k = 0; k < ordl; ++k) {
        if (mod.pow(prof.lambda1, k) % mod.p() == mu % mod.p()) {
            prof.k_exp = k;
            found_k = true;
            break;
        }
    }
    if (!found_k) fail(errc::precondition_violated, "diagonal element outside the mod-p cycle");

    // exponent l with (1 + p^m a)^l = 1 + p^m
    uint64_t u0 = dt[0];
    uint64_t target = mod.add(1, mod.pow_p(prof.m));
    uint64_t l = 1, w = u0;
    uint64_t bound = mod.pow_p(n - prof.m);
    while (w != target) {
        w = mod.mul(w, u0);
        ++l;
        if (l > bound) fail(errc::internal, "delta exponent search did not terminate");
    }

    Mat2 dtilde = g.element(dtilde_idx);
    prof.delta = (dtilde * prof.rho.inverse().pow(prof.k_exp)).pow(l);
    if (!prof.delta.is_diagonal() || prof.delta.e[0] != target)
        fail(errc::internal, "delta construction failed");
    if (!g.contains(prof.delta)) fail(errc::internal, "delta escaped the group");

    uint64_t d22 = prof.delta.e[3];
    if (d22 == 1) {
        prof.h = n;
        prof.d = 1;
    } else {
        prof.h = mod.val(mod.sub(d22, 1));
        prof.d = mod.sub(d22, 1) / mod.pow_p(prof.h);
    }
    return prof;
}

bool vanishing_criterion(const ParameterProfile& prof) {
    unsigned gap = prof.j >= prof.m ? prof.j - prof.m : prof.m - prof.j;
    return prof.i <= prof.h + gap;
}

GroupPtr conjugate(const MatrixGroup& g, const Mat2& m) {
    if (m.mod != g.modulus()) fail(errc::modulus_mismatch, "conjugator modulus mismatch");
    Mat2 mi = m.inverse(); // errc::non_invertible on bad input
    std::vector<Mat2> gens;
    for (const Mat2& x : g.generators()) gens.push_back(m * x * mi);
    return close_group(g.modulus(), gens, std::max<uint64_t>(g.order(), 1));
}

} // namespace lgdiv
