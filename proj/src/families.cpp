#include "lgdiv/families.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace lgdiv {

const char* to_string(FamilyCase c) {
    switch (c) {
    case FamilyCase::j_lt_m: return "j-lt-m";
    case FamilyCase::j_ge_m_eq: return "j-ge-m-eq";
    case FamilyCase::j_ge_m_gt: return "j-ge-m-gt";
    case FamilyCase::n3_j_eq_m: return "n3-j-eq-m";
    default: return "n3-j-gt-m";
    }
}

std::optional<FamilyCase> family_case_from_string(std::string_view s) {
    if (s == "j-lt-m") return FamilyCase::j_lt_m;
    if (s == "j-ge-m-eq") return FamilyCase::j_ge_m_eq;
    if (s == "j-ge-m-gt") return FamilyCase::j_ge_m_gt;
    if (s == "n3-j-eq-m") return FamilyCase::n3_j_eq_m;
    if (s == "n3-j-gt-m") return FamilyCase::n3_j_gt_m;
    return std::nullopt;
}

const char* to_string(SearchShape s) {
    switch (s) {
    case SearchShape::lower: return "lower";
    case SearchShape::upper: return "upper";
    default: return "diagonal";
    }
}

std::optional<SearchShape> search_shape_from_string(std::string_view s) {
    if (s == "lower") return SearchShape::lower;
    if (s == "upper") return SearchShape::upper;
    if (s == "diagonal") return SearchShape::diagonal;
    return std::nullopt;
}

namespace {

uint64_t smallest_alpha(uint64_t p) {
    Modulus m1(p, 1);
    for (uint64_t a = 2; a < p; ++a)
        if (m1.unit_order(a) >= 3) return a;
    fail(errc::spec_violated, "no unit of order >= 3 mod p; need p >= 5");
}

} // namespace

unsigned FamilySpec::level_j() const {
    switch (kind) {
    case FamilyCase::j_lt_m: return n - 2;
    case FamilyCase::j_ge_m_eq:
    case FamilyCase::j_ge_m_gt: return n - 1;
    default: return 2;
    }
}

unsigned FamilySpec::level_m() const {
    switch (kind) {
    case FamilyCase::j_lt_m: return n - 1;
    case FamilyCase::j_ge_m_eq: return n - 1;
    case FamilyCase::j_ge_m_gt: return n - 2;
    case FamilyCase::n3_j_eq_m: return 2;
    default: return 1;
    }
}

unsigned FamilySpec::level_h() const {
    switch (kind) {
    case FamilyCase::j_lt_m: return n % 2 == 0 ? n / 2 : (n - 1) / 2;
    case FamilyCase::j_ge_m_eq:
    case FamilyCase::j_ge_m_gt: return n % 2 == 0 ? n / 2 : (n + 1) / 2;
    default: return 1;
    }
}

unsigned FamilySpec::effective_i() const {
    if (kind == FamilyCase::n3_j_eq_m || kind == FamilyCase::n3_j_gt_m) return 3;
    return i == 0 ? n : i;
}

uint64_t FamilySpec::effective_alpha() const { return alpha == 0 ? smallest_alpha(p) : alpha; }

uint64_t FamilySpec::lambda_value(const Modulus& mod) const {
    if (kind == FamilyCase::n3_j_gt_m) {
        if (lambda_override) return mod.reduce(*lambda_override);
        // a unit of order exactly p - 1: the p^2-th power of a primitive root
        for (uint64_t c = 2; c < mod.value(); ++c) {
            if (!mod.is_unit(c)) continue;
            if (mod.unit_order(c) == mod.value() / p * (p - 1))
                return mod.pow(c, p * p);
        }
        fail(errc::internal, "no primitive root found");
    }
    unsigned s = kind == FamilyCase::j_lt_m ? level_h() + 1
                 : kind == FamilyCase::n3_j_eq_m ? 2
                                                 : level_h() + 2;
    uint64_t off = s >= n ? 0 : mod.mul(mod.pow_p(s), theta);
    return mod.add(effective_alpha(), off);
}

void FamilySpec::validate() const {
    Modulus mod(p, n); // checks primality and carrier fit
    if (p < 5) fail(errc::spec_violated, "families need p >= 5");
    unsigned ie = effective_i();
    switch (kind) {
    case FamilyCase::j_lt_m:
        if (n < 3) fail(errc::spec_violated, "the j < m family needs n >= 3");
        if (ie <= level_h() + 1 || ie > n)
            fail(errc::spec_violated, "the j < m family needs h + 1 < i <= n");
        break;
    case FamilyCase::j_ge_m_eq:
        if (n < 4) fail(errc::spec_violated, "the j = m family needs n >= 4");
        if (ie <= level_h() || ie > n)
            fail(errc::spec_violated, "the j = m family needs h < i <= n");
        break;
    case FamilyCase::j_ge_m_gt:
        if (n < 4) fail(errc::spec_violated, "the j > m family needs n >= 4");
        if (ie <= level_h() + 1 || ie > n)
            fail(errc::spec_violated, "the j > m family needs h + 1 < i <= n");
        break;
    case FamilyCase::n3_j_eq_m:
    case FamilyCase::n3_j_gt_m:
        if (n != 3) fail(errc::spec_violated, "the n = 3 families fix n = 3");
        break;
    }
    uint64_t a = effective_alpha();
    if (a < 2 || a >= p || Modulus(p, 1).unit_order(a) < 3)
        fail(errc::spec_violated, "alpha must be a unit mod p of order >= 3");
    if (kind == FamilyCase::n3_j_gt_m && lambda_override) {
        uint64_t l = mod.reduce(*lambda_override);
        if (!mod.is_unit(l)) fail(errc::spec_violated, "lambda must be a unit");
        uint64_t ord = mod.unit_order(l);
        if (ord < 3 || (p - 1) % ord != 0)
            fail(errc::spec_violated, "lambda must have order >= 3 dividing p - 1");
    }
}

std::vector<Mat2> FamilySpec::generators(const Modulus& mod) const {
    unsigned ie = effective_i();
    uint64_t lam = lambda_value(mod);
    std::vector<Mat2> gens;
    gens.push_back(Mat2::diagonal(mod, mod.add(1, mod.pow_p(level_m())),
                                  mod.add(1, mod.pow_p(level_h()))));
    gens.push_back(Mat2(mod, 1, 0, mod.pow_p(level_j()), 1));
    if (ie < n) gens.push_back(Mat2(mod, 1, mod.pow_p(ie), 0, 1));
    gens.push_back(Mat2::diagonal(mod, 1, lam));
    return gens;
}

FamilyBuild build_family(const FamilySpec& spec, uint64_t cap) {
    spec.validate();
    Modulus mod(spec.p, spec.n);
    GroupPtr g = close_group(mod, spec.generators(mod), cap);

    unsigned mlvl = spec.level_m();
    unsigned ilvl = spec.effective_i();
    bool second_coord = spec.kind == FamilyCase::n3_j_gt_m;
    std::vector<std::array<uint64_t, 2>> vals(g->order());
    for (size_t idx = 0; idx < g->order(); ++idx) {
        const auto& e = g->element_entries(idx);
        if (second_coord) {
            if (e[1] != 0 || mod.val(e[2]) < 2)
                fail(errc::decomposition_failed, "element outside the family normal form");
            vals[idx] = {0, e[2]};
        } else {
            if (mod.val(mod.sub(e[0], 1)) < mlvl || mod.val(e[1]) < ilvl ||
                mod.val(e[2]) < spec.level_j())
                fail(errc::decomposition_failed, "element outside the family normal form");
            vals[idx] = {mod.sub(e[0], 1), 0};
        }
    }
    Cocycle witness(g, std::move(vals));
    if (!is_cocycle(witness))
        fail(errc::decomposition_failed, "family witness violates the cocycle identity");
    return {g, std::move(witness)};
}

CounterexampleCertificate verify_counterexample(const GroupPtr& g, const Cocycle& witness) {
    CounterexampleCertificate cert{g, witness, false, false, false, false, 0, {}, {}, 0};
    const Modulus& m = g->modulus();
    cert.cocycle_ok = is_cocycle(witness);
    if (cert.cocycle_ok) {
        cert.local_ok = satisfies_local_conditions(witness, false).satisfied;
        auto cb = is_coboundary(witness);
        cert.not_coboundary = !cb.is_coboundary;
        cert.class_order = class_order(witness);
    }
    cert.p_witness_zero = witness.scaled(m.p()).is_zero();
    try {
        cert.profile = extract_parameters(*g);
    } catch (const Error& e) {
        cert.profile_error = e.what();
    }
    cert.fixed_point_max_order = fixed_points(*g).max_exact_order;
    return cert;
}

namespace {

void run_case(GridCase& gc, const Modulus& mod, uint64_t group_cap) {
    const GridTuple& t = gc.requested;
    std::vector<Mat2> gens;
    Mat2 delta = Mat2::diagonal(mod, mod.add(1, mod.pow_p(t.m)),
                                mod.add(1, mod.mul(mod.pow_p(t.h), t.d)));
    if (!delta.is_identity()) gens.push_back(delta);
    if (t.j < t.n) gens.push_back(Mat2(mod, 1, 0, mod.pow_p(t.j), 1));
    if (t.i < t.n) gens.push_back(Mat2(mod, 1, mod.pow_p(t.i), 0, 1));
    // prime-to-p lift of lambda1 (p^(n-1)-th power kills the p-part of the order)
    gens.push_back(Mat2::diagonal(mod, 1, mod.pow(t.lambda1, mod.pow_p(t.n - 1))));

    GroupPtr g;
    try {
        g = close_group(mod, gens, group_cap);
    } catch (const Error& e) {
        if (e.code() == errc::cap_exceeded) {
            gc.skipped = true;
            return;
        }
        throw;
    }
    gc.group_order = g->order();
    try {
        gc.profile = extract_parameters(*g);
    } catch (const Error& e) {
        if (e.code() == errc::no_diagonal_deviation) gc.no_diagonal_deviation = true;
        else if (e.code() == errc::precondition_violated) {
            // products broke the mod-p^2 triangularity; vanishing is not
            // asserted for this tuple, but the computation still runs
        } else {
            throw;
        }
    }
    gc.h1loc = h1_loc(g).h1loc_structure;
    if (gc.profile) gc.checked = vanishing_criterion(*gc.profile);
    else if (gc.no_diagonal_deviation) gc.checked = true;
    gc.violation = gc.checked && !gc.h1loc.empty();
}

} // namespace

GridReport vanishing_grid(const GridConfig& config) {
    GridReport report;
    std::mt19937_64 rng(config.seed);
    for (uint64_t p : config.p_list) {
        std::vector<uint64_t> lambdas;
        {
            Modulus m1(p, 1);
            for (uint64_t a = 2; a < p; ++a)
                if (m1.unit_order(a) >= 3) lambdas.push_back(a);
        }
        if (lambdas.empty()) continue;
        for (unsigned n : config.n_list) {
            Modulus mod(p, n);
            for (unsigned i = 1; i <= n; ++i)
                for (unsigned j = 1; j <= n; ++j)
                    for (unsigned m = 1; m <= n; ++m)
                        for (unsigned h = 1; h <= n; ++h) {
                            unsigned gap = j >= m ? j - m : m - j;
                            if (config.predicate_true_only && i > h + gap) continue;
                            for (unsigned s = 0; s < config.samples_per_tuple; ++s) {
                                if (report.cases.size() >= config.budget) {
                                    report.budget_exceeded = true;
                                    return report;
                                }
                                GridCase gc;
                                gc.requested = {p, n, i, j, m, h,
                                                1 + rng() % (p - 1),
                                                lambdas[rng() % lambdas.size()]};
                                run_case(gc, mod, config.group_cap);
                                report.checked += gc.checked ? 1 : 0;
                                report.violations += gc.violation ? 1 : 0;
                                report.cases.push_back(std::move(gc));
                            }
                        }
        }
    }
    return report;
}

IsogenyReport isogeny_report(const MatrixGroup& g) {
    IsogenyReport out;
    for (unsigned l = 1; l <= g.modulus().n(); ++l) {
        GroupPtr sub = reduce_mod(g, l);
        Triangularity t = triangularity(*sub);
        out.levels.push_back(
            {l, t, t == Triangularity::upper || t == Triangularity::diagonal});
    }
    return out;
}

namespace {

// Canonical key of the element set under conjugation by diagonal matrices.
std::vector<uint64_t> diagonal_conjugacy_key(const MatrixGroup& g) {
    const Modulus& m = g.modulus();
    std::vector<uint64_t> best;
    for (uint64_t w = 1; w < m.value(); ++w) {
        if (!m.is_unit(w)) continue;
        uint64_t wi = m.inv_unit(w);
        std::vector<uint64_t> key;
        key.reserve(g.order() * 4);
        std::vector<std::array<uint64_t, 4>> elems;
        elems.reserve(g.order());
        for (size_t idx = 0; idx < g.order(); ++idx) {
            const auto& e = g.element_entries(idx);
            elems.push_back({e[0], m.mul(e[1], wi), m.mul(e[2], w), e[3]});
        }
        std::sort(elems.begin(), elems.end());
        for (const auto& e : elems) key.insert(key.end(), e.begin(), e.end());
        if (best.empty() || key < best) best = std::move(key);
    }
    return best;
}

} // namespace

std::vector<CounterexampleCertificate> search_counterexamples(const SearchOptions& opt) {
    if (opt.n < 2) fail(errc::invalid_argument, "search needs n >= 2");
    Modulus mod(opt.p, opt.n);
    const uint64_t p = opt.p;

    std::vector<uint64_t> lambdas; // units of p^n whose mod-p order is >= 3
    {
        Modulus m1(p, 1);
        for (uint64_t l = 2; l < mod.value(); ++l) {
            if (!mod.is_unit(l)) continue;
            if (m1.unit_order(l % p) >= 3) lambdas.push_back(l);
        }
    }

    std::vector<unsigned> js, ms;
    for (unsigned v = 1; v < opt.n; ++v) {
        if (!opt.j || *opt.j == v) js.push_back(v);
        if (!opt.m || *opt.m == v) ms.push_back(v);
    }
    if (opt.shape == SearchShape::diagonal) js = {0};

    std::vector<CounterexampleCertificate> out;
    std::set<std::vector<uint64_t>> seen;
    uint64_t candidates = 0;
    for (unsigned j : js)
        for (unsigned m : ms)
            for (unsigned h = 1; h < opt.n; ++h)
                for (uint64_t d = 1; d < p; ++d)
                    for (uint64_t lam : lambdas) {
                        if (++candidates > opt.cap)
                            fail(errc::cap_exceeded, "search space exceeds the cap");
                        std::vector<Mat2> gens;
                        gens.push_back(Mat2::diagonal(mod, mod.add(1, mod.pow_p(m)),
                                                      mod.add(1, mod.mul(mod.pow_p(h), d))));
                        if (opt.shape == SearchShape::lower)
                            gens.push_back(Mat2(mod, 1, 0, mod.pow_p(j), 1));
                        else if (opt.shape == SearchShape::upper)
                            gens.push_back(Mat2(mod, 1, mod.pow_p(j), 0, 1));
                        gens.push_back(Mat2::diagonal(mod, 1, lam));
                        GroupPtr g = close_group(mod, gens, opt.cap);
                        H1Report rep = h1_loc(g);
                        if (rep.h1loc_structure.empty()) continue;
                        if (!seen.insert(diagonal_conjugacy_key(*g)).second) continue;
                        out.push_back(verify_counterexample(g, rep.representatives.front()));
                    }
    return out;
}

} // namespace lgdiv
