#include "lgdiv/cohomology.hpp"

#include <algorithm>

namespace lgdiv {

Cocycle::Cocycle(GroupPtr g, std::vector<std::array<uint64_t, 2>> values)
    : g_(std::move(g)), values_(std::move(values)) {
    if (!g_) fail(errc::invalid_argument, "cocycle needs a group");
    if (values_.size() != g_->order())
        fail(errc::incomplete_cocycle, "cocycle must assign a value to every element");
    const Modulus& m = g_->modulus();
    for (auto& v : values_) {
        v[0] = m.reduce(v[0]);
        v[1] = m.reduce(v[1]);
    }
}

Cocycle Cocycle::zero(GroupPtr g) {
    size_t n = g->order();
    return Cocycle(std::move(g), std::vector<std::array<uint64_t, 2>>(n, {0, 0}));
}

void Cocycle::set(size_t i, std::array<uint64_t, 2> v) {
    const Modulus& m = g_->modulus();
    values_[i] = {m.reduce(v[0]), m.reduce(v[1])};
}

Cocycle Cocycle::scaled(uint64_t k) const {
    const Modulus& m = g_->modulus();
    auto vals = values_;
    for (auto& v : vals) {
        v[0] = m.mul(v[0], k);
        v[1] = m.mul(v[1], k);
    }
    return Cocycle(g_, std::move(vals));
}

Cocycle Cocycle::operator+(const Cocycle& o) const {
    if (g_ != o.g_) fail(errc::invalid_argument, "cocycles over different groups");
    const Modulus& m = g_->modulus();
    auto vals = values_;
    for (size_t i = 0; i < vals.size(); ++i) {
        vals[i][0] = m.add(vals[i][0], o.values_[i][0]);
        vals[i][1] = m.add(vals[i][1], o.values_[i][1]);
    }
    return Cocycle(g_, std::move(vals));
}

Cocycle Cocycle::operator-(const Cocycle& o) const {
    if (g_ != o.g_) fail(errc::invalid_argument, "cocycles over different groups");
    const Modulus& m = g_->modulus();
    auto vals = values_;
    for (size_t i = 0; i < vals.size(); ++i) {
        vals[i][0] = m.sub(vals[i][0], o.values_[i][0]);
        vals[i][1] = m.sub(vals[i][1], o.values_[i][1]);
    }
    return Cocycle(g_, std::move(vals));
}

bool Cocycle::is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const auto& v) { return v[0] == 0 && v[1] == 0; });
}

bool is_cocycle(const Cocycle& z) {
    const MatrixGroup& g = *z.group();
    const Modulus& m = g.modulus();
    std::vector<size_t> gidx(g.generator_count());
    for (size_t gi = 0; gi < g.generator_count(); ++gi) gidx[gi] = g.step_index(0, gi);
    for (size_t idx = 0; idx < g.order(); ++idx) {
        const auto& e = g.element_entries(idx);
        const auto& zs = z.value(idx);
        for (size_t gi = 0; gi < g.generator_count(); ++gi) {
            size_t child = g.step_index(idx, gi);
            const auto& zg = z.value(gidx[gi]);
            uint64_t x = m.add(zs[0], m.add(m.mul(e[0], zg[0]), m.mul(e[1], zg[1])));
            uint64_t y = m.add(zs[1], m.add(m.mul(e[2], zg[0]), m.mul(e[3], zg[1])));
            if (z.value(child)[0] != x || z.value(child)[1] != y) return false;
        }
    }
    return true;
}

bool is_cocycle_all_pairs(const Cocycle& z) {
    const MatrixGroup& g = *z.group();
    if (g.order() > 4096)
        fail(errc::invalid_argument, "all-pairs check limited to small groups");
    const Modulus& m = g.modulus();
    for (size_t a = 0; a < g.order(); ++a) {
        const auto& e = g.element_entries(a);
        const auto& za = z.value(a);
        for (size_t b = 0; b < g.order(); ++b) {
            size_t c = g.product_index(a, b);
            const auto& zb = z.value(b);
            uint64_t x = m.add(za[0], m.add(m.mul(e[0], zb[0]), m.mul(e[1], zb[1])));
            uint64_t y = m.add(za[1], m.add(m.mul(e[2], zb[0]), m.mul(e[3], zb[1])));
            if (z.value(c)[0] != x || z.value(c)[1] != y) return false;
        }
    }
    return true;
}

Cocycle coboundary(const GroupPtr& g, const TorsionPoint& w) {
    if (w.mod != g->modulus()) fail(errc::modulus_mismatch, "point modulus mismatch");
    const Modulus& m = g->modulus();
    std::vector<std::array<uint64_t, 2>> vals(g->order());
    for (size_t i = 0; i < g->order(); ++i) {
        const auto& e = g->element_entries(i);
        vals[i][0] = m.sub(m.add(m.mul(e[0], w.x), m.mul(e[1], w.y)), w.x);
        vals[i][1] = m.sub(m.add(m.mul(e[2], w.x), m.mul(e[3], w.y)), w.y);
    }
    return Cocycle(g, std::move(vals));
}

namespace {

// Solves the 2x2 system A W = b over Z/p^n.  The pivot is the entry of
// minimal valuation over the whole matrix, which makes the solvability
// decision independent of the free choices.
std::optional<std::array<uint64_t, 2>> solve2x2(const Modulus& m, std::array<uint64_t, 4> a,
                                                std::array<uint64_t, 2> b) {
    unsigned best = m.n() + 1;
    size_t bi = 0;
    for (size_t k = 0; k < 4; ++k) {
        if (a[k] == 0) continue;
        unsigned v = m.val(a[k]);
        if (v < best) {
            best = v;
            bi = k;
        }
    }
    if (best > m.n()) {
        if (b[0] != 0 || b[1] != 0) return std::nullopt;
        return std::array<uint64_t, 2>{0, 0};
    }
    bool swap_cols = (bi % 2 == 1);
    if (swap_cols) {
        std::swap(a[0], a[1]);
        std::swap(a[2], a[3]);
    }
    if (bi / 2 == 1) {
        std::swap(a[0], a[2]);
        std::swap(a[1], a[3]);
        std::swap(b[0], b[1]);
    }
    unsigned e0 = best;
    uint64_t pe0 = m.pow_p(e0);
    uint64_t inv0 = m.inv_unit(m.unit_part(a[0]));
    if (a[2] != 0) {
        uint64_t q = m.mul(a[2] / pe0, inv0);
        a[2] = 0;
        a[3] = m.sub(a[3], m.mul(q, a[1]));
        b[1] = m.sub(b[1], m.mul(q, b[0]));
    }
    uint64_t y;
    if (a[3] == 0) {
        if (b[1] != 0) return std::nullopt;
        y = 0;
    } else {
        unsigned e1 = m.val(a[3]);
        if (m.val(b[1]) < e1) return std::nullopt;
        y = m.mul(b[1] / m.pow_p(e1), m.inv_unit(m.unit_part(a[3])));
    }
    uint64_t c = m.sub(b[0], m.mul(a[1], y));
    if (m.val(c) < e0) return std::nullopt;
    uint64_t x = m.mul(m.mul(c / pe0, inv0), 1);
    if (swap_cols) std::swap(x, y);
    return std::array<uint64_t, 2>{x, y};
}

// Per-element linear expansion of a cocycle from its generator values: the
// value on an element is L_sigma . v where v stacks the generator values.
struct GenSolver {
    const MatrixGroup& g;
    Modulus m;
    size_t r, width;
    std::vector<uint64_t> l; // order x 2 x width

    explicit GenSolver(const MatrixGroup& gg)
        : g(gg), m(gg.modulus()), r(gg.generator_count()), width(2 * gg.generator_count()) {
        l.assign(g.order() * 2 * width, 0);
        for (size_t idx = 1; idx < g.order(); ++idx) {
            size_t pa = g.parent(idx);
            size_t gi = g.parent_generator(idx);
            const uint64_t* lp = l.data() + pa * 2 * width;
            uint64_t* lc = l.data() + idx * 2 * width;
            std::copy(lp, lp + 2 * width, lc);
            const auto& pe = g.element_entries(pa);
            lc[2 * gi] = m.add(lc[2 * gi], pe[0]);
            lc[2 * gi + 1] = m.add(lc[2 * gi + 1], pe[1]);
            lc[width + 2 * gi] = m.add(lc[width + 2 * gi], pe[2]);
            lc[width + 2 * gi + 1] = m.add(lc[width + 2 * gi + 1], pe[3]);
        }
    }

    const uint64_t* row(size_t idx, size_t which) const {
        return l.data() + idx * 2 * width + which * width;
    }

    void relation_rows(HowellAccumulator& acc) const {
        std::vector<uint64_t> r0(width), r1(width);
        for (size_t idx = 0; idx < g.order(); ++idx) {
            const auto& se = g.element_entries(idx);
            for (size_t gi = 0; gi < r; ++gi) {
                size_t child = g.step_index(idx, gi);
                if (child != 0 && g.parent(child) == idx && g.parent_generator(child) == gi)
                    continue; // tree edge, identically zero
                const uint64_t *a0 = row(idx, 0), *a1 = row(idx, 1);
                const uint64_t *c0 = row(child, 0), *c1 = row(child, 1);
                for (size_t k = 0; k < width; ++k) {
                    r0[k] = m.sub(a0[k], c0[k]);
                    r1[k] = m.sub(a1[k], c1[k]);
                }
                r0[2 * gi] = m.add(r0[2 * gi], se[0]);
                r0[2 * gi + 1] = m.add(r0[2 * gi + 1], se[1]);
                r1[2 * gi] = m.add(r1[2 * gi], se[2]);
                r1[2 * gi + 1] = m.add(r1[2 * gi + 1], se[3]);
                acc.insert(r0);
                acc.insert(r1);
            }
        }
    }

    void local_rows(HowellAccumulator& acc) const {
        std::vector<uint64_t> rw(width);
        for (size_t idx = 0; idx < g.order(); ++idx) {
            const auto& e = g.element_entries(idx);
            std::vector<std::vector<uint64_t>> tr = {{m.sub(e[0], 1), e[2]},
                                                     {e[1], m.sub(e[3], 1)}};
            auto ann = kernel_generators(tr, 2, m);
            const uint64_t *a0 = row(idx, 0), *a1 = row(idx, 1);
            for (const auto& u : ann) {
                if (u[0] == 0 && u[1] == 0) continue;
                for (size_t k = 0; k < width; ++k)
                    rw[k] = m.add(m.mul(u[0], a0[k]), m.mul(u[1], a1[k]));
                acc.insert(rw);
            }
        }
    }

    std::vector<std::array<uint64_t, 2>> expand(std::span<const uint64_t> v) const {
        std::vector<std::array<uint64_t, 2>> vals(g.order());
        for (size_t idx = 0; idx < g.order(); ++idx) {
            const uint64_t *a0 = row(idx, 0), *a1 = row(idx, 1);
            uint64_t x = 0, y = 0;
            for (size_t k = 0; k < width; ++k) {
                if (v[k] == 0) continue;
                x = m.add(x, m.mul(a0[k], v[k]));
                y = m.add(y, m.mul(a1[k], v[k]));
            }
            vals[idx] = {x, y};
        }
        return vals;
    }

    std::vector<uint64_t> coboundary_vector(uint64_t wx, uint64_t wy) const {
        std::vector<uint64_t> v(width);
        for (size_t gi = 0; gi < r; ++gi) {
            const auto& e = g.generators()[gi].e;
            v[2 * gi] = m.sub(m.add(m.mul(e[0], wx), m.mul(e[1], wy)), wx);
            v[2 * gi + 1] = m.sub(m.add(m.mul(e[2], wx), m.mul(e[3], wy)), wy);
        }
        return v;
    }
};

// Full-enumeration backend: one unknown pair per element, all-pairs
// constraints.  Retained as the independent cross-check.
struct EnumSolver {
    const MatrixGroup& g;
    Modulus m;
    size_t width;

    explicit EnumSolver(const MatrixGroup& gg) : g(gg), m(gg.modulus()), width(2 * gg.order()) {
        if (g.order() > kEnumerationLimit)
            fail(errc::invalid_argument, "enumeration backend is limited to small groups");
    }

    void relation_rows(HowellAccumulator& acc) const {
        std::vector<uint64_t> r0(width), r1(width);
        std::fill(r0.begin(), r0.end(), 0);
        r0[0] = 1;
        acc.insert(r0);
        std::fill(r0.begin(), r0.end(), 0);
        r0[1] = 1;
        acc.insert(r0);
        for (size_t a = 0; a < g.order(); ++a) {
            const auto& e = g.element_entries(a);
            for (size_t b = 0; b < g.order(); ++b) {
                size_t c = g.product_index(a, b);
                std::fill(r0.begin(), r0.end(), 0);
                std::fill(r1.begin(), r1.end(), 0);
                r0[2 * c] = m.add(r0[2 * c], 1);
                r1[2 * c + 1] = m.add(r1[2 * c + 1], 1);
                r0[2 * a] = m.sub(r0[2 * a], 1);
                r1[2 * a + 1] = m.sub(r1[2 * a + 1], 1);
                r0[2 * b] = m.sub(r0[2 * b], e[0]);
                r0[2 * b + 1] = m.sub(r0[2 * b + 1], e[1]);
                r1[2 * b] = m.sub(r1[2 * b], e[2]);
                r1[2 * b + 1] = m.sub(r1[2 * b + 1], e[3]);
                acc.insert(r0);
                acc.insert(r1);
            }
        }
    }

    void local_rows(HowellAccumulator& acc) const {
        std::vector<uint64_t> rw(width);
        for (size_t idx = 0; idx < g.order(); ++idx) {
            const auto& e = g.element_entries(idx);
            std::vector<std::vector<uint64_t>> tr = {{m.sub(e[0], 1), e[2]},
                                                     {e[1], m.sub(e[3], 1)}};
            auto ann = kernel_generators(tr, 2, m);
            for (const auto& u : ann) {
                if (u[0] == 0 && u[1] == 0) continue;
                std::fill(rw.begin(), rw.end(), 0);
                rw[2 * idx] = u[0];
                rw[2 * idx + 1] = u[1];
                acc.insert(rw);
            }
        }
    }

    std::vector<std::array<uint64_t, 2>> expand(std::span<const uint64_t> v) const {
        std::vector<std::array<uint64_t, 2>> vals(g.order());
        for (size_t i = 0; i < g.order(); ++i) vals[i] = {v[2 * i], v[2 * i + 1]};
        return vals;
    }

    std::vector<uint64_t> coboundary_vector(uint64_t wx, uint64_t wy) const {
        std::vector<uint64_t> v(width);
        for (size_t i = 0; i < g.order(); ++i) {
            const auto& e = g.element_entries(i);
            v[2 * i] = m.sub(m.add(m.mul(e[0], wx), m.mul(e[1], wy)), wx);
            v[2 * i + 1] = m.sub(m.add(m.mul(e[2], wx), m.mul(e[3], wy)), wy);
        }
        return v;
    }
};

struct Spaces {
    std::vector<std::vector<uint64_t>> z1, z1loc, b1;
};

template <typename Solver>
Spaces compute_spaces(const Solver& s, bool want_loc) {
    Spaces out;
    HowellAccumulator rel(s.width, s.m);
    s.relation_rows(rel);
    out.z1 = kernel_generators(rel.rows(), s.width, s.m);
    if (want_loc) {
        s.local_rows(rel);
        out.z1loc = kernel_generators(rel.rows(), s.width, s.m);
    }
    out.b1.push_back(s.coboundary_vector(1, 0));
    out.b1.push_back(s.coboundary_vector(0, 1));
    return out;
}

template <typename Solver>
CocycleModule cocycle_space_impl(const GroupPtr& g) {
    Solver s(*g);
    auto sp = compute_spaces(s, false);
    CocycleModule out;
    out.group = g;
    out.structure = abelian_structure(sp.z1, s.width, s.m);
    for (const auto& v : sp.z1) out.basis.emplace_back(g, s.expand(v));
    return out;
}

template <typename Solver>
H1Report h1_loc_impl(const GroupPtr& g) {
    Solver s(*g);
    auto sp = compute_spaces(s, true);
    H1Report rep;
    rep.h1_structure = abelian_structure(sp.z1, s.width, s.m, sp.b1);
    auto q = quotient_structure(sp.z1loc, s.width, s.m, sp.b1);
    rep.h1loc_structure = q.orders;
    for (const auto& v : q.representatives) rep.representatives.emplace_back(g, s.expand(v));
    return rep;
}

} // namespace

CocycleModule cocycle_space(const GroupPtr& g, CohomologyBackend backend) {
    return backend == CohomologyBackend::generator_values ? cocycle_space_impl<GenSolver>(g)
                                                          : cocycle_space_impl<EnumSolver>(g);
}

CocycleModule coboundary_space(const GroupPtr& g) {
    const Modulus& m = g->modulus();
    GenSolver s(*g);
    std::vector<std::vector<uint64_t>> b1 = {s.coboundary_vector(1, 0), s.coboundary_vector(0, 1)};
    CocycleModule out;
    out.group = g;
    out.structure = abelian_structure(b1, s.width, m);
    out.basis.emplace_back(coboundary(g, TorsionPoint(m, 1, 0)));
    out.basis.emplace_back(coboundary(g, TorsionPoint(m, 0, 1)));
    return out;
}

LocalConditions satisfies_local_conditions(const Cocycle& z, bool keep_witnesses) {
    if (!is_cocycle(z)) fail(errc::not_a_cocycle, "local conditions need a cocycle");
    const MatrixGroup& g = *z.group();
    const Modulus& m = g.modulus();
    LocalConditions out;
    out.satisfied = true;
    if (keep_witnesses) out.witnesses.assign(g.order(), {0, 0});
    for (size_t idx = 0; idx < g.order(); ++idx) {
        const auto& e = g.element_entries(idx);
        auto w = solve2x2(m, {m.sub(e[0], 1), e[1], e[2], m.sub(e[3], 1)}, z.value(idx));
        if (!w) {
            out.satisfied = false;
            out.first_failure = idx;
            out.witnesses.clear();
            return out;
        }
        if (keep_witnesses) out.witnesses[idx] = *w;
    }
    return out;
}

std::vector<uint64_t> h1(const GroupPtr& g, CohomologyBackend backend) {
    if (backend == CohomologyBackend::generator_values) {
        GenSolver s(*g);
        auto sp = compute_spaces(s, false);
        return abelian_structure(sp.z1, s.width, s.m, sp.b1);
    }
    EnumSolver s(*g);
    auto sp = compute_spaces(s, false);
    return abelian_structure(sp.z1, s.width, s.m, sp.b1);
}

H1Report h1_loc(const GroupPtr& g, CohomologyBackend backend) {
    return backend == CohomologyBackend::generator_values ? h1_loc_impl<GenSolver>(g)
                                                          : h1_loc_impl<EnumSolver>(g);
}

CoboundaryWitness is_coboundary(const Cocycle& z) {
    if (!is_cocycle(z)) fail(errc::not_a_cocycle, "coboundary test needs a cocycle");
    const MatrixGroup& g = *z.group();
    const Modulus& m = g.modulus();
    LinearSystem sys(2, m);
    for (size_t gi = 0; gi < g.generator_count(); ++gi) {
        const auto& e = g.generators()[gi].e;
        size_t idx = g.step_index(0, gi);
        const auto& zv = z.value(idx);
        uint64_t row0[2] = {m.sub(e[0], 1), e[1]};
        uint64_t row1[2] = {e[2], m.sub(e[3], 1)};
        sys.add_equation(std::span<const uint64_t>(row0, 2), zv[0]);
        sys.add_equation(std::span<const uint64_t>(row1, 2), zv[1]);
    }
    auto sol = sys.solve();
    CoboundaryWitness out;
    if (!sol) return out;
    out.is_coboundary = true;
    out.witness = {sol->particular[0], sol->particular[1]};
    return out;
}

uint64_t class_order(const Cocycle& z) {
    const Modulus& m = z.group()->modulus();
    for (unsigned k = 0;; ++k) {
        uint64_t e = m.pow_p(k);
        if (is_coboundary(z.scaled(e)).is_coboundary) return e;
        if (k == m.n()) fail(errc::internal, "class order exceeded the module exponent");
    }
}

namespace {

std::vector<size_t> subgroup_closure(const MatrixGroup& g, const std::vector<size_t>& seeds) {
    std::vector<char> in(g.order(), 0);
    std::vector<size_t> out;
    in[0] = 1;
    out.push_back(0);
    for (size_t s : seeds) {
        if (!in[s]) {
            in[s] = 1;
            out.push_back(s);
        }
    }
    for (size_t qi = 0; qi < out.size(); ++qi) {
        for (size_t s : seeds) {
            size_t t = g.product_index(out[qi], s);
            if (!in[t]) {
                in[t] = 1;
                out.push_back(t);
            }
        }
    }
    return out;
}

// Stacked solve of (theta - 1) X = Z_theta over a list of element indices.
std::optional<std::array<uint64_t, 2>> solve_restriction(const Cocycle& z,
                                                         const std::vector<size_t>& idxs) {
    const MatrixGroup& g = *z.group();
    const Modulus& m = g.modulus();
    LinearSystem sys(2, m);
    for (size_t idx : idxs) {
        const auto& e = g.element_entries(idx);
        const auto& zv = z.value(idx);
        uint64_t row0[2] = {m.sub(e[0], 1), e[1]};
        uint64_t row1[2] = {e[2], m.sub(e[3], 1)};
        sys.add_equation(std::span<const uint64_t>(row0, 2), zv[0]);
        sys.add_equation(std::span<const uint64_t>(row1, 2), zv[1]);
    }
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    return std::array<uint64_t, 2>{sol->particular[0], sol->particular[1]};
}

} // namespace

Cocycle normalize_cocycle(const Cocycle& z, const ParameterProfile& profile) {
    const GroupPtr& gp = z.group();
    const MatrixGroup& g = *gp;
    const Modulus& m = g.modulus();
    if (!is_cocycle(z)) fail(errc::not_a_cocycle, "normalization needs a cocycle");
    if (!satisfies_local_conditions(z, false).satisfied)
        fail(errc::not_locally_trivial, "cocycle does not satisfy the local conditions");

    auto rho_idx = g.find(profile.rho);
    auto tau_l_idx = g.find(profile.tau_l);
    auto tau_u_idx = g.find(profile.tau_u);
    auto delta_idx = g.find(profile.delta);
    if (!rho_idx || !tau_l_idx || !tau_u_idx || !delta_idx)
        fail(errc::invalid_argument, "profile elements are not members of the group");

    // restriction to <rho, strictly lower part>
    std::vector<size_t> lower_seeds{*rho_idx, *tau_l_idx};
    std::vector<size_t> h3 = subgroup_closure(g, lower_seeds);
    {
        std::vector<char> in(g.order(), 0);
        for (size_t t : h3) in[t] = 1;
        bool all_in = true;
        for (size_t idx = 0; idx < g.order() && all_in; ++idx) {
            const auto& e = g.element_entries(idx);
            if (e[0] == 1 && e[3] == 1 && e[1] == 0 && !in[idx]) all_in = false;
        }
        if (!all_in) {
            // fall back to seeding with every strictly lower element
            for (size_t idx = 0; idx < g.order(); ++idx) {
                const auto& e = g.element_entries(idx);
                if (e[0] == 1 && e[3] == 1 && e[1] == 0) lower_seeds.push_back(idx);
            }
            h3 = subgroup_closure(g, lower_seeds);
        }
    }
    auto r_point = solve_restriction(z, h3);
    if (!r_point)
        fail(errc::normalization_obstructed, "restriction to the lower subgroup is not a coboundary");

    Cocycle zn = z - coboundary(gp, TorsionPoint(m, (*r_point)[0], (*r_point)[1]));

    // the remaining two restriction problems must be solvable as well
    std::vector<size_t> upper_seeds{*rho_idx, *tau_u_idx};
    std::vector<size_t> h2 = subgroup_closure(g, upper_seeds);
    if (!solve_restriction(zn, h2))
        fail(errc::normalization_obstructed, "restriction to the upper subgroup is not a coboundary");

    std::vector<size_t> diag;
    for (size_t idx = 0; idx < g.order(); ++idx) {
        const auto& e = g.element_entries(idx);
        if (e[1] == 0 && e[2] == 0) diag.push_back(idx);
    }
    if (!solve_restriction(zn, diag))
        fail(errc::normalization_obstructed, "restriction to the diagonal subgroup is not a coboundary");

    auto zero_at = [&](size_t idx) { return zn.value(idx)[0] == 0 && zn.value(idx)[1] == 0; };
    if (!zero_at(*rho_idx) || !zero_at(*tau_l_idx) || !zero_at(*tau_u_idx))
        fail(errc::internal, "normalized cocycle did not vanish on the distinguished generators");
    const auto& zd = zn.value(*delta_idx);
    if (zd[1] != 0 || m.val(zd[0]) < std::min(profile.m, m.n()))
        fail(errc::internal, "normalized value on delta is not of the shape (p^m b, 0)");
    return zn;
}

} // namespace lgdiv
