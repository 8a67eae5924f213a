#include "lgdiv/modring.hpp"

#include <algorithm>
#include <utility>

namespace lgdiv {

namespace {

bool is_prime_u64(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d <= p / d; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t x) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d <= x / d; ++d) {
        if (x % d == 0) {
            out.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) out.push_back(x);
    return out;
}

} // namespace

Modulus::Modulus(uint64_t p, unsigned n) : p_(p), n_(n) {
    if (n < 1) fail(errc::invalid_argument, "modulus exponent must be >= 1");
    if (!is_prime_u64(p)) fail(errc::invalid_argument, "modulus base must be prime");
    unsigned __int128 v = 1;
    for (unsigned t = 0; t < n; ++t) {
        v *= p;
        if (v > UINT64_MAX) fail(errc::overflow, "p^n does not fit the 64-bit carrier");
    }
    pn_ = static_cast<uint64_t>(v);
}

uint64_t Modulus::pow_p(unsigned t) const {
    uint64_t v = 1;
    for (unsigned k = 0; k < t; ++k) v *= p_;
    return v;
}

uint64_t Modulus::add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    if (s < a || s >= pn_) s -= pn_;
    return s;
}

uint64_t Modulus::sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + (pn_ - b); }

uint64_t Modulus::mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % pn_);
}

uint64_t Modulus::pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1 % pn_;
    a %= pn_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

unsigned Modulus::val(uint64_t x) const {
    if (x == 0) return n_;
    unsigned v = 0;
    while (x % p_ == 0) {
        x /= p_;
        ++v;
    }
    return v;
}

uint64_t Modulus::unit_part(uint64_t x) const {
    if (x == 0) return 1;
    while (x % p_ == 0) x /= p_;
    return x;
}

uint64_t Modulus::inv_unit(uint64_t x) const {
    x %= pn_;
    if (x % p_ == 0) fail(errc::non_unit, "inverse of a non-unit");
    __int128 r0 = static_cast<__int128>(pn_), r1 = static_cast<__int128>(x);
    __int128 t0 = 0, t1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    __int128 t = t0 % static_cast<__int128>(pn_);
    if (t < 0) t += static_cast<__int128>(pn_);
    return static_cast<uint64_t>(t);
}

uint64_t Modulus::unit_order(uint64_t x) const {
    x %= pn_;
    if (x % p_ == 0) fail(errc::non_unit, "order of a non-unit");
    uint64_t ord = pn_ / p_ * (p_ - 1); // phi(p^n)
    std::vector<uint64_t> qs = prime_factors(p_ - 1);
    if (n_ > 1) qs.push_back(p_);
    for (uint64_t q : qs)
        while (ord % q == 0 && pow(x, ord / q) == 1) ord /= q;
    return ord;
}

unsigned val_p(const ResidueInt& x) { return x.modulus().val(x.value()); }

ResidueInt inv(const ResidueInt& x) {
    return ResidueInt(x.modulus().inv_unit(x.value()), x.modulus());
}

ModMatrix::ModMatrix(size_t rows, size_t cols, const Modulus& m)
    : rows_(rows), cols_(cols), m_(m), e_(rows * cols, 0) {}

ModMatrix ModMatrix::identity(size_t k, const Modulus& m) {
    ModMatrix r(k, k, m);
    for (size_t i = 0; i < k; ++i) r.set(i, i, 1);
    return r;
}

ModMatrix ModMatrix::mul(const ModMatrix& o) const {
    if (m_ != o.m_) fail(errc::modulus_mismatch, "matrix moduli differ");
    if (cols_ != o.rows_) fail(errc::dimension_mismatch, "matrix product shape mismatch");
    ModMatrix r(rows_, o.cols_, m_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            uint64_t a = at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.set(i, j, m_.add(r.at(i, j), m_.mul(a, o.at(k, j))));
        }
    return r;
}

bool ModMatrix::operator==(const ModMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && m_ == o.m_ && e_ == o.e_;
}

HowellAccumulator::HowellAccumulator(size_t cols, const Modulus& m) : cols_(cols), m_(m) {}

void HowellAccumulator::insert(std::span<const uint64_t> row) {
    if (row.size() != cols_) fail(errc::dimension_mismatch, "row width mismatch");
    pending_.emplace_back(row.begin(), row.end());
    while (!pending_.empty()) {
        std::vector<uint64_t> r = std::move(pending_.back());
        pending_.pop_back();
        place(std::move(r));
    }
}

void HowellAccumulator::place(std::vector<uint64_t>&& r) {
    size_t c = 0;
    size_t t = 0;
    for (;;) {
        while (c < cols_ && r[c] == 0) ++c;
        if (c == cols_) return;
        while (t < rows_.size() && pivot_col_[t] < c) ++t;
        if (t < rows_.size() && pivot_col_[t] == c) {
            unsigned er = m_.val(r[c]);
            if (er < pivot_val_[t]) {
                uint64_t s = m_.inv_unit(m_.unit_part(r[c]));
                for (auto& x : r) x = m_.mul(x, s);
                std::swap(rows_[t], r);
                pivot_val_[t] = er;
                if (er > 0) {
                    std::vector<uint64_t> comp(cols_);
                    uint64_t f = m_.pow_p(m_.n() - er);
                    for (size_t k = c; k < cols_; ++k) comp[k] = m_.mul(rows_[t][k], f);
                    pending_.push_back(std::move(comp));
                }
            }
            uint64_t q = r[c] / m_.pow_p(pivot_val_[t]);
            for (size_t k = c; k < cols_; ++k) r[k] = m_.sub(r[k], m_.mul(q, rows_[t][k]));
        } else {
            unsigned er = m_.val(r[c]);
            uint64_t s = m_.inv_unit(m_.unit_part(r[c]));
            for (auto& x : r) x = m_.mul(x, s);
            rows_.insert(rows_.begin() + t, std::move(r));
            pivot_col_.insert(pivot_col_.begin() + t, c);
            pivot_val_.insert(pivot_val_.begin() + t, er);
            if (er > 0) {
                std::vector<uint64_t> comp(cols_);
                uint64_t f = m_.pow_p(m_.n() - er);
                for (size_t k = c; k < cols_; ++k) comp[k] = m_.mul(rows_[t][k], f);
                pending_.push_back(std::move(comp));
            }
            return;
        }
    }
}

bool HowellAccumulator::reduce(std::vector<uint64_t>& v, std::vector<uint64_t>* coeffs) const {
    if (coeffs) coeffs->assign(rows_.size(), 0);
    for (size_t t = 0; t < rows_.size(); ++t) {
        size_t c = pivot_col_[t];
        if (v[c] == 0) continue;
        if (m_.val(v[c]) < pivot_val_[t]) return false;
        uint64_t q = v[c] / m_.pow_p(pivot_val_[t]);
        for (size_t k = c; k < cols_; ++k) v[k] = m_.sub(v[k], m_.mul(q, rows_[t][k]));
        if (coeffs) (*coeffs)[t] = q;
    }
    for (uint64_t x : v)
        if (x != 0) return false;
    return true;
}

bool HowellAccumulator::contains(std::span<const uint64_t> v) const {
    std::vector<uint64_t> vv(v.begin(), v.end());
    return reduce(vv);
}

ModMatrix HowellAccumulator::canonical() const {
    std::vector<std::vector<uint64_t>> rows = rows_;
    for (size_t t = 0; t < rows.size(); ++t) {
        size_t c = pivot_col_[t];
        uint64_t pe = m_.pow_p(pivot_val_[t]);
        for (size_t u = 0; u < t; ++u) {
            uint64_t q = rows[u][c] / pe;
            if (q == 0) continue;
            for (size_t k = c; k < cols_; ++k)
                rows[u][k] = m_.sub(rows[u][k], m_.mul(q, rows[t][k]));
        }
    }
    ModMatrix out(rows.size(), cols_, m_);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t k = 0; k < cols_; ++k) out.set(i, k, rows[i][k]);
    return out;
}

namespace {

// Howell reduction with the combination over the original rows tracked; used
// by howell_form and by quotient_structure's membership bookkeeping.
struct TrackedHowell {
    size_t cols, width;
    Modulus m;
    std::vector<std::vector<uint64_t>> rows, track;
    std::vector<size_t> pivot_col;
    std::vector<unsigned> pivot_val;
    std::vector<std::pair<std::vector<uint64_t>, std::vector<uint64_t>>> pending;

    TrackedHowell(size_t cols_, size_t width_, const Modulus& m_) : cols(cols_), width(width_), m(m_) {}

    void insert(std::vector<uint64_t> r, std::vector<uint64_t> tr) {
        pending.emplace_back(std::move(r), std::move(tr));
        while (!pending.empty()) {
            auto [pr, pt] = std::move(pending.back());
            pending.pop_back();
            place(std::move(pr), std::move(pt));
        }
    }

    void place(std::vector<uint64_t>&& r, std::vector<uint64_t>&& tr) {
        size_t c = 0, t = 0;
        for (;;) {
            while (c < cols && r[c] == 0) ++c;
            if (c == cols) return;
            while (t < rows.size() && pivot_col[t] < c) ++t;
            if (t < rows.size() && pivot_col[t] == c) {
                unsigned er = m.val(r[c]);
                if (er < pivot_val[t]) {
                    uint64_t s = m.inv_unit(m.unit_part(r[c]));
                    for (auto& x : r) x = m.mul(x, s);
                    for (auto& x : tr) x = m.mul(x, s);
                    std::swap(rows[t], r);
                    std::swap(track[t], tr);
                    pivot_val[t] = er;
                    if (er > 0) push_completion(t);
                }
                uint64_t q = r[c] / m.pow_p(pivot_val[t]);
                for (size_t k = c; k < cols; ++k) r[k] = m.sub(r[k], m.mul(q, rows[t][k]));
                for (size_t k = 0; k < width; ++k) tr[k] = m.sub(tr[k], m.mul(q, track[t][k]));
            } else {
                unsigned er = m.val(r[c]);
                uint64_t s = m.inv_unit(m.unit_part(r[c]));
                for (auto& x : r) x = m.mul(x, s);
                for (auto& x : tr) x = m.mul(x, s);
                rows.insert(rows.begin() + t, std::move(r));
                track.insert(track.begin() + t, std::move(tr));
                pivot_col.insert(pivot_col.begin() + t, c);
                pivot_val.insert(pivot_val.begin() + t, er);
                if (er > 0) push_completion(t);
                return;
            }
        }
    }

    void push_completion(size_t t) {
        uint64_t f = m.pow_p(m.n() - pivot_val[t]);
        std::vector<uint64_t> comp(cols, 0), ctr(width, 0);
        for (size_t k = pivot_col[t]; k < cols; ++k) comp[k] = m.mul(rows[t][k], f);
        for (size_t k = 0; k < width; ++k) ctr[k] = m.mul(track[t][k], f);
        pending.emplace_back(std::move(comp), std::move(ctr));
    }

    void canonicalize() {
        for (size_t t = 0; t < rows.size(); ++t) {
            size_t c = pivot_col[t];
            uint64_t pe = m.pow_p(pivot_val[t]);
            for (size_t u = 0; u < t; ++u) {
                uint64_t q = rows[u][c] / pe;
                if (q == 0) continue;
                for (size_t k = c; k < cols; ++k)
                    rows[u][k] = m.sub(rows[u][k], m.mul(q, rows[t][k]));
                for (size_t k = 0; k < width; ++k)
                    track[u][k] = m.sub(track[u][k], m.mul(q, track[t][k]));
            }
        }
    }
};

} // namespace

HowellForm howell_form(const ModMatrix& a) {
    const Modulus& m = a.modulus();
    TrackedHowell th(a.cols(), a.rows(), m);
    for (size_t i = 0; i < a.rows(); ++i) {
        std::vector<uint64_t> r(a.row(i).begin(), a.row(i).end());
        std::vector<uint64_t> tr(a.rows(), 0);
        tr[i] = 1;
        th.insert(std::move(r), std::move(tr));
    }
    th.canonicalize();
    ModMatrix h(th.rows.size(), a.cols(), m);
    ModMatrix u(th.rows.size(), a.rows(), m);
    for (size_t i = 0; i < th.rows.size(); ++i) {
        for (size_t k = 0; k < a.cols(); ++k) h.set(i, k, th.rows[i][k]);
        for (size_t k = 0; k < a.rows(); ++k) u.set(i, k, th.track[i][k]);
    }
    return {h, u};
}

bool in_row_space(const ModMatrix& h, std::span<const uint64_t> v) {
    if (v.size() != h.cols()) fail(errc::dimension_mismatch, "vector width mismatch");
    const Modulus& m = h.modulus();
    std::vector<uint64_t> vv(v.begin(), v.end());
    for (size_t t = 0; t < h.rows(); ++t) {
        size_t c = 0;
        while (c < h.cols() && h.at(t, c) == 0) ++c;
        if (c == h.cols()) continue;
        if (vv[c] == 0) continue;
        unsigned e = m.val(h.at(t, c));
        if (m.val(vv[c]) < e) return false;
        uint64_t q = m.mul(vv[c] / m.pow_p(e), m.inv_unit(m.unit_part(h.at(t, c))));
        for (size_t k = c; k < h.cols(); ++k) vv[k] = m.sub(vv[k], m.mul(q, h.at(t, k)));
    }
    return std::all_of(vv.begin(), vv.end(), [](uint64_t x) { return x == 0; });
}

std::vector<std::vector<uint64_t>> kernel_generators(
    const std::vector<std::vector<uint64_t>>& rows, size_t cols, const Modulus& m) {
    HowellAccumulator rsp(cols, m);
    for (const auto& r : rows) rsp.insert(r);
    const auto& hr = rsp.rows();
    size_t k = hr.size();
    HowellAccumulator acc(k + cols, m);
    std::vector<uint64_t> b(k + cols);
    for (size_t t = 0; t < cols; ++t) {
        std::fill(b.begin(), b.end(), 0);
        for (size_t s = 0; s < k; ++s) b[s] = hr[s][t];
        b[k + t] = 1;
        acc.insert(b);
    }
    std::vector<std::vector<uint64_t>> gens;
    for (size_t t = 0; t < acc.row_count(); ++t) {
        if (acc.pivot_cols()[t] < k) continue;
        gens.emplace_back(acc.rows()[t].begin() + k, acc.rows()[t].end());
    }
    return gens;
}

LinearSystem::LinearSystem(size_t unknowns, const Modulus& m)
    : unknowns_(unknowns), m_(m), acc_(unknowns + 1, m) {}

void LinearSystem::add_equation(std::span<const uint64_t> coeffs, uint64_t rhs) {
    if (coeffs.size() != unknowns_) fail(errc::dimension_mismatch, "equation width mismatch");
    scratch_.assign(coeffs.begin(), coeffs.end());
    scratch_.push_back(m_.reduce(rhs));
    acc_.insert(scratch_);
}

std::optional<LinearSystem::Solution> LinearSystem::solve() const {
    // augmented rows (A' | -b')
    std::vector<std::vector<uint64_t>> aug, left;
    for (const auto& r : acc_.rows()) {
        std::vector<uint64_t> a(r.begin(), r.begin() + unknowns_);
        left.push_back(a);
        a.push_back(m_.neg(r[unknowns_]));
        aug.push_back(std::move(a));
    }
    std::vector<std::vector<uint64_t>> k = kernel_generators(aug, unknowns_ + 1, m_);
    std::optional<std::vector<uint64_t>> particular;
    for (auto it = k.rbegin(); it != k.rend(); ++it) {
        uint64_t t = (*it)[unknowns_];
        if (!m_.is_unit(t)) continue;
        uint64_t ti = m_.inv_unit(t);
        std::vector<uint64_t> x(unknowns_);
        for (size_t i = 0; i < unknowns_; ++i) x[i] = m_.mul((*it)[i], ti);
        particular = std::move(x);
        break;
    }
    if (!particular) return std::nullopt;
    return Solution{*particular, kernel_generators(left, unknowns_, m_)};
}

std::optional<SolutionSet> solve_linear(const ModMatrix& a, const std::vector<ResidueInt>& b) {
    if (b.size() != a.rows()) fail(errc::dimension_mismatch, "rhs length mismatch");
    const Modulus& m = a.modulus();
    LinearSystem sys(a.cols(), m);
    for (size_t i = 0; i < a.rows(); ++i) {
        if (b[i].modulus() != m) fail(errc::modulus_mismatch, "rhs modulus mismatch");
        sys.add_equation(a.row(i), b[i].value());
    }
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    SolutionSet out;
    for (uint64_t x : sol->particular) out.particular.emplace_back(x, m);
    for (const auto& kg : sol->kernel) {
        std::vector<ResidueInt> kv;
        for (uint64_t x : kg) kv.emplace_back(x, m);
        out.kernel.push_back(std::move(kv));
    }
    return out;
}

namespace {

// Reduce v against a canonical Howell matrix, recording the combination.
bool reduce_against(const ModMatrix& h, std::vector<uint64_t>& v, std::vector<uint64_t>& coeffs) {
    const Modulus& m = h.modulus();
    coeffs.assign(h.rows(), 0);
    for (size_t t = 0; t < h.rows(); ++t) {
        size_t c = 0;
        while (c < h.cols() && h.at(t, c) == 0) ++c;
        if (c == h.cols() || v[c] == 0) continue;
        unsigned e = m.val(h.at(t, c));
        if (m.val(v[c]) < e) return false;
        uint64_t q = v[c] / m.pow_p(e);
        for (size_t k = c; k < h.cols(); ++k) v[k] = m.sub(v[k], m.mul(q, h.at(t, k)));
        coeffs[t] = q;
    }
    return std::all_of(v.begin(), v.end(), [](uint64_t x) { return x == 0; });
}

struct SmithResult {
    std::vector<unsigned> pivot_vals;
    std::vector<std::vector<uint64_t>> vinv; // a x a
};

// Diagonalization over the local ring Z/p^n: pivot of minimal valuation,
// leftmost then topmost on ties.  Row ops are free; column ops update vinv.
SmithResult smith_diagonalize(std::vector<std::vector<uint64_t>> d, size_t a, const Modulus& m) {
    SmithResult res;
    res.vinv.assign(a, std::vector<uint64_t>(a, 0));
    for (size_t i = 0; i < a; ++i) res.vinv[i][i] = 1;
    size_t k = d.size();
    size_t s = 0;
    while (s < k && s < a) {
        unsigned best = m.n() + 1;
        size_t bi = 0, bj = 0;
        for (size_t j = s; j < a; ++j)
            for (size_t i = s; i < k; ++i) {
                if (d[i][j] == 0) continue;
                unsigned e = m.val(d[i][j]);
                if (e < best) {
                    best = e;
                    bi = i;
                    bj = j;
                }
            }
        if (best > m.n()) break;
        std::swap(d[bi], d[s]);
        if (bj != s) {
            for (size_t i = 0; i < k; ++i) std::swap(d[i][bj], d[i][s]);
            std::swap(res.vinv[bj], res.vinv[s]);
        }
        unsigned e = best;
        uint64_t pe = m.pow_p(e);
        uint64_t ui = m.inv_unit(m.unit_part(d[s][s]));
        for (size_t j = s; j < a; ++j) d[s][j] = m.mul(d[s][j], ui);
        for (size_t i = s + 1; i < k; ++i) {
            if (d[i][s] == 0) continue;
            uint64_t q = d[i][s] / pe;
            for (size_t j = s; j < a; ++j) d[i][j] = m.sub(d[i][j], m.mul(q, d[s][j]));
        }
        for (size_t j = s + 1; j < a; ++j) {
            if (d[s][j] == 0) continue;
            uint64_t q = d[s][j] / pe;
            // col_j -= q * col_s; vinv.row(s) += q * vinv.row(j)
            for (size_t i = s; i < k; ++i) d[i][j] = m.sub(d[i][j], m.mul(q, d[i][s]));
            for (size_t t = 0; t < a; ++t)
                res.vinv[s][t] = m.add(res.vinv[s][t], m.mul(q, res.vinv[j][t]));
        }
        res.pivot_vals.push_back(e);
        ++s;
    }
    return res;
}

} // namespace

QuotientStructure quotient_structure(const std::vector<std::vector<uint64_t>>& gens,
                                     size_t dim, const Modulus& m,
                                     const std::vector<std::vector<uint64_t>>& modulo) {
    HowellAccumulator ha(dim, m);
    for (const auto& g : gens) ha.insert(g);
    ModMatrix h = ha.canonical();
    size_t a = h.rows();

    std::vector<std::vector<uint64_t>> rel;
    for (const auto& b : modulo) {
        if (b.size() != dim) fail(errc::dimension_mismatch, "subgroup generator width mismatch");
        std::vector<uint64_t> v(b.begin(), b.end());
        std::vector<uint64_t> coeffs;
        if (!reduce_against(h, v, coeffs))
            fail(errc::subgroup_not_contained, "subgroup generator outside the span");
        rel.push_back(std::move(coeffs));
    }
    QuotientStructure out;
    if (a == 0) return out;

    // relations of the presentation R^a -> span: kernel of x -> x . h
    std::vector<std::vector<uint64_t>> ht(dim, std::vector<uint64_t>(a));
    for (size_t t = 0; t < dim; ++t)
        for (size_t s = 0; s < a; ++s) ht[t][s] = h.at(s, t);
    for (auto& kg : kernel_generators(ht, a, m)) rel.push_back(std::move(kg));

    SmithResult sm = smith_diagonalize(rel, a, m);
    std::vector<std::pair<uint64_t, size_t>> ords; // (order, coordinate)
    for (size_t t = 0; t < a; ++t) {
        uint64_t order = t < sm.pivot_vals.size() ? m.pow_p(sm.pivot_vals[t]) : m.value();
        if (order > 1) ords.emplace_back(order, t);
    }
    std::stable_sort(ords.begin(), ords.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [order, t] : ords) {
        out.orders.push_back(order);
        std::vector<uint64_t> rep(dim, 0);
        for (size_t s = 0; s < a; ++s) {
            uint64_t c = sm.vinv[t][s];
            if (c == 0) continue;
            for (size_t k = 0; k < dim; ++k) rep[k] = m.add(rep[k], m.mul(c, h.at(s, k)));
        }
        out.representatives.push_back(std::move(rep));
    }
    return out;
}

std::vector<uint64_t> abelian_structure(const std::vector<std::vector<uint64_t>>& gens,
                                        size_t dim, const Modulus& m,
                                        const std::vector<std::vector<uint64_t>>& modulo) {
    return quotient_structure(gens, dim, m, modulo).orders;
}

} // namespace lgdiv
