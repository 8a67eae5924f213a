#include "lgdiv/matgroup.hpp"

#include <algorithm>
#include <set>

namespace lgdiv {

Mat2 Mat2::operator*(const Mat2& o) const {
    if (mod != o.mod) fail(errc::modulus_mismatch, "matrix moduli differ");
    Mat2 r(mod);
    r.e[0] = mod.add(mod.mul(e[0], o.e[0]), mod.mul(e[1], o.e[2]));
    r.e[1] = mod.add(mod.mul(e[0], o.e[1]), mod.mul(e[1], o.e[3]));
    r.e[2] = mod.add(mod.mul(e[2], o.e[0]), mod.mul(e[3], o.e[2]));
    r.e[3] = mod.add(mod.mul(e[2], o.e[1]), mod.mul(e[3], o.e[3]));
    return r;
}

uint64_t Mat2::det() const { return mod.sub(mod.mul(e[0], e[3]), mod.mul(e[1], e[2])); }

Mat2 Mat2::inverse() const {
    uint64_t d = det();
    if (!mod.is_unit(d)) fail(errc::non_invertible, "matrix determinant is not a unit");
    uint64_t di = mod.inv_unit(d);
    return Mat2(mod, mod.mul(di, e[3]), mod.mul(di, mod.neg(e[1])),
                mod.mul(di, mod.neg(e[2])), mod.mul(di, e[0]));
}

Mat2 Mat2::pow(uint64_t k) const {
    Mat2 r = identity(mod);
    Mat2 b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

Mat2 Mat2::reduced(const Modulus& target) const {
    if (target.p() != mod.p() || target.n() > mod.n())
        fail(errc::invalid_argument, "reduction target is not a quotient modulus");
    return Mat2(target, e[0], e[1], e[2], e[3]);
}

std::array<uint64_t, 2> Mat2::apply(const std::array<uint64_t, 2>& v) const {
    return {mod.add(mod.mul(e[0], v[0]), mod.mul(e[1], v[1])),
            mod.add(mod.mul(e[2], v[0]), mod.mul(e[3], v[1]))};
}

const char* to_string(Triangularity t) {
    switch (t) {
    case Triangularity::diagonal: return "diagonal";
    case Triangularity::upper: return "upper";
    case Triangularity::lower: return "lower";
    default: return "none";
    }
}

namespace {

uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t hash4(const std::array<uint64_t, 4>& k) {
    uint64_t h = 0x243f6a8885a308d3ULL;
    for (uint64_t v : k) h = mix64(h ^ v);
    return h;
}

} // namespace

MatrixGroup::MatrixGroup(const Modulus& m, std::vector<Mat2> generators, uint64_t cap)
    : mod_(m), gens_(std::move(generators)) {
    if (cap == 0) fail(errc::invalid_argument, "closure cap must be positive");
    if (gens_.size() > 255) fail(errc::invalid_argument, "too many generators");
    for (const Mat2& g : gens_) {
        if (g.mod != mod_) fail(errc::modulus_mismatch, "generator modulus mismatch");
        if (!g.invertible()) fail(errc::non_invertible, "generator is not invertible");
    }
    rehash(64);
    elems_.push_back({1 % mod_.value(), 0, 0, 1 % mod_.value()});
    parent_.push_back(0);
    parent_gen_.push_back(0);
    slots_[hash4(elems_[0]) & mask_] = 1;

    std::array<uint64_t, 4> prod;
    for (size_t qi = 0; qi < elems_.size(); ++qi) {
        for (size_t g = 0; g < gens_.size(); ++g) {
            const auto& a = elems_[qi];
            const auto& b = gens_[g].e;
            prod[0] = mod_.add(mod_.mul(a[0], b[0]), mod_.mul(a[1], b[2]));
            prod[1] = mod_.add(mod_.mul(a[0], b[1]), mod_.mul(a[1], b[3]));
            prod[2] = mod_.add(mod_.mul(a[2], b[0]), mod_.mul(a[3], b[2]));
            prod[3] = mod_.add(mod_.mul(a[2], b[1]), mod_.mul(a[3], b[3]));
            if (lookup(prod)) continue;
            if (elems_.size() >= cap)
                fail(errc::cap_exceeded, "group closure exceeds the element cap");
            elems_.push_back(prod);
            parent_.push_back(static_cast<uint32_t>(qi));
            parent_gen_.push_back(static_cast<uint8_t>(g));
            if (elems_.size() * 2 > slots_.size()) rehash(slots_.size() * 2);
            size_t pos = hash4(prod) & mask_;
            while (slots_[pos] != 0) pos = (pos + 1) & mask_;
            slots_[pos] = static_cast<uint32_t>(elems_.size());
        }
    }
}

void MatrixGroup::rehash(size_t want) {
    size_t cap = 64;
    while (cap < want) cap *= 2;
    slots_.assign(cap, 0);
    mask_ = cap - 1;
    for (size_t i = 0; i < elems_.size(); ++i) {
        size_t pos = hash4(elems_[i]) & mask_;
        while (slots_[pos] != 0) pos = (pos + 1) & mask_;
        slots_[pos] = static_cast<uint32_t>(i + 1);
    }
}

std::optional<size_t> MatrixGroup::lookup(const std::array<uint64_t, 4>& k) const {
    size_t pos = hash4(k) & mask_;
    while (slots_[pos] != 0) {
        size_t idx = slots_[pos] - 1;
        if (elems_[idx] == k) return idx;
        pos = (pos + 1) & mask_;
    }
    return std::nullopt;
}

Mat2 MatrixGroup::element(size_t i) const {
    const auto& a = elems_[i];
    return Mat2(mod_, a[0], a[1], a[2], a[3]);
}

std::optional<size_t> MatrixGroup::find(const Mat2& x) const {
    if (x.mod != mod_) return std::nullopt;
    return lookup(x.e);
}

size_t MatrixGroup::mul_entries(const std::array<uint64_t, 4>& a, const std::array<uint64_t, 4>& b,
                                std::array<uint64_t, 4>& out) const {
    out[0] = mod_.add(mod_.mul(a[0], b[0]), mod_.mul(a[1], b[2]));
    out[1] = mod_.add(mod_.mul(a[0], b[1]), mod_.mul(a[1], b[3]));
    out[2] = mod_.add(mod_.mul(a[2], b[0]), mod_.mul(a[3], b[2]));
    out[3] = mod_.add(mod_.mul(a[2], b[1]), mod_.mul(a[3], b[3]));
    auto idx = lookup(out);
    if (!idx) fail(errc::internal, "product escaped the closed group");
    return *idx;
}

size_t MatrixGroup::product_index(size_t a, size_t b) const {
    std::array<uint64_t, 4> out;
    return mul_entries(elems_[a], elems_[b], out);
}

size_t MatrixGroup::step_index(size_t a, size_t g) const {
    std::array<uint64_t, 4> out;
    return mul_entries(elems_[a], gens_[g].e, out);
}

size_t MatrixGroup::inverse_index(size_t a) const {
    Mat2 inv = element(a).inverse();
    auto idx = lookup(inv.e);
    if (!idx) fail(errc::internal, "inverse escaped the closed group");
    return *idx;
}

uint64_t MatrixGroup::element_order(size_t a) const {
    uint64_t ord = 1;
    size_t cur = a;
    while (cur != 0) {
        cur = product_index(cur, a);
        ++ord;
    }
    return ord;
}

std::vector<uint32_t> MatrixGroup::word(size_t i) const {
    std::vector<uint32_t> w;
    while (i != 0) {
        w.push_back(parent_gen_[i]);
        i = parent_[i];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

GroupPtr close_group(const Modulus& m, const std::vector<Mat2>& generators, uint64_t cap) {
    return std::make_shared<MatrixGroup>(m, generators, cap);
}

GroupPtr reduce_mod(const MatrixGroup& g, unsigned l) {
    if (l < 1 || l > g.modulus().n()) fail(errc::invalid_argument, "reduction level out of range");
    Modulus target(g.modulus().p(), l);
    std::vector<Mat2> gens;
    for (const Mat2& x : g.generators()) gens.push_back(x.reduced(target));
    return close_group(target, gens, std::max<uint64_t>(g.order(), 1));
}

Triangularity triangularity(const MatrixGroup& g) {
    bool upper_ok = true, lower_ok = true;
    for (size_t i = 0; i < g.order(); ++i) {
        const auto& e = g.element_entries(i);
        if (e[2] != 0) upper_ok = false;
        if (e[1] != 0) lower_ok = false;
        if (!upper_ok && !lower_ok) return Triangularity::none;
    }
    if (upper_ok && lower_ok) return Triangularity::diagonal;
    return upper_ok ? Triangularity::upper : Triangularity::lower;
}

FixedSubmodule fixed_points(const MatrixGroup& g) {
    const Modulus& m = g.modulus();
    std::vector<std::vector<uint64_t>> rows;
    for (const Mat2& x : g.generators()) {
        rows.push_back({m.sub(x.e[0], 1), x.e[1]});
        rows.push_back({x.e[2], m.sub(x.e[3], 1)});
    }
    auto gens = kernel_generators(rows, 2, m);
    FixedSubmodule out{{}, 1};
    unsigned minval = m.n();
    for (const auto& v : gens) {
        TorsionPoint pt(m, v[0], v[1]);
        for (const Mat2& x : g.generators()) {
            auto img = x.apply({pt.x, pt.y});
            if (img[0] != pt.x || img[1] != pt.y)
                fail(errc::internal, "fixed-point generator not fixed by a group generator");
        }
        minval = std::min({minval, m.val(pt.x), m.val(pt.y)});
        out.generators.push_back(pt);
    }
    out.max_exact_order = m.pow_p(m.n() - minval);
    return out;
}

std::vector<CyclicSubgroup> cyclic_subgroups(const MatrixGroup& g) {
    std::vector<CyclicSubgroup> out;
    std::set<std::vector<uint32_t>> seen;
    for (size_t i = 0; i < g.order(); ++i) {
        std::vector<uint32_t> orbit{0};
        size_t cur = i;
        while (cur != 0) {
            orbit.push_back(static_cast<uint32_t>(cur));
            cur = g.product_index(cur, i);
        }
        uint64_t order = orbit.size();
        std::sort(orbit.begin(), orbit.end());
        if (seen.insert(std::move(orbit)).second) out.push_back({i, order});
    }
    return out;
}

} // namespace lgdiv
