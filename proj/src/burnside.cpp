#include "gzeta/burnside.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gzeta {

BurnsideContext::BurnsideContext(FiniteGroup g) : group_(std::move(g)) {
    classes_ = enumerate_subgroup_classes(group_);
    marks_ = table_of_marks(group_, classes_);
    const int dim = classes_.class_count();
    orbit_sizes_.resize(static_cast<size_t>(dim) * dim);
    for (int k = 0; k < dim; ++k)
        for (int h = 0; h < dim; ++h)
            orbit_sizes_[static_cast<size_t>(k) * dim + h] = orbit_sizes_on_cosets(
                group_, classes_.at(k).representative, classes_.at(h).representative);
    element_classes_ = element_conjugacy_classes(group_);
    coset_fixed_.resize(dim);
    for (int h = 0; h < dim; ++h) {
        coset_fixed_[h].assign(group_.order(), 0);
        // Fixed cosets of a single element = fixed points of the cyclic
        // subgroup it generates; count directly instead.
        std::vector<int> coset_idx(group_.order(), -1);
        std::vector<int> reps;
        const auto& sub = classes_.at(h).representative.members;
        for (int x = 0; x < group_.order(); ++x) {
            if (coset_idx[x] >= 0) continue;
            int idx = static_cast<int>(reps.size());
            for (int e : sub) coset_idx[group_.mul(x, e)] = idx;
            reps.push_back(x);
        }
        for (int e = 0; e < group_.order(); ++e) {
            long fixed = 0;
            for (int rep : reps)
                if (coset_idx[group_.mul(e, rep)] == coset_idx[rep]) ++fixed;
            coset_fixed_[h][e] = fixed;
        }
    }
}

std::shared_ptr<const BurnsideContext> BurnsideContext::make(FiniteGroup g) {
    return std::shared_ptr<const BurnsideContext>(new BurnsideContext(std::move(g)));
}

int BurnsideContext::class_of(const Subgroup& s) const {
    return gzeta::class_of(group_, classes_, s);
}

const std::vector<int>& BurnsideContext::coset_orbit_sizes(int k_class, int h_class) const {
    return orbit_sizes_[static_cast<size_t>(k_class) * class_count() + h_class];
}

long BurnsideContext::fixed_cosets(int element, int h_class) const {
    return coset_fixed_[h_class][element];
}

void require_same_context(const Ctx& a, const Ctx& b) {
    if (a.get() != b.get()) throw ValidationError("values belong to different groups");
}

BurnsideElement::BurnsideElement(Ctx ctx, std::vector<Rat> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != ctx_->class_count())
        throw ValidationError("coefficient vector has wrong length");
    for (auto& c : coeffs_) c.canonicalize();
}

BurnsideElement BurnsideElement::zero(const Ctx& ctx) {
    return BurnsideElement(ctx, std::vector<Rat>(ctx->class_count(), Rat(0)));
}

BurnsideElement BurnsideElement::basis(const Ctx& ctx, int h_class) {
    std::vector<Rat> c(ctx->class_count(), Rat(0));
    c.at(h_class) = 1;
    return BurnsideElement(ctx, std::move(c));
}

BurnsideElement BurnsideElement::unit(const Ctx& ctx) {
    return basis(ctx, ctx->full_class());
}

bool BurnsideElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& q) { return q == 0; });
}

bool BurnsideElement::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& q) { return is_integer(q); });
}

bool BurnsideElement::is_effective_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& q) { return is_integer(q) && q >= 0; });
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& rhs) {
    require_same_context(ctx_, rhs.ctx_);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& rhs) {
    require_same_context(ctx_, rhs.ctx_);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

BurnsideElement& BurnsideElement::operator*=(const Rat& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

BurnsideElement operator-(BurnsideElement a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

BurnsideElement BurnsideElement::operator*(const BurnsideElement& rhs) const {
    return gzeta::mul(*this, rhs);
}

bool BurnsideElement::operator==(const BurnsideElement& rhs) const {
    return ctx_.get() == rhs.ctx_.get() && coeffs_ == rhs.coeffs_;
}

GhostVector to_ghost(const BurnsideElement& b) {
    const auto& ctx = *b.context();
    const int dim = ctx.class_count();
    GhostVector v(dim, Rat(0));
    for (int k = 0; k < dim; ++k)
        for (int h = 0; h < dim; ++h)
            if (b.coeff(h) != 0) v[k] += b.coeff(h) * ctx.marks().at(k, h);
    return v;
}

BurnsideElement from_ghost(const Ctx& ctx, const GhostVector& v) {
    const int dim = ctx->class_count();
    if (static_cast<int>(v.size()) != dim)
        throw ValidationError("ghost vector has wrong length");
    // marks is upper triangular in canonical class order with positive
    // diagonal, so back-substitution from the last class is exact.
    std::vector<Rat> x(dim, Rat(0));
    for (int i = dim - 1; i >= 0; --i) {
        Rat acc = v[i];
        for (int j = i + 1; j < dim; ++j)
            if (ctx->marks().at(i, j) != 0) acc -= x[j] * ctx->marks().at(i, j);
        x[i] = acc / ctx->marks().at(i, i);
    }
    return BurnsideElement(ctx, std::move(x));
}

BurnsideElement mul(const BurnsideElement& a, const BurnsideElement& b) {
    require_same_context(a.context(), b.context());
    GhostVector ga = to_ghost(a), gb = to_ghost(b);
    for (size_t i = 0; i < ga.size(); ++i) ga[i] *= gb[i];
    return from_ghost(a.context(), ga);
}

Rat forget_to_integer(const BurnsideElement& b) {
    return to_ghost(b)[b.context()->trivial_class()];
}

std::vector<Rat> to_permutation_character(const BurnsideElement& b) {
    const auto& ctx = *b.context();
    std::vector<Rat> out;
    out.reserve(ctx.element_classes().size());
    for (const auto& cls : ctx.element_classes()) {
        Rat v(0);
        for (int h = 0; h < ctx.class_count(); ++h)
            if (b.coeff(h) != 0) v += b.coeff(h) * ctx.fixed_cosets(cls.front(), h);
        out.push_back(v);
    }
    return out;
}

GSetExplicit::GSetExplicit(Ctx ctx, int points, std::vector<int> action)
    : ctx_(std::move(ctx)), size_(points), action_(std::move(action)) {
    if (action_.size() != static_cast<size_t>(ctx_->group().order()) * size_)
        throw ValidationError("action table has wrong shape");
}

GSetExplicit GSetExplicit::empty(const Ctx& ctx) { return GSetExplicit(ctx, 0, {}); }

GSetExplicit GSetExplicit::one_point(const Ctx& ctx) {
    return GSetExplicit(ctx, 1, std::vector<int>(ctx->group().order(), 0));
}

GSetExplicit GSetExplicit::regular(const Ctx& ctx) {
    const auto& g = ctx->group();
    std::vector<int> act(static_cast<size_t>(g.order()) * g.order());
    for (int e = 0; e < g.order(); ++e)
        for (int x = 0; x < g.order(); ++x) act[static_cast<size_t>(e) * g.order() + x] = g.mul(e, x);
    return GSetExplicit(ctx, g.order(), std::move(act));
}

GSetExplicit GSetExplicit::natural(const Ctx& ctx) {
    const auto& g = ctx->group();
    const int d = g.degree();
    std::vector<int> act(static_cast<size_t>(g.order()) * d);
    for (int e = 0; e < g.order(); ++e)
        for (int x = 0; x < d; ++x) act[static_cast<size_t>(e) * d + x] = g.perm_of(e)[x];
    return GSetExplicit(ctx, d, std::move(act));
}

GSetExplicit GSetExplicit::coset_space(const Ctx& ctx, const Subgroup& h) {
    const auto& g = ctx->group();
    if (!is_subgroup(g, h.members)) throw ValidationError("coset space needs a subgroup");
    std::vector<int> coset_idx(g.order(), -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order(); ++x) {
        if (coset_idx[x] >= 0) continue;
        int idx = static_cast<int>(reps.size());
        for (int e : h.members) coset_idx[g.mul(x, e)] = idx;
        reps.push_back(x);
    }
    const int nc = static_cast<int>(reps.size());
    std::vector<int> act(static_cast<size_t>(g.order()) * nc);
    for (int e = 0; e < g.order(); ++e)
        for (int c = 0; c < nc; ++c)
            act[static_cast<size_t>(e) * nc + c] = coset_idx[g.mul(e, reps[c])];
    return GSetExplicit(ctx, nc, std::move(act));
}

GSetExplicit GSetExplicit::coset_space(const Ctx& ctx, int h_class) {
    return coset_space(ctx, ctx->classes().at(h_class).representative);
}

void GSetExplicit::validate() const {
    const auto& g = ctx_->group();
    for (int x = 0; x < size_; ++x)
        if (apply(0, x) != x) throw ValidationError("identity does not act trivially");
    for (int e = 0; e < g.order(); ++e)
        for (int x = 0; x < size_; ++x) {
            int img = apply(e, x);
            if (img < 0 || img >= size_) throw ValidationError("action image out of range");
        }
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
            int ab = g.mul(a, b);
            for (int x = 0; x < size_; ++x)
                if (apply(a, apply(b, x)) != apply(ab, x))
                    throw ValidationError("action table does not respect composition");
        }
}

GSetExplicit cartesian_product(const GSetExplicit& x, const GSetExplicit& y) {
    require_same_context(x.context(), y.context());
    const auto& g = x.context()->group();
    const int n = x.size() * y.size();
    std::vector<int> act(static_cast<size_t>(g.order()) * n);
    for (int e = 0; e < g.order(); ++e)
        for (int a = 0; a < x.size(); ++a)
            for (int b = 0; b < y.size(); ++b)
                act[static_cast<size_t>(e) * n + a * y.size() + b] =
                    x.apply(e, a) * y.size() + y.apply(e, b);
    return GSetExplicit(x.context(), n, std::move(act));
}

GSetExplicit disjoint_union(const GSetExplicit& x, const GSetExplicit& y) {
    require_same_context(x.context(), y.context());
    const auto& g = x.context()->group();
    const int n = x.size() + y.size();
    std::vector<int> act(static_cast<size_t>(g.order()) * n);
    for (int e = 0; e < g.order(); ++e) {
        for (int a = 0; a < x.size(); ++a) act[static_cast<size_t>(e) * n + a] = x.apply(e, a);
        for (int b = 0; b < y.size(); ++b)
            act[static_cast<size_t>(e) * n + x.size() + b] = x.size() + y.apply(e, b);
    }
    return GSetExplicit(x.context(), n, std::move(act));
}

namespace {

// C(n+k-1, k) with saturation at cap+1.
long long multiset_count(long long n, long long k, long long cap) {
    if (k == 0) return 1;
    if (n == 0) return 0;
    long long num = 1;
    for (long long i = 1; i <= k; ++i) {
        num = num * (n - 1 + i);
        if (num > cap * i) return cap + 1; // already too big even before dividing
        num /= i;                          // exact: prefix products of C(n-1+i, i)
    }
    return num;
}

} // namespace

GSetExplicit sym_power_explicit(const GSetExplicit& x, int k, long long multiset_cap) {
    if (k < 0) throw ValidationError("symmetric power needs k >= 0");
    const auto& ctx = x.context();
    if (k == 0) return GSetExplicit::one_point(ctx);
    if (x.size() == 0) return GSetExplicit::empty(ctx);
    if (multiset_count(x.size(), k, multiset_cap) > multiset_cap)
        throw SizeLimitError("symmetric power would enumerate more than " +
                             std::to_string(multiset_cap) + " multisets");

    std::vector<std::vector<int>> points;
    std::map<std::vector<int>, int> index;
    std::vector<int> cur(k, 0);
    // non-decreasing k-tuples over point ids, lexicographic
    while (true) {
        index.emplace(cur, static_cast<int>(points.size()));
        points.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == x.size() - 1) --i;
        if (i < 0) break;
        int v = cur[i] + 1;
        for (int j = i; j < k; ++j) cur[j] = v;
    }

    const auto& g = ctx->group();
    const int n = static_cast<int>(points.size());
    std::vector<int> act(static_cast<size_t>(g.order()) * n);
    std::vector<int> img(k);
    for (int e = 0; e < g.order(); ++e)
        for (int p = 0; p < n; ++p) {
            for (int j = 0; j < k; ++j) img[j] = x.apply(e, points[p][j]);
            std::sort(img.begin(), img.end());
            act[static_cast<size_t>(e) * n + p] = index.at(img);
        }
    return GSetExplicit(ctx, n, std::move(act));
}

Subgroup stabilizer(const GSetExplicit& x, int point) {
    std::vector<int> members;
    for (int e = 0; e < x.context()->group().order(); ++e)
        if (x.apply(e, point) == point) members.push_back(e);
    return Subgroup{std::move(members)};
}

BurnsideElement gset_decompose(const GSetExplicit& x) {
    x.validate();
    const auto& ctx = x.context();
    const auto& g = ctx->group();
    std::vector<Rat> coeffs(ctx->class_count(), Rat(0));
    std::vector<bool> seen(x.size(), false);
    for (int p = 0; p < x.size(); ++p) {
        if (seen[p]) continue;
        for (int e = 0; e < g.order(); ++e) seen[x.apply(e, p)] = true;
        coeffs[ctx->class_of(stabilizer(x, p))] += 1;
    }
    BurnsideElement out(ctx, std::move(coeffs));

    // Cross-check the orbit count against direct fixed-point counts.
    GhostVector ghost = to_ghost(out);
    for (int k = 0; k < ctx->class_count(); ++k) {
        const auto& sub = ctx->classes().at(k).representative.members;
        long fixed = 0;
        for (int p = 0; p < x.size(); ++p) {
            bool fix = true;
            for (int e : sub)
                if (x.apply(e, p) != p) {
                    fix = false;
                    break;
                }
            if (fix) ++fixed;
        }
        if (ghost[k] != fixed)
            throw std::logic_error("orbit decomposition disagrees with fixed-point counts");
    }
    return out;
}

} // namespace gzeta
