#include "gzeta/group.hpp"

#include "gzeta/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gzeta {

Perm compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm inverse_perm(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

std::string cycle_string(const Perm& p) {
    std::string out;
    std::vector<bool> used(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (used[i] || p[i] == static_cast<int>(i)) continue;
        out += '(';
        int j = static_cast<int>(i);
        bool first = true;
        while (!used[j]) {
            used[j] = true;
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
            j = p[j];
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

Perm parse_cycles(const std::string& text, int degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    std::vector<bool> seen(degree, false);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i >= text.size()) throw ParseError("unterminated cycle in: " + text);
            if (text[i] == ')') { ++i; break; }
            if (!isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("unexpected character in cycle notation: " + text);
            int v = 0;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            if (v >= degree) throw ParseError("cycle point " + std::to_string(v) +
                                              " out of range for degree " + std::to_string(degree));
            if (seen[v]) throw ParseError("repeated point " + std::to_string(v) + " in cycles");
            seen[v] = true;
            cycle.push_back(v);
        }
        for (size_t c = 0; c < cycle.size(); ++c) p[cycle[c]] = cycle[(c + 1) % cycle.size()];
        skip_ws();
    }
    return p;
}

FiniteGroup::FiniteGroup(int degree, std::vector<Perm> elements, std::string label)
    : order_(static_cast<int>(elements.size())),
      degree_(degree),
      perms_(std::move(elements)),
      label_(std::move(label)) {
    for (int i = 0; i < order_; ++i) perm_index_[perms_[i]] = i;
    mul_.resize(static_cast<size_t>(order_) * order_);
    inv_.resize(order_);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b) {
            auto it = perm_index_.find(compose(perms_[a], perms_[b]));
            if (it == perm_index_.end())
                throw ValidationError("element set is not closed under composition");
            mul_[static_cast<size_t>(a) * order_ + b] = static_cast<uint16_t>(it->second);
        }
        auto it = perm_index_.find(inverse_perm(perms_[a]));
        if (it == perm_index_.end()) throw ValidationError("element set is not closed under inversion");
        inv_[a] = static_cast<uint16_t>(it->second);
    }
}

int FiniteGroup::element_order(int a) const {
    int k = 1, x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

std::optional<int> FiniteGroup::element_of_perm(const Perm& p) const {
    auto it = perm_index_.find(p);
    if (it == perm_index_.end()) return std::nullopt;
    return it->second;
}

void FiniteGroup::validate() const {
    for (int a = 0; a < order_; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a) throw ValidationError("id 0 is not a two-sided identity");
        if (mul(a, inv(a)) != 0 || mul(inv(a), a) != 0) throw ValidationError("inverse table is wrong");
    }
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw ValidationError("product table is not associative");
}

FiniteGroup build_group_from_permutations(int degree, const std::vector<Perm>& generators,
                                          int order_cap) {
    if (degree <= 0) throw ValidationError("degree must be positive");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != degree)
            throw ValidationError("generator degree mismatch");
        std::vector<bool> hit(degree, false);
        for (int v : g) {
            if (v < 0 || v >= degree || hit[v]) throw ValidationError("generator is not a bijection");
            hit[v] = true;
        }
    }
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elems{id};
    std::map<Perm, int> index{{id, 0}};
    for (size_t i = 0; i < elems.size(); ++i) {
        const Perm cur = elems[i]; // copy: elems may reallocate below
        for (const auto& g : generators) {
            Perm next = compose(cur, g);
            if (index.emplace(next, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(next));
                if (static_cast<int>(elems.size()) > order_cap)
                    throw SizeLimitError("group order exceeds cap of " + std::to_string(order_cap));
            }
        }
    }
    return FiniteGroup(degree, std::move(elems), "G");
}

std::optional<GroupFamily> family_from_name(const std::string& name) {
    if (name == "cyclic") return GroupFamily::Cyclic;
    if (name == "symmetric") return GroupFamily::Symmetric;
    if (name == "dihedral") return GroupFamily::Dihedral;
    return std::nullopt;
}

FiniteGroup builtin_group(GroupFamily family, int n) {
    if (n < 1) throw SizeLimitError("family parameter must be >= 1");
    switch (family) {
        case GroupFamily::Cyclic: {
            if (n > kDefaultGroupOrderCap)
                throw SizeLimitError("cyclic group order exceeds cap");
            std::vector<Perm> gens;
            if (n > 1) {
                Perm rot(n);
                for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
                gens.push_back(rot);
            }
            auto g = build_group_from_permutations(std::max(n, 1), gens, n);
            g.set_label("Z" + std::to_string(n));
            return g;
        }
        case GroupFamily::Symmetric: {
            if (n > 6) throw SizeLimitError("symmetric builtin limited to n <= 6");
            long long fact = 1;
            for (int i = 2; i <= n; ++i) fact *= i;
            std::vector<Perm> gens;
            if (n >= 2) {
                Perm swap01(n);
                std::iota(swap01.begin(), swap01.end(), 0);
                swap01[0] = 1;
                swap01[1] = 0;
                gens.push_back(swap01);
            }
            if (n >= 3) {
                Perm rot(n);
                for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
                gens.push_back(rot);
            }
            auto g = build_group_from_permutations(std::max(n, 1), gens, static_cast<int>(fact));
            g.set_label("S" + std::to_string(n));
            return g;
        }
        case GroupFamily::Dihedral: {
            if (2 * n > kDefaultGroupOrderCap)
                throw SizeLimitError("dihedral group order exceeds cap");
            std::vector<Perm> gens;
            int degree;
            if (n == 1) {
                degree = 2;
                gens.push_back({1, 0});
            } else if (n == 2) {
                // Faithful degree-4 model; the 2-gon vertex action is not faithful.
                degree = 4;
                gens.push_back({1, 0, 2, 3});
                gens.push_back({0, 1, 3, 2});
            } else {
                degree = n;
                Perm rot(n), refl(n);
                for (int i = 0; i < n; ++i) {
                    rot[i] = (i + 1) % n;
                    refl[i] = (n - i) % n;
                }
                gens.push_back(rot);
                gens.push_back(refl);
            }
            auto g = build_group_from_permutations(degree, gens, 2 * n);
            g.set_label("D" + std::to_string(n));
            return g;
        }
    }
    throw ValidationError("unknown group family");
}

bool Subgroup::contains(int e) const {
    return std::binary_search(members.begin(), members.end(), e);
}

bool Subgroup::contains(const Subgroup& other) const {
    return std::includes(members.begin(), members.end(), other.members.begin(),
                         other.members.end());
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members) {
    if (members.empty()) return false;
    for (size_t i = 0; i < members.size(); ++i) {
        if (members[i] < 0 || members[i] >= g.order()) return false;
        if (i > 0 && members[i] <= members[i - 1]) return false;
    }
    if (members[0] != 0) return false;
    for (int a : members)
        for (int b : members)
            if (!std::binary_search(members.begin(), members.end(), g.mul(a, b))) return false;
    return true;
}

Subgroup subgroup_generated_by(const FiniteGroup& g, const std::vector<int>& gens) {
    for (int e : gens)
        if (e < 0 || e >= g.order()) throw ValidationError("generator id out of range");
    std::vector<char> have(g.order(), 0);
    std::vector<int> list{0};
    have[0] = 1;
    for (size_t i = 0; i < list.size(); ++i) {
        for (int gen : gens) {
            int p = g.mul(list[i], gen);
            if (!have[p]) {
                have[p] = 1;
                list.push_back(p);
            }
        }
    }
    std::sort(list.begin(), list.end());
    return Subgroup{std::move(list)};
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& s, int by) {
    std::set<int> out;
    for (int e : s.members) out.insert(g.conj(by, e));
    return Subgroup{std::vector<int>(out.begin(), out.end())};
}

std::vector<int> generators_of(const FiniteGroup& g, const Subgroup& s) {
    std::vector<int> gens;
    Subgroup span = subgroup_generated_by(g, {});
    while (span.members != s.members) {
        for (int e : s.members) {
            if (!span.contains(e)) {
                gens.push_back(e);
                break;
            }
        }
        span = subgroup_generated_by(g, gens);
    }
    return gens;
}

SubgroupClassTable::SubgroupClassTable(std::vector<SubgroupClass> classes)
    : classes_(std::move(classes)) {
    for (int i = 0; i < class_count(); ++i)
        for (const auto& m : classes_[i].members) index_[m.members] = i;
}

int SubgroupClassTable::index_of(const std::vector<int>& members) const {
    auto it = index_.find(members);
    return it == index_.end() ? -1 : it->second;
}

SubgroupClassTable enumerate_subgroup_classes(const FiniteGroup& g) {
    // Cyclic-subgroup join closure, with the conjugacy partition interleaved:
    // joins of conjugates are conjugate, so it is enough to join each class
    // representative with every cyclic subgroup and expand classes by
    // conjugation as they are found.
    const int n = g.order();

    std::vector<std::pair<std::vector<int>, int>> cyclics; // (members, generator)
    {
        std::set<std::vector<int>> seen;
        for (int e = 0; e < n; ++e) {
            auto members = subgroup_generated_by(g, {e}).members;
            if (seen.insert(members).second) cyclics.emplace_back(std::move(members), e);
        }
    }

    struct RawClass {
        std::set<std::vector<int>> conjugates; // lex order; first is the representative
        std::vector<int> gens;                 // small generating list of the representative
    };
    std::vector<RawClass> raws;
    std::map<std::vector<int>, int> subgroup_to_class; // every conjugate of every class

    auto add_class = [&](const std::vector<int>& members) -> int {
        auto it = subgroup_to_class.find(members);
        if (it != subgroup_to_class.end()) return it->second;
        RawClass raw;
        Subgroup sub{members};
        for (int c = 0; c < n; ++c) raw.conjugates.insert(conjugate_subgroup(g, sub, c).members);
        int id = static_cast<int>(raws.size());
        for (const auto& m : raw.conjugates) subgroup_to_class.emplace(m, id);
        raw.gens = generators_of(g, Subgroup{*raw.conjugates.begin()});
        raws.push_back(std::move(raw));
        return id;
    };

    for (const auto& [members, gen] : cyclics) add_class(members);
    for (size_t i = 0; i < raws.size(); ++i) {
        const std::vector<int> rep = *raws[i].conjugates.begin();
        const std::vector<int> base_gens = raws[i].gens;
        for (const auto& [cyc, gen] : cyclics) {
            if (std::includes(rep.begin(), rep.end(), cyc.begin(), cyc.end()))
                continue; // join would be rep itself
            std::vector<int> gens = base_gens;
            gens.push_back(gen);
            add_class(subgroup_generated_by(g, gens).members);
        }
    }

    std::vector<SubgroupClass> classes;
    classes.reserve(raws.size());
    for (const auto& raw : raws) {
        SubgroupClass cls;
        for (const auto& m : raw.conjugates) cls.members.push_back(Subgroup{m});
        cls.representative = cls.members.front();
        // orbit-stabilizer: the stabilizer of S under conjugation is N_G(S)
        cls.normalizer_order = n / static_cast<int>(cls.members.size());
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
        if (a.representative.order() != b.representative.order())
            return a.representative.order() < b.representative.order();
        return a.representative.members < b.representative.members;
    });
    return SubgroupClassTable(std::move(classes));
}

int class_of(const FiniteGroup& g, const SubgroupClassTable& table, const Subgroup& s) {
    if (!is_subgroup(g, s.members))
        throw ValidationError("member set is not a subgroup of the group");
    int idx = table.index_of(s.members);
    if (idx < 0) throw ValidationError("subgroup missing from class table");
    return idx;
}

PairClass pair_class_of(const FiniteGroup& g, const Subgroup& h, const Subgroup& hhat) {
    if (!is_subgroup(g, h.members) || !is_subgroup(g, hhat.members))
        throw ValidationError("pair components must be subgroups");
    if (!h.contains(hhat))
        throw ValidationError("Hhat is not contained in H");
    PairClass best{h.members, hhat.members};
    for (int c = 0; c < g.order(); ++c) {
        PairClass cand{conjugate_subgroup(g, h, c).members, conjugate_subgroup(g, hhat, c).members};
        if (cand < best) best = std::move(cand);
    }
    return best;
}

namespace {

// cosetIdx[x] = index of the left coset xH; reps holds one representative per coset.
void left_cosets(const FiniteGroup& g, const Subgroup& h, std::vector<int>& coset_idx,
                 std::vector<int>& reps) {
    coset_idx.assign(g.order(), -1);
    reps.clear();
    for (int x = 0; x < g.order(); ++x) {
        if (coset_idx[x] >= 0) continue;
        int idx = static_cast<int>(reps.size());
        for (int e : h.members) coset_idx[g.mul(x, e)] = idx;
        reps.push_back(x);
    }
}

} // namespace

TableOfMarks table_of_marks(const FiniteGroup& g, const SubgroupClassTable& table) {
    const int dim = table.class_count();
    TableOfMarks marks;
    marks.dim = dim;
    marks.entries.assign(static_cast<size_t>(dim) * dim, 0);
    std::vector<int> coset_idx, reps;
    for (int h = 0; h < dim; ++h) {
        left_cosets(g, table.at(h).representative, coset_idx, reps);
        for (int k = 0; k < dim; ++k) {
            const auto& kk = table.at(k).representative.members;
            long fixed = 0;
            for (int rep : reps) {
                bool fix = true;
                for (int e : kk) {
                    if (coset_idx[g.mul(e, rep)] != coset_idx[rep]) {
                        fix = false;
                        break;
                    }
                }
                if (fix) ++fixed;
            }
            marks.entries[static_cast<size_t>(k) * dim + h] = fixed;
        }
    }
    return marks;
}

std::vector<int> orbit_sizes_on_cosets(const FiniteGroup& g, const Subgroup& k,
                                       const Subgroup& h) {
    std::vector<int> coset_idx, reps;
    left_cosets(g, h, coset_idx, reps);
    const int nc = static_cast<int>(reps.size());
    std::vector<int> seen(nc, 0);
    std::vector<int> sizes;
    for (int c = 0; c < nc; ++c) {
        if (seen[c]) continue;
        int size = 0;
        std::vector<int> stack{c};
        seen[c] = 1;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            ++size;
            for (int e : k.members) {
                int img = coset_idx[g.mul(e, reps[cur])];
                if (!seen[img]) {
                    seen[img] = 1;
                    stack.push_back(img);
                }
            }
        }
        sizes.push_back(size);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::vector<std::vector<int>> element_conjugacy_classes(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<bool> done(n, false);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < n; ++x) {
        if (done[x]) continue;
        std::set<int> orbit;
        for (int c = 0; c < n; ++c) orbit.insert(g.conj(c, x));
        std::vector<int> cls(orbit.begin(), orbit.end());
        for (int e : cls) done[e] = true;
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [&g](const std::vector<int>& a, const std::vector<int>& b) {
                  int oa = g.element_order(a.front()), ob = g.element_order(b.front());
                  if (oa != ob) return oa < ob;
                  return a.front() < b.front();
              });
    return classes;
}

} // namespace gzeta
