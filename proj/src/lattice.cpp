#include "asphera/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace asphera {

Poset::Poset(std::vector<PosetElement> elements, std::vector<std::vector<bool>> strict)
    : elements_(std::move(elements)), closure_(std::move(strict))
{
    const int n = size();
    internal_check(static_cast<int>(closure_.size()) == n, "Poset: relation size mismatch");
    for (const auto& row : closure_)
        internal_check(static_cast<int>(row.size()) == n, "Poset: relation row mismatch");
    for (int i = 0; i < n; ++i)
        if (closure_[i][i])
            throw ValidationError("Poset: relation is not irreflexive at " + elements_[i].label);
    // Warshall closure
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (closure_[i][k])
                for (int j = 0; j < n; ++j)
                    if (closure_[k][j])
                        closure_[i][j] = true;
    for (int i = 0; i < n; ++i)
        if (closure_[i][i])
            throw ValidationError("Poset: relation has a cycle through " + elements_[i].label);
    // covering pairs: a < b with nothing strictly between
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!closure_[a][b])
                continue;
            bool covered = true;
            for (int c = 0; c < n && covered; ++c)
                if (closure_[a][c] && closure_[c][b])
                    covered = false;
            if (covered)
                hasse_.emplace_back(a, b);
        }
}

std::vector<std::vector<int>> Poset::chains(int max_length) const
{
    const int n = size();
    std::vector<std::vector<int>> succ(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (closure_[a][b])
                succ[a].push_back(b);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int last) -> void {
        out.push_back(cur);
        if (max_length > 0 && static_cast<int>(cur.size()) >= max_length)
            return;
        for (int nxt : succ[last]) {
            cur.push_back(nxt);
            self(self, nxt);
            cur.pop_back();
        }
    };
    for (int start = 0; start < n; ++start) {
        cur.assign(1, start);
        dfs(dfs, start);
    }
    return out;
}

namespace {

std::string set_label(const FiniteGroup& g, const std::vector<int>& members)
{
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < members.size(); ++i) {
        if (i)
            os << ",";
        os << g.names[members[i]];
    }
    os << "}";
    return os.str();
}

bool strict_subset(const std::vector<int>& a, const std::vector<int>& b)
{
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

Poset coset_poset(const FiniteGroup& g)
{
    std::vector<PosetElement> elems;
    std::vector<std::vector<int>> member_sets;
    for (const Subgroup& h : all_subgroups(g)) {
        if (h.size() == g.order)
            continue; // the whole group is excluded
        for (Coset& c : left_cosets(g, h)) {
            member_sets.push_back(c.members);
            elems.push_back(PosetElement{set_label(g, c.members), std::move(c), std::nullopt});
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && strict_subset(member_sets[a], member_sets[b]))
                less[a][b] = true;
    return Poset(std::move(elems), std::move(less));
}

Poset subgroup_lattice(const FiniteGroup& g)
{
    std::vector<PosetElement> elems;
    std::vector<std::vector<int>> member_sets;
    for (Subgroup& h : all_subgroups(g)) {
        if (h.size() == 1 || h.size() == g.order)
            continue; // open segment between {e} and G
        member_sets.push_back(h.members);
        elems.push_back(PosetElement{set_label(g, h.members), std::nullopt, std::move(h)});
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && strict_subset(member_sets[a], member_sets[b]))
                less[a][b] = true;
    return Poset(std::move(elems), std::move(less));
}

Poset segment(const Poset& p, SegmentBound lo, SegmentBound hi)
{
    using Kind = SegmentBound::Kind;
    auto check_index = [&](const SegmentBound& b) {
        if (b.kind == Kind::Element && (b.index < 0 || b.index >= p.size()))
            throw ValidationError("segment: bound index out of range");
    };
    check_index(lo);
    check_index(hi);
    if (lo.kind == Kind::Top || hi.kind == Kind::Bottom ||
        (lo.kind == Kind::Element && hi.kind == Kind::Element &&
         !p.less(lo.index, hi.index)))
        throw ValidationError("segment: lower bound is not strictly below upper bound");

    std::vector<int> keep;
    for (int x = 0; x < p.size(); ++x) {
        bool above = lo.kind == Kind::Bottom || (lo.kind == Kind::Element && p.less(lo.index, x));
        bool below = hi.kind == Kind::Top || (hi.kind == Kind::Element && p.less(x, hi.index));
        if (above && below)
            keep.push_back(x);
    }
    std::vector<PosetElement> elems;
    elems.reserve(keep.size());
    for (int x : keep)
        elems.push_back(p.elements()[x]);
    const int n = static_cast<int>(keep.size());
    std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && p.less(keep[a], keep[b]))
                less[a][b] = true;
    return Poset(std::move(elems), std::move(less));
}

int SimplicialComplex::count(int k) const
{
    if (k < 0 || k > dim())
        return 0;
    return static_cast<int>(strata_[k].size());
}

long long SimplicialComplex::total_simplices() const
{
    long long n = 0;
    for (const auto& s : strata_)
        n += static_cast<long long>(s.size());
    return n;
}

int SimplicialComplex::index_of(int k, const std::vector<int>& s) const
{
    if (k < 0 || k > dim())
        return -1;
    auto it = index_[k].find(s);
    return it == index_[k].end() ? -1 : it->second;
}

bool SimplicialComplex::has(const std::vector<int>& s) const
{
    return index_of(static_cast<int>(s.size()) - 1, s) >= 0;
}

void SimplicialComplex::build_index()
{
    index_.clear();
    index_.resize(strata_.size());
    for (size_t k = 0; k < strata_.size(); ++k) {
        auto& stratum = strata_[k];
        std::sort(stratum.begin(), stratum.end());
        for (int i = 0; i < static_cast<int>(stratum.size()); ++i) {
            const auto& s = stratum[i];
            if (static_cast<int>(s.size()) != static_cast<int>(k) + 1)
                throw ValidationError("simplex of wrong dimension in stratum " +
                                      std::to_string(k));
            for (size_t t = 0; t < s.size(); ++t) {
                if (s[t] < 0 || s[t] >= vertex_count_)
                    throw ValidationError("simplex vertex out of range");
                if (t > 0 && s[t] <= s[t - 1])
                    throw ValidationError("simplex vertices must strictly increase");
            }
            if (!index_[k].emplace(s, i).second)
                throw ValidationError("duplicate simplex");
        }
    }
    // face closure
    for (size_t k = 1; k < strata_.size(); ++k)
        for (const auto& s : strata_[k]) {
            std::vector<int> face(s.size() - 1);
            for (size_t drop = 0; drop < s.size(); ++drop) {
                int w = 0;
                for (size_t t = 0; t < s.size(); ++t)
                    if (t != drop)
                        face[w++] = s[t];
                if (index_[k - 1].find(face) == index_[k - 1].end())
                    throw ValidationError("complex is not closed under faces");
            }
        }
}

SimplicialComplex SimplicialComplex::closure(int vertex_count,
                                             const std::vector<std::vector<int>>& simplices)
{
    std::set<std::vector<int>> all;
    // every subset of a simplex is a simplex; close by dropping one vertex at
    // a time
    std::vector<std::vector<int>> stack;
    for (auto s : simplices) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!s.empty() && all.insert(s).second)
            stack.push_back(std::move(s));
    }
    while (!stack.empty()) {
        std::vector<int> s = std::move(stack.back());
        stack.pop_back();
        if (s.size() == 1)
            continue;
        for (size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<int> face;
            face.reserve(s.size() - 1);
            for (size_t t = 0; t < s.size(); ++t)
                if (t != drop)
                    face.push_back(s[t]);
            if (all.insert(face).second)
                stack.push_back(std::move(face));
        }
    }
    size_t maxdim = 0;
    for (const auto& s : all)
        maxdim = std::max(maxdim, s.size());
    std::vector<std::vector<std::vector<int>>> strata(maxdim);
    for (const auto& s : all)
        strata[s.size() - 1].push_back(s);
    return from_strata(vertex_count, std::move(strata));
}

SimplicialComplex SimplicialComplex::from_strata(
    int vertex_count, std::vector<std::vector<std::vector<int>>> strata)
{
    while (!strata.empty() && strata.back().empty())
        strata.pop_back();
    SimplicialComplex k;
    k.vertex_count_ = vertex_count;
    k.strata_ = std::move(strata);
    if (k.strata_.empty())
        k.strata_.push_back({}); // dimension -1 complexes are represented as empty stratum 0
    k.build_index();
    return k;
}

SimplicialComplex order_complex(const Poset& p)
{
    std::vector<std::vector<std::vector<int>>> strata;
    for (auto& chain : p.chains()) {
        std::sort(chain.begin(), chain.end());
        size_t k = chain.size() - 1;
        if (strata.size() <= k)
            strata.resize(k + 1);
        strata[k].push_back(std::move(chain));
    }
    if (strata.empty())
        strata.push_back({});
    return SimplicialComplex::from_strata(p.size(), std::move(strata));
}

PosetAction induced_poset_action(const GroupAction& a, const Poset& p)
{
    if (a.ground_size != p.size())
        throw ValidationError("induced_poset_action: ground set does not match the poset");
    for (int g = 0; g < a.group.order; ++g)
        for (const auto& [x, y] : p.hasse())
            if (!p.less(a.apply(g, x), a.apply(g, y)))
                throw ValidationError("induced_poset_action: " + a.group.names[g] +
                                      " breaks the order on the pair (" +
                                      p.elements()[x].label + " < " + p.elements()[y].label + ")");
    return PosetAction{p, a};
}

SimplicialAction make_simplicial_action(FiniteGroup group, SimplicialComplex complex,
                                        std::vector<std::vector<int>> vertex_perms)
{
    GroupAction base = make_action(group, complex.vertex_count(), vertex_perms);
    for (int g = 0; g < base.group.order; ++g)
        for (int k = 0; k <= complex.dim(); ++k)
            for (const auto& s : complex.simplices(k)) {
                std::vector<int> image(s.size());
                for (size_t t = 0; t < s.size(); ++t)
                    image[t] = base.perms[g][s[t]];
                std::sort(image.begin(), image.end());
                if (complex.index_of(k, image) < 0)
                    throw ValidationError("simplicial action: " + base.group.names[g] +
                                          " does not map a simplex to a simplex");
            }
    return SimplicialAction{std::move(base.group), std::move(complex), std::move(base.perms)};
}

SimplicialAction simplicial_action(const PosetAction& pa)
{
    return make_simplicial_action(pa.action.group, order_complex(pa.poset), pa.action.perms);
}

} // namespace asphera
