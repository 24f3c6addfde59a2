#include "asphera/grp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace asphera {

int FiniteGroup::inv(int g) const
{
    for (int h = 0; h < order; ++h)
        if (table[g][h] == identity)
            return h;
    throw InternalError("FiniteGroup: element without inverse");
}

int FiniteGroup::element_order(int g) const
{
    int x = g, n = 1;
    while (x != identity) {
        x = mul(x, g);
        ++n;
    }
    return n;
}

bool FiniteGroup::is_abelian() const
{
    for (int g = 0; g < order; ++g)
        for (int h = g + 1; h < order; ++h)
            if (mul(g, h) != mul(h, g))
                return false;
    return true;
}

std::optional<int> FiniteGroup::cyclic_generator() const
{
    for (int g = 0; g < order; ++g)
        if (element_order(g) == order)
            return g;
    return std::nullopt;
}

FiniteGroup group_from_table(std::vector<std::vector<int>> table, std::vector<std::string> names)
{
    const int n = static_cast<int>(table.size());
    if (n == 0)
        throw ValidationError("group table is empty");
    for (int g = 0; g < n; ++g)
        if (static_cast<int>(table[g].size()) != n)
            throw ValidationError("group table row " + std::to_string(g) + " has wrong length");
    for (int g = 0; g < n; ++g) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int h = 0; h < n; ++h) {
            int r = table[g][h], c = table[h][g];
            if (r < 0 || r >= n || c < 0 || c >= n)
                throw ValidationError("group table entry out of range at (" + std::to_string(g) +
                                      "," + std::to_string(h) + ")");
            if (seen_row[r])
                throw ValidationError("group table row " + std::to_string(g) +
                                      " is not a permutation");
            if (seen_col[c])
                throw ValidationError("group table column " + std::to_string(g) +
                                      " is not a permutation");
            seen_row[r] = seen_col[c] = true;
        }
    }
    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g)
            ok = table[e][g] == g && table[g][e] == g;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0)
        throw ValidationError("group table has no two-sided identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw ValidationError("associativity fails at triple (" + std::to_string(a) +
                                          "," + std::to_string(b) + "," + std::to_string(c) + ")");
    // permutation rows + identity + associativity give inverses for free, but
    // check anyway so a violation is reported with its element
    for (int g = 0; g < n; ++g) {
        bool has_inv = false;
        for (int h = 0; h < n; ++h)
            if (table[g][h] == identity && table[h][g] == identity)
                has_inv = true;
        if (!has_inv)
            throw ValidationError("element " + std::to_string(g) + " has no two-sided inverse");
    }
    if (names.empty()) {
        names.resize(n);
        for (int g = 0; g < n; ++g)
            names[g] = "g" + std::to_string(g);
    } else if (static_cast<int>(names.size()) != n) {
        throw ValidationError("names list does not match group order");
    }
    return FiniteGroup{n, std::move(table), std::move(names), identity};
}

FiniteGroup cyclic_group(int n)
{
    if (n < 1)
        throw ValidationError("cyclic group order must be >= 1");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (int g = 0; g < n; ++g) {
        names[g] = std::to_string(g);
        for (int h = 0; h < n; ++h)
            table[g][h] = (g + h) % n;
    }
    return FiniteGroup{n, std::move(table), std::move(names), 0};
}

FiniteGroup dihedral_group(int n)
{
    if (n < 1)
        throw ValidationError("dihedral parameter must be >= 1");
    // element (j, i) = s^j r^i at index j*n + i;
    // (s^j r^i)(s^l r^k) = s^(j+l) r^(k +- i), minus when l = 1.
    const int order = 2 * n;
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    auto idx = [n](int j, int i) { return j * n + ((i % n + n) % n); };
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < 2; ++l)
                for (int k = 0; k < n; ++k)
                    table[idx(j, i)][idx(l, k)] = idx((j + l) % 2, l ? k - i : k + i);
    std::vector<std::string> names(order);
    for (int i = 0; i < n; ++i) {
        names[i] = i == 0 ? "e" : (i == 1 ? "r" : "r^" + std::to_string(i));
        names[n + i] = i == 0 ? "s" : (i == 1 ? "sr" : "sr^" + std::to_string(i));
    }
    return FiniteGroup{order, std::move(table), std::move(names), 0};
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
    const int n = a.order * b.order;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    auto idx = [&](int x, int y) { return x * b.order + y; };
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1) {
            names[idx(x1, y1)] = "(" + a.names[x1] + "," + b.names[y1] + ")";
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2)
                    table[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
        }
    return FiniteGroup{n, std::move(table), std::move(names), idx(a.identity, b.identity)};
}

bool Subgroup::contains(int g) const
{
    return std::binary_search(members.begin(), members.end(), g);
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h)
{
    if (h.parent_order != g.order || h.members.empty())
        return false;
    if (!h.contains(g.identity))
        return false;
    for (int a : h.members) {
        if (a < 0 || a >= g.order)
            return false;
        if (!h.contains(g.inv(a)))
            return false;
        for (int b : h.members)
            if (!h.contains(g.mul(a, b)))
                return false;
    }
    return true;
}

Subgroup subgroup_closure(const FiniteGroup& g, std::vector<int> generators)
{
    std::set<int> members{g.identity};
    std::vector<int> frontier{g.identity};
    for (int x : generators)
        if (members.insert(x).second)
            frontier.push_back(x);
    while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        for (int y : std::vector<int>(members.begin(), members.end())) {
            for (int z : {g.mul(x, y), g.mul(y, x)})
                if (members.insert(z).second)
                    frontier.push_back(z);
        }
    }
    return Subgroup{std::vector<int>(members.begin(), members.end()), g.order};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g)
{
    // breadth-first closure: extend each known subgroup by one extra element;
    // exhaustive (and exponential in general) but exact at the target scale
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> triv{g.identity};
    seen.insert(triv);
    queue.push_back(triv);
    while (!queue.empty()) {
        std::vector<int> cur = queue.back();
        queue.pop_back();
        Subgroup base{cur, g.order};
        for (int x = 0; x < g.order; ++x) {
            if (base.contains(x))
                continue;
            std::vector<int> gens = cur;
            gens.push_back(x);
            Subgroup ext = subgroup_closure(g, gens);
            if (seen.insert(ext.members).second)
                queue.push_back(ext.members);
        }
    }
    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (const auto& m : seen)
        out.push_back(Subgroup{m, g.order});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.members.size() != b.members.size())
            return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

Coset left_coset_of(const FiniteGroup& g, const Subgroup& h, int x)
{
    std::vector<int> members;
    members.reserve(h.members.size());
    for (int m : h.members)
        members.push_back(g.mul(x, m));
    std::sort(members.begin(), members.end());
    return Coset{h, members.front(), std::move(members)};
}

std::vector<Coset> left_cosets(const FiniteGroup& g, const Subgroup& h)
{
    if (!is_subgroup(g, h))
        throw ValidationError("left_cosets: the given set is not a subgroup");
    std::vector<bool> seen(g.order, false);
    std::vector<Coset> out;
    for (int x = 0; x < g.order; ++x) {
        if (seen[x])
            continue;
        Coset c = left_coset_of(g, h, x);
        for (int m : c.members)
            seen[m] = true;
        out.push_back(std::move(c));
    }
    return out;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h)
{
    if (!is_subgroup(g, h))
        throw ValidationError("is_normal: the given set is not a subgroup");
    for (int x = 0; x < g.order; ++x) {
        int xi = g.inv(x);
        for (int m : h.members)
            if (!h.contains(g.mul(g.mul(x, m), xi)))
                return false;
    }
    return true;
}

FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& h)
{
    if (!is_normal(g, h))
        throw ValidationError("quotient_group: subgroup is not normal");
    std::vector<Coset> cosets = left_cosets(g, h);
    const int q = static_cast<int>(cosets.size());
    std::map<int, int> coset_of; // element -> coset index
    for (int i = 0; i < q; ++i)
        for (int m : cosets[i].members)
            coset_of[m] = i;
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    std::vector<std::string> names(q);
    for (int i = 0; i < q; ++i) {
        names[i] = "[" + g.names[cosets[i].representative] + "]";
        for (int j = 0; j < q; ++j)
            table[i][j] = coset_of[g.mul(cosets[i].representative, cosets[j].representative)];
    }
    return FiniteGroup{q, std::move(table), std::move(names), coset_of[g.identity]};
}

GroupAction make_action(FiniteGroup group, int ground_size, std::vector<std::vector<int>> perms)
{
    if (static_cast<int>(perms.size()) != group.order)
        throw ValidationError("action: one permutation per group element required");
    for (int g = 0; g < group.order; ++g) {
        if (static_cast<int>(perms[g].size()) != ground_size)
            throw ValidationError("action: permutation for " + group.names[g] +
                                  " has wrong length");
        std::vector<bool> seen(ground_size, false);
        for (int x : perms[g]) {
            if (x < 0 || x >= ground_size || seen[x])
                throw ValidationError("action: map for " + group.names[g] +
                                      " is not a permutation");
            seen[x] = true;
        }
    }
    for (int x = 0; x < ground_size; ++x)
        if (perms[group.identity][x] != x)
            throw ValidationError("action: identity does not act trivially");
    for (int g = 0; g < group.order; ++g)
        for (int h = 0; h < group.order; ++h) {
            int gh = group.mul(g, h);
            for (int x = 0; x < ground_size; ++x)
                if (perms[gh][x] != perms[g][perms[h][x]])
                    throw ValidationError("action: homomorphism law fails at (" + group.names[g] +
                                          "," + group.names[h] + ")");
        }
    return GroupAction{std::move(group), ground_size, std::move(perms)};
}

GroupAction trivial_action(const FiniteGroup& g, int ground_size)
{
    std::vector<int> id(ground_size);
    for (int i = 0; i < ground_size; ++i)
        id[i] = i;
    return GroupAction{g, ground_size, std::vector<std::vector<int>>(g.order, id)};
}

namespace {

std::map<std::vector<int>, int> index_by_members(const std::vector<Coset>& cosets)
{
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < static_cast<int>(cosets.size()); ++i)
        idx[cosets[i].members] = i;
    return idx;
}

std::vector<int> mapped_members(const FiniteGroup& g, const std::vector<int>& members,
                                int left, int right, bool conjugate)
{
    std::vector<int> out;
    out.reserve(members.size());
    for (int m : members)
        out.push_back(conjugate ? g.mul(g.mul(left, m), right) : g.mul(left, m));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

GroupAction shift_action(const FiniteGroup& g, const std::vector<Coset>& cosets)
{
    auto idx = index_by_members(cosets);
    std::vector<std::vector<int>> perms(g.order, std::vector<int>(cosets.size()));
    for (int a = 0; a < g.order; ++a)
        for (int i = 0; i < static_cast<int>(cosets.size()); ++i) {
            auto image = mapped_members(g, cosets[i].members, a, 0, false);
            auto it = idx.find(image);
            if (it == idx.end())
                throw ValidationError("shift_action: image of coset " + std::to_string(i) +
                                      " under " + g.names[a] + " is outside the target list");
            perms[a][i] = it->second;
        }
    return make_action(g, static_cast<int>(cosets.size()), std::move(perms));
}

GroupAction conjugation_action(const FiniteGroup& g, const std::vector<Subgroup>& targets)
{
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < static_cast<int>(targets.size()); ++i)
        idx[targets[i].members] = i;
    std::vector<std::vector<int>> perms(g.order, std::vector<int>(targets.size()));
    for (int a = 0; a < g.order; ++a) {
        int ai = g.inv(a);
        for (int i = 0; i < static_cast<int>(targets.size()); ++i) {
            auto image = mapped_members(g, targets[i].members, a, ai, true);
            auto it = idx.find(image);
            if (it == idx.end())
                throw ValidationError("conjugation_action: image of subgroup " +
                                      std::to_string(i) + " under " + g.names[a] +
                                      " is outside the target list");
            perms[a][i] = it->second;
        }
    }
    return make_action(g, static_cast<int>(targets.size()), std::move(perms));
}

GroupAction conjugation_action(const FiniteGroup& g, const std::vector<Coset>& targets)
{
    auto idx = index_by_members(targets);
    std::vector<std::vector<int>> perms(g.order, std::vector<int>(targets.size()));
    for (int a = 0; a < g.order; ++a) {
        int ai = g.inv(a);
        for (int i = 0; i < static_cast<int>(targets.size()); ++i) {
            auto image = mapped_members(g, targets[i].members, a, ai, true);
            auto it = idx.find(image);
            if (it == idx.end())
                throw ValidationError("conjugation_action: image of coset " + std::to_string(i) +
                                      " under " + g.names[a] + " is outside the target list");
            perms[a][i] = it->second;
        }
    }
    return make_action(g, static_cast<int>(targets.size()), std::move(perms));
}

std::vector<int> stabilizer(const GroupAction& a, int point)
{
    std::vector<int> out;
    for (int g = 0; g < a.group.order; ++g)
        if (a.apply(g, point) == point)
            out.push_back(g);
    return out;
}

} // namespace asphera
