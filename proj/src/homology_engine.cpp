#include "asphera/homology_engine.hpp"

#include "asphera/limits.hpp"

namespace asphera {

namespace {

// Cycle lattice Z = { x in F_k : out_map(x) lies in the relation lattice of
// degree k-1 }: kernel of [out_map | rel_out] projected to the x block.
IntMatrix cycle_generators(const SparseMat& out_map, const SparseMat& rel_out)
{
    const int fk = out_map.cols();
    const int target = out_map.rows();
    if (target == 0)
        return IntMatrix::identity(fk);
    guard_dense(target, fk + rel_out.cols(), "homology");
    IntMatrix aug(target, fk + rel_out.cols());
    for (int j = 0; j < fk; ++j)
        for (const auto& [i, v] : out_map.col(j))
            aug(i, j) = v;
    for (int j = 0; j < rel_out.cols(); ++j)
        for (const auto& [i, v] : rel_out.col(j))
            aug(i, fk + j) = v;
    IntMatrix ker = kernel_basis(aug);
    IntMatrix gens(fk, ker.cols());
    for (int j = 0; j < ker.cols(); ++j)
        for (int i = 0; i < fk; ++i)
            gens(i, j) = ker(i, j);
    return gens;
}

} // namespace

HomologyBasis presented_homology(const SparseMat& out_map, const SparseMat& in_map,
                                 const SparseMat& rel_here, const SparseMat& rel_out)
{
    const int fk = out_map.cols();
    internal_check(in_map.rows() == fk || in_map.cols() == 0,
                   "presented_homology: in_map target mismatch");
    internal_check(rel_here.rows() == fk || rel_here.cols() == 0,
                   "presented_homology: relation block mismatch");

    HomologyBasis hb;
    hb.ambient = fk;
    if (fk == 0) {
        hb.group = AbelianGroup::zero();
        return hb;
    }

    IntMatrix zgens = cycle_generators(out_map, rel_out);
    LatticeSolver cycles(zgens);
    const int t = cycles.rank();
    hb.cycle_rank = t;
    hb.u_cycles = cycles.transform();
    hb.d_cycles = cycles.diagonal();
    if (t == 0) {
        hb.group = AbelianGroup::zero();
        hb.ux = IntMatrix::identity(0);
        return hb;
    }

    // boundaries-and-relations in cycle-basis coordinates
    const int nb = in_map.cols() + rel_here.cols();
    guard_dense(t, std::max(nb, 1), "homology");
    IntMatrix x(t, nb);
    auto put_column = [&](const std::map<int, Int>& sparse_col, int target_col) {
        std::vector<Int> v(fk, Int(0));
        for (const auto& [i, val] : sparse_col)
            v[i] = val;
        auto coords = cycles.coordinates(v);
        internal_check(coords.has_value(),
                       "presented_homology: boundary image escapes the cycle lattice");
        for (int i = 0; i < t; ++i)
            x(i, target_col) = (*coords)[i];
    };
    for (int j = 0; j < in_map.cols(); ++j)
        put_column(in_map.col(j), j);
    for (int j = 0; j < rel_here.cols(); ++j)
        put_column(rel_here.col(j), in_map.cols() + j);

    SnfTransforms xt = snf_transforms(x, true, true, false, false);
    hb.ux = std::move(*xt.u);
    const IntMatrix& uxinv = *xt.uinv;

    hb.slot_orders.assign(t, Int(0));
    for (int i = 0; i < xt.rank; ++i)
        hb.slot_orders[i] = xt.s(i, i);

    const IntMatrix& kb = cycles.basis();
    auto slot_generator = [&](int slot) {
        std::vector<Int> chain(fk, Int(0));
        for (int i = 0; i < fk; ++i) {
            Int acc = 0;
            for (int r = 0; r < t; ++r) {
                const Int& c = uxinv(r, slot);
                if (c != 0)
                    acc += kb(i, r) * c;
            }
            chain[i] = acc;
        }
        return chain;
    };

    std::vector<Int> torsion;
    for (int i = 0; i < t; ++i) {
        if (hb.slot_orders[i] == 0) {
            hb.free_slots.push_back(i);
            hb.free_generators.push_back(slot_generator(i));
        } else if (hb.slot_orders[i] >= 2) {
            hb.torsion_slots.push_back(i);
            hb.torsion_generators.push_back(slot_generator(i));
            hb.torsion_orders.push_back(hb.slot_orders[i]);
            torsion.push_back(hb.slot_orders[i]);
        }
    }
    hb.group = AbelianGroup(static_cast<int>(hb.free_slots.size()), std::move(torsion));
    return hb;
}

std::vector<Int> HomologyBasis::class_coordinates(const std::vector<Int>& cycle) const
{
    internal_check(static_cast<int>(cycle.size()) == ambient,
                   "class_coordinates: size mismatch");
    // coordinates in the cycle lattice basis: y_i = (U v)_i / d_i
    std::vector<Int> w(ambient, Int(0));
    for (int j = 0; j < ambient; ++j) {
        if (cycle[j] == 0)
            continue;
        for (int i = 0; i < ambient; ++i) {
            const Int& uij = u_cycles(i, j);
            if (uij != 0)
                w[i] += uij * cycle[j];
        }
    }
    std::vector<Int> y(cycle_rank);
    for (int i = 0; i < cycle_rank; ++i) {
        internal_check(w[i] % d_cycles[i] == 0, "class_coordinates: not a cycle");
        y[i] = w[i] / d_cycles[i];
    }
    for (int i = cycle_rank; i < ambient; ++i)
        internal_check(w[i] == 0, "class_coordinates: not a cycle");

    std::vector<Int> z = ux.apply(y);
    std::vector<Int> out;
    out.reserve(torsion_slots.size() + free_slots.size());
    for (int slot : torsion_slots) {
        const Int& o = slot_orders[slot];
        Int r = z[slot] % o;
        if (r < 0)
            r += o;
        out.push_back(r);
    }
    for (int slot : free_slots)
        out.push_back(z[slot]);
    return out;
}

} // namespace asphera
