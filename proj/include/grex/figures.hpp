#pragma once

#include <stdexcept>
#include <vector>

#include "comb.hpp"
#include "seed.hpp"

namespace grex {

// The integer vertex numberings used by the published mutation sequences for
// G(3,6), G(3,7), G(3,8), given as the Pluecker labels of the numbered
// vertices (aux index 1..N maps to entry 0..N-1).
inline std::vector<KSubset> figure_vertex_labels(int n) {
    switch (n) {
        case 6:
            return {KSubset(6, {2, 3, 6}), KSubset(6, {3, 4, 6}), KSubset(6, {1, 3, 6}), KSubset(6, {3, 5, 6})};
        case 7:
            // the published drawing of this cluster is rotated by one column
            // relative to the correspondence tables; these labels are the
            // table-convention form (verified: the drawn quiver matches and
            // the mutation sequence below lands on the tables' base cluster)
            return {KSubset(7, {2, 4, 5}), KSubset(7, {1, 2, 5}), KSubset(7, {1, 5, 7}),
                    KSubset(7, {1, 4, 5}), KSubset(7, {1, 5, 6}), KSubset(7, {1, 2, 4})};
        case 8:
            return {KSubset(8, {1, 4, 5}), KSubset(8, {1, 3, 4}), KSubset(8, {1, 4, 8}), KSubset(8, {1, 5, 8}),
                    KSubset(8, {5, 7, 8}), KSubset(8, {5, 6, 8}), KSubset(8, {4, 5, 8}), KSubset(8, {1, 2, 4})};
        default:
            throw std::invalid_argument("no figure numbering for n=" + std::to_string(n));
    }
}

inline std::vector<int> figure_mutation_sequence(int n) {
    switch (n) {
        case 6:
            return {4, 2, 4, 1};
        case 7:
            return {2, 4, 3, 5, 6, 5, 1};
        case 8:
            return {1, 3, 7, 6, 5, 2, 4, 3, 8, 7, 6, 8};
        default:
            throw std::invalid_argument("no figure sequence for n=" + std::to_string(n));
    }
}

// Locates the seed with the given cluster inside a closed exploration and
// reports it together with the numbering vector (aux index -> column), so the
// published sequences can be replayed on it.
inline std::pair<Seed, std::vector<int>> locate_figure_seed(const ExchangeGraph& g, int n) {
    auto labels = figure_vertex_labels(n);
    Seed probe = g.seeds.at(0);
    std::vector<VarId> want;
    for (auto& L : labels) want.push_back(pluecker_var(L));
    {
        Seed tmp = probe;
        tmp.cluster = want;
        auto it = g.index.find(cluster_key(tmp));
        if (it == g.index.end()) throw std::logic_error("figure cluster not found in exploration");
        probe = g.seeds.at(it->second);
    }
    std::vector<int> numbering;
    for (VarId v : want) {
        int pos = -1;
        for (int i = 0; i < probe.rank(); ++i)
            if (probe.cluster[i] == v) pos = i;
        if (pos < 0) throw std::logic_error("figure label missing from located seed");
        numbering.push_back(pos);
    }
    return {probe, numbering};
}

}  // namespace grex
