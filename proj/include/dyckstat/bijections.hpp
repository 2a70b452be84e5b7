#pragma once

#include "dyckstat/composition.hpp"
#include "dyckstat/path.hpp"
#include "dyckstat/polyomino.hpp"

namespace dyck {

/// Paths with strictly increasing valley heights <-> all compositions.
/// Pyramids map to one-part compositions; otherwise the parts are the
/// pyramid sizes (each plus one) of the canonical decomposition around the
/// highest valley.
Composition wlt_to_composition(const DyckPath& path);
DyckPath wlt_from_composition(const Composition& comp);

/// Paths with strictly increasing peak heights <-> compositions whose i-th
/// part is at most i (first part 1 for nonempty paths).
Composition mlt_to_composition(const DyckPath& path);
DyckPath mlt_from_composition(const Composition& comp);

/// A path with one distinguished peak (index into its peak list).
struct MarkedPath {
    DyckPath path;
    int peak_index = 0;

    friend bool operator==(const MarkedPath&, const MarkedPath&) = default;
    friend auto operator<=>(const MarkedPath&, const MarkedPath&) = default;
};

struct PyramidInsertion {
    MarkedPath marked;
    int weight_delta; ///< target semilength minus input semilength; 0 flags no insertion
};

/// Inserts the pyramid u^(n-k) d^(n-k) at the apex of the distinguished
/// symmetric peak, k being the input semilength.  The same peak stays
/// distinguished; its weight grows by n-k.
PyramidInsertion eq8_insert(const MarkedPath& marked, int target_semilength);

/// Removes u^i d^i through the apex of the distinguished symmetric peak,
/// 1 <= i < weight.  Removing the full weight would erase the peak, so the
/// distinguished mark could not survive; that case is an error.
MarkedPath eq8_delete(const MarkedPath& marked, int i);

/// Delest-Viennot: nonempty path -> parallelogram polyomino with
/// semiperimeter n+1.  Column sizes are the peak heights; consecutive
/// columns overlap in (valley height + 1) rows.
ColumnPolyomino delest_viennot(const DyckPath& path);
DyckPath delest_viennot_inverse(const ColumnPolyomino& p);

/// Deutsch-Prodinger: path with weakly increasing valley heights ->
/// directed column-convex polyomino of area n; column i spans from the
/// (i-1)-st valley height to the i-th peak height.
ColumnPolyomino deutsch_prodinger(const DyckPath& path);
DyckPath deutsch_prodinger_inverse(const ColumnPolyomino& p);

} // namespace dyck
