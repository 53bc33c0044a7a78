"""Independent oracles for cross-checking the production code paths.

The dimension of the cone-wise polynomial space is recomputed here from
scratch: polynomials live in lattice-adapted span coordinates obtained
by integer normal form (not ray coordinates), the face-agreement
constraints are assembled as one dense matrix through restrict_sym, and
the kernel dimension comes from a dense reduced-row-echelon kernel.
"""

from toricweights import linalg, restrict_sym
from toricweights.lattices import apply_matrix, span_saturation_basis
from toricweights.graded import sym_dim


def _span_coords_data(fan, cone):
    vectors = fan.ray_vectors(cone)
    if not vectors:
        return [], None, 0
    basis, tinv, r = span_saturation_basis(vectors, fan.rank)
    return basis, tinv, r


def pp_dim_bruteforce(fan, degree):
    """Kernel dimension of the full face-agreement linear system."""
    maximal = fan.maximal_cones
    data = {c.rays: _span_coords_data(fan, c) for c in fan.cones}
    block_dim = {c.rays: sym_dim(data[c.rays][2], degree) for c in maximal}
    offsets = {}
    total = 0
    for c in maximal:
        offsets[c.rays] = total
        total += block_dim[c.rays]
    rows = []
    for a in range(len(maximal)):
        for b in range(a + 1, len(maximal)):
            ca, cb = maximal[a], maximal[b]
            common = tuple(sorted(set(ca.rays) & set(cb.rays)))
            face = fan.cone_by_rays(common)
            f_basis, _, f_rank = data[face.rays]
            target = sym_dim(f_rank, degree)
            if target == 0 and degree > 0:
                continue
            sub_maps = []
            for cone in (ca, cb):
                _, tinv, d = data[cone.rays]
                coords = [apply_matrix(v, tinv)[:d] for v in f_basis]
                substitution = [[coords[j][i] for j in range(f_rank)]
                                for i in range(d)]
                sub_maps.append(restrict_sym(d, degree, substitution))
            ra, rb = sub_maps
            for t in range(target):
                row = [0] * total
                for j in range(ra.cols):
                    row[offsets[ca.rays] + j] = ra.entries[t][j]
                for j in range(rb.cols):
                    row[offsets[cb.rays] + j] -= rb.entries[t][j]
                rows.append(row)
    if not rows:
        return total
    return len(linalg.nullspace(rows, total))


def chain_euler_check(dims, homologies):
    """Alternating sums of space and homology dimensions must agree."""
    lhs = sum((-1) ** i * d for i, d in enumerate(dims))
    rhs = sum((-1) ** i * h for i, h in enumerate(homologies))
    return lhs == rhs
