use serde::Serialize;

use super::{RepError, Representation};
use crate::exactla::ExactMatrix;

/// A morphism of representations, one matrix `N(x) × M(x)` per object.
#[derive(Clone, Debug, PartialEq)]
pub struct NatTrans {
    pub components: Vec<ExactMatrix>,
}

impl NatTrans {
    /// Whether the squares `N(α)·φ_dom = φ_cod·M(α)` commute.
    pub fn is_natural(&self, m: &Representation, n: &Representation) -> bool {
        let c = m.category();
        self.components.len() == c.num_objects()
            && c.objects().all(|x| self.components[x.0].shape() == (n.dim(x), m.dim(x)))
            && c.morphisms().all(|a| {
                let (x, y) = (c.dom(a), c.cod(a));
                n.action(a) * &self.components[x.0] == &self.components[y.0] * m.action(a)
            })
    }

    /// Whether every component is invertible.
    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().all(|p| p.rows() == p.cols() && p.rank() == p.rows())
    }
}

/// `Hom_{kC}(M, N)`: the columns of `basis` are natural transformations with
/// components stacked object by object, each flattened row-major.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HomSpace {
    #[serde(skip)]
    pub basis: ExactMatrix,
    /// `(rows, cols, offset)` of each object's block
    pub blocks: Vec<(usize, usize, usize)>,
    pub dim: usize,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Natural transformation from a coefficient column on the basis.
    pub fn element(&self, coeffs: &ExactMatrix) -> NatTrans {
        let flat = &self.basis * coeffs;
        self.unflatten(&flat)
    }

    pub fn basis_element(&self, i: usize) -> NatTrans {
        self.unflatten(&self.basis.column(i))
    }

    fn unflatten(&self, flat: &ExactMatrix) -> NatTrans {
        let field = flat.field();
        let components = self
            .blocks
            .iter()
            .map(|&(r, c, off)| {
                let mut m = ExactMatrix::zeros(field, r, c);
                for i in 0..r {
                    for j in 0..c {
                        m.set(i, j, flat.get(off + i * c + j, 0)).unwrap();
                    }
                }
                m
            })
            .collect();
        NatTrans { components }
    }
}

/// Solves `N(α)·φ_x = φ_y·M(α)` for every non-identity `α: x → y`.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<HomSpace, RepError> {
    m.check_compatible(n)?;
    let c = m.category();
    let field = m.field();
    let mut blocks = Vec::with_capacity(c.num_objects());
    let mut off = 0;
    for x in c.objects() {
        blocks.push((n.dim(x), m.dim(x), off));
        off += n.dim(x) * m.dim(x);
    }
    let unknowns = off;
    let mut rows = Vec::new();
    for a in c.morphisms().filter(|&a| !c.is_identity(a)) {
        let (x, y) = (c.dom(a), c.cod(a));
        let (mx, ny) = (m.dim(x), n.dim(y));
        if mx == 0 || ny == 0 {
            continue;
        }
        // row-major vec: vec(A·X·B) = (A ⊗ Bᵀ)·vec(X)
        let left = n.action(a).kron(&ExactMatrix::identity(field, mx));
        let right = ExactMatrix::identity(field, ny).kron(&m.action(a).transpose());
        let mut eq = ExactMatrix::zeros(field, ny * mx, unknowns);
        if x == y {
            eq.set_block(0, blocks[x.0].2, &(&left - &right));
        } else {
            eq.set_block(0, blocks[x.0].2, &left);
            eq.set_block(0, blocks[y.0].2, &-&right);
        }
        rows.push(eq);
    }
    let system = ExactMatrix::vconcat(field, unknowns, &rows);
    let basis = system.kernel_basis();
    let dim = basis.cols();
    Ok(HomSpace { basis, blocks, dim })
}
