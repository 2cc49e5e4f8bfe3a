use serde::Serialize;

use super::{FiniteCategory, ObjId};

/// Isomorphism classes, the order between them, and the chain length `ℓ(C)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderAnalysis {
    /// Classes numbered by their first object in declaration order.
    pub iso_classes: Vec<Vec<ObjId>>,
    pub class_of: Vec<usize>,
    /// `(a, b)` when some morphism goes from class `a` to class `b != a`.
    pub class_dag: Vec<(usize, usize)>,
    pub chain_length: usize,
    /// `preorder[x][y]` iff `Hom(x, y)` is nonempty.
    pub preorder: Vec<Vec<bool>>,
}

impl OrderAnalysis {
    pub fn leq(&self, x: ObjId, y: ObjId) -> bool {
        self.preorder[x.0][y.0]
    }

    pub fn isomorphic(&self, x: ObjId, y: ObjId) -> bool {
        self.class_of[x.0] == self.class_of[y.0]
    }

    pub fn class(&self, x: ObjId) -> &[ObjId] {
        &self.iso_classes[self.class_of[x.0]]
    }

    /// The first-declared object of `x`'s class.
    pub fn representative(&self, x: ObjId) -> ObjId {
        self.class(x)[0]
    }
}

pub fn analyze_order(c: &FiniteCategory) -> OrderAnalysis {
    c.order().clone()
}

pub(super) fn compute(n: usize, nonempty: &[bool]) -> OrderAnalysis {
    let preorder: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| nonempty[x * n + y]).collect()).collect();
    // Hom-nonemptiness is transitive already, so strongly connected
    // components are just mutual reachability.
    let mut class_of = vec![usize::MAX; n];
    let mut iso_classes: Vec<Vec<ObjId>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let k = iso_classes.len();
        let members: Vec<ObjId> = (x..n).filter(|&y| preorder[x][y] && preorder[y][x]).map(ObjId).collect();
        for y in &members {
            class_of[y.0] = k;
        }
        iso_classes.push(members);
    }
    let k = iso_classes.len();
    let mut edge = vec![vec![false; k]; k];
    for x in 0..n {
        for y in 0..n {
            if preorder[x][y] && class_of[x] != class_of[y] {
                edge[class_of[x]][class_of[y]] = true;
            }
        }
    }
    let class_dag: Vec<(usize, usize)> = (0..k)
        .flat_map(|a| (0..k).map(move |b| (a, b)))
        .filter(|&(a, b)| edge[a][b])
        .collect();

    // longest path by memoised DFS over the (acyclic) class graph
    fn longest(a: usize, edge: &[Vec<bool>], memo: &mut [Option<usize>]) -> usize {
        if let Some(v) = memo[a] {
            return v;
        }
        let best = (0..edge.len())
            .filter(|&b| edge[a][b])
            .map(|b| 1 + longest(b, edge, memo))
            .max()
            .unwrap_or(0);
        memo[a] = Some(best);
        best
    }
    let mut memo = vec![None; k];
    let chain_length = (0..k).map(|a| longest(a, &edge, &mut memo)).max().unwrap_or(0);

    OrderAnalysis { iso_classes, class_of, class_dag, chain_length, preorder }
}
