use std::sync::Arc;

use super::PermGroup;

/// Left regular representation: `g` acts on the basis `e_h` by `e_h -> e_{gh}`.
///
/// Stored as permutations of the basis under the group's element ordering;
/// [`RegularRep::matrix`] expands to the 0/1 matrix with a 1 at
/// `(row = index(g*h), col = index(h))`.
#[derive(Clone, Debug)]
pub struct RegularRep {
    group: Arc<PermGroup>,
    actions: Vec<Vec<usize>>,
}

impl RegularRep {
    pub fn new(group: Arc<PermGroup>) -> Self {
        let n = group.order();
        let actions = (0..n)
            .map(|g| (0..n).map(|h| group.mul(g, h)).collect())
            .collect();
        RegularRep { group, actions }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn dimension(&self) -> usize {
        self.group.order()
    }

    /// Column `col` of `rep(g)` has its single 1 in this row.
    #[inline]
    pub fn row_of(&self, g: usize, col: usize) -> usize {
        self.actions[g][col]
    }

    pub fn matrix(&self, g: usize) -> Vec<Vec<u8>> {
        let n = self.dimension();
        let mut m = vec![vec![0u8; n]; n];
        for col in 0..n {
            m[self.row_of(g, col)][col] = 1;
        }
        m
    }
}

/// Convenience constructor matching the free-function style of the rest of the API.
pub fn regular_rep(group: Arc<PermGroup>) -> RegularRep {
    RegularRep::new(group)
}
