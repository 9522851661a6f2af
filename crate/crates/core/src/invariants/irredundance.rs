use super::{mask_to_vec, Param, UGraph};
use crate::error::{Error, Result};

struct Irr {
    n: usize,
    closed: Vec<u64>,
}

impl Irr {
    fn is_irredundant(&self, set: u64) -> bool {
        let mut rest = set;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let others = mask_to_vec(set & !(1 << u))
                .into_iter()
                .fold(0u64, |acc, v| acc | self.closed[v]);
            if self.closed[u] & !others == 0 {
                return false;
            }
        }
        true
    }

    fn is_maximal(&self, set: u64) -> bool {
        (0..self.n)
            .filter(|&x| set >> x & 1 == 0)
            .all(|x| !self.is_irredundant(set | 1 << x))
    }

    /// Private neighbourhoods only shrink as a set grows, so a branch whose
    /// partial set is already redundant is dropped.
    fn dfs(&self, start: usize, picks: usize, chosen: u64) -> Option<u64> {
        if picks == 0 {
            return self.is_maximal(chosen).then_some(chosen);
        }
        for i in start..=self.n - picks {
            let next = chosen | 1 << i;
            if !self.is_irredundant(next) {
                continue;
            }
            if let Some(found) = self.dfs(i + 1, picks - 1, next) {
                return Some(found);
            }
        }
        None
    }
}

/// `ir(G)`: the smallest maximal irredundant set, lexicographically least
/// among those of minimum size.
pub fn irredundance_number(g: &UGraph, exact_cap: usize) -> Result<Param> {
    let n = g.n();
    if n > exact_cap.min(64) {
        return Err(Error::ExactCapExceeded { n, cap: exact_cap });
    }
    if n == 0 {
        return Ok(Param::exact(Vec::new()));
    }
    let open = g.open_masks().expect("n <= 64");
    let irr = Irr {
        n,
        closed: open.iter().enumerate().map(|(v, &m)| m | 1 << v).collect(),
    };
    for k in 1..=n {
        if let Some(found) = irr.dfs(0, k, 0) {
            return Ok(Param::exact(mask_to_vec(found)));
        }
    }
    Err(Error::Internal("every graph has a maximal irredundant set".into()))
}

#[cfg(test)]
mod tests {
    use super::super::test_graphs::*;
    use super::*;

    fn ir(g: &UGraph) -> usize {
        irredundance_number(g, 26).unwrap().value.unwrap()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(ir(&k2()), 1);
        assert_eq!(ir(&star(4)), 1);
        assert_eq!(irredundance_number(&star(4), 26).unwrap().witness, vec![0]);
        assert_eq!(ir(&UGraph::empty(3)), 3);
    }

    #[test]
    fn z12_is_at_most_gamma() {
        assert_eq!(ir(&ag_z12()), 2);
    }

    #[test]
    fn cap() {
        assert!(matches!(
            irredundance_number(&path(30), 26),
            Err(Error::ExactCapExceeded { n: 30, cap: 26 })
        ));
    }
}
