use std::cmp::Ordering;

use crate::poly::grevlex_cmp;

/// Monomial orders supported by the Gröbner engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// Variables `[0, split)` form the eliminated block: compared first by
    /// grevlex on that block, ties broken by grevlex on the rest.
    BlockElimination {
        split: usize,
    },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => grevlex_cmp(a, b),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::BlockElimination { split } => {
                grevlex_cmp(&a[..split], &b[..split]).then_with(|| grevlex_cmp(&a[split..], &b[split..]))
            }
        }
    }

    /// Whether the order is degree-compatible (needed for closure).
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(n: usize) -> impl Strategy<Value = Vec<u32>> {
        proptest::collection::vec(0u32..4, n)
    }

    fn orders() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::GrevLex),
            Just(MonomialOrder::Lex),
            (0usize..=4).prop_map(|split| MonomialOrder::BlockElimination { split }),
        ]
    }

    proptest! {
        #[test]
        fn orders_are_total_and_multiplicative(o in orders(), a in mono(4), b in mono(4), c in mono(4)) {
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            let ac: Vec<u32> = a.iter().zip(&c).map(|(x, y)| x + y).collect();
            let bc: Vec<u32> = b.iter().zip(&c).map(|(x, y)| x + y).collect();
            prop_assert_eq!(o.cmp(&ac, &bc), ab);
            // 1 is the smallest monomial
            prop_assert_ne!(o.cmp(&[0, 0, 0, 0], &a), Ordering::Greater);
        }

        #[test]
        fn orders_are_transitive(o in orders(), a in mono(4), b in mono(4), c in mono(4)) {
            if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
            }
        }
    }

    #[test]
    fn block_order_eliminates() {
        let o = MonomialOrder::BlockElimination { split: 1 };
        // x0 beats any power of x1
        assert_eq!(o.cmp(&[1, 0], &[0, 9]), Ordering::Greater);
    }
}
