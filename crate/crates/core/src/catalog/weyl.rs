use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exactmath::IntPoly;
use crate::groups::{phi12_3, Family};

/// Coxeter-Dynkin data for one untwisted family, Bourbaki numbering.
#[derive(Clone, Debug)]
pub struct WeylData {
    pub family: Family,
    pub degrees: Vec<usize>,
    /// `(a, b, m)`: nodes `a` and `b` joined by an `m`-fold bond.
    pub edges: Vec<(usize, usize, usize)>,
}

/// One connected component of the Levi subdiagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeviType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    G2,
}

impl LeviType {
    pub fn degrees(&self) -> Vec<usize> {
        match *self {
            LeviType::A(n) => (2..=n + 1).collect(),
            LeviType::B(n) => (1..=n).map(|i| 2 * i).collect(),
            LeviType::D(n) => {
                let mut d: Vec<usize> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                d
            }
            LeviType::E(6) => vec![2, 5, 6, 8, 9, 12],
            LeviType::E(7) => vec![2, 6, 8, 10, 12, 14, 18],
            LeviType::E(n) => panic!("no Levi component of type E{n}"),
            LeviType::G2 => vec![2, 6],
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            LeviType::A(n) | LeviType::B(n) | LeviType::D(n) | LeviType::E(n) => n,
            LeviType::G2 => 2,
        }
    }
}

impl std::fmt::Display for LeviType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LeviType::A(n) => write!(f, "A{n}"),
            LeviType::B(n) => write!(f, "B{n}"),
            LeviType::D(n) => write!(f, "D{n}"),
            LeviType::E(n) => write!(f, "E{n}"),
            LeviType::G2 => write!(f, "G2"),
        }
    }
}

fn chain(nodes: &[usize]) -> Vec<(usize, usize, usize)> {
    nodes.windows(2).map(|w| (w[0], w[1], 1)).collect()
}

impl WeylData {
    pub fn of(family: Family) -> Option<WeylData> {
        let (degrees, edges) = match family {
            Family::G2 => (vec![2, 6], vec![(1, 2, 3)]),
            Family::F4 => (vec![2, 6, 8, 12], vec![(1, 2, 1), (2, 3, 2), (3, 4, 1)]),
            Family::E6 => (vec![2, 5, 6, 8, 9, 12], {
                let mut e = chain(&[1, 3, 4, 5, 6]);
                e.push((2, 4, 1));
                e
            }),
            Family::E7 => (vec![2, 6, 8, 10, 12, 14, 18], {
                let mut e = chain(&[1, 3, 4, 5, 6, 7]);
                e.push((2, 4, 1));
                e
            }),
            Family::E8 => (vec![2, 8, 12, 14, 18, 20, 24, 30], {
                let mut e = chain(&[1, 3, 4, 5, 6, 7, 8]);
                e.push((2, 4, 1));
                e
            }),
            _ => return None,
        };
        Some(WeylData { family, degrees, edges })
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn weyl_order(&self) -> u128 {
        self.degrees.iter().map(|&d| d as u128).product()
    }

    fn neighbours(&self, n: usize, alive: &BTreeSet<usize>) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .filter_map(|&(a, b, m)| {
                if a == n && alive.contains(&b) {
                    Some((b, m))
                } else if b == n && alive.contains(&a) {
                    Some((a, m))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Components of the diagram with `node` deleted.
    pub fn levi(&self, node: usize) -> Result<Vec<LeviType>> {
        if node == 0 || node > self.rank() {
            return Err(Error::domain(format!("{} has no node {node}", self.family)));
        }
        let mut alive: BTreeSet<usize> = (1..=self.rank()).filter(|&n| n != node).collect();
        let mut out = Vec::new();
        while let Some(&start) = alive.iter().next() {
            let mut comp = BTreeSet::from([start]);
            let mut stack = vec![start];
            while let Some(n) = stack.pop() {
                for (m, _) in self.neighbours(n, &alive) {
                    if comp.insert(m) {
                        stack.push(m);
                    }
                }
            }
            out.push(self.classify(&comp));
            alive = alive.difference(&comp).copied().collect();
        }
        Ok(out)
    }

    fn classify(&self, comp: &BTreeSet<usize>) -> LeviType {
        let size = comp.len();
        let inner: Vec<&(usize, usize, usize)> =
            self.edges.iter().filter(|(a, b, _)| comp.contains(a) && comp.contains(b)).collect();
        match inner.iter().map(|e| e.2).max().unwrap_or(1) {
            3 => return LeviType::G2,
            2 => return LeviType::B(size),
            _ => {}
        }
        let branch = comp.iter().find(|&&n| self.neighbours(n, comp).len() == 3);
        let Some(&branch) = branch else {
            return LeviType::A(size);
        };
        let mut arms: Vec<usize> = self
            .neighbours(branch, comp)
            .into_iter()
            .map(|(start, _)| {
                let mut len = 1;
                let (mut prev, mut cur) = (branch, start);
                loop {
                    let next: Vec<usize> =
                        self.neighbours(cur, comp).into_iter().map(|(n, _)| n).filter(|&n| n != prev).collect();
                    match next.first() {
                        Some(&n) => {
                            prev = cur;
                            cur = n;
                            len += 1;
                        }
                        None => break len,
                    }
                }
            })
            .collect();
        arms.sort();
        match arms.as_slice() {
            [1, 1, _] => LeviType::D(size),
            _ => LeviType::E(size),
        }
    }
}

fn cyclotomic_product(degrees: &[usize]) -> IntPoly {
    IntPoly::product(degrees.iter().map(|&d| IntPoly::x_pow_minus_one(d)))
}

/// Index of the maximal parabolic subgroup `P_node`.
///
/// Untwisted families use Weyl degrees. Twisted families accept the node
/// labels listed by [`parabolic_nodes`].
pub fn parabolic_index(family: Family, node: usize) -> Result<IntPoly> {
    if let Some(w) = WeylData::of(family) {
        let levi = w.levi(node)?;
        let mut levi_degrees: Vec<usize> = levi.iter().flat_map(LeviType::degrees).collect();
        levi_degrees.push(1);
        let num = cyclotomic_product(&w.degrees);
        let den = cyclotomic_product(&levi_degrees);
        return num
            .div_exact(&den)
            .map_err(|_| Error::catalog(format!("{family}:P{node}"), "Levi quotient is inexact"));
    }
    twisted_index(family, node)
}

/// Node labels with a maximal parabolic, one per orbit of the twisting map.
pub fn parabolic_nodes(family: Family) -> Vec<usize> {
    match family {
        Family::B2Twisted | Family::G2Twisted => vec![1],
        Family::D4Triality | Family::F4Twisted => vec![1, 2],
        // labelled by the smaller node of each orbit on the E6 diagram
        Family::E6Twisted => vec![1, 2, 3, 4],
        _ => (1..=WeylData::of(family).map_or(0, |w| w.rank())).collect(),
    }
}

fn twisted_index(family: Family, node: usize) -> Result<IntPoly> {
    let m = IntPoly::x_pow_minus_one;
    let pl = IntPoly::x_pow_plus_one;
    let unknown = || Error::domain(format!("{family} has no parabolic labelled {node}"));
    let idx = match (family, node) {
        (Family::B2Twisted, 1) => pl(2),
        (Family::G2Twisted, 1) => pl(3),
        (Family::D4Triality, 1) => &phi12_3() * &pl(1),
        (Family::D4Triality, 2) => &phi12_3() * &pl(3),
        (Family::F4Twisted, 1) => IntPoly::product([pl(1), pl(3), pl(6)]),
        (Family::F4Twisted, 2) => IntPoly::product([pl(2), pl(3), pl(6)]),
        (Family::E6Twisted, _) => {
            let levi = match node {
                1 => vec![m(2), m(2), m(4), m(6), pl(4)],
                2 => vec![m(1), m(2), pl(3), m(4), pl(5), m(6)],
                3 => vec![m(2), m(4), m(2), m(3)],
                4 => vec![m(1), m(2), m(4), m(6)],
                _ => return Err(unknown()),
            };
            let full = IntPoly::product([m(2), pl(5), m(6), m(8), pl(9), m(12)]);
            full.div_exact(&IntPoly::product(levi))
                .map_err(|_| Error::catalog(format!("{family}:P{node}"), "Levi quotient is inexact"))?
        }
        _ => return Err(unknown()),
    };
    Ok(idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{p_part, prime_power_stream, PowerConstraint};
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Zero};

    #[test]
    fn weyl_orders() {
        let orders: Vec<u128> = [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8]
            .into_iter()
            .map(|f| WeylData::of(f).unwrap().weyl_order())
            .collect();
        assert_eq!(orders, vec![12, 1152, 51840, 2903040, 696729600]);
    }

    #[test]
    fn levi_types() {
        let e6 = WeylData::of(Family::E6).unwrap();
        assert_eq!(e6.levi(1).unwrap(), vec![LeviType::D(5)]);
        assert_eq!(e6.levi(2).unwrap(), vec![LeviType::A(5)]);
        assert_eq!(e6.levi(3).unwrap(), vec![LeviType::A(1), LeviType::A(4)]);
        assert_eq!(e6.levi(4).unwrap(), vec![LeviType::A(2), LeviType::A(1), LeviType::A(2)]);
        let e8 = WeylData::of(Family::E8).unwrap();
        assert_eq!(e8.levi(8).unwrap(), vec![LeviType::E(7)]);
        assert_eq!(e8.levi(1).unwrap(), vec![LeviType::D(7)]);
        let f4 = WeylData::of(Family::F4).unwrap();
        assert_eq!(f4.levi(1).unwrap(), vec![LeviType::B(3)]);
        assert_eq!(f4.levi(2).unwrap(), vec![LeviType::A(1), LeviType::A(2)]);
        assert_eq!(WeylData::of(Family::G2).unwrap().levi(2).unwrap(), vec![LeviType::A(1)]);
        assert!(e6.levi(7).is_err());
    }

    #[test]
    fn levi_ranks_sum() {
        for fam in [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8] {
            let w = WeylData::of(fam).unwrap();
            for node in 1..=w.rank() {
                let total: usize = w.levi(node).unwrap().iter().map(LeviType::rank).sum();
                assert_eq!(total, w.rank() - 1);
            }
        }
    }

    #[test]
    fn g2_index() {
        let expect = IntPoly::from_i64(&[1, 1, 1, 1, 1, 1]);
        assert_eq!(parabolic_index(Family::G2, 1).unwrap(), expect);
        assert_eq!(parabolic_index(Family::G2, 2).unwrap(), expect);
    }

    #[test]
    fn twisted_indices_divide_order() {
        for fam in [Family::B2Twisted, Family::G2Twisted, Family::D4Triality, Family::F4Twisted, Family::E6Twisted] {
            for node in parabolic_nodes(fam) {
                let idx = parabolic_index(fam, node).unwrap();
                assert!(idx.divides(&fam.order_poly()), "{fam}:P{node}");
                assert!(idx.coeffs().iter().all(|c| *c >= BigInt::zero()));
                assert!(idx.coeff(0).is_one());
            }
        }
        assert!(parabolic_index(Family::D4Triality, 3).is_err());
    }

    #[test]
    fn index_values() {
        let mut exceeds = Vec::new();
        for fam in Family::ALL {
            for node in parabolic_nodes(fam) {
                let idx = parabolic_index(fam, node).unwrap();
                for q in prime_power_stream(PowerConstraint::All, 100) {
                    if !fam.valid_q(&q) {
                        continue;
                    }
                    let v = idx.eval(&q.q_big());
                    assert!(fam.universal_order(&q).is_multiple_of(&v), "{fam}:P{node} q={}", q.q);
                    let part = p_part(&(&v - 1), &q.p_big()).unwrap();
                    if part > BigInt::from(2 * q.q) && !exceeds.contains(&(fam, node)) {
                        exceeds.push((fam, node));
                    }
                }
            }
        }
        // lowest term of v - 1 is q^2 or q^3 for these nodes
        let expected = [
            (Family::B2Twisted, 1),
            (Family::G2Twisted, 1),
            (Family::D4Triality, 2),
            (Family::F4Twisted, 2),
            (Family::E6Twisted, 1),
            (Family::E6Twisted, 3),
        ];
        assert_eq!(exceeds, expected);
    }
}
