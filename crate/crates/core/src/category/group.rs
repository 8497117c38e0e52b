/// Finite abelian group `Z/n1 x Z/n2 x ...`. Elements are indexed in mixed
/// radix with the first factor least significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u64>) -> Self {
        let factors: Vec<u64> = factors.into_iter().filter(|&n| n != 1).collect();
        assert!(factors.iter().all(|&n| n > 0), "cyclic factors must be positive");
        AbelianGroup { factors }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn size(&self) -> usize {
        self.factors.iter().product::<u64>() as usize
    }

    pub fn coords(&self, mut index: usize) -> Vec<u64> {
        self.factors
            .iter()
            .map(|&n| {
                let c = index as u64 % n;
                index /= n as usize;
                c
            })
            .collect()
    }

    /// Index of the element with the given coordinates (taken modulo each factor).
    pub fn index(&self, coords: &[i64]) -> usize {
        let mut idx = 0usize;
        let mut stride = 1usize;
        for (&n, &c) in self.factors.iter().zip(coords) {
            idx += c.rem_euclid(n as i64) as usize * stride;
            stride *= n as usize;
        }
        idx
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.coords(a), self.coords(b));
        let sum: Vec<i64> = ca.iter().zip(&cb).map(|(x, y)| (x + y) as i64).collect();
        self.index(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let c: Vec<i64> = self.coords(a).iter().map(|&x| -(x as i64)).collect();
        self.index(&c)
    }

    /// Multiple `k * a`.
    pub fn mul(&self, k: i64, a: usize) -> usize {
        let c: Vec<i64> = self.coords(a).iter().map(|&x| k * x as i64).collect();
        self.index(&c)
    }

    /// Default label: coordinates joined by commas.
    pub fn default_label(&self, index: usize) -> String {
        if self.factors.is_empty() {
            return "0".into();
        }
        self.coords(index).iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    }

    /// Direct product, factors of `self` first.
    pub fn product(&self, other: &Self) -> Self {
        AbelianGroup { factors: self.factors.iter().chain(&other.factors).copied().collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_radix() {
        let g = AbelianGroup::new(vec![2, 3]);
        assert_eq!(g.size(), 6);
        assert_eq!(g.coords(5), vec![1, 2]);
        assert_eq!(g.index(&[1, 2]), 5);
        assert_eq!(g.add(5, 5), g.index(&[0, 1]));
        assert_eq!(g.neg(1), 1);
        assert_eq!(g.add(g.neg(4), 4), 0);
        assert_eq!(g.default_label(3), "1,1");
        assert_eq!(AbelianGroup::new(vec![1]).size(), 1);
    }
}
